import pytest

from clustermorph.cluster import (
    ClusterMorphism, PartialClusterTiltingSet, compatible, compose, completions, enumerate_tilting_sets,
    morphisms, mutate, sigma, sigma_inverse,
)
from clustermorph.errors import ConsistencyError
from clustermorph.modcat import ClusterObject, WideSubcat, cluster_objects, enumerate_wide_subcats
from clustermorph.quiver import A1xA1, A2, A3, B2

from oracles import brute_tilting_sets, composition_failures, exchange_failures, sigma_property_failures

M = ClusterObject.module
S = ClusterObject.shift
A2F = WideSubcat.full(A2)
A3F = WideSubcat.full(A3)
P1, P2, S2 = (1, 0), (1, 1), (0, 1)


def test_compatibility_examples():
    assert compatible(A2F, M(P2), M(S2))
    assert not compatible(A2F, S(P1), M(P2))
    assert compatible(A2F, S(P1), S(P2))
    assert compatible(A2F, M(S2), S(P1))


def test_a2_clusters():
    sets = {frozenset(t.objects) for t in enumerate_tilting_sets(A2F, 2)}
    assert sets == {
        frozenset({M(P1), M(P2)}), frozenset({M(P2), M(S2)}), frozenset({M(S2), S(P1)}),
        frozenset({S(P1), S(P2)}), frozenset({S(P2), M(P1)}),
    }


def test_empty_set():
    assert [t.objects for t in enumerate_tilting_sets(A3F, 0)] == [()]


@pytest.mark.parametrize("q,count", [(A2, 5), (A3, 14), (B2, 6), (A1xA1, 4)], ids=["A2", "A3", "B2", "A1xA1"])
def test_complete_counts(q, count):
    assert len(enumerate_tilting_sets(WideSubcat.full(q), q.n)) == count


def test_enumeration_matches_brute_force(small_quiver):
    for a in enumerate_wide_subcats(small_quiver):
        for k in range(a.rank + 1):
            found = {frozenset(t.objects) for t in enumerate_tilting_sets(a, k)}
            assert found == brute_tilting_sets(a, k)


def test_mutation():
    t = PartialClusterTiltingSet(A2F, (M(P1), M(P2)))
    assert set(mutate(t, t.objects.index(M(P2))).objects) == {M(P1), S(P2)}


def test_mutation_is_an_involution(small_quiver):
    a = WideSubcat.full(small_quiver)
    for t in enumerate_tilting_sets(a, a.rank):
        for j, x in enumerate(t.objects):
            u = mutate(t, j)
            (new,) = set(u.objects) - set(t.objects)
            assert mutate(u, u.objects.index(new)) == t


def test_exchange_graph_is_regular(small_quiver):
    a = WideSubcat.full(small_quiver)
    for t in enumerate_tilting_sets(a, a.rank - 1):
        assert len(completions(a, t.objects)) == 2


def test_sigma_examples():
    t = [M(P2)]
    assert sigma(A2F, t, M(P1)) == M(P1)
    assert sigma(A2F, t, S(P1)) == M(S2)
    assert sigma_inverse(A2F, t, M(S2)) == S(P1)
    assert sigma_inverse(A2F, t, M(P1)) == M(P1)
    for x in cluster_objects(A3F):
        assert sigma(A3F, [], x) == x


def test_sigma_round_trip_a3_rank_one():
    for t in cluster_objects(A3F):
        for x in completions(A3F, [t]):
            assert sigma(A3F, [t], sigma_inverse(A3F, [t], x)) == x


@pytest.mark.parametrize("q", [A2, A3, B2], ids=["A2", "A3", "B2"])
def test_sigma_properties_exhaustive(q):
    assert sigma_property_failures(q) == []


@pytest.mark.parametrize("q", [A2, A3, B2], ids=["A2", "A3", "B2"])
def test_rank_two_exchange(q):
    assert exchange_failures(q) == []


@pytest.mark.parametrize("q", [A2, A3, B2], ids=["A2", "A3", "B2"])
def test_composition_laws(q):
    assert composition_failures(q) == []


def test_compose_example():
    mid = WideSubcat(A3, [(0, 1, 0), (1, 1, 1)])
    f = ClusterMorphism(A3F, (M((0, 1, 1)),))
    g = ClusterMorphism(mid, (M((0, 1, 0)),))
    assert f.target == mid
    assert g.target == WideSubcat(A3, [(1, 1, 1)])
    gf = compose(g, f)
    assert gf.source == A3F and set(gf.tilting) == {M((0, 1, 1)), M((0, 1, 0))}


def test_compose_mismatch():
    f = ClusterMorphism(A3F, (M((0, 1, 1)),))
    with pytest.raises(ConsistencyError):
        compose(f, f)


def test_morphism_counts():
    # the identity, one rank-1 morphism per object of C(A), one rank-2 morphism per cluster
    assert sum(len(morphisms(A2F, b)) for b in enumerate_wide_subcats(A2)) == 1 + 5 + 5


def test_invalid_tilting_set():
    with pytest.raises(ConsistencyError):
        PartialClusterTiltingSet(A2F, (M(P1), M(S2)))
