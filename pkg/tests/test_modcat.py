import pytest

from clustermorph.errors import ConsistencyError, NotARoot, NotInCategory
from clustermorph.modcat import (
    ClusterObject, WideSubcat, admissible_simples, cluster_objects, enumerate_wide_subcats, ext, hom,
    indecomposables, local_coordinates, ambient_vector, perp_category, relative_projectives,
    simples_from_roots, sub_quiver,
)
from clustermorph.quiver import A1xA1, A2, A3, B2, euler_form, positive_roots
from clustermorph.stability import oracle_ext, oracle_hom

M = ClusterObject.module
S = ClusterObject.shift


def test_hom_ext_examples():
    assert hom(A3, (1, 1, 1), (1, 1, 0)) == 0
    assert hom(A3, (1, 1, 0), (1, 1, 0)) == 1
    assert hom(A2, (1, 0), (1, 1)) == 1
    assert ext(A2, (0, 1), (1, 0)) == 1
    assert ext(B2, (0, 1), (1, 0)) == 2


def test_hom_ext_against_representations():
    assert oracle_hom(A2, (1, 0), (1, 1)) == 1
    assert oracle_ext(A2, (0, 1), (1, 0)) == 1


def test_hom_ext_split_the_form(any_quiver):
    q = any_quiver
    for g in positive_roots(q):
        assert ext(q, g, g) == 0
        for d in positive_roots(q):
            assert hom(q, g, d) * ext(q, g, d) == 0
            assert hom(q, g, d) - ext(q, g, d) == euler_form(q, g, d)


def test_non_root_rejected():
    with pytest.raises(NotARoot):
        hom(A2, (2, 1), (1, 0))


def test_indecomposables():
    assert indecomposables(WideSubcat.full(A2)) == set(positive_roots(A2))
    assert indecomposables(WideSubcat(A3, [(1, 1, 0)])) == {(1, 1, 0)}
    assert indecomposables(WideSubcat(A3, [(1, 0, 0), (0, 0, 1)])) == {(1, 0, 0), (0, 0, 1)}


def test_simples_from_roots():
    assert simples_from_roots(A2, positive_roots(A2)) == ((0, 1), (1, 0))
    assert simples_from_roots(A3, [(1, 1, 0)]) == ((1, 1, 0),)
    assert simples_from_roots(A3, [(1, 0, 0), (0, 0, 1)]) == ((0, 0, 1), (1, 0, 0))
    with pytest.raises(ConsistencyError):
        simples_from_roots(A2, [(1, 0), (0, 1)])


def test_round_trip_every_wide_subcategory(any_quiver):
    for a in enumerate_wide_subcats(any_quiver):
        if a.rank:
            assert simples_from_roots(any_quiver, indecomposables(a)) == a.simples


def test_wide_subcategory_counts():
    # A_n has Catalan(n+1) wide subcategories
    assert len(enumerate_wide_subcats(A2)) == 5
    assert len(enumerate_wide_subcats(A3)) == 14
    assert len(enumerate_wide_subcats(B2)) == 6
    assert len(enumerate_wide_subcats(A1xA1)) == 4


def test_perp_category():
    full = WideSubcat.full(A3)
    assert perp_category(full, [M((0, 1, 1))]).simples == ((0, 1, 0), (1, 1, 1))
    assert perp_category(WideSubcat.full(A2), [M((1, 1))]).simples == ((1, 0),)
    assert perp_category(full, []) == full
    assert perp_category(full, [S((1, 1, 1))]) == perp_category(full, [M((1, 1, 1))])
    with pytest.raises(NotInCategory):
        perp_category(WideSubcat(A3, [(1, 0, 0)]), [M((0, 1, 0))])


def test_perp_drops_rank_by_one(small_quiver):
    full = WideSubcat.full(small_quiver)
    for g in positive_roots(small_quiver):
        assert perp_category(full, [g]).rank == small_quiver.n - 1


def test_relative_projectives():
    assert relative_projectives(WideSubcat.full(A3)) == {(1, 0, 0), (1, 1, 0), (1, 1, 1)}
    assert relative_projectives(WideSubcat(A3, [(0, 1, 0), (1, 1, 1)])) == {(0, 1, 0), (1, 1, 1)}
    assert relative_projectives(WideSubcat(A3, [(1, 1, 0)])) == {(1, 1, 0)}


def test_relative_projective_count_equals_rank(any_quiver):
    for a in enumerate_wide_subcats(any_quiver):
        assert len(relative_projectives(a)) == a.rank


def test_cluster_objects():
    objs = cluster_objects(WideSubcat.full(A2))
    assert objs == (M((0, 1)), M((1, 0)), M((1, 1)), S((1, 0)), S((1, 1)))
    assert cluster_objects(WideSubcat(A3, [(0, 1, 1)])) == (M((0, 1, 1)), S((0, 1, 1)))
    assert len(cluster_objects(WideSubcat.full(A3))) == 9


def test_signed_vectors():
    assert ClusterObject.from_signed((-1, -1)) == S((1, 1))
    assert S((1, 1)).dim() == (-1, -1)
    assert M((1, 0)) < S((0, 1))
    for bad in [(0, 0), (1, -1)]:
        with pytest.raises(ValueError):
            ClusterObject.from_signed(bad)


def test_sub_quiver():
    assert sub_quiver(WideSubcat.full(A3)) == A3
    assert sub_quiver(WideSubcat(A3, [(0, 1, 0), (1, 1, 1)])).euler == ((1, 0), (0, 1))
    a2 = sub_quiver(WideSubcat(A3, [(1, 0, 0), (0, 1, 0)]))
    assert a2.euler == ((1, 0), (-1, 1))
    assert admissible_simples(WideSubcat(A3, [(1, 0, 0), (0, 1, 0)])) == ((1, 0, 0), (0, 1, 0))


def test_local_coordinates_round_trip():
    a = WideSubcat(A3, [(0, 1, 0), (1, 1, 1)])
    assert local_coordinates(a, (1, 2, 1)) == (1, 1)
    assert ambient_vector(a, (1, 1)) == (1, 2, 1)
    with pytest.raises(NotInCategory):
        local_coordinates(a, (1, 0, 0))


def test_invalid_wide_subcategory():
    with pytest.raises(ConsistencyError):
        WideSubcat(A2, [(1, 0), (1, 1)])
