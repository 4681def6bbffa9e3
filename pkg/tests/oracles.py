"""Independent reference computations used by several test modules."""
from __future__ import annotations

from itertools import combinations, permutations

from clustermorph.cluster import compatible, enumerate_tilting_sets, sigma_inverse
from clustermorph.linalg import coordinates, is_integral
from clustermorph.exseq import OrderedClusterTiltingSet, SignedExcSeq
from clustermorph.modcat import ClusterObject, WideSubcat, cluster_objects
from clustermorph.quiver import A1xA1, A2, A3, B2, C2

RANK_AT_MOST_3 = {"A2": A2, "A3": A3, "B2": B2, "C2": C2, "A1xA1": A1xA1}


def theta_inverse_by_sigma(t: OrderedClusterTiltingSet) -> SignedExcSeq:
    """Undo theta item by item: X_j is sigma^{-1} over the later T's applied to T_j."""
    items = t.items
    xs = tuple(sigma_inverse(t.ambient, items[j + 1:], items[j]) for j in range(len(items)))
    return SignedExcSeq(t.ambient, xs)


def brute_tilting_sets(a: WideSubcat, k: int) -> set[frozenset]:
    """All k-subsets of C(A) that are pairwise compatible, by plain subset scan."""
    objs = cluster_objects(a)
    return {frozenset(c) for c in combinations(objs, k)
            if all(compatible(a, x, y) for x, y in combinations(c, 2))}


def ordered_tilting_sets(a: WideSubcat, k: int) -> list[OrderedClusterTiltingSet]:
    return [OrderedClusterTiltingSet(a, p) for t in enumerate_tilting_sets(a, k) for p in permutations(t.objects)]


def signed(*vectors) -> tuple[ClusterObject, ...]:
    return tuple(ClusterObject.from_signed(v) for v in vectors)


def sigma_property_failures(q) -> list[str]:
    """Exhaustive transfer-map properties over every wide subcategory and every partial T."""
    from clustermorph.cluster import completions, is_partial_tilting, sigma
    from clustermorph.modcat import enumerate_wide_subcats, perp_category

    bad: list[str] = []
    for a in enumerate_wide_subcats(q):
        in_a = set(cluster_objects(a))
        for k in range(a.rank + 1):
            for t in enumerate_tilting_sets(a, k):
                tt = t.objects
                b = perp_category(a, tt)
                image = {}
                for s in cluster_objects(b):
                    x = sigma(a, tt, s)
                    image[s] = x
                    if x in tt or not is_partial_tilting(a, tt + (x,)):
                        bad.append(f"(a) {a} {tt} {s}")
                    if perp_category(a, tt + (x,)) != perp_category(b, [s]):
                        bad.append(f"(b) {a} {tt} {s}")
                    if s in in_a and all(compatible(a, s, y) for y in tt) and s not in tt and x != s:
                        bad.append(f"(e) {a} {tt} {s}")
                    if sigma_inverse(a, tt, x) != s:
                        bad.append(f"inverse {a} {tt} {s}")
                if sorted(image.values()) != sorted(completions(a, tt)) or len(set(image.values())) != len(image):
                    bad.append(f"bijection {a} {tt}")
                for s1, s2 in combinations(image, 2):
                    if compatible(b, s1, s2) != compatible(a, image[s1], image[s2]):
                        bad.append(f"(d) {a} {tt} {s1} {s2}")
                for full_set in enumerate_tilting_sets(a, a.rank):
                    if set(tt) <= set(full_set.objects):
                        rest = [sigma_inverse(a, tt, x) for x in full_set.objects if x not in tt]
                        if len(rest) != b.rank or not is_partial_tilting(b, rest):
                            bad.append(f"complete {a} {tt} {full_set.objects}")
    return bad


def exchange_failures(q) -> list[str]:
    """dim X + dim Y is an integer multiple of dim T for both completions of every T in rank 2."""
    from clustermorph.cluster import completions
    from clustermorph.modcat import enumerate_wide_subcats

    bad = []
    for a in enumerate_wide_subcats(q):
        if a.rank != 2:
            continue
        for t in cluster_objects(a):
            xs = completions(a, [t])
            if len(xs) != 2:
                bad.append(f"{a} {t}: {len(xs)} completions")
                continue
            total = [u + v for u, v in zip(xs[0].dim(), xs[1].dim())]
            c = coordinates([t.dim()], total)
            if c is None or not is_integral(c):
                bad.append(f"{a} {t}: {xs}")
    return bad


def composition_failures(q) -> list[str]:
    """Associativity over all composable triples and unitality over all morphisms."""
    from clustermorph.cluster import ClusterMorphism, compose, morphisms
    from clustermorph.modcat import enumerate_wide_subcats

    cats = enumerate_wide_subcats(q)
    out_of = {a: [m for b in cats for m in morphisms(a, b)] for a in cats}
    bad = []
    for a in cats:
        for f in out_of[a]:
            if compose(ClusterMorphism.identity(f.target), f) != f or compose(f, ClusterMorphism.identity(a)) != f:
                bad.append(f"unit {f}")
            for g in out_of[f.target]:
                gf = compose(g, f)
                if gf.target != g.target:
                    bad.append(f"target {g} {f}")
                for h in out_of[g.target]:
                    if compose(h, gf) != compose(compose(h, g), f):
                        bad.append(f"assoc {h} {g} {f}")
    return bad
