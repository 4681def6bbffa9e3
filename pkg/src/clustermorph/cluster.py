"""Partial cluster tilting sets, the transfer map sigma, mutation, composition."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable

from .errors import ConsistencyError, NotInCategory, UniquenessViolation
from .linalg import in_span
from .modcat import (
    ClusterObject,
    WideSubcat,
    cluster_objects,
    ext,
    hom,
    perp_category,
)


def _require(a: WideSubcat, *objs: ClusterObject) -> None:
    pool = cluster_objects(a)
    for o in objs:
        if o not in pool:
            raise NotInCategory(f"{o!r} is not in C({a!r})")


def _compatible(a: WideSubcat, x: ClusterObject, y: ClusterObject) -> bool:
    q = a.ambient
    if x.shifted and y.shifted:
        return True
    if x.shifted:
        return hom(q, x.root, y.root) == 0
    if y.shifted:
        return hom(q, y.root, x.root) == 0
    return ext(q, x.root, y.root) == 0 and ext(q, y.root, x.root) == 0


def compatible(a: WideSubcat, x: ClusterObject, y: ClusterObject) -> bool:
    _require(a, x, y)
    return _compatible(a, x, y)


def is_partial_tilting(a: WideSubcat, objs: Iterable[ClusterObject]) -> bool:
    objs = list(objs)
    if len(set(objs)) != len(objs) or len(objs) > a.rank:
        return False
    pool = set(cluster_objects(a))
    if not all(o in pool for o in objs):
        return False
    return all(_compatible(a, x, y) for x, y in combinations(objs, 2))


@dataclass(frozen=True)
class PartialClusterTiltingSet:
    context: WideSubcat
    objects: tuple[ClusterObject, ...]

    def __post_init__(self):
        objs = tuple(sorted(self.objects))
        object.__setattr__(self, "objects", objs)
        if not is_partial_tilting(self.context, objs):
            raise ConsistencyError(f"{list(objs)} is not a partial cluster tilting set in {self.context!r}")

    @property
    def complete(self) -> bool:
        return len(self.objects) == self.context.rank

    def __len__(self):
        return len(self.objects)

    def __iter__(self):
        return iter(self.objects)


@lru_cache(maxsize=None)
def _tilting_sets(a: WideSubcat, k: int) -> tuple[tuple[ClusterObject, ...], ...]:
    objs = cluster_objects(a)
    out = []

    def grow(start: int, chosen: list[ClusterObject]):
        if len(chosen) == k:
            out.append(tuple(chosen))
            return
        for i in range(start, len(objs)):
            o = objs[i]
            if all(_compatible(a, o, c) for c in chosen):
                grow(i + 1, chosen + [o])

    if 0 <= k <= a.rank:
        grow(0, [])
    return tuple(out)


def enumerate_tilting_sets(a: WideSubcat, k: int) -> list[PartialClusterTiltingSet]:
    return [PartialClusterTiltingSet(a, t) for t in _tilting_sets(a, k)]


def completions(a: WideSubcat, objs: Iterable[ClusterObject]) -> list[ClusterObject]:
    """Objects that extend ``objs`` to a larger partial cluster tilting set."""
    objs = set(objs)
    return [x for x in cluster_objects(a)
            if x not in objs and all(_compatible(a, x, t) for t in objs)]


def mutate(t: PartialClusterTiltingSet, j: int) -> PartialClusterTiltingSet:
    if not t.complete:
        raise ConsistencyError("mutation needs a complete cluster tilting set")
    old = t.objects[j]
    rest = t.objects[:j] + t.objects[j + 1:]
    cands = [x for x in completions(t.context, rest) if x != old]
    if len(cands) != 1:
        raise UniquenessViolation(f"mutation of {list(t.objects)} at {old!r} has {len(cands)} completions")
    return PartialClusterTiltingSet(t.context, rest + (cands[0],))


def _objects(t) -> tuple[ClusterObject, ...]:
    return tuple(t.objects) if isinstance(t, PartialClusterTiltingSet) else tuple(t)


def _congruent(x: ClusterObject, s: ClusterObject, span: list) -> bool:
    diff = tuple(p - r for p, r in zip(x.dim(), s.dim()))
    return in_span(span, diff)


def sigma(a: WideSubcat, t, s: ClusterObject) -> ClusterObject:
    """The unique object of C_T(A) congruent to ``s`` modulo the span of T."""
    t = _objects(t)
    b = perp_category(a, t)
    _require(b, s)
    span = [o.dim() for o in t]
    cands = [x for x in completions(a, t) if _congruent(x, s, span)]
    if len(cands) != 1:
        raise UniquenessViolation(f"sigma over {list(t)} of {s!r}: {len(cands)} candidates {cands}")
    return cands[0]


def sigma_inverse(a: WideSubcat, t, x: ClusterObject) -> ClusterObject:
    t = _objects(t)
    _require(a, x)
    if x in t or not all(_compatible(a, x, o) for o in t):
        raise ConsistencyError(f"{x!r} is not compatible with {list(t)}")
    b = perp_category(a, t)
    span = [o.dim() for o in t]
    cands = [s for s in cluster_objects(b) if _congruent(x, s, span)]
    if len(cands) != 1:
        raise UniquenessViolation(f"sigma inverse over {list(t)} of {x!r}: {len(cands)} candidates")
    return cands[0]


@dataclass(frozen=True)
class ClusterMorphism:
    source: WideSubcat
    tilting: tuple[ClusterObject, ...]

    def __post_init__(self):
        objs = tuple(sorted(self.tilting))
        object.__setattr__(self, "tilting", objs)
        if not is_partial_tilting(self.source, objs):
            raise ConsistencyError(f"{list(objs)} is not a partial cluster tilting set in {self.source!r}")

    @property
    def target(self) -> WideSubcat:
        return perp_category(self.source, self.tilting)

    @property
    def rank(self) -> int:
        return len(self.tilting)

    @classmethod
    def identity(cls, a: WideSubcat) -> "ClusterMorphism":
        return cls(a, ())


def compose(g: ClusterMorphism, f: ClusterMorphism) -> ClusterMorphism:
    """g after f."""
    if g.source != f.target:
        raise ConsistencyError(f"cannot compose: source {g.source!r} differs from target {f.target!r}")
    moved = tuple(sigma(f.source, f.tilting, s) for s in g.tilting)
    return ClusterMorphism(f.source, f.tilting + moved)


def morphisms(a: WideSubcat, b: WideSubcat) -> list[ClusterMorphism]:
    """All cluster morphisms from ``a`` to ``b``."""
    k = a.rank - b.rank
    if k < 0:
        return []
    return [ClusterMorphism(a, t) for t in _tilting_sets(a, k) if perp_category(a, t) == b]
