"""Hom/Ext from the Euler form and finitely generated wide subcategories."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from .errors import ConsistencyError, NotARoot, NotInCategory
from .linalg import coordinates, is_integral
from .quiver import QuiverSpec, Root, euler_form, positive_roots, root_set


def _check_root(q: QuiverSpec, g) -> None:
    if tuple(g) not in root_set(q):
        raise NotARoot(f"{tuple(g)} is not a positive root")


def hom(q: QuiverSpec, g: Root, d: Root) -> int:
    _check_root(q, g)
    _check_root(q, d)
    return max(euler_form(q, g, d), 0)


def ext(q: QuiverSpec, g: Root, d: Root) -> int:
    _check_root(q, g)
    _check_root(q, d)
    return max(-euler_form(q, g, d), 0)


def hom_orthogonal(q: QuiverSpec, a: Root, b: Root) -> bool:
    return hom(q, a, b) == 0 and hom(q, b, a) == 0


def perpendicular(q: QuiverSpec, a: Root, b: Root) -> bool:
    """b lies in the right perpendicular category of a."""
    return euler_form(q, a, b) == 0 and hom(q, a, b) == 0


def ext_order(q: QuiverSpec, roots: Sequence[Root]) -> tuple[Root, ...] | None:
    """Admissible order of ``roots``: ext(r_i, r_j) = 0 whenever i < j.

    Ties go to the lexicographically largest root, so the simples of a full
    category come out in vertex order. Returns None on a cycle.
    """
    left = set(roots)
    out: list[Root] = []
    while left:
        ready = [r for r in left if not any(ext(q, r, s) > 0 for s in left if s != r)]
        if not ready:
            return None
        r = max(ready)
        out.append(r)
        left.remove(r)
    return tuple(out)


def is_exceptional_collection(q: QuiverSpec, roots: Sequence[Root]) -> bool:
    """Pairwise hom-orthogonal with an acyclic ext digraph."""
    for a, b in combinations(roots, 2):
        if a == b or not hom_orthogonal(q, a, b):
            return False
    return ext_order(q, roots) is not None


@dataclass(frozen=True)
class WideSubcat:
    ambient: QuiverSpec
    simples: tuple[Root, ...]

    def __post_init__(self):
        s = tuple(sorted(tuple(int(x) for x in r) for r in self.simples))
        object.__setattr__(self, "simples", s)
        for r in s:
            _check_root(self.ambient, r)
        if len(set(s)) != len(s) or not is_exceptional_collection(self.ambient, s):
            raise ConsistencyError(f"{list(s)} are not the simples of a wide subcategory")

    @property
    def rank(self) -> int:
        return len(self.simples)

    @classmethod
    def full(cls, q: QuiverSpec) -> "WideSubcat":
        return cls(q, tuple(tuple(int(i == j) for j in range(q.n)) for i in range(q.n)))

    def __repr__(self):
        return f"A({', '.join(map(str, self.simples))})"


@dataclass(frozen=True, order=True)
class ClusterObject:
    """A positive root, possibly shifted. Sorts modules first, then by root."""

    shifted: bool
    root: Root

    @classmethod
    def module(cls, root) -> "ClusterObject":
        return cls(False, tuple(root))

    @classmethod
    def shift(cls, root) -> "ClusterObject":
        return cls(True, tuple(root))

    @classmethod
    def from_signed(cls, v: Sequence[int]) -> "ClusterObject":
        v = tuple(int(x) for x in v)
        if all(x >= 0 for x in v) and any(v):
            return cls(False, v)
        if all(x <= 0 for x in v) and any(v):
            return cls(True, tuple(-x for x in v))
        raise ValueError(f"signed vector {list(v)} is zero or has mixed signs")

    def dim(self) -> Root:
        return tuple(-x for x in self.root) if self.shifted else self.root

    def underlying(self) -> Root:
        return self.root

    def __repr__(self):
        return f"{self.root}{'[1]' if self.shifted else ''}"


@lru_cache(maxsize=None)
def indecomposables(a: WideSubcat) -> frozenset:
    out = set()
    for g in positive_roots(a.ambient):
        c = coordinates(a.simples, g)
        if c is not None and is_integral(c):
            out.add(g)
    return frozenset(out)


def sorted_indecomposables(a: WideSubcat) -> tuple[Root, ...]:
    return tuple(sorted(indecomposables(a)))


def simples_from_roots(q: QuiverSpec, phi: Iterable[Root]) -> tuple[Root, ...]:
    phi = {tuple(r) for r in phi}
    s = tuple(sorted(d for d in phi
                     if not any(tuple(x - y for x, y in zip(d, e)) in phi for e in phi)))
    try:
        w = WideSubcat(q, s)
    except ConsistencyError as exc:
        raise ConsistencyError(f"roots {sorted(phi)} do not form a wide subcategory: {exc}") from exc
    if indecomposables(w) != phi:
        raise ConsistencyError(f"span of {list(s)} does not recover {sorted(phi)}")
    return s


def _check_in(a: WideSubcat, roots: Iterable[Root]) -> None:
    ind = indecomposables(a)
    for r in roots:
        if tuple(r) not in ind:
            raise NotInCategory(f"{tuple(r)} is not an object of {a!r}")


@lru_cache(maxsize=None)
def _perp(a: WideSubcat, roots: frozenset) -> WideSubcat:
    q = a.ambient
    phi = {d for d in indecomposables(a) if all(hom(q, t, d) == 0 and ext(q, t, d) == 0 for t in roots)}
    return WideSubcat(q, simples_from_roots(q, phi))


def perp_category(a: WideSubcat, objs: Iterable) -> WideSubcat:
    """Right perpendicular category of the underlying modules of ``objs`` inside ``a``."""
    roots = frozenset(o.root if isinstance(o, ClusterObject) else tuple(o) for o in objs)
    _check_in(a, roots)
    return _perp(a, roots)


@lru_cache(maxsize=None)
def relative_projectives(a: WideSubcat) -> frozenset:
    q = a.ambient
    ind = indecomposables(a)
    return frozenset(g for g in ind if all(euler_form(q, g, d) >= 0 for d in ind))


@lru_cache(maxsize=None)
def cluster_objects(a: WideSubcat) -> tuple[ClusterObject, ...]:
    objs = [ClusterObject.module(g) for g in indecomposables(a)]
    objs += [ClusterObject.shift(g) for g in relative_projectives(a)]
    return tuple(sorted(objs))


@lru_cache(maxsize=None)
def admissible_simples(a: WideSubcat) -> tuple[Root, ...]:
    """The simples of ``a`` in the order used for its own quiver."""
    order = ext_order(a.ambient, a.simples)
    assert order is not None
    return order


@lru_cache(maxsize=None)
def sub_quiver(a: WideSubcat) -> QuiverSpec:
    q = a.ambient
    s = admissible_simples(a)
    f = tuple(euler_form(q, x, x) for x in s)
    e = tuple(tuple(euler_form(q, x, y) for y in s) for x in s)
    return QuiverSpec(f, e, f"{q.name}|{list(s)}" if q.name else "")


def local_coordinates(a: WideSubcat, v: Sequence) -> tuple:
    """Coordinates of an ambient vector in the admissible simples basis of ``a``."""
    c = coordinates(admissible_simples(a), v)
    if c is None:
        raise NotInCategory(f"{tuple(v)} is not in the span of {a!r}")
    return c


def ambient_vector(a: WideSubcat, c: Sequence) -> tuple:
    s = admissible_simples(a)
    n = a.ambient.n
    return tuple(sum(ci * si[k] for ci, si in zip(c, s)) for k in range(n))


def enumerate_wide_subcats(q: QuiverSpec) -> list[WideSubcat]:
    """Every wide subcategory, ordered by (rank, simples)."""
    roots = positive_roots(q)
    out = [WideSubcat(q, ())]
    for k in range(1, q.n + 1):
        for c in combinations(roots, k):
            if is_exceptional_collection(q, c):
                out.append(WideSubcat(q, c))
    return out
