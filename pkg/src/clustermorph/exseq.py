"""Signed exceptional sequences and the bijection theta with ordered clusters."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from typing import NamedTuple, Sequence

from .cluster import PartialClusterTiltingSet, is_partial_tilting, sigma
from .errors import (
    ConsistencyError,
    DegenerateInput,
    IntegralityViolation,
    NotOrderable,
    NotPermutable,
    SignViolation,
)
from .linalg import as_ints, det, is_integral, rank, solve
from .modcat import (
    ClusterObject,
    WideSubcat,
    cluster_objects,
    ext,
    hom,
    perp_category,
    relative_projectives,
    indecomposables,
)
from .quiver import QuiverSpec, euler_form


class Check(NamedTuple):
    ok: bool
    reason: str | None = None

    def __bool__(self):
        return self.ok


def is_signed_exc_seq(ambient: WideSubcat, items: Sequence[ClusterObject]) -> Check:
    a = ambient
    for i in range(len(items) - 1, -1, -1):
        x = items[i]
        if x.root not in indecomposables(a):
            return Check(False, f"item {i + 1} {x!r} is not in the perpendicular category {a!r} of the later items")
        if x.shifted and x.root not in relative_projectives(a):
            return Check(False, f"item {i + 1} {x!r} is shifted but not relatively projective in {a!r}")
        a = perp_category(a, [x])
    return Check(True)


@dataclass(frozen=True)
class SignedExcSeq:
    ambient: WideSubcat
    items: tuple[ClusterObject, ...]

    def __post_init__(self):
        object.__setattr__(self, "items", tuple(self.items))
        verdict = is_signed_exc_seq(self.ambient, self.items)
        if not verdict:
            raise ConsistencyError(verdict.reason)

    def __len__(self):
        return len(self.items)


@dataclass(frozen=True)
class OrderedClusterTiltingSet:
    ambient: WideSubcat
    items: tuple[ClusterObject, ...]

    def __post_init__(self):
        object.__setattr__(self, "items", tuple(self.items))
        if not is_partial_tilting(self.ambient, self.items):
            raise ConsistencyError(f"{list(self.items)} is not a cluster tilting set in {self.ambient!r}")

    def __len__(self):
        return len(self.items)

    def unordered(self) -> PartialClusterTiltingSet:
        return PartialClusterTiltingSet(self.ambient, self.items)


def theta(seq: SignedExcSeq) -> OrderedClusterTiltingSet:
    a = seq.ambient
    out: list[ClusterObject] = []
    for x in reversed(seq.items):
        out.insert(0, sigma(a, out, x))
    return OrderedClusterTiltingSet(a, tuple(out))


def right_twist(q: QuiverSpec, vectors: Sequence[Sequence]) -> tuple[tuple[Fraction, ...], ...]:
    """Rebase so that <v_i, w_j> = 0 for i > j, with w_j - v_j in span(v_i : i > j)."""
    vs = [tuple(Fraction(x) for x in v) for v in vectors]
    k = len(vs)
    if k and rank(vs) < k:
        raise DegenerateInput("vectors are linearly dependent")
    out = []
    for j in range(k):
        later = vs[j + 1:]
        if not later:
            out.append(vs[j])
            continue
        gram = [[euler_form(q, vi, vl) for vl in later] for vi in later]
        if det(gram) == 0:
            raise DegenerateInput(f"Euler form is degenerate on the span of vectors {j + 2}..{k}")
        rhs = [-euler_form(q, vi, vs[j]) for vi in later]
        c = solve(gram, rhs)
        w = tuple(vs[j][m] + sum(ci * vl[m] for ci, vl in zip(c, later)) for m in range(q.n))
        out.append(w)
    return tuple(out)


def twist_change_of_basis(q: QuiverSpec, vectors: Sequence[Sequence]) -> list[list[Fraction]]:
    """Matrix M with w_j = sum_i M[j][i] v_i for the right twist."""
    w = right_twist(q, vectors)
    basis = [tuple(Fraction(x) for x in v) for v in vectors]
    cols = [[b[m] for b in basis] for m in range(q.n)]
    return [list(solve(cols, wj)) for wj in w]


def _object_from_vector(w) -> ClusterObject:
    if not is_integral(w):
        raise IntegralityViolation(f"twist produced non-integral vector {w}")
    w = as_ints(w)
    try:
        return ClusterObject.from_signed(w)
    except ValueError as exc:
        raise SignViolation(str(exc)) from exc


def theta_inverse(t: OrderedClusterTiltingSet) -> SignedExcSeq:
    w = right_twist(t.ambient.ambient, [x.dim() for x in t.items])
    items = tuple(_object_from_vector(v) for v in w)
    verdict = is_signed_exc_seq(t.ambient, items)
    if not verdict:
        raise ConsistencyError(f"twist of {list(t.items)} is not a signed exceptional sequence: {verdict.reason}")
    return SignedExcSeq(t.ambient, items)


def schofield_order(t: PartialClusterTiltingSet) -> OrderedClusterTiltingSet:
    """An ordering of T that is itself a signed exceptional sequence."""
    for perm in permutations(t.objects):
        if is_signed_exc_seq(t.context, perm):
            return OrderedClusterTiltingSet(t.context, perm)
    raise NotOrderable(f"no ordering of {list(t.objects)} is a signed exceptional sequence")


def _orthogonal(q: QuiverSpec, a, b) -> bool:
    return hom(q, a, b) == hom(q, b, a) == ext(q, a, b) == ext(q, b, a) == 0


def permute_seq(seq: SignedExcSeq, perm: Sequence[int]) -> SignedExcSeq:
    """The sequence (X_perm[0], X_perm[1], ...), 0-based.

    Allowed when every pair of items whose relative order changes is
    hom-ext orthogonal.
    """
    k = len(seq.items)
    if sorted(perm) != list(range(k)):
        raise ValueError(f"{list(perm)} is not a permutation of 0..{k - 1}")
    q = seq.ambient.ambient
    for i, j in combinations(range(k), 2):
        a, b = perm[i], perm[j]
        if a > b and not _orthogonal(q, seq.items[a].root, seq.items[b].root):
            raise NotPermutable((b, a), f"items {b + 1} and {a + 1} swap order but are not hom-ext orthogonal")
    return SignedExcSeq(seq.ambient, tuple(seq.items[p] for p in perm))


def enumerate_signed_seqs(a: WideSubcat, k: int) -> list[SignedExcSeq]:
    def build(cat: WideSubcat, length: int):
        if length == 0:
            yield ()
            return
        for x in cluster_objects(cat):
            for head in build(perp_category(cat, [x]), length - 1):
                yield head + (x,)

    if k < 0 or k > a.rank:
        return []
    return [SignedExcSeq(a, s) for s in sorted(build(a, k))]
