"""c-vectors of ordered cluster tilting sets."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Sequence

from .cluster import PartialClusterTiltingSet
from .errors import ConsistencyError, IntegralityViolation, SingularSystem
from .exseq import OrderedClusterTiltingSet, is_signed_exc_seq, right_twist, theta_inverse
from .linalg import as_ints, is_integral, rank, solve
from .modcat import (
    ClusterObject,
    WideSubcat,
    ambient_vector,
    ext,
    hom,
    local_coordinates,
    sub_quiver,
)
from .quiver import euler_form, root_set


@dataclass(frozen=True)
class CVectorList:
    """c-vectors in ambient coordinates and in the subcategory's own coordinates."""

    vectors: tuple[tuple[int, ...], ...]
    local: tuple[tuple[int, ...], ...]

    def __iter__(self):
        return iter(self.vectors)

    def __len__(self):
        return len(self.vectors)

    def __getitem__(self, i):
        return self.vectors[i]


def c_vectors(t: OrderedClusterTiltingSet) -> CVectorList:
    a = t.ambient
    if len(t.items) != a.rank:
        raise ConsistencyError("c-vectors need a complete cluster tilting set")
    q = sub_quiver(a)
    dims = [local_coordinates(a, x.dim()) for x in t.items]
    n = a.rank
    rows = [[euler_form(q, d, [int(i == j) for i in range(n)]) for j in range(n)] for d in dims]
    if rank(rows) < n:
        raise SingularSystem(f"dimension vectors of {list(t.items)} are dependent")
    local = []
    for j in range(n):
        rhs = [-euler_form(q, dims[i], dims[i]) if i == j else 0 for i in range(n)]
        beta = solve(rows, rhs)
        if not is_integral(beta):
            raise IntegralityViolation(f"c-vector {beta} is not integral")
        beta = as_ints(beta)
        if beta not in root_set(q) and tuple(-x for x in beta) not in root_set(q):
            raise ConsistencyError(f"c-vector {beta} is not a signed root")
        local.append(beta)
    ambient = tuple(as_ints(ambient_vector(a, b)) for b in local)
    return CVectorList(ambient, tuple(local))


@dataclass(frozen=True)
class Verdict:
    condition_holds: bool
    first_failure: tuple[int, int] | None = None
    equality_verified: bool | None = None
    mismatch: int | None = None


def _ordering_failure(t: Sequence[ClusterObject], q) -> tuple[int, int] | None:
    for i in range(len(t)):
        for j in range(i + 1, len(t)):
            a, b = t[i].root, t[j].root
            if hom(q, a, b) or ext(q, a, b):
                return (i, j)
    return None


def check_exchange_equals_bijective(t: OrderedClusterTiltingSet) -> Verdict:
    """Do the c-vectors equal the negated dims of theta^{-1}(T)?

    Asserted only when hom and ext vanish from earlier to later items;
    ``first_failure`` is a 0-based index pair otherwise.
    """
    bad = _ordering_failure(t.items, t.ambient.ambient)
    if bad is not None:
        return Verdict(False, bad)
    c = c_vectors(t).vectors
    seq = theta_inverse(t)
    for j, (x, cj) in enumerate(zip(seq.items, c)):
        if tuple(-v for v in x.dim()) != cj:
            return Verdict(True, None, False, j)
    return Verdict(True, None, True)


def good_permutation(t: PartialClusterTiltingSet) -> tuple[int, ...]:
    """A permutation p with <dim T_p(i), dim T_p(j)> = 0 for i < j (0-based, over sorted T)."""
    q = t.context.ambient
    objs = t.objects
    for p in permutations(range(len(objs))):
        if all(euler_form(q, objs[p[i]].dim(), objs[p[j]].dim()) == 0
               for i in range(len(p)) for j in range(i + 1, len(p))):
            return p
    raise ConsistencyError(f"{list(objs)} has no good permutation")


def good_order(t: PartialClusterTiltingSet) -> OrderedClusterTiltingSet:
    p = good_permutation(t)
    return OrderedClusterTiltingSet(t.context, tuple(t.objects[i] for i in p))


def c_vectors_by_twist(t: OrderedClusterTiltingSet) -> tuple[tuple[int, ...], ...]:
    """Negated right twist of the dimension vectors (valid in a good order)."""
    w = right_twist(t.ambient.ambient, [x.dim() for x in t.items])
    return tuple(tuple(-int(v) for v in wj) for wj in w)


def speyer_thomas_check(a: WideSubcat, c: Sequence[Sequence[int]]) -> bool:
    """Can the negated vectors be ordered as shifted then unshifted hom-orthogonal blocks?"""
    q = a.ambient
    try:
        objs = [ClusterObject.from_signed([-x for x in v]) for v in c]
    except ValueError:
        return False
    roots = root_set(q)
    if len(set(objs)) != len(objs) or any(o.root not in roots for o in objs):
        return False
    for perm in permutations(objs):
        k = sum(o.shifted for o in perm)
        if any(o.shifted for o in perm[k:]):
            continue
        blocks = (perm[:k], perm[k:])
        if not all(hom(q, x.root, y.root) == 0 for b in blocks for x in b for y in b if x != y):
            continue
        if is_signed_exc_seq(a, perm):
            return True
    return False
