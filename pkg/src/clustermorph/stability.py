"""Explicit representations over F_p and stability-domain membership.

Only simply-laced quivers are supported: representations are built from a
simple by BGP reflection functors, so no bimodule data is needed.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import ConsistencyError, NotARoot, NotInCategory, NotSimplyLaced
from .linalg import in_span
from .modcat import WideSubcat, indecomposables
from .quiver import QuiverSpec, Root, euler_form, positive_roots, root_set

PRIMES = (101, 103)

Matrix = tuple[tuple[int, ...], ...]


# --- linear algebra mod p ---------------------------------------------------

def _rref_mod(rows: list[list[int]], p: int) -> tuple[list[list[int]], list[int]]:
    m = [[x % p for x in r] for r in rows]
    pivots = []
    r = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], -1, p)
        m[r] = [x * inv % p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                k = m[i][c]
                m[i] = [(a - k * b) % p for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank_mod(rows: Sequence[Sequence[int]], p: int) -> int:
    if not rows or not rows[0]:
        return 0
    return len(_rref_mod([list(r) for r in rows], p)[1])


def nullspace_mod(rows: Sequence[Sequence[int]], ncols: int, p: int) -> list[list[int]]:
    """Basis of {x : rows @ x = 0} over F_p."""
    if not rows:
        return [[int(i == j) for i in range(ncols)] for j in range(ncols)]
    red, pivots = _rref_mod([list(r) for r in rows], p)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [0] * ncols
        x[f] = 1
        for row, c in zip(red, pivots):
            x[c] = -row[f] % p
        basis.append(x)
    return basis


def _transpose(m: Sequence[Sequence[int]], nrows: int, ncols: int) -> list[list[int]]:
    return [[m[i][j] for i in range(nrows)] for j in range(ncols)]


# --- representations ---------------------------------------------------------

@dataclass(frozen=True)
class ExplicitRep:
    dims: tuple[int, ...]
    arrows: tuple[tuple[int, int], ...]  # (source, target), 0-based
    maps: tuple[Matrix, ...]  # maps[a] is dims[target] x dims[source]
    p: int


def arrows_of(q: QuiverSpec) -> tuple[tuple[int, int], ...]:
    out = []
    for i in range(q.n):
        for j in range(i):
            out += [(i, j)] * (-q.euler[i][j])
    return tuple(out)


def _require_simply_laced(q: QuiverSpec) -> None:
    if not q.is_simply_laced():
        raise NotSimplyLaced(f"quiver with symmetrizers {list(q.f)} is not simply-laced")


def _reflect_source(dims, arrows, maps, k, p):
    """BGP reflection at a source k (cokernel construction)."""
    out_idx = [a for a, (s, _) in enumerate(arrows) if s == k]
    targets = [arrows[a][1] for a in out_idx]
    total = sum(dims[t] for t in targets)
    stacked = []
    for a in out_idx:
        stacked += [list(r) for r in maps[a]]
    # rows of Y span the annihilator of the image of V_k
    if dims[k] == 0:
        y = [[int(i == j) for j in range(total)] for i in range(total)]
    else:
        y = nullspace_mod(_transpose(stacked, total, dims[k]), total, p)
    new_dim = len(y)
    dims = dims[:k] + (new_dim,) + dims[k + 1:]
    arrows = list(arrows)
    maps = list(maps)
    col = 0
    for a, t in zip(out_idx, targets):
        block = tuple(tuple(row[col:col + dims[t]]) for row in y)
        col += dims[t]
        arrows[a] = (t, k)
        maps[a] = block
    return dims, tuple(arrows), tuple(maps)


def _normalize_thin(rep: ExplicitRep) -> ExplicitRep:
    """Rescale 1-dimensional spaces so nonzero scalar maps become 1."""
    if any(d > 1 for d in rep.dims):
        return rep
    p = rep.p
    g: dict[int, int] = {}
    support = [v for v, d in enumerate(rep.dims) if d]
    for start in support:
        if start in g:
            continue
        g[start] = 1
        changed = True
        while changed:
            changed = False
            for (s, t), m in zip(rep.arrows, rep.maps):
                if not (rep.dims[s] and rep.dims[t]) or not m[0][0]:
                    continue
                if s in g and t not in g:
                    g[t] = g[s] * pow(m[0][0], -1, p) % p
                    changed = True
                elif t in g and s not in g:
                    g[s] = g[t] * m[0][0] % p
                    changed = True
    maps = []
    for (s, t), m in zip(rep.arrows, rep.maps):
        if rep.dims[s] and rep.dims[t]:
            maps.append(((g[t] * m[0][0] * pow(g[s], -1, p) % p,),))
        else:
            maps.append(m)
    return ExplicitRep(rep.dims, rep.arrows, tuple(maps), p)


@lru_cache(maxsize=None)
def build_rep(q: QuiverSpec, gamma: Root, p: int = PRIMES[0]) -> ExplicitRep:
    _require_simply_laced(q)
    gamma = tuple(gamma)
    if gamma not in root_set(q):
        raise NotARoot(f"{gamma} is not a positive root")
    n = q.n
    arrows = arrows_of(q)
    d = list(gamma)
    steps = []
    k = 0
    # reflect at sinks in vertex order until the dimension vector is simple
    for _ in range(4 * n * len(positive_roots(q)) + 4):
        if sum(d) == 1 and d[k] == 1:
            break
        assert all(s != k for s, _ in arrows), "vertex order must present a sink"
        nb = sum(d[s] for s, t in arrows if t == k)
        d[k] = nb - d[k]
        if d[k] < 0:
            raise ConsistencyError(f"reflection of {gamma} left the positive cone")
        arrows = tuple((t, s) if t == k else (s, t) for s, t in arrows)
        steps.append(k)
        k = (k + 1) % n
    else:
        raise ConsistencyError(f"no simple reached from {gamma}")
    dims = tuple(d)
    maps = tuple(tuple(tuple(0 for _ in range(dims[s])) for _ in range(dims[t])) for s, t in arrows)
    for k in reversed(steps):
        dims, arrows, maps = _reflect_source(dims, arrows, maps, k, p)
    assert dims == gamma and arrows == arrows_of(q)
    rep = _normalize_thin(ExplicitRep(dims, arrows, maps, p))
    if hom_dim(rep, rep) != 1:
        raise ConsistencyError(f"representation for {gamma} is not a brick")
    return rep


def _hom_system(m: ExplicitRep, n: ExplicitRep) -> tuple[list[list[int]], int, list[int], int]:
    """Matrix of phi -> (N_a phi_s - phi_t M_a)_a and its shape data."""
    offs = []
    nvars = 0
    for v in range(len(m.dims)):
        offs.append(nvars)
        nvars += n.dims[v] * m.dims[v]
    rows = []
    neqs = 0
    p = m.p
    for (s, t), ma, na in zip(m.arrows, m.maps, n.maps):
        for r in range(n.dims[t]):
            for c in range(m.dims[s]):
                row = [0] * nvars
                # (N_a phi_s)[r][c] = sum_k N_a[r][k] phi_s[k][c]
                for kk in range(n.dims[s]):
                    row[offs[s] + kk * m.dims[s] + c] += na[r][kk]
                # (phi_t M_a)[r][c] = sum_k phi_t[r][k] M_a[k][c]
                for kk in range(m.dims[t]):
                    row[offs[t] + r * m.dims[t] + kk] -= ma[kk][c]
                rows.append([x % p for x in row])
                neqs += 1
    return rows, nvars, offs, neqs


def hom_dim(m: ExplicitRep, n: ExplicitRep) -> int:
    rows, nvars, _, _ = _hom_system(m, n)
    return nvars - rank_mod(rows, m.p)


def ext_dim(m: ExplicitRep, n: ExplicitRep) -> int:
    """Cokernel of the same map (standard resolution of a hereditary path algebra)."""
    rows, _, _, neqs = _hom_system(m, n)
    return neqs - rank_mod(rows, m.p)


def hom_basis(m: ExplicitRep, n: ExplicitRep) -> list[list[Matrix]]:
    rows, nvars, offs, _ = _hom_system(m, n)
    out = []
    for x in nullspace_mod(rows, nvars, m.p):
        phis = []
        for v in range(len(m.dims)):
            a, b = n.dims[v], m.dims[v]
            phis.append(tuple(tuple(x[offs[v] + r * b + c] for c in range(b)) for r in range(a)))
        out.append(phis)
    return out


def oracle_hom(q: QuiverSpec, g: Root, d: Root, p: int = PRIMES[0]) -> int:
    return hom_dim(build_rep(q, tuple(g), p), build_rep(q, tuple(d), p))


def oracle_ext(q: QuiverSpec, g: Root, d: Root, p: int = PRIMES[0]) -> int:
    return ext_dim(build_rep(q, tuple(g), p), build_rep(q, tuple(d), p))


def _injective(phis, dims, p) -> bool:
    return all(d == 0 or rank_mod([list(r) for r in phi], p) == d for phi, d in zip(phis, dims))


def _combine(basis, coeffs, p):
    out = []
    for v in range(len(basis[0])):
        mats = [b[v] for b in basis]
        rows = len(mats[0])
        cols = len(mats[0][0]) if rows else 0
        out.append(tuple(tuple(sum(c * mt[r][k] for c, mt in zip(coeffs, mats)) % p for k in range(cols))
                         for r in range(rows)))
    return out


def _has_injection(sub: ExplicitRep, big: ExplicitRep) -> bool:
    basis = hom_basis(sub, big)
    if not basis:
        return False
    p = sub.p
    k = len(basis)
    if k <= 2:
        candidates = [(1,)] if k == 1 else [(1, t) for t in range(p)] + [(0, 1)]
    else:
        rng = random.Random(hash((sub.dims, big.dims, p)) & 0xFFFFFFFF)
        candidates = [tuple(rng.randrange(p) for _ in range(k)) for _ in range(64)]
    return any(_injective(_combine(basis, c, p), sub.dims, p) for c in candidates)


@lru_cache(maxsize=None)
def subroots(q: QuiverSpec, gamma: Root) -> frozenset:
    """Roots g' <= gamma admitting an injective map M_g' -> M_gamma."""
    _require_simply_laced(q)
    gamma = tuple(gamma)
    results = []
    for p in PRIMES:
        big = build_rep(q, gamma, p)
        found = frozenset(g for g in positive_roots(q)
                          if all(x <= y for x, y in zip(g, gamma)) and _has_injection(build_rep(q, g, p), big))
        results.append(found)
    if len(set(results)) != 1:
        raise ConsistencyError(f"subroots of {gamma} differ between primes {PRIMES}")
    return results[0]


@dataclass(frozen=True)
class StabilityVerdict:
    member: bool
    violated: str | None = None
    witness: Root | None = None
    value: Fraction | None = None

    def __bool__(self):
        return self.member


def in_stability_domain(a: WideSubcat, gamma: Root, v: Sequence) -> StabilityVerdict:
    q = a.ambient
    _require_simply_laced(q)
    gamma = tuple(gamma)
    if gamma not in indecomposables(a):
        raise NotInCategory(f"{gamma} is not an object of {a!r}")
    v = tuple(Fraction(x) for x in v)
    if len(v) != q.n:
        raise ValueError(f"v must have length {q.n}")
    if not in_span(list(a.simples), v):
        raise NotInCategory(f"v = {v} is not in the span of {a!r}")
    val = euler_form(q, v, gamma)
    if val != 0:
        return StabilityVerdict(False, "<v, gamma> != 0", gamma, val)
    inside = indecomposables(a)
    for g in sorted(subroots(q, gamma)):
        if g not in inside:
            continue
        val = euler_form(q, v, g)
        if val > 0:
            return StabilityVerdict(False, "<v, gamma'> > 0 for a subroot gamma'", g, val)
    return StabilityVerdict(True)
