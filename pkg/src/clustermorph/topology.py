"""Cluster complexes, picture subcomplexes and the cellular chain complex."""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations

from .cluster import _tilting_sets, morphisms
from .cvec import c_vectors
from .errors import BoundarySquareNonzero, IntegralityViolation, NonUnimodular
from .exseq import OrderedClusterTiltingSet
from .linalg import coordinates, det, is_integral, mat_mul, smith_invariants
from .modcat import (
    ClusterObject,
    WideSubcat,
    admissible_simples,
    cluster_objects,
    ext,
    hom,
    indecomposables,
    perp_category,
    relative_projectives,
)
from .picture import ConvexRootSet, exceptional_subsets
from .quiver import Root


@dataclass(frozen=True)
class CategoryInventory:
    objects: tuple[WideSubcat, ...]

    def by_rank(self) -> dict[int, list[WideSubcat]]:
        out: dict[int, list[WideSubcat]] = defaultdict(list)
        for a in self.objects:
            out[a.rank].append(a)
        return dict(out)

    def morphism_count(self, a: WideSubcat, b: WideSubcat) -> int:
        return len(morphisms(a, b))


def enumerate_objects(s: ConvexRootSet) -> CategoryInventory:
    q = s.quiver
    objs = [WideSubcat(q, sub) for sub in exceptional_subsets(q, s.roots)]
    return CategoryInventory(tuple(sorted(objs, key=lambda a: (a.rank, a.simples))))


# --- simplicial side ------------------------------------------------------

@dataclass(frozen=True)
class SimplicialComplexData:
    vertices: tuple[ClusterObject, ...]
    facets: tuple[tuple[int, ...], ...]
    signs: dict = field(default_factory=dict, compare=False)

    def faces(self) -> dict[int, list[tuple[int, ...]]]:
        """All faces by dimension, the empty face in dimension -1."""
        seen = set()
        for f in self.facets:
            for k in range(len(f) + 1):
                seen.update(combinations(f, k))
        out: dict[int, list] = defaultdict(list)
        for face in sorted(seen):
            out[len(face) - 1].append(face)
        return dict(out)


def cluster_complex(a: WideSubcat) -> SimplicialComplexData:
    verts = cluster_objects(a)
    idx = {v: i for i, v in enumerate(verts)}
    facets = tuple(sorted(tuple(sorted(idx[x] for x in t)) for t in _tilting_sets(a, a.rank)))
    return SimplicialComplexData(verts, facets)


@dataclass(frozen=True)
class HomologyResult:
    groups: tuple[tuple[int, int, tuple[int, ...]], ...]  # (degree, betti, torsion)

    def betti(self, k: int) -> int:
        return next((b for d, b, _ in self.groups if d == k), 0)

    def torsion(self, k: int) -> tuple[int, ...]:
        return next((t for d, _, t in self.groups if d == k), ())

    def as_dict(self) -> dict[int, tuple[int, tuple[int, ...]]]:
        return {d: (b, t) for d, b, t in self.groups}

    @staticmethod
    def describe(betti: int, torsion) -> str:
        parts = []
        if betti == 1:
            parts.append("Z")
        elif betti > 1:
            parts.append(f"Z^{betti}")
        parts += [f"Z/{t}" for t in torsion]
        return " + ".join(parts) if parts else "0"


def _homology(dims: dict[int, int], boundaries: dict[int, list[list[int]]]) -> HomologyResult:
    """``boundaries[k]`` maps C_k to C_{k-1} (rows index C_{k-1})."""
    ranks = {}
    invs = {}
    for k, m in boundaries.items():
        inv = smith_invariants(m, dims.get(k - 1, 0), dims.get(k, 0))
        ranks[k] = len(inv)
        invs[k] = tuple(d for d in inv if d > 1)
    groups = []
    for k in sorted(dims):
        betti = dims[k] - ranks.get(k, 0) - ranks.get(k + 1, 0)
        groups.append((k, betti, invs.get(k + 1, ())))
    return HomologyResult(tuple(groups))


def simplicial_homology(c: SimplicialComplexData) -> HomologyResult:
    """Reduced integral homology, simplices oriented by increasing vertex index."""
    faces = c.faces()
    if not faces:
        faces = {-1: [()]}
    index = {k: {f: i for i, f in enumerate(fs)} for k, fs in faces.items()}
    dims = {k: len(fs) for k, fs in faces.items()}
    bds = {}
    for k, fs in faces.items():
        if k < 0:
            continue
        m = [[0] * len(fs) for _ in range(dims[k - 1])]
        for j, f in enumerate(fs):
            for i in range(len(f)):
                m[index[k - 1][f[:i] + f[i + 1:]]][j] += (-1) ** i
        bds[k] = m
    return _homology(dims, bds)


def sphere_homology(dim: int) -> HomologyResult:
    """Reduced homology of S^dim, in the degree range a triangulation would have."""
    return HomologyResult(tuple((k, int(k == dim), ()) for k in range(-1, dim + 1)))


def picture_subcomplex(a: WideSubcat, beta: Root) -> SimplicialComplexData:
    """The subcomplex on objects perpendicular to ``beta``, with normal orientation signs.

    ``signs`` maps each (rank - 1)-vertex simplex (vertex indices into the
    full cluster complex) to ``[(completing object, sign), ...]``.
    """
    q = a.ambient
    beta = tuple(beta)
    if beta not in indecomposables(a):
        raise ValueError(f"{beta} is not an object of {a!r}")
    verts = tuple(x for x in cluster_objects(a) if hom(q, x.root, beta) == 0 and ext(q, x.root, beta) == 0)
    local = {v: i for i, v in enumerate(verts)}
    inside = [t for k in range(1, a.rank + 1) for t in _tilting_sets(a, k) if all(x in local for x in t)]
    facets = sorted(tuple(local[x] for x in t) for t in inside
                    if not any(set(t) < set(u) for u in inside))
    complete = _tilting_sets(a, a.rank)
    signs: dict[tuple[int, ...], list] = {}
    for tau in _tilting_sets(a, a.rank - 1):
        if not all(x in local for x in tau):
            continue
        entries = []
        for t in complete:
            if set(tau) <= set(t):
                (new,) = [x for x in t if x not in tau]
                c = c_vectors(OrderedClusterTiltingSet(a, tau + (new,)))[-1]
                entries.append((new, 1 if all(x <= 0 for x in c) else -1))
        signs[tuple(local[x] for x in tau)] = sorted(entries)
    return SimplicialComplexData(verts, tuple(facets), signs)


# --- cellular side --------------------------------------------------------

def boundary_of_cell(a: WideSubcat) -> dict[WideSubcat, int]:
    out: dict[WideSubcat, int] = defaultdict(int)
    proj = relative_projectives(a)
    for beta in sorted(indecomposables(a) - proj):
        b = perp_category(a, [beta])
        rows = list(admissible_simples(b)) + [beta]
        c = [coordinates(admissible_simples(a), r) for r in rows]
        if any(x is None or not is_integral(x) for x in c):
            raise IntegralityViolation(f"basis change for {beta} in {a!r} is not integral")
        d = det(c)
        if d not in (1, -1):
            raise NonUnimodular(f"det {d} for {beta} in {a!r}")
        out[b] += int(d)
    return {k: v for k, v in out.items() if v}


@dataclass(frozen=True)
class ChainComplexData:
    cells: tuple[tuple[WideSubcat, ...], ...]  # indexed by rank
    boundaries: tuple[tuple[tuple[int, ...], ...], ...]  # boundaries[k]: C_k -> C_{k-1}; k = 0 is empty

    def dims(self) -> dict[int, int]:
        return {k: len(c) for k, c in enumerate(self.cells)}

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * len(c) for k, c in enumerate(self.cells))


def chain_complex(s: ConvexRootSet) -> ChainComplexData:
    inv = enumerate_objects(s)
    top = max(a.rank for a in inv.objects)
    cells = [tuple(a for a in inv.objects if a.rank == k) for k in range(top + 1)]
    pos = [{a: i for i, a in enumerate(c)} for c in cells]
    bds = [()]
    for k in range(1, top + 1):
        m = [[0] * len(cells[k]) for _ in cells[k - 1]]
        for j, a in enumerate(cells[k]):
            for b, coef in boundary_of_cell(a).items():
                m[pos[k - 1][b]][j] += coef
        bds.append(tuple(map(tuple, m)))
    for k in range(2, top + 1):
        prod = mat_mul(bds[k - 1], bds[k])
        if any(x for row in prod for x in row):
            raise BoundarySquareNonzero(f"d_{k - 1} d_{k} != 0")
    return ChainComplexData(tuple(cells), tuple(bds))


def homology(c: ChainComplexData) -> HomologyResult:
    dims = c.dims()
    bds = {k: [list(r) for r in c.boundaries[k]] for k in range(1, len(c.cells))}
    return _homology(dims, bds)
