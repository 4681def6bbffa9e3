"""Convex root sets, picture-group presentations and HNN data."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from graphlib import CycleError, TopologicalSorter
from itertools import combinations
from typing import Iterable, NamedTuple, Sequence

from .errors import ConsistencyError
from .linalg import coordinates, smith_invariants
from .modcat import WideSubcat, ext, hom, hom_orthogonal, indecomposables, is_exceptional_collection
from .quiver import QuiverSpec, Root, euler_form, positive_roots, root_set

Word = tuple[tuple[int, int], ...]
RootWord = tuple[tuple[Root, int], ...]


class ConvexityCheck(NamedTuple):
    ok: bool
    witness: tuple | None = None
    reason: str | None = None

    def __bool__(self):
        return self.ok


def exceptional_subsets(q: QuiverSpec, roots: Sequence[Root]) -> list[tuple[Root, ...]]:
    """Every hom-orthogonal, ext-acyclic subset (including the empty one)."""
    roots = sorted(roots)
    out = [()]
    for k in range(1, q.n + 1):
        out += [c for c in combinations(roots, k) if is_exceptional_collection(q, c)]
    return out


def precedence_order(q: QuiverSpec, roots: Iterable[Root]) -> tuple[Root, ...] | list:
    """Total order with u before v whenever hom(u, v) != 0 or ext(v, u) != 0.

    Returns the cycle (as a list) if none exists.
    """
    roots = sorted(roots)
    preds = {v: {u for u in roots if u != v and (hom(q, u, v) or ext(q, v, u))} for v in roots}
    ts = TopologicalSorter(preds)
    try:
        ts.prepare()
    except CycleError as exc:
        return list(exc.args[1])
    out = []
    while ts.is_active():
        ready = sorted(ts.get_ready())
        out.extend(ready)
        ts.done(*ready)
    return tuple(out)


def is_convex(q: QuiverSpec, roots: Iterable[Root]) -> ConvexityCheck:
    roots = sorted({tuple(r) for r in roots})
    allr = root_set(q)
    for r in roots:
        if r not in allr:
            return ConvexityCheck(False, (r,), f"{r} is not a positive root")
    have = set(roots)
    for sub in exceptional_subsets(q, roots):
        if not sub:
            continue
        missing = sorted(indecomposables(WideSubcat(q, sub)) - have)
        if missing:
            return ConvexityCheck(False, sub, f"A{list(sub)} contains {missing} outside the set")
    order = precedence_order(q, roots)
    if isinstance(order, list):
        return ConvexityCheck(False, tuple(order), "precedence digraph has a cycle")
    return ConvexityCheck(True)


@dataclass(frozen=True)
class ConvexRootSet:
    quiver: QuiverSpec
    roots: tuple[Root, ...]

    def __post_init__(self):
        r = tuple(sorted({tuple(x) for x in self.roots}))
        object.__setattr__(self, "roots", r)
        verdict = is_convex(self.quiver, r)
        if not verdict:
            raise ConsistencyError(f"{list(r)} is not convex: {verdict.reason}")

    @classmethod
    def full(cls, q: QuiverSpec) -> "ConvexRootSet":
        return cls(q, positive_roots(q))

    def __len__(self):
        return len(self.roots)

    def __contains__(self, r):
        return tuple(r) in self.roots


def _combo(q: QuiverSpec, a: Root, b: Root) -> list[tuple[Fraction, Fraction, Root]]:
    out = []
    for g in positive_roots(q):
        c = coordinates([a, b], g)
        if c is None:
            continue
        x, y = c
        if x >= 0 and y >= 0 and x.denominator == 1 and y.denominator == 1:
            out.append((x, y, g))
    return out


def ab(q: QuiverSpec, a: Root, b: Root) -> list[Root]:
    """Roots xa + yb, x, y >= 0, in ascending order of x/y (y = 0 last)."""
    def key(t):
        x, y, _ = t
        return (1, 0) if y == 0 else (0, x / y)

    return [g for _, _, g in sorted(_combo(q, a, b), key=key)]


@dataclass(frozen=True)
class Relation:
    left: Word
    right: Word

    def key(self):
        return tuple(sorted((self.left, self.right)))


@dataclass(frozen=True)
class GroupPresentation:
    generators: tuple[Root, ...]
    relations: tuple[Relation, ...]

    def index(self, r: Root) -> int:
        return self.generators.index(tuple(r))

    def word(self, roots: Iterable[Root], exp: int = 1) -> Word:
        return tuple((self.index(r), exp) for r in roots)

    def to_text(self) -> str:
        names = [f"x{i}" for i in range(len(self.generators))]

        def show(w: Word) -> str:
            if not w:
                return "1"
            return "*".join(names[i] if e == 1 else f"{names[i]}^{e}" for i, e in w)

        lines = [f"# {n} = x({','.join(map(str, g))})" for n, g in zip(names, self.generators)]
        rels = ", ".join(f"{show(r.left)} = {show(r.right)}" for r in self.relations)
        lines.append(f"< {', '.join(names)} | {rels} >")
        return "\n".join(lines) + "\n"


def relation_for(q: QuiverSpec, a: Root, b: Root) -> RootWord:
    return tuple((g, 1) for g in ab(q, a, b))


def presentation(s: ConvexRootSet) -> GroupPresentation:
    q = s.quiver
    gens = s.roots
    idx = {g: i for i, g in enumerate(gens)}
    rels: list[Relation] = []
    seen = set()
    for a in gens:
        for b in gens:
            if a == b or not hom_orthogonal(q, a, b) or ext(q, a, b):
                continue
            left = ((idx[a], 1), (idx[b], 1))
            right = tuple((idx[g], 1) for g in ab(q, a, b))
            rel = Relation(left, right)
            if rel.key() not in seen:
                seen.add(rel.key())
                rels.append(rel)
    return GroupPresentation(gens, tuple(rels))


def free_reduce(w: Sequence[tuple]) -> tuple:
    out: list = []
    for g, e in w:
        if out and out[-1][0] == g:
            e2 = out[-1][1] + e
            out.pop()
            if e2:
                out.append((g, e2))
        else:
            out.append((g, e))
    return tuple(out)


def invert(w: Sequence[tuple]) -> tuple:
    return tuple((g, -e) for g, e in reversed(w))


class AbelianInvariants(NamedTuple):
    free_rank: int
    torsion: tuple[int, ...]


def exponent_matrix(p: GroupPresentation) -> list[list[int]]:
    rows = []
    for r in p.relations:
        row = [0] * len(p.generators)
        for i, e in r.left:
            row[i] += e
        for i, e in r.right:
            row[i] -= e
        rows.append(row)
    return rows


def abelianization(p: GroupPresentation) -> AbelianInvariants:
    m = exponent_matrix(p)
    inv = smith_invariants(m, len(m), len(p.generators))
    return AbelianInvariants(len(p.generators) - len(inv), tuple(d for d in inv if d > 1))


# --- HNN data -----------------------------------------------------------------

@dataclass(frozen=True)
class HnnData:
    omega: Root
    s0: ConvexRootSet
    s_omega: ConvexRootSet
    psi: tuple[tuple[Root, RootWord], ...]
    retraction: tuple[tuple[Root, RootWord], ...]

    def psi_of(self, a: Root) -> RootWord:
        return dict(self.psi)[tuple(a)]

    def r_of(self, a: Root) -> RootWord:
        return dict(self.retraction)[tuple(a)]


def choose_omega(s: ConvexRootSet) -> Root:
    """Lexicographically largest maximal element of the precedence order."""
    q = s.quiver
    sinks = [v for v in s.roots
             if not any(u != v and (hom(q, v, u) or ext(q, u, v)) for u in s.roots)]
    if not sinks:
        raise ConsistencyError("convex set has no maximal element")
    return max(sinks)


def _psi(q: QuiverSpec, a: Root, w: Root) -> RootWord:
    terms = [(x, y, g) for x, y, g in _combo(q, a, w) if x > 0]
    terms.sort(key=lambda t: t[1] / t[0], reverse=True)
    return tuple((g, 1) for _, _, g in terms)


def hnn_data(s: ConvexRootSet) -> HnnData:
    if not s.roots:
        raise ConsistencyError("HNN data needs a nonempty convex set")
    q = s.quiver
    w = choose_omega(s)
    try:
        s0 = ConvexRootSet(q, [r for r in s.roots if r != w])
    except ConsistencyError as exc:
        raise ConsistencyError(f"removing {w} broke convexity: {exc}") from exc
    s_w = ConvexRootSet(q, [g for g in s.roots if euler_form(q, g, w) == 0])
    psi = tuple((a, _psi(q, a, w)) for a in s_w.roots)
    ret = tuple((g, ((g, 1),) if g in s_w.roots else ()) for g in s.roots)
    return HnnData(w, s0, s_w, psi, ret)


def hnn_relation(q: QuiverSpec, a: Root, w: Root) -> tuple[RootWord, RootWord]:
    """x(a)x(w) = product over ab(a, w); equal to decreasing y/x order."""
    return ((a, 1), (w, 1)), relation_for(q, a, w)


def _root_relation(p: GroupPresentation, left: RootWord, right: RootWord) -> Relation:
    return Relation(tuple((p.index(g), e) for g, e in left), tuple((p.index(g), e) for g, e in right))


def hnn_relation_check(s: ConvexRootSet) -> bool:
    if not s.roots:
        return True
    h = hnn_data(s)
    p = presentation(s)
    keys = {r.key() for r in p.relations}
    for a in h.s_omega.roots:
        left, right = hnn_relation(s.quiver, a, h.omega)
        if _root_relation(p, left, right).key() not in keys:
            return False
    return True


def hnn_tower(s: ConvexRootSet) -> dict:
    """Nested HNN decompositions down to the empty set (plain data)."""
    if not s.roots:
        return {"roots": []}
    h = hnn_data(s)
    return {
        "roots": [list(r) for r in s.roots],
        "omega": list(h.omega),
        "S_omega": [list(r) for r in h.s_omega.roots],
        "psi": [{"alpha": list(a), "word": [[list(g), e] for g, e in word]} for a, word in h.psi],
        "retraction": [{"root": list(g), "word": [[list(x), e] for x, e in word]} for g, word in h.retraction],
        "S_0": hnn_tower(h.s0),
    }
