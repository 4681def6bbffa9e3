"""Valued quivers, the Euler form and positive roots."""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Sequence

from .errors import NotFiniteType, QuiverError
from .linalg import det

Root = tuple[int, ...]


@dataclass(frozen=True)
class QuiverSpec:
    """Symmetrizers ``f`` and a lower-triangular Euler matrix ``euler``.

    Row index is the first slot of the form: <x, y> = sum x_i E_ij y_j.
    """

    f: tuple[int, ...]
    euler: tuple[tuple[int, ...], ...]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        f = tuple(int(x) for x in self.f)
        e = tuple(tuple(int(x) for x in row) for row in self.euler)
        object.__setattr__(self, "f", f)
        object.__setattr__(self, "euler", e)
        n = len(f)
        if n == 0:
            raise QuiverError("quiver must have at least one vertex")
        if len(e) != n or any(len(row) != n for row in e):
            raise QuiverError(f"Euler matrix must be {n}x{n}")
        for i in range(n):
            if f[i] <= 0:
                raise QuiverError(f"symmetrizer f_{i + 1} must be positive")
            if e[i][i] != f[i]:
                raise QuiverError(f"E_{i + 1}{i + 1} must equal f_{i + 1}")
            for j in range(n):
                if i < j and e[i][j] != 0:
                    raise QuiverError(
                        f"vertices not in admissible order: E_{i + 1}{j + 1} = {e[i][j]} above the diagonal"
                    )
                if i > j and e[i][j] > 0:
                    raise QuiverError(f"E_{i + 1}{j + 1} must be <= 0")

    @property
    def n(self) -> int:
        return len(self.f)

    @classmethod
    def from_arrows(cls, f: Sequence[int], arrows: Sequence[tuple[int, int, int]], name: str = "") -> "QuiverSpec":
        """Build from 0-based arrows ``(source, target, bimodule_dim)``."""
        n = len(f)
        e = [[0] * n for _ in range(n)]
        for i in range(n):
            e[i][i] = f[i]
        for s, t, d in arrows:
            if not (0 <= s < n and 0 <= t < n) or s == t:
                raise QuiverError(f"bad arrow {s + 1}->{t + 1}")
            if d <= 0:
                raise QuiverError("arrow dimension must be positive")
            e[s][t] -= d
        return cls(tuple(f), tuple(map(tuple, e)), name)

    def symmetrized(self) -> list[list[int]]:
        e = self.euler
        return [[e[i][j] + e[j][i] for j in range(self.n)] for i in range(self.n)]

    def cartan(self) -> list[list[int]]:
        c = self.symmetrized()
        # C_ii = 2 f_i, so dividing rows by f_i gives A_ii = 2
        out = []
        for i in range(self.n):
            row = []
            for j in range(self.n):
                q, r = divmod(c[i][j], self.f[i])
                if r:
                    raise QuiverError(f"Cartan entry A_{i + 1}{j + 1} is not an integer")
                row.append(q)
            out.append(row)
        return out

    def is_simply_laced(self) -> bool:
        return all(x == 1 for x in self.f)


def euler_form(q: QuiverSpec, x: Sequence, y: Sequence):
    n = q.n
    if len(x) != n or len(y) != n:
        raise QuiverError(f"dimension mismatch: expected length {n}, got {len(x)} and {len(y)}")
    e = q.euler
    return sum(x[i] * e[i][j] * y[j] for i in range(n) for j in range(i + 1) if e[i][j])


def validate_finite_type(q: QuiverSpec) -> None:
    c = q.symmetrized()
    for k in range(1, q.n + 1):
        m = det([row[:k] for row in c[:k]])
        if m <= 0:
            raise NotFiniteType(k, int(m))


@lru_cache(maxsize=None)
def positive_roots(q: QuiverSpec) -> tuple[Root, ...]:
    """Closure of the simple roots under simple reflections, positive part only."""
    validate_finite_type(q)
    a = q.cartan()
    n = q.n
    simples = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = set(simples)
    todo = deque(simples)
    while todo:
        x = todo.popleft()
        for i in range(n):
            c = sum(a[i][j] * x[j] for j in range(n))
            if c == 0:
                continue
            y = x[:i] + (x[i] - c,) + x[i + 1:]
            if y[i] < 0 or y in seen:
                continue
            seen.add(y)
            todo.append(y)
    return tuple(sorted(seen))


@lru_cache(maxsize=None)
def root_set(q: QuiverSpec) -> frozenset:
    return frozenset(positive_roots(q))


def unit(n: int, i: int) -> Root:
    return tuple(int(i == j) for j in range(n))


# --- file format -----------------------------------------------------------

def quiver_from_dict(data: dict, name: str = "") -> QuiverSpec:
    if not isinstance(data, dict):
        raise QuiverError("quiver spec must be a JSON object")
    if "f" not in data:
        raise QuiverError("quiver spec needs an 'f' list")
    f = data["f"]
    n = data.get("n", len(f))
    if n != len(f):
        raise QuiverError(f"n={n} but f has {len(f)} entries")
    if "euler" in data:
        q = QuiverSpec(tuple(f), tuple(tuple(r) for r in data["euler"]), name)
    elif "arrows" in data:
        arrows = []
        for a in data["arrows"]:
            try:
                arrows.append((int(a["from"]) - 1, int(a["to"]) - 1, int(a.get("dim", 1))))
            except (KeyError, TypeError) as exc:
                raise QuiverError(f"bad arrow entry {a!r}") from exc
        q = QuiverSpec.from_arrows(f, arrows, name)
    else:
        raise QuiverError("quiver spec needs 'euler' or 'arrows'")
    return q


def quiver_to_dict(q: QuiverSpec) -> dict:
    return {"n": q.n, "f": list(q.f), "euler": [list(r) for r in q.euler]}


def load_quiver(path: str | Path) -> QuiverSpec:
    p = Path(path)
    try:
        data = json.loads(p.read_text())
    except json.JSONDecodeError as exc:
        raise QuiverError(f"{p}: invalid JSON ({exc})") from exc
    q = quiver_from_dict(data, p.stem)
    validate_finite_type(q)
    return q


# --- built-in examples -----------------------------------------------------

A1 = QuiverSpec((1,), ((1,),), "A1")
A2 = QuiverSpec.from_arrows((1, 1), [(1, 0, 1)], "A2")
A3 = QuiverSpec.from_arrows((1, 1, 1), [(1, 0, 1), (2, 1, 1)], "A3")
B2 = QuiverSpec.from_arrows((1, 2), [(1, 0, 2)], "B2")
C2 = QuiverSpec.from_arrows((2, 1), [(1, 0, 2)], "C2")
G2 = QuiverSpec.from_arrows((1, 3), [(1, 0, 3)], "G2")
A1xA1 = QuiverSpec((1, 1), ((1, 0), (0, 1)), "A1xA1")
KRONECKER = QuiverSpec.from_arrows((1, 1), [(1, 0, 2)], "Kronecker")

BUILTINS = {q.name: q for q in (A1, A2, A3, B2, C2, G2, A1xA1)}
