"""Command-line interface.

Exit status: 0 on success, 1 on domain errors (JSON object on stderr),
2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from . import __version__
from .cluster import PartialClusterTiltingSet, enumerate_tilting_sets, mutate
from .cvec import (
    c_vectors,
    c_vectors_by_twist,
    check_exchange_equals_bijective,
    good_permutation,
    speyer_thomas_check,
)
from .errors import ClusterMorphError
from .exseq import (
    OrderedClusterTiltingSet,
    SignedExcSeq,
    enumerate_signed_seqs,
    theta,
    theta_inverse,
)
from .modcat import ClusterObject, WideSubcat, enumerate_wide_subcats
from .picture import ConvexRootSet, hnn_tower, is_convex, presentation
from .quiver import BUILTINS, QuiverSpec, load_quiver, positive_roots, validate_finite_type
from .stability import in_stability_domain
from .topology import (
    HomologyResult,
    chain_complex,
    cluster_complex,
    homology,
    picture_subcomplex,
)


class DomainError(Exception):
    pass


def _json_arg(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise argparse.ArgumentTypeError(f"invalid JSON: {exc.msg}") from exc


def _quiver(source: str) -> QuiverSpec:
    if source in BUILTINS and not Path(source).exists():
        return BUILTINS[source]
    p = Path(source)
    if not p.is_file():
        raise DomainError(f"quiver file not found: {source}")
    return load_quiver(p)


def _vec(v, n: int) -> tuple[int, ...]:
    if not isinstance(v, list) or len(v) != n or not all(isinstance(x, int) and not isinstance(x, bool) for x in v):
        raise DomainError(f"expected an integer vector of length {n}, got {v!r}")
    return tuple(v)


def _objects(data, n: int) -> list[ClusterObject]:
    if not isinstance(data, list):
        raise DomainError("expected a JSON list of signed vectors")
    out = []
    for v in data:
        try:
            out.append(ClusterObject.from_signed(_vec(v, n)))
        except ValueError as exc:
            raise DomainError(str(exc)) from exc
    return out


def _wide(q: QuiverSpec, data) -> WideSubcat:
    if data is None:
        return WideSubcat.full(q)
    if not isinstance(data, list):
        raise DomainError("--wide must be a JSON list of simple roots")
    return WideSubcat(q, tuple(_vec(v, q.n) for v in data))


def _roots(q: QuiverSpec, data) -> ConvexRootSet:
    if data is None:
        return ConvexRootSet.full(q)
    if not isinstance(data, list):
        raise DomainError("--roots must be a JSON list of roots")
    return ConvexRootSet(q, tuple(_vec(v, q.n) for v in data))


def _signed(o: ClusterObject) -> list[int]:
    return list(o.dim())


def _rational(x) -> list[int]:
    x = Fraction(x)
    return [x.numerator, x.denominator]


def _parse_rational(x) -> Fraction:
    if isinstance(x, int) and not isinstance(x, bool):
        return Fraction(x)
    if isinstance(x, list) and len(x) == 2 and all(isinstance(y, int) for y in x) and x[1] != 0:
        return Fraction(x[0], x[1])
    if isinstance(x, str):
        try:
            return Fraction(x)
        except ValueError:
            pass
    raise DomainError(f"cannot read {x!r} as a rational (use [numerator, denominator])")


# --- commands ------------------------------------------------------------------

def cmd_roots(q, args):
    return [list(r) for r in positive_roots(q)]


def cmd_wides(q, args):
    return [[list(s) for s in w.simples] for w in enumerate_wide_subcats(q)]


def cmd_clusters(q, args):
    a = _wide(q, args.wide)
    k = a.rank if args.size is None else args.size
    return [[_signed(o) for o in t.objects] for t in enumerate_tilting_sets(a, k)]


def cmd_mutate(q, args):
    a = _wide(q, args.wide)
    t = PartialClusterTiltingSet(a, tuple(_objects(args.cluster, q.n)))
    (at,) = _objects([args.at], q.n)
    if at not in t.objects:
        raise DomainError(f"{_signed(at)} is not in the cluster")
    return [_signed(o) for o in mutate(t, t.objects.index(at)).objects]


def cmd_theta(q, args):
    a = _wide(q, args.wide)
    return [_signed(o) for o in theta(SignedExcSeq(a, tuple(_objects(args.seq, q.n)))).items]


def cmd_theta_inv(q, args):
    a = _wide(q, args.wide)
    return [_signed(o) for o in theta_inverse(OrderedClusterTiltingSet(a, tuple(_objects(args.cluster, q.n)))).items]


def cmd_seqs(q, args):
    a = _wide(q, args.wide)
    k = a.rank if args.size is None else args.size
    return [[_signed(o) for o in s.items] for s in enumerate_signed_seqs(a, k)]


def cmd_cvec(q, args):
    a = _wide(q, args.wide)
    t = OrderedClusterTiltingSet(a, tuple(_objects(args.cluster, q.n)))
    c = c_vectors(t)
    v = check_exchange_equals_bijective(t)
    perm = good_permutation(t.unordered())
    objs = t.unordered().objects
    good = OrderedClusterTiltingSet(a, tuple(objs[i] for i in perm))
    return {
        "c_vectors": [list(x) for x in c.vectors],
        "c_vectors_local": [list(x) for x in c.local],
        "exchange_check": {
            "condition_holds": v.condition_holds,
            "first_failure": None if v.first_failure is None else [i + 1 for i in v.first_failure],
            "equality_verified": v.equality_verified,
        },
        "good_order": [_signed(o) for o in good.items],
        "good_order_c_vectors": [list(x) for x in c_vectors_by_twist(good)],
        "speyer_thomas": speyer_thomas_check(a, c.vectors),
    }


def cmd_group(q, args):
    p = presentation(_roots(q, args.roots))
    if args.format == "text":
        return p.to_text()
    return {
        "generators": [list(g) for g in p.generators],
        "relations": [{"left": [list(x) for x in r.left], "right": [list(x) for x in r.right]} for r in p.relations],
    }


def cmd_hnn(q, args):
    return hnn_tower(_roots(q, args.roots))


def cmd_convex_check(q, args):
    roots = [_vec(v, q.n) for v in args.roots]
    v = is_convex(q, roots)
    return {"convex": v.ok, "witness": None if v.witness is None else [list(r) for r in v.witness], "reason": v.reason}


def cmd_complex(q, args):
    c = chain_complex(_roots(q, args.roots))
    return {
        "cells": {str(k): [[list(s) for s in a.simples] for a in cells] for k, cells in enumerate(c.cells)},
        "boundaries": {str(k): [list(r) for r in c.boundaries[k]] for k in range(1, len(c.cells))},
    }


def cmd_homology(q, args):
    h = homology(chain_complex(_roots(q, args.roots)))
    out = {f"H{d}": HomologyResult.describe(b, t) for d, b, t in h.groups}
    out["betti"] = [b for _, b, _ in h.groups]
    out["torsion"] = [list(t) for _, _, t in h.groups]
    return out


def cmd_cluster_complex(q, args):
    a = _wide(q, args.wide)
    c = cluster_complex(a)
    if args.dot:
        label = {f: json.dumps([_signed(c.vertices[i]) for i in f], separators=(",", ":")) for f in c.facets}
        lines = ["graph exchange {"]
        for f in c.facets:
            lines.append(f'  "{label[f]}";')
        for i, f in enumerate(c.facets):
            for g in c.facets[i + 1:]:
                if len(set(f) & set(g)) == a.rank - 1:
                    lines.append(f'  "{label[f]}" -- "{label[g]}";')
        lines.append("}")
        return "\n".join(lines) + "\n"
    return {"vertices": [_signed(v) for v in c.vertices], "facets": [list(f) for f in c.facets]}


def cmd_picture_subcomplex(q, args):
    a = _wide(q, args.wide)
    c = picture_subcomplex(a, _vec(args.beta, q.n))
    return {
        "vertices": [_signed(v) for v in c.vertices],
        "facets": [list(f) for f in c.facets],
        "signs": [
            {"simplex": [_signed(c.vertices[i]) for i in tau],
             "completions": [{"object": _signed(o), "sign": s} for o, s in entries]}
            for tau, entries in sorted(c.signs.items())
        ],
    }


def cmd_stability(q, args):
    a = _wide(q, args.wide)
    if not isinstance(args.v, list) or len(args.v) != q.n:
        raise DomainError(f"--v must list {q.n} rationals")
    v = [_parse_rational(x) for x in args.v]
    r = in_stability_domain(a, _vec(args.gamma, q.n), v)
    return {
        "member": r.member,
        "violated": r.violated,
        "witness": None if r.witness is None else list(r.witness),
        "value": None if r.value is None else _rational(r.value),
    }


COMMANDS = {
    "roots": cmd_roots,
    "wides": cmd_wides,
    "clusters": cmd_clusters,
    "mutate": cmd_mutate,
    "theta": cmd_theta,
    "theta-inv": cmd_theta_inv,
    "seqs": cmd_seqs,
    "cvec": cmd_cvec,
    "group": cmd_group,
    "hnn": cmd_hnn,
    "convex-check": cmd_convex_check,
    "complex": cmd_complex,
    "homology": cmd_homology,
    "cluster-complex": cmd_cluster_complex,
    "picture-subcomplex": cmd_picture_subcomplex,
    "stability": cmd_stability,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="clustermorph", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, help_text, *, wide=False, roots=None):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("quiver", help="quiver JSON file, or a built-in name (" + ", ".join(BUILTINS) + ")")
        if wide:
            p.add_argument("--wide", type=_json_arg, help="simple roots of the wide subcategory (default: all)")
        if roots == "optional":
            p.add_argument("--roots", type=_json_arg, help="convex root set (default: all positive roots)")
        elif roots == "required":
            p.add_argument("--roots", type=_json_arg, required=True, help="root set to check")
        return p

    add("roots", "list the positive roots")
    add("wides", "list every wide subcategory by its simples")
    add("clusters", "enumerate cluster tilting sets", wide=True).add_argument("--size", type=int)
    p = add("mutate", "mutate a complete cluster tilting set", wide=True)
    p.add_argument("--cluster", type=_json_arg, required=True)
    p.add_argument("--at", type=_json_arg, required=True, help="signed vector of the object to replace")
    add("theta", "signed exceptional sequence to ordered cluster", wide=True).add_argument(
        "--seq", type=_json_arg, required=True)
    add("theta-inv", "ordered cluster to signed exceptional sequence", wide=True).add_argument(
        "--cluster", type=_json_arg, required=True)
    add("seqs", "enumerate signed exceptional sequences", wide=True).add_argument("--size", type=int)
    add("cvec", "c-vectors of an ordered cluster tilting set", wide=True).add_argument(
        "--cluster", type=_json_arg, required=True)
    add("group", "picture group presentation", roots="optional").add_argument(
        "--format", choices=("json", "text"), default="json")
    add("hnn", "recursive HNN decomposition", roots="optional")
    add("convex-check", "test a root set for convexity", roots="required")
    add("complex", "cellular chain complex of the picture space", roots="optional")
    add("homology", "integral homology of the picture space", roots="optional")
    add("cluster-complex", "facets of the cluster complex", wide=True).add_argument(
        "--dot", action="store_true", help="emit the exchange graph in DOT")
    add("picture-subcomplex", "picture subcomplex with normal signs", wide=True).add_argument(
        "--beta", type=_json_arg, required=True)
    p = add("stability", "stability-domain membership", wide=True)
    p.add_argument("--gamma", type=_json_arg, required=True)
    p.add_argument("--v", type=_json_arg, required=True, help="rationals as [numerator, denominator] pairs")
    return parser


def _dump(obj, indent: int = 0) -> str:
    """JSON with short containers kept on one line."""
    flat = json.dumps(obj, separators=(", ", ": "))
    if not isinstance(obj, (list, dict)) or len(flat) + indent <= 78:
        return flat
    pad = " " * (indent + 2)
    if isinstance(obj, list):
        inner = ",\n".join(pad + _dump(x, indent + 2) for x in obj)
        return "[\n" + inner + "\n" + " " * indent + "]"
    inner = ",\n".join(f"{pad}{json.dumps(k)}: {_dump(v, indent + 2)}" for k, v in obj.items())
    return "{\n" + inner + "\n" + " " * indent + "}"


def render(result) -> str:
    if isinstance(result, str):
        return result
    return _dump(result) + "\n"


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        q = _quiver(args.quiver)
        validate_finite_type(q)
        result = COMMANDS[args.command](q, args)
    except (ClusterMorphError, DomainError, ValueError) as exc:
        stderr.write(json.dumps({"error": type(exc).__name__, "message": str(exc)}) + "\n")
        return 1
    stdout.write(render(result))
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
