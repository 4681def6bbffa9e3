"""Integral homology of picture spaces via the cellular chain complex."""
from clustermorph.picture import ConvexRootSet
from clustermorph.quiver import A1xA1, A2, A3, B2, C2
from clustermorph.topology import HomologyResult, chain_complex, homology

cases = [
    ("two orthogonal roots (torus)", ConvexRootSet.full(A1xA1)),
    ("one root (circle)", ConvexRootSet(A2, [(1, 1)])),
    ("A2", ConvexRootSet.full(A2)),
    ("A3", ConvexRootSet.full(A3)),
    ("B2", ConvexRootSet.full(B2)),
    ("C2", ConvexRootSet.full(C2)),
]
for label, s in cases:
    c = chain_complex(s)
    groups = ", ".join(HomologyResult.describe(b, t) for _, b, t in homology(c).groups)
    print(f"{label:<30} cells {[len(x) for x in c.cells]}  H_* = ({groups})")
