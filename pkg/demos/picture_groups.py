"""Picture-group presentations and the HNN splitting for rank-2 root systems."""
from clustermorph.picture import ConvexRootSet, abelianization, hnn_data, presentation
from clustermorph.quiver import A1xA1, A2, B2, C2

for q in (A1xA1, A2, B2, C2):
    s = ConvexRootSet.full(q)
    p = presentation(s)
    ab = abelianization(p)
    print(f"{q.name}: {p.to_text().splitlines()[-1]}")
    print(f"  abelianization: Z^{ab.free_rank}" + "".join(f" + Z/{t}" for t in ab.torsion))

h = hnn_data(ConvexRootSet.full(C2))
print(f"\nC2 splits off omega = {h.omega}; S_omega = {list(h.s_omega.roots)}")
for a, word in h.psi:
    print(f"  psi(x{a}) = " + " ".join(f"x{g}" for g, _ in word))
