"""Membership in the stability domain D(gamma) for P_3 in 1 <- 2 <- 3.

dim T + eps * v with T = I_2 and v = dim S_2[1] is (0, 1 - eps, 1); it stays in
D(gamma) exactly while eps <= 1, when the subroot S_1 starts to pair positively.
"""
from fractions import Fraction

from clustermorph.modcat import WideSubcat
from clustermorph.quiver import A3
from clustermorph.stability import in_stability_domain, subroots

gamma = (1, 1, 1)
full = WideSubcat.full(A3)
print("subroots of", gamma, sorted(subroots(A3, gamma)))
for eps in (Fraction(1, 8), Fraction(1, 2), Fraction(1), Fraction(3, 2), Fraction(2)):
    v = (0, 1 - eps, 1)
    verdict = in_stability_domain(full, gamma, v)
    extra = "" if verdict else f"  ({verdict.violated}: {verdict.witness} gives {verdict.value})"
    print(f"eps = {str(eps):>4}: v = ({', '.join(map(str, v))}) member = {verdict.member}{extra}")
