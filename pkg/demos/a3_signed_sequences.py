"""Walk through the eight sign choices on the simples of 1 <- 2 <- 3.

Each signed exceptional sequence is sent to an ordered cluster tilting set,
then recovered from it by the right twist.
"""
from itertools import product

from clustermorph.exseq import SignedExcSeq, theta, theta_inverse
from clustermorph.modcat import ClusterObject, WideSubcat
from clustermorph.quiver import A3

full = WideSubcat.full(A3)
simples = [(0, 0, 1), (0, 1, 0), (1, 0, 0)]  # S3, S2, S1

print(f"{'signed sequence':<44} ordered cluster tilting set")
clusters = set()
for signs in product([False, True], repeat=3):
    seq = SignedExcSeq(full, tuple(ClusterObject(s, r) for s, r in zip(signs, simples)))
    cluster = theta(seq)
    assert theta_inverse(cluster) == seq
    clusters.add(frozenset(cluster.items))
    print(f"{str(list(seq.items)):<44} {list(cluster.items)}")

print(f"\n{len(clusters)} distinct unordered clusters")
