"""c-vectors of A_2 clusters, computed two ways.

In a good order the linear-system c-vectors are the negated dimension
vectors of the signed exceptional sequence that the cluster comes from.
"""
from clustermorph.cluster import enumerate_tilting_sets
from clustermorph.cvec import c_vectors, c_vectors_by_twist, good_order
from clustermorph.exseq import theta_inverse
from clustermorph.modcat import WideSubcat
from clustermorph.quiver import A2

full = WideSubcat.full(A2)
for t in enumerate_tilting_sets(full, 2):
    ordered = good_order(t)
    c = c_vectors(ordered).vectors
    print(f"cluster {list(ordered.items)}")
    print(f"  c-vectors            {list(c)}")
    print(f"  minus twisted dims   {list(c_vectors_by_twist(ordered))}")
    print(f"  theta inverse        {list(theta_inverse(ordered).items)}")
