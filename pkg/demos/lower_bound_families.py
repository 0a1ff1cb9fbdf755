"""Build the lower-bound families and certify their weak coloring numbers.

For each family we generate the base representation, blow it up along a
complete m-ary tree, and check that random orderings cannot push the weak
radius-2k coloring number below the promised value.
"""

from wcolgeo import build_theorem_lb_instance, colnum_ordered, sizewise_order, wcol_exact
from wcolgeo.instances import random_ordering, sample_rng

for kind, k, t, d in [("F", 1, None, None), ("H", 1, 1, None), ("H", 1, None, 1), ("H", 2, 2, None)]:
    inst = build_theorem_lb_instance(kind, k, t=t, d=d)
    A = inst.scaffold.graph
    print(f"family {kind} k={k} t={inst.t} d={d}: base has {len(inst.prime)} objects, "
          f"scaffold has {A.n} vertices and {A.m} edges")

    # every vertex of the base family weakly k-reaches all the others
    print("  sizewise wcol_k of the base:", colnum_ordered(inst.prime_graph, inst.ordering, k))

    target = inst.expected
    if inst.boxes is not None:
        sized = colnum_ordered(A, sizewise_order(inst.boxes), inst.radius, at_least=target)
        print(f"  sizewise ordering of the boxes reaches {sized} >= {target}")
    lows = [colnum_ordered(A, random_ordering(A.n, sample_rng(0, kind, i)), inst.radius, at_least=target)
            for i in range(50)]
    print(f"  50 random orderings: all >= {target}: {min(lows) >= target}")
    if A.n <= 16:
        res = wcol_exact(A, inst.radius)
        print(f"  exact wcol_{inst.radius} = {res.value} (search nodes: {res.nodes})")
    if inst.lifted is not None:
        print(f"  lifted to touching hypercubes in dimension {inst.lifted.dimension}")
