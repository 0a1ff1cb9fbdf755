"""Compare the closed-form bounds with what random thin families actually reach."""

from wcolgeo import BoundCase, scol_upper, thm_weak_upper, wcol_recurrence_upper
from wcolgeo.graph import intersection_graph, sizewise_order
from wcolgeo.instances import random_thin_cubes, sample_rng
from wcolgeo.reach import colnum_ordered

d = 2
print("t  k  scol_bound  observed  wcol_recurrence  wcol_bound  observed")
for t in (1, 2):
    case = BoundCase.central(t, d)
    reps = [random_thin_cubes(40, t, d, sample_rng(1, t, i), sides=(1, 2, 3), extent=10) for i in range(20)]
    graphs = [(intersection_graph(r), sizewise_order(r)) for r in reps]
    for k in (1, 2, 3):
        s_obs = max(colnum_ordered(g, o, k, "strong") for g, o in graphs)
        w_obs = max(colnum_ordered(g, o, k, "weak") for g, o in graphs)
        rec = wcol_recurrence_upper([scol_upper(case, i) for i in range(1, k + 1)])
        print(f"{t}  {k}  {scol_upper(case, k):>10}  {s_obs:>8}  {rec:>15}  {thm_weak_upper(case, k):>10}  {w_obs:>8}")
