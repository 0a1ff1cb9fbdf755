"""Verification suites: randomized and exhaustive checks of the bounds.

Each suite returns a :class:`VerifyReport`. Samples draw from their own
seeded stream (see :func:`wcolgeo.instances.sample_rng`), so a report does
not depend on the number of worker processes.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Any, Callable, Iterable, Optional

from . import bounds
from .constructions import build_theorem_lb_instance, scaffold_size
from .exact import BudgetExhausted, scol_exact, wcol_exact
from .geometry import BudgetExceeded, pairwise_interiors_disjoint, thinness
from .graph import intersection_graph, sizewise_order
from .instances import (
    random_graph,
    random_ordering,
    random_thin_balls,
    random_thin_comparable_boxes,
    random_thin_cubes,
    random_w_bounded,
    sample_rng,
)
from .oracles import naive_decr
from .radius import PropertyPSpec, check_property_P, size_radius
from .reach import colnum_ordered, decr, decreasing_tree_depth, reach_sizes, verify_diameter_condition

SUITES = ("lemma1", "obs2", "ky", "pw", "propP", "lb")


@dataclass
class Check:
    name: str
    params: dict
    expected: str
    observed: str
    status: str  # PASS, FAIL or SKIP
    witness: Optional[dict] = None

    @property
    def passed(self) -> bool:
        return self.status != "FAIL"

    def line(self) -> str:
        params = " ".join(f"{k}={v}" for k, v in self.params.items())
        text = f"{self.status} {self.name} [{params}] expected {self.expected}; observed {self.observed}"
        if self.witness and self.status == "FAIL":
            text += f"; witness {self.witness}"
        return text


@dataclass
class VerifyReport:
    suite: str
    seed: int
    checks: list[Check] = field(default_factory=list)
    budgets: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name, params, expected, observed, passed: Optional[bool], witness=None) -> Check:
        status = "SKIP" if passed is None else ("PASS" if passed else "FAIL")
        chk = Check(name, dict(params), str(expected), str(observed), status, witness)
        self.checks.append(chk)
        return chk

    def to_text(self) -> str:
        head = f"suite {self.suite} seed={self.seed}"
        if self.budgets:
            head += " budgets " + " ".join(f"{k}={v}" for k, v in self.budgets.items())
        lines = [head] + [c.line() for c in self.checks]
        passed = sum(c.status == "PASS" for c in self.checks)
        skipped = sum(c.status == "SKIP" for c in self.checks)
        lines.append(f"{'PASS' if self.ok else 'FAIL'}: {passed} passed, {skipped} skipped, "
                     f"{len(self.checks) - passed - skipped} failed")
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {"suite": self.suite, "seed": self.seed, "ok": self.ok, "budgets": self.budgets,
                "checks": [asdict(c) for c in self.checks]}


def _map(fn: Callable, items: Iterable, threads: int) -> list:
    items = list(items)
    if threads <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * threads))))


# --- sizewise strong-coloring bound -------------------------------------------------


def _lemma1_sample(args):
    i, seed, objects, t, d, k, max_objects = args
    rng = sample_rng(seed, "lemma1", i)
    count = rng.randint(1, max_objects)
    # a tight box keeps the families dense, so the bound is actually exercised
    side = (count / t) ** (1 / d)
    if objects == "unit":
        rep = random_thin_cubes(count, t, d, rng, sides=(1,), extent=max(2, round(side)))
    elif objects == "cubes":
        rep = random_thin_cubes(count, t, d, rng, sides=(1, 2, 3), extent=max(3, round(2 * side)))
    elif objects == "boxes":
        rep = random_thin_comparable_boxes(count, t, d, rng)
    elif objects == "balls":
        rep = random_thin_balls(count, t, d, rng)
    else:
        raise ValueError(f"unknown object family {objects!r}")
    g = intersection_graph(rep)
    order = sizewise_order(rep)
    return i, len(rep), [colnum_ordered(g, order, kk, "strong") for kk in range(1, k + 1)]


def suite_lemma1(case: str = "a", t: int = 1, d: int = 2, k: int = 3, samples: int = 100, seed: int = 0,
                 objects: Optional[str] = None, b: Fraction = Fraction(1), max_objects: int = 40,
                 threads: int = 1) -> VerifyReport:
    """Random t-thin families under the sizewise ordering never exceed the strong bound."""
    if objects is None:
        objects = "balls" if case == "b" else "cubes"
    bc = bounds.BoundCase(case, t, d, Fraction(b))
    rep = VerifyReport("lemma1", seed, budgets={"max_objects": max_objects})
    results = _map(_lemma1_sample, [(i, seed, objects, t, d, k, max_objects) for i in range(samples)], threads)
    for kk in range(1, k + 1):
        bound = bounds.scol_upper(bc, kk)
        worst = max(results, key=lambda r: r[2][kk - 1])
        observed = worst[2][kk - 1]
        rep.add("sizewise scol <= scol_upper", {"case": case, "objects": objects, "t": t, "d": d, "k": kk,
                                                "samples": samples},
                f"<= {bound}", f"max {observed}", observed <= bound,
                {"sample": worst[0], "objects": worst[1]})
    return rep


# --- recurrence of weak by strong numbers ---------------------------------------------


def _obs2_sample(args):
    i, seed, n, k = args
    rng = sample_rng(seed, "obs2", i)
    if i % 2 == 0:
        g = random_graph(n, rng.uniform(0.15, 0.7), rng)
        order = random_ordering(n, rng)
    else:
        rep = random_thin_cubes(n, rng.randint(1, 3), 2, rng, sides=(1, 2))
        g = intersection_graph(rep)
        order = sizewise_order(rep)
    w = [max(reach_sizes(g, order, j, "weak")) for j in range(k + 1)]
    s = [None] + [max(reach_sizes(g, order, j, "strong")) for j in range(1, k + 1)]
    out = []
    for kk in range(1, k + 1):
        rhs = sum(s[j] * w[kk - j] for j in range(1, kk + 1))
        out.append((w[kk], rhs))
    return i, out


def suite_obs2(n: int = 10, k: int = 4, samples: int = 100, seed: int = 0, threads: int = 1) -> VerifyReport:
    """wcol_k <= sum_i scol_i * wcol_(k-i) for the same ordering."""
    rep = VerifyReport("obs2", seed)
    results = _map(_obs2_sample, [(i, seed, n, k) for i in range(samples)], threads)
    for kk in range(1, k + 1):
        bad = [(i, vals[kk - 1]) for i, vals in results if vals[kk - 1][0] > vals[kk - 1][1]]
        slack = min(vals[kk - 1][1] - vals[kk - 1][0] for _, vals in results)
        rep.add("wcol_k <= sum scol_i wcol_(k-i)", {"n": n, "k": kk, "samples": samples},
                "holds on every sample", f"{len(bad)} violations, min slack {slack}", not bad,
                {"sample": bad[0][0], "lhs_rhs": bad[0][1]} if bad else None)
    return rep


# --- weak vs strong coloring numbers, exactly ---------------------------------------


def _ky_sample(args):
    i, seed, n, k, budget = args
    rng = sample_rng(seed, "ky", i)
    g = random_graph(n, rng.uniform(0.2, 0.8), rng)
    rows = []
    for kk in range(1, k + 1):
        w = wcol_exact(g, kk, budget).value
        s = scol_exact(g, kk, budget).value
        rows.append((w, s))
    return i, g.edges(), rows


def suite_ky(n: int = 6, k: int = 3, samples: int = 50, seed: int = 0, budget: int = 200_000,
             threads: int = 1) -> VerifyReport:
    """scol_k <= wcol_k <= scol_k^k with both sides minimised exactly."""
    rep = VerifyReport("ky", seed, budgets={"nodes": budget})
    results = _map(_ky_sample, [(i, seed, n, k, budget) for i in range(samples)], threads)
    for kk in range(1, k + 1):
        bad = [(i, e, rows[kk - 1]) for i, e, rows in results
               if not rows[kk - 1][1] <= rows[kk - 1][0] <= rows[kk - 1][1] ** kk]
        rep.add("scol_k <= wcol_k <= scol_k^k", {"n": n, "k": kk, "samples": samples},
                "holds on every sample", f"{len(bad)} violations", not bad,
                {"sample": bad[0][0], "edges": bad[0][1], "wcol_scol": bad[0][2]} if bad else None)
    return rep


# --- decreasing paths under bounded vertex separation -------------------------------


def _pw_sample(args):
    i, seed, n, w, k = args
    rng = sample_rng(seed, "pw", i)
    ww = rng.randint(1, w)
    g, order = random_w_bounded(n, ww, rng, density=rng.uniform(0.3, 0.9))
    sizes, agree = [], True
    for kk in range(1, k + 1):
        sets = [decr(g, order, kk, v) for v in range(g.n)]
        agree = agree and all(sets[v] == naive_decr(g, order, kk, v) for v in range(g.n))
        sizes.append(max(len(s) for s in sets))
    return i, ww, sizes, agree, g.edges(), list(order.sequence)


def suite_pw(n: int = 12, w: int = 3, k: int = 4, samples: int = 200, seed: int = 0,
             threads: int = 1) -> VerifyReport:
    """|decr_k(v)| <= C(k+w, w) when at most w earlier vertices reach past any point."""
    rep = VerifyReport("pw", seed)
    results = _map(_pw_sample, [(i, seed, n, w, k) for i in range(samples)], threads)
    for kk in range(1, k + 1):
        bad = [r for r in results if r[2][kk - 1] > math.comb(kk + r[1], r[1])]
        rep.add("|decr_k| <= C(k+w, w)", {"n": n, "w_max": w, "k": kk, "samples": samples},
                "holds on every sample", f"{len(bad)} violations", not bad,
                {"sample": bad[0][0], "w": bad[0][1], "edges": bad[0][4], "ordering": bad[0][5]} if bad else None)
    disagree = [r for r in results if not r[3]]
    rep.add("decr agrees with path enumeration", {"n": n, "k_max": k, "samples": samples},
            "identical sets", f"{len(disagree)} disagreements", not disagree,
            {"sample": disagree[0][0], "edges": disagree[0][4], "ordering": disagree[0][5]} if disagree else None)
    return rep


# --- property P on the thin interval families ----------------------------------------


def suite_propP(kmax: int = 3, tmax: int = 3, p_max: int = 4, seed: int = 0) -> VerifyReport:
    """Thin interval families with r = length satisfy P(t(2p+3)^d, 1, t 5^d)."""
    from .constructions import gen_hprime

    rep = VerifyReport("propP", seed)
    for k in range(kmax + 1):
        for t in range(1, tmax + 1):
            prime = gen_hprime(k, t, math.comb(k + t, t))
            d = prime.dimension
            spec = PropertyPSpec.from_function(lambda p: t * (2 * p + 3) ** d, p_max, 1, t * 5**d)
            g = intersection_graph(prime)
            res = check_property_P(g, size_radius(prime), spec)
            witness = None
            if res.violations:
                v = res.violations[0]
                witness = {"condition": v.condition, "vertex": v.vertex, "s": v.s, "p": v.p,
                           "witnesses": v.witnesses}
            rep.add("property P(t(2p+3)^d, 1, t5^d)", {"family": "hprime", "k": k, "t": t, "p_max": p_max},
                    "no violations", res.summary(), res.ok, witness)
    return rep


# --- lower-bound families --------------------------------------------------------------


def _lb_sample(args):
    i, seed, g, radius, threshold = args
    order = random_ordering(g.n, sample_rng(seed, "lb", i))
    return i, colnum_ordered(g, order, radius, "weak", at_least=threshold)


def suite_lb(family: str = "F", k: int = 1, t: Optional[int] = None, d: Optional[int] = None,
             samples: int = 200, seed: int = 0, exact_max_n: int = 16, exact_budget: int = 2_000_000,
             thinness_budget: int = 10**6, threads: int = 1) -> VerifyReport:
    """The generated families reach their weak-coloring lower bound under every ordering tried."""
    inst = build_theorem_lb_instance(family, k, t=t, d=d)
    rep = VerifyReport("lb", seed, budgets={"exact_nodes": exact_budget, "exact_max_n": exact_max_n,
                                            "thinness_cells": thinness_budget})
    params: dict[str, Any] = {"family": family, "k": k}
    if inst.t is not None:
        params["t"] = inst.t
    if d is not None:
        params["d"] = d
    H, order, n_prime = inst.prime_graph, inst.ordering, len(inst.prime)
    want = 2 ** (k + 1) - 1 if family == "F" else math.comb(k + inst.t, inst.t)
    rep.add("generator size", params, want, n_prime, n_prime == want)
    wk = colnum_ordered(H, order, k, "weak")
    rep.add("sizewise wcol_k of the base family = |V|", params, n_prime, wk, wk == n_prime)
    depth = decreasing_tree_depth(H, order)
    rep.add("decreasing spanning tree depth <= k", params, f"<= {k}", depth, depth is not None and depth <= k)
    diam_ok = verify_diameter_condition(H, order, 2 * k)
    rep.add("suffixes connected with diameter <= 2k", params, True, diam_ok, diam_ok)

    A = inst.scaffold.graph
    size = scaffold_size(n_prime, inst.m)
    rep.add("scaffold size", {**params, "m": inst.m}, size, A.n, A.n == size)
    target = min(inst.m, wk)
    radius = inst.radius
    if inst.boxes is not None:
        same = intersection_graph(inst.boxes).edges() == A.edges()
        rep.add("box representation realises the scaffold", params, True, same, same)
        _thinness_check(rep, "box representation thinness", params, inst.boxes, inst.boxes.declared_thinness,
                        thinness_budget)
    if inst.lifted is not None:
        same = intersection_graph(inst.lifted).edges() == A.edges()
        rep.add("lifted hypercubes keep the graph", {**params, "dim": inst.lifted.dimension}, True, same, same)
        _thinness_check(rep, "lifted hypercubes are touching", params, inst.lifted, 1, thinness_budget)

    sized = colnum_ordered(A, sizewise_order(inst.boxes) if inst.boxes is not None else _level_order(inst),
                           radius, "weak", at_least=target)
    rep.add("wcol_2k >= bound (sizewise ordering)", {**params, "radius": radius}, f">= {target}", sized,
            sized >= target)
    results = _map(_lb_sample, [(i, seed, A, radius, target) for i in range(samples)], threads)
    low = min(results, key=lambda r: r[1]) if results else (None, target)
    bad = [r for r in results if r[1] < target]
    rep.add("wcol_2k >= bound (random orderings)", {**params, "radius": radius, "samples": samples},
            f">= {target} on all", f"{samples - len(bad)}/{samples} ok, min certified {low[1]}", not bad,
            {"ordering_sample": bad[0][0], "seed": seed} if bad else None)
    if A.n <= exact_max_n:
        try:
            res = wcol_exact(A, radius, exact_budget)
            rep.add("exact wcol_2k >= bound", {**params, "radius": radius, "n": A.n}, f">= {target}",
                    f"{res.value} ({res.nodes} nodes)", res.value >= target,
                    {"ordering": list(res.ordering.sequence)})
        except BudgetExhausted as exc:
            rep.add("exact wcol_2k >= bound", {**params, "radius": radius, "n": A.n}, f">= {target}",
                    f"budget exhausted, value in [{exc.lower}, {exc.upper}]", None)
    return rep


def _level_order(inst):
    from .graph import Ordering

    return Ordering.identity(inst.scaffold.graph.n)


def _thinness_check(rep: VerifyReport, name: str, params: dict, r, allowed: int, budget: int) -> None:
    try:
        th = thinness(r, budget)
        rep.add(name, params, f"<= {allowed}", th, th <= allowed)
    except BudgetExceeded:
        if allowed == 1:
            ok = pairwise_interiors_disjoint(r)
            rep.add(name, params, "pairwise disjoint interiors", ok, ok)
        else:
            rep.add(name, params, f"<= {allowed}", "grid over budget; not checked", None)


def run_suite(name: str, **kwargs) -> VerifyReport:
    fn = {"lemma1": suite_lemma1, "obs2": suite_obs2, "ky": suite_ky, "pw": suite_pw,
          "propP": suite_propP, "lb": suite_lb}.get(name)
    if fn is None:
        raise ValueError(f"unknown suite {name!r}; expected one of {SUITES}")
    return fn(**kwargs)
