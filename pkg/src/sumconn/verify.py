"""Brute-force verification of the closed-form maxima and rankings.

Every claim is re-derived from scratch: the relevant family is enumerated
exhaustively, exact index values are compared, and the argmax set is
matched against the characterized extremal family by canonical code.
Comparisons are exact throughout; floats appear only in serialized
reports.
"""

from __future__ import annotations

import random
import statistics
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .bounds import TopTwoBound, tree_max_bound, unicyclic_max_bound, unicyclic_top_two
from .canon import canonical_code, canonical_form
from .construct import (
    GraphClassSpec,
    attach_path,
    cycle_spider_family,
    spider_family,
    tree_extremal,
    unicyclic_extremal,
)
from .enumeration import enumerate_trees, enumerate_unicyclic
from .graph6 import emit_graph6
from .graphs import Graph, graph_from_edges, is_unicyclic, unique_cycle
from .indices import product_connectivity, sum_connectivity
from .radicals import RadicalValue
from .transforms import merge_pendant_paths, reattach_to_pendant


class FamilyTooSmallError(ValueError):
    """Raised when a statistic needs more graphs than the family holds."""


def degree_two_attachment_count(g: Graph) -> int:
    """Count of degree-2 neighbors of a maximum-degree vertex.

    For unicyclic graphs, neighbors along the cycle are excluded, so the
    count reflects attached paths only.  With several maximum-degree
    vertices the largest count is reported.
    """
    deg = g.degrees()
    top = max(deg)
    cycle = set(unique_cycle(g)) if is_unicyclic(g) else set()
    best = 0
    for v in range(g.n):
        if deg[v] != top:
            continue
        skip = cycle if v in cycle else set()
        k = sum(1 for w in g.adjacency[v] if deg[w] == 2 and w not in skip)
        best = max(best, k)
    return best


@dataclass
class ExtremalReport:
    """Outcome of one family verification."""

    spec: GraphClassSpec
    class_size: int
    formula_value: RadicalValue
    brute_max: RadicalValue | None
    argmax: tuple[Graph, ...]
    expected: tuple[Graph, ...]
    value_match: bool
    set_match: bool
    bound_holds: bool
    k_profile: dict[str, int]

    @property
    def passed(self) -> bool:
        return self.class_size > 0 and self.value_match and self.set_match and self.bound_holds

    def to_json_dict(self) -> dict:
        return {
            "kind": "extremal",
            "class": self.spec.graph_class,
            "n": self.spec.n,
            "delta": self.spec.delta,
            "class_size": self.class_size,
            "formula": self.formula_value.to_json_dict(),
            "brute_max": None if self.brute_max is None else self.brute_max.to_json_dict(),
            "argmax": sorted(emit_graph6(canonical_form(g)) for g in self.argmax),
            "expected": sorted(emit_graph6(canonical_form(g)) for g in self.expected),
            "match": {"value": self.value_match, "set": self.set_match},
            "bound_holds": self.bound_holds,
            "k_profile": dict(sorted(self.k_profile.items())),
            "passed": self.passed,
        }


def _exact_argmax(graphs: Iterable[Graph]) -> tuple[RadicalValue | None, list[Graph]]:
    best: RadicalValue | None = None
    argmax: list[Graph] = []
    for g in graphs:
        value = sum_connectivity(g)
        if best is None or value > best:
            best = value
            argmax = [g]
        elif value == best:
            argmax.append(g)
    return best, argmax


def _verify_family(
    spec: GraphClassSpec,
    members: list[Graph],
    formula: RadicalValue,
    expected: list[Graph],
) -> ExtremalReport:
    brute, argmax = _exact_argmax(members)
    expected_codes = {canonical_code(g) for g in expected}
    argmax_codes = {canonical_code(g) for g in argmax}
    return ExtremalReport(
        spec=spec,
        class_size=len(members),
        formula_value=formula,
        brute_max=brute,
        argmax=tuple(argmax),
        expected=tuple(expected),
        value_match=brute is not None and brute == formula,
        set_match=len(members) > 0 and argmax_codes == expected_codes,
        bound_holds=brute is not None and brute <= formula,
        k_profile={
            emit_graph6(canonical_form(g)): degree_two_attachment_count(g) for g in argmax
        },
    )


def expected_tree_family(n: int, delta: int) -> list[Graph]:
    if delta >= (n + 1) // 2:
        return [tree_extremal(n, delta)]
    return spider_family(n, delta)


def expected_unicyclic_family(n: int, delta: int) -> list[Graph]:
    if delta >= (n + 3) // 2:
        return [unicyclic_extremal(n, delta)]
    return cycle_spider_family(n, delta)


def verify_tree_max(n: int, delta: int) -> ExtremalReport:
    """Check the tree maximum: enumerate, take the exact argmax, compare
    value and argmax set against the closed form and its extremal family."""
    if not 3 <= n <= 12:
        raise ValueError(f"tree verification supports 3 <= n <= 12, got {n}")
    spec = GraphClassSpec(n=n, delta=delta, graph_class="tree")
    return _verify_family(
        spec,
        enumerate_trees(n, delta),
        tree_max_bound(n, delta),
        expected_tree_family(n, delta),
    )


def verify_unicyclic_max(n: int, delta: int) -> ExtremalReport:
    """Unicyclic counterpart of :func:`verify_tree_max`."""
    if not 3 <= n <= 11:
        raise ValueError(f"unicyclic verification supports 3 <= n <= 11, got {n}")
    spec = GraphClassSpec(n=n, delta=delta, graph_class="unicyclic")
    return _verify_family(
        spec,
        enumerate_unicyclic(n, delta),
        unicyclic_max_bound(n, delta),
        expected_unicyclic_family(n, delta),
    )


@dataclass
class TopTwoReport:
    """Outcome of the exhaustive top-two ranking check."""

    n: int
    total: int
    first_value: RadicalValue
    first: tuple[Graph, ...]
    second_value: RadicalValue
    second: tuple[Graph, ...]
    expected: TopTwoBound
    first_value_match: bool
    first_set_match: bool
    second_value_match: bool
    second_set_match: bool

    @property
    def passed(self) -> bool:
        return (
            self.first_value_match
            and self.first_set_match
            and self.second_value_match
            and self.second_set_match
        )

    def to_json_dict(self) -> dict:
        return {
            "kind": "top_two",
            "n": self.n,
            "total": self.total,
            "first": {
                "value": self.first_value.to_json_dict(),
                "graphs": sorted(emit_graph6(canonical_form(g)) for g in self.first),
            },
            "second": {
                "value": self.second_value.to_json_dict(),
                "graphs": sorted(emit_graph6(canonical_form(g)) for g in self.second),
            },
            "match": {
                "first_value": self.first_value_match,
                "first_set": self.first_set_match,
                "second_value": self.second_value_match,
                "second_set": self.second_set_match,
            },
            "passed": self.passed,
        }


def verify_top_two(n: int) -> TopTwoReport:
    """Rank every n-vertex unicyclic graph by exact index value and compare
    the two leading groups against the closed-form prediction."""
    if not 4 <= n <= 11:
        raise ValueError(f"top-two verification supports 4 <= n <= 11, got {n}")
    members = enumerate_unicyclic(n)
    groups: dict[RadicalValue, list[Graph]] = {}
    for g in members:
        groups.setdefault(sum_connectivity(g), []).append(g)
    ranked = sorted(groups, reverse=True)
    first_value, second_value = ranked[0], ranked[1]
    first, second = groups[first_value], groups[second_value]
    expected = unicyclic_top_two(n)
    codes = lambda gs: {canonical_code(g) for g in gs}
    return TopTwoReport(
        n=n,
        total=len(members),
        first_value=first_value,
        first=tuple(first),
        second_value=second_value,
        second=tuple(second),
        expected=expected,
        first_value_match=first_value == expected.first_value,
        first_set_match=codes(first) == codes(expected.first_graphs),
        second_value_match=second_value == expected.second_value,
        second_set_match=codes(second) == codes(expected.second_graphs),
    )


# -- randomized transform checks ----------------------------------------------


@dataclass
class MonotonicityReport:
    """Counterexample tally for the two index-increasing rewrites."""

    merge_trials: int
    merge_violations: list[str] = field(default_factory=list)
    reattach_trials: int = 0
    reattach_violations: list[str] = field(default_factory=list)
    warning: str | None = None

    @property
    def passed(self) -> bool:
        return not self.merge_violations and not self.reattach_violations

    def to_json_dict(self) -> dict:
        return {
            "kind": "monotonicity",
            "merge": {"trials": self.merge_trials, "violations": self.merge_violations},
            "reattach": {
                "trials": self.reattach_trials,
                "violations": self.reattach_violations,
            },
            "warning": self.warning,
            "passed": self.passed,
        }


def _random_connected_base(rng: random.Random, n: int, allow_cycle: bool = True) -> Graph:
    """Random tree from a uniform parent array, plus an optional chord."""
    edges = [(rng.randrange(v), v) for v in range(1, n)]
    tree = graph_from_edges(n, edges)
    if allow_cycle and n >= 3 and rng.random() < 0.5:
        non_edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if v not in tree.adjacency[u]
        ]
        if non_edges:
            chord = rng.choice(non_edges)
            return graph_from_edges(n, list(tree.edges) + [chord])
    return tree


def transform_monotonicity_suite(
    trials: int, seed: int = 0, max_n: int = 12
) -> MonotonicityReport:
    """Generate random valid rewrite instances and check that each rewrite
    strictly increases the exact sum-connectivity index.

    With ``trials = 0`` the report passes vacuously and carries a warning.
    """
    if trials < 0:
        raise ValueError("trials must be nonnegative")
    rng = random.Random(seed)
    report = MonotonicityReport(merge_trials=trials, reattach_trials=trials)
    if trials == 0:
        report.warning = "no trials requested; vacuous pass"
        return report

    for _ in range(trials):
        base_n = rng.randint(2, max_n - 2)
        base = _random_connected_base(rng, base_n)
        u = rng.randrange(base_n)
        budget = max_n - base_n
        a = rng.randint(1, budget - 1)
        b = rng.randint(1, budget - a)
        g = attach_path(attach_path(base, u, a), u, b)
        p1 = base_n + a - 1
        p2 = base_n + a + b - 1
        merged = merge_pendant_paths(g, u, p1, p2)
        if not sum_connectivity(merged) > sum_connectivity(g):
            report.merge_violations.append(emit_graph6(g))

    for _ in range(trials):
        h = None
        for _attempt in range(200):
            base_n = rng.randint(3, max_n - 1)
            base = _random_connected_base(rng, base_n)
            candidates = [
                v
                for v in range(base_n)
                if base.degree(v) == 2
                and min(base.degree(w) for w in base.adjacency[v]) <= 4
            ]
            if not candidates:
                continue
            u = rng.choice(candidates)
            a = rng.randint(1, max_n - base_n)
            h = attach_path(base, u, a)
            u_prime = base_n + a - 1
            u2 = rng.choice(sorted(w for w in base.adjacency[u]))
            break
        if h is None:
            raise RuntimeError("failed to sample a rewrite instance")
        rewired = reattach_to_pendant(h, u, u2, u_prime)
        if not sum_connectivity(rewired) > sum_connectivity(h):
            report.reattach_violations.append(emit_graph6(h))

    return report


# -- correlation --------------------------------------------------------------


def chi_r_correlation(n: int, max_delta: int | None = None) -> float:
    """Pearson correlation of the two indices over enumerated trees on n
    vertices with maximum degree at most ``max_delta``."""
    if not 4 <= n <= 14:
        raise ValueError(f"correlation supports 4 <= n <= 14, got {n}")
    delta_filter = None if max_delta is None else (1, max_delta)
    members = enumerate_trees(n, delta_filter)
    if len(members) < 3:
        raise FamilyTooSmallError(
            f"need at least 3 graphs, family has {len(members)}"
        )
    chis = [float(sum_connectivity(g)) for g in members]
    rs = [float(product_connectivity(g)) for g in members]
    return statistics.correlation(chis, rs)


# -- sweeps --------------------------------------------------------------------


@dataclass
class SweepResult:
    """Reports for a full run over verification ranges."""

    tree_reports: list[ExtremalReport]
    unicyclic_reports: list[ExtremalReport]
    top_two_reports: list[TopTwoReport]

    @property
    def passed(self) -> bool:
        return all(
            r.passed
            for r in (*self.tree_reports, *self.unicyclic_reports, *self.top_two_reports)
        )

    def to_json_dict(self) -> dict:
        return {
            "kind": "sweep",
            "tree": [r.to_json_dict() for r in self.tree_reports],
            "unicyclic": [r.to_json_dict() for r in self.unicyclic_reports],
            "top_two": [r.to_json_dict() for r in self.top_two_reports],
            "passed": self.passed,
        }


def run_sweeps(
    tree_ns: Iterable[int] = range(4, 13),
    unicyclic_ns: Iterable[int] = range(4, 12),
    top_two_ns: Iterable[int] = range(4, 12),
    threads: int = 1,
) -> SweepResult:
    """Run every verification in the standard ranges.

    Tasks are independent; with ``threads > 1`` they are dispatched to a
    thread pool and the reports are still returned in task order.
    """
    tree_tasks = [(n, d) for n in tree_ns for d in range(2, n)]
    uni_tasks = [(n, d) for n in unicyclic_ns for d in range(2, n)]
    top_tasks = list(top_two_ns)

    def run_all(fn: Callable, tasks: list):
        if threads > 1:
            from concurrent.futures import ThreadPoolExecutor

            with ThreadPoolExecutor(max_workers=threads) as pool:
                return list(pool.map(lambda t: fn(*t) if isinstance(t, tuple) else fn(t), tasks))
        return [fn(*t) if isinstance(t, tuple) else fn(t) for t in tasks]

    return SweepResult(
        tree_reports=run_all(verify_tree_max, tree_tasks),
        unicyclic_reports=run_all(verify_unicyclic_max, uni_tasks),
        top_two_reports=run_all(verify_top_two, top_tasks),
    )
