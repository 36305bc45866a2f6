"""Checkers for the directed and asymmetric Sidorenko properties.

Every comparison is exact rational arithmetic; reports carry the margin
(how far the instance is from violating the inequality) so a verdict can
always be recomputed from its witness.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import parallel
from .counting import t_directed, t_undirected
from .graphs import (
    BipartiteGraph,
    OrientedGraph,
    oriented_graph_count,
    oriented_graph_from_index,
    to_part_oriented,
    underlying,
)
from .stepgraphon import StepGraphon, random_graphon, t_bip_step, t_step

HOLDS = "holds-on-family"
VIOLATED = "violated"

DEFAULT_SEED = 0
DEFAULT_BATCH_DENOMINATOR = 64
INSTANCE_CAP = 10**6


@dataclass(frozen=True)
class CheckWitness:
    """One concrete instance: host object, both sides of the inequality,
    and the slack ``margin`` (negative exactly when the instance violates).

    ``relation`` records which way the checked inequality points, so the
    margin is lhs - rhs for ">=" checks and rhs - lhs for "<=" checks.
    """

    host: object
    lhs: Fraction
    rhs: Fraction
    margin: Fraction
    relation: str = ">="


@dataclass(frozen=True)
class CheckReport:
    property_name: str
    verdict: str
    witness: Optional[CheckWitness]
    instances_checked: int

    @property
    def violated(self) -> bool:
        return self.verdict == VIOLATED


def _report(name: str, min_margin: Optional[Fraction],
            witness: Optional[CheckWitness], checked: int) -> CheckReport:
    violated = min_margin is not None and min_margin < 0
    return CheckReport(
        property_name=name,
        verdict=VIOLATED if violated else HOLDS,
        witness=witness if violated else None,
        instances_checked=checked,
    )


# ---------------------------------------------------------------------------
# Directed Sidorenko: t(B, G) >= t(edge, G)^e(B)
# ---------------------------------------------------------------------------

def directed_sidorenko_margin(pattern: OrientedGraph, host: OrientedGraph) -> CheckWitness:
    lhs = t_directed(pattern, host)
    edge_density = Fraction(host.edge_count, host.vertex_count ** 2)
    rhs = edge_density ** pattern.edge_count
    return CheckWitness(host, lhs, rhs, lhs - rhs)


def _scan_host_range(task) -> tuple[Optional[Fraction], Optional[CheckWitness], int]:
    """Scan labeled hosts on n vertices with indices in [lo, hi); return the
    minimal margin (earliest host on ties), its witness, and the count."""
    pattern, n, lo, hi = task
    best_margin: Optional[Fraction] = None
    best_witness: Optional[CheckWitness] = None
    for index in range(lo, hi):
        host = oriented_graph_from_index(n, index)
        wit = directed_sidorenko_margin(pattern, host)
        if best_margin is None or wit.margin < best_margin:
            best_margin = wit.margin
            best_witness = wit
    return best_margin, best_witness, hi - lo


def check_directed_sidorenko_exhaustive(
    pattern: OrientedGraph,
    n_max: int,
    *,
    instance_cap: int = INSTANCE_CAP,
    workers: Optional[int] = None,
) -> CheckReport:
    """Test t(B,G) >= t(edge,G)^e(B) over all labeled oriented hosts with
    at most ``n_max`` vertices (up to ``instance_cap`` hosts).

    The reported witness is the host with the most negative margin, scanning
    hosts by vertex count and then by enumeration index; ties keep the
    earliest host, so results do not depend on the worker count.
    """
    workers = parallel.resolve_workers(workers)
    remaining = instance_cap
    tasks = []
    for n in range(1, n_max + 1):
        if remaining <= 0:
            break
        count = min(oriented_graph_count(n), remaining)
        remaining -= count
        for lo, hi in parallel.split_range(0, count, workers * 4):
            tasks.append((pattern, n, lo, hi))
    results = parallel.map_tasks(_scan_host_range, tasks, workers)

    best_margin: Optional[Fraction] = None
    best_witness: Optional[CheckWitness] = None
    checked = 0
    # Tasks are ordered by (host size, index range), and only strictly
    # smaller margins replace the incumbent, so ties keep the earliest host
    # regardless of the worker count.
    for margin, witness, count in results:
        checked += count
        if margin is not None and (best_margin is None or margin < best_margin):
            best_margin = margin
            best_witness = witness
    return _report("directed-sidorenko", best_margin, best_witness, checked)


def check_directed_sidorenko_graphon(pattern: OrientedGraph, w: StepGraphon) -> CheckReport:
    """Test t(B, W) >= (integral W)^e(B) for a single step graphon."""
    lhs = t_step(pattern, w)
    rhs = w.integral() ** pattern.edge_count
    wit = CheckWitness(w, lhs, rhs, lhs - rhs)
    return _report("directed-sidorenko-graphon", wit.margin, wit, 1)


def check_directed_sidorenko_random(
    pattern: OrientedGraph,
    *,
    instances: int = 1000,
    parts: int = 4,
    seed: int = DEFAULT_SEED,
    denominator: int = DEFAULT_BATCH_DENOMINATOR,
) -> CheckReport:
    """Batch the graphon check over seeded random rational graphons."""
    import random as _random

    rng = _random.Random(seed)
    best_margin: Optional[Fraction] = None
    best_witness: Optional[CheckWitness] = None
    for _ in range(instances):
        w = random_graphon(parts, rng=rng, denominator=denominator)
        lhs = t_step(pattern, w)
        rhs = w.integral() ** pattern.edge_count
        margin = lhs - rhs
        if best_margin is None or margin < best_margin:
            best_margin = margin
            best_witness = CheckWitness(w, lhs, rhs, margin)
    return _report("directed-sidorenko-random", best_margin, best_witness, instances)


# ---------------------------------------------------------------------------
# Asymmetric Sidorenko: t_bip(A, W) >= (integral W)^e(A)
# ---------------------------------------------------------------------------

def check_asym_sidorenko(pattern: BipartiteGraph, w: StepGraphon) -> CheckReport:
    lhs = t_bip_step(pattern, w)
    rhs = w.integral() ** pattern.edge_count
    wit = CheckWitness(w, lhs, rhs, lhs - rhs)
    return _report("asymmetric-sidorenko", wit.margin, wit, 1)


def check_asym_sidorenko_random(
    pattern: BipartiteGraph,
    *,
    instances: int = 1000,
    parts: int = 4,
    seed: int = DEFAULT_SEED,
    denominator: int = DEFAULT_BATCH_DENOMINATOR,
) -> CheckReport:
    import random as _random

    rng = _random.Random(seed)
    best_margin: Optional[Fraction] = None
    best_witness: Optional[CheckWitness] = None
    for _ in range(instances):
        w = random_graphon(parts, rng=rng, denominator=denominator)
        lhs = t_bip_step(pattern, w)
        rhs = w.integral() ** pattern.edge_count
        margin = lhs - rhs
        if best_margin is None or margin < best_margin:
            best_margin = margin
            best_witness = CheckWitness(w, lhs, rhs, margin)
    return _report("asymmetric-sidorenko-random", best_margin, best_witness, instances)


# ---------------------------------------------------------------------------
# Bridge: the directed and bipartite margins agree instance by instance
# ---------------------------------------------------------------------------

def check_equivalence_bridge(pattern: BipartiteGraph, w: StepGraphon) -> CheckReport:
    """Assert the directed check on the part-oriented pattern and the
    bipartite check on the pattern itself produce identical margins on W.

    The two sides evaluate through independent code paths (vertex maps with
    directed edge cells vs. row/column coordinate maps), so equality is a
    real cross-check rather than a tautology.
    """
    bound = w.integral() ** pattern.edge_count
    d_margin = t_step(to_part_oriented(pattern), w) - bound
    b_margin = t_bip_step(pattern, w) - bound
    identical = d_margin == b_margin
    wit = CheckWitness(w, d_margin, b_margin,
                       Fraction(0) if identical else -abs(d_margin - b_margin))
    return CheckReport(
        property_name="directed-bipartite-margin-bridge",
        verdict=HOLDS if identical else VIOLATED,
        witness=None if identical else wit,
        instances_checked=1,
    )


# ---------------------------------------------------------------------------
# Second directed Sidorenko: t(B,G) >= 2^-e(B) * t(underlying B, underlying G)
# ---------------------------------------------------------------------------

def check_second_sidorenko(pattern: OrientedGraph, host: OrientedGraph) -> CheckReport:
    lhs = t_directed(pattern, host)
    rhs = Fraction(1, 2) ** pattern.edge_count * t_undirected(underlying(pattern), underlying(host))
    wit = CheckWitness(host, lhs, rhs, lhs - rhs)
    return _report("second-directed-sidorenko", wit.margin, wit, 1)
