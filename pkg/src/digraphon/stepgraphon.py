"""Step graphons: piecewise-constant [0,1]^2 -> [0,1] functions on a common
interval partition, with exact density functionals and cut norms.

All arithmetic is rational.  Density sums run over every assignment of
pattern vertices to parts, which costs (#parts)^v(pattern) terms; the sums
are accumulated as integers over a common denominator and reduced once.
"""

from __future__ import annotations

import random
import warnings
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product
from math import floor, lcm
from typing import Iterable, Optional, Sequence

from .graphs import BipartiteGraph, OrientedGraph

TERM_WARNING_THRESHOLD = 10**7
EXACT_CUT_NORM_CAP = 20
HEURISTIC_RESTARTS = 32

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _as_fraction(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class StepGraphon:
    """Square step function on an interval partition of [0,1].

    ``values[i][j]`` is the value on the rectangle I_i x I_j (first index is
    the x coordinate).  Part lengths are positive rationals summing to 1 and
    all values lie in [0,1].
    """

    part_lengths: tuple[Fraction, ...]
    values: tuple[tuple[Fraction, ...], ...]

    def __init__(self, part_lengths: Sequence, values: Sequence[Sequence]):
        lengths = tuple(_as_fraction(x) for x in part_lengths)
        matrix = tuple(tuple(_as_fraction(x) for x in row) for row in values)
        object.__setattr__(self, "part_lengths", lengths)
        object.__setattr__(self, "values", matrix)
        if not lengths:
            raise ValueError("a step graphon needs at least one part")
        if any(l <= 0 for l in lengths):
            raise ValueError("part lengths must be positive")
        if sum(lengths) != 1:
            raise ValueError("part lengths must sum to exactly 1")
        k = len(lengths)
        if len(matrix) != k or any(len(row) != k for row in matrix):
            raise ValueError("values must be a square matrix matching the parts")
        for row in matrix:
            for x in row:
                if not 0 <= x <= 1:
                    raise ValueError(f"value {x} outside [0,1]")

    @classmethod
    def constant(cls, p, parts: int = 1) -> "StepGraphon":
        p = _as_fraction(p)
        lengths = [Fraction(1, parts)] * parts
        return cls(lengths, [[p] * parts for _ in range(parts)])

    @property
    def num_parts(self) -> int:
        return len(self.part_lengths)

    def integral(self) -> Fraction:
        """The mean of the graphon (its single-edge density)."""
        total = _ZERO
        for i, li in enumerate(self.part_lengths):
            for j, lj in enumerate(self.part_lengths):
                total += self.values[i][j] * li * lj
        return total

    def scale(self, c) -> "StepGraphon":
        """Pointwise multiply by c in [0,1]."""
        c = _as_fraction(c)
        if not 0 <= c <= 1:
            raise ValueError("scale factor must lie in [0,1]")
        return StepGraphon(self.part_lengths,
                           [[x * c for x in row] for row in self.values])


def from_oriented(graph: OrientedGraph) -> StepGraphon:
    """Edge-indicator step graphon on v(G) equal parts."""
    n = graph.vertex_count
    if n == 0:
        raise ValueError("empty graph has no step graphon")
    values = [[_ONE if (i, j) in graph.edges else _ZERO for j in range(n)]
              for i in range(n)]
    return StepGraphon([Fraction(1, n)] * n, values)


def from_bipartite(graph: BipartiteGraph) -> StepGraphon:
    """Bipartite edge-indicator graphon, stored as a square step function.

    Rows follow the part-1 equipartition (n blocks) and columns the part-2
    equipartition (m blocks); the result lives on the common refinement of
    the two partitions so that one square representation serves both.
    """
    n, m = graph.part1_count, graph.part2_count
    if n == 0 or m == 0:
        raise ValueError("both parts must be nonempty")
    cuts = sorted(set(Fraction(i, n) for i in range(1, n + 1))
                  | set(Fraction(j, m) for j in range(1, m + 1)))
    lengths = []
    lo = _ZERO
    for hi in cuts:
        lengths.append(hi - lo)
        lo = hi
    mids = []
    lo = _ZERO
    for length in lengths:
        mids.append(lo + length / 2)
        lo += length
    row_block = [floor(mid * n) for mid in mids]
    col_block = [floor(mid * m) for mid in mids]
    k = len(lengths)
    values = [[_ONE if (row_block[a], col_block[b]) in graph.edges else _ZERO
               for b in range(k)] for a in range(k)]
    return StepGraphon(lengths, values)


# ---------------------------------------------------------------------------
# Densities
# ---------------------------------------------------------------------------

def _integer_arrays(w: StepGraphon) -> tuple[list[int], int, list[list[int]], int]:
    dl = lcm(*(l.denominator for l in w.part_lengths)) if w.num_parts else 1
    lnum = [int(l * dl) for l in w.part_lengths]
    dv = lcm(*(x.denominator for row in w.values for x in row))
    vnum = [[int(x * dv) for x in row] for row in w.values]
    return lnum, dl, vnum, dv


def _warn_if_large(terms: int) -> None:
    if terms > TERM_WARNING_THRESHOLD:
        warnings.warn(
            f"density sum has {terms} terms; expect a long exact computation",
            RuntimeWarning,
            stacklevel=3,
        )


def t_step(pattern: OrientedGraph, w: StepGraphon) -> Fraction:
    """Density of an oriented pattern in a step graphon.

    Sums, over all maps g of pattern vertices to parts, the product of the
    part lengths of the images times the product of W over the edge cells.
    """
    v = pattern.vertex_count
    e = pattern.edge_count
    k = w.num_parts
    if v == 0:
        return _ONE
    _warn_if_large(k ** v)
    lnum, dl, vnum, dv = _integer_arrays(w)
    edges = pattern.sorted_edges()
    equal = len(set(lnum)) == 1
    total = 0
    for g in product(range(k), repeat=v):
        term = 1
        for u, x in edges:
            val = vnum[g[u]][g[x]]
            if not val:
                term = 0
                break
            term *= val
        if not term:
            continue
        if not equal:
            for i in g:
                term *= lnum[i]
        total += term
    if equal:
        total *= lnum[0] ** v
    return Fraction(total, dl ** v * dv ** e)


def t_bip_step(pattern: BipartiteGraph, w: StepGraphon) -> Fraction:
    """Bipartite density of a two-part pattern in a step graphon.

    Part-1 vertices pick x-coordinate parts and part-2 vertices pick
    y-coordinate parts; each edge (i,j) contributes the value of W at the
    cell (image of i, image of j).
    """
    a1, a2 = pattern.part1_count, pattern.part2_count
    e = pattern.edge_count
    k = w.num_parts
    if a1 + a2 == 0:
        return _ONE
    _warn_if_large(k ** (a1 + a2))
    lnum, dl, vnum, dv = _integer_arrays(w)
    edges = pattern.sorted_edges()
    total = 0
    for gx in product(range(k), repeat=a1):
        xweight = 1
        for i in gx:
            xweight *= lnum[i]
        if not xweight:
            continue
        for gy in product(range(k), repeat=a2):
            term = 1
            for i, j in edges:
                val = vnum[gx[i]][gy[j]]
                if not val:
                    term = 0
                    break
                term *= val
            if not term:
                continue
            for j in gy:
                term *= lnum[j]
            total += term * xweight
    return Fraction(total, dl ** (a1 + a2) * dv ** e)


# ---------------------------------------------------------------------------
# Cut norm
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CutNormResult:
    """Cut-norm value with the part subsets that realize it.

    ``exact`` marks a proven supremum (full subset maximization); heuristic
    results still report the exact rectangle integral of their witness, so
    the value is always a valid lower bound.
    """

    value: Fraction
    witness_s: tuple[int, ...]
    witness_t: tuple[int, ...]
    exact: bool


def _mask_to_parts(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def _exact_bilinear_max(mass: list[list[int]]) -> tuple[int, int, int]:
    """Maximize |sum_{i in S, j in T} mass[i][j]| over subsets S, T.

    For a fixed S the optimal T keeps exactly the columns whose S-restricted
    sums share a sign, so it suffices to enumerate S (Gray-code order, with
    incremental column sums) and read off both signed optima.
    """
    k = len(mass)
    best = 0
    best_s = 0
    best_t = 0
    col = [0] * k
    prev = 0
    for i in range(1, 1 << k):
        gray = i ^ (i >> 1)
        bit = gray ^ prev
        prev = gray
        row = bit.bit_length() - 1
        mrow = mass[row]
        if gray & bit:
            for j in range(k):
                col[j] += mrow[j]
        else:
            for j in range(k):
                col[j] -= mrow[j]
        pos = neg = 0
        pos_mask = neg_mask = 0
        for j in range(k):
            c = col[j]
            if c > 0:
                pos += c
                pos_mask |= 1 << j
            elif c < 0:
                neg -= c
                neg_mask |= 1 << j
        if pos > best:
            best, best_s, best_t = pos, gray, pos_mask
        if neg > best:
            best, best_s, best_t = neg, gray, neg_mask
    return best, best_s, best_t


def _rectangle_sum(mass: list[list[int]], s_mask: int, t_mask: int) -> int:
    total = 0
    k = len(mass)
    for i in range(k):
        if not (s_mask >> i) & 1:
            continue
        row = mass[i]
        for j in range(k):
            if (t_mask >> j) & 1:
                total += row[j]
    return total


def _heuristic_bilinear_max(mass: list[list[int]], seed: int,
                            restarts: int) -> tuple[int, int, int]:
    """Alternating sign-greedy improvement from seeded random subsets."""
    k = len(mass)
    rng = random.Random(seed)
    best = 0
    best_s = 0
    best_t = 0
    for _ in range(restarts):
        start = rng.getrandbits(k)
        for sign in (1, -1):
            s_mask = start
            t_mask = 0
            for _ in range(4 * k + 4):
                col = [0] * k
                for i in range(k):
                    if (s_mask >> i) & 1:
                        row = mass[i]
                        for j in range(k):
                            col[j] += row[j]
                t_mask = 0
                for j in range(k):
                    if sign * col[j] > 0:
                        t_mask |= 1 << j
                new_s = 0
                for i in range(k):
                    row = mass[i]
                    r = sum(row[j] for j in range(k) if (t_mask >> j) & 1)
                    if sign * r > 0:
                        new_s |= 1 << i
                if new_s == s_mask:
                    break
                s_mask = new_s
            val = abs(_rectangle_sum(mass, s_mask, t_mask))
            if val > best:
                best, best_s, best_t = val, s_mask, t_mask
    return best, best_s, best_t


def _signed_mass(w: StepGraphon, center: Fraction) -> tuple[list[list[int]], int]:
    """Integer numerators of (W - center) * length_i * length_j and their
    common positive denominator."""
    lnum, dl, _, _ = _integer_arrays(w)
    dv = lcm(center.denominator,
             lcm(*(x.denominator for row in w.values for x in row)))
    k = w.num_parts
    cnum = int(center * dv)
    mass = [[(int(w.values[i][j] * dv) - cnum) * lnum[i] * lnum[j]
             for j in range(k)] for i in range(k)]
    return mass, dv * dl * dl


def _cut_norm_impl(w: StepGraphon, center: Fraction, heuristic: bool,
                   seed: int, restarts: int, exact_cap: int) -> CutNormResult:
    mass, denom = _signed_mass(w, center)
    if heuristic:
        num, s_mask, t_mask = _heuristic_bilinear_max(mass, seed, restarts)
        return CutNormResult(Fraction(num, denom), _mask_to_parts(s_mask),
                             _mask_to_parts(t_mask), exact=False)
    if w.num_parts > exact_cap:
        raise ValueError(
            f"exact cut norm is capped at {exact_cap} parts "
            f"(got {w.num_parts}); pass heuristic=True")
    num, s_mask, t_mask = _exact_bilinear_max(mass)
    return CutNormResult(Fraction(num, denom), _mask_to_parts(s_mask),
                         _mask_to_parts(t_mask), exact=True)


def cut_norm(w: StepGraphon, *, heuristic: bool = False, seed: int = 0,
             restarts: int = HEURISTIC_RESTARTS,
             exact_cap: int = EXACT_CUT_NORM_CAP) -> CutNormResult:
    """Cut norm: sup over rectangles S x T of |integral of W over S x T|.

    For step functions the supremum is attained on unions of parts, so exact
    mode enumerates part subsets (feasible up to ``exact_cap`` parts).
    """
    return _cut_norm_impl(w, _ZERO, heuristic, seed, restarts, exact_cap)


def cut_norm_centered(w: StepGraphon, p, *, heuristic: bool = False,
                      seed: int = 0, restarts: int = HEURISTIC_RESTARTS,
                      exact_cap: int = EXACT_CUT_NORM_CAP) -> CutNormResult:
    """Cut norm of the signed step function W - p."""
    return _cut_norm_impl(w, _as_fraction(p), heuristic, seed, restarts, exact_cap)


def rectangle_integral(w: StepGraphon, parts_s: Iterable[int],
                       parts_t: Iterable[int], center=0) -> Fraction:
    """Integral of (W - center) over the union-of-parts rectangle S x T."""
    center = _as_fraction(center)
    total = _ZERO
    for i in parts_s:
        li = w.part_lengths[i]
        for j in parts_t:
            total += (w.values[i][j] - center) * li * w.part_lengths[j]
    return total


# ---------------------------------------------------------------------------
# Cut distance (permutation upper bound)
# ---------------------------------------------------------------------------

def _equipartition_size(w: StepGraphon) -> int:
    cum = _ZERO
    denoms = []
    for length in w.part_lengths:
        cum += length
        denoms.append(cum.denominator)
    return lcm(*denoms)


def _refine_equal(w: StepGraphon, parts: int) -> list[list[Fraction]]:
    """Values of W re-indexed on the equipartition into ``parts`` parts.

    Every original breakpoint must be a multiple of 1/parts.
    """
    owner = []
    cum = _ZERO
    idx = 0
    bounds = []
    for length in w.part_lengths:
        cum += length
        bounds.append(cum)
    for a in range(parts):
        mid = Fraction(2 * a + 1, 2 * parts)
        while mid > bounds[idx]:
            idx += 1
        owner.append(idx)
    return [[w.values[owner[a]][owner[b]] for b in range(parts)]
            for a in range(parts)]


def cut_distance_upper(w: StepGraphon, u: StepGraphon, *,
                       max_refined_parts: int = 10) -> Fraction:
    """Upper bound on the cut distance: min over part permutations pi of
    ||W - U^pi||_cut on the common equal-length refinement.

    The true cut distance takes an infimum over all measure-preserving maps;
    permutations of equal parts are a measure-preserving subfamily, so this
    value dominates it.
    """
    parts = lcm(_equipartition_size(w), _equipartition_size(u))
    if parts > max_refined_parts:
        raise ValueError(
            f"common refinement needs {parts} equal parts, above the cap "
            f"{max_refined_parts}")
    wv = _refine_equal(w, parts)
    uv = _refine_equal(u, parts)
    dv = lcm(*(x.denominator for grid in (wv, uv) for row in grid for x in row))
    wn = [[int(x * dv) for x in row] for row in wv]
    un = [[int(x * dv) for x in row] for row in uv]
    denom = dv * parts * parts
    best: Optional[Fraction] = None
    for perm in permutations(range(parts)):
        mass = [[wn[i][j] - un[perm[i]][perm[j]] for j in range(parts)]
                for i in range(parts)]
        num, _, _ = _exact_bilinear_max(mass)
        val = Fraction(num, denom)
        if best is None or val < best:
            best = val
            if best == 0:
                break
    assert best is not None
    return best


# ---------------------------------------------------------------------------
# Random instances
# ---------------------------------------------------------------------------

def random_graphon(parts: int, *, seed: Optional[int] = None,
                   rng: Optional[random.Random] = None,
                   denominator: int = 64) -> StepGraphon:
    """Seeded random step graphon on equal parts with values r/denominator."""
    if rng is None:
        rng = random.Random(seed)
    values = [[Fraction(rng.randint(0, denominator), denominator)
               for _ in range(parts)] for _ in range(parts)]
    return StepGraphon([Fraction(1, parts)] * parts, values)
