"""Monte Carlo sampling of central measures on the branching graphs.

Transition rows are computed as exact rationals and turned into integer
thresholds over a common denominator D; each step draws one integer
uniformly from range(D), so the sampled law matches the exact row with no
floating-point error.  The generator is Python's Mersenne Twister
(``random.Random``), seeded with a 64-bit integer; per-chain sub-seeds are
derived with SplitMix64.  Identical seeds reproduce identical streams.
"""

from __future__ import annotations

import math
import random
from bisect import bisect_right
from collections import Counter
from fractions import Fraction

from .branching import (
    GTQ,
    BranchingGraph,
    L1Vector,
    classical_gt_graph,
    covers,
    gtq_graph,
    is_edge,
    link,
    vertex_level,
    zero_vertex,
)
from .errors import QBranchError, ZeroMass
from .harmonic import CoherentSystem
from .scalars import evaluate_scalar


def derive_seed(seed: int, index: int) -> int:
    """SplitMix64 stream: independent 64-bit sub-seed for chain `index`."""
    z = (seed + (index + 1) * 0x9E3779B97F4A7C15) & 0xFFFFFFFFFFFFFFFF
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & 0xFFFFFFFFFFFFFFFF
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & 0xFFFFFFFFFFFFFFFF
    return z ^ (z >> 31)


def _resolve_graph(graph: BranchingGraph, q0) -> BranchingGraph:
    if graph.kind != GTQ:
        return graph
    if q0 is None:
        if graph.q is None:
            raise QBranchError("sampling on a symbolic graph needs a numeric q0")
        return graph
    q0 = Fraction(q0)
    if q0 == 1:
        return classical_gt_graph()
    return gtq_graph(graph.beta, q0)


def _thresholds(pairs):
    """Integer cumulative thresholds for a list of (item, Fraction prob)."""
    denom = math.lcm(*(p.denominator for _, p in pairs)) if pairs else 1
    items, cums = [], []
    acc = 0
    for item, p in pairs:
        acc += p.numerator * (denom // p.denominator)
        items.append(item)
        cums.append(acc)
    return items, cums, denom


class DownSampler:
    """Samples interlacing paths downward along the link rows."""

    def __init__(self, graph: BranchingGraph, q0=None):
        self.graph = _resolve_graph(graph, q0)
        self._rows: dict = {}

    def _row(self, lam):
        row = self._rows.get(lam)
        if row is None:
            pairs = [(mu, Fraction(link(self.graph, lam, mu)))
                     for mu in covers(self.graph, lam)]
            row = _thresholds([(m, p) for m, p in pairs if p > 0])
            self._rows[lam] = row
        return row

    def path(self, lam_top, rng: random.Random) -> tuple:
        cur = tuple(lam_top)
        out = [cur]
        while vertex_level(self.graph, cur) > 0:
            items, cums, denom = self._row(cur)
            r = rng.randrange(denom)
            cur = items[bisect_right(cums, r)]
            out.append(cur)
        return tuple(out)


def sample_down(graph: BranchingGraph, lam_top, q0, seed: int) -> tuple:
    """One downward path (lam_N, ..., lam_0); deterministic under the seed."""
    return DownSampler(graph, q0).path(lam_top, random.Random(seed))


def sample_down_histogram(graph: BranchingGraph, lam_top, q0, seed: int,
                          count: int, target: int) -> Counter:
    """Level-`target` marginal counts of `count` downward paths."""
    sampler = DownSampler(graph, q0)
    rng = random.Random(seed)
    top_level = vertex_level(sampler.graph, tuple(lam_top))
    hist: Counter = Counter()
    for _ in range(count):
        path = sampler.path(lam_top, rng)
        hist[path[top_level - target]] += 1
    return hist


class UpSampler:
    """Samples upward along P(lam | mu) = nu(lam) kappa(lam, mu) / nu(mu)."""

    def __init__(self, nu: CoherentSystem, q0=None):
        self.nu = nu
        self.graph = _resolve_graph(nu.graph, q0)
        q = self.graph.q if self.graph.kind == GTQ else Fraction(1)
        self._vals = [
            {v: Fraction(evaluate_scalar(val, q)) for v, val in nu.vector(n).items()}
            for n in range(nu.top_level + 1)
        ]
        self._rows: dict = {}

    def _row(self, n: int, mu):
        key = (n, mu)
        row = self._rows.get(key)
        if row is None:
            base = self._vals[n].get(mu, Fraction(0))
            if base == 0:
                raise ZeroMass(f"no mass at level {n} vertex {mu}")
            pairs = []
            for lam, m in self._vals[n + 1].items():
                if m <= 0 or not is_edge(self.graph, lam, mu):
                    continue
                pairs.append((lam, m * Fraction(link(self.graph, lam, mu)) / base))
            row = _thresholds(pairs)
            self._rows[key] = row
        return row

    def sample(self, target: int, rng: random.Random):
        if target > self.nu.top_level:
            raise QBranchError(f"target {target} above top level {self.nu.top_level}")
        cur = zero_vertex(self.graph, 0)
        for n in range(target):
            items, cums, denom = self._row(n, cur)
            total = cums[-1] if cums else 0
            if total != denom:
                raise ZeroMass(f"row mass {Fraction(total, denom)} != 1 at level {n}, {cur}")
            r = rng.randrange(denom)
            cur = items[bisect_right(cums, r)]
        return cur


def sample_up(nu: CoherentSystem, target: int, q0, seed: int):
    """One upward sample at the target level, distributed as nu_target."""
    return UpSampler(nu, q0).sample(target, random.Random(seed))


def sample_up_histogram(nu: CoherentSystem, target: int, q0, seed: int,
                        count: int) -> Counter:
    sampler = UpSampler(nu, q0)
    rng = random.Random(seed)
    hist: Counter = Counter()
    for _ in range(count):
        hist[sampler.sample(target, rng)] += 1
    return hist


def empirical_tv(samples, exact: L1Vector) -> Fraction:
    """Total-variation distance between empirical counts and an exact vector.

    `samples` is an iterable of vertices or a Counter of vertex -> count.
    """
    counts = samples if isinstance(samples, Counter) else Counter(tuple(s) for s in samples)
    n = sum(counts.values())
    if n == 0:
        raise QBranchError("empirical_tv needs at least one sample")
    keys = set(counts) | set(exact.support())
    total = Fraction(0)
    for k in keys:
        total += abs(Fraction(counts.get(k, 0), n) - Fraction(exact[k]))
    return total / 2
