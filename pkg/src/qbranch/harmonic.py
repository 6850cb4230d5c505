"""Coherent systems: finite-range harmonic families of level distributions.

A coherent system is a truncated shadow of a locally normal KMS state: one
probability vector per level 0..N, compatible under the pushdown Phi.  All
verification is exact; for symbolic-q systems nonnegativity (the one
property that is not algebraic) is sampled at rational points of (0, 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .branching import (
    GTQ,
    GT_CLASSICAL,
    YOUNG,
    BranchingGraph,
    L1Vector,
    gtq_graph,
    phi_pushdown,
    pushdown_chain,
    zero_vertex,
    _qdim_at,
)
from .errors import GraphMismatch, LevelMismatch, NotProbability
from .scalars import (
    evaluate_scalar,
    format_scalar,
    parse_scalar,
    scalar_is_zero,
    scalars_equal,
)
from .signatures import conjugate_signature
from .symfunc import dim_classical, qdim, tensor_components

DEFAULT_Q_SAMPLES = (Fraction(1, 2), Fraction(9, 10))


class CoherentSystem:
    """Level probability vectors nu_0..nu_N compatible under pushdown."""

    __slots__ = ("graph", "_levels")

    def __init__(self, graph: BranchingGraph, levels):
        self.graph = graph
        vecs = tuple(levels)
        for n, v in enumerate(vecs):
            if v.level != n:
                raise LevelMismatch(f"vector at index {n} has level {v.level}")
        self._levels = vecs

    @property
    def top_level(self) -> int:
        return len(self._levels) - 1

    def vector(self, n: int) -> L1Vector:
        if not 0 <= n <= self.top_level:
            raise LevelMismatch(f"level {n} outside range 0..{self.top_level}")
        return self._levels[n]

    def state_value(self, n: int, vertex):
        """The KMS-state value on the minimal central projection of vertex."""
        return self.vector(n)[vertex]

    def __iter__(self):
        return iter(self._levels)

    def __repr__(self):
        return (f"CoherentSystem({self.graph.describe()}, "
                f"top_level={self.top_level})")


@dataclass(frozen=True)
class KMSStateShadow:
    """Function view (n, vertex) -> nu_n(vertex) of a coherent system."""

    system: CoherentSystem

    def __call__(self, n: int, vertex):
        return self.system.state_value(n, vertex)


@dataclass(frozen=True)
class HarmonicVerdict:
    ok: bool
    failures: tuple

    def __bool__(self):
        return self.ok

    def first_failure(self):
        return self.failures[0] if self.failures else None


def check_harmonic(nu: CoherentSystem, q_samples=DEFAULT_Q_SAMPLES) -> HarmonicVerdict:
    """Exact verification of normalization, positivity, and Phi-compatibility.

    Reports every failing (what, level, vertex) witness; symbolic entries
    have nonnegativity checked at the sample points only.
    """
    failures = []
    base = nu.vector(0)
    zero = zero_vertex(nu.graph, 0)
    if not scalars_equal(base[zero], 1):
        failures.append(("base-normalization", 0, zero, base[zero]))
    for n in range(nu.top_level + 1):
        vec = nu.vector(n)
        if not scalars_equal(vec.mass(), 1):
            failures.append(("mass", n, None, vec.mass()))
        for v, val in vec.items():
            if isinstance(val, (int, Fraction)):
                if val < 0:
                    failures.append(("negative", n, v, val))
            else:
                for q0 in q_samples:
                    if evaluate_scalar(val, q0) < 0:
                        failures.append(("negative", n, v, (q0, evaluate_scalar(val, q0))))
                        break
    for n in range(nu.top_level):
        pushed = phi_pushdown(nu.graph, nu.vector(n + 1))
        target = nu.vector(n)
        keys = set(pushed.support()) | set(target.support())
        for v in sorted(keys):
            if not scalars_equal(pushed[v], target[v]):
                failures.append(("harmonic", n, v, (target[v], pushed[v])))
    return HarmonicVerdict(not failures, tuple(failures))


def from_top(graph: BranchingGraph, top: L1Vector,
             q_samples=DEFAULT_Q_SAMPLES) -> CoherentSystem:
    """The coherent system generated by pushing a top probability vector down."""
    if not scalars_equal(top.mass(), 1):
        raise NotProbability(f"top vector has mass {top.mass()}")
    for v, val in top.items():
        if isinstance(val, (int, Fraction)):
            if val < 0:
                raise NotProbability(f"negative entry at {v}")
        else:
            for q0 in q_samples:
                if evaluate_scalar(val, q0) < 0:
                    raise NotProbability(f"entry at {v} negative at q={q0}")
    levels = [top]
    cur = top
    while cur.level > 0:
        cur = phi_pushdown(graph, cur)
        levels.append(cur)
    return CoherentSystem(graph, reversed(levels))


def counit_system(graph: BranchingGraph, N: int) -> CoherentSystem:
    """The delta chain along the counit vertices (trivial representations)."""
    return CoherentSystem(
        graph, (L1Vector.delta(n, zero_vertex(graph, n)) for n in range(N + 1)))


def _dims_for(graph: BranchingGraph):
    if graph.kind == GT_CLASSICAL:
        return dim_classical
    if graph.kind != GTQ:
        raise GraphMismatch("character products live on the GT graphs")
    if graph.symbolic:
        return qdim
    return lambda lam: _qdim_at(lam, graph.q)


def _same_graph(a: BranchingGraph, b: BranchingGraph):
    if a != b:
        raise GraphMismatch(f"graphs differ: {a.describe()} vs {b.describe()}")


def character_product(nu1: CoherentSystem, nu2: CoherentSystem, n: int) -> L1Vector:
    """Level-n distribution of the product state.

    nu12(lam) = sum_{mu,nu} nu1(mu) nu2(nu) c-tensor(lam,mu,nu)
    dim_q(lam) / (dim_q(mu) dim_q(nu)); mass is exactly 1 by the
    tensor-mass identity.
    """
    _same_graph(nu1.graph, nu2.graph)
    dim = _dims_for(nu1.graph)
    v1, v2 = nu1.vector(n), nu2.vector(n)
    out: dict = {}
    for mu, a in v1.items():
        for nu_, b in v2.items():
            w = a * b / (dim(mu) * dim(nu_))
            if scalar_is_zero(w):
                continue
            for lam, c in tensor_components(mu, nu_):
                s = out.get(lam, 0) + w * c * dim(lam)
                if scalar_is_zero(s):
                    out.pop(lam, None)
                else:
                    out[lam] = s
    return L1Vector(n, out)


def character_product_system(nu1: CoherentSystem, nu2: CoherentSystem) -> CoherentSystem:
    """The levelwise product family up to the common top level."""
    N = min(nu1.top_level, nu2.top_level)
    return CoherentSystem(nu1.graph, (character_product(nu1, nu2, n) for n in range(N + 1)))


def adjoint_system(nu: CoherentSystem) -> CoherentSystem:
    """Time reversal: conjugate vertices on the graph with q and q^-1 swapped."""
    g = nu.graph
    if g.kind != GTQ:
        raise GraphMismatch("the adjoint lives on the q-deformed graph")
    flipped = gtq_graph(-g.beta, g.q)
    levels = []
    for n in range(nu.top_level + 1):
        vec = nu.vector(n)
        levels.append(L1Vector(n, {conjugate_signature(v): val for v, val in vec.items()}))
    return CoherentSystem(flipped, levels)


def ergodic_estimate(graph: BranchingGraph, lam_top, n: int) -> L1Vector:
    """Row of the composed stochastic matrix: pushdown of a top delta mass."""
    top = L1Vector.delta(len(lam_top) if graph.kind != YOUNG else sum(lam_top), lam_top)
    return pushdown_chain(graph, top, n)


def convex_mix(nu1: CoherentSystem, nu2: CoherentSystem, t) -> CoherentSystem:
    """t nu1 + (1-t) nu2 levelwise, for rational t in [0, 1]."""
    _same_graph(nu1.graph, nu2.graph)
    t = Fraction(t)
    if not 0 <= t <= 1:
        raise NotProbability(f"mixing weight {t} outside [0, 1]")
    N = min(nu1.top_level, nu2.top_level)
    return CoherentSystem(
        nu1.graph,
        (nu1.vector(n).scale(t).add(nu2.vector(n).scale(1 - t)) for n in range(N + 1)))


# ---------------------------------------------------------------------------
# JSON round-trip


def graph_to_json(graph: BranchingGraph) -> dict:
    d = {"graph": graph.kind}
    if graph.kind == GTQ:
        d["beta"] = graph.beta
        d["q"] = None if graph.q is None else str(graph.q)
    return d


def graph_from_json(d: dict) -> BranchingGraph:
    kind = d["graph"]
    if kind == GTQ:
        q = d.get("q")
        return gtq_graph(d.get("beta", -1), Fraction(q) if q is not None else None)
    return BranchingGraph(kind)


def l1vector_to_json(vec: L1Vector) -> dict:
    return {"level": vec.level,
            "entries": [[list(v), format_scalar(val)]
                        for v, val in sorted(vec.items())]}


def l1vector_from_json(d: dict) -> L1Vector:
    return L1Vector(int(d["level"]),
                    {tuple(k): parse_scalar(s) for k, s in d["entries"]})


def system_to_json(nu: CoherentSystem) -> dict:
    d = graph_to_json(nu.graph)
    d["levels"] = [l1vector_to_json(nu.vector(n)) for n in range(nu.top_level + 1)]
    return d


def system_from_json(d: dict) -> CoherentSystem:
    return CoherentSystem(graph_from_json(d), (l1vector_from_json(x) for x in d["levels"]))
