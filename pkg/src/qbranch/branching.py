"""Level-graded branching graphs with their exact stochastic links.

Three instances are provided:

* ``gtq_graph(beta, q)`` -- the q-deformed Gelfand-Tsetlin graph whose link
  on an interlacing edge lam > mu (lengths n+1, n) is
  q^(beta * -(n|lam| - (n+1)|mu|)) ... for beta = -1 the weight is
  q^(n|lam| - (n+1)|mu|) * qdim(mu)/qdim(lam); beta = +1 flips q -> q^-1.
  With ``q=None`` link values are symbolic QRatio; with a rational q they
  are exact Fractions.
* ``classical_gt_graph()`` -- dimension-ratio cotransitions dim(mu)/dim(lam).
* ``young_graph()`` -- the Young graph with standard-tableau dimensions.

Theta pushes bounded functions up a level (lazily: their support is
infinite); Phi pushes summable vectors down a level (finite support is
preserved), and the two are dual for the natural pairing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import LevelMismatch, WindowTooLarge
from .scalars import LaurentPoly, QRatio, laurent_eval, scalar_is_zero
from .signatures import (
    covers_below,
    interlace,
    partitions_of,
    signatures_of_length,
    dim_syt,
    young_covers_below,
)
from .symfunc import dim_classical, qdim

GTQ = "gtq"
GT_CLASSICAL = "gt"
YOUNG = "young"


@dataclass(frozen=True)
class BranchingGraph:
    kind: str
    beta: int = -1
    q: Fraction | None = None

    def __post_init__(self):
        if self.kind not in (GTQ, GT_CLASSICAL, YOUNG):
            raise ValueError(f"unknown graph kind {self.kind!r}")
        if self.kind == GTQ:
            if self.beta not in (-1, 1):
                raise ValueError("beta must be -1 or +1")
            if self.q is not None and not (0 < self.q < 1):
                raise ValueError("numeric q must lie in (0, 1)")

    @property
    def symbolic(self) -> bool:
        return self.kind == GTQ and self.q is None

    def describe(self) -> str:
        if self.kind == GTQ:
            qtxt = "q" if self.q is None else str(self.q)
            return f"gtq(beta={self.beta:+d}, q={qtxt})"
        return self.kind


def gtq_graph(beta: int = -1, q: Fraction | None = None) -> BranchingGraph:
    return BranchingGraph(GTQ, beta, Fraction(q) if q is not None else None)


def classical_gt_graph() -> BranchingGraph:
    return BranchingGraph(GT_CLASSICAL)


def young_graph() -> BranchingGraph:
    return BranchingGraph(YOUNG)


def vertex_level(graph: BranchingGraph, v) -> int:
    return sum(v) if graph.kind == YOUNG else len(v)


def zero_vertex(graph: BranchingGraph, n: int):
    """The distinguished counit vertex at level n.

    Zero signature for the GT graphs; the one-row partition (n), the chain
    of trivial representations, for the Young graph.
    """
    if graph.kind == YOUNG:
        return (n,) if n else ()
    return (0,) * n


def covers(graph: BranchingGraph, lam) -> tuple:
    """The finite set of level-(n-1) vertices below lam."""
    if graph.kind == YOUNG:
        return tuple(young_covers_below(lam))
    return covers_below(tuple(lam))


def is_edge(graph: BranchingGraph, lam, mu) -> bool:
    if graph.kind == YOUNG:
        return mu in young_covers_below(lam)
    return interlace(tuple(lam), tuple(mu))


def multiplicity(graph: BranchingGraph, lam, mu) -> int:
    """Edge multiplicity; identically 1 on all three instances."""
    return 1 if is_edge(graph, lam, mu) else 0


def _gtq_exponent(beta: int, lam, mu) -> int:
    n = len(mu)
    e = n * sum(lam) - (n + 1) * sum(mu)
    return e if beta == -1 else -e


@lru_cache(maxsize=None)
def _qdim_at(lam: tuple, q0: Fraction) -> Fraction:
    return laurent_eval(qdim(lam), q0)


def link(graph: BranchingGraph, lam, mu):
    """The stochastic link kappa(lam, mu); zero exactly off the edge set.

    Returns a QRatio on the symbolic q-deformed graph and an exact Fraction
    otherwise.
    """
    lam, mu = tuple(lam), tuple(mu)
    if vertex_level(graph, lam) != vertex_level(graph, mu) + 1:
        raise LevelMismatch(
            f"link needs consecutive levels, got {vertex_level(graph, lam)} "
            f"and {vertex_level(graph, mu)}")
    if graph.kind == YOUNG:
        if mu not in young_covers_below(lam):
            return Fraction(0)
        return Fraction(dim_syt(mu), dim_syt(lam))
    if not interlace(lam, mu):
        return QRatio(0) if graph.symbolic else Fraction(0)
    if graph.kind == GT_CLASSICAL:
        return Fraction(dim_classical(mu), dim_classical(lam))
    e = _gtq_exponent(graph.beta, lam, mu)
    if graph.q is None:
        return QRatio(LaurentPoly.q_power(e) * qdim(mu), qdim(lam))
    return graph.q**e * _qdim_at(mu, graph.q) / _qdim_at(lam, graph.q)


@dataclass(frozen=True)
class StochasticVerdict:
    ok: bool
    vertex: tuple
    defect: object  # LaurentPoly (gtq) or Fraction (classical/Young)

    def __bool__(self):
        return self.ok


def check_stochastic_row(graph: BranchingGraph, lam) -> StochasticVerdict:
    """Verify sum_mu kappa(lam, mu) = 1 exactly.

    On the q-deformed graph this clears denominators and certifies the
    Laurent identity sum_{mu < lam} q^e(lam,mu) qdim(mu) = qdim(lam), which
    covers every numeric q at once.
    """
    lam = tuple(lam)
    if vertex_level(graph, lam) < 1:
        raise LevelMismatch("stochastic rows start at level 1")
    if graph.kind == GTQ:
        acc = LaurentPoly.zero()
        for mu in covers_below(lam):
            e = _gtq_exponent(graph.beta, lam, mu)
            acc = acc + LaurentPoly.q_power(e) * qdim(mu)
        defect = qdim(lam) - acc
        return StochasticVerdict(defect.is_zero(), lam, defect)
    total = Fraction(0)
    for mu in covers(graph, lam):
        total += link(graph, lam, mu)
    return StochasticVerdict(total == 1, lam, total - 1)


class CentralFunction:
    """A bounded central function: a level plus a vertex -> scalar evaluator.

    When support_hint is given the evaluator vanishes off it; Theta images
    generally have infinite support and carry no hint.
    """

    __slots__ = ("level", "_eval", "support_hint")

    def __init__(self, level: int, evaluator, support_hint=None):
        self.level = level
        self._eval = evaluator
        self.support_hint = frozenset(support_hint) if support_hint is not None else None

    @classmethod
    def from_dict(cls, level: int, values: dict) -> "CentralFunction":
        table = {tuple(k): v for k, v in values.items() if not scalar_is_zero(v)}
        return cls(level, lambda v: table.get(v, 0), support_hint=table.keys())

    @classmethod
    def indicator(cls, level: int, vertex) -> "CentralFunction":
        vertex = tuple(vertex)
        return cls(level, lambda v: 1 if v == vertex else 0, support_hint=[vertex])

    @classmethod
    def one(cls, level: int) -> "CentralFunction":
        return cls(level, lambda v: 1)

    @classmethod
    def zero(cls, level: int) -> "CentralFunction":
        return cls(level, lambda v: 0, support_hint=[])

    def __call__(self, vertex):
        return self._eval(tuple(vertex))


def theta_eval(graph: BranchingGraph, f: CentralFunction, lam):
    """(Theta f)(lam) = sum_mu kappa(lam, mu) f(mu), a finite sum."""
    lam = tuple(lam)
    if vertex_level(graph, lam) != f.level + 1:
        raise LevelMismatch(f"theta_eval needs a level-{f.level + 1} vertex")
    total = 0
    for mu in covers(graph, lam):
        if f.support_hint is not None and mu not in f.support_hint:
            continue
        total = link(graph, lam, mu) * f(mu) + total
    return total


def theta_map(graph: BranchingGraph, f: CentralFunction) -> CentralFunction:
    """The lazily evaluated level-(n+1) image of f under Theta."""
    return CentralFunction(f.level + 1, lambda v: theta_eval(graph, f, v))


class L1Vector:
    """A finitely supported summable vector at one level."""

    __slots__ = ("level", "_entries")

    def __init__(self, level: int, entries: dict | None = None):
        self.level = level
        self._entries = {}
        if entries:
            for k, v in entries.items():
                if not scalar_is_zero(v):
                    self._entries[tuple(k)] = v

    @classmethod
    def delta(cls, level: int, vertex) -> "L1Vector":
        return cls(level, {tuple(vertex): Fraction(1)})

    @property
    def entries(self) -> dict:
        return dict(self._entries)

    def items(self):
        return self._entries.items()

    def support(self):
        return self._entries.keys()

    def __getitem__(self, vertex):
        return self._entries.get(tuple(vertex), 0)

    def __len__(self):
        return len(self._entries)

    def mass(self):
        if not self._entries:
            return Fraction(0)
        total = 0
        for v in self._entries.values():
            total = total + v
        return total

    def norm1(self):
        return sum(abs(v) for v in self._entries.values())

    def scale(self, c) -> "L1Vector":
        return L1Vector(self.level, {k: c * v for k, v in self._entries.items()})

    def add(self, other: "L1Vector") -> "L1Vector":
        if other.level != self.level:
            raise LevelMismatch("cannot add vectors at different levels")
        out = dict(self._entries)
        for k, v in other._entries.items():
            s = out.get(k, 0) + v
            if scalar_is_zero(s):
                out.pop(k, None)
            else:
                out[k] = s
        return L1Vector(self.level, out)

    def is_probability(self) -> bool:
        if any(not isinstance(v, (int, Fraction)) for v in self._entries.values()):
            return False
        return all(v >= 0 for v in self._entries.values()) and self.mass() == 1

    def __eq__(self, other):
        return (isinstance(other, L1Vector) and other.level == self.level
                and other._entries == self._entries)

    def __repr__(self):
        body = ", ".join(f"{k}: {v}" for k, v in sorted(self._entries.items()))
        return f"L1Vector(level={self.level}, {{{body}}})"


def phi_pushdown(graph: BranchingGraph, omega: L1Vector) -> L1Vector:
    """(Phi omega)(mu) = sum_lam omega(lam) kappa(lam, mu); support stays finite."""
    out: dict = {}
    for lam, v in omega.entries.items():
        for mu in covers(graph, lam):
            w = v * link(graph, lam, mu)
            if scalar_is_zero(w):
                continue
            s = out.get(mu, 0) + w
            if scalar_is_zero(s):
                out.pop(mu, None)
            else:
                out[mu] = s
    return L1Vector(omega.level - 1, out)


def pushdown_chain(graph: BranchingGraph, omega: L1Vector, target: int) -> L1Vector:
    """Iterated pushdown from omega's level to the target level."""
    if target > omega.level:
        raise LevelMismatch(f"target {target} above level {omega.level}")
    cur = omega
    while cur.level > target:
        cur = phi_pushdown(graph, cur)
    return cur


def pairing(omega: L1Vector, f: CentralFunction):
    """<omega, f> = sum over the support of omega of omega(z) f(z)."""
    if omega.level != f.level:
        raise LevelMismatch(f"pairing needs equal levels, got {omega.level} and {f.level}")
    total = 0
    for z, v in omega.entries.items():
        total = v * f(z) + total
    return total


def level_window(graph: BranchingGraph, n: int, part_bound: int) -> tuple:
    """The finite vertex window at level n with parts bounded by part_bound."""
    if graph.kind == YOUNG:
        return tuple(p for p in partitions_of(n) if not p or p[0] <= part_bound)
    return tuple(signatures_of_length(n, -part_bound, part_bound))


def export_dot(graph: BranchingGraph, level_lo: int, level_hi: int,
               part_bound: int, q: Fraction = Fraction(9, 10),
               vertex_cap: int = 4000) -> str:
    """Bratteli-diagram window as deterministic DOT text.

    Edge labels carry the link evaluated at the rational q and the
    multiplicity (always 1 here).
    """
    lines = ["digraph branching {", "  rankdir=BT;"]
    if level_lo > level_hi:
        lines.append("}")
        return "\n".join(lines) + "\n"
    windows = {}
    total = 0
    for n in range(level_lo, level_hi + 1):
        windows[n] = level_window(graph, n, part_bound)
        total += len(windows[n])
        if total > vertex_cap:
            raise WindowTooLarge(f"window has more than {vertex_cap} vertices")

    def vid(n, v):
        return f"\"L{n}:{list(v)}\""

    for n in range(level_lo, level_hi + 1):
        for v in sorted(windows[n]):
            lines.append(f"  {vid(n, v)} [label=\"{list(v)}\"];")
    for n in range(level_lo + 1, level_hi + 1):
        below = set(windows[n - 1])
        for lam in sorted(windows[n]):
            for mu in covers(graph, lam):
                if mu not in below:
                    continue
                kappa = link(graph, lam, mu)
                if isinstance(kappa, QRatio):
                    kappa = kappa.evaluate(q)
                lines.append(
                    f"  {vid(n, lam)} -> {vid(n - 1, mu)} "
                    f"[label=\"{kappa} m=1\"];")
    lines.append("}")
    return "\n".join(lines) + "\n"
