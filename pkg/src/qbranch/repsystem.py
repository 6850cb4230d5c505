"""The graded central-function algebra and the representation system.

ZhatElement is a finite combination of normalized basis vectors z-hat
(the minimal central projection divided by its quantum dimension); their
product has structure constants c(lam|mu,nu) * q^[mu,nu], so the whole
ring multiplication stays in Laurent polynomials over the rationals.

SystemElement is a level representative of the inductive limit along
Theta; equality in the limit is only semi-decided here, by pushing both
representatives to a common level and comparing on a finite window
(a disagreement refutes equality, agreement is evidence).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .branching import (
    GTQ,
    GT_CLASSICAL,
    BranchingGraph,
    CentralFunction,
    theta_eval,
    theta_map,
    _qdim_at,
)
from .errors import LevelMismatch, QBranchError
from .scalars import LaurentPoly, evaluate_scalar, scalar_is_zero, scalars_equal
from .signatures import bracket, descendants
from .symfunc import dim_classical, lr_splice, qdim, splice_components, splice_pairs


class ZhatElement:
    """A finitely supported map (level, signature) -> LaurentPoly coefficient."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=None):
        self._coeffs = {}
        if coeffs:
            for (n, sig), c in coeffs.items():
                if not isinstance(c, LaurentPoly):
                    c = LaurentPoly.const(c)
                if not c.is_zero():
                    self._coeffs[(int(n), tuple(sig))] = c

    @classmethod
    def basis(cls, sig) -> "ZhatElement":
        sig = tuple(sig)
        return cls({(len(sig), sig): LaurentPoly.one()})

    @classmethod
    def unit(cls) -> "ZhatElement":
        return cls.basis(())

    @property
    def coeffs(self) -> dict:
        return dict(self._coeffs)

    def items(self):
        return self._coeffs.items()

    def coefficient(self, sig) -> LaurentPoly:
        sig = tuple(sig)
        return self._coeffs.get((len(sig), sig), LaurentPoly.zero())

    def levels(self) -> set:
        return {n for (n, _) in self._coeffs}

    def is_zero(self) -> bool:
        return not self._coeffs

    def __eq__(self, other):
        return isinstance(other, ZhatElement) and self._coeffs == other._coeffs

    def __add__(self, other):
        out = dict(self._coeffs)
        for k, c in other._coeffs.items():
            s = out.get(k, LaurentPoly.zero()) + c
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        return ZhatElement(out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c) -> "ZhatElement":
        if not isinstance(c, LaurentPoly):
            c = LaurentPoly.const(c)
        return ZhatElement({k: c * v for k, v in self._coeffs.items()})

    def __repr__(self):
        body = ", ".join(f"z{list(sig)}: {c}" for (_, sig), c in sorted(self._coeffs.items()))
        return f"ZhatElement({{{body}}})"


def zhat_mul(x: ZhatElement, y: ZhatElement, window=None) -> ZhatElement:
    """Bilinear extension of z-hat_mu z-hat_nu = sum_lam c(lam|mu,nu) q^[mu,nu] z-hat_lam.

    The full expansion has infinitely many components (the splice
    coefficient stays nonzero along stretched signatures such as (k, s-k)
    for all large k), so a finite map can only hold a window of it.  With
    window=None the product is materialized on the minimal-shift component
    family, the one the partition calculus sees; this family is symmetric
    in (mu, nu) and closed under products of partition-shaped signatures.
    An explicit window (iterable of signatures) materializes exactly those
    coefficients instead, via zhat_coefficient.
    """
    if window is not None:
        out = {}
        for lam in window:
            lam = tuple(lam)
            c = zhat_coefficient(x, y, lam)
            if not c.is_zero():
                out[(len(lam), lam)] = c
        return ZhatElement(out)
    out = {}
    for (m, mu), a in x.items():
        for (n, nu), b in y.items():
            weight = a * b * LaurentPoly.q_power(bracket(mu, nu))
            for lam, c in splice_components(mu, nu):
                key = (m + n, lam)
                s = out.get(key, LaurentPoly.zero()) + weight * c
                if s.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = s
    return ZhatElement(out)


def zhat_coefficient(x: ZhatElement, y: ZhatElement, lam) -> LaurentPoly:
    """Exact coefficient of z-hat_lam in the product x y (a finite sum)."""
    lam = tuple(lam)
    total = LaurentPoly.zero()
    for (m, mu), a in x.items():
        for (n, nu), b in y.items():
            if m + n != len(lam) or sum(mu) + sum(nu) != sum(lam):
                continue
            c = lr_splice(lam, mu, nu)
            if c:
                total = total + a * b * LaurentPoly.q_power(bracket(mu, nu)) * c
    return total


class SigmaElement:
    """A finitely graded element: finitely many levels, each a central function."""

    __slots__ = ("_parts",)

    def __init__(self, parts: dict):
        self._parts = {}
        for n, f in parts.items():
            if f.level != n:
                raise LevelMismatch(f"component at grade {n} has level {f.level}")
            self._parts[int(n)] = f

    @classmethod
    def z_basis(cls, sig) -> "SigmaElement":
        sig = tuple(sig)
        return cls({len(sig): CentralFunction.indicator(len(sig), sig)})

    @classmethod
    def level_unit(cls, n: int) -> "SigmaElement":
        """The unit 1_n of the level-n center, viewed inside the graded sum."""
        return cls({n: CentralFunction.one(n)})

    @property
    def parts(self) -> dict:
        return dict(self._parts)

    def levels(self) -> set:
        return set(self._parts)

    def component(self, n: int) -> CentralFunction:
        return self._parts.get(n, CentralFunction.zero(n))


def _ring_scalars(graph: BranchingGraph):
    """Phase and dimension callables for the graph's scalar mode."""
    if graph.kind == GT_CLASSICAL:
        return (lambda mu, nu: 1), (lambda lam: Fraction(dim_classical(lam)))
    if graph.kind != GTQ:
        raise QBranchError(f"the graded ring lives on GT graphs, not {graph.kind!r}")
    sign = 1 if graph.beta == -1 else -1
    if graph.symbolic:
        return (lambda mu, nu: LaurentPoly.q_power(sign * bracket(mu, nu))), qdim
    q0 = graph.q
    return (lambda mu, nu: q0 ** (sign * bracket(mu, nu))), (lambda lam: _qdim_at(lam, q0))


def sigma_eval_product(graph: BranchingGraph, x: SigmaElement, y: SigmaElement, lam):
    """Pointwise value of the graded product of x and y at the vertex lam.

    (f.g)(lam) = sum over splits k+l = level and pairs (mu, nu) with
    c(lam|mu,nu) != 0 of c q^[mu,nu] (d(mu) d(nu)/d(lam)) f_k(mu) g_l(nu).
    """
    lam = tuple(lam)
    n = len(lam)
    phase, dim = _ring_scalars(graph)
    d_lam = dim(lam)
    total = 0
    for k in x.levels():
        ell = n - k
        if ell < 0 or ell not in y.levels():
            continue
        f, g = x.component(k), y.component(ell)
        pairs = _candidate_pairs(lam, k, f, g)
        for mu, nu, c in pairs:
            fv = f(mu)
            if scalar_is_zero(fv):
                continue
            gv = g(nu)
            if scalar_is_zero(gv):
                continue
            term = c * phase(mu, nu) * dim(mu) * dim(nu) * fv * gv
            total = term / d_lam + total
    return total


def _candidate_pairs(lam, k, f: CentralFunction, g: CentralFunction):
    """(mu, nu, c) candidates with c = c(lam|mu,nu) != 0, using support hints."""
    n = len(lam)
    ell = n - k
    if f.support_hint is None and g.support_hint is None:
        return splice_pairs(lam, k)
    out = []
    w = sum(lam)
    if f.support_hint is not None:
        mus = [m for m in f.support_hint if len(m) == k]
    else:
        mus = list(descendants(lam, k))
    if g.support_hint is not None:
        nus = [v for v in g.support_hint if len(v) == ell]
    else:
        nus = list(descendants(lam, ell))
    for mu in mus:
        for nu in nus:
            if sum(mu) + sum(nu) != w:
                continue
            c = lr_splice(lam, mu, nu)
            if c:
                out.append((mu, nu, c))
    return out


def sigma_product_function(graph: BranchingGraph, x: SigmaElement, y: SigmaElement,
                           n: int) -> CentralFunction:
    """The level-n component of the product x.y as a lazy central function."""
    return CentralFunction(n, lambda v: sigma_eval_product(graph, x, y, v))


def sigma_from_zhat(graph: BranchingGraph, x: ZhatElement) -> SigmaElement:
    """Realize a z-hat combination as central functions (divide by dimensions)."""
    _, dim = _ring_scalars(graph)
    by_level: dict = {}
    for (n, sig), c in x.items():
        if graph.symbolic:
            val = c / dim(sig)
        elif graph.kind == GTQ:
            val = evaluate_scalar(c, graph.q) / dim(sig)
        else:
            val = evaluate_scalar(c, 1) / dim(sig)
        by_level.setdefault(n, {})[sig] = val
    return SigmaElement({n: CentralFunction.from_dict(n, vals)
                         for n, vals in by_level.items()})


@dataclass(frozen=True)
class SystemElement:
    """A representative Theta_{infinity,n}(f) of the representation system."""

    level: int
    f: CentralFunction

    def __post_init__(self):
        if self.f.level != self.level:
            raise LevelMismatch("representative level disagrees with its function")

    @classmethod
    def unit(cls) -> "SystemElement":
        return cls(0, CentralFunction.one(0))

    @classmethod
    def from_function(cls, f: CentralFunction) -> "SystemElement":
        return cls(f.level, f)


def push_to_level(graph: BranchingGraph, s: SystemElement, N: int) -> SystemElement:
    """The equivalent representative at level N >= s.level (iterated Theta)."""
    if N < s.level:
        raise LevelMismatch(f"cannot push a level-{s.level} representative down to {N}")
    f = s.f
    for _ in range(N - s.level):
        f = theta_map(graph, f)
    return SystemElement(N, f)


def module_action(graph: BranchingGraph, f: CentralFunction,
                  s: SystemElement) -> SystemElement:
    """Left action of a level-m central function on a representative.

    The result is the level-(m+n) representative of the graded product;
    acting on the unit representative returns f's own class.
    """
    x = SigmaElement({f.level: f})
    y = SigmaElement({s.level: s.f})
    n = f.level + s.level
    return SystemElement(n, sigma_product_function(graph, x, y, n))


@dataclass(frozen=True)
class WindowVerdict:
    agree: bool
    witness: tuple | None = None
    lhs: object = None
    rhs: object = None

    def __bool__(self):
        return self.agree


def equal_on_window(graph: BranchingGraph, x: SystemElement, y: SystemElement,
                    N: int, window) -> WindowVerdict:
    """Compare representatives at level N on a finite window, exactly.

    A disagreement (Differ) soundly refutes equality in the inductive
    limit; agreement on a window is evidence only.
    """
    if N < max(x.level, y.level):
        raise LevelMismatch("window level below a representative level")
    xf = push_to_level(graph, x, N).f
    yf = push_to_level(graph, y, N).f
    for v in window:
        a, b = xf(v), yf(v)
        if not scalars_equal(a, b):
            return WindowVerdict(False, tuple(v), a, b)
    return WindowVerdict(True)


def nonneg_on_window(graph: BranchingGraph, s: SystemElement, q0,
                     N: int, window) -> WindowVerdict:
    """Check the representative's values at q = q0 are >= 0 on the window."""
    q0 = Fraction(q0)
    if not 0 < q0 < 1:
        raise QBranchError("positivity checks need q0 in (0, 1)")
    f = push_to_level(graph, s, N).f
    for v in window:
        val = evaluate_scalar(f(v), q0)
        if val < 0:
            return WindowVerdict(False, tuple(v), val)
    return WindowVerdict(True)
