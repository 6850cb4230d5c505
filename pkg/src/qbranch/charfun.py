"""Quantized character functions restricted to the diagonal torus.

The restriction of the state with level distributions nu is the q-Schur
generating function

    chi_n(t) = sum_lam nu_n(lam) s_lam(t_1, q^2 t_2, ..., q^(2(n-1)) t_n)
                              / s_lam(1, q^2, ..., q^(2(n-1)))

(the q^-2 powers appear instead on the reversed-flow graph).  Torus points
are unit-modulus complex numbers; points with entries +-1 admit an exact
rational evaluation path.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .branching import GTQ, L1Vector
from .errors import GraphMismatch, NotProbability, QBranchError
from .harmonic import CoherentSystem, adjoint_system, character_product
from .scalars import evaluate_scalar
from .symfunc import schur_eval

MODULUS_TOL = 1e-12


def torus_point(values, tol: float = MODULUS_TOL) -> tuple:
    """Validate a torus point; +-1 entries stay exact, the rest become complex."""
    out = []
    for v in values:
        if isinstance(v, (int, Fraction)) and abs(v) == 1:
            out.append(Fraction(v))
            continue
        z = complex(v)
        if abs(abs(z) - 1) > tol:
            raise QBranchError(f"not a torus coordinate: {v!r} (|.| = {abs(z)})")
        out.append(z)
    return tuple(out)


def random_torus_point(n: int, rng) -> tuple:
    return tuple(cmath.exp(2j * cmath.pi * rng.random()) for _ in range(n))


def _exact_mode(t) -> bool:
    return all(isinstance(v, (int, Fraction)) for v in t)


@lru_cache(maxsize=None)
def _denominator(lam: tuple, q0: Fraction, beta: int) -> Fraction:
    n = len(lam)
    points = [q0 ** (-2 * beta * i) for i in range(n)]
    return schur_eval(lam, points)


def _check_probability(entries: dict):
    total = Fraction(0)
    for v, val in entries.items():
        if val < 0:
            raise NotProbability(f"negative mass at {v}")
        total += val
    if total != 1:
        raise NotProbability(f"total mass {total} != 1")


def char_restriction(nu_n: L1Vector, q0, t, beta: int = -1):
    """Value of the torus-restricted character function at the point t.

    Exact Fraction for +-1 points, complex otherwise; always exactly 1 at
    t = (1, ..., 1).
    """
    q0 = Fraction(q0)
    if not 0 < q0 < 1:
        raise QBranchError(f"q must lie in (0, 1), got {q0}")
    n = nu_n.level
    t = torus_point(t)
    if len(t) != n:
        raise QBranchError(f"need a torus point of size {n}, got {len(t)}")
    entries = {v: evaluate_scalar(val, q0) for v, val in nu_n.items()}
    _check_probability(entries)
    if _exact_mode(t):
        points = [t[i] * q0 ** (-2 * beta * i) for i in range(n)]
        total = Fraction(0)
        for lam, mass in entries.items():
            total += mass * schur_eval(lam, points) / _denominator(lam, q0, beta)
        return total
    qf = float(q0)
    points = [complex(t[i]) * qf ** (-2 * beta * i) for i in range(n)]
    total = 0j
    for lam, mass in entries.items():
        total += float(mass) * schur_eval(lam, points) / float(_denominator(lam, q0, beta))
    return total


def char_of(nu: CoherentSystem, n: int, t, q0=None):
    """Character value of a coherent system at its level n."""
    g = nu.graph
    if g.kind != GTQ:
        raise GraphMismatch("character restriction lives on the q-deformed graph")
    qq = Fraction(q0) if q0 is not None else g.q
    if qq is None:
        raise QBranchError("a symbolic-q system needs an explicit q0")
    return char_restriction(nu.vector(n), qq, t, beta=g.beta)


def gorin_generating_function(nu_n: L1Vector, q0, x, beta: int = -1):
    """The q-Schur generating function sum nu(lam) s_lam(x)/s_lam(1, q^2, ...).

    Substituting x = (t_1, q^2 t_2, ..., q^(2(n-1)) t_n) recovers
    char_restriction(nu, q, t) identically; the normalization point where
    the value is 1 is x = (1, q^2, ..., q^(2(n-1))) (exponents flip with
    the graph direction beta).
    """
    q0 = Fraction(q0)
    n = nu_n.level
    if len(x) != n:
        raise QBranchError(f"need {n} coordinates, got {len(x)}")
    entries = {v: evaluate_scalar(val, q0) for v, val in nu_n.items()}
    _check_probability(entries)
    if all(isinstance(v, (int, Fraction)) for v in x):
        total = Fraction(0)
        for lam, mass in entries.items():
            total += mass * schur_eval(lam, [Fraction(v) for v in x]) / _denominator(lam, q0, beta)
        return total
    pts = [complex(v) for v in x]
    total = 0j
    for lam, mass in entries.items():
        total += float(mass) * schur_eval(lam, pts) / float(_denominator(lam, q0, beta))
    return total


@dataclass(frozen=True)
class CharCheck:
    ok: bool
    defect: float
    lhs: object
    rhs: object

    def __bool__(self):
        return self.ok


def _defect(a, b) -> float:
    return abs(complex(a) - complex(b))


def coherence_check(nu: CoherentSystem, n: int, t, tol: float = 1e-10,
                    q0=None) -> CharCheck:
    """Setting the last torus coordinate to 1 must restrict level n+1 to n."""
    if n + 1 > nu.top_level:
        raise QBranchError(f"need level {n + 1} in range (top is {nu.top_level})")
    t = torus_point(t)
    lhs = char_of(nu, n + 1, tuple(t) + (1,), q0=q0)
    rhs = char_of(nu, n, t, q0=q0)
    d = _defect(lhs, rhs)
    return CharCheck(d <= tol, d, lhs, rhs)


def multiplicativity_check(nu1: CoherentSystem, nu2: CoherentSystem, n: int, t,
                           tol: float = 1e-10, q0=None) -> CharCheck:
    """The product state's character is the pointwise product of characters."""
    if nu1.graph != nu2.graph:
        raise GraphMismatch("multiplicativity needs a shared graph and q")
    prod = character_product(nu1, nu2, n)
    g = nu1.graph
    if g.kind != GTQ:
        raise GraphMismatch("multiplicativity checks live on the q-deformed graph")
    qq = Fraction(q0) if q0 is not None else g.q
    lhs = char_restriction(prod, qq, t, beta=g.beta)
    rhs = char_of(nu1, n, t, q0=q0) * char_of(nu2, n, t, q0=q0)
    d = _defect(lhs, rhs)
    return CharCheck(d <= tol, d, lhs, rhs)


def adjoint_check(nu: CoherentSystem, n: int, t, tol: float = 1e-10,
                  q0=None) -> CharCheck:
    """The reversed-flow system's character is the complex conjugate one.

    For +-1 points both sides are rationals and the comparison is exact.
    """
    adj = adjoint_system(nu)
    t = torus_point(t)
    lhs = char_of(adj, n, t, q0=q0)
    base = char_of(nu, n, t, q0=q0)
    rhs = base if isinstance(base, Fraction) else base.conjugate()
    if isinstance(lhs, Fraction) and isinstance(rhs, Fraction):
        return CharCheck(lhs == rhs, 0.0 if lhs == rhs else _defect(lhs, rhs), lhs, rhs)
    d = _defect(lhs, rhs)
    return CharCheck(d <= tol, d, lhs, rhs)
