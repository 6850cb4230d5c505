"""Independent brute-force oracles used to cross-check the main algorithms.

These deliberately avoid the code paths they validate: LR coefficients are
re-derived by expanding exact monomial dictionaries of Schur polynomials
and peeling leading terms; Schur evaluation is re-derived from the
bialternant determinant; the quantum dimension from the q-deformed Weyl
product; tableau counts from the branching recursion.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

from .scalars import LaurentPoly, QRatio
from .signatures import gt_weights, young_covers_below


@lru_cache(maxsize=None)
def schur_monomials(lam: tuple) -> dict:
    """The monomial expansion of s_lam as {weight tuple: multiplicity}."""
    out: dict = {}
    for w in gt_weights(lam):
        out[w] = out.get(w, 0) + 1
    return out


def _dict_mul_disjoint(a: dict, b: dict) -> dict:
    """Product of monomial dicts over disjoint variable blocks (concatenate)."""
    out: dict = {}
    for wa, ca in a.items():
        for wb, cb in b.items():
            key = wa + wb
            out[key] = out.get(key, 0) + ca * cb
    return out


def _dict_mul_same(a: dict, b: dict) -> dict:
    """Product of monomial dicts in the same variables (add exponents)."""
    out: dict = {}
    for wa, ca in a.items():
        for wb, cb in b.items():
            key = tuple(x + y for x, y in zip(wa, wb))
            c = out.get(key, 0) + ca * cb
            if c:
                out[key] = c
            else:
                out.pop(key, None)
    return out


def greedy_schur_expand(poly: dict) -> dict:
    """Expand a symmetric monomial dict in the Schur basis by peeling.

    The lex-greatest exponent vector of a Schur-positive (or any Schur-)
    combination is the leading weight of its lex-greatest component.
    """
    work = {k: v for k, v in poly.items() if v}
    out: dict = {}
    while work:
        lead = max(work)
        sig = tuple(lead)
        if any(sig[i] < sig[i + 1] for i in range(len(sig) - 1)):
            raise AssertionError(f"leading exponent {sig} is not weakly decreasing")
        c = work[lead]
        out[sig] = c
        for w, m in schur_monomials(sig).items():
            v = work.get(w, 0) - c * m
            if v:
                work[w] = v
            else:
                work.pop(w, None)
    return out


def tensor_expand_oracle(mu, nu) -> dict:
    """Schur expansion of s_mu s_nu in len(mu) variables, via monomials."""
    prod = _dict_mul_same(schur_monomials(tuple(mu)), schur_monomials(tuple(nu)))
    return greedy_schur_expand(prod)


def splice_expand_oracle(lam, m: int, n: int) -> dict:
    """All (mu, nu) -> c(lam|mu,nu), by peeling s_lam(x_1..x_m, y_1..y_n)."""
    work = {k: v for k, v in schur_monomials(tuple(lam)).items() if v}
    out: dict = {}
    while work:
        lead = max(work)
        mu, nu = lead[:m], lead[m:]
        for sig in (mu, nu):
            if any(sig[i] < sig[i + 1] for i in range(len(sig) - 1)):
                raise AssertionError(f"leading block {sig} is not weakly decreasing")
        c = work[lead]
        out[(mu, nu)] = c
        block = _dict_mul_disjoint(schur_monomials(mu), schur_monomials(nu))
        for w, mult in block.items():
            v = work.get(w, 0) - c * mult
            if v:
                work[w] = v
            else:
                work.pop(w, None)
    return out


def _det(rows) -> Fraction:
    n = len(rows)
    total = Fraction(0)
    for perm in itertools.permutations(range(n)):
        sign = 1
        seen = list(perm)
        for i in range(n):
            for j in range(i + 1, n):
                if seen[i] > seen[j]:
                    sign = -sign
        term = Fraction(1)
        for i in range(n):
            term *= rows[i][perm[i]]
        total += sign * term
    return total


def bialternant_schur(lam, points) -> Fraction:
    """det[x_i^(lam_j + n - j)] / det[x_i^(n - j)] at distinct rational points."""
    n = len(lam)
    pts = [Fraction(p) for p in points]
    num = [[p ** (lam[j] + n - 1 - j) for j in range(n)] for p in pts]
    den = [[p ** (n - 1 - j) for j in range(n)] for p in pts]
    d = _det(den)
    if d == 0:
        raise ZeroDivisionError("bialternant needs distinct nonzero points")
    return _det(num) / d


def _q_integer(k: int) -> LaurentPoly:
    """[k] = q^(k-1) + q^(k-3) + ... + q^(1-k), the symmetric q-integer."""
    return LaurentPoly({e: 1 for e in range(1 - k, k, 2)})


def qdim_weyl_product(lam) -> QRatio:
    """Quantum Weyl dimension prod_{i<j} [lam_i - lam_j + j - i] / [j - i]."""
    n = len(lam)
    num = LaurentPoly.one()
    den = LaurentPoly.one()
    for i in range(n):
        for j in range(i + 1, n):
            num = num * _q_integer(lam[i] - lam[j] + j - i)
            den = den * _q_integer(j - i)
    return QRatio(num, den)


@lru_cache(maxsize=None)
def syt_count_recursive(lam: tuple) -> int:
    """Standard-tableau count via the corner-removal recursion."""
    if sum(lam) == 0:
        return 1
    return sum(syt_count_recursive(mu) for mu in young_covers_below(lam))


def pushdown_matrix_oracle(graph, top_vec, target: int):
    """Compose explicit stochastic row dictionaries step by step."""
    from .branching import covers, link, vertex_level

    dist = {tuple(v): Fraction(val) for v, val in top_vec.items()}
    level = top_vec.level
    while level > target:
        nxt: dict = {}
        for lam, mass in dist.items():
            for mu in covers(graph, lam):
                p = link(graph, lam, mu)
                if isinstance(p, QRatio):
                    raise TypeError("matrix oracle needs a numeric graph")
                if p:
                    nxt[mu] = nxt.get(mu, Fraction(0)) + mass * p
        dist = nxt
        level -= 1
    return dist
