"""Signatures, interlacing, Gelfand-Tsetlin patterns, partitions.

A signature is a weakly decreasing tuple of integers (negative entries
allowed); the empty tuple is the unique level-0 signature.  Partitions are
signatures with nonnegative parts and trailing zeros trimmed; they label
the vertices of the Young graph.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

from .errors import LengthMismatch

Signature = tuple

def check_signature(parts) -> Signature:
    """Validate weak decrease and return the canonical tuple."""
    t = tuple(int(x) for x in parts)
    for i in range(len(t) - 1):
        if t[i] < t[i + 1]:
            raise ValueError(f"not weakly decreasing: {t}")
    return t


def weight(lam) -> int:
    """|lambda|, the sum of the parts."""
    return sum(lam)


def interlace(lam, mu) -> bool:
    """Whether lam (length n+1) interlaces mu (length n): lam_i >= mu_i >= lam_{i+1}."""
    if len(lam) != len(mu) + 1:
        raise LengthMismatch(f"interlace needs lengths (n+1, n), got {len(lam)}, {len(mu)}")
    for i, m in enumerate(mu):
        if not (lam[i] >= m >= lam[i + 1]):
            return False
    return True


@lru_cache(maxsize=None)
def covers_below(lam: Signature) -> tuple:
    """All mu of length n with lam > mu (interlacing), in lexicographic order.

    The count is the product of (lam_i - lam_{i+1} + 1).
    """
    n = len(lam) - 1
    if n < 0:
        raise LengthMismatch("covers_below needs a signature of length >= 1")
    if n == 0:
        return ((),)
    ranges = [range(lam[i + 1], lam[i] + 1) for i in range(n)]
    return tuple(itertools.product(*ranges))


def shift(lam, c: int) -> Signature:
    """Add c to every part."""
    return tuple(x + c for x in lam)


def bracket(mu, nu) -> int:
    """det [[l(mu), l(nu)], [|mu|, |nu|]] = l(mu)|nu| - l(nu)|mu|."""
    return len(mu) * sum(nu) - len(nu) * sum(mu)


def conjugate_signature(lam) -> Signature:
    """The dual highest weight (-lam_n, ..., -lam_1); an involution."""
    return tuple(-x for x in reversed(lam))


class GTPattern:
    """A triangular array of interlacing signatures, rows of lengths 1..n."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(r) for r in rows)
        for k, r in enumerate(rows):
            if len(r) != k + 1:
                raise ValueError(f"row {k} has length {len(r)}, expected {k + 1}")
            if k > 0 and not interlace(r, rows[k - 1]):
                raise ValueError(f"rows {k - 1} and {k} do not interlace: {rows[k-1]}, {r}")
        self.rows = rows

    @property
    def top(self) -> Signature:
        return self.rows[-1]

    def weight(self) -> tuple:
        """The exponent vector w with w_i = (row i sum) - (row i-1 sum)."""
        sums = [0] + [sum(r) for r in self.rows]
        return tuple(sums[i + 1] - sums[i] for i in range(len(self.rows)))

    def __eq__(self, other):
        return isinstance(other, GTPattern) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"GTPattern({list(map(list, self.rows))})"


def enumerate_gt_patterns(lam) -> list:
    """All GT patterns with top row lam; the count equals the Weyl dimension."""
    lam = tuple(lam)
    if len(lam) < 1:
        raise LengthMismatch("enumerate_gt_patterns needs length >= 1")
    if len(lam) == 1:
        return [GTPattern((lam,))]
    out = []
    for mu in covers_below(lam):
        for p in enumerate_gt_patterns(mu):
            out.append(GTPattern(p.rows + (lam,)))
    return out


@lru_cache(maxsize=None)
def gt_weights(lam: Signature) -> tuple:
    """Weight vectors of all GT patterns with top row lam (with multiplicity)."""
    n = len(lam)
    if n == 0:
        return ((),)
    if n == 1:
        return ((lam[0],),)
    s = sum(lam)
    out = []
    for mu in covers_below(lam):
        w_top = s - sum(mu)
        for w in gt_weights(mu):
            out.append(w + (w_top,))
    return tuple(out)


@lru_cache(maxsize=None)
def descendants(lam: Signature, k: int) -> tuple:
    """All signatures of length k reachable from lam by iterated interlacing."""
    n = len(lam)
    if k > n or k < 0:
        raise LengthMismatch(f"no descendants of length {k} below a length-{n} signature")
    level = {lam}
    for _ in range(n - k):
        level = {mu for s in level for mu in covers_below(s)}
    return tuple(sorted(level))


@lru_cache(maxsize=None)
def signatures_of_length(n: int, lo: int, hi: int) -> tuple:
    """All weakly decreasing n-tuples with parts in [lo, hi], lexicographic."""
    if n == 0:
        return ((),)
    return tuple(sorted(
        itertools.combinations_with_replacement(range(hi, lo - 1, -1), n)))


# ---------------------------------------------------------------------------
# Partitions (Young graph vertices)


def check_partition(parts) -> tuple:
    t = check_signature(parts)
    if t and t[-1] < 0:
        raise ValueError(f"partition has a negative part: {t}")
    while t and t[-1] == 0:
        t = t[:-1]
    return t


def partitions_of(n: int) -> list:
    """All partitions of n, reverse-lexicographic."""
    if n == 0:
        return [()]
    out = []

    def rec(remaining, maxpart, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for p in range(min(remaining, maxpart), 0, -1):
            rec(remaining - p, p, prefix + [p])

    rec(n, n, [])
    return out


def young_covers_below(lam) -> list:
    """Partitions obtained by removing one corner box."""
    lam = tuple(lam)
    out = []
    for i in range(len(lam)):
        if i == len(lam) - 1 or lam[i] > lam[i + 1]:
            mu = lam[:i] + (lam[i] - 1,) + lam[i + 1:]
            out.append(check_partition(mu))
    return out


def young_covers_above(lam) -> list:
    """Partitions obtained by adding one box."""
    lam = tuple(lam)
    m = len(lam)
    out = []
    for i in range(m + 1):
        cur = lam[i] if i < m else 0
        if i == 0 or lam[i - 1] > cur:
            mu = lam[:i] + (cur + 1,) + lam[i + 1:]
            out.append(check_partition(mu))
    return out


@lru_cache(maxsize=None)
def dim_syt(lam: tuple) -> int:
    """Number of standard Young tableaux of shape lam (hook length formula)."""
    lam = check_partition(lam)
    n = sum(lam)
    if n == 0:
        return 1
    conj = [0] * lam[0]
    for part in lam:
        for j in range(part):
            conj[j] += 1
    val = Fraction(1)
    for k in range(2, n + 1):
        val *= k
    for i, part in enumerate(lam):
        for j in range(part):
            hook = (part - j) + (conj[j] - i) - 1
            val /= hook
    assert val.denominator == 1
    return int(val)
