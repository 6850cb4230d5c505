"""Schur evaluation, quantum and classical dimensions, Littlewood-Richardson.

Schur polynomials are evaluated as sums of monomials over Gelfand-Tsetlin
patterns, which stays defined at repeated points (the bialternant does not).
LR coefficients are computed by the skew-tableau rule after shifting
signatures to partitions; `lr_expand` grows all components of a product at
once by adding horizontal strips with the lattice condition.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import LengthMismatch, ZeroPoint
from .scalars import LaurentPoly
from .signatures import check_partition, gt_weights, shift


def _is_zero_scalar(x) -> bool:
    if isinstance(x, LaurentPoly):
        return x.is_zero()
    return x == 0


def schur_eval(lam, points):
    """s_lam(points) = sum over GT patterns of the weight monomial.

    Works over any commutative scalar type supporting ** with integer
    exponents (Fraction, LaurentPoly, complex).  Points must be nonzero
    when lam has negative parts.
    """
    lam = tuple(lam)
    if len(points) != len(lam):
        raise LengthMismatch(f"need {len(lam)} points, got {len(points)}")
    if lam and lam[-1] < 0 and any(_is_zero_scalar(p) for p in points):
        raise ZeroPoint("zero evaluation point with a negative signature part")
    total = 0
    for w in gt_weights(lam):
        term = 1
        for p, e in zip(points, w):
            term = term * p**e
        total = total + term
    return total


@lru_cache(maxsize=None)
def _principal_exponent_sum(lam: tuple, exps: tuple) -> LaurentPoly:
    """Sum over GT weights w of q^(exps . w), as an exact Laurent polynomial."""
    counts: dict = {}
    for w in gt_weights(lam):
        e = sum(a * b for a, b in zip(exps, w))
        counts[e] = counts.get(e, 0) + 1
    return LaurentPoly(counts)


def qdim(lam) -> LaurentPoly:
    """Quantum dimension s_lam(q^{-n+1}, q^{-n+3}, ..., q^{n-1}).

    Invariant under q <-> q^-1; its value at q = 1 is the Weyl dimension.
    """
    lam = tuple(lam)
    n = len(lam)
    if n < 1:
        return LaurentPoly.one()
    exps = tuple(2 * i - n - 1 for i in range(1, n + 1))
    return _principal_exponent_sum(lam, exps)


def cartan_moment(lam, exponents) -> LaurentPoly:
    """Trace of the KMS density times a Cartan monomial on the module lam.

    With exponents m this is sum over GT weights w of
    q^(sum_i (2i - n - 1 + m_i) w_i); all-zero exponents give qdim(lam).
    """
    lam = tuple(lam)
    n = len(lam)
    if len(exponents) != n:
        raise LengthMismatch(f"need {n} exponents, got {len(exponents)}")
    exps = tuple(2 * i - n - 1 + int(m) for i, m in zip(range(1, n + 1), exponents))
    return _principal_exponent_sum(lam, exps)


@lru_cache(maxsize=None)
def dim_classical(lam: tuple) -> int:
    """Weyl dimension product prod_{i<j} (lam_i - lam_j + j - i)/(j - i)."""
    lam = tuple(lam)
    n = len(lam)
    if n < 1:
        return 1
    val = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            val *= Fraction(lam[i] - lam[j] + j - i, j - i)
    assert val.denominator == 1
    return int(val)


# ---------------------------------------------------------------------------
# Littlewood-Richardson


def _pad(p, n):
    return tuple(p) + (0,) * (n - len(p))


@lru_cache(maxsize=None)
def lr_count(lam: tuple, mu: tuple, nu: tuple) -> int:
    """Number of LR skew tableaux of shape lam/mu and content nu (partitions)."""
    lam = check_partition(lam)
    mu = check_partition(mu)
    nu = check_partition(nu)
    if sum(lam) != sum(mu) + sum(nu):
        return 0
    if len(mu) > len(lam):
        return 0
    mu_p = _pad(mu, len(lam))
    if any(m > l for m, l in zip(mu_p, lam)):
        return 0
    if not nu:
        return 1
    # Cells in reverse reading order: rows top to bottom, right to left.
    cells = []
    for r in range(len(lam)):
        for c in range(lam[r] - 1, mu_p[r] - 1, -1):
            cells.append((r, c))
    grid = [[0] * lam[r] for r in range(len(lam))]
    ell = len(nu)
    counts = [0] * (ell + 1)

    def rec(i: int) -> int:
        if i == len(cells):
            return 1
        r, c = cells[i]
        hi = ell
        if c + 1 < lam[r] and c + 1 >= mu_p[r]:
            hi = min(hi, grid[r][c + 1])  # weakly increasing along the row
        lo = 1
        if r > 0 and c >= mu_p[r - 1]:
            lo = grid[r - 1][c] + 1  # strictly increasing down the column
        total = 0
        for v in range(lo, hi + 1):
            if counts[v] >= nu[v - 1]:
                continue
            if v > 1 and counts[v] >= counts[v - 1]:
                continue  # lattice word prefix condition
            counts[v] += 1
            grid[r][c] = v
            total += rec(i + 1)
            counts[v] -= 1
        grid[r][c] = 0
        return total

    return rec(0)


@lru_cache(maxsize=None)
def lr_expand(mu: tuple, nu: tuple, max_rows: int) -> dict:
    """All components of the product s_mu * s_nu in at most max_rows rows.

    Returns {partition: coefficient}.  Components are built by adding the
    horizontal strip of each nu part in turn, keeping the lattice condition
    cum_v(row r) <= cum_{v-1}(row r-1).
    """
    mu = check_partition(mu)
    nu = check_partition(nu)
    if len(mu) > max_rows or len(nu) > max_rows:
        return {}
    out: dict = {}
    base = list(_pad(mu, max_rows))

    def add_strip(shape, size, prev_cum):
        """Yield (new_shape, cum) for horizontal strips of the given size."""
        results = []

        def rows(r, left, cur, cum_prev_row, acc_cum):
            if left == 0:
                new_shape = tuple(cur) + tuple(shape[r:])
                results.append((new_shape, acc_cum + [cum_prev_row] * (max_rows - r)))
                return
            if r == max_rows:
                return
            cap = left
            if r > 0:
                cap = min(cap, shape[r - 1] - shape[r])  # horizontal strip
            if prev_cum is not None:
                allowed = (prev_cum[r - 1] if r > 0 else 0) - cum_prev_row
                cap = min(cap, allowed)  # lattice condition
            for add in range(0, cap + 1):
                rows(r + 1, left - add, cur + [shape[r] + add],
                     cum_prev_row + add, acc_cum + [cum_prev_row + add])

        rows(0, size, [], 0, [])
        return results

    def rec(shape, v, prev_cum):
        if v == len(nu):
            lam = tuple(shape)
            while lam and lam[-1] == 0:
                lam = lam[:-1]
            out[lam] = out.get(lam, 0) + 1
            return
        for new_shape, cum in add_strip(shape, nu[v], prev_cum):
            rec(list(new_shape), v + 1, cum)

    rec(base, 0, None)
    return out


def _shift_to_partitions(*sigs):
    """Common shift making every signature a partition; returns (c, shifted)."""
    c = 0
    for s in sigs:
        if s and s[-1] < 0:
            c = max(c, -s[-1])
    return c, [check_partition(shift(s, c)) for s in sigs]


def lr_splice(lam, mu, nu) -> int:
    """Restriction multiplicity c(lam | mu, nu) for the block embedding.

    lam has length m+n, mu length m, nu length n; invariant under the
    simultaneous shift of all three by the same constant.
    """
    lam, mu, nu = tuple(lam), tuple(mu), tuple(nu)
    if len(lam) != len(mu) + len(nu):
        raise LengthMismatch(
            f"splice needs lengths (m+n, m, n); got {len(lam)}, {len(mu)}, {len(nu)}")
    if sum(lam) != sum(mu) + sum(nu):
        return 0
    _, (lam_p, mu_p, nu_p) = _shift_to_partitions(lam, mu, nu)
    return lr_count(lam_p, mu_p, nu_p)


def lr_tensor(lam, mu, nu) -> int:
    """Multiplicity of lam in the tensor product mu (x) nu for GL(n)."""
    lam, mu, nu = tuple(lam), tuple(mu), tuple(nu)
    n = len(lam)
    if not (len(mu) == n and len(nu) == n):
        raise LengthMismatch("tensor multiplicity needs three equal-length signatures")
    if sum(lam) != sum(mu) + sum(nu):
        return 0
    a = max(0, -mu[-1]) if n else 0
    b = max(0, -nu[-1]) if n else 0
    lam_s = shift(lam, a + b)
    if lam_s and lam_s[-1] < 0:
        return 0
    return lr_count(check_partition(lam_s), check_partition(shift(mu, a)),
                    check_partition(shift(nu, b)))


@lru_cache(maxsize=None)
def splice_components(mu: tuple, nu: tuple) -> tuple:
    """All (lam, c) with c = c(lam | mu, nu) nonzero; lam has length m+n."""
    m, n = len(mu), len(nu)
    c, (mu_p, nu_p) = _shift_to_partitions(mu, nu)
    comps = lr_expand(mu_p, nu_p, m + n)
    return tuple(sorted((shift(_pad(lam, m + n), -c), k) for lam, k in comps.items()))


@lru_cache(maxsize=None)
def tensor_components(mu: tuple, nu: tuple) -> tuple:
    """All (lam, c) with lam of length n appearing in mu (x) nu for GL(n)."""
    n = len(mu)
    if len(nu) != n:
        raise LengthMismatch("tensor components need equal lengths")
    a = max(0, -mu[-1]) if n else 0
    b = max(0, -nu[-1]) if n else 0
    comps = lr_expand(check_partition(shift(mu, a)), check_partition(shift(nu, b)), n)
    return tuple(sorted((shift(_pad(lam, n), -(a + b)), k) for lam, k in comps.items()))


@lru_cache(maxsize=None)
def splice_pairs(lam: tuple, k: int) -> tuple:
    """All (mu, nu, c) with mu of length k, nu of length n-k, c(lam|mu,nu) != 0."""
    from .signatures import descendants

    n = len(lam)
    if not (0 <= k <= n):
        raise LengthMismatch(f"split {k} out of range for length {n}")
    out = []
    for mu in descendants(lam, k):
        rest = sum(lam) - sum(mu)
        for nu in descendants(lam, n - k):
            if sum(nu) != rest:
                continue
            c = lr_splice(lam, mu, nu)
            if c:
                out.append((mu, nu, c))
    return tuple(out)
