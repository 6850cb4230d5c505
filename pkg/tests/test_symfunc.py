import random
from fractions import Fraction

import pytest

from qbranch.errors import LengthMismatch, ZeroPoint
from qbranch.oracles import (
    bialternant_schur,
    qdim_weyl_product,
    splice_expand_oracle,
    tensor_expand_oracle,
)
from qbranch.scalars import LaurentPoly, QRatio, laurent_eval, qratio_eq
from qbranch.signatures import gt_weights, partitions_of, shift, signatures_of_length
from qbranch.symfunc import (
    cartan_moment,
    dim_classical,
    lr_splice,
    lr_tensor,
    qdim,
    schur_eval,
    splice_components,
    splice_pairs,
    tensor_components,
)

Q = LaurentPoly.q_power(1)
QI = LaurentPoly.q_power(-1)


def _random_sig(rng, n, bound=3):
    return tuple(sorted((rng.randint(-bound, bound) for _ in range(n)), reverse=True))


def test_schur_examples():
    assert schur_eval((0, 0, 0), [Fraction(2), Fraction(3), Fraction(5)]) == 1
    assert schur_eval((1, 0), [Fraction(2), Fraction(3)]) == 5
    assert schur_eval((1, 0), [QI, Q]) == QI + Q
    with pytest.raises(LengthMismatch):
        schur_eval((1, 0), [Fraction(1)])
    with pytest.raises(ZeroPoint):
        schur_eval((1, -1), [Fraction(0), Fraction(2)])


def test_schur_matches_bialternant_at_random_points():
    rng = random.Random(21)
    for _ in range(60):
        n = rng.randint(1, 4)
        lam = _random_sig(rng, n)
        pts = rng.sample([Fraction(k, 11) for k in range(1, 40)], n)
        assert schur_eval(lam, pts) == bialternant_schur(lam, pts)


def test_qdim_examples():
    for k in (-3, 0, 2, 5):
        assert qdim((k,)) == LaurentPoly.one()
    assert qdim((1, 0)) == QI + Q
    assert qdim((0, 0, 0)) == LaurentPoly.one()


def test_qdim_palindrome_and_q1():
    rng = random.Random(22)
    for _ in range(40):
        lam = _random_sig(rng, rng.randint(1, 4))
        d = qdim(lam)
        assert d == d.substitute_q_inverse()
        assert laurent_eval(d, 1) == dim_classical(lam)


def test_qdim_against_weyl_product_oracle():
    for n in range(1, 5):
        for lam in signatures_of_length(n, -2, 3):
            assert qratio_eq(QRatio(qdim(lam)), qdim_weyl_product(lam))


def test_dim_classical_examples():
    assert dim_classical((0, 0, 0, 0)) == 1
    assert dim_classical((1, 0)) == 2
    assert dim_classical((2, 1, 0)) == 8
    rng = random.Random(23)
    for _ in range(25):
        lam = _random_sig(rng, rng.randint(1, 3))
        assert dim_classical(lam) == len(gt_weights(lam))


def test_lr_splice_examples():
    assert lr_splice((1, 1, 0), (1, 0), (1,)) == 1
    assert lr_splice((2, 1, 0), (1, 0), (1,)) == 0
    assert lr_splice((3, 0), (1,), (2,)) == 1
    assert lr_splice((2, 1), (1,), (2,)) == 1
    with pytest.raises(LengthMismatch):
        lr_splice((1, 0), (1, 0), (1,))


def test_lr_tensor_examples():
    assert lr_tensor((1, 1), (1, 0), (1, 0)) == 1
    assert lr_tensor((2, 0), (1, 0), (1, 0)) == 1
    assert lr_tensor((3, 0), (1, 0), (1, 0)) == 0
    zero = (0, 0, 0)
    assert lr_tensor((2, 1, 0), zero, (2, 1, 0)) == 1
    with pytest.raises(LengthMismatch):
        lr_tensor((1, 0), (1,), (1,))


def test_lr_shift_invariance():
    rng = random.Random(24)
    for _ in range(40):
        m, n = rng.randint(1, 2), rng.randint(1, 2)
        mu = _random_sig(rng, m, 2)
        nu = _random_sig(rng, n, 2)
        lam = _random_sig(rng, m + n, 4)
        c = rng.randint(-4, 4)
        assert lr_splice(lam, mu, nu) == lr_splice(
            shift(lam, c), shift(mu, c), shift(nu, c))
    for _ in range(40):
        k = rng.randint(1, 3)
        mu, nu, lam = _random_sig(rng, k, 2), _random_sig(rng, k, 2), _random_sig(rng, k, 4)
        c = rng.randint(-4, 4)
        assert lr_tensor(lam, mu, nu) == lr_tensor(
            shift(lam, 2 * c), shift(mu, c), shift(nu, c))


def test_tensor_components_match_oracle():
    rng = random.Random(25)
    for _ in range(40):
        n = rng.randint(1, 3)
        mu, nu = _random_sig(rng, n, 2), _random_sig(rng, n, 2)
        comps = dict(tensor_components(mu, nu))
        assert comps == tensor_expand_oracle(mu, nu)
        for lam, c in comps.items():
            assert lr_tensor(lam, mu, nu) == c


def test_tensor_mass_identity():
    rng = random.Random(26)
    for _ in range(20):
        n = rng.randint(1, 3)
        mu, nu = _random_sig(rng, n, 2), _random_sig(rng, n, 2)
        total = LaurentPoly.zero()
        for lam, c in tensor_components(mu, nu):
            total = total + qdim(lam) * c
        assert total == qdim(mu) * qdim(nu)


def test_splice_completeness_at_rational_points():
    # s_lam(t_1..t_{m+n}) = sum c(lam|mu,nu) s_mu(t_1..t_m) s_nu(t_{m+1}..)
    rng = random.Random(27)
    for _ in range(25):
        m, n = rng.randint(1, 2), rng.randint(1, 2)
        lam = _random_sig(rng, m + n, 2)
        pts = rng.sample([Fraction(k, 7) for k in range(1, 30)], m + n)
        lhs = schur_eval(lam, pts)
        rhs = Fraction(0)
        for mu, nu, c in splice_pairs(lam, m):
            rhs += c * schur_eval(mu, pts[:m]) * schur_eval(nu, pts[m:])
        assert lhs == rhs


def test_splice_pairs_match_peel_oracle():
    for m, n in ((1, 1), (2, 1), (1, 2), (2, 2)):
        for size in range(5):
            for lam in partitions_of(size):
                if len(lam) > m + n:
                    continue
                lam_s = lam + (0,) * (m + n - len(lam))
                expected = splice_expand_oracle(lam_s, m, n)
                got = {(mu, nu): c for mu, nu, c in splice_pairs(lam_s, m)}
                assert got == expected


def test_splice_components_consistent_with_lr_splice():
    rng = random.Random(28)
    for _ in range(30):
        m, n = rng.randint(1, 2), rng.randint(1, 2)
        mu, nu = _random_sig(rng, m, 2), _random_sig(rng, n, 2)
        for lam, c in splice_components(mu, nu):
            assert lr_splice(lam, mu, nu) == c


def test_cartan_moment():
    assert cartan_moment((1, 0), (1, 0)) == LaurentPoly.one() + Q
    assert cartan_moment((0, 0), (5, -7)) == LaurentPoly.one()
    rng = random.Random(29)
    for _ in range(25):
        lam = _random_sig(rng, rng.randint(1, 3))
        assert cartan_moment(lam, (0,) * len(lam)) == qdim(lam)
    with pytest.raises(LengthMismatch):
        cartan_moment((1, 0), (1,))


def test_cartan_moment_matches_direct_weight_sum():
    rng = random.Random(30)
    for _ in range(20):
        n = rng.randint(1, 3)
        lam = _random_sig(rng, n, 2)
        m = tuple(rng.randint(-2, 2) for _ in range(n))
        expected = LaurentPoly.zero()
        for w in gt_weights(lam):
            e = sum((2 * (i + 1) - n - 1 + m[i]) * w[i] for i in range(n))
            expected = expected + LaurentPoly.q_power(e)
        assert cartan_moment(lam, m) == expected
