import random
from fractions import Fraction

import pytest

from qbranch.errors import ZeroBase
from qbranch.scalars import (
    LaurentPoly,
    QRatio,
    evaluate_scalar,
    format_laurent,
    format_scalar,
    laurent_eval,
    laurent_mul,
    parse_laurent,
    parse_scalar,
    qratio_eq,
    scalars_equal,
)

Q = LaurentPoly.q_power(1)
QI = LaurentPoly.q_power(-1)


def _random_poly(rng, max_terms=4, max_exp=5):
    return LaurentPoly({rng.randint(-max_exp, max_exp):
                        Fraction(rng.randint(-6, 6), rng.randint(1, 5))
                        for _ in range(rng.randint(0, max_terms))})


def test_mul_examples():
    assert laurent_mul(Q + QI, LaurentPoly.zero()).is_zero()
    assert laurent_mul(Q + QI, LaurentPoly.one()) == Q + QI
    assert laurent_mul(Q + QI, Q - QI) == LaurentPoly.q_power(2) - LaurentPoly.q_power(-2)


def test_eval_examples():
    assert laurent_eval(Q + QI, 1) == 2
    assert laurent_eval(LaurentPoly.zero(), Fraction(1, 2)) == 0
    assert laurent_eval(LaurentPoly.q_power(2), Fraction(1, 2)) == Fraction(1, 4)
    with pytest.raises(ZeroBase):
        laurent_eval(Q, 0)


def test_ring_axioms_randomized():
    rng = random.Random(11)
    for _ in range(200):
        a, b, c = (_random_poly(rng) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a
        assert a + b == b + a


def test_eval_is_ring_homomorphism():
    rng = random.Random(12)
    for _ in range(100):
        a, b = _random_poly(rng), _random_poly(rng)
        q0 = Fraction(rng.randint(1, 9), rng.randint(1, 9))
        assert laurent_eval(a * b, q0) == laurent_eval(a, q0) * laurent_eval(b, q0)
        assert laurent_eval(a + b, q0) == laurent_eval(a, q0) + laurent_eval(b, q0)


def test_qratio_eq_examples():
    assert qratio_eq(QRatio(Q, Q), QRatio(LaurentPoly.one(), LaurentPoly.one()))
    lhs = QRatio(QI, Q + QI)
    rhs = QRatio(LaurentPoly.one(), LaurentPoly.one() + LaurentPoly.q_power(2))
    assert qratio_eq(lhs, rhs)
    assert not qratio_eq(QRatio(Q), QRatio(LaurentPoly.one()))


def test_qratio_is_equivalence_relation():
    rng = random.Random(13)
    samples = []
    for _ in range(12):
        num = _random_poly(rng)
        den = _random_poly(rng)
        if den.is_zero():
            den = LaurentPoly.one()
        samples.append(QRatio(num, den))
        # a scaled copy of the same ratio
        scale = _random_poly(rng, max_terms=2)
        if not scale.is_zero():
            samples.append(QRatio(num * scale, den * scale))
    for a in samples:
        assert qratio_eq(a, a)
        for b in samples:
            assert qratio_eq(a, b) == qratio_eq(b, a)
            for c in samples:
                if qratio_eq(a, b) and qratio_eq(b, c):
                    assert qratio_eq(a, c)


def test_qratio_arithmetic_matches_numeric():
    rng = random.Random(14)
    for _ in range(60):
        a = QRatio(_random_poly(rng), LaurentPoly.one() + LaurentPoly.q_power(2))
        b = QRatio(_random_poly(rng), Q + QI)
        q0 = Fraction(rng.randint(1, 7), 8)
        assert (a + b).evaluate(q0) == a.evaluate(q0) + b.evaluate(q0)
        assert (a * b).evaluate(q0) == a.evaluate(q0) * b.evaluate(q0)


def test_format_ascending_order():
    p = LaurentPoly({2: Fraction(3, 2), -1: 1, 0: -2})
    assert format_laurent(p) == "q^-1 - 2 + 3/2*q^2"
    assert format_laurent(LaurentPoly.zero()) == "0"


@pytest.mark.parametrize("text", ["q^-1 + q", "3/2*q^2", "0", "1/2",
                                  "q^-3 - 5*q^-1 + 2 + q^4", "-2*q^-2 + q"])
def test_parse_format_roundtrip(text):
    assert format_laurent(parse_laurent(text)) == text


def test_parse_noncanonical_order():
    p = parse_laurent("-q + 2")
    assert p == LaurentPoly({1: -1, 0: 2})
    assert format_laurent(p) == "2 - q"
    assert parse_laurent(format_laurent(p)) == p


def test_parse_scalar_dispatch():
    assert parse_scalar("3/4") == Fraction(3, 4)
    assert parse_scalar("q^-1 + q") == Q + QI
    r = parse_scalar("(q^-1)/(q^-1 + q)")
    assert isinstance(r, QRatio) and qratio_eq(r, QRatio(QI, Q + QI))
    for x in (Fraction(3, 4), Q + QI, QRatio(QI, Q + QI)):
        assert scalars_equal(parse_scalar(format_scalar(x)), x)


def test_evaluate_scalar():
    assert evaluate_scalar(Fraction(2, 3), Fraction(1, 2)) == Fraction(2, 3)
    assert evaluate_scalar(Q + QI, Fraction(1, 2)) == Fraction(5, 2)
    assert evaluate_scalar(QRatio(QI, Q + QI), Fraction(1, 2)) == Fraction(4, 5)


def test_pow_negative_monomial_only():
    assert LaurentPoly.q_power(3, Fraction(2)) ** -2 == LaurentPoly.q_power(-6, Fraction(1, 4))
    with pytest.raises(ValueError):
        (Q + QI) ** -1
