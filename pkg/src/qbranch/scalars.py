"""Exact scalars: rationals, Laurent polynomials in q, and their ratios.

Rational numbers are plain ``fractions.Fraction`` (always in lowest terms,
positive denominator).  ``LaurentPoly`` is a sparse exponent -> coefficient
map over Fraction; ``QRatio`` is a formal quotient of two Laurent
polynomials compared by cross-multiplication, never by factoring.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ZeroBase

Rational = Fraction

_NUMERIC = (int, Fraction)


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


class LaurentPoly:
    """A Laurent polynomial in q with Fraction coefficients.

    Immutable; the zero polynomial has an empty term map.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for e, c in dict(terms).items():
                c = _as_fraction(c)
                if c != 0:
                    clean[int(e)] = c
        self._terms = clean
        self._hash = None

    @staticmethod
    def zero() -> "LaurentPoly":
        return LaurentPoly()

    @staticmethod
    def one() -> "LaurentPoly":
        return LaurentPoly({0: 1})

    @staticmethod
    def q_power(e: int, coeff=1) -> "LaurentPoly":
        """The monomial coeff * q^e."""
        return LaurentPoly({e: coeff})

    @staticmethod
    def const(c) -> "LaurentPoly":
        return LaurentPoly({0: c})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def is_one(self) -> bool:
        return self._terms == {0: Fraction(1)}

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def coefficient(self, e: int) -> Fraction:
        return self._terms.get(e, Fraction(0))

    def degree(self):
        """Top exponent, or None for the zero polynomial."""
        return max(self._terms) if self._terms else None

    def valuation(self):
        """Bottom exponent, or None for the zero polynomial."""
        return min(self._terms) if self._terms else None

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        if isinstance(other, _NUMERIC):
            return self == LaurentPoly.const(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __add__(self, other):
        if isinstance(other, _NUMERIC):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, Fraction(0)) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPoly(out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, _NUMERIC):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, _NUMERIC):
            c = _as_fraction(other)
            if c == 0:
                return LaurentPoly()
            return LaurentPoly({e: c * v for e, v in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                s = out.get(e, Fraction(0)) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            if not self.is_monomial():
                raise ValueError("negative power of a non-monomial Laurent polynomial")
            ((e, c),) = self._terms.items()
            return LaurentPoly({e * n: Fraction(1, 1) / (c ** (-n))})
        out = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __truediv__(self, other):
        return as_qratio(self) / other

    def __rtruediv__(self, other):
        return as_qratio(other) / self

    def evaluate(self, q0) -> Fraction:
        """Exact substitution q = q0 (q0 a nonzero rational)."""
        q0 = _as_fraction(q0)
        if q0 == 0:
            raise ZeroBase("cannot evaluate a Laurent polynomial at q = 0")
        total = Fraction(0)
        for e, c in self._terms.items():
            total += c * q0**e
        return total

    def substitute_q_inverse(self) -> "LaurentPoly":
        """The image under q -> q^-1 (exponent negation)."""
        return LaurentPoly({-e: c for e, c in self._terms.items()})

    def __repr__(self):
        return f"LaurentPoly({self!s})"

    def __str__(self):
        return format_laurent(self)


def laurent_mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Exact convolution product of two Laurent polynomials."""
    return a * b


def laurent_eval(a: LaurentPoly, q0) -> Fraction:
    """Exact value of a at q = q0; raises ZeroBase when q0 = 0."""
    return a.evaluate(q0)


class QRatio:
    """A quotient num/den of Laurent polynomials with den nonzero.

    Not reduced to lowest terms; equality is by cross-multiplication.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if den is None:
            den = LaurentPoly.one()
        num = _coerce_laurent(num)
        den = _coerce_laurent(den)
        if den.is_zero():
            raise ZeroDivisionError("QRatio denominator is zero")
        self.num = num
        self.den = den

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, (QRatio, LaurentPoly) + _NUMERIC):
            other = as_qratio(other)
            return self.num * other.den == other.num * self.den
        return NotImplemented

    def __hash__(self):
        # Normalize by the monic-monomial convention just for hashing.
        if self.num.is_zero():
            return hash(0)
        e = self.num.valuation() - self.den.valuation()
        c = self.num.coefficient(self.num.valuation()) / self.den.coefficient(self.den.valuation())
        return hash(("QRatio", e, c, len(self.num._terms), len(self.den._terms)))

    def __neg__(self):
        return QRatio(-self.num, self.den)

    def __add__(self, other):
        other = as_qratio(other)
        return QRatio(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-as_qratio(other))

    def __rsub__(self, other):
        return as_qratio(other) + (-self)

    def __mul__(self, other):
        other = as_qratio(other)
        return QRatio(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = as_qratio(other)
        if other.num.is_zero():
            raise ZeroDivisionError("division by the zero QRatio")
        return QRatio(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return as_qratio(other) / self

    def evaluate(self, q0) -> Fraction:
        d = self.den.evaluate(q0)
        if d == 0:
            raise ZeroDivisionError(f"QRatio denominator vanishes at q = {q0}")
        return self.num.evaluate(q0) / d

    def __repr__(self):
        return f"QRatio({self!s})"

    def __str__(self):
        if self.den.is_one():
            return str(self.num)
        return f"({self.num})/({self.den})"


def _coerce_laurent(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, _NUMERIC):
        return LaurentPoly.const(x)
    raise TypeError(f"cannot coerce {x!r} to LaurentPoly")


def as_qratio(x) -> QRatio:
    if isinstance(x, QRatio):
        return x
    return QRatio(_coerce_laurent(x))


def qratio_eq(a, b) -> bool:
    """Cross-multiplied equality a.num*b.den == b.num*a.den."""
    return as_qratio(a) == as_qratio(b)


def format_laurent(p: LaurentPoly) -> str:
    """Canonical text form, ascending exponent order, e.g. "q^-1 + q"."""
    if p.is_zero():
        return "0"
    parts = []
    for e in sorted(p._terms):
        c = p._terms[e]
        parts.append((e, c))
    out = []
    for i, (e, c) in enumerate(parts):
        neg = c < 0
        mag = -c if neg else c
        if e == 0:
            body = str(mag)
        else:
            qs = "q" if e == 1 else f"q^{e}"
            body = qs if mag == 1 else f"{mag}*{qs}"
        if i == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


_TERM_RE = re.compile(
    r"""^\s*
        (?P<coef>[+-]?\d+(?:/\d+)?)?      # optional rational coefficient
        \s*\*?\s*
        (?P<q>q(?:\^(?P<exp>[+-]?\d+))?)? # optional q power
        \s*$""",
    re.VERBOSE,
)


def parse_laurent(text: str) -> LaurentPoly:
    """Parse the canonical textual form ("q^-1 + q", "3/2*q^2", "-q + 2")."""
    s = text.strip()
    if s in ("0", "-0", "+0"):
        return LaurentPoly.zero()
    # Split into signed terms on top-level + and - (not exponent signs).
    chunks = re.split(r"(?<!\^)\s*([+-])\s*", s)
    terms: list[str] = []
    sign = "+"
    if chunks and chunks[0] == "":
        chunks = chunks[1:]
        if chunks and chunks[0] in "+-":
            sign = chunks[0]
            chunks = chunks[1:]
    i = 0
    pending = sign
    while i < len(chunks):
        tok = chunks[i]
        if tok in "+-":
            pending = tok
        else:
            terms.append(pending + tok)
            pending = "+"
        i += 1
    out: dict = {}
    for t in terms:
        sgn = 1
        body = t
        if body and body[0] in "+-":
            sgn = -1 if body[0] == "-" else 1
            body = body[1:]
        m = _TERM_RE.match(body)
        if not m or (m.group("coef") is None and m.group("q") is None):
            raise ValueError(f"cannot parse Laurent term {t!r} in {text!r}")
        coef = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
        if m.group("q"):
            e = int(m.group("exp")) if m.group("exp") else 1
        else:
            e = 0
        out[e] = out.get(e, Fraction(0)) + sgn * coef
    return LaurentPoly(out)


def format_scalar(x) -> str:
    """Canonical text for any exact scalar (Fraction, LaurentPoly, QRatio)."""
    if isinstance(x, QRatio):
        return str(x)
    if isinstance(x, LaurentPoly):
        return format_laurent(x)
    return str(_as_fraction(x))


def parse_scalar(text: str):
    """Inverse of format_scalar: Fraction, LaurentPoly, or QRatio."""
    s = text.strip()
    m = re.match(r"^\((?P<num>.*)\)\s*/\s*\((?P<den>.*)\)$", s)
    if m:
        return QRatio(parse_laurent(m.group("num")), parse_laurent(m.group("den")))
    if "q" in s:
        return parse_laurent(s)
    return Fraction(s)


def evaluate_scalar(x, q0) -> Fraction:
    """Exact value of any scalar at q = q0 (no-op for rationals)."""
    if isinstance(x, (LaurentPoly, QRatio)):
        return x.evaluate(q0)
    return _as_fraction(x)


def scalar_is_zero(x) -> bool:
    if isinstance(x, QRatio):
        return x.is_zero()
    if isinstance(x, LaurentPoly):
        return x.is_zero()
    return x == 0


def scalars_equal(a, b) -> bool:
    """Exact equality across the scalar tower (cross-multiplying ratios)."""
    if isinstance(a, QRatio) or isinstance(b, QRatio):
        return qratio_eq(a if isinstance(a, (QRatio, LaurentPoly)) else Fraction(a),
                         b if isinstance(b, (QRatio, LaurentPoly)) else Fraction(b))
    if isinstance(a, LaurentPoly) or isinstance(b, LaurentPoly):
        a = a if isinstance(a, LaurentPoly) else LaurentPoly.const(a)
        b = b if isinstance(b, LaurentPoly) else LaurentPoly.const(b)
        return a == b
    return _as_fraction(a) == _as_fraction(b)
