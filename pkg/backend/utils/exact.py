"""Exact signs of numbers with up to two square roots of rationals.

Circle intersection points and arc samples live in Q(√q)[i]; every
comparison the arrangement needs reduces to the sign of a + b√q or of
α + β√r with α, β in Q(√s).
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import isqrt
from typing import Optional, Tuple

from ..models.numeric import GQ


def _rational_sqrt(q: Fraction) -> Optional[Fraction]:
    """√q when q is the square of a rational, else None."""
    if q < 0:
        raise ValueError("square root of a negative rational")
    n, d = q.numerator, q.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


@lru_cache(maxsize=4096)
def sqrt_approx(q: Fraction, bits: int) -> Fraction:
    """Rational r with |r − √q| < 2^-bits."""
    n, d = q.numerator, q.denominator
    scale = 1 << (bits + 1)
    return Fraction(isqrt(n * d * scale * scale), d * scale)


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


@dataclass(frozen=True)
class QuadNumber:
    """a + b·√q with rational a, b and q ≥ 0."""
    a: Fraction
    b: Fraction = Fraction(0)
    q: Fraction = Fraction(0)

    def __post_init__(self):
        a, b, q = Fraction(self.a), Fraction(self.b), Fraction(self.q)
        if q < 0:
            raise ValueError("radicand must be nonnegative")
        if b != 0 and q != 0:
            root = _rational_sqrt(q)
            if root is not None:
                a, b, q = a + b * root, Fraction(0), Fraction(0)
        if b == 0 or q == 0:
            b, q = Fraction(0), Fraction(0)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "q", q)

    @classmethod
    def rational(cls, value) -> "QuadNumber":
        return cls(Fraction(value))

    @classmethod
    def sqrt(cls, q: Fraction) -> "QuadNumber":
        return cls(Fraction(0), Fraction(1), Fraction(q))

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def _root_with(self, other: "QuadNumber") -> Fraction:
        if self.is_rational:
            return other.q
        if other.is_rational or other.q == self.q:
            return self.q
        raise ValueError("numbers from different quadratic fields")

    def compatible(self, other: "QuadNumber") -> bool:
        return self.is_rational or other.is_rational or self.q == other.q

    def __add__(self, other) -> "QuadNumber":
        other = _lift(other)
        q = self._root_with(other)
        return QuadNumber(self.a + other.a, self.b + other.b, q)

    __radd__ = __add__

    def __neg__(self) -> "QuadNumber":
        return QuadNumber(-self.a, -self.b, self.q)

    def __sub__(self, other) -> "QuadNumber":
        return self + (-_lift(other))

    def __rsub__(self, other) -> "QuadNumber":
        return _lift(other) - self

    def __mul__(self, other) -> "QuadNumber":
        other = _lift(other)
        q = self._root_with(other)
        return QuadNumber(self.a * other.a + self.b * other.b * q,
                          self.a * other.b + self.b * other.a, q)

    __rmul__ = __mul__

    def sign(self) -> int:
        sa, sb = _sign(self.a), _sign(self.b)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        # a and b√q have opposite signs
        return sa * _sign(self.a * self.a - self.b * self.b * self.q)

    def approx(self, bits: int) -> Fraction:
        if self.is_rational:
            return self.a
        extra = max(abs(self.b).numerator.bit_length() - abs(self.b).denominator.bit_length(), 0) + 2
        return self.a + self.b * sqrt_approx(self.q, bits + extra)

    def __float__(self) -> float:
        return float(self.approx(64))


def _lift(value) -> QuadNumber:
    if isinstance(value, QuadNumber):
        return value
    return QuadNumber(Fraction(value))


def sign_mixed(alpha: QuadNumber, beta: QuadNumber, r: Fraction) -> int:
    """Sign of α + β·√r where α, β share a field and r is a nonnegative rational."""
    r = Fraction(r)
    root = _rational_sqrt(r) if r >= 0 else None
    if root is not None:
        return (alpha + beta * root).sign()
    sa, sb = alpha.sign(), beta.sign()
    if sb == 0:
        return sa
    if sa == 0 or sa == sb:
        return sb
    return sa * (alpha * alpha - beta * beta * r).sign()


def compare(x: QuadNumber, y: QuadNumber) -> int:
    """Sign of x − y for numbers from possibly different fields."""
    if x.compatible(y):
        return (x - y).sign()
    return sign_mixed(x - y.a, QuadNumber(-y.b), y.q)


@dataclass(frozen=True)
class QVec:
    """A point/vector of the plane with coordinates in one field Q(√q)."""
    x: QuadNumber
    y: QuadNumber

    def __post_init__(self):
        if not self.x.compatible(self.y):
            raise ValueError("coordinates from different quadratic fields")

    @classmethod
    def of(cls, z: GQ) -> "QVec":
        return cls(QuadNumber(z.re), QuadNumber(z.im))

    @property
    def root(self) -> Fraction:
        return self.x.q if not self.x.is_rational else self.y.q

    @property
    def is_rational(self) -> bool:
        return self.x.is_rational and self.y.is_rational

    def as_gq(self) -> GQ:
        if not self.is_rational:
            raise ValueError("point is not Gaussian rational")
        return GQ(self.x.a, self.y.a)

    def __sub__(self, other) -> "QVec":
        other = other if isinstance(other, QVec) else QVec.of(other)
        return QVec(self.x - other.x, self.y - other.y)

    def __add__(self, other) -> "QVec":
        other = other if isinstance(other, QVec) else QVec.of(other)
        return QVec(self.x + other.x, self.y + other.y)

    def __neg__(self) -> "QVec":
        return QVec(-self.x, -self.y)

    def rot90(self) -> "QVec":
        return QVec(-self.y, self.x)

    def approx(self, bits: int) -> GQ:
        return GQ(self.x.approx(bits), self.y.approx(bits))

    def __complex__(self) -> complex:
        return complex(float(self.x), float(self.y))

    def __str__(self) -> str:
        return f"({float(self.x):.6g}, {float(self.y):.6g})"


def _as_qvec(v) -> QVec:
    return v if isinstance(v, QVec) else QVec.of(v)


def _split(v: QuadNumber, r: Fraction) -> Tuple[QuadNumber, QuadNumber]:
    """Write v = p + s√r with rational p, s (v from the field Q(√r))."""
    return QuadNumber(v.a), QuadNumber(v.b)


def _bilinear_sign(u: QVec, w: QVec, cross: bool) -> int:
    if u.root == w.root or u.is_rational or w.is_rational:
        if cross:
            return (u.x * w.y - u.y * w.x).sign()
        return (u.x * w.x + u.y * w.y).sign()
    r = w.root
    wxa, wxb = _split(w.x, r)
    wya, wyb = _split(w.y, r)
    if cross:
        alpha = u.x * wya - u.y * wxa
        beta = u.x * wyb - u.y * wxb
    else:
        alpha = u.x * wxa + u.y * wya
        beta = u.x * wxb + u.y * wyb
    return sign_mixed(alpha, beta, r)


def cross_sign(u, w) -> int:
    """Sign of Im(conj(u)·w): positive when w is counterclockwise of u."""
    return _bilinear_sign(_as_qvec(u), _as_qvec(w), True)


def dot_sign(u, w) -> int:
    return _bilinear_sign(_as_qvec(u), _as_qvec(w), False)


def norm2_minus(v: QVec, r2: Fraction) -> int:
    """Sign of |v|² − r2."""
    return (v.x * v.x + v.y * v.y - r2).sign()


def equal(u, w) -> bool:
    u, w = _as_qvec(u), _as_qvec(w)
    return compare(u.x, w.x) == 0 and compare(u.y, w.y) == 0


def angle_half(v) -> int:
    """0 for directions in [0, π), 1 for [π, 2π)."""
    v = _as_qvec(v)
    sy = v.y.sign()
    if sy > 0 or (sy == 0 and v.x.sign() > 0):
        return 0
    return 1


def angle_cmp(u, w) -> int:
    """Order directions by counterclockwise angle from the positive real axis."""
    hu, hw = angle_half(u), angle_half(w)
    if hu != hw:
        return -1 if hu < hw else 1
    c = cross_sign(u, w)
    return -c


def relative_class(ref, v) -> int:
    """Angular class of v measured counterclockwise from ref.

    0: same direction, 1: (0, π), 2: π, 3: (π, 2π).
    """
    c = cross_sign(ref, v)
    if c > 0:
        return 1
    if c < 0:
        return 3
    return 0 if dot_sign(ref, v) > 0 else 2


def strictly_between(start, v, end) -> bool:
    """True iff v lies strictly inside the counterclockwise sweep from start to end."""
    cv = relative_class(start, v)
    if cv == 0:
        return False
    ce = relative_class(start, end)
    if ce == 0:
        ce = 4
    if cv != ce:
        return cv < ce
    if cv in (1, 3):
        return cross_sign(v, end) > 0
    return False
