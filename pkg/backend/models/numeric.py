"""Exact scalars: rationals, Gaussian rationals, extended naturals and integers."""
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import total_ordering
from typing import Dict, Optional, Union

Rat = Fraction
RatLike = Union[Fraction, int, str]


def as_rat(value: RatLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rat(value)
    raise TypeError(f"cannot convert {type(value).__name__} to a rational")


def parse_rat(text: str) -> Fraction:
    """Parse "p/q", "-p/q" or "p"; floats are rejected."""
    text = text.strip()
    if not text or any(ch in text for ch in ".eE"):
        raise ValueError(f"not an exact rational: {text!r}")
    return Fraction(text)


def rat_to_str(r: Fraction) -> str:
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"


@dataclass(frozen=True)
class GQ:
    """Gaussian rational re + im·i."""
    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", as_rat(self.re))
        object.__setattr__(self, "im", as_rat(self.im))

    @classmethod
    def of(cls, value: Union["GQ", RatLike]) -> "GQ":
        if isinstance(value, GQ):
            return value
        return cls(as_rat(value), Fraction(0))

    def __add__(self, other: "GQ") -> "GQ":
        other = GQ.of(other)
        return GQ(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other: "GQ") -> "GQ":
        other = GQ.of(other)
        return GQ(self.re - other.re, self.im - other.im)

    def __rsub__(self, other: "GQ") -> "GQ":
        return GQ.of(other) - self

    def __neg__(self) -> "GQ":
        return GQ(-self.re, -self.im)

    def __mul__(self, other: "GQ") -> "GQ":
        other = GQ.of(other)
        return GQ(self.re * other.re - self.im * other.im,
                  self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def __truediv__(self, other: "GQ") -> "GQ":
        other = GQ.of(other)
        d = abs2(other)
        if d == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        num = self * other.conj()
        return GQ(num.re / d, num.im / d)

    def conj(self) -> "GQ":
        return GQ(self.re, -self.im)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def to_json(self) -> Dict[str, str]:
        return {"re": rat_to_str(self.re), "im": rat_to_str(self.im)}

    @classmethod
    def from_json(cls, data: Dict[str, str]) -> "GQ":
        return cls(parse_rat(str(data["re"])), parse_rat(str(data.get("im", "0"))))

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __str__(self) -> str:
        if self.im == 0:
            return rat_to_str(self.re)
        im_abs = rat_to_str(abs(self.im))
        if self.re == 0:
            return f"-{im_abs}i" if self.im < 0 else f"{im_abs}i"
        sign = "-" if self.im < 0 else "+"
        return f"{rat_to_str(self.re)}{sign}{im_abs}i"


ZERO_GQ = GQ()
ONE_GQ = GQ(Fraction(1))


def abs2(z: GQ) -> Fraction:
    return z.re * z.re + z.im * z.im


@total_ordering
@dataclass(frozen=True)
class ExtNat:
    """Element of ℕ ∪ {∞}; ``value is None`` encodes ∞."""
    value: Optional[int] = 0

    def __post_init__(self):
        if self.value is not None and (not isinstance(self.value, int) or self.value < 0):
            raise ValueError(f"ExtNat must be a nonnegative integer or infinite, got {self.value!r}")

    @classmethod
    def fin(cls, n: int) -> "ExtNat":
        return cls(n)

    @classmethod
    def inf(cls) -> "ExtNat":
        return cls(None)

    @property
    def is_inf(self) -> bool:
        return self.value is None

    @property
    def is_finite(self) -> bool:
        return self.value is not None

    def __add__(self, other: "ExtNat") -> "ExtNat":
        return extnat_add(self, other)

    def __lt__(self, other: "ExtNat") -> bool:
        if not isinstance(other, ExtNat):
            return NotImplemented
        if self.is_inf:
            return False
        if other.is_inf:
            return True
        return self.value < other.value

    def minus(self, k: int) -> "ExtNat":
        """Subtract a finite amount, clamped at zero; ∞ stays ∞."""
        if self.is_inf:
            return self
        return ExtNat(max(self.value - k, 0))

    def to_json(self) -> str:
        return "inf" if self.is_inf else str(self.value)

    @classmethod
    def from_json(cls, text: Union[str, int]) -> "ExtNat":
        if isinstance(text, int):
            return cls(text)
        text = text.strip().lower()
        if text == "inf":
            return cls.inf()
        if not text.isdigit():
            raise ValueError(f"not an extended natural: {text!r}")
        return cls(int(text))

    def __str__(self) -> str:
        return "∞" if self.is_inf else str(self.value)


INF = ExtNat.inf()
ZERO = ExtNat(0)


def extnat_add(a: ExtNat, b: ExtNat) -> ExtNat:
    if a.is_inf or b.is_inf:
        return INF
    return ExtNat(a.value + b.value)


def extnat_scale(mult: ExtNat, v: ExtNat) -> ExtNat:
    if mult == ZERO or v == ZERO:
        return ZERO
    if mult.is_inf or v.is_inf:
        return INF
    return ExtNat(mult.value * v.value)


class ExtIntKind(str, Enum):
    FIN = "fin"
    PLUS_INF = "+inf"
    MINUS_INF = "-inf"
    UNDEFINED = "undefined"


@dataclass(frozen=True)
class ExtInt:
    kind: ExtIntKind
    value: int = 0

    @classmethod
    def fin(cls, k: int) -> "ExtInt":
        return cls(ExtIntKind.FIN, k)

    @property
    def is_finite(self) -> bool:
        return self.kind == ExtIntKind.FIN

    def __add__(self, other: "ExtInt") -> "ExtInt":
        """Index additivity; ∞ + (−∞) and anything with Undefined is Undefined."""
        kinds = {self.kind, other.kind}
        if ExtIntKind.UNDEFINED in kinds or kinds == {ExtIntKind.PLUS_INF, ExtIntKind.MINUS_INF}:
            return ExtInt(ExtIntKind.UNDEFINED)
        if ExtIntKind.PLUS_INF in kinds:
            return ExtInt(ExtIntKind.PLUS_INF)
        if ExtIntKind.MINUS_INF in kinds:
            return ExtInt(ExtIntKind.MINUS_INF)
        return ExtInt.fin(self.value + other.value)

    def to_json(self) -> str:
        return str(self.value) if self.is_finite else self.kind.value

    def __str__(self) -> str:
        return self.to_json()


def extint_sub(alpha: ExtNat, beta: ExtNat) -> ExtInt:
    """alpha ⊖ beta."""
    if alpha.is_inf and beta.is_inf:
        return ExtInt(ExtIntKind.UNDEFINED)
    if alpha.is_inf:
        return ExtInt(ExtIntKind.PLUS_INF)
    if beta.is_inf:
        return ExtInt(ExtIntKind.MINUS_INF)
    return ExtInt.fin(alpha.value - beta.value)
