"""
Truncated power series over exact rationals.

A Series of order N holds [x^0]..[x^N]; coefficients above N are unknown, so
every binary operation truncates to the smaller order of its operands.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Tuple, Union

from mixedstirling.exact_core.arithmetic import factorial

Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class Series:
    coeffs: Tuple[Fraction, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a series needs at least the constant coefficient")
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    @classmethod
    def of(cls, coeffs: Iterable[Scalar]) -> "Series":
        return cls(tuple(Fraction(c) for c in coeffs))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, j: int) -> Fraction:
        if not 0 <= j <= self.order:
            raise IndexError(f"coefficient {j} outside order {self.order}")
        return self.coeffs[j]

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise ValueError(f"cannot extend order {self.order} to {order}")
        return Series(self.coeffs[: order + 1])

    def __add__(self, other: "Series") -> "Series":
        return series_add(self, other)

    def __sub__(self, other: "Series") -> "Series":
        return series_add(self, series_scale(other, -1))

    def __mul__(self, other: Union["Series", Scalar]) -> "Series":
        if isinstance(other, Series):
            return series_mul(self, other)
        return series_scale(self, other)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Series":
        return series_pow(self, e)

    def __call__(self, inner: "Series") -> "Series":
        return series_compose(self, inner)


# ── Constructors ──────────────────────────────────────────────────

def series_zero(order: int) -> Series:
    return Series((Fraction(0),) * (order + 1))


def series_one(order: int) -> Series:
    return series_monomial(0, order)


def series_monomial(j: int, order: int, coeff: Scalar = 1) -> Series:
    """coeff * x^j, truncated at order (zero when j > order)."""
    if j < 0:
        raise ValueError(f"negative exponent {j}")
    coeffs = [Fraction(0)] * (order + 1)
    if j <= order:
        coeffs[j] = Fraction(coeff)
    return Series(tuple(coeffs))


def series_exp(order: int) -> Series:
    """e^x."""
    return Series(tuple(Fraction(1, factorial(j)) for j in range(order + 1)))


# ── Arithmetic ────────────────────────────────────────────────────

def series_add(a: Series, b: Series) -> Series:
    order = min(a.order, b.order)
    return Series(tuple(a.coeffs[j] + b.coeffs[j] for j in range(order + 1)))


def series_scale(a: Series, c: Scalar) -> Series:
    c = Fraction(c)
    return Series(tuple(c * x for x in a.coeffs))


def series_mul(a: Series, b: Series) -> Series:
    order = min(a.order, b.order)
    out = [Fraction(0)] * (order + 1)
    for i, x in enumerate(a.coeffs[: order + 1]):
        if x == 0:
            continue
        for j in range(order + 1 - i):
            y = b.coeffs[j]
            if y:
                out[i + j] += x * y
    return Series(tuple(out))


def series_pow(a: Series, e: int) -> Series:
    """a^e by repeated squaring; a^0 = 1."""
    if e < 0:
        raise ValueError(f"negative power {e}")
    result = series_one(a.order)
    base = a
    while e:
        if e & 1:
            result = series_mul(result, base)
        e >>= 1
        if e:
            base = series_mul(base, base)
    return result


def series_compose(beta: Series, alpha: Series) -> Series:
    """beta(alpha(x)), evaluated by Horner's rule."""
    if alpha.coeffs[0] != 0:
        raise ValueError(f"inner series has constant term {alpha.coeffs[0]}; composition undefined")
    order = min(beta.order, alpha.order)
    inner = alpha.truncate(order)
    result = series_monomial(0, order, beta.coeffs[order])
    for j in range(order - 1, -1, -1):
        result = series_mul(result, inner) + series_monomial(0, order, beta.coeffs[j])
    return result


def series_derivative(a: Series) -> Series:
    """d/dx; the order drops by one (a constant stays a zero constant)."""
    if a.order == 0:
        return series_zero(0)
    return Series(tuple(j * a.coeffs[j] for j in range(1, a.order + 1)))


# ── Extraction ────────────────────────────────────────────────────

def count_from_series(s: Series, n: int) -> int:
    """n! [x^n] s as a count."""
    if n < 0 or n > s.order:
        raise ValueError(f"coefficient {n} outside series order {s.order}")
    value = s.coeffs[n] * factorial(n)
    if value.denominator != 1 or value < 0:
        raise ArithmeticError(f"n! [x^{n}] = {value} is not a non-negative integer")
    return int(value)


def series_dump(s: Series) -> str:
    """One line per coefficient: index, tab, reduced fraction p/q."""
    return "\n".join(f"{j}\t{c.numerator}/{c.denominator}" for j, c in enumerate(s.coeffs))
