"""Exact arithmetic in Q and Q(i).

Rationals are ``fractions.Fraction`` (arbitrary precision, always canonical:
positive denominator, reduced, zero as 0/1).  ``GaussianRational`` layers the
imaginary unit on top and is the coefficient field for every symbolic
computation in this package.  No floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Union

Rational = Fraction

RationalLike = Union[int, Fraction]


def parse_rational(text: str) -> Fraction:
    """Parse the text form of a rational: "-3/4", "7", "0"."""
    return Fraction(text.strip())


def format_rational(q: RationalLike) -> str:
    """Render a rational as "num/den", omitting the denominator when 1."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def integer_kth_root(n: int, k: int) -> Optional[int]:
    """Exact k-th root of a nonnegative integer, or None if n is not a k-th power."""
    if n < 0 or k < 1:
        raise ValueError("need n >= 0 and k >= 1")
    if n in (0, 1) or k == 1:
        return n
    # Newton iteration from a power-of-two upper bound; exact integer arithmetic.
    x = 1 << (-(-n.bit_length() // k))
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    return x if x ** k == n else None


def rational_odd_root(q: RationalLike, k: int) -> Optional[Fraction]:
    """The unique rational r with r**k == q, for odd k >= 1; None if no such r.

    Odd k makes the real root unique, with the sign carried by the numerator;
    r is rational exactly when numerator and denominator are both k-th powers.
    """
    if k < 1 or k % 2 == 0:
        raise ValueError("k must be an odd positive integer")
    q = Fraction(q)
    num = integer_kth_root(abs(q.numerator), k)
    if num is None:
        return None
    den = integer_kth_root(q.denominator, k)
    if den is None:
        return None
    return Fraction(num if q >= 0 else -num, den)


class GaussianRational:
    """An element re + im*i of Q(i).  Immutable; equality is structural.

    Components are exact rationals, held as plain int whenever integral
    (int arithmetic is far cheaper than Fraction and the two mix exactly);
    any division routes through Fraction.
    """

    __slots__ = ("re", "im")

    def __init__(self, re: RationalLike = 0, im: RationalLike = 0):
        kind = type(re)
        self.re = re if kind is int or kind is Fraction else Fraction(re)
        kind = type(im)
        self.im = im if kind is int or kind is Fraction else Fraction(im)

    @property
    def is_zero(self) -> bool:
        return not self.re and not self.im

    @property
    def is_real(self) -> bool:
        return not self.im

    def conjugate(self) -> "GaussianRational":
        if not self.im:
            return self
        return GaussianRational(self.re, -self.im)

    def norm_sq(self) -> RationalLike:
        """re^2 + im^2 = z * conj(z); zero only for z = 0."""
        return self.re * self.re + self.im * self.im

    def inverse(self) -> "GaussianRational":
        if self.is_zero:
            raise ZeroDivisionError("inverse of zero in Q(i)")
        n = Fraction(self.norm_sq())
        return GaussianRational(self.re / n, -self.im / n)

    @staticmethod
    def _coerce(value) -> Optional["GaussianRational"]:
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Fraction)):
            return GaussianRational(value)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b and not d:
            return GaussianRational(a * c)
        return GaussianRational(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("division by zero in Q(i)")
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        base = self
        if n < 0:
            base = self.inverse()
            n = -n
        result = GaussianRational(1)
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return not self.is_zero

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"

    def __str__(self):
        if not self.im:
            return format_rational(self.re)
        im = format_rational(abs(self.im)) + "i"
        if im == "1i":
            im = "i"
        sign = "+" if self.im > 0 else "-"
        if not self.re:
            return im if sign == "+" else "-" + im
        return f"{format_rational(self.re)}{sign}{im}"

    def to_json(self) -> dict:
        """{"re": "...", "im": "..."} with "im" omitted when zero."""
        obj = {"re": format_rational(self.re)}
        if self.im:
            obj["im"] = format_rational(self.im)
        return obj

    @classmethod
    def from_json(cls, obj) -> "GaussianRational":
        if not isinstance(obj, dict) or "re" not in obj:
            raise ValueError(f"not a Gaussian rational object: {obj!r}")
        return cls(parse_rational(obj["re"]), parse_rational(obj.get("im", "0")))


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I_UNIT = GaussianRational(0, 1)
