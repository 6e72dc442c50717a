"""2x2 matrices of the shape (P(T), a^e Q(T); b^e S(T), R(T)).

Only the four T-polynomials and the cross-exponent e are stored; products
contract the off-diagonal variable factors through a^e * b^e = T^e, which is
the whole point of the representation.  One cross-exponent parameter covers
both the weight-(2, 2m+1) family (e = 2m+1) and the weight-(1, 2) case
(e = 4); the algebra is identical.

Two membership classes matter:

* Lambda:       all entries polynomial in T and det a nonzero constant;
* Lambda-prime: entries Laurent and det = c * T^k with c nonzero.

The Galois twist gamma sends (P, Q, S, R) to (bar R, bar S, bar Q, bar P);
the holomorphic bundle twist does the same swap without conjugation.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from typing import Optional

from .gaussian import GaussianRational, RationalLike
from .laurent import LaurentPoly


class Membership(enum.Enum):
    LAMBDA = "Lambda"
    LAMBDA_PRIME = "LambdaPrime"
    NEITHER = "Neither"


class StructuredMatrix:
    __slots__ = ("e", "P", "Q", "S", "R")

    def __init__(self, e: int, P: LaurentPoly, Q: LaurentPoly, S: LaurentPoly, R: LaurentPoly):
        if e < 1:
            raise ValueError("cross-exponent e must be a positive integer")
        self.e = int(e)
        self.P = P
        self.Q = Q
        self.S = S
        self.R = R

    @classmethod
    def identity(cls, e: int) -> "StructuredMatrix":
        one, zero = LaurentPoly.one(), LaurentPoly.zero()
        return cls(e, one, zero, zero, one)

    @classmethod
    def diagonal(cls, e: int, top: GaussianRational, bottom: GaussianRational) -> "StructuredMatrix":
        zero = LaurentPoly.zero()
        return cls(e, LaurentPoly.constant(top), zero, zero, LaurentPoly.constant(bottom))

    def entries(self) -> tuple[LaurentPoly, LaurentPoly, LaurentPoly, LaurentPoly]:
        return self.P, self.Q, self.S, self.R

    def __mul__(self, other):
        if not isinstance(other, StructuredMatrix):
            return NotImplemented
        if self.e != other.e:
            raise ValueError(f"cross-exponent mismatch: {self.e} != {other.e}")
        Te = LaurentPoly.monomial(self.e)
        return StructuredMatrix(
            self.e,
            self.P * other.P + Te * (self.Q * other.S),
            self.P * other.Q + self.Q * other.R,
            self.S * other.P + self.R * other.S,
            Te * (self.S * other.Q) + self.R * other.R,
        )

    def det(self) -> LaurentPoly:
        return self.P * self.R - LaurentPoly.monomial(self.e) * (self.Q * self.S)

    def galois(self) -> "StructuredMatrix":
        return StructuredMatrix(self.e, self.R.bar(), self.S.bar(), self.Q.bar(), self.P.bar())

    def s_twist(self) -> "StructuredMatrix":
        return StructuredMatrix(self.e, self.R, self.S, self.Q, self.P)

    def inverse(self) -> "StructuredMatrix":
        """Exact inverse; requires the determinant to be a Laurent unit c*T^k."""
        parts = self.det().monomial_parts()
        if parts is None:
            raise ValueError("matrix determinant is not a unit c*T^k; no inverse here")
        c, k = parts
        scale = LaurentPoly.monomial(-k, c.inverse())
        return StructuredMatrix(
            self.e,
            scale * self.R,
            scale * (-self.Q),
            scale * (-self.S),
            scale * self.P,
        )

    def base_rescale(self, r: RationalLike) -> "StructuredMatrix":
        """Substitute (a, b) -> (ra, rb): T -> r^2 T everywhere, and the
        off-diagonal entries pick up the factor r^e from a^e, b^e."""
        r = Fraction(r)
        if not r:
            raise ValueError("rescale factor must be nonzero")
        r2 = r * r
        re = r ** self.e
        return StructuredMatrix(
            self.e,
            self.P.substitute_power(r2),
            self.Q.substitute_power(r2) * re,
            self.S.substitute_power(r2) * re,
            self.R.substitute_power(r2),
        )

    def membership(self) -> Membership:
        det = self.det()
        if det.is_zero:
            return Membership.NEITHER
        all_poly = all(p.is_polynomial for p in self.entries())
        if all_poly and det.is_constant:
            return Membership.LAMBDA
        if det.monomial_parts() is not None:
            return Membership.LAMBDA_PRIME
        return Membership.NEITHER

    def fixed_point_shape(self) -> Optional[GaussianRational]:
        """alpha when the matrix is diag(alpha, conj(alpha)) with alpha != 0."""
        if not self.Q.is_zero or not self.S.is_zero:
            return None
        if not self.P.is_constant or not self.R.is_constant:
            return None
        alpha = self.P.constant_value()
        if alpha.is_zero or self.R.constant_value() != alpha.conjugate():
            return None
        return alpha

    def __eq__(self, other):
        if not isinstance(other, StructuredMatrix):
            return NotImplemented
        return (self.e == other.e and self.P == other.P and self.Q == other.Q
                and self.S == other.S and self.R == other.R)

    def __hash__(self):
        return hash((self.e, self.P, self.Q, self.S, self.R))

    def __repr__(self):
        return (f"StructuredMatrix(e={self.e}, P={self.P}, Q={self.Q}, "
                f"S={self.S}, R={self.R})")

    def to_json(self) -> dict:
        return {
            "e": self.e,
            "P": self.P.to_json(),
            "Q": self.Q.to_json(),
            "S": self.S.to_json(),
            "R": self.R.to_json(),
        }

    @classmethod
    def from_json(cls, obj) -> "StructuredMatrix":
        if not isinstance(obj, dict):
            raise ValueError(f"not a structured matrix object: {obj!r}")
        try:
            return cls(
                int(obj["e"]),
                LaurentPoly.from_json(obj["P"]),
                LaurentPoly.from_json(obj["Q"]),
                LaurentPoly.from_json(obj["S"]),
                LaurentPoly.from_json(obj["R"]),
            )
        except KeyError as exc:
            raise ValueError(f"structured matrix object missing field {exc}") from exc
