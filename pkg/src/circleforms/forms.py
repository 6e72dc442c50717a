"""Constructors for the circle-form family and its verification checks.

For an odd weight n = 2m+1 and a real polynomial h(T), the family consists of
the twist matrices

    M_h = (1 - T*h^2,            a^n * h^n;
           -b^n * h^n,           sum_{j<n} (T*h^2)^j)

together with the real structure mu_h = phi_{M_h} o mu_0, where mu_0 is the
coordinate-swap-plus-conjugation circle form.  On the locus ab != 0 each M_h
splits through the Laurent matrix K_h, which is what makes the family
comparable: K_h has entries (1, h/T^m; h*sum_{j<m}(Th^2)^j / T^m,
sum_{j<=m}(Th^2)^j).

Reading note for K_h: the two geometric sums run over powers (T*h^2)^j with
j up to m-1 (bottom left, inside the T^-m factor) and up to m (bottom right).
Any other reading breaks det(K_h) = 1, which is checked symbolically in the
tests over a grid of (m, h).

The weight-(1,2) case uses cross-exponent 4 and has its own fixed matrices:
a twist that defines a nontrivial orthogonal bundle involution, and an exact
conjugator with non-real coefficients that linearizes the associated circle
form.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .gaussian import GaussianRational
from .laurent import LaurentPoly, geometric_sum
from .matrices import Membership, StructuredMatrix
from .polymaps import PolyMap, RealStructureMap, compose, expand


@dataclass(frozen=True)
class FormSpec:
    """Family parameters: m >= 1 (so the fiber weight is n = 2m+1) and a real
    polynomial h in the invariant variable T."""

    m: int
    h: LaurentPoly

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("m must be a positive integer")
        if not isinstance(self.h, LaurentPoly):
            raise TypeError("h must be a LaurentPoly")
        if not self.h.is_polynomial:
            raise ValueError("h must be a polynomial in T")
        if not self.h.is_real:
            raise ValueError("h must have real coefficients")

    @property
    def n(self) -> int:
        return 2 * self.m + 1

    def weights(self) -> tuple[int, int, int, int]:
        return (2, -2, self.n, -self.n)


def make_twist(spec: FormSpec) -> StructuredMatrix:
    """The family matrix M_h (cross-exponent n, polynomial entries, det 1)."""
    n = spec.n
    h = spec.h
    th2 = LaurentPoly.variable() * h * h
    hn = h ** n
    return StructuredMatrix(
        n,
        LaurentPoly.one() - th2,
        hn,
        -hn,
        geometric_sum(th2, n),
    )


def splitting_entries(spec: FormSpec) -> tuple[LaurentPoly, LaurentPoly, LaurentPoly]:
    """The Laurent entries (q_h, s_h, r_h) of the splitting matrix K_h."""
    m, h = spec.m, spec.h
    th2 = LaurentPoly.variable() * h * h
    t_neg_m = LaurentPoly.monomial(-m)
    q = h * t_neg_m
    s = h * geometric_sum(th2, m) * t_neg_m
    r = geometric_sum(th2, m + 1)
    return q, s, r


def make_splitting(spec: FormSpec) -> StructuredMatrix:
    """The matrix K_h that trivializes M_h on the open locus T != 0:
    det(K_h) = 1 and K_h * (gamma K_h)^-1 = M_h."""
    q, s, r = splitting_entries(spec)
    return StructuredMatrix(spec.n, LaurentPoly.one(), q, s, r)


def verify_cocycle(matrix: StructuredMatrix) -> bool:
    """M * gamma(M) == identity, the condition for phi_M o mu_0 to be an
    antiholomorphic involution."""
    return matrix * matrix.galois() == StructuredMatrix.identity(matrix.e)


def verify_splitting(spec: FormSpec) -> bool:
    """det(K_h) = 1 and K_h * (gamma K_h)^-1 = M_h, both exact."""
    k = make_splitting(spec)
    if k.det() != LaurentPoly.one():
        return False
    return k * k.galois().inverse() == make_twist(spec)


def tau0_map() -> PolyMap:
    """The holomorphic swap (a, b, x, y) -> (b, a, y, x)."""
    return PolyMap.coordinate_swap()


def linear_circle_form() -> RealStructureMap:
    """mu_0: coordinate swap composed with conjugation; the linear circle form."""
    return RealStructureMap(tau0_map(), conjugates_input=True)


def twist_automorphism(matrix: StructuredMatrix) -> RealStructureMap:
    """phi_M as a four-variable map (holomorphic, no conjugation)."""
    return RealStructureMap(expand(matrix), conjugates_input=False)


def make_circle_form(spec: FormSpec) -> RealStructureMap:
    """mu_h = phi_{M_h} o mu_0."""
    return compose(twist_automorphism(make_twist(spec)), linear_circle_form())


CASE12_WEIGHTS = (1, -1, 2, -2)
CASE12_CROSS_EXPONENT = 4


def case12_twist() -> StructuredMatrix:
    """The weight-(1,2) bundle twist: (1-T, a^4; -b^4, 1+T+T^2+T^3)."""
    T = LaurentPoly.variable()
    return StructuredMatrix(
        CASE12_CROSS_EXPONENT,
        LaurentPoly.one() - T,
        LaurentPoly.one(),
        -LaurentPoly.one(),
        LaurentPoly.from_coeffs([1, 1, 1, 1]),
    )


def case12_conjugator() -> StructuredMatrix:
    """The exact matrix with non-real coefficients that conjugates the
    weight-(1,2) circle form to the linear one."""
    half = Fraction(1, 2)
    quarter = Fraction(1, 4)
    p = LaurentPoly.from_coeffs([
        GaussianRational(1),
        GaussianRational(-half, half),          # -(1-i)/2
        GaussianRational(-quarter, -quarter),   # -(1+i)/4
    ])
    q = LaurentPoly.constant(GaussianRational(quarter, -quarter))  # (1-i)/4
    s = LaurentPoly.from_coeffs([
        GaussianRational(-3 * quarter, quarter),   # -(3-i)/4
        GaussianRational(-quarter, -quarter),      # -(1+i)/4
    ])
    r = LaurentPoly.from_coeffs([
        GaussianRational(1),
        GaussianRational(half, -half),             # (1-i)/2
        GaussianRational(quarter, -quarter),       # (1-i)/4
        GaussianRational(quarter, -quarter),       # (1-i)/4
    ])
    return StructuredMatrix(CASE12_CROSS_EXPONENT, p, q, s, r)


def case12_involution() -> PolyMap:
    """tau = phi o tau0 for the weight-(1,2) twist; an involution inverting
    the torus, which is the orthogonal-bundle structure condition."""
    return expand(case12_twist()).compose(tau0_map())


def verify_case12_bundle() -> bool:
    """The twist composes with its holomorphic swap-twin to the identity,
    so tau above squares to the identity."""
    phi = case12_twist()
    ident = StructuredMatrix.identity(phi.e)
    return phi * phi.s_twist() == ident and phi.s_twist() * phi == ident


def verify_case12_linearization() -> bool:
    """The non-real conjugator N splits the weight-(1,2) twist:
    N * (gamma N)^-1 = Phi with det(N) a nonzero constant and N polynomial."""
    n = case12_conjugator()
    det = n.det()
    if not (det.is_constant and not det.is_zero):
        return False
    if n.membership() is not Membership.LAMBDA:
        return False
    return n * n.galois().inverse() == case12_twist()
