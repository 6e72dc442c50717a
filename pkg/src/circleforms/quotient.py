"""Invariants of the torus action and the quotient hypersurface.

The invariant ring of the weight (2, -2, n, -n) action on (a, b, x, y) is
generated by T = ab, W = xy, U = a^n y^2, V = b^n x^2, subject to the single
relation U*V - T^n*W^2 = 0; the categorical quotient is that hypersurface.
Circle forms descend to real forms of the quotient; this module materializes
the generators, the relation, and the induced generator images, but does not
attempt to classify the induced real forms.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .oracle import solve_linear
from .polymaps import MultiPoly, RealStructureMap


@dataclass(frozen=True)
class InvariantTuple:
    t: MultiPoly
    w: MultiPoly
    u: MultiPoly
    v: MultiPoly

    def as_tuple(self) -> tuple[MultiPoly, MultiPoly, MultiPoly, MultiPoly]:
        return self.t, self.w, self.u, self.v


def make_invariants(m: int) -> InvariantTuple:
    """The four generators for n = 2m+1."""
    if m < 1:
        raise ValueError("m must be a positive integer")
    n = 2 * m + 1
    return InvariantTuple(
        t=MultiPoly.monomial((1, 1, 0, 0)),
        w=MultiPoly.monomial((0, 0, 1, 1)),
        u=MultiPoly.monomial((n, 0, 0, 2)),
        v=MultiPoly.monomial((0, n, 2, 0)),
    )


def verify_relation(m: int) -> bool:
    """U*V - T^n*W^2 expands to the zero polynomial, exactly."""
    n = 2 * m + 1
    gens = make_invariants(m)
    return (gens.u * gens.v - gens.t ** n * gens.w ** 2).is_zero


def in_invariant_subring(poly: MultiPoly, m: int) -> bool:
    """Exact linear-algebra test of membership in Q(i)[T, W, U, V].

    Monomials in the generators are homogeneous in (a, b, x, y), so only
    generator products whose total degree matches one of the input's
    homogeneous degrees can contribute; products are enumerated up to twice
    the input degree, which is already more than any contributing product.
    """
    if poly.is_zero:
        return True
    n = 2 * m + 1
    gens = make_invariants(m).as_tuple()
    bound = 2 * poly.total_degree()
    gen_degree = (2, 2, n + 2, n + 2)
    wanted_degrees = {sum(mono) for mono, _ in poly.items()}

    products: list[MultiPoly] = []
    max_exp = [bound // d for d in gen_degree]
    for et in range(max_exp[0] + 1):
        for ew in range(max_exp[1] + 1):
            if 2 * et + 2 * ew > bound:
                break
            for eu in range(max_exp[2] + 1):
                for ev in range(max_exp[3] + 1):
                    degree = 2 * et + 2 * ew + (n + 2) * (eu + ev)
                    if degree > bound:
                        break
                    if degree not in wanted_degrees:
                        continue
                    products.append(
                        gens[0] ** et * gens[1] ** ew * gens[2] ** eu * gens[3] ** ev
                    )

    monomials = sorted({mono for p in products for mono, _ in p.items()}
                       | {mono for mono, _ in poly.items()})
    index = {mono: i for i, mono in enumerate(monomials)}
    zero = Fraction(0)
    rows = [[zero] * len(products) for _ in range(len(monomials))]
    for col, p in enumerate(products):
        for mono, c in p.items():
            rows[index[mono]][col] = Fraction(c.re)  # generator products are real
    rhs_re = [zero] * len(monomials)
    rhs_im = [zero] * len(monomials)
    for mono, c in poly.items():
        rhs_re[index[mono]] = Fraction(c.re)
        rhs_im[index[mono]] = Fraction(c.im)
    # A Q(i)-combination of real products splits into independent real and
    # imaginary solves against the same matrix.
    if solve_linear(rows, rhs_re, len(products)) is None:
        return False
    if any(rhs_im) and solve_linear(rows, rhs_im, len(products)) is None:
        return False
    return True


@dataclass(frozen=True)
class InducedImages:
    """Pullbacks of the generators along the polynomial part of a circle
    form, plus whether each pullback lies in the invariant subring."""

    images: tuple[MultiPoly, MultiPoly, MultiPoly, MultiPoly]
    expressible: tuple[bool, bool, bool, bool]


def induced_images(mu: RealStructureMap, m: int) -> InducedImages:
    """Images of T, W, U, V under the polynomial part of mu.

    For the linear circle form the images land back in the generator set
    (T, W, V, U); for twisted forms expressibility is reported as data, not
    asserted.
    """
    gens = make_invariants(m).as_tuple()
    images = tuple(g.substitute(mu.map.images) for g in gens)
    expressible = tuple(in_invariant_subring(img, m) for img in images)
    return InducedImages(images=images, expressible=expressible)
