from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from circleforms import (
    FormSpec,
    GaussianRational,
    LaurentPoly,
    MultiPoly,
    PolyMap,
    RealStructureMap,
    StructuredMatrix,
    compose,
    expand,
    is_involution,
    linear_circle_form,
    make_circle_form,
    make_twist,
    o2_relation_check,
    weight_check,
)
from circleforms.forms import tau0_map, twist_automorphism
from circleforms.polymaps import base_scaling_map, scaling_map

from strategies import gaussians, nonzero_rationals, structured

A, B, X, Y = (MultiPoly.variable(i) for i in range(4))

multis = st.dictionaries(
    st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2), st.integers(0, 2)),
    gaussians,
    max_size=4,
).map(MultiPoly)

poly_structured = structured(e_values=(3, 5), entry_strategy=st.dictionaries(
    st.integers(0, 2), gaussians, max_size=3).map(LaurentPoly))


def poly_structured_pairs():
    entry = st.dictionaries(st.integers(0, 2), gaussians, max_size=3).map(LaurentPoly)
    return st.sampled_from((3, 5)).flatmap(
        lambda e: st.tuples(structured((e,), entry), structured((e,), entry)))


class TestMultiPoly:
    @given(p=multis, q=multis, r=multis)
    @settings(max_examples=50)
    def test_ring_axioms(self, p, q, r):
        assert (p + q) * r == p * r + q * r
        assert p * q == q * p
        assert p - p == MultiPoly.zero()

    @given(p=multis, q=multis)
    @settings(max_examples=50)
    def test_bar_multiplicative(self, p, q):
        assert (p * q).bar() == p.bar() * q.bar()

    def test_substitute_is_evaluation(self):
        p = A * A * B + X * 3
        images = (B, A, Y, X)
        assert p.substitute(images) == B * B * A + Y * 3

    @given(p=multis)
    @settings(max_examples=50)
    def test_substitute_identity(self, p):
        assert p.substitute((A, B, X, Y)) == p


class TestCompose:
    def test_mu0_squares_to_identity(self):
        mu0 = linear_circle_form()
        assert compose(mu0, mu0) == RealStructureMap.identity()

    def test_conjugation_flags_cancel(self):
        conj = RealStructureMap(PolyMap.identity(), True)
        assert compose(conj, conj) == RealStructureMap.identity()

    def test_circle_form_is_twist_after_swap(self):
        spec = FormSpec(1, LaurentPoly.one())
        mu = make_circle_form(spec)
        manual = compose(twist_automorphism(make_twist(spec)), linear_circle_form())
        assert mu == manual
        assert mu.conjugates_input

    @given(pair=poly_structured_pairs())
    @settings(max_examples=25)
    def test_associativity_via_matrices(self, pair):
        m1, m2 = pair
        f = RealStructureMap(expand(m1), False)
        g = RealStructureMap(expand(m2), True)
        mu0 = linear_circle_form()
        assert compose(compose(f, g), mu0) == compose(f, compose(g, mu0))


class TestInvolutions:
    def test_mu0(self):
        assert is_involution(linear_circle_form())

    def test_twisted_form(self):
        assert is_involution(make_circle_form(FormSpec(1, LaurentPoly.one())))

    def test_twist_alone_is_not(self):
        spec = FormSpec(1, LaurentPoly.one())
        phi = twist_automorphism(make_twist(spec))
        assert not is_involution(phi)


class TestWeightCheck:
    def test_twist_is_equivariant(self):
        spec = FormSpec(2, LaurentPoly.from_coeffs([1, 2]))
        phi = expand(make_twist(spec))
        assert weight_check(phi, spec.weights(), +1)

    def test_mu0_polynomial_part_inverts_weights(self):
        assert weight_check(tau0_map(), (2, -2, 3, -3), -1)

    def test_wrong_weight_detected(self):
        bad = PolyMap((X, B, A, Y))
        assert not weight_check(bad, (2, -2, 3, -3), +1)

    def test_weights_pattern_enforced(self):
        with pytest.raises(ValueError):
            weight_check(PolyMap.identity(), (2, -2, 3, 3), +1)


class TestO2Relations:
    def test_plain_swap(self):
        assert o2_relation_check(tau0_map(), (2, -2, 3, -3))

    def test_identity_fails_inversion(self):
        assert not o2_relation_check(PolyMap.identity(), (2, -2, 3, -3))


class TestExpand:
    def test_identity(self):
        assert expand(StructuredMatrix.identity(3)) == PolyMap.identity()

    def test_laurent_entries_rejected(self):
        bad = StructuredMatrix(3, LaurentPoly.monomial(-1), LaurentPoly.zero(),
                               LaurentPoly.zero(), LaurentPoly.one())
        with pytest.raises(ValueError):
            expand(bad)

    @given(pair=poly_structured_pairs())
    @settings(max_examples=25)
    def test_product_homomorphism(self, pair):
        m1, m2 = pair
        assert expand(m1 * m2) == expand(m1).compose(expand(m2))

    @given(m=poly_structured)
    @settings(max_examples=25)
    def test_galois_is_mu0_conjugation(self, m):
        mu0 = linear_circle_form()
        lhs = RealStructureMap(expand(m.galois()), False)
        rhs = compose(mu0, compose(RealStructureMap(expand(m), False), mu0))
        assert lhs == rhs

    @given(m=poly_structured)
    @settings(max_examples=20)
    def test_injective_on_samples(self, m):
        # distinct matrices expand to distinct maps
        other = m * StructuredMatrix(m.e, LaurentPoly.one(), LaurentPoly.one(),
                                     LaurentPoly.zero(), LaurentPoly.one())
        if m != other:
            assert expand(m) != expand(other)


OMEGA = GaussianRational(Fraction(3, 5), Fraction(4, 5))


class TestCircleScalings:
    def test_omega_must_be_on_circle(self):
        with pytest.raises(ValueError):
            scaling_map(GaussianRational(2), (2, -2, 3, -3))

    @given(m=poly_structured)
    @settings(max_examples=20)
    def test_omega_commutes_with_fiber_twists(self, m):
        weights = (2, -2, m.e, -m.e)
        rho = scaling_map(OMEGA, weights)
        rho_inv = scaling_map(OMEGA.conjugate(), weights)
        assert rho_inv.compose(rho) == PolyMap.identity()
        conjugated = rho.compose(expand(m)).compose(rho_inv)
        assert conjugated == expand(m)

    @given(r=nonzero_rationals)
    def test_base_scaling_factors(self, r):
        # composing the base rescaling with a circle point gives base factors
        # (lambda, conj(lambda)) with lambda = r * omega^2
        psi = base_scaling_map(r).compose(scaling_map(OMEGA, (2, -2, 3, -3)))
        lam = OMEGA * OMEGA * r
        assert psi.images[0] == A * lam
        assert psi.images[1] == B * lam.conjugate()
        assert psi.images[2] == X * (OMEGA ** 3)
        assert psi.images[3] == Y * (OMEGA.conjugate() ** 3)
