from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from circleforms import GaussianRational, format_rational, parse_rational, rational_odd_root
from circleforms.gaussian import integer_kth_root

from strategies import gaussians, nonzero_gaussians, rationals

I = GaussianRational(0, 1)


class TestArithmetic:
    def test_norm_identity(self):
        assert GaussianRational(1, 1) * GaussianRational(1, -1) == 2

    def test_inverse_of_two(self):
        assert GaussianRational(2).inverse() == GaussianRational(Fraction(1, 2))

    def test_product_of_conjugate_halves(self):
        # ((1-i)/2) * ((1+i)/4) = (1-i)(1+i)/8 = 2/8 = 1/4
        lhs = GaussianRational(Fraction(1, 2), Fraction(-1, 2))
        rhs = GaussianRational(Fraction(1, 4), Fraction(1, 4))
        assert lhs * rhs == GaussianRational(Fraction(1, 4))

    def test_division_by_zero_is_distinct_error(self):
        with pytest.raises(ZeroDivisionError):
            GaussianRational(1) / GaussianRational(0)
        with pytest.raises(ZeroDivisionError):
            GaussianRational(0).inverse()

    @given(z1=gaussians, z2=gaussians, z3=gaussians)
    def test_field_axioms(self, z1, z2, z3):
        assert (z1 + z2) + z3 == z1 + (z2 + z3)
        assert (z1 * z2) * z3 == z1 * (z2 * z3)
        assert z1 * (z2 + z3) == z1 * z2 + z1 * z3
        assert z1 + (-z1) == 0
        assert z1 * 1 == z1

    @given(z=nonzero_gaussians)
    def test_multiplicative_inverse(self, z):
        assert z * z.inverse() == 1
        assert (1 / z) * z == 1

    @given(z1=gaussians, z2=nonzero_gaussians)
    def test_division_roundtrip(self, z1, z2):
        assert (z1 / z2) * z2 == z1


class TestConjugation:
    def test_basic(self):
        assert GaussianRational(1, 1).conjugate() == GaussianRational(1, -1)
        z = GaussianRational(Fraction(3, 5), Fraction(4, 5))
        assert z.conjugate() == GaussianRational(Fraction(3, 5), Fraction(-4, 5))

    @given(z=gaussians)
    def test_involution(self, z):
        assert z.conjugate().conjugate() == z

    @given(z1=gaussians, z2=gaussians)
    def test_ring_automorphism(self, z1, z2):
        assert (z1 * z2).conjugate() == z1.conjugate() * z2.conjugate()
        assert (z1 + z2).conjugate() == z1.conjugate() + z2.conjugate()

    @given(z=gaussians)
    def test_is_real_iff_fixed(self, z):
        assert z.is_real == (z.conjugate() == z)


class TestOddRoots:
    @pytest.mark.parametrize("q,k,expected", [
        (Fraction(1, 8), 3, Fraction(1, 2)),
        (Fraction(-27), 3, Fraction(-3)),
        (Fraction(0), 5, Fraction(0)),
        (Fraction(32, 243), 5, Fraction(2, 3)),
        (Fraction(7), 1, Fraction(7)),
    ])
    def test_exact_roots(self, q, k, expected):
        assert rational_odd_root(q, k) == expected

    def test_no_rational_cube_root_of_third(self):
        # brute scan: no integer pair (p, q) with small absolute value cubes to 1/3
        for p in range(-20, 21):
            for q in range(1, 21):
                assert Fraction(p, q) ** 3 != Fraction(1, 3)
        assert rational_odd_root(Fraction(1, 3), 3) is None

    def test_even_k_rejected(self):
        with pytest.raises(ValueError):
            rational_odd_root(Fraction(4), 2)

    @given(r=rationals, k=st.sampled_from([1, 3, 5, 7]))
    def test_root_of_power_recovers(self, r, k):
        assert rational_odd_root(r ** k, k) == r

    @given(q=rationals, k=st.sampled_from([1, 3, 5]))
    def test_result_powers_back(self, q, k):
        root = rational_odd_root(q, k)
        if root is not None:
            assert root ** k == q

    def test_integer_root_boundaries(self):
        assert integer_kth_root(0, 3) == 0
        assert integer_kth_root(1, 9) == 1
        assert integer_kth_root(2 ** 30, 3) == 2 ** 10
        assert integer_kth_root(2 ** 30 + 1, 3) is None
        big = 12345678901234567890123456789
        assert integer_kth_root(big ** 7, 7) == big


class TestText:
    @pytest.mark.parametrize("text", ["-3/4", "7", "0", "1/2"])
    def test_rational_round_trip(self, text):
        assert format_rational(parse_rational(text)) == text

    def test_json_omits_zero_im(self):
        assert GaussianRational(Fraction(1, 2)).to_json() == {"re": "1/2"}
        obj = GaussianRational(1, -2).to_json()
        assert obj == {"re": "1", "im": "-2"}

    @given(z=gaussians)
    def test_json_round_trip(self, z):
        assert GaussianRational.from_json(z.to_json()) == z

    def test_str_forms(self):
        assert str(GaussianRational(1, 1)) == "1+i"
        assert str(GaussianRational(0, -1)) == "-i"
        assert str(GaussianRational(Fraction(3, 5), Fraction(-4, 5))) == "3/5-4/5i"
