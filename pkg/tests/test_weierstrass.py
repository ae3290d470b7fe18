"""Weierstrass models, Kodaira classification, degeneration detection."""

import random
from fractions import Fraction
from math import inf

import pytest

from k3lab import shioda_inose as si
from k3lab import weierstrass as w
from k3lab.exact import variables


class TestToWeierstrass:
    def test_example(self):
        (t,) = variables("t")
        model = w.to_weierstrass(w.FamilyMember(Fraction(1), Fraction(0)))
        assert model.A == t**4
        assert model.B == -(t**5 + t**7)

    def test_a_zero(self):
        model = w.to_weierstrass(w.FamilyMember(Fraction(0), Fraction(0)))
        assert model.A.is_zero()

    def test_substitution_oracle(self):
        # eta^2 - xi^3 - A(t) xi - B(t) with xi = -x t^2, eta = y t^3 must
        # equal t^6 * (y^2 + x^3 + a x + b + t + 1/t), fully symbolically
        x, y, t, a, b = variables("x", "y", "t", "a", "b")
        vars5 = ("x", "y", "t", "a", "b")
        A = a * t**4
        B = -(t**5 + b * t**6 + t**7)
        xi = -x * t**2
        eta = y * t**3
        lhs = eta**2 - xi**3 - A * xi - B
        rhs = t**6 * (y**2 + x**3 + a * x + b) + t**7 + t**5
        assert (lhs - rhs).is_zero()

    def test_palindrome_symmetry(self):
        rng = random.Random(2)
        for _ in range(10):
            a = Fraction(rng.randint(-30, 30), rng.randint(1, 9))
            b = Fraction(rng.randint(-30, 30), rng.randint(1, 9))
            model = w.to_weierstrass(w.FamilyMember(a, b))
            far = w.palindromic_transform(model)
            assert far.A == model.A
            assert far.B == model.B
            assert w.palindromic_transform(model).discriminant() == model.discriminant()


class TestKodairaTable:
    @pytest.mark.parametrize("orders,expected", [
        ((4, 5, 10), "II*"),
        ((2, 3, 6), "I0*"),
        ((0, 0, 1), "I1"),
        ((0, 0, 5), "I5"),
        ((1, 1, 2), "II"),
        ((1, 2, 3), "III"),
        ((2, 2, 4), "IV"),
        ((2, 3, 8), "I2*"),
        ((3, 4, 8), "IV*"),
        ((3, 5, 9), "III*"),
        ((inf, 5, 10), "II*"),
        ((2, 4, 6), "I0*"),
        ((5, 5, 10), "II*"),
    ])
    def test_table(self, orders, expected):
        assert str(w.kodaira_type(*orders)) == expected

    def test_non_minimal_rejected(self):
        with pytest.raises(ValueError):
            w.kodaira_type(4, 6, 12)

    def test_i0(self):
        assert str(w.kodaira_type(0, 0, 0)) == "I0"


class TestFiberAnalysis:
    def test_generic_member(self):
        fa = w.fiber_analysis(w.FamilyMember(Fraction(1), Fraction(1)))
        assert str(fa.at_zero) == "II*"
        assert str(fa.at_infinity) == "II*"
        assert fa.extra_zero_multiplicity == 4
        assert fa.euler_total == 24

    def test_a_zero_member(self):
        fa = w.fiber_analysis(w.FamilyMember(Fraction(0), Fraction(0)))
        assert str(fa.at_zero) == "II*"
        assert str(fa.at_infinity) == "II*"
        assert fa.extra_zero_multiplicity == 4
        assert fa.euler_total == 24

    def test_euler_budget_random(self):
        rng = random.Random(6)
        checked = 0
        while checked < 50:
            a = Fraction(rng.randint(-40, 40), rng.randint(1, 9))
            b = Fraction(rng.randint(-40, 40), rng.randint(1, 9))
            member = w.FamilyMember(a, b)
            if w.is_degenerate(member):
                continue
            fa = w.fiber_analysis(member)
            assert fa.euler_total == 24
            assert str(fa.at_zero) == str(fa.at_infinity) == "II*"
            checked += 1


class TestDegeneration:
    def test_known_degenerate(self):
        assert w.is_degenerate(w.FamilyMember(Fraction(-3), Fraction(0)))
        assert w.is_degenerate(w.FamilyMember(Fraction(0), Fraction(2)))

    def test_known_smooth(self):
        assert not w.is_degenerate(w.FamilyMember(Fraction(1), Fraction(1)))

    def test_numeric_mode(self):
        assert w.is_degenerate_numeric(-3, 0)
        assert not w.is_degenerate_numeric(1, 1)

    def test_indicator_matches_product(self):
        rng = random.Random(8)
        for _ in range(20):
            a = Fraction(rng.randint(-20, 20), rng.randint(1, 7))
            b = Fraction(rng.randint(-20, 20), rng.randint(1, 7))
            from k3lab.exact import cubic_discriminant
            prod = cubic_discriminant(a, b - 2) * cubic_discriminant(a, b + 2)
            assert w.degeneracy_indicator(a**3, b**2) == prod

    def test_double_root_example(self):
        # x^3 - 3x + 2 = (x-1)^2 (x+2): the member (-3, 0) hits b - 2 = -2
        from k3lab.exact import cubic_discriminant
        assert cubic_discriminant(-3, -2) == 0


class TestDegenerationMatchesJEquality:
    """Degeneration exactly on the locus j1 = j2, via the branch-free
    indicator in a^3, b^2."""

    def test_matched_pairs_degenerate(self):
        rng = random.Random(10)
        orbit = [
            lambda l: l,
            lambda l: 1 - l,
            lambda l: 1 / l,
            lambda l: l / (l - 1),
            lambda l: (l - 1) / l,
            lambda l: 1 / (1 - l),
        ]
        count = 0
        while count < 20:
            l1 = si.random_lambda(rng)
            l2 = orbit[rng.randrange(6)](l1)
            if l2 in (0, 1):
                continue
            assert si.j_from_lambda(l1) == si.j_from_lambda(l2)
            powers = si.ab_powers_from_lambda(l1, l2)
            assert w.is_degenerate_powers(powers.a_cubed, powers.b_squared)
            count += 1

    def test_unmatched_pairs_smooth(self):
        rng = random.Random(12)
        count = 0
        while count < 20:
            l1, l2 = si.random_lambda(rng), si.random_lambda(rng)
            if si.j_from_lambda(l1) == si.j_from_lambda(l2):
                continue
            powers = si.ab_powers_from_lambda(l1, l2)
            assert not w.is_degenerate_powers(powers.a_cubed, powers.b_squared)
            count += 1
