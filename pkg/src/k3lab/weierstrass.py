"""Weierstrass models and Kodaira fibers of the two-parameter family.

A member y^2 + z + 1/z + x^3 + a*x + b = 0, read as an elliptic fibration
over the z-line, becomes y^2 = X^3 + A(t) X + B(t) with

    A(t) = a t^4,    B(t) = -(t^5 + b t^6 + t^7)

after x -> -X, X -> xi/t^2, y -> eta/t^3 at t = z.  Both ends of the base
carry a fiber with valuations (4, 5, 10): the standard residue-
characteristic-zero table classifies it as II*, and the discriminant
budget 10 + 10 + 4 = 24 accounts for the Euler number.

Degeneration happens exactly when x^3 + a x + b - 2 or x^3 + a x + b + 2
has a repeated root; the product of the two cubic discriminants is a
polynomial in a^3 and b^2, so the test is exact even when only those
powers are known (no root extraction).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import inf

import mpmath

from .exact import MultiPolynomial, cubic_discriminant, variables

(_T,) = variables("t")


@dataclass(frozen=True)
class FamilyMember:
    a: Fraction
    b: Fraction


@dataclass(frozen=True)
class WeierstrassModel:
    """Coefficients A(t), B(t) of y^2 = X^3 + A X + B over the base line."""

    A: MultiPolynomial
    B: MultiPolynomial

    def discriminant(self) -> MultiPolynomial:
        return -16 * (4 * self.A**3 + 27 * self.B**2)


@dataclass(frozen=True)
class KodairaType:
    symbol: str  # one of I0, In, II, III, IV, I0*, In*, IV*, III*, II*
    n: "int | None" = None

    def __str__(self) -> str:
        if self.symbol == "In":
            return f"I{self.n}"
        if self.symbol == "In*":
            return f"I{self.n}*"
        return self.symbol

    @property
    def euler_contribution(self) -> int:
        table = {"I0": 0, "II": 2, "III": 3, "IV": 4,
                 "I0*": 6, "IV*": 8, "III*": 9, "II*": 10}
        if self.symbol == "In":
            return self.n
        if self.symbol == "In*":
            return 6 + self.n
        return table[self.symbol]


def to_weierstrass(m: FamilyMember) -> WeierstrassModel:
    t = _T
    a, b = Fraction(m.a), Fraction(m.b)
    return WeierstrassModel(a * t**4, -(t**5 + b * t**6 + t**7))


def palindromic_transform(model: WeierstrassModel) -> WeierstrassModel:
    """The model in the chart at infinity: A(1/t) t^8 and B(1/t) t^12."""
    return WeierstrassModel(
        _reverse(model.A, 8), _reverse(model.B, 12)
    )


def _reverse(p: MultiPolynomial, degree: int) -> MultiPolynomial:
    if p.total_degree() > degree:
        raise ValueError("polynomial degree exceeds the homogenization degree")
    return MultiPolynomial(p.vars, {(degree - e[0],): c for e, c in p.terms.items()})


def _order_at_zero(p: MultiPolynomial):
    if p.is_zero():
        return inf
    return min(e[0] for e in p.terms)


def kodaira_type(ord_a, ord_b, ord_delta) -> KodairaType:
    """Classify by the valuation table (residue characteristic zero).

    ord_a may be `math.inf` (zero coefficient polynomial), which satisfies
    every lower-bound clause.
    """
    if ord_delta == 0:
        return KodairaType("I0")
    if ord_a == 0:
        return KodairaType("In", int(ord_delta))
    if ord_a >= 4 and ord_b >= 6:
        raise ValueError("model is not minimal: ord(A) >= 4 and ord(B) >= 6")
    if ord_b == 1:
        return KodairaType("II")
    if ord_a == 1:
        return KodairaType("III")
    if ord_b == 2:
        return KodairaType("IV")
    if ord_delta == 6:
        return KodairaType("I0*")
    if ord_a == 2 and ord_b == 3:
        return KodairaType("In*", int(ord_delta) - 6)
    if ord_b == 4:
        return KodairaType("IV*")
    if ord_a == 3:
        return KodairaType("III*")
    if ord_b == 5:
        return KodairaType("II*")
    raise ValueError(f"no table entry for orders ({ord_a}, {ord_b}, {ord_delta})")


@dataclass(frozen=True)
class FiberAnalysis:
    at_zero: KodairaType
    at_infinity: KodairaType
    extra_zero_multiplicity: int  # discriminant zeros away from 0, infinity
    euler_total: int


def fiber_analysis(m: FamilyMember) -> FiberAnalysis:
    model = to_weierstrass(m)
    delta = model.discriminant()
    if delta.is_zero():
        raise ValueError("degenerate family: the discriminant vanishes identically")
    far = palindromic_transform(model)
    delta_far = far.discriminant()

    def classify(mod, disc):
        return kodaira_type(
            _order_at_zero(mod.A), _order_at_zero(mod.B), _order_at_zero(disc)
        )

    at_zero = classify(model, delta)
    at_infinity = classify(far, delta_far)
    ord0 = _order_at_zero(delta)
    extra = delta.total_degree() - ord0
    euler = at_zero.euler_contribution + at_infinity.euler_contribution + extra
    return FiberAnalysis(at_zero, at_infinity, extra, euler)


def is_degenerate(m: FamilyMember) -> bool:
    """True iff x^3 + a x + (b -+ 2) has a repeated root (exact rationals)."""
    a, b = Fraction(m.a), Fraction(m.b)
    return cubic_discriminant(a, b - 2) == 0 or cubic_discriminant(a, b + 2) == 0


def is_degenerate_numeric(a, b, tolerance=None, prec_bits: int = 256) -> bool:
    """Numeric double-root test for complex coefficients."""
    with mpmath.workprec(prec_bits):
        if tolerance is None:
            tolerance = mpmath.mpf(2) ** (-prec_bits // 2)
        a, b = mpmath.mpmathify(a), mpmath.mpmathify(b)
        d1 = -4 * a**3 - 27 * (b - 2) ** 2
        d2 = -4 * a**3 - 27 * (b + 2) ** 2
        return bool(abs(d1) < tolerance or abs(d2) < tolerance)


def degeneracy_indicator(a_cubed, b_squared) -> Fraction:
    """disc(a, b-2) * disc(a, b+2) as a polynomial in a^3 and b^2.

    Expanding (-4p - 27(b-2)^2)(-4p - 27(b+2)^2) with p = a^3 and q = b^2:

        16 p^2 + 216 p q + 864 p + 729 q^2 - 5832 q + 11664.

    Zero iff the member is degenerate; branch-free in a and b.
    """
    p, q = Fraction(a_cubed), Fraction(b_squared)
    return (16 * p**2 + 216 * p * q + 864 * p
            + 729 * q**2 - 5832 * q + 11664)


def is_degenerate_powers(a_cubed, b_squared) -> bool:
    return degeneracy_indicator(a_cubed, b_squared) == 0
