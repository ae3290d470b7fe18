"""Exact multivariate polynomial and rational-function arithmetic over Q.

A polynomial is a map from exponent vectors to nonzero rational coefficients,
always kept in canonical form (no stored zeros), so identity testing is exact:
two polynomials are equal iff their term maps are equal, and a sum of terms is
zero iff the map is empty.

Coefficients are ``int`` or ``fractions.Fraction``; the two interoperate, and
integer-only inputs stay integer, which keeps the large expansions fast.
Rational functions are never reduced; equality is decided by
cross-multiplication, which avoids multivariate gcd entirely.

    >>> u, v = variables("u", "v")
    >>> ((u + v) ** 2 - u**2 - 2 * u * v - v**2).is_zero()
    True
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from operator import add
from typing import Iterable, Mapping, Sequence, Union

Coeff = Union[int, Fraction]
Exponents = tuple[int, ...]


class MultiPolynomial:
    """Polynomial in a fixed ordered tuple of variables, exact over Q."""

    __slots__ = ("vars", "terms")

    def __init__(self, vars: tuple[str, ...], terms: Mapping[Exponents, Coeff]):
        self.vars = vars
        self.terms = {e: c for e, c in terms.items() if c != 0}

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, vars: tuple[str, ...]) -> "MultiPolynomial":
        return cls(vars, {})

    @classmethod
    def constant(cls, vars: tuple[str, ...], value: Coeff) -> "MultiPolynomial":
        return cls(vars, {(0,) * len(vars): value})

    @classmethod
    def variable(cls, vars: tuple[str, ...], name: str) -> "MultiPolynomial":
        if name not in vars:
            raise ValueError(f"unknown variable {name!r}; have {vars}")
        exp = tuple(1 if w == name else 0 for w in vars)
        return cls(vars, {exp: 1})

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = MultiPolynomial.constant(self.vars, other)
        if not isinstance(other, MultiPolynomial):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> "MultiPolynomial":
        if isinstance(other, MultiPolynomial):
            if other.vars != self.vars:
                raise ValueError(f"variable mismatch: {self.vars} vs {other.vars}")
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPolynomial.constant(self.vars, other)
        return NotImplemented

    def __add__(self, other) -> "MultiPolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return MultiPolynomial(self.vars, out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPolynomial":
        return MultiPolynomial(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "MultiPolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "MultiPolynomial":
        return (-self) + other

    def __mul__(self, other) -> "MultiPolynomial":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return MultiPolynomial.zero(self.vars)
            return MultiPolynomial(
                self.vars, {e: c * other for e, c in self.terms.items()}
            )
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out: dict = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple(map(add, e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return MultiPolynomial(self.vars, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MultiPolynomial":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = MultiPolynomial.constant(self.vars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    # -- queries -----------------------------------------------------------

    def evaluate(self, point: Mapping[str, Coeff]) -> Fraction:
        """Exact value at a rational point assigning every variable."""
        missing = [w for w in self.vars if w not in point]
        if missing:
            raise ValueError(f"no value assigned to {missing}")
        values = [Fraction(point[w]) for w in self.vars]
        total = Fraction(0)
        for e, c in self.terms.items():
            term = Fraction(c)
            for val, k in zip(values, e):
                if k:
                    term *= val**k
            total += term
        return total

    def total_degree(self) -> int:
        if not self.terms:
            return 0
        return max(sum(e) for e in self.terms)

    def degree_in(self, names: Iterable[str]) -> int:
        """Max combined exponent of the given variables over all terms."""
        idx = [self.vars.index(w) for w in names]
        if not self.terms:
            return 0
        return max(sum(e[i] for i in idx) for e in self.terms)

    def is_homogeneous_in(self, names: Iterable[str], degree: int) -> bool:
        idx = [self.vars.index(w) for w in names]
        return all(sum(e[i] for i in idx) == degree for e in self.terms)

    def divisible_by_variable(self, name: str) -> bool:
        i = self.vars.index(name)
        return all(e[i] >= 1 for e in self.terms)

    def coefficient_items(self) -> list[tuple[Exponents, Coeff]]:
        """Terms in a deterministic (sorted) order."""
        return sorted(self.terms.items())

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for e, c in self.coefficient_items():
            mono = "*".join(
                f"{w}^{k}" if k > 1 else w for w, k in zip(self.vars, e) if k
            )
            bits.append(f"{c}" + (f"*{mono}" if mono else ""))
        return " + ".join(bits)


def variables(*names: str) -> tuple[MultiPolynomial, ...]:
    """Generator polynomials for a ring in the given variables.

    >>> x, y = variables("x", "y")
    """
    vars = tuple(names)
    return tuple(MultiPolynomial.variable(vars, w) for w in vars)


def poly_is_zero(p: MultiPolynomial) -> bool:
    return p.is_zero()


def poly_evaluate(p: MultiPolynomial, point: Mapping[str, Coeff]) -> Fraction:
    return p.evaluate(point)


@dataclass(frozen=True)
class RationalFunction:
    """Quotient of two polynomials; the denominator must be nonzero.

    No reduction is ever performed. Equality is by cross-multiplication:
    f == g iff f.num * g.den - g.num * f.den is the zero polynomial.
    """

    num: MultiPolynomial
    den: MultiPolynomial

    def __post_init__(self):
        if self.den.is_zero():
            raise ZeroDivisionError("zero denominator in rational function")

    @classmethod
    def from_poly(cls, p: MultiPolynomial) -> "RationalFunction":
        return cls(p, MultiPolynomial.constant(p.vars, 1))

    def _coerce(self, other) -> "RationalFunction":
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, MultiPolynomial):
            return RationalFunction.from_poly(other)
        if isinstance(other, (int, Fraction)):
            one = MultiPolynomial.constant(self.num.vars, 1)
            return RationalFunction(MultiPolynomial.constant(self.num.vars, other), one)
        return NotImplemented

    def __add__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "RationalFunction":
        if isinstance(other, (int, Fraction, MultiPolynomial)):
            other = self._coerce(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __pow__(self, n: int) -> "RationalFunction":
        return RationalFunction(self.num**n, self.den**n)

    def evaluate(self, point: Mapping[str, Coeff]) -> Fraction:
        den = self.den.evaluate(point)
        if den == 0:
            raise ZeroDivisionError("denominator vanishes at the point")
        return self.num.evaluate(point) / den

    def equals(self, other: "RationalFunction") -> bool:
        return (self.num * other.den - other.num * self.den).is_zero()


def ratfunc_equal(f: RationalFunction, g: RationalFunction) -> bool:
    return f.equals(g)


def clear_denominators(terms: Sequence[RationalFunction]) -> MultiPolynomial:
    """Numerator of a sum of rational terms over the product of all denominators.

    For f = sum(terms), returns N with f = N / D where D is the product of
    every term denominator (no gcd is taken); f == 0 iff N == 0.
    """
    terms = list(terms)
    if not terms:
        raise ValueError("empty sum")
    for t in terms:
        if t.den.is_zero():
            raise ZeroDivisionError("zero denominator among the terms")
    dens = [t.den for t in terms]
    n = len(terms)
    one = MultiPolynomial.constant(terms[0].num.vars, 1)
    # prefix[i] = d_0 ... d_{i-1}, suffix[i] = d_i ... d_{n-1}
    prefix = [one]
    for d in dens:
        prefix.append(prefix[-1] * d)
    suffix = [one] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = dens[i] * suffix[i + 1]
    total = MultiPolynomial.zero(terms[0].num.vars)
    for i, t in enumerate(terms):
        total = total + t.num * (prefix[i] * suffix[i + 1])
    return total


def cubic_discriminant(p: Coeff, q: Coeff) -> Fraction:
    """Discriminant -4p^3 - 27q^2 of x^3 + p*x + q; zero iff a repeated root."""
    p, q = Fraction(p), Fraction(q)
    return -4 * p**3 - 27 * q**2


def compose_rational(
    p: MultiPolynomial, subs: Mapping[str, RationalFunction]
) -> RationalFunction:
    """Substitute rational functions for every variable of p.

    Intended for small polynomials (symmetry and route-independence checks);
    the result is not reduced.
    """
    missing = [w for w in p.vars if w not in subs]
    if missing:
        raise ValueError(f"no substitution for {missing}")
    target_vars = next(iter(subs.values())).num.vars
    one = MultiPolynomial.constant(target_vars, 1)
    total = RationalFunction(MultiPolynomial.zero(target_vars), one)
    for e, c in p.terms.items():
        term = RationalFunction(MultiPolynomial.constant(target_vars, c), one)
        for w, k in zip(p.vars, e):
            if k:
                term = term * subs[w] ** k
        total = total + term
    return total


DEFAULT_PRECISION_BITS = 256
