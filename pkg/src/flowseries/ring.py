"""Exact arithmetic for exponential polynomials in one variable t.

An exponential polynomial is a finite sum

    f(t) = sum_i  c_i * t^(m_i) * exp(a_i * t)

with rational coefficients c_i, nonnegative integer powers m_i and rational
rates a_i.  Every coefficient function produced by the series solvers lives
in this class: it is closed under addition, multiplication, differentiation
and integration from zero, so all structural identities (divergence
constraints, mode ODEs, initial conditions) can be tested exactly, with no
tolerances.

Canonical form: terms are keyed by the pair (power, rate); no two terms
share a key and no term has coefficient zero.  Terms are stored sorted by
(power, rate), which makes equality, hashing and serialization
deterministic.

Floating point enters only through :meth:`ExpPoly.evaluate`; all other
operations stay in exact rationals (`fractions.Fraction`).
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Iterator

__all__ = ["Rational", "ExpPoly", "EvalOverflowError", "as_fraction"]

# Scalars are plain stdlib Fractions: always lowest terms, positive
# denominator, exact arithmetic.
Rational = Fraction

# Largest x with exp(x) finite in IEEE double.
_MAX_EXP_ARG = 709.782712893384

# One term: (power m, rate a, coefficient c) meaning c * t^m * exp(a*t).
Term = tuple[int, Fraction, Fraction]


class EvalOverflowError(OverflowError):
    """A term's exponential factor exceeds the double-precision range."""


def as_fraction(value: int | Fraction) -> Fraction:
    """Coerce an exact scalar; floats are rejected to keep state exact."""
    if isinstance(value, float):
        raise TypeError("float scalars are not allowed in exact context; use Fraction")
    return Fraction(value)


def _canonical(pairs: Iterable[tuple[tuple[int, Fraction], Fraction]]) -> tuple[Term, ...]:
    acc: dict[tuple[int, Fraction], Fraction] = {}
    for key, coeff in pairs:
        s = acc.get(key)
        s = coeff if s is None else s + coeff
        if s == 0:
            acc.pop(key, None)
        else:
            acc[key] = s
    return tuple((m, a, acc[(m, a)]) for (m, a) in sorted(acc))


class ExpPoly:
    """Immutable exponential polynomial sum(c * t^m * exp(a*t))."""

    __slots__ = ("_terms", "_float_terms")

    def __init__(self, terms: Iterable[tuple[int | Fraction, int | Fraction, int | Fraction]] = ()):
        """Build from (power, rate, coefficient) triples; merges like terms."""
        pairs = []
        for m, a, c in terms:
            m = int(m)
            if m < 0:
                raise ValueError(f"negative power {m}")
            pairs.append(((m, as_fraction(a)), as_fraction(c)))
        self._terms = _canonical(pairs)
        self._float_terms: tuple[tuple[float, int, float], ...] | None = None

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "ExpPoly":
        return cls()

    @classmethod
    def constant(cls, c: int | Fraction) -> "ExpPoly":
        return cls([(0, 0, c)])

    @classmethod
    def term(cls, coeff: int | Fraction, power: int = 0, rate: int | Fraction = 0) -> "ExpPoly":
        """Single term coeff * t^power * exp(rate*t)."""
        return cls([(power, rate, coeff)])

    @classmethod
    def exponential(cls, rate: int | Fraction, coeff: int | Fraction = 1) -> "ExpPoly":
        return cls([(0, rate, coeff)])

    # -- introspection ------------------------------------------------

    @property
    def terms(self) -> tuple[Term, ...]:
        """Canonical (power, rate, coefficient) triples, sorted."""
        return self._terms

    def is_zero(self) -> bool:
        """Exact test: true iff there are no terms.  No tolerance."""
        return not self._terms

    def value_at_zero(self) -> Fraction:
        """Exact f(0): the sum of coefficients of the power-0 terms."""
        return sum((c for m, _a, c in self._terms if m == 0), Fraction(0))

    def is_linear_in_t(self) -> bool:
        """True iff f(t) = q*t for some rational q (possibly zero)."""
        return all(a == 0 and m == 1 for m, a, _c in self._terms)

    # -- ring operations ----------------------------------------------

    def __add__(self, other: "ExpPoly | int | Fraction") -> "ExpPoly":
        other = _lift(other)
        if other is NotImplemented:
            return NotImplemented
        out = ExpPoly.__new__(ExpPoly)
        out._terms = _canonical(
            [((m, a), c) for m, a, c in self._terms]
            + [((m, a), c) for m, a, c in other._terms]
        )
        out._float_terms = None
        return out

    __radd__ = __add__

    def __neg__(self) -> "ExpPoly":
        out = ExpPoly.__new__(ExpPoly)
        out._terms = tuple((m, a, -c) for m, a, c in self._terms)
        out._float_terms = None
        return out

    def __sub__(self, other: "ExpPoly | int | Fraction") -> "ExpPoly":
        other = _lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: "ExpPoly | int | Fraction") -> "ExpPoly":
        other = _lift(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: "ExpPoly | int | Fraction") -> "ExpPoly":
        other = _lift(other)
        if other is NotImplemented:
            return NotImplemented
        if not self._terms or not other._terms:
            return ExpPoly.zero()
        pairs = []
        for m1, a1, c1 in self._terms:
            for m2, a2, c2 in other._terms:
                pairs.append(((m1 + m2, a1 + a2), c1 * c2))
        out = ExpPoly.__new__(ExpPoly)
        out._terms = _canonical(pairs)
        out._float_terms = None
        return out

    __rmul__ = __mul__

    def derivative(self) -> "ExpPoly":
        """Exact d/dt: c*t^m*e^(at) -> c*m*t^(m-1)*e^(at) + c*a*t^m*e^(at)."""
        pairs = []
        for m, a, c in self._terms:
            if m >= 1:
                pairs.append(((m - 1, a), c * m))
            if a != 0:
                pairs.append(((m, a), c * a))
        out = ExpPoly.__new__(ExpPoly)
        out._terms = _canonical(pairs)
        out._float_terms = None
        return out

    def integrate(self) -> "ExpPoly":
        """The unique antiderivative F with F(0) = 0, exact.

        Power terms integrate to c*t^(m+1)/(m+1).  For a term with nonzero
        rate a, repeated integration by parts gives the closed form

            int t^m e^(at) dt = e^(at) * sum_{i=0}^{m} (-1)^i m!/(m-i)! * t^(m-i) / a^(i+1)

        and the i = m constant at t = 0 is subtracted to pin F(0) = 0.  A
        zero-rate integrand never divides by a, so exact rate cancellation
        (resonance) safely produces pure power terms.
        """
        pairs = []
        for m, a, c in self._terms:
            if a == 0:
                pairs.append(((m + 1, Fraction(0)), c / (m + 1)))
                continue
            falling = 1  # m! / (m-i)!
            sign = 1
            for i in range(m + 1):
                if i > 0:
                    falling *= m - i + 1
                    sign = -sign
                pairs.append(((m - i, a), c * sign * falling / a ** (i + 1)))
            pairs.append(((0, Fraction(0)), -c * sign * falling / a ** (m + 1)))
        out = ExpPoly.__new__(ExpPoly)
        out._terms = _canonical(pairs)
        out._float_terms = None
        return out

    # -- evaluation ---------------------------------------------------

    def evaluate(self, t: float) -> float:
        """Evaluate at a float sample; rationals convert at the last moment.

        Raises EvalOverflowError when rate*t exceeds the double range.
        """
        if not math.isfinite(t):
            raise ValueError(f"sample point must be finite, got {t}")
        if self._float_terms is None:
            self._float_terms = tuple(
                (float(c), m, float(a)) for m, a, c in self._terms
            )
        total = 0.0
        for c, m, a in self._float_terms:
            x = a * t
            if x > _MAX_EXP_ARG:
                raise EvalOverflowError(
                    f"exp({x!r}) overflows double precision (rate {a!r} at t={t!r})"
                )
            total += c * t**m * math.exp(x)
        return total

    __call__ = evaluate

    # -- serialization ------------------------------------------------

    def to_records(self) -> list[list[int]]:
        """[coeff_num, coeff_den, power, rate_num, rate_den] per term."""
        return [
            [c.numerator, c.denominator, m, a.numerator, a.denominator]
            for m, a, c in self._terms
        ]

    @classmethod
    def from_records(cls, records: Iterable[Iterable[int]]) -> "ExpPoly":
        terms = []
        for rec in records:
            cn, cd, m, an, ad = (int(v) for v in rec)
            terms.append((m, Fraction(an, ad), Fraction(cn, cd)))
        return cls(terms)

    # -- comparison / display -----------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ExpPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == ExpPoly.constant(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __iter__(self) -> Iterator[Term]:
        return iter(self._terms)

    def __repr__(self) -> str:
        if not self._terms:
            return "ExpPoly<0>"
        parts = []
        for m, a, c in self._terms:
            factors = [str(c)]
            if m == 1:
                factors.append("t")
            elif m > 1:
                factors.append(f"t^{m}")
            if a != 0:
                factors.append(f"exp({a}t)")
            parts.append("*".join(factors))
        return f"ExpPoly<{' + '.join(parts)}>"


def _lift(value: "ExpPoly | int | Fraction") -> "ExpPoly":
    if isinstance(value, ExpPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return ExpPoly.constant(value)
    return NotImplemented
