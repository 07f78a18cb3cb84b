"""Rational-coefficient plane-branch parameterizations with one Puiseux pair.

A curve is x(t) = t^alpha, y(t) = t^beta + sum a_i t^(i+beta) with exactly
b = c - beta - 1 coefficient slots (c the semigroup conductor), the largest
exponent that can influence the value sets.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .semigroup import Semigroup
from .symbolic import TruncSeries


def coefficient_count(semigroup: Semigroup) -> int:
    """Number of free series coefficients, never negative."""
    return max(semigroup.conductor - semigroup.beta - 1, 0)


@dataclass(frozen=True)
class PuiseuxParam:
    alpha: int
    beta: int
    coeffs: tuple  # (a_1, ..., a_b) as Fractions

    def __post_init__(self):
        s = Semigroup(self.alpha, self.beta)
        b = coefficient_count(s)
        if len(self.coeffs) != b:
            raise DomainError(
                f"expected {b} coefficients for <{self.alpha},{self.beta}>, "
                f"got {len(self.coeffs)}")
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    @classmethod
    def from_exponent_map(cls, alpha: int, beta: int, terms: dict) -> "PuiseuxParam":
        """Build from {absolute exponent of t: coefficient} for y(t)."""
        s = Semigroup(alpha, beta)
        b = coefficient_count(s)
        coeffs = [Fraction(0)] * b
        for exp, c in terms.items():
            i = exp - beta
            if not (1 <= i <= b):
                raise DomainError(
                    f"exponent {exp} outside the admissible range "
                    f"[{beta + 1}, {beta + b}] for <{alpha},{beta}>")
            coeffs[i - 1] = Fraction(c)
        return cls(alpha, beta, tuple(coeffs))

    def semigroup(self) -> Semigroup:
        return Semigroup(self.alpha, self.beta)

    def y_series(self, trunc: int) -> TruncSeries:
        out = {self.beta: Fraction(1)}
        for i, c in enumerate(self.coeffs, start=1):
            if c:
                out[i + self.beta] = c
        return TruncSeries(trunc, out)

    def x_series(self, trunc: int) -> TruncSeries:
        return TruncSeries.monomial(trunc, self.alpha)

    def derivative_quotient(self, trunc: int) -> TruncSeries:
        """dy/dx = y'(t) / (alpha t^(alpha-1)); order beta - alpha."""
        out = {self.beta - self.alpha: Fraction(self.beta, self.alpha)}
        for i, c in enumerate(self.coeffs, start=1):
            if c:
                d = i + self.beta
                out[d - self.alpha] = c * Fraction(d, self.alpha)
        return TruncSeries(trunc, out)

    def to_dict(self) -> dict:
        return {
            "alpha": self.alpha,
            "beta": self.beta,
            "coeffs": [[str(c.numerator), str(c.denominator)] for c in self.coeffs],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: dict) -> "PuiseuxParam":
        coeffs = tuple(Fraction(int(n), int(d)) for n, d in data["coeffs"])
        return cls(data["alpha"], data["beta"], coeffs)
