"""Exact-rational sparse multivariate polynomials and truncated power series.

MPoly is a polynomial in X_1..X_arity over the rationals, stored as a sparse
map from exponent tuples to nonzero Fraction coefficients.  TruncSeries is a
power series in T truncated at a fixed degree, whose coefficients are either
MPoly values or plain Fractions; arithmetic silently drops degrees above the
truncation.
"""
from __future__ import annotations

from fractions import Fraction

from .errors import ArityMismatch, TruncationMismatch

ABOVE_TRUNCATION = None  # sentinel returned by TruncSeries.order for zero series


def _grlex_key(exps):
    # graded lexicographic with X_1 < X_2 < ...: higher variables dominate ties
    return (sum(exps), tuple(reversed(exps)))


class MPoly:
    """Sparse polynomial in X_1..X_arity with Fraction coefficients."""

    __slots__ = ("arity", "terms")

    def __init__(self, arity: int, terms=None):
        self.arity = arity
        self.terms = {}
        if terms:
            for exps, c in terms.items():
                c = Fraction(c)
                if c:
                    self.terms[tuple(exps)] = c

    @classmethod
    def const(cls, arity, value):
        p = cls(arity)
        value = Fraction(value)
        if value:
            p.terms[(0,) * arity] = value
        return p

    @classmethod
    def var(cls, arity, index):
        """X_index, with 1 <= index <= arity."""
        if not (1 <= index <= arity):
            raise ArityMismatch(f"variable index {index} outside 1..{arity}")
        exps = [0] * arity
        exps[index - 1] = 1
        return cls(arity, {tuple(exps): Fraction(1)})

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> Fraction:
        if not self.terms:
            return Fraction(0)
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return next(iter(self.terms.values()))

    def max_var(self) -> int:
        """Largest variable index that occurs; 0 for constants."""
        top = 0
        for exps in self.terms:
            for i in range(self.arity - 1, top - 1, -1):
                if exps[i]:
                    top = max(top, i + 1)
                    break
        return top

    def degree_in(self, index: int) -> int:
        return max((e[index - 1] for e in self.terms), default=0)

    def _check(self, other):
        if self.arity != other.arity:
            raise ArityMismatch(f"arity {self.arity} != {other.arity}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MPoly.const(self.arity, other)
        self._check(other)
        out = dict(self.terms)
        for exps, c in other.terms.items():
            s = out.get(exps, 0) + c
            if s:
                out[exps] = s
            else:
                out.pop(exps, None)
        return MPoly(self.arity, out)

    def __neg__(self):
        return MPoly(self.arity, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MPoly.const(self.arity, other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(exps, 0) + c1 * c2
                if s:
                    out[exps] = s
                else:
                    out.pop(exps, None)
        return MPoly(self.arity, out)

    __rmul__ = __mul__
    __radd__ = __add__

    def scale(self, c) -> "MPoly":
        c = Fraction(c)
        if not c:
            return MPoly(self.arity)
        return MPoly(self.arity, {e: v * c for e, v in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MPoly.const(self.arity, other)
        return isinstance(other, MPoly) and self.arity == other.arity \
            and self.terms == other.terms

    def __hash__(self):
        return hash((self.arity, frozenset(self.terms.items())))

    def substitute(self, assignments: dict) -> "MPoly":
        """Replace X_i -> Fraction for every i in assignments (partial map)."""
        out = {}
        for exps, c in self.terms.items():
            coeff = c
            new_exps = list(exps)
            for i, val in assignments.items():
                e = exps[i - 1]
                if e:
                    coeff *= Fraction(val) ** e
                    new_exps[i - 1] = 0
            if coeff:
                key = tuple(new_exps)
                s = out.get(key, 0) + coeff
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return MPoly(self.arity, out)

    def evaluate(self, assignments: dict) -> Fraction:
        """Full evaluation; unassigned variables default to 0."""
        total = Fraction(0)
        for exps, c in self.terms.items():
            v = c
            for i, e in enumerate(exps):
                if e:
                    base = Fraction(assignments.get(i + 1, 0))
                    if not base:
                        v = Fraction(0)
                        break
                    v *= base ** e
            total += v
        return total

    def substitute_var_poly(self, index: int, poly: "MPoly") -> "MPoly":
        """Replace X_index by a polynomial in lower-index variables."""
        powers = [MPoly.const(self.arity, 1)]
        for _ in range(self.degree_in(index)):
            powers.append(powers[-1] * poly)
        out = {}
        for exps, c in self.terms.items():
            e = exps[index - 1]
            rest = list(exps)
            rest[index - 1] = 0
            for p_exps, p_c in (powers[e] * MPoly(self.arity, {tuple(rest): c})).terms.items():
                s = out.get(p_exps, 0) + p_c
                if s:
                    out[p_exps] = s
                else:
                    out.pop(p_exps, None)
        return MPoly(self.arity, out)

    def split_affine(self, index: int) -> tuple["MPoly", "MPoly"]:
        """Write self = C * X_index + V; requires degree <= 1 in X_index."""
        if self.degree_in(index) > 1:
            raise ValueError(f"not affine in X_{index}")
        c_terms, v_terms = {}, {}
        for exps, c in self.terms.items():
            if exps[index - 1]:
                e = list(exps)
                e[index - 1] = 0
                c_terms[tuple(e)] = c
            else:
                v_terms[exps] = c
        return MPoly(self.arity, c_terms), MPoly(self.arity, v_terms)

    def exact_divide(self, divisor: "MPoly"):
        """Quotient self / divisor if the division is exact, else None."""
        self._check(divisor)
        if divisor.is_zero():
            return None
        if divisor.is_constant():
            return self.scale(1 / divisor.constant_value())
        lead = max(divisor.terms, key=_grlex_key)
        lead_c = divisor.terms[lead]
        rem = dict(self.terms)
        quo = {}
        while rem:
            exps = max(rem, key=_grlex_key)
            q_exps = tuple(a - b for a, b in zip(exps, lead))
            if any(e < 0 for e in q_exps):
                return None
            q_c = rem[exps] / lead_c
            quo[q_exps] = quo.get(q_exps, 0) + q_c
            for d_exps, d_c in divisor.terms.items():
                t = tuple(a + b for a, b in zip(q_exps, d_exps))
                s = rem.get(t, 0) - q_c * d_c
                if s:
                    rem[t] = s
                else:
                    rem.pop(t, None)
        return MPoly(self.arity, quo)

    def render(self, name: str = "X") -> str:
        """Canonical text form, graded lexicographic, leading term first."""
        if not self.terms:
            return "0"
        parts = []
        for exps in sorted(self.terms, key=_grlex_key, reverse=True):
            c = self.terms[exps]
            factors = [f"{name}{i + 1}" + (f"^{e}" if e > 1 else "")
                       for i, e in enumerate(exps) if e]
            mono = "*".join(factors)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"MPoly({self.render()})"


class TruncSeries:
    """Power series in T truncated at degree ``trunc`` (inclusive)."""

    __slots__ = ("trunc", "coeffs")

    def __init__(self, trunc: int, coeffs=None):
        self.trunc = trunc
        self.coeffs = {}
        if coeffs:
            for d, c in coeffs.items():
                if d <= trunc and not _is_zero(c):
                    self.coeffs[d] = c

    @classmethod
    def monomial(cls, trunc, degree, coeff=Fraction(1)):
        return cls(trunc, {degree: coeff})

    def _check(self, other):
        if self.trunc != other.trunc:
            raise TruncationMismatch(f"truncation {self.trunc} != {other.trunc}")

    def __add__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        for d, c in other.coeffs.items():
            s = out.get(d)
            s = c if s is None else s + c
            if _is_zero(s):
                out.pop(d, None)
            else:
                out[d] = s
        return TruncSeries(self.trunc, out)

    def __neg__(self):
        return TruncSeries(self.trunc, {d: -c for d, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        out = {}
        for d1, c1 in self.coeffs.items():
            for d2, c2 in other.coeffs.items():
                d = d1 + d2
                if d > self.trunc:
                    continue
                p = c1 * c2
                s = out.get(d)
                s = p if s is None else s + p
                out[d] = s
        return TruncSeries(self.trunc, out)

    def scale(self, c) -> "TruncSeries":
        if _is_zero(c):
            return TruncSeries(self.trunc)
        return TruncSeries(self.trunc, {d: v * c for d, v in self.coeffs.items()})

    def shift(self, k: int) -> "TruncSeries":
        """Multiply by T^k."""
        return TruncSeries(self.trunc, {d + k: c for d, c in self.coeffs.items()
                                        if d + k <= self.trunc})

    def coeff(self, degree: int):
        return self.coeffs.get(degree)

    def drop(self, degree: int) -> "TruncSeries":
        out = dict(self.coeffs)
        out.pop(degree, None)
        return TruncSeries(self.trunc, out)

    def order(self, assignments: dict | None = None):
        """Least degree with nonzero coefficient after substitution, or
        ABOVE_TRUNCATION (None) if everything vanishes."""
        for d in sorted(self.coeffs):
            c = self.coeffs[d]
            if assignments is not None and isinstance(c, MPoly):
                c = c.substitute(assignments)
            if not _is_zero(c):
                return d
        return ABOVE_TRUNCATION

    def lc(self, assignments: dict | None = None):
        """Coefficient at the order degree (after substitution)."""
        d = self.order(assignments)
        if d is ABOVE_TRUNCATION:
            return None
        c = self.coeffs[d]
        if assignments is not None and isinstance(c, MPoly):
            c = c.substitute(assignments)
        return c

    def substitute(self, assignments: dict) -> "TruncSeries":
        out = {}
        for d, c in self.coeffs.items():
            if isinstance(c, MPoly):
                c = c.substitute(assignments)
            if not _is_zero(c):
                out[d] = c
        return TruncSeries(self.trunc, out)

    def evaluate(self, assignments: dict) -> "TruncSeries":
        """Fully numeric series; unassigned variables default to 0."""
        out = {}
        for d, c in self.coeffs.items():
            v = c.evaluate(assignments) if isinstance(c, MPoly) else Fraction(c)
            if v:
                out[d] = v
        return TruncSeries(self.trunc, out)

    def __eq__(self, other):
        return isinstance(other, TruncSeries) and self.trunc == other.trunc \
            and self.coeffs == other.coeffs

    def __repr__(self):
        items = ", ".join(f"T^{d}: {c!r}" for d, c in sorted(self.coeffs.items()))
        return f"TruncSeries(<= {self.trunc}; {items})"


def _is_zero(c) -> bool:
    if isinstance(c, MPoly):
        return c.is_zero()
    return c == 0
