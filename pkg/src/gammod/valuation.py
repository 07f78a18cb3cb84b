"""Value sets of modules over the local ring of a plane branch.

Given a parameterization x = t^alpha, y = t^beta + ..., the order set of an
R-module spanned by given series generators is computed two independent
ways: a flat order-pivoted echelon over all monomial multiples, and an
incremental reduction that mirrors the relation structure (collisions of
equal-order multiples, cancellation, discovery of new generators).

All arithmetic is exact; rows are scaled to integers, which leaves every
order unchanged.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ZeroGenerator
from .puiseux import PuiseuxParam
from .semigroup import Semigroup
from .semimodule import GammaSemimodule, conductor_semimodule
from .symbolic import TruncSeries

# strip integer content from a row once coefficients get this large
_CONTENT_BITS = 512


@dataclass
class ValueSet:
    semimodule: GammaSemimodule
    pivots: dict = field(default_factory=dict, repr=False)
    non_normalized_offset: int = 0
    trace: list = field(default_factory=list, repr=False)

    @property
    def generators(self) -> list[int]:
        return list(self.semimodule.generators)

    @property
    def conductor(self) -> int:
        return conductor_semimodule(self.semimodule)

    def to_dict(self) -> dict:
        out = {"generators": self.generators, "conductor": self.conductor}
        if self.non_normalized_offset:
            out["non_normalized_generators"] = [
                g + self.non_normalized_offset for g in self.generators]
        return out


class CurveRing:
    """Monomial basis x^e1 * y^e2 of the curve ring, truncated at the window.

    The window is c + alpha*beta: pivots below the conductor c determine the
    value set, and the extra alpha*beta covers monomial-multiple collisions.
    """

    def __init__(self, param: PuiseuxParam):
        self.param = param
        self.semigroup = param.semigroup()
        self.window = self.semigroup.conductor + param.alpha * param.beta
        self._y_int, self._y_den = _int_row(param.y_series(self.window))
        self._y_pows = {0: ({0: 1}, 0)}  # e2 -> (row, order)

    def basis(self):
        """All (e1, e2, value) with e1*alpha + e2*beta <= window, sorted."""
        out = []
        a, b = self.param.alpha, self.param.beta
        for e2 in range(self.window // b + 1):
            for e1 in range((self.window - e2 * b) // a + 1):
                out.append((e1, e2, e1 * a + e2 * b))
        out.sort(key=lambda t: (t[2], t[1]))
        return out

    def monomial_row(self, e1: int, e2: int) -> dict:
        """Integer-scaled series of x^e1 * y^e2 as {degree: int}."""
        if e2 not in self._y_pows:
            top = max(self._y_pows)
            row, order = self._y_pows[top]
            for k in range(top + 1, e2 + 1):
                row = _mul_rows(row, self._y_int, self.window)
                order += self.param.beta
                _strip_content(row)
                self._y_pows[k] = (row, order)
        row, _ = self._y_pows[e2]
        shift = e1 * self.param.alpha
        return {d + shift: c for d, c in row.items() if d + shift <= self.window}


def value_set(param: PuiseuxParam, gens) -> ValueSet:
    """Order set of the module spanned by the generators over the curve ring.

    Builds every product (monomial basis) x (generator) with order <= window
    and runs order-pivoted exact elimination; the result is the set of pivot
    orders together with everything at or above the semigroup conductor.
    Independent of generator scaling and of elimination order.
    """
    ring = CurveRing(param)
    s = ring.semigroup
    n = ring.window
    gen_rows = []
    for g in gens:
        row, _ = _int_row(_as_series(g, n))
        if not row:
            raise ZeroGenerator(f"a generator vanishes identically up to degree {n}")
        gen_rows.append((row, min(row)))
    # the module must contain a unit so that the result is normalized
    assert any(order == 0 for _, order in gen_rows), \
        "value_set expects a generator of order 0"
    pivots: dict[int, dict] = {}
    for row, order in gen_rows:
        _eliminate(row, pivots, n)
    for e1, e2, val in ring.basis():
        if val == 0:
            continue
        mono = ring.monomial_row(e1, e2)
        for row, order in gen_rows:
            if val + order <= n:
                _eliminate(_mul_rows(mono, row, n), pivots, n)
    sm = _pivots_to_semimodule(s, set(pivots))
    return ValueSet(sm, pivots=pivots)


def kaehler_semimodule(param: PuiseuxParam) -> ValueSet:
    """Normalized value set of R + R * dy/dx.

    The non-normalized differential value set sits at offset alpha - 1,
    reported alongside.
    """
    n = param.semigroup().conductor + param.alpha * param.beta
    one = TruncSeries.monomial(n, 0)
    z = param.derivative_quotient(n)
    vs = value_set(param, [one, z])
    vs.non_normalized_offset = param.alpha - 1
    return vs


def delorme_reduction(param: PuiseuxParam, z: TruncSeries) -> ValueSet:
    """Alternative value-set computation following the relation structure.

    Maintains a working list of module generators.  Collision values (where
    two distinct monomial multiples share an order) are visited in increasing
    order; leading terms are cancelled and the remainder is reduced against
    canonical representatives until its order either leaves the current
    semimodule (a new generator) or passes the cutoff c(current) + alpha*beta
    (discarded).  Agrees with value_set on every input.
    """
    s = param.semigroup()
    ring = CurveRing(param)
    n = ring.window
    ab = param.alpha * param.beta
    z_row, _ = _int_row(_as_series(z, n))
    if not z_row:
        raise ZeroGenerator(f"z vanishes identically up to degree {n}")
    workers = [({0: 1}, 0), (z_row, min(z_row))]
    known = s.mask | s.shifted_mask(min(z_row)) if min(z_row) <= s.window else s.mask
    trace = []

    def cutoff():
        c = 0
        for m in range(s.window, -1, -1):
            if not (known >> m) & 1:
                c = m + 1
                break
        return c + ab

    def representative(order):
        for j, (w_row, w_ord) in enumerate(workers):
            rest = order - w_ord
            if rest >= 0 and s.contains(rest):
                e1, e2 = s.decompose(rest)
                mono = ring.monomial_row(e1, e2)
                return _mul_rows(mono, w_row, n)
        raise AssertionError(f"no representative at order {order}")

    def reduce_chain(row, origin):
        nonlocal known
        while row:
            o = min(row)
            if o > cutoff():
                trace.append({"collision": origin, "action": "discarded"})
                return
            if not (known >> o) & 1:
                _strip_content(row)
                workers.append((row, o))
                known |= s.shifted_mask(o)
                trace.append({"collision": origin, "action": "new_generator",
                              "order": o})
                return
            rep = representative(o)
            row = _cancel(row, rep, o, n)
        trace.append({"collision": origin, "action": "discarded"})

    u = 1
    while u <= cutoff():
        hits = []
        for j, (w_row, w_ord) in enumerate(workers):
            rest = u - w_ord
            if rest < 0:
                continue
            e2 = 0
            while e2 * param.beta <= rest:
                if (rest - e2 * param.beta) % param.alpha == 0:
                    hits.append((j, (rest - e2 * param.beta) // param.alpha, e2))
                e2 += 1
        if len(hits) >= 2:
            anchor = _mul_rows(ring.monomial_row(hits[0][1], hits[0][2]),
                               workers[hits[0][0]][0], n)
            for j, e1, e2 in hits[1:]:
                other = _mul_rows(ring.monomial_row(e1, e2), workers[j][0], n)
                combo = _cancel(other, anchor, u, n)
                reduce_chain(combo, (u, hits[0][0], j))
        u += 1

    sm = _mask_min_gens(s, known)
    return ValueSet(sm, pivots={o: r for r, o in workers}, trace=trace)


def _as_series(g, trunc: int) -> TruncSeries:
    if isinstance(g, TruncSeries):
        return TruncSeries(trunc, {d: Fraction(c) for d, c in g.coeffs.items()
                                   if d <= trunc})
    raise TypeError(f"expected TruncSeries, got {type(g).__name__}")


def _int_row(series: TruncSeries) -> tuple[dict, int]:
    """Clear denominators: {degree: int} plus the multiplier used."""
    if not series.coeffs:
        return {}, 1
    den = 1
    for c in series.coeffs.values():
        den = den * c.denominator // math.gcd(den, c.denominator)
    return {d: int(c * den) for d, c in series.coeffs.items() if c}, den


def _mul_rows(r1: dict, r2: dict, trunc: int) -> dict:
    out = {}
    for d1, c1 in r1.items():
        for d2, c2 in r2.items():
            d = d1 + d2
            if d <= trunc:
                out[d] = out.get(d, 0) + c1 * c2
    return {d: c for d, c in out.items() if c}


def _cancel(row: dict, other: dict, order: int, trunc: int) -> dict:
    """Cross-multiplied difference killing the coefficient at ``order``."""
    a, b = other[order], row[order]
    out = {}
    for d, c in row.items():
        out[d] = a * c
    for d, c in other.items():
        s = out.get(d, 0) - b * c
        if s:
            out[d] = s
        else:
            out.pop(d, None)
    out = {d: c for d, c in out.items() if c}
    _strip_content(out)
    return out


def _strip_content(row: dict) -> None:
    if not row:
        return
    if max(abs(c) for c in row.values()).bit_length() < _CONTENT_BITS:
        return
    g = 0
    for c in row.values():
        g = math.gcd(g, c)
        if g == 1:
            return
    for d in row:
        row[d] //= g


def _eliminate(row: dict, pivots: dict, trunc: int) -> None:
    while row:
        o = min(row)
        if o > trunc:
            return
        p = pivots.get(o)
        if p is None:
            _strip_content(row)
            pivots[o] = row
            return
        row = _cancel(row, p, o, trunc)


def _pivots_to_semimodule(s: Semigroup, orders: set) -> GammaSemimodule:
    """Minimal generators of (orders + semigroup conductor tail)."""
    mask = 0
    for o in orders:
        if o <= s.window:
            mask |= 1 << o
    for m in range(s.conductor, s.window + 1):
        mask |= 1 << m
    return _mask_min_gens(s, mask)


def _mask_min_gens(s: Semigroup, mask: int) -> GammaSemimodule:
    gens = []
    for m in range(s.window + 1):
        if (mask >> m) & 1 \
                and not (m >= s.alpha and (mask >> (m - s.alpha)) & 1) \
                and not (m >= s.beta and (mask >> (m - s.beta)) & 1):
            gens.append(m)
    return GammaSemimodule(s, gens)
