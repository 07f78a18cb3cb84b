"""Realization of an increasing semimodule as the value set v(R + zR).

The construction works with formal series whose coefficients are exact
polynomials in the curve coefficients X_1..X_b.  Sweeping the T-degrees in
blocks, every degree outside the current level set forces a vanishing
condition (isolating one variable), and every degree inside it is removed by
an order-matched combination with an earlier working element.  The resulting
triangular condition system is solved by forward substitution and the
produced curve is verified against the independent valuation engine.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (BadMode, DomainError, InternalInconsistency, NotIncreasing,
                     Unsolvable, VerificationFailed)
from .puiseux import PuiseuxParam, coefficient_count
from .semigroup import Semigroup
from .semimodule import GammaSemimodule, c_sequence, is_increasing
from .symbolic import MPoly, TruncSeries
from .valuation import value_set

GENERAL = "general"
KAEHLER = "kaehler"


@dataclass(frozen=True)
class Schedule:
    """Block data for one run: offsets, shifts and the final degree cap."""

    generators: tuple          # g_0 .. g_s (natural order)
    u: tuple                   # u_1 .. u_s
    sigma: tuple               # sigma_0 .. sigma_s
    h: tuple                   # h_i = g_i - sigma_i for i = 1 .. s
    c_values: tuple            # c_1 .. c_s
    final_cap: int             # c_s + alpha*beta

    @property
    def blocks(self):
        """Index intervals [sigma_(i-1), sigma_i] for i = 2 .. s."""
        return [(self.sigma[i - 1], self.sigma[i])
                for i in range(2, len(self.generators))]


@dataclass
class Equality:
    """The imposed relation coeff * X_var + rest = 0 at one T-degree."""

    var: int
    coeff: MPoly
    rest: MPoly
    degree: int
    block: int

    def rhs(self):
        """-rest/coeff as a polynomial, or None if the division is inexact."""
        q = (-self.rest).exact_divide(self.coeff)
        return q


@dataclass
class NonVanishing:
    """A_k != 0, recorded for the block-closing variable X_var."""

    var: int
    poly: MPoly
    block: int

    def excluded(self):
        """The single excluded value of X_var, when it is polynomial."""
        c, v = self.poly.split_affine(self.var)
        if c.is_zero():
            return None
        return (-v).exact_divide(c)


@dataclass
class ConditionSystem:
    arity: int
    support: tuple
    equalities: list = field(default_factory=list)
    nonvanishing: list = field(default_factory=list)
    trace: list = field(default_factory=list)

    @property
    def free(self) -> list[int]:
        """Support indices with no constraint at all."""
        constrained = {e.var for e in self.equalities} | \
            {n.var for n in self.nonvanishing}
        return [i for i in self.support if i not in constrained]

    def to_dict(self) -> dict:
        eq = []
        for e in self.equalities:
            rhs = e.rhs()
            if rhs is not None:
                eq.append({"var": e.var, "rhs": rhs.render()})
            else:
                eq.append({"var": e.var, "coeff": e.coeff.render(),
                           "rest": e.rest.render()})
        neq = []
        for n in self.nonvanishing:
            excl = n.excluded()
            entry = {"var": n.var, "nonzero": n.poly.render()}
            if excl is not None:
                entry["excluded"] = excl.render()
            neq.append(entry)
        return {"eq": eq, "neq": neq, "free": list(self.free)}


@dataclass
class RealizationResult:
    param: PuiseuxParam
    z: TruncSeries
    conditions: ConditionSystem
    target: tuple              # the realized minimal generators
    mode: str
    trace: list
    verified: bool = False

    def to_dict(self) -> dict:
        return {
            "alpha": self.param.alpha,
            "beta": self.param.beta,
            "coeffs": [[str(c.numerator), str(c.denominator)]
                       for c in self.param.coeffs],
            "z": [[d, str(c.numerator), str(c.denominator)]
                  for d, c in sorted(self.z.coeffs.items())],
            "conditions": self.conditions.to_dict(),
            "generators": list(self.target),
            "mode": self.mode,
        }


def schedule(semigroup: Semigroup, sm: GammaSemimodule) -> Schedule:
    """Offsets sigma, shifts h and the final cap for an increasing semimodule."""
    inc, useq = is_increasing(sm)
    if not inc:
        raise NotIncreasing(f"{sm.generators} is not increasing")
    gens = sm.generators
    if len(gens) < 2:
        raise DomainError("scheduling needs at least one nonzero generator")
    u = list(useq.values)
    sigma = [0, 0]
    for k in range(2, len(gens)):
        sigma.append(sigma[-1] + gens[k] - u[k - 2])
    h = tuple(gens[i] - sigma[i] for i in range(1, len(gens)))
    c_vals = c_sequence(sm).values
    final_cap = c_vals[-1] + semigroup.alpha * semigroup.beta
    assert final_cap >= u[-1], "final block must start at or below its cap"
    return Schedule(tuple(gens), tuple(u), tuple(sigma), h, c_vals, final_cap)


def build_generators(semigroup: Semigroup, sm: GammaSemimodule, mode: str,
                     support=None, trunc: int | None = None):
    """The formal series Y and z over the polynomial coefficient ring.

    Y = T^beta (1 + sum X_i T^i) over the support.  In general mode
    z = T^(g_1) (1 + sum X_i T^i); in kaehler mode z is dY/dT divided by
    dX/dT, which requires g_1 = beta - alpha.
    """
    b = coefficient_count(semigroup)
    support = tuple(sorted(support)) if support else tuple(range(1, b + 1))
    if any(not 1 <= i <= b for i in support):
        raise DomainError(f"support indices must lie in 1..{b}")
    gens = sm.generators
    if len(gens) < 2:
        raise DomainError("build_generators needs a nonzero generator")
    g1 = gens[1]
    alpha, beta = semigroup.alpha, semigroup.beta
    if mode == KAEHLER and g1 != beta - alpha:
        raise BadMode(f"kaehler mode needs g_1 = {beta - alpha}, got {g1}")
    if mode not in (GENERAL, KAEHLER):
        raise BadMode(f"unknown mode {mode!r}")
    if trunc is None:
        trunc = 2 * alpha * beta + b
    y_coeffs = {beta: MPoly.const(b, 1)}
    for i in support:
        y_coeffs[beta + i] = MPoly.var(b, i)
    y = TruncSeries(trunc, y_coeffs)
    if mode == KAEHLER:
        c0 = Fraction(beta, alpha)
        z_coeffs = {g1: MPoly.const(b, c0)}
        for i in support:
            z_coeffs[g1 + i] = MPoly.var(b, i).scale(Fraction(i + beta, alpha))
    else:
        c0 = Fraction(1)
        z_coeffs = {g1: MPoly.const(b, 1)}
        for i in support:
            z_coeffs[g1 + i] = MPoly.var(b, i)
    z = TruncSeries(trunc, z_coeffs)
    return y, z, c0, support


class _BlockRun:
    """One sweep of the block recursion, collecting the condition system."""

    def __init__(self, semigroup, sm, mode, support, full_system):
        self.s = semigroup
        self.sm = sm
        self.mode = mode
        self.full_system = full_system
        self.sched = schedule(semigroup, sm)
        self.b = coefficient_count(semigroup)
        # coefficients above the final cap can never influence a recorded
        # condition, so the working truncation stops there
        self.y, self.z, self.c0, self.support = build_generators(
            semigroup, sm, mode, support, trunc=self.sched.final_cap)
        self.support_set = set(self.support)
        self.levels = sm.level_masks()
        self.cs = ConditionSystem(self.b, self.support)
        self.subs: dict[int, MPoly] = {}
        self._y_pows = {0: TruncSeries.monomial(self.sched.final_cap, 0,
                                                MPoly.const(self.b, 1))}
        one = TruncSeries.monomial(self.sched.final_cap, 0, MPoly.const(self.b, 1))
        self.omegas = [one, self.z]
        self.lcs = [MPoly.const(self.b, 1), MPoly.const(self.b, self.c0)]

    def level_contains(self, e: int, level: int) -> bool:
        if e > self.s.window:
            return True
        return bool((self.levels[level] >> e) & 1)

    def least_level(self, e: int) -> int:
        for m in range(len(self.levels)):
            if self.level_contains(e, m):
                return m
        raise AssertionError(f"degree {e} not in any level")

    def p_of(self, eps: int) -> TruncSeries:
        """P(eps) = T^(e1*alpha) * Y^e2 for the canonical decomposition."""
        e1, e2 = self.s.decompose(eps)
        if e2 not in self._y_pows:
            top = max(self._y_pows)
            acc = self._y_pows[top]
            for k in range(top + 1, e2 + 1):
                acc = acc * self.y
                self._y_pows[k] = acc
        return self._y_pows[e2].shift(e1 * self.s.alpha)

    def apply_subs(self, series: TruncSeries) -> TruncSeries:
        out = series
        for var in sorted(self.subs, reverse=True):
            changed = {}
            hit = False
            for d, c in out.coeffs.items():
                if isinstance(c, MPoly) and c.degree_in(var):
                    changed[d] = c.substitute_var_poly(var, self.subs[var])
                    hit = True
                else:
                    changed[d] = c
            if hit:
                out = TruncSeries(out.trunc, changed)
        return out

    def run(self) -> ConditionSystem:
        sched = self.sched
        gens = sched.generators
        s_count = len(gens) - 1
        u_series = self.z
        for k in range(2, s_count + 1):
            start = self.p_of(sched.u[k - 2] - gens[k - 1]) * self.omegas[k - 1]
            u_series = self.apply_subs(start)
            for j in range(sched.sigma[k - 1], sched.sigma[k]):
                e = sched.h[k - 1] + j  # h_k + j
                u_series = self.dispose(u_series, e, k - 1, k, j,
                                        at_start=(j == sched.sigma[k - 1]))
            a_k = u_series.coeff(gens[k])
            if a_k is None or a_k.is_zero():
                raise InternalInconsistency(
                    f"leading coefficient vanishes identically at block {k}",
                    trace=self.cs.trace)
            self.cs.nonvanishing.append(NonVanishing(sched.sigma[k], a_k, k))
            self.cs.trace.append({"block": k, "degree": gens[k],
                                  "action": "nonvanishing",
                                  "var": sched.sigma[k]})
            self.omegas.append(u_series)
            self.lcs.append(a_k)
        # final block: continue until the working order reaches the cap
        u_last = sched.u[-1]
        sigma_s = sched.sigma[-1]
        start = self.p_of(u_last - gens[-1]) * self.omegas[s_count]
        u_series = self.apply_subs(start)
        for e in range(u_last, sched.final_cap):
            u_series = self.dispose(u_series, e, s_count, s_count + 1,
                                    e - u_last + sigma_s, at_start=(e == u_last))
        if self.full_system:
            u_series = self.dispose(u_series, sched.final_cap, s_count,
                                    s_count + 1,
                                    sched.final_cap - u_last + sigma_s,
                                    at_start=False, force_condition=True)
        return self.cs

    def dispose(self, series, e, level, block, var_index,
                at_start=False, force_condition=False):
        q = series.coeff(e)
        if q is None or q.is_zero():
            return series
        inside = self.level_contains(e, level)
        condition = force_condition or not inside or \
            (self.full_system and not at_start)
        if not condition:
            return self.reduce(series, e, q, block)
        return self.impose(series, e, q, var_index, block)

    def reduce(self, series, e, q, block):
        m = self.least_level(e)
        if m == 0:
            out = series - self.p_of(e).scale(q)
        else:
            reducer = self.apply_subs(self.p_of(e - self.sched.generators[m])
                                      * self.omegas[m])
            out = series.scale(self.lcs[m]) - reducer.scale(q)
        assert out.coeff(e) is None, "reduction must kill the working degree"
        self.cs.trace.append({"block": block, "degree": e, "action": "reduce",
                              "reducer": m})
        return out

    def impose(self, series, e, q, var_index, block):
        if var_index not in self.support_set:
            raise InternalInconsistency(
                f"degree {e} needs variable X_{var_index}, outside the support",
                trace=self.cs.trace)
        assert q.max_var() <= var_index, \
            f"coefficient at degree {e} involves variables above X_{var_index}"
        coeff, rest = q.split_affine(var_index)
        if coeff.is_zero():
            raise InternalInconsistency(
                f"imposed relation at degree {e} cannot isolate X_{var_index}",
                trace=self.cs.trace)
        equality = Equality(var_index, coeff, rest, e, block)
        self.cs.equalities.append(equality)
        self.cs.trace.append({"block": block, "degree": e, "action": "condition",
                              "var": var_index})
        out = series.drop(e)
        rhs = equality.rhs()
        if rhs is not None:
            self.subs[var_index] = rhs
            out = self.apply_subs(out)
        return out


def run_blocks(semigroup: Semigroup, sm: GammaSemimodule, mode: str = GENERAL,
               support=None, full_system: bool = False) -> ConditionSystem:
    """Sweep the blocks and return the condition system with its trace."""
    return _BlockRun(semigroup, sm, mode, support, full_system).run()


def solve_forward(cs: ConditionSystem, free_policy=tuple(range(1, 17))) -> dict:
    """Assign values in increasing variable order.

    Block-closing variables get the current policy value, forced variables
    their exact rational value, everything else zero.  If a denominator or a
    nonvanishing polynomial degenerates, the policy value is bumped and the
    pass restarts; running out of values raises Unsolvable.
    """
    eq_map = {e.var: e for e in cs.equalities}
    nv_map = {n.var: n for n in cs.nonvanishing}
    failures = []
    for v in free_policy:
        assignment: dict[int, Fraction] = {}
        ok = True
        for i in sorted(cs.support):
            if i in eq_map:
                eq = eq_map[i]
                den = eq.coeff.evaluate(assignment)
                if den == 0:
                    failures.append((v, i, "denominator vanished"))
                    ok = False
                    break
                assignment[i] = -eq.rest.evaluate(assignment) / den
            elif i in nv_map:
                assignment[i] = Fraction(v)
                if nv_map[i].poly.evaluate(assignment) == 0:
                    failures.append((v, i, "nonvanishing value hit"))
                    ok = False
                    break
            else:
                assignment[i] = Fraction(0)
        if ok:
            return assignment
    raise Unsolvable(f"no policy value worked: {failures}", trace=failures)


def realize(semigroup: Semigroup, sm: GammaSemimodule, mode: str = GENERAL,
            support=None, full_system: bool = False,
            free_policy=tuple(range(1, 17))) -> RealizationResult:
    """Construct a curve and z with value set exactly the given semimodule.

    The result is only returned after the valuation engine confirms the
    round trip; a mismatch raises VerificationFailed carrying both sides.
    """
    inc, _ = is_increasing(sm)
    if not inc:
        raise NotIncreasing(f"{sm.generators} is not increasing")
    alpha, beta = semigroup.alpha, semigroup.beta
    b = coefficient_count(semigroup)
    out_trunc = 2 * alpha * beta + b
    if len(sm.generators) == 1:
        # the ring itself: the monomial curve with z = 1 realizes it
        param = PuiseuxParam(alpha, beta, (Fraction(0),) * b)
        z = TruncSeries.monomial(out_trunc, 0)
        cs = ConditionSystem(b, tuple(range(1, b + 1)))
        result = RealizationResult(param, z, cs, tuple(sm.generators), mode, [])
        return _verified(semigroup, sm, result)
    cs = run_blocks(semigroup, sm, mode, support, full_system)
    assignment = solve_forward(cs, free_policy)
    coeffs = tuple(assignment.get(i, Fraction(0)) for i in range(1, b + 1))
    param = PuiseuxParam(alpha, beta, coeffs)
    g1 = sm.generators[1]
    if mode == KAEHLER:
        z = param.derivative_quotient(out_trunc)
    else:
        z_coeffs = {g1: Fraction(1)}
        for i, a in enumerate(coeffs, start=1):
            if a:
                z_coeffs[g1 + i] = a
        z = TruncSeries(out_trunc, z_coeffs)
    result = RealizationResult(param, z, cs, tuple(sm.generators), mode, cs.trace)
    return _verified(semigroup, sm, result)


def _verified(semigroup, sm, result: RealizationResult) -> RealizationResult:
    vs = verify_round_trip(result)
    if list(vs.semimodule.generators) != list(sm.generators):
        raise VerificationFailed(
            f"value set {vs.generators} != target {list(sm.generators)}",
            expected=list(sm.generators), actual=vs.generators)
    result.verified = True
    return result


def verify_round_trip(result: RealizationResult):
    """Value set of R + zR for the realized curve, via the valuation engine."""
    window = result.param.semigroup().conductor + \
        result.param.alpha * result.param.beta
    one = TruncSeries.monomial(window, 0)
    z = TruncSeries(window, {d: c for d, c in result.z.coeffs.items()
                             if d <= window})
    return value_set(result.param, [one, z])


def realization_from_dict(data: dict) -> RealizationResult:
    """Rebuild enough of a result from its JSON form to re-verify it."""
    param = PuiseuxParam.from_dict(data)
    b = coefficient_count(param.semigroup())
    trunc = 2 * param.alpha * param.beta + b
    z = TruncSeries(trunc, {int(d): Fraction(int(n), int(dd))
                            for d, n, dd in data["z"]})
    cs = ConditionSystem(b, tuple(range(1, b + 1)))
    return RealizationResult(param, z, cs, tuple(data["generators"]),
                             data.get("mode", GENERAL), [])
