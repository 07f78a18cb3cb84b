"""Semimodules over a two-generator numerical semigroup.

A semimodule here is a subset D of the naturals with D + S contained in D,
always stored normalized (0 in D) through its unique minimal generator set,
which is lean: all pairwise differences of generators are gaps.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DifferenceInSemigroup, NotAGap, NotIncreasing
from .semigroup import Semigroup, min_bit


class GammaSemimodule:
    """A normalized semimodule given by its minimal generators.

    ``generators`` is sorted by the natural order with generators[0] == 0.
    ``generators_gap`` holds the same values sorted by the gap order: the
    a-coordinates strictly increase and the b-coordinates strictly decrease
    along it (0 first by convention, with coordinates (0, 0)).
    """

    __slots__ = ("semigroup", "generators", "generators_gap", "coords", "mask")

    def __init__(self, semigroup: Semigroup, generators):
        gens = sorted(set(generators))
        if not gens or gens[0] != 0:
            raise ValueError("a normalized semimodule must be generated from 0")
        coords = {0: (0, 0)}
        for g in gens[1:]:
            coords[g] = semigroup.gap_coords(g)  # raises NotAGap if redundant
        for i, x in enumerate(gens):
            for y in gens[i + 1:]:
                if semigroup.contains(y - x):
                    raise ValueError(f"generator set is not lean: {y}-{x} is a member")
        self.semigroup = semigroup
        self.generators = gens
        self.generators_gap = [0] + sorted(gens[1:], key=lambda g: coords[g][0])
        self.coords = coords
        mask = 0
        for g in gens:
            mask |= semigroup.shifted_mask(g)
        self.mask = mask

    def __repr__(self):
        return f"GammaSemimodule({self.semigroup!r}, {self.generators})"

    def __eq__(self, other):
        return isinstance(other, GammaSemimodule) and \
            self.semigroup == other.semigroup and self.generators == other.generators

    def __hash__(self):
        return hash((self.semigroup, tuple(self.generators)))

    def contains(self, n: int) -> bool:
        if n < 0:
            return False
        if n > self.semigroup.window:
            return True
        return bool((self.mask >> n) & 1)

    def level_masks(self) -> list[int]:
        """Masks of E_i = union of (S + g_j) for j <= i, natural order."""
        out = []
        acc = 0
        for g in self.generators:
            acc |= self.semigroup.shifted_mask(g)
            out.append(acc)
        return out


@dataclass(frozen=True)
class LatticePath:
    """ES-turns of the staircase from (0, alpha) to (beta, 0)."""

    alpha: int
    beta: int
    turns: tuple  # ((a, b), ...) with a strictly increasing, b strictly decreasing

    def vertices(self) -> list[tuple[int, int]]:
        """Full vertex list of the path, endpoints included."""
        pts = [(0, self.alpha)]
        x = 0
        for a, b in self.turns:
            pts.append((x, b))
            pts.append((a, b))
            x = a
        pts.append((x, 0))
        pts.append((self.beta, 0))
        # collapse repeated corners (happens when consecutive segments touch)
        out = [pts[0]]
        for p in pts[1:]:
            if p != out[-1]:
                out.append(p)
        return out


@dataclass(frozen=True)
class SyzygyData:
    generators: tuple  # minimal generators of Syz(D), natural order
    max_gen: int       # M, the largest one


@dataclass(frozen=True)
class USequence:
    values: tuple      # u_1..u_s in the natural-order indexing of generators
    increasing: bool


@dataclass(frozen=True)
class CSequence:
    values: tuple      # c_1..c_s, all with -c_i a member


def is_lean(semigroup: Semigroup, gens) -> bool:
    """True iff all pairwise absolute differences avoid the semigroup."""
    vals = sorted(set(gens))
    for i, x in enumerate(vals):
        for y in vals[i + 1:]:
            if semigroup.contains(y - x):
                return False
    return True


def normalize_semimodule(semigroup: Semigroup, gens) -> GammaSemimodule:
    """Shift to 0, discard redundant generators, return the minimal system."""
    vals = sorted(set(gens))
    if not vals:
        raise ValueError("generator set must be nonempty")
    base = vals[0]
    shifted = [v - base for v in vals]
    # nonzero members of the semigroup are redundant against 0
    cand = [0] + [v for v in shifted[1:] if not semigroup.contains(v)]
    minimal = [g for g in cand
               if not any(h != g and semigroup.contains(g - h) for h in cand)]
    return GammaSemimodule(semigroup, minimal)


def lattice_path(sm: GammaSemimodule) -> LatticePath:
    s = sm.semigroup
    turns = tuple(sorted((s.gap_coords(g) for g in sm.generators[1:])))
    return LatticePath(s.alpha, s.beta, turns)


def syzygy(sm: GammaSemimodule) -> SyzygyData:
    """Minimal generators of Syz(D) = union over i != j of (S+g_i) & (S+g_j).

    Computed from the membership tables; the closed form in gap-order
    coordinates (with the wraparound term alpha*beta - a_s*alpha) is
    asserted to produce the same set.
    """
    s = sm.semigroup
    gens = sm.generators
    ab = s.alpha * s.beta
    if len(gens) == 1:
        # empty union; the consistent convention is Syz(S) = S + alpha*beta,
        # which also makes the conductor formula return (alpha-1)(beta-1).
        data = SyzygyData((ab,), ab)
    else:
        shifted = [s.shifted_mask(g) for g in gens]
        syz_mask = 0
        for i in range(len(gens)):
            for j in range(i + 1, len(gens)):
                syz_mask |= shifted[i] & shifted[j]
        mins = []
        for n in range(ab + 1):
            if (syz_mask >> n) & 1 \
                    and not (n >= s.alpha and (syz_mask >> (n - s.alpha)) & 1) \
                    and not (n >= s.beta and (syz_mask >> (n - s.beta)) & 1):
                mins.append(n)
        data = SyzygyData(tuple(mins), max(mins))
    closed = _syzygy_closed_form(sm)
    assert set(closed) == set(data.generators), \
        f"closed-form syzygy {sorted(closed)} != direct {list(data.generators)}"
    return data


def _syzygy_closed_form(sm: GammaSemimodule) -> set:
    """h_i = alpha*beta - a_(i-1)*alpha - b_i*beta in gap order, a_0 = 0,
    plus the wraparound value alpha*beta - a_s*alpha."""
    s = sm.semigroup
    ab = s.alpha * s.beta
    order = sm.generators_gap
    out = set()
    prev_a = 0
    for g in order[1:]:
        a, b = sm.coords[g]
        out.add(ab - prev_a * s.alpha - b * s.beta)
        prev_a = a
    out.add(ab - prev_a * s.alpha)
    return out


def conductor_semimodule(sm: GammaSemimodule) -> int:
    """c(D) = M - alpha - beta + 1, checked against a direct table scan."""
    s = sm.semigroup
    m = syzygy(sm).max_gen
    by_formula = m - s.alpha - s.beta + 1
    scan = 0
    for n in range(s.window, -1, -1):
        if not (sm.mask >> n) & 1:
            scan = n + 1
            break
    assert by_formula == scan, f"conductor formula {by_formula} != scan {scan}"
    return by_formula


def _u_values(semigroup: Semigroup, ordered_gens) -> list:
    """u_i = min of (S + g_i) & E_(i-1) for the given generator ordering."""
    out = []
    acc = semigroup.shifted_mask(ordered_gens[0])
    for g in ordered_gens[1:]:
        hit = semigroup.shifted_mask(g) & acc
        u = min_bit(hit)
        assert u >= 0, "collision must occur inside the table window"
        out.append(u)
        acc |= semigroup.shifted_mask(g)
    return out


def u_sequence(sm: GammaSemimodule) -> USequence:
    """The u-sequence in the natural-order indexing, with the increasing flag.

    The gap-order closed form min{alpha*beta - a_(i-1)*alpha - b_i*beta, m_i}
    is asserted to agree with the direct set minima under gap-order indexing.
    """
    s = sm.semigroup
    values = _u_values(s, sm.generators)
    direct_gap_order = _u_values(s, sm.generators_gap) if len(sm.generators) > 1 else []
    closed = _u_closed_form_gap_order(sm)
    assert direct_gap_order == closed, \
        f"gap-order u {direct_gap_order} != closed form {closed}"
    gens = sm.generators
    increasing = all(gens[i + 1] > values[i - 1] for i in range(1, len(gens) - 1))
    return USequence(tuple(values), increasing)


def _u_closed_form_gap_order(sm: GammaSemimodule) -> list:
    s = sm.semigroup
    ab = s.alpha * s.beta
    out = []
    prev_a = 0
    for g in sm.generators_gap[1:]:
        a, b = sm.coords[g]
        m_i = min(s.alpha * (s.beta - a), s.beta * (s.alpha - b))
        out.append(min(ab - prev_a * s.alpha - b * s.beta, m_i))
        prev_a = a
    return out


def is_increasing(sm: GammaSemimodule) -> tuple[bool, USequence]:
    """Whether g_(i+1) > u_i holds for all i (g_(s+1) infinite, u_0 = 0).

    Single- and two-generator semimodules are always increasing; the
    one-generator case is vacuous by convention.
    """
    useq = u_sequence(sm)
    return useq.increasing, useq


def delorme_split(semigroup: Semigroup, p: int, q: int):
    """The split (S+p) & (S+q) = (S+u) | (S+v) for |p - q| not a member.

    Returns (u, v, ubar, vbar) with v = p + q + alpha*beta - u and the bar
    values shifted by c - alpha*beta.
    """
    if semigroup.contains(abs(p - q)):
        raise DifferenceInSemigroup(f"|{p} - {q}| is a member")
    lo = min(p, q)
    u = None
    for n in range(lo, lo + 2 * semigroup.conductor + 2):
        if semigroup.contains(n - p) and semigroup.contains(n - q):
            u = n
            break
    assert u is not None
    ab = semigroup.alpha * semigroup.beta
    v = p + q + ab - u
    shift = semigroup.conductor - ab
    return u, v, u + shift, v + shift


def delorme_identities_hold(semigroup: Semigroup, p: int, q: int) -> bool:
    """Pointwise check of the four split identities on the verification
    window [min(p,q), min(p,q) + 2*alpha*beta + c]."""
    u, v, ubar, vbar = delorme_split(semigroup, p, q)
    s = semigroup
    ab = s.alpha * s.beta
    lo = min(p, q)
    for n in range(lo, lo + 2 * ab + s.conductor + 1):
        in_p, in_q = s.contains(n - p), s.contains(n - q)
        inter, union = in_p and in_q, in_p or in_q
        if inter != (s.contains(n - u) or s.contains(n - v)):
            return False
        if union != (s.contains(n - u + ab) and s.contains(n - v + ab)):
            return False
        if n >= vbar and not union:
            return False
        if n >= ubar and union != s.contains(n - v + ab):
            return False
    return True


def c_sequence(sm: GammaSemimodule) -> CSequence:
    """c_1 = g_1 - u_1 and c_i = c_(i-1) + g_i - u_i, for increasing input.

    Each -c_i is a member, and (N + ubar_i) & E_i = (N + ubar_i) & (S + c_i)
    is verified pointwise on [ubar_i, ubar_i + 2*alpha*beta].
    """
    inc, useq = is_increasing(sm)
    if not inc:
        raise NotIncreasing(f"{sm.generators} is not increasing")
    s = sm.semigroup
    ab = s.alpha * s.beta
    levels = sm.level_masks()
    values = []
    c = 0
    for i, (g, u) in enumerate(zip(sm.generators[1:], useq.values), start=1):
        c = c + g - u
        assert s.contains(-c), f"-c_{i} = {-c} must be a member"
        ubar = u + s.conductor - ab
        e_mask = levels[i]
        for n in range(ubar, ubar + 2 * ab + 1):
            if n < 0:
                lhs = False
            elif n > s.window:
                lhs = True
            else:
                lhs = bool((e_mask >> n) & 1)
            assert lhs == s.contains(n - c), \
                f"c-sequence identity fails at i={i}, n={n} for {sm.generators}"
        values.append(c)
    return CSequence(tuple(values))
