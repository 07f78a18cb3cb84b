"""Two-generator numerical semigroups: membership, gaps, lattice coordinates.

A semigroup <alpha, beta> with gcd(alpha, beta) = 1 and 1 < alpha < beta has
conductor c = (alpha-1)(beta-1), and every gap is uniquely of the form
alpha*beta - a*alpha - b*beta with 1 <= a <= beta-1 and 1 <= b <= alpha-1.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import BadOrder, NotAGap, NotCoprime, NotInSemigroup


@dataclass(frozen=True)
class Gap:
    """A gap value together with its lattice point (a, b)."""

    value: int
    a: int
    b: int


class Semigroup:
    """The numerical semigroup generated by alpha and beta.

    Membership is cached as a bitmask over [0, alpha*beta + conductor];
    queries above the table fall back to ``n >= conductor``.  Instances are
    immutable and safe to share.
    """

    __slots__ = ("alpha", "beta", "conductor", "window", "mask", "_beta_inv",
                 "_alpha_inv_mod_beta", "_gaps")

    def __init__(self, alpha: int, beta: int):
        if not (isinstance(alpha, int) and isinstance(beta, int)):
            raise BadOrder(f"generators must be integers, got ({alpha!r}, {beta!r})")
        if not (1 < alpha < beta):
            raise BadOrder(f"need 1 < alpha < beta, got ({alpha}, {beta})")
        if math.gcd(alpha, beta) != 1:
            raise NotCoprime(f"gcd({alpha}, {beta}) = {math.gcd(alpha, beta)} != 1")
        self.alpha = alpha
        self.beta = beta
        self.conductor = (alpha - 1) * (beta - 1)
        self.window = alpha * beta + self.conductor
        mask = 1
        for n in range(1, self.window + 1):
            if (n >= alpha and (mask >> (n - alpha)) & 1) or \
               (n >= beta and (mask >> (n - beta)) & 1):
                mask |= 1 << n
        self.mask = mask
        self._beta_inv = pow(beta, -1, alpha)
        self._alpha_inv_mod_beta = pow(alpha, -1, beta)
        self._gaps = None

    def __repr__(self):
        return f"Semigroup({self.alpha}, {self.beta})"

    def __eq__(self, other):
        return isinstance(other, Semigroup) and \
            (self.alpha, self.beta) == (other.alpha, other.beta)

    def __hash__(self):
        return hash((self.alpha, self.beta))

    def contains(self, n: int) -> bool:
        """True iff n is a member; False for all negative n."""
        if n < 0:
            return False
        if n > self.window:
            return True  # window >= conductor
        return bool((self.mask >> n) & 1)

    def gaps(self) -> list[Gap]:
        """All gaps in increasing order, each with its (a, b) coordinates."""
        if self._gaps is None:
            out = []
            for n in range(1, self.conductor):
                if not (self.mask >> n) & 1:
                    a, b = self.gap_coords(n)
                    out.append(Gap(n, a, b))
            self._gaps = out
        return list(self._gaps)

    def gap_coords(self, g: int) -> tuple[int, int]:
        """The unique (a, b) with g = alpha*beta - a*alpha - b*beta.

        Raises NotAGap unless g is a gap.
        """
        if g <= 0 or self.contains(g):
            raise NotAGap(f"{g} is not a gap of <{self.alpha},{self.beta}>")
        rest = self.alpha * self.beta - g
        a = (rest * self._alpha_inv_mod_beta) % self.beta
        b, r = divmod(rest - a * self.alpha, self.beta)
        if r != 0 or not (1 <= a <= self.beta - 1) or not (1 <= b <= self.alpha - 1):
            raise NotAGap(f"{g} has no valid lattice coordinates")
        return a, b

    def coord_gap(self, a: int, b: int) -> int:
        """Inverse of gap_coords: the gap at lattice point (a, b)."""
        if not (1 <= a <= self.beta - 1 and 1 <= b <= self.alpha - 1):
            raise NotAGap(f"({a}, {b}) is outside the coordinate box")
        g = self.alpha * self.beta - a * self.alpha - b * self.beta
        if g <= 0:
            raise NotAGap(f"({a}, {b}) lies outside the triangle")
        return g

    def decompose(self, eps: int) -> tuple[int, int]:
        """Write eps = e1*alpha + e2*beta with 0 <= e2 < alpha, e1 >= 0.

        The decomposition is unique by coprimality; NotInSemigroup if eps
        is not a member.
        """
        if eps < 0:
            raise NotInSemigroup(f"{eps} < 0")
        e2 = (eps * self._beta_inv) % self.alpha
        e1, r = divmod(eps - e2 * self.beta, self.alpha)
        if r != 0 or e1 < 0:
            raise NotInSemigroup(f"{eps} is not in <{self.alpha},{self.beta}>")
        return e1, e2

    # Bit-level helpers used by the semimodule layer.  All windowed masks
    # index bit n <-> integer n and are truncated to [0, window].

    def shifted_mask(self, g: int) -> int:
        """Bitmask of (semigroup + g) on [0, window], for g >= 0."""
        full = (1 << (self.window + 1)) - 1
        return (self.mask << g) & full


def make_semigroup(alpha: int, beta: int) -> Semigroup:
    return Semigroup(alpha, beta)


def min_bit(mask: int) -> int:
    """Index of the least set bit; -1 if mask == 0."""
    if mask == 0:
        return -1
    return (mask & -mask).bit_length() - 1
