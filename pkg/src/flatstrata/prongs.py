r"""
Prong-matching classes for a pair of nodes with ``q1`` and ``q2`` prongs.

A prong-matching is a pair ``(u, v)`` in ``Z/q1 x Z/q2``.  The level
rotation acts by ``k . (u, v) = (u + k, v - k)``; its orbits are the
prong-matching equivalence classes.  An orbit has ``lcm(q1, q2)``
elements, so there are exactly ``gcd(q1, q2)`` classes, and each class
contains a unique representative ``(0, v)`` with ``0 <= v < gcd(q1, q2)``.
That representative is the stored canonical form; the class invariant is
``(u + v) mod gcd(q1, q2)``.
"""

from dataclasses import dataclass
from math import gcd, lcm


@dataclass(frozen=True, order=True)
class ProngClass:
    q1: int
    q2: int
    rep: tuple

    def __post_init__(self):
        if self.q1 < 1 or self.q2 < 1:
            raise ValueError("prong counts must be positive")
        u, v = self.rep
        if (u, v) != (0, (u + v) % gcd(self.q1, self.q2)):
            raise ValueError("rep %r is not canonical" % (self.rep,))

    @classmethod
    def from_pair(cls, q1, q2, u, v):
        """Class of the (arbitrary, possibly negative) matching ``(u, v)``."""
        if q1 < 1 or q2 < 1:
            raise ValueError("prong counts must be positive")
        return cls(q1, q2, (0, (u + v) % gcd(q1, q2)))

    @property
    def invariant(self):
        return self.rep[1]

    def contains(self, u, v):
        return (u + v) % gcd(self.q1, self.q2) == self.invariant

    def orbit(self):
        """All ``lcm(q1, q2)`` orbit elements, starting at the canonical rep."""
        u0, v0 = self.rep
        return [((u0 + k) % self.q1, (v0 - k) % self.q2)
                for k in range(lcm(self.q1, self.q2))]


def prong_class_count(q1, q2):
    """Number of prong-matching classes on a (q1, q2) pair of nodes."""
    if q1 < 1 or q2 < 1:
        raise ValueError("prong counts must be positive")
    return gcd(q1, q2)
