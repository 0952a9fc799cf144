r"""
Stratum signatures of residueless meromorphic differentials.

A signature records the genus together with the multiset of zero orders
``a_1 <= ... <= a_m`` and pole orders ``b_1 <= ... <= b_n`` (poles stored
as positive magnitudes).  Every pole is residueless, which forces
``b_j >= 2``, and the orders satisfy ``sum(a) - sum(b) = 2g - 2``.

The text grammar is ``genus ":" zeros ";" poles`` where zeros is a comma
list of non-negative integers and poles is a comma list of ``b`` or
``b^k`` terms (``k`` a repetition count), e.g. ``1:12;3^4``.

Ramification profiles are the involutions of the marked points allowed
on a hyperelliptic flat surface: at most two zeroes (swapped when there
are two, fixed when there is one), order-preserving on poles, with at
most ``2g + 2`` fixed marked points, all of even order.
"""

from dataclasses import dataclass
from math import gcd


class SignatureError(ValueError):
    """Raised for malformed or inconsistent stratum signatures."""


@dataclass(frozen=True, order=True)
class StratumSignature:
    genus: int
    zeros: tuple
    poles: tuple

    def __post_init__(self):
        if self.genus < 0:
            raise SignatureError("genus must be non-negative")
        if not self.zeros or not self.poles:
            raise SignatureError("need at least one zero and one pole")
        if any(a < 0 for a in self.zeros):
            raise SignatureError("zero orders must be non-negative")
        if any(b < 2 for b in self.poles):
            raise SignatureError(
                "residueless poles must have order >= 2, got %r" % (self.poles,))
        if tuple(sorted(self.zeros)) != tuple(self.zeros):
            raise SignatureError("zero orders must be sorted ascending")
        if tuple(sorted(self.poles)) != tuple(self.poles):
            raise SignatureError("pole orders must be sorted ascending")
        if sum(self.zeros) - sum(self.poles) != 2 * self.genus - 2:
            raise SignatureError(
                "order sum %d does not match 2g-2 = %d"
                % (sum(self.zeros) - sum(self.poles), 2 * self.genus - 2))

    @property
    def num_zeros(self):
        return len(self.zeros)

    @property
    def num_poles(self):
        return len(self.poles)

    def zero_order(self, label):
        """Order of the zero with 1-based label."""
        return self.zeros[label - 1]

    def pole_order(self, label):
        """Order (positive) of the pole with 1-based label."""
        return self.poles[label - 1]

    def __str__(self):
        zeros = ",".join(str(a) for a in self.zeros)
        poles = ",".join(str(b) for b in self.poles)
        return "%d:%s;%s" % (self.genus, zeros, poles)

    def to_json(self):
        return {"genus": self.genus, "zeros": list(self.zeros),
                "poles": list(self.poles)}

    @classmethod
    def from_json(cls, obj):
        return cls(int(obj["genus"]), tuple(obj["zeros"]), tuple(obj["poles"]))


def _parse_int(text, what):
    text = text.strip()
    if not text or not (text.isdigit() or
                        (text[0] == "-" and text[1:].isdigit())):
        raise SignatureError("bad %s %r" % (what, text))
    return int(text)


def parse_signature(text):
    """Parse ``genus ":" zeros ";" poles`` into a StratumSignature.

    Zero and pole orders are sorted ascending; labels 1..m and 1..n refer
    to the sorted sequences.  Pole terms may carry a multiplicity as in
    ``3^4``.
    """
    if text.count(":") != 1:
        raise SignatureError("expected 'genus:zeros;poles', got %r" % text)
    head, rest = text.split(":")
    if rest.count(";") != 1:
        raise SignatureError("expected 'genus:zeros;poles', got %r" % text)
    zeros_text, poles_text = rest.split(";")
    genus = _parse_int(head, "genus")
    zeros = tuple(_parse_int(z, "zero order") for z in zeros_text.split(","))
    poles = []
    for term in poles_text.split(","):
        if "^" in term:
            base_text, _, count_text = term.partition("^")
            base = _parse_int(base_text, "pole order")
            count = _parse_int(count_text, "pole multiplicity")
            if count < 1:
                raise SignatureError("pole multiplicity must be >= 1")
            poles.extend([base] * count)
        else:
            poles.append(_parse_int(term, "pole order"))
    return StratumSignature(genus, tuple(sorted(zeros)), tuple(sorted(poles)))


def is_even_type(sig):
    """True iff every zero and pole order is even."""
    return all(a % 2 == 0 for a in sig.zeros) and \
        all(b % 2 == 0 for b in sig.poles)


def gcd_d(sig):
    """gcd of all zero and pole orders; order-0 marked points are ignored."""
    g = 0
    for a in sig.zeros:
        g = gcd(g, a)
    for b in sig.poles:
        g = gcd(g, b)
    return g


@dataclass(frozen=True, order=True)
class RamificationProfile:
    """An admissible involution of the marked points, keyed by pole images.

    ``pole_images[i-1]`` is the 1-based image of pole ``i``.  The zero
    behavior is forced by the zero count of the parent signature and is
    not stored.
    """
    parent: StratumSignature
    pole_images: tuple

    def __post_init__(self):
        sig = self.parent
        n = sig.num_poles
        images = self.pole_images
        if sorted(images) != list(range(1, n + 1)):
            raise SignatureError("pole images are not a permutation")
        for i in range(1, n + 1):
            j = images[i - 1]
            if images[j - 1] != i:
                raise SignatureError("pole map is not an involution")
            if sig.pole_order(i) != sig.pole_order(j):
                raise SignatureError("involution does not preserve pole order")
        if sig.num_zeros > 2:
            raise SignatureError("profiles need at most two zeroes")
        if sig.num_zeros == 2 and sig.zeros[0] != sig.zeros[1]:
            raise SignatureError("two zeroes must have equal order")
        if sig.num_zeros == 1 and sig.zeros[0] % 2 != 0:
            raise SignatureError("a fixed single zero must have even order")
        fixed = self.fixed_poles()
        for i in fixed:
            if sig.pole_order(i) % 2 != 0:
                raise SignatureError("fixed pole %d has odd order" % i)
        fixed_marked = len(fixed) + (1 if sig.num_zeros == 1 else 0)
        if fixed_marked > 2 * sig.genus + 2:
            raise SignatureError(
                "involution fixes %d marked points, at most %d allowed"
                % (fixed_marked, 2 * sig.genus + 2))

    def fixed_poles(self):
        return tuple(i for i in range(1, self.parent.num_poles + 1)
                     if self.pole_images[i - 1] == i)

    def fixed_marked_points(self):
        """Number of fixed marked points, the zero included when m = 1."""
        return len(self.fixed_poles()) + (1 if self.parent.num_zeros == 1 else 0)

    def __str__(self):
        pairs = ["%d<->%d" % (i, self.pole_images[i - 1])
                 for i in range(1, self.parent.num_poles + 1)
                 if i < self.pole_images[i - 1]]
        fixed = ",".join(str(i) for i in self.fixed_poles())
        parts = []
        if fixed:
            parts.append("fix " + fixed)
        if pairs:
            parts.append(" ".join(pairs))
        return "[" + ("; ".join(parts) if parts else "free") + "]"

    def to_json(self):
        return list(self.pole_images)


def enumerate_profiles(sig):
    """All ramification profiles of ``sig`` in lexicographic image order.

    Empty when the signature admits none: more than two zeroes, two
    zeroes of distinct orders, or a single zero of odd order.
    """
    if sig.num_zeros > 2:
        return []
    if sig.num_zeros == 2 and sig.zeros[0] != sig.zeros[1]:
        return []
    if sig.num_zeros == 1 and sig.zeros[0] % 2 != 0:
        return []
    n = sig.num_poles
    budget = 2 * sig.genus + 2 - (1 if sig.num_zeros == 1 else 0)
    profiles = []

    def extend(images):
        free = [i for i in range(1, n + 1) if images[i - 1] == 0]
        if not free:
            fixed = sum(1 for i in range(1, n + 1) if images[i - 1] == i)
            if fixed <= budget:
                profiles.append(RamificationProfile(sig, tuple(images)))
            return
        i = free[0]
        # fix i, then pair i with each later free pole of equal order
        if sig.pole_order(i) % 2 == 0:
            images[i - 1] = i
            extend(images)
            images[i - 1] = 0
        for j in free[1:]:
            if sig.pole_order(j) == sig.pole_order(i):
                images[i - 1], images[j - 1] = j, i
                extend(images)
                images[i - 1], images[j - 1] = 0, 0

    extend([0] * n)
    profiles.sort(key=lambda p: p.pole_images)
    return profiles
