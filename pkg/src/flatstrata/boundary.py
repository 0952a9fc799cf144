r"""
Two-level boundary data of genus-one single-zero strata.

A two-level boundary point of the stratum ``1:a;b_1,..,b_n`` is encoded
exactly by

* ``t``: how many poles sit on the top level component,
* ``tau``: the arrangement of all pole labels, first the ``t`` top poles
  in cyclic order, then the ``n - t`` bottom poles in linear order,
* ``C``: for every pole ``i`` a split ``1 <= C_i <= b_i - 1`` of its
  polar domain angles (``D_i = b_i - C_i`` is the complementary side),
* a prong-matching class ``Pr`` on the two nodes, which carry
  ``Q1 = C_{tau(1)} + .. + C_{tau(t)}`` and ``Q2 = b-sum(top) - Q1``
  prongs.

The encoding is redundant in exactly two ways: the top block may be
rotated (which shifts a prong-matching ``(u, v)`` to
``(u - c_k, v - d_k)``), and the two nodes may be swapped (reversing
both blocks, replacing ``C`` by ``D`` and ``(u, v)`` by ``(-v, -u)``).
``canonical_form`` minimizes over those ``2t`` images.

The top level carries saddle connections ``alpha_0 .. alpha_{t-1}`` and
the bottom level ``beta_t .. beta_n``; partial sums ``c_i`` and ``d_i``
of the ``C`` and ``D`` block values locate them relative to the prongs.
All invariants below (rotation number, hyperellipticity tests, parallel
families, indices of plumbed saddle connections) are functions of this
data alone.
"""

from dataclasses import dataclass
from functools import cached_property
from math import gcd

from .prongs import ProngClass
from .signature import RamificationProfile, SignatureError, gcd_d


class DatumError(ValueError):
    """Raised for invalid two-level or horizontal boundary data."""


def _check_single_zero_genus_one(sig):
    if sig.genus != 1:
        raise DatumError("boundary data require genus 1, got %d" % sig.genus)
    if sig.num_zeros != 1:
        raise DatumError("boundary data require a single zero")
    if sig.zeros[0] < 1:
        raise DatumError("the zero must have positive order")


@dataclass(frozen=True, order=True)
class TwoLevelDatum:
    sig: object
    t: int
    tau: tuple
    c_vec: tuple
    pr: ProngClass

    def __post_init__(self):
        sig = self.sig
        _check_single_zero_genus_one(sig)
        n = sig.num_poles
        if not 1 <= self.t <= n:
            raise DatumError("t must lie in 1..%d" % n)
        if sorted(self.tau) != list(range(1, n + 1)):
            raise DatumError("tau is not a permutation of 1..%d" % n)
        if len(self.c_vec) != n:
            raise DatumError("C must assign a value to every pole")
        for i, c in enumerate(self.c_vec, start=1):
            if not 1 <= c <= sig.pole_order(i) - 1:
                raise DatumError(
                    "C_%d = %d out of range 1..%d"
                    % (i, c, sig.pole_order(i) - 1))
        if (self.pr.q1, self.pr.q2) != (self.q1, self.q2):
            raise DatumError(
                "prong class is on (%d, %d), datum needs (%d, %d)"
                % (self.pr.q1, self.pr.q2, self.q1, self.q2))

    # -- block view -------------------------------------------------

    @cached_property
    def block_b(self):
        return tuple(self.sig.pole_order(p) for p in self.tau)

    @cached_property
    def block_c(self):
        return tuple(self.c_vec[p - 1] for p in self.tau)

    @cached_property
    def block_d(self):
        return tuple(b - c for b, c in zip(self.block_b, self.block_c))

    @cached_property
    def c_prefix(self):
        out = [0]
        for c in self.block_c:
            out.append(out[-1] + c)
        return tuple(out)

    @cached_property
    def d_prefix(self):
        out = [0]
        for d in self.block_d:
            out.append(out[-1] + d)
        return tuple(out)

    @property
    def q1(self):
        return self.c_prefix[self.t]

    @property
    def q2(self):
        return self.d_prefix[self.t]

    @property
    def c_total(self):
        """Sum of all n entries of C in block order (tau-independent)."""
        return self.c_prefix[-1]

    @property
    def d_total(self):
        return self.d_prefix[-1]

    def orbit(self):
        return self.pr.orbit()

    # -- relabelings ------------------------------------------------

    def shifted(self, k):
        """Rotate the top block left by ``k`` positions."""
        t = self.t
        k %= t
        tau = self.tau[k:t] + self.tau[:k] + self.tau[t:]
        u0, v0 = self.pr.rep
        pr = ProngClass.from_pair(self.q1, self.q2,
                                  u0 - self.c_prefix[k], v0 - self.d_prefix[k])
        return TwoLevelDatum(self.sig, t, tau, self.c_vec, pr)

    def node_swapped(self):
        """Swap the two nodes: reverse both blocks and flip C to D."""
        t = self.t
        tau = tuple(reversed(self.tau[:t])) + tuple(reversed(self.tau[t:]))
        c_vec = tuple(self.sig.pole_order(i + 1) - c
                      for i, c in enumerate(self.c_vec))
        u0, v0 = self.pr.rep
        pr = ProngClass.from_pair(self.q2, self.q1, -v0, -u0)
        return TwoLevelDatum(self.sig, t, tau, c_vec, pr)

    def transform_element(self, uv, k, swap):
        """Image of an orbit element under ``shifted(k)`` then node swap."""
        u, v = uv
        k %= self.t
        u = (u - self.c_prefix[k]) % self.q1
        v = (v - self.d_prefix[k]) % self.q2
        if swap:
            u, v = (-v) % self.q2, (-u) % self.q1
        return (u, v)

    def relabelings(self):
        """All ``2t`` symmetry images with their (shift, swap) recipes."""
        out = []
        for k in range(self.t):
            d2 = self.shifted(k)
            out.append((d2, k, False))
            out.append((d2.node_swapped(), k, True))
        return out

    def sort_key(self):
        return (self.t, self.tau, self.c_vec, self.pr.rep)

    # -- serialization ----------------------------------------------

    def __str__(self):
        return "X(t=%d, tau=%s, C=%s, pr=(0,%d))" % (
            self.t, "".join("(%s)" % ",".join(map(str, self.tau))),
            "(%s)" % ",".join(map(str, self.c_vec)), self.pr.rep[1])

    def to_json(self):
        return {"t": self.t, "tau": list(self.tau), "C": list(self.c_vec),
                "pr": {"u": 0, "v": self.pr.rep[1]}}

    @classmethod
    def from_json(cls, sig, obj):
        return make_datum(sig, int(obj["t"]), tuple(obj["tau"]),
                          tuple(obj["C"]),
                          (int(obj["pr"]["u"]), int(obj["pr"]["v"])))


def make_datum(sig, t, tau, c_vec, raw_pr):
    """Build a TwoLevelDatum; ``raw_pr`` may be any orbit representative.

    The prong pair is reduced modulo ``(Q1, Q2)`` and stored as the
    canonical class representative ``(0, v)``.
    """
    _check_single_zero_genus_one(sig)
    n = sig.num_poles
    if sorted(tau) != list(range(1, n + 1)):
        raise DatumError("tau is not a permutation of 1..%d" % n)
    if not 1 <= t <= n:
        raise DatumError("t must lie in 1..%d" % n)
    if len(c_vec) != n:
        raise DatumError("C must assign a value to every pole")
    q1 = sum(c_vec[p - 1] for p in tau[:t])
    q2 = sum(sig.pole_order(p) for p in tau[:t]) - q1
    u, v = raw_pr
    return TwoLevelDatum(sig, t, tuple(tau), tuple(c_vec),
                         ProngClass.from_pair(q1, q2, u, v))


def canonical_form(datum):
    """Lexicographic minimum over the ``2t`` relabelings of ``datum``."""
    best = None
    for image, _, _ in datum.relabelings():
        if best is None or image.sort_key() < best.sort_key():
            best = image
    return best


def canonicalize_with_element(datum, uv):
    """Canonical form plus the image of the orbit element ``uv``."""
    if not datum.pr.contains(*uv):
        raise DatumError("element %r is not in the prong orbit" % (uv,))
    best = None
    for image, k, swap in datum.relabelings():
        if best is None or image.sort_key() < best[0].sort_key():
            best = (image, k, swap)
    image, k, swap = best
    return image, datum.transform_element(uv, k, swap)


def rotation_number(datum):
    """gcd of the stratum order gcd, Q1, and ``sum(C) + v``.

    ``v`` is read off the canonical ``(0, v)`` prong representative; the
    result is the rotation number of every flat surface obtained by
    plumbing the datum, hence an invariant of its connected component.
    """
    d = gcd_d(datum.sig)
    return gcd(gcd(d, datum.q1), datum.c_total + datum.pr.rep[1])


def plumbed_indices(datum):
    """Indices ``(Ind alpha_0, Ind beta_1)`` of the plumbed symplectic basis.

    For the canonical prong representative ``(0, v)`` these equal
    ``(Q1 + sum(D) - v, Q1)``; together with the order gcd they recover
    the rotation number.
    """
    v = datum.pr.rep[1]
    return (datum.q1 + datum.d_total - v, datum.q1)


def pr_condition(datum):
    """Hyperellipticity test on the prong class.

    True iff every orbit element ``(u, v)`` whose ``u`` equals some
    partial sum ``c_i`` (``0 <= i < t``) has ``v`` equal to some partial
    sum ``d_j`` (``0 <= j < t``).  A component is hyperelliptic exactly
    when all data in its boundary pass this test.
    """
    t = datum.t
    c_set = {datum.c_prefix[i] % datum.q1 for i in range(t)}
    d_set = {datum.d_prefix[j] % datum.q2 for j in range(t)}
    for u, v in datum.orbit():
        if u in c_set and v not in d_set:
            return False
    return True


def _in_window_left_open(x, lo, length, q):
    """x in (lo, lo + length] cyclically mod q; length == q is the full circle."""
    return (x - lo - 1) % q < length


def _in_window_right_open(x, lo, length, q):
    """x in [lo, lo + length) cyclically mod q."""
    return (x - lo) % q < length


def normalize_element(datum, uv):
    """Rotate the top block so ``u`` falls in the last block window.

    Returns ``(datum2, (u2, v2), k)`` with ``c_{t-1} < u2 <= Q1`` on the
    rotated datum; every orbit element admits exactly one such rotation.
    """
    if not datum.pr.contains(*uv):
        raise DatumError("element %r is not in the prong orbit" % (uv,))
    u, v = uv
    t, q1, q2 = datum.t, datum.q1, datum.q2
    u_rep = u % q1 or q1
    cpre = datum.c_prefix
    k = next(i for i in range(1, t + 1) if cpre[i - 1] < u_rep <= cpre[i])
    k %= t
    datum2 = datum.shifted(k)
    u2 = (u - cpre[k]) % q1 or q1
    v2 = (v - datum.d_prefix[k]) % q2
    return datum2, (u2, v2), k


def _family_split(datum2, v2):
    """Index j with d_{j-1} <= v2 < d_j on a normalized datum."""
    dpre = datum2.d_prefix
    return next(j for j in range(1, datum2.t + 1)
                if dpre[j - 1] <= v2 < dpre[j])


@dataclass(frozen=True)
class ParallelFamilies:
    """Partition of the saddle connections of a plumbed surface."""
    datum: TwoLevelDatum
    element: tuple
    j: int
    beta: frozenset
    alpha_low: frozenset
    alpha_high: frozenset


def parallel_classes(datum, uv):
    """The three parallel families of the surface plumbed at ``uv``.

    The element is first normalized by a cyclic relabeling; the returned
    families refer to the normalized datum, also returned: the vanishing
    bottom family ``beta_t..beta_n``, then ``alpha_0..alpha_{j-1}`` and
    ``alpha_j..alpha_{t-1}``.
    """
    datum2, (u2, v2), _ = normalize_element(datum, uv)
    j = _family_split(datum2, v2)
    t, n = datum2.t, datum2.sig.num_poles
    return ParallelFamilies(datum2, (u2, v2), j,
                            frozenset(range(t, n + 1)),
                            frozenset(range(0, j)),
                            frozenset(range(j, t)))


def multiplicity_one_witness(datum):
    """Some ``(u, v, i)`` whose plumbing makes ``alpha_i`` multiplicity one.

    Scans the whole prong orbit against the window conditions
    ``c_{i-1} < u <= c_i, d_i <= v < d_{i+1}`` and the node-swapped
    variant; returns None when no element satisfies them.
    """
    t, q1, q2 = datum.t, datum.q1, datum.q2
    cpre, dpre = datum.c_prefix, datum.d_prefix
    cb, db = datum.block_c, datum.block_d
    for u, v in datum.orbit():
        for i in range(t):
            u_in_i = _in_window_left_open(u, cpre[(i - 1) % t], cb[(i - 1) % t], q1)
            v_after_i = _in_window_right_open(v, dpre[i % t], db[i % t], q2)
            u_in_next = _in_window_left_open(u, cpre[i % t], cb[i % t], q1)
            v_before_i = _in_window_right_open(v, dpre[(i - 1) % t], db[(i - 1) % t], q2)
            if (u_in_i and v_after_i) or (u_in_next and v_before_i):
                return (u, v, i)
    return None


# -- hyperelliptic boundary normal forms ---------------------------

def _match_profiles(datum):
    """All ramification profiles whose normal form matches ``datum``."""
    t, n = datum.t, datum.sig.num_poles
    if t not in (n, n - 1):
        raise DatumError("normal forms exist only for t = n or t = n - 1")
    found = set()
    for image, _, _ in datum.relabelings():
        if image.q1 != image.q2:
            continue
        bb, cb = image.block_b, image.block_c
        dpre = image.d_prefix
        g = gcd(image.q1, image.q2)
        if t == n - 1 and 2 * cb[n - 1] != bb[n - 1]:
            continue
        for s in (0, 1):
            # pairing of 1-based top block positions: i <-> (s + 1 - i) mod t
            pair = [(s - 1 - i) % t for i in range(t)]
            if any(bb[i] != bb[pair[i]] or cb[i] + cb[pair[i]] != bb[i]
                   for i in range(t)):
                continue
            if image.pr.invariant % g != dpre[s] % g:
                continue
            images = [0] * n
            for i in range(t):
                images[image.tau[i] - 1] = image.tau[pair[i]]
            if t == n - 1:
                images[image.tau[n - 1] - 1] = image.tau[n - 1]
            try:
                found.add(RamificationProfile(datum.sig, tuple(images)))
            except SignatureError:
                continue
    return sorted(found, key=lambda p: p.pole_images)


def hyperelliptic_boundary_profile(datum):
    """The profile of the hyperelliptic component whose boundary holds ``datum``.

    Matches the symmetric normal forms over all cyclic relabelings and
    the node swap; None when no form matches (the datum then bounds no
    hyperelliptic component).  Defined for ``t = n`` and ``t = n - 1``.
    """
    profiles = _match_profiles(datum)
    return profiles[0] if profiles else None


# -- horizontal boundary data --------------------------------------

@dataclass(frozen=True, order=True)
class HorizontalDatum:
    """A horizontal boundary point ``X(0, tau, C)``: one level, one node.

    Unique up to swapping the two unmarked simple poles, which reverses
    ``tau`` and flips ``C`` to ``D``.  Horizontal data carry no moves or
    invariants here; they are not part of the move graph.
    """
    sig: object
    tau: tuple
    c_vec: tuple

    def __post_init__(self):
        _check_single_zero_genus_one(self.sig)
        n = self.sig.num_poles
        if sorted(self.tau) != list(range(1, n + 1)):
            raise DatumError("tau is not a permutation of 1..%d" % n)
        if len(self.c_vec) != n:
            raise DatumError("C must assign a value to every pole")
        for i, c in enumerate(self.c_vec, start=1):
            if not 1 <= c <= self.sig.pole_order(i) - 1:
                raise DatumError("C_%d = %d out of range" % (i, c))

    def swapped(self):
        c_vec = tuple(self.sig.pole_order(i + 1) - c
                      for i, c in enumerate(self.c_vec))
        return HorizontalDatum(self.sig, tuple(reversed(self.tau)), c_vec)

    def canonical(self):
        other = self.swapped()
        return self if (self.tau, self.c_vec) <= (other.tau, other.c_vec) \
            else other

    def to_json(self):
        return {"t": 0, "tau": list(self.tau), "C": list(self.c_vec)}
