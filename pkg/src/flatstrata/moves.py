r"""
Boundary moves between two-level data of one connected component.

Plumbing a datum ``X`` at an orbit element ``(u, v)`` yields a flat
surface with three families of parallel saddle connections: the bottom
family ``beta_t..beta_n`` (shrinking it returns ``X``), the low alphas
``alpha_0..alpha_{j-1}`` and the high alphas ``alpha_j..alpha_{t-1}``,
where ``j`` is fixed by ``d_{j-1} <= v < d_j`` after rotating the top
block so that ``c_{t-1} < u <= Q1``.  Shrinking the low or the high
family produces the data ``t1_move`` and ``t2_move``; both stay in the
boundary of the same connected component and preserve the rotation
number.

The adjustment move trades one unit between ``C_t`` and ``C_j`` with
everything else fixed, and the insertion move promotes one bottom pole
to the top level; both are composites of the two basic moves and are
validated through them.
"""

from .boundary import (DatumError, TwoLevelDatum, canonical_form,
                       canonicalize_with_element, normalize_element,
                       _family_split)
from .prongs import ProngClass


class MoveError(DatumError):
    """Raised when a move's preconditions fail."""


def _t1_raw(datum2, u, v):
    """T1 on a normalized datum; returns the raw output and its element."""
    t, n = datum2.t, datum2.sig.num_poles
    poles, bb, cb = datum2.tau, datum2.block_b, datum2.block_c
    cpre, dpre = datum2.c_prefix, datum2.d_prefix
    j = _family_split(datum2, v)

    c_vec = list(datum2.c_vec)
    for x in range(j - 1):
        c_vec[poles[x] - 1] = bb[x] - cb[x]
    if j == t:
        c_vec[poles[t - 1] - 1] = (u - cpre[t - 1]) + (v - dpre[t - 1])
    else:
        c_vec[poles[j - 1] - 1] = cb[j - 1] + v - dpre[j - 1]
        c_vec[poles[t - 1] - 1] = u - cpre[t - 1]
    tau = tuple(poles[x] for x in range(j - 1, n)) \
        + tuple(poles[x] for x in reversed(range(j - 1)))

    t_new = n - (j - 1)
    q1_new = sum(c_vec[p - 1] for p in tau[:t_new])
    q2_new = sum(datum2.sig.pole_order(p) for p in tau[:t_new]) - q1_new
    assert q1_new == u + v + cpre[n] - cpre[t] - cpre[j - 1] - dpre[j - 1]
    element = ((v - dpre[j - 1]) % q1_new, (dpre[t] - v) % q2_new)
    out = TwoLevelDatum(datum2.sig, t_new, tau, tuple(c_vec),
                        ProngClass.from_pair(q1_new, q2_new, *element))
    return out, element


def _t2_raw(datum2, u, v):
    """T2 on a normalized datum; undefined when the high family is empty."""
    t, n = datum2.t, datum2.sig.num_poles
    poles, bb, cb = datum2.tau, datum2.block_b, datum2.block_c
    cpre, dpre = datum2.c_prefix, datum2.d_prefix
    j = _family_split(datum2, v)
    if j == t:
        raise MoveError(
            "t2 move undefined at %r: the high alpha family is empty" % ((u, v),))

    c_vec = list(datum2.c_vec)
    for x in range(t, n):
        c_vec[poles[x] - 1] = bb[x] - cb[x]
    c_vec[poles[j - 1] - 1] = cb[j - 1] + (dpre[j] - v - 1)
    c_vec[poles[t - 1] - 1] = cpre[t] - u + 1
    tau = tuple(poles[x] for x in range(j)) \
        + tuple(poles[x] for x in reversed(range(t - 1, n))) \
        + tuple(poles[x] for x in range(j, t - 1))

    t_new = n - (t - 1 - j)
    q1_new = sum(c_vec[p - 1] for p in tau[:t_new])
    q2_new = sum(datum2.sig.pole_order(p) for p in tau[:t_new]) - q1_new
    assert q1_new == cpre[j] + dpre[j] + dpre[n] + cpre[t] - dpre[t] - u - v
    element = ((1 - (bb[t - 1] - cb[t - 1])) % q1_new,
               (cpre[j] - 1) % q2_new)
    out = TwoLevelDatum(datum2.sig, t_new, tau, tuple(c_vec),
                        ProngClass.from_pair(q1_new, q2_new, *element))
    return out, element


def t1_move(datum, uv):
    """Shrink the low alpha family at ``uv``; canonical result."""
    datum2, (u, v), _ = normalize_element(datum, uv)
    out, _ = _t1_raw(datum2, u, v)
    return canonical_form(out)


def t2_move(datum, uv):
    """Shrink the high alpha family at ``uv``; canonical result."""
    datum2, (u, v), _ = normalize_element(datum, uv)
    out, _ = _t2_raw(datum2, u, v)
    return canonical_form(out)


def t1_move_traced(datum, uv):
    """As t1_move, but also return the re-plumbing element of the result.

    Plumbing the result at that element recovers the surface plumbed
    from ``datum`` at ``uv``; shrinking its families recovers ``datum``.
    """
    datum2, (u, v), _ = normalize_element(datum, uv)
    out, element = _t1_raw(datum2, u, v)
    return canonicalize_with_element(out, element)


def t2_move_traced(datum, uv):
    datum2, (u, v), _ = normalize_element(datum, uv)
    out, element = _t2_raw(datum2, u, v)
    return canonicalize_with_element(out, element)


def t2_defined(datum, uv):
    """True when the high alpha family at ``uv`` is nonempty."""
    datum2, (_, v), _ = normalize_element(datum, uv)
    return _family_split(datum2, v) < datum2.t


def adjust_pair(datum, uv, direction):
    """Trade one unit between ``C_t`` and ``C_j`` at a fixed element.

    ``direction`` is "up" (increase ``C_t``, decrease ``C_j``; requires
    ``D_t >= 2`` and ``C_j >= 2``) or "down" (the reverse; requires
    ``C_t >= 2`` and ``D_j >= 2``).  The result shares the component of
    ``datum``: its T1 (or T2) image at the shifted element coincides
    with the corresponding image of ``datum``.  Returned in the
    normalized labeling, not canonicalized.
    """
    if direction not in ("up", "down"):
        raise MoveError("direction must be 'up' or 'down'")
    datum2, (u, v), _ = normalize_element(datum, uv)
    t = datum2.t
    j = _family_split(datum2, v)
    poles, cb, db = datum2.tau, datum2.block_c, datum2.block_d
    if direction == "up" and (db[t - 1] < 2 or cb[j - 1] < 2):
        raise MoveError("adjustment up needs D_t >= 2 and C_j >= 2")
    if direction == "down" and (cb[t - 1] < 2 or db[j - 1] < 2):
        raise MoveError("adjustment down needs C_t >= 2 and D_j >= 2")
    delta = 1 if direction == "up" else -1
    c_vec = list(datum2.c_vec)
    c_vec[poles[t - 1] - 1] += delta
    c_vec[poles[j - 1] - 1] -= delta
    return TwoLevelDatum(datum2.sig, t, datum2.tau, tuple(c_vec),
                         ProngClass.from_pair(datum2.q1, datum2.q2, u, v))


def insert_pole(datum, uv):
    """Promote one bottom pole to the top level at an element ``(0, v)``.

    Requires ``t < n`` and ``v`` strictly inside a bottom window
    (``d_{j-1} < v < d_j``).  Implemented as the composite of T1 at
    ``(0, v)`` and T2 at the shifted re-plumbing element; the output has
    ``t + 1`` top poles, with ``Q1`` grown by the promoted pole's order
    and ``Q2`` unchanged.
    """
    datum2, (u, v), _ = normalize_element(datum, uv)
    t, n = datum2.t, datum2.sig.num_poles
    if t >= n:
        raise MoveError("insertion needs a bottom pole (t < n)")
    if (u % datum2.q1) != 0:
        raise MoveError("insertion expects an element with u = 0")
    dpre = datum2.d_prefix
    j = _family_split(datum2, v)
    if v == dpre[j - 1]:
        raise MoveError("insertion undefined: v equals a partial sum d_j")
    mid, _ = _t1_raw(datum2, u, v)
    mid_element = ((v - dpre[j - 1] - 1) % mid.q1,
                   (dpre[t] - v + 1) % mid.q2)
    if not mid.pr.contains(*mid_element):
        raise MoveError("insertion element fell outside the prong orbit")
    mid2, (u2, v2), _ = normalize_element(mid, mid_element)
    out, _ = _t2_raw(mid2, u2, v2)

    promoted = datum2.tau[t]
    if set(out.tau[:t + 1]) != set(datum2.tau[:t]) | {promoted}:
        raise MoveError("insertion did not promote the next bottom pole")
    assert out.t == t + 1
    assert out.q1 == datum2.q1 + datum2.sig.pole_order(promoted)
    assert out.q2 == datum2.q2
    return canonical_form(out)


def trace_line(kind, uv, source, target):
    """One line of the reproducible move trace format."""
    import json
    return "%s (%d,%d): %s -> %s" % (
        kind, uv[0], uv[1],
        json.dumps(source.to_json(), separators=(",", ":")),
        json.dumps(target.to_json(), separators=(",", ":")))
