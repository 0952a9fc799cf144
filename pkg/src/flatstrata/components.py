r"""
Exhaustive boundary enumeration, the move graph, and its components.

For a genus-one single-zero stratum every two-level boundary point is a
``TwoLevelDatum``; enumerating all of them and connecting each to its
T1/T2 images over every prong orbit element yields a finite graph whose
connected components are in bijection with the connected components of
the stratum.  Each component carries a constant rotation number, is
hyperelliptic iff all of its data pass the prong condition, and a
hyperelliptic component determines a unique ramification profile via the
symmetric normal forms.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import permutations, product
from math import gcd

from .boundary import (HorizontalDatum, canonical_form,
                       hyperelliptic_boundary_profile, make_datum,
                       pr_condition, rotation_number)
from .moves import t1_move, t2_move, t2_defined
from .signature import SignatureError


class ResourceLimitError(RuntimeError):
    """Raised when enumeration exceeds the configured raw-tuple cap."""


DEFAULT_MAX_RAW = 2_000_000


def _check_enumerable(sig):
    if sig.genus != 1 or sig.num_zeros != 1:
        raise SignatureError(
            "boundary enumeration requires a genus-one single-zero stratum")


def enumerate_boundary(sig, max_raw=DEFAULT_MAX_RAW):
    """All canonical two-level boundary data of ``sig``, sorted.

    Iterates every raw tuple (t, pole arrangement, C in range, prong
    class) and deduplicates through the canonical form.  Raises
    ResourceLimitError if more than ``max_raw`` raw tuples are needed.
    """
    _check_enumerable(sig)
    n = sig.num_poles
    raw = 0
    seen = set()
    ranges = [range(1, sig.pole_order(i)) for i in range(1, n + 1)]
    for t in range(1, n + 1):
        for tau in permutations(range(1, n + 1)):
            for c_vec in product(*ranges):
                q1 = sum(c_vec[p - 1] for p in tau[:t])
                q2 = sum(sig.pole_order(p) for p in tau[:t]) - q1
                for w in range(gcd(q1, q2)):
                    raw += 1
                    if raw > max_raw:
                        raise ResourceLimitError(
                            "more than %d raw boundary tuples" % max_raw)
                    seen.add(canonical_form(
                        make_datum(sig, t, tau, c_vec, (0, w))))
    return sorted(seen, key=lambda d: d.sort_key())


def enumerate_horizontal(sig):
    """All canonical horizontal boundary data of ``sig``, sorted."""
    _check_enumerable(sig)
    n = sig.num_poles
    ranges = [range(1, sig.pole_order(i)) for i in range(1, n + 1)]
    seen = set()
    for tau in permutations(range(1, n + 1)):
        for c_vec in product(*ranges):
            seen.add(HorizontalDatum(sig, tau, c_vec).canonical())
    return sorted(seen, key=lambda d: (d.tau, d.c_vec))


def _targets(datum):
    # moves act on both node labelings: the swapped picture shrinks
    # families that the direct picture does not see
    out = set()
    for rep in (datum, datum.node_swapped()):
        for element in rep.orbit():
            out.add(t1_move(rep, element))
            if t2_defined(rep, element):
                out.add(t2_move(rep, element))
    out.discard(datum)
    return out


def build_move_graph(data, threads=1):
    """Adjacency map of the undirected move graph over canonical data.

    Every prong orbit element contributes its T1 and (when defined) T2
    image.  A move target outside the enumerated set is a hard error.
    """
    nodes = set(data)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            target_sets = list(pool.map(_targets, data))
    else:
        target_sets = [_targets(d) for d in data]
    adjacency = {d: set(t) for d, t in zip(data, target_sets)}
    for d, targets in adjacency.items():
        for y in targets:
            if y not in nodes:
                raise RuntimeError(
                    "move target %s escapes the enumerated set" % (y,))
    for d, targets in list(adjacency.items()):
        for y in targets:
            adjacency[y].add(d)
    return {d: frozenset(t) for d, t in adjacency.items()}


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[ry] = rx


@dataclass(frozen=True)
class ComponentSummary:
    id: int
    data_count: int
    rotation: int
    hyperelliptic: bool
    profile: object
    profile_unresolved: bool
    sample: object

    @property
    def kind(self):
        return "hyperelliptic" if self.hyperelliptic else "non-hyperelliptic"

    def to_json(self):
        return {
            "id": self.id,
            "kind": self.kind,
            "rotation": self.rotation,
            "profile": self.profile.to_json() if self.profile else None,
            "profile_unresolved": self.profile_unresolved,
            "data_count": self.data_count,
            "sample": self.sample.to_json(),
        }


def _extract_profile(members):
    """Profile of a hyperelliptic component from its normal-form data.

    Components with a datum carrying all poles on top are matched there;
    otherwise (profiles fixing 2g + 2 marked points) the data with one
    bottom pole decide.  Returns (profile, unresolved).
    """
    n = members[0].sig.num_poles
    for level in (n, n - 1):
        tier = [d for d in members if d.t == level]
        if not tier:
            continue
        found = {hyperelliptic_boundary_profile(d) for d in tier}
        found.discard(None)
        if len(found) == 1:
            return found.pop(), False
        return (min(found, key=lambda p: p.pole_images) if found else None,
                True)
    return None, True


def connected_components(graph):
    """ComponentSummary list for a move graph, deterministic order.

    Rotation number must be constant on every component (hard error
    otherwise).  A component is hyperelliptic iff every member datum
    passes the prong condition; its ramification profile is then
    extracted from the normal-form matchers.
    """
    data = sorted(graph, key=lambda d: d.sort_key())
    uf = _UnionFind(data)
    for d, targets in graph.items():
        for y in targets:
            uf.union(d, y)
    groups = {}
    for d in data:
        groups.setdefault(uf.find(d), []).append(d)
    summaries = []
    for members in groups.values():
        rotations = {rotation_number(d) for d in members}
        if len(rotations) != 1:
            raise RuntimeError(
                "rotation number not constant on a component: %s" % rotations)
        hyper = all(pr_condition(d) for d in members)
        profile, unresolved = _extract_profile(members) if hyper \
            else (None, False)
        summaries.append((rotations.pop(), hyper, profile, unresolved,
                          members))
    summaries.sort(key=lambda s: (not s[1], s[0],
                                  s[2].pole_images if s[2] else (),
                                  s[4][0].sort_key()))
    return [ComponentSummary(i, len(members), rotation, hyper, profile,
                             unresolved, members[0])
            for i, (rotation, hyper, profile, unresolved, members)
            in enumerate(summaries, start=1)]


def component_summaries(sig, max_raw=DEFAULT_MAX_RAW, threads=1):
    data = enumerate_boundary(sig, max_raw=max_raw)
    return connected_components(build_move_graph(data, threads=threads))


@dataclass(frozen=True)
class VerifyReport:
    sig: object
    status: str
    observed: tuple
    predicted: object
    mismatches: tuple

    @property
    def ok(self):
        return self.status == "OK"

    def summary_line(self):
        counted = {}
        for comp in self.observed:
            key = ("hyp" if comp.hyperelliptic else "non-hyp", comp.rotation)
            counted[key] = counted.get(key, 0) + 1
        body = ", ".join("%d %s r=%d" % (c, kind, rot)
                         for (kind, rot), c in sorted(counted.items()))
        line = "%s: %d components (%s)" % (self.status, len(self.observed),
                                           body)
        if self.mismatches:
            line += " | " + "; ".join(self.mismatches)
        return line

    def to_json(self):
        return {
            "signature": self.sig.to_json(),
            "status": self.status,
            "components": [c.to_json() for c in self.observed],
            "predicted": self.predicted.to_json(),
            "mismatches": list(self.mismatches),
        }


def verify(sig, max_raw=DEFAULT_MAX_RAW, threads=1):
    """Compare enumerated components against the closed-form classifier."""
    from .classify import classify

    predicted = classify(sig)
    observed = component_summaries(sig, max_raw=max_raw, threads=threads)
    mismatches = []

    obs_hyp = [c for c in observed if c.hyperelliptic]
    if any(c.profile_unresolved or c.profile is None for c in obs_hyp):
        mismatches.append("hyperelliptic profile extraction unresolved")
    obs_profiles = sorted(c.profile.pole_images for c in obs_hyp
                          if c.profile is not None)
    want_profiles = sorted(p.pole_images for p in predicted.hyperelliptic)
    if obs_profiles != want_profiles:
        mismatches.append(
            "hyperelliptic profiles differ: observed %s vs predicted %s"
            % (obs_profiles, want_profiles))
    if len(set(obs_profiles)) != len(obs_profiles):
        mismatches.append("two hyperelliptic components share a profile")

    obs_rotations = sorted(c.rotation for c in observed
                           if not c.hyperelliptic)
    want_rotations = sorted(
        r for entry in predicted.non_hyperelliptic
        for r in [entry.rotation] * entry.count)
    if obs_rotations != want_rotations:
        mismatches.append(
            "non-hyperelliptic rotations differ: observed %s vs predicted %s"
            % (obs_rotations, want_rotations))

    status = "OK" if not mismatches else "MISMATCH"
    return VerifyReport(sig, status, tuple(observed), predicted,
                        tuple(mismatches))
