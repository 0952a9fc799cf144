r"""
Closed-form component classification and spin arithmetic.

The component list of a residueless stratum is known in closed form:

* hyperelliptic components correspond one-to-one to ramification
  profiles, in every genus;
* in genus one the non-hyperelliptic components are indexed by the
  positive divisors ``r`` of the gcd ``d`` of all orders, one component
  per divisor, up to a short list of exceptional signature shapes;
* in genus at least two there are two non-hyperelliptic components
  distinguished by spin parity when every order is even, and a single
  one otherwise.

The module also carries the spin utilities used to label and transport
components: the symplectic-basis parity sum, the genus-one relation
between spin and rotation number, the parity shift under bubbling a
handle, and the gcd normalizations of the bubbling and zero-breaking
parameters.
"""

from dataclasses import dataclass
from math import gcd

from .signature import SignatureError, enumerate_profiles, gcd_d, is_even_type


class ClassifyError(SignatureError):
    """Raised when a signature is outside the classifier's domain."""


@dataclass(frozen=True)
class NonHypComponent:
    rotation: object
    spin: object
    count: int

    def to_json(self):
        return {"rotation": self.rotation, "spin": self.spin,
                "count": self.count}


@dataclass(frozen=True)
class Classification:
    sig: object
    hyperelliptic: tuple
    non_hyperelliptic: tuple

    def total_components(self):
        return len(self.hyperelliptic) + \
            sum(e.count for e in self.non_hyperelliptic)

    def to_json(self):
        return {
            "signature": self.sig.to_json(),
            "hyperelliptic": [{"profile": p.to_json()}
                              for p in self.hyperelliptic],
            "non_hyperelliptic": [e.to_json()
                                  for e in self.non_hyperelliptic],
        }


def _divisors(d):
    return [r for r in range(1, d + 1) if d % r == 0]


def _genus1_exceptions(sig):
    """Rotation numbers without a non-hyperelliptic component, and the
    doubled rotation number of the one exceptional stratum."""
    zeros, poles = sig.zeros, sig.poles
    m, n = len(zeros), len(poles)
    dropped = set()
    drop_all = False
    doubled = None
    if m == 1:
        a = zeros[0]
        if n == 1 and poles[0] == a:
            dropped.add(a)
        if n == 1 and a % 2 == 0 and poles[0] == a:
            dropped.add(a // 2)
        if all(b == 2 for b in poles) and a == 2 * n:
            drop_all = True
        if n == 2 and poles[0] == poles[1] and a == 2 * poles[0]:
            dropped.add(poles[0])
        if zeros == (12,) and poles == (3, 3, 3, 3):
            doubled = 3
    elif m == 2 and zeros[0] == zeros[1]:
        a1 = zeros[0]
        if all(b == 2 for b in poles) and a1 == n:
            drop_all = True
        if n == 1 and poles[0] == 2 * a1:
            dropped.add(a1)
        if n == 2 and poles[0] == poles[1] == a1:
            dropped.add(a1)
    return dropped, drop_all, doubled


def classify(sig):
    """Predicted component list of the stratum of ``sig``."""
    if sig.genus < 1:
        raise ClassifyError("no residueless surfaces of genus zero "
                            "with the required zero data exist")
    if any(a < 1 for a in sig.zeros):
        raise ClassifyError("classification requires all zero orders >= 1; "
                            "order-0 marked points are not supported")
    hyper = tuple(enumerate_profiles(sig))
    if sig.genus == 1:
        d = gcd_d(sig)
        dropped, drop_all, doubled = _genus1_exceptions(sig)
        entries = []
        if not drop_all:
            for r in _divisors(d):
                if r in dropped:
                    continue
                count = 2 if r == doubled else 1
                spin = (1 + r) % 2 if is_even_type(sig) else None
                entries.append(NonHypComponent(r, spin, count))
        return Classification(sig, hyper, tuple(entries))
    if is_even_type(sig):
        entries = (NonHypComponent(None, 0, 1), NonHypComponent(None, 1, 1))
    else:
        entries = (NonHypComponent(None, None, 1),)
    return Classification(sig, hyper, entries)


def spin_parity(index_pairs):
    """Parity of ``sum (Ind a_i + 1)(Ind b_i + 1)`` over a symplectic basis."""
    return sum((a + 1) * (b + 1) for a, b in index_pairs) % 2


def genus1_spin_from_rotation(r):
    """Spin parity of a genus-one even-type surface with rotation number r."""
    return (1 + r) % 2


def bubble_spin(spin, s):
    """Spin parity after bubbling a handle with angle parameter ``s``."""
    return (spin + s + 1) % 2


def normalize_bubble_param(a, s):
    """Reduce the bubbling parameter: only ``gcd(a + 2, s)`` matters."""
    if not 1 <= s <= a + 1:
        raise ValueError("bubble parameter must satisfy 1 <= s <= a + 1")
    return gcd(a + 2, s)


def break_zero_rotation(r, zero_orders):
    """Rotation number after breaking a zero into the given orders."""
    out = r
    for a in zero_orders:
        out = gcd(out, a)
    return out
