"""Built-in hyperfields and their scalar arithmetic.

A hyperfield is a field-like structure whose addition is set-valued: the
hypersum x + y is a non-empty subset of the hyperfield, while multiplication
stays single-valued.  Every element x has a unique hyperinverse -x with
0 in x + (-x), and membership satisfies the reversibility rule
x in y + z  iff  z in x + (-y).

Supported hyperfields and their element payloads:

  krasner    {0, 1}, int payload; 1 + 1 = {0, 1}
  sign       {-1, 0, 1}, int payload; 1 + (-1) = {-1, 0, 1}
  tropical   nonnegative rationals (Fraction payload), multiplicative
             presentation: x + y = {max} when x != y, {c <= x} when x == y
  triangle   nonnegative reals (float payload): x + y = [|x-y|, x+y]
  phase      unit circle plus zero (payload None for zero, else an angle
             in [0, 2pi)): x + (-x) = {0, x, -x}, otherwise the open
             shorter arc between x and y
  rational   the field of rationals (Fraction payload)
  gf         the prime field GF(p) (int payload mod p)

The set-valued side (folds of several terms, represented exactly) lives in
`sumsets`; this module provides the scalar operations plus closed-form
predicates for "0 in x1 + ... + xk" which the fold oracle cross-checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from . import config
from .errors import MismatchError

TAU = 2.0 * math.pi

KINDS = ("krasner", "sign", "tropical", "triangle", "phase", "rational", "gf")
_FLOAT_KINDS = ("triangle", "phase")
_FIELD_KINDS = ("rational", "gf")


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class Hyperfield:
    """Identity of a hyperfield: kind, optional characteristic, involution."""

    kind: str
    p: Optional[int] = None
    involution: str = "identity"

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown hyperfield kind {self.kind!r}")
        if self.kind == "gf":
            if self.p is None or not _is_prime(self.p):
                raise ValueError("gf requires a prime modulus")
        elif self.p is not None:
            raise ValueError(f"{self.kind} takes no modulus")
        if self.involution not in ("identity", "conjugation"):
            raise ValueError(f"unknown involution {self.involution!r}")
        if self.involution == "conjugation" and self.kind != "phase":
            raise ValueError("conjugation is only defined for the phase hyperfield")

    # -- basic structure -------------------------------------------------

    @property
    def is_finite(self) -> bool:
        return self.kind in ("krasner", "sign", "gf")

    @property
    def is_field(self) -> bool:
        return self.kind in _FIELD_KINDS

    @property
    def uses_floats(self) -> bool:
        return self.kind in _FLOAT_KINDS

    def zero(self) -> "HFElement":
        return HFElement(self, _ZERO_PAYLOAD[self.kind](self))

    def one(self) -> "HFElement":
        return HFElement(self, _ONE_PAYLOAD[self.kind](self))

    def element(self, raw) -> "HFElement":
        """Build an element from a raw payload, validating and normalising.

        For the phase hyperfield: 0 (or None) is the zero element, the
        ints 1 and -1 are the two real units, and any other number is an
        angle in radians.
        """
        return HFElement(self, _normalise(self, raw))

    def elements(self) -> list:
        """All elements (finite hyperfields only)."""
        if self.kind == "krasner":
            return [self.element(0), self.element(1)]
        if self.kind == "sign":
            return [self.element(0), self.element(1), self.element(-1)]
        if self.kind == "gf":
            return [self.element(i) for i in range(self.p)]
        raise ValueError(f"{self} is not finite")

    def __str__(self) -> str:
        if self.kind == "gf":
            return f"gf({self.p})"
        if self.kind == "phase" and self.involution == "conjugation":
            return "phase"
        if self.kind == "phase":
            return "phase[identity]"
        return self.kind


def _normalise(hf: Hyperfield, raw):
    kind = hf.kind
    if isinstance(raw, HFElement):
        if raw.hyperfield != hf:
            raise MismatchError(f"element of {raw.hyperfield} given to {hf}")
        return raw.value
    if kind == "krasner":
        if raw in (0, 1):
            return int(raw)
        raise ValueError(f"krasner payload must be 0 or 1, got {raw!r}")
    if kind == "sign":
        if raw in (-1, 0, 1):
            return int(raw)
        raise ValueError(f"sign payload must be -1, 0 or 1, got {raw!r}")
    if kind == "tropical":
        value = _to_fraction(raw)
        if value < 0:
            raise ValueError(f"tropical payload must be nonnegative, got {raw!r}")
        return value
    if kind == "triangle":
        value = float(raw)
        if not value >= 0 or math.isinf(value) or math.isnan(value):
            raise ValueError(f"triangle payload must be a finite nonnegative number, got {raw!r}")
        return value
    if kind == "phase":
        if raw is None:
            return None
        if isinstance(raw, int):
            if raw == 0:
                return None
            if raw == 1:
                return 0.0
            if raw == -1:
                return math.pi
            raise ValueError(f"phase payload must be 0, +-1 or an angle, got {raw!r}")
        value = float(raw)
        if math.isinf(value) or math.isnan(value):
            raise ValueError(f"phase angle must be finite, got {raw!r}")
        if value == 0.0:
            return None
        return norm_angle(value)
    if kind == "rational":
        return _to_fraction(raw)
    if kind == "gf":
        if isinstance(raw, Fraction):
            if raw.denominator != 1:
                raise ValueError(f"gf payload must be an integer, got {raw!r}")
            raw = raw.numerator
        if not isinstance(raw, int):
            raise ValueError(f"gf payload must be an integer, got {raw!r}")
        return raw % hf.p
    raise AssertionError(kind)


def _to_fraction(raw) -> Fraction:
    if isinstance(raw, Fraction):
        return raw
    if isinstance(raw, int):
        return Fraction(raw)
    if isinstance(raw, str):
        return Fraction(raw)
    if isinstance(raw, float):
        # go through the shortest decimal repr so 0.1 means 1/10
        return Fraction(repr(raw))
    raise ValueError(f"cannot read a rational from {raw!r}")


def norm_angle(theta: float) -> float:
    """Reduce an angle to [0, 2pi), snapping values near 2pi to 0."""
    theta = math.fmod(theta, TAU)
    if theta < 0:
        theta += TAU
    if TAU - theta <= config.get_eps():
        return 0.0
    return theta


_ZERO_PAYLOAD = {
    "krasner": lambda hf: 0,
    "sign": lambda hf: 0,
    "tropical": lambda hf: Fraction(0),
    "triangle": lambda hf: 0.0,
    "phase": lambda hf: None,
    "rational": lambda hf: Fraction(0),
    "gf": lambda hf: 0,
}

_ONE_PAYLOAD = {
    "krasner": lambda hf: 1,
    "sign": lambda hf: 1,
    "tropical": lambda hf: Fraction(1),
    "triangle": lambda hf: 1.0,
    "phase": lambda hf: 0.0,
    "rational": lambda hf: Fraction(1),
    "gf": lambda hf: 1,
}


@dataclass(frozen=True)
class HFElement:
    """An element of a hyperfield.  Treat as immutable."""

    hyperfield: Hyperfield
    value: object

    @property
    def is_zero(self) -> bool:
        if self.hyperfield.kind == "phase":
            return self.value is None
        return self.value == 0

    def __mul__(self, other: "HFElement") -> "HFElement":
        return mul(self, other)

    def __neg__(self) -> "HFElement":
        return neg(self)

    def __repr__(self) -> str:
        return f"<{self.hyperfield}:{self.value}>"


# -- constructors for the built-in hyperfields ---------------------------

KRASNER = Hyperfield("krasner")
SIGN = Hyperfield("sign")
TROPICAL = Hyperfield("tropical")
TRIANGLE = Hyperfield("triangle")
PHASE = Hyperfield("phase", involution="conjugation")
PHASE_PLAIN = Hyperfield("phase", involution="identity")
RATIONALS = Hyperfield("rational")


def gf(p: int) -> Hyperfield:
    return Hyperfield("gf", p=p)


def phase(involution: str = "conjugation") -> Hyperfield:
    return Hyperfield("phase", involution=involution)


# -- scalar arithmetic ----------------------------------------------------


def _require_same(a: HFElement, b: HFElement) -> Hyperfield:
    if a.hyperfield != b.hyperfield:
        raise MismatchError(f"mixed hyperfields {a.hyperfield} and {b.hyperfield}")
    return a.hyperfield


def mul(a: HFElement, b: HFElement) -> HFElement:
    hf = _require_same(a, b)
    if a.is_zero or b.is_zero:
        return hf.zero()
    kind = hf.kind
    if kind == "krasner":
        return a
    if kind in ("sign", "tropical", "triangle", "rational"):
        return HFElement(hf, a.value * b.value)
    if kind == "phase":
        return HFElement(hf, norm_angle(a.value + b.value))
    if kind == "gf":
        return HFElement(hf, (a.value * b.value) % hf.p)
    raise AssertionError(kind)


def neg(a: HFElement) -> HFElement:
    """The hyperinverse: the unique b with 0 in a + b."""
    hf = a.hyperfield
    if a.is_zero:
        return a
    kind = hf.kind
    if kind in ("krasner", "tropical", "triangle"):
        return a
    if kind == "sign":
        return HFElement(hf, -a.value)
    if kind == "phase":
        return HFElement(hf, norm_angle(a.value + math.pi))
    if kind == "rational":
        return HFElement(hf, -a.value)
    if kind == "gf":
        return HFElement(hf, (-a.value) % hf.p)
    raise AssertionError(kind)


def inv(a: HFElement) -> HFElement:
    """Multiplicative inverse of a nonzero element."""
    hf = a.hyperfield
    if a.is_zero:
        raise ZeroDivisionError(f"no inverse of zero in {hf}")
    kind = hf.kind
    if kind in ("krasner", "sign"):
        return a
    if kind in ("tropical", "rational"):
        return HFElement(hf, 1 / a.value)
    if kind == "triangle":
        return HFElement(hf, 1.0 / a.value)
    if kind == "phase":
        return HFElement(hf, norm_angle(-a.value))
    if kind == "gf":
        return HFElement(hf, pow(a.value, -1, hf.p))
    raise AssertionError(kind)


def invol(a: HFElement) -> HFElement:
    """The involution used in inner products (conjugation on phase)."""
    if a.hyperfield.involution == "conjugation" and not a.is_zero:
        return HFElement(a.hyperfield, norm_angle(-a.value))
    return a


def signed(a: HFElement, parity: int) -> HFElement:
    """(-1)**parity times a."""
    return neg(a) if parity % 2 else a


def eq(a: HFElement, b: HFElement) -> bool:
    """Semantic equality (tolerance-aware on float-backed hyperfields)."""
    hf = _require_same(a, b)
    if hf.kind == "triangle":
        return abs(a.value - b.value) <= config.get_eps()
    if hf.kind == "phase":
        if a.is_zero or b.is_zero:
            return a.is_zero and b.is_zero
        return angle_close(a.value, b.value)
    return a.value == b.value


def angle_close(x: float, y: float) -> bool:
    d = abs(x - y)
    if d > math.pi:
        d = TAU - d
    return d <= config.get_eps()


# -- hypersums ------------------------------------------------------------


def sum_set(a: HFElement, b: HFElement):
    """The hypersum a + b as an exact symbolic set."""
    return fold_sum([a, b])


def fold_sum(terms: Iterable[HFElement]):
    """Left fold of binary hypersums, as an exact symbolic set.

    The fold is the ground truth for n-ary sums; `zero_in_sum` and
    `member_of_sum` are closed forms validated against it.
    """
    from . import sumsets

    return sumsets.fold(list(terms))


def zero_in_sum(terms: Iterable[HFElement]) -> bool:
    """Whether 0 lies in the iterated hypersum of the terms."""
    terms = list(terms)
    if not terms:
        raise ValueError("empty term list")
    hf = terms[0].hyperfield
    for t in terms[1:]:
        _require_same(terms[0], t)
    kind = hf.kind
    if kind == "krasner":
        return sum(1 for t in terms if not t.is_zero) != 1
    if kind == "sign":
        values = {t.value for t in terms if not t.is_zero}
        return values in (set(), {1, -1})
    if kind == "tropical":
        top = max(t.value for t in terms)
        if top == 0:
            return True
        return sum(1 for t in terms if t.value == top) >= 2
    if kind in _FIELD_KINDS:
        total = sum(t.value for t in terms)
        if kind == "gf":
            return total % hf.p == 0
        return total == 0
    if kind == "triangle":
        eps = config.get_eps()
        if len(terms) == 1:
            return terms[0].value <= eps
        top = max(t.value for t in terms)
        rest = sum(t.value for t in terms) - top
        return top <= rest + eps
    if kind == "phase":
        return _zero_in_phase_sum([t.value for t in terms if not t.is_zero])
    raise AssertionError(kind)


def _phase_distinct(angles: list) -> list:
    distinct: list = []
    for theta in angles:
        if not any(angle_close(theta, d) for d in distinct):
            distinct.append(theta)
    return distinct


def _phase_max_gap(distinct: list):
    """Largest cyclic gap between consecutive directions, with its ends.

    Returns (gap, lo, hi): the uncovered open sector runs counterclockwise
    from lo to hi, so the directions all lie on the closed arc from hi
    counterclockwise back around to lo.
    """
    ordered = sorted(distinct)
    worst = ordered[0] + TAU - ordered[-1]
    lo, hi = ordered[-1], ordered[0]
    for a, b in zip(ordered, ordered[1:]):
        if b - a > worst:
            worst, lo, hi = b - a, a, b
    return worst, lo, hi


def _zero_in_phase_sum(angles: list) -> bool:
    """0 in the hypersum of unit vectors iff 0 is a nonnegative combination
    of them with not all weights zero; equivalently, the distinct directions
    do not all fit inside an open half-plane, i.e. no cyclic gap exceeds pi."""
    if not angles:
        return True
    eps = config.get_eps()
    distinct = _phase_distinct(angles)
    if len(distinct) == 1:
        return False
    worst, _, _ = _phase_max_gap(distinct)
    return worst <= math.pi + eps


def _phase_nonzero_member(target: float, angles: list) -> bool:
    """Whether the direction `target` is a strictly positive combination of
    the given unit vectors."""
    eps = config.get_eps()
    distinct = _phase_distinct(angles)
    if len(distinct) == 1:
        return angle_close(target, distinct[0])
    worst, lo, hi = _phase_max_gap(distinct)
    if worst < math.pi - eps:
        # The directions positively span the plane.
        return True
    if worst <= math.pi + eps:
        # Antipodal extremes; the covered sector is a closed half-plane.
        interior = [
            d for d in distinct
            if not angle_close(d, lo) and not angle_close(d, hi)
        ]
        if not interior:
            return angle_close(target, lo) or angle_close(target, hi)
        return _angle_in_open_arc(target, hi, lo)
    # All directions inside an open half-plane: an open sector, ends excluded.
    return _angle_in_open_arc(target, hi, lo)


def _angle_in_open_arc(theta: float, start: float, end: float) -> bool:
    """Whether theta lies strictly inside the arc running counterclockwise
    from start to end, staying clear of both ends by the tolerance."""
    eps = config.get_eps()
    span = (end - start) % TAU
    offset = (theta - start) % TAU
    return eps < offset < span - eps


def member_of_sum(z: HFElement, terms: Iterable[HFElement]) -> bool:
    """Whether z lies in the n-ary hypersum of the terms.

    For reversible hyperfields with associative folds this is the rule
    "z in sum(terms) iff 0 in sum(terms + [-z])"; the phase hyperfield gets
    a direct positive-combination test instead, matching its n-ary sum.
    """
    terms = list(terms)
    if not terms:
        raise ValueError("empty term list")
    _require_same(z, terms[0])
    if z.hyperfield.kind == "phase" and not z.is_zero:
        angles = [t.value for t in terms if not t.is_zero]
        if not angles:
            return False
        return _phase_nonzero_member(z.value, angles)
    return zero_in_sum(terms + [neg(z)])


def elimination_member(z: HFElement, terms: Iterable[HFElement]) -> bool:
    """Coordinate membership in the form the circuit axiom checkers use:
    0 in neg(z) + terms, under the n-ary zero rule.

    Whenever the n-ary hypersum is the iterated binary fold (every built-in
    except phase) this equals member_of_sum, by reversibility.  Over phase
    the n-ary rule is not the fold and reversibility fails at boundary
    configurations, so this reading is strictly weaker there: it also
    accepts z when 0 lies in the hypersum of the terms alone, and it
    accepts the ends of open arcs.  Signatures derived from weak-valid
    alternating functions over phase satisfy the axioms only in this form.
    """
    terms = list(terms)
    if not terms:
        raise ValueError("empty term list")
    _require_same(z, terms[0])
    return zero_in_sum(terms + [neg(z)])


def sample_element(hf: Hyperfield, rng, nonzero: bool = False) -> HFElement:
    """A pseudo-random element, for axiom sampling and property tests."""
    kind = hf.kind
    if hf.is_finite:
        pool = hf.elements()
        if nonzero:
            pool = [x for x in pool if not x.is_zero]
        return rng.choice(pool)
    if kind == "tropical":
        if not nonzero and rng.random() < 0.15:
            return hf.zero()
        num = rng.randint(1, 8)
        den = rng.choice([1, 1, 2, 4])
        return hf.element(Fraction(num, den))
    if kind == "triangle":
        if not nonzero and rng.random() < 0.15:
            return hf.zero()
        if rng.random() < 0.5:
            # grid values keep degenerate ties likely
            return hf.element(rng.choice([0.5, 1.0, 1.5, 2.0, 3.0, 4.0]) * rng.randint(1, 4))
        return hf.element(rng.uniform(0.05, 8.0))
    if kind == "phase":
        if not nonzero and rng.random() < 0.15:
            return hf.zero()
        return hf.element(rng.uniform(0.0, TAU) + 1e-3)
    if kind == "rational":
        if not nonzero and rng.random() < 0.15:
            return hf.zero()
        num = rng.randint(-9, 9) or 1
        return hf.element(Fraction(num, rng.randint(1, 9)))
    raise AssertionError(kind)
