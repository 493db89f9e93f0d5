"""Exact symbolic representations of iterated hypersums.

A hypersum of finitely many elements is represented exactly, per hyperfield
family:

  finite kinds and fields   explicit finite set of payloads
  tropical                  a point {a} or a down-set {c : c <= a}
  triangle                  a finite union of disjoint closed intervals
  phase                     a zero flag, isolated unit points, and open
                            counterclockwise arcs (start, length)

`fold` is the ground-truth n-ary hypersum, kept closed inside these
representations: a left fold of the binary rule, except that for phase the
zero flag of a sum of three or more terms is decided globally from the term
directions (see `fold`).  The closed-form membership predicates in
`hyperfields` are validated against it by the test suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import config
from .errors import MismatchError
from .hyperfields import HFElement, Hyperfield, TAU, angle_close, norm_angle

GROUP = {
    "krasner": "finite",
    "sign": "finite",
    "gf": "finite",
    "rational": "finite",
    "tropical": "tropical",
    "triangle": "interval",
    "phase": "arc",
}


@dataclass(frozen=True)
class SumSet:
    """An exact hypersum value.  `data` is shaped by the hyperfield family."""

    hyperfield: Hyperfield
    data: object

    @property
    def group(self) -> str:
        return GROUP[self.hyperfield.kind]

    # -- membership -------------------------------------------------------

    def contains(self, el: HFElement) -> bool:
        if el.hyperfield != self.hyperfield:
            raise MismatchError("element from a different hyperfield")
        return self._contains_payload(el.value)

    def _contains_payload(self, payload) -> bool:
        group = self.group
        if group == "finite":
            return payload in self.data
        if group == "tropical":
            tag, a = self.data
            return payload <= a if tag == "down" else payload == a
        if group == "interval":
            eps = config.get_eps()
            return any(lo - eps <= payload <= hi + eps for lo, hi in self.data)
        if group == "arc":
            has_zero, points, arcs = self.data
            if payload is None:
                return has_zero
            if any(angle_close(payload, p) for p in points):
                return True
            eps = config.get_eps()
            for start, length in arcs:
                d = _ccw(start, payload)
                if eps < d < length - eps:
                    return True
            return False
        raise AssertionError(group)

    def contains_zero(self) -> bool:
        group = self.group
        if group == "finite":
            zero = self.hyperfield.zero().value
            return zero in self.data
        if group == "tropical":
            tag, a = self.data
            return tag == "down" or a == 0
        if group == "interval":
            return self.data[0][0] <= config.get_eps()
        if group == "arc":
            return self.data[0]
        raise AssertionError(group)

    def has_nonzero(self) -> bool:
        group = self.group
        if group == "finite":
            zero = self.hyperfield.zero().value
            return any(p != zero for p in self.data)
        if group == "tropical":
            return self.data[1] > 0
        if group == "interval":
            return any(hi > config.get_eps() for _, hi in self.data)
        if group == "arc":
            _, points, arcs = self.data
            return bool(points) or bool(arcs)
        raise AssertionError(group)

    def closure(self) -> "SumSet":
        """The topological closure of the set.

        Only the phase representation has non-closed pieces (open arcs);
        their ends become points of the set.  Every other representation is
        already closed, so this is the identity there.
        """
        if self.group != "arc" or not self.data[2]:
            return self
        has_zero, points, arcs = self.data
        pts = list(points)
        for start, length in arcs:
            pts.append(start)
            pts.append(norm_angle(start + length))
        return SumSet(self.hyperfield, _canon_phase(has_zero, pts, list(arcs)))

    # -- algebra ----------------------------------------------------------

    def add_term(self, el: HFElement) -> "SumSet":
        """Pointwise hypersum of this set with a single element."""
        if el.hyperfield != self.hyperfield:
            raise MismatchError("element from a different hyperfield")
        if el.is_zero:
            return self
        group = self.group
        if group == "finite":
            out = set()
            for payload in self.data:
                out |= _finite_binary(self.hyperfield, payload, el.value)
            return SumSet(self.hyperfield, frozenset(out))
        if group == "tropical":
            tag, a = self.data
            b = el.value
            if tag == "down":
                return _trop(self.hyperfield, "down", a) if b <= a else _trop(self.hyperfield, "point", b)
            if a == b:
                return _trop(self.hyperfield, "down", a)
            return _trop(self.hyperfield, "point", max(a, b))
        if group == "interval":
            b = el.value
            pieces = []
            for lo, hi in self.data:
                gap = max(lo - b, b - hi, 0.0)
                pieces.append((gap, hi + b))
            return SumSet(self.hyperfield, _canon_intervals(pieces))
        if group == "arc":
            has_zero, points, arcs = self.data
            b = el.value
            z, pts, acs = False, [], []
            if has_zero:
                pts.append(b)
            for p in points:
                z2, pts2, acs2 = _phase_point_plus(p, b)
                z |= z2
                pts += pts2
                acs += acs2
            for arc in arcs:
                z2, pts2, acs2 = _phase_arc_plus(arc, b)
                z |= z2
                pts += pts2
                acs += acs2
            return SumSet(self.hyperfield, _canon_phase(z, pts, acs))
        raise AssertionError(group)

    def scale(self, el: HFElement) -> "SumSet":
        """Multiply every member by a fixed nonzero element."""
        if el.hyperfield != self.hyperfield:
            raise MismatchError("element from a different hyperfield")
        if el.is_zero:
            raise ValueError("scaling a hypersum by zero")
        group = self.group
        hf = self.hyperfield
        if group == "finite":
            return SumSet(hf, frozenset((hf.element(p) * el).value if p != hf.zero().value else p
                                        for p in self.data))
        if group == "tropical":
            tag, a = self.data
            return _trop(hf, tag, a * el.value)
        if group == "interval":
            c = el.value
            return SumSet(hf, _canon_intervals([(lo * c, hi * c) for lo, hi in self.data]))
        if group == "arc":
            has_zero, points, arcs = self.data
            rot = el.value
            return SumSet(hf, _canon_phase(
                has_zero,
                [norm_angle(p + rot) for p in points],
                [(norm_angle(s + rot), length) for s, length in arcs]))
        raise AssertionError(group)

    def mul(self, other: "SumSet") -> "SumSet":
        """Pointwise product of two hypersum sets."""
        if other.hyperfield != self.hyperfield:
            raise MismatchError("sets over different hyperfields")
        group = self.group
        hf = self.hyperfield
        if group == "finite":
            out = set()
            for a in self.data:
                for b in other.data:
                    out.add((hf.element(a) * hf.element(b)).value)
            return SumSet(hf, frozenset(out))
        if group == "tropical":
            tag_a, a = self.data
            tag_b, b = other.data
            value = a * b
            if value == 0:
                return _trop(hf, "point", Fraction(0))
            tag = "down" if "down" in (tag_a, tag_b) else "point"
            return _trop(hf, tag, value)
        if group == "interval":
            pieces = [(lo1 * lo2, hi1 * hi2)
                      for lo1, hi1 in self.data for lo2, hi2 in other.data]
            return SumSet(hf, _canon_intervals(pieces))
        if group == "arc":
            z1, pts1, arcs1 = self.data
            z2, pts2, arcs2 = other.data
            z = z1 or z2
            pts = [norm_angle(p + q) for p in pts1 for q in pts2]
            acs = []
            for p in pts1:
                acs += [(norm_angle(p + s), length) for s, length in arcs2]
            for q in pts2:
                acs += [(norm_angle(q + s), length) for s, length in arcs1]
            for s1, l1 in arcs1:
                for s2, l2 in arcs2:
                    total = l1 + l2
                    start = norm_angle(s1 + s2)
                    if total > TAU + config.get_eps():
                        acs.append((0.0, TAU))
                        pts.append(0.0)
                    else:
                        acs.append((start, min(total, TAU)))
            return SumSet(hf, _canon_phase(z, pts, acs))
        raise AssertionError(group)

    def intersect(self, other: "SumSet") -> Optional["SumSet"]:
        """Intersection, or None when empty."""
        if other.hyperfield != self.hyperfield:
            raise MismatchError("sets over different hyperfields")
        group = self.group
        hf = self.hyperfield
        if group == "finite":
            out = self.data & other.data
            return SumSet(hf, out) if out else None
        if group == "tropical":
            tag_a, a = self.data
            tag_b, b = other.data
            if tag_a == "point" and tag_b == "point":
                return self if a == b else None
            if tag_a == "point":
                return self if a <= b else None
            if tag_b == "point":
                return other if b <= a else None
            return _trop(hf, "down", min(a, b))
        if group == "interval":
            eps = config.get_eps()
            pieces = []
            for lo1, hi1 in self.data:
                for lo2, hi2 in other.data:
                    lo, hi = max(lo1, lo2), min(hi1, hi2)
                    if hi >= lo - eps:
                        pieces.append((min(lo, hi), max(lo, hi)))
            if not pieces:
                return None
            return SumSet(hf, _canon_intervals(pieces))
        if group == "arc":
            z1, pts1, arcs1 = self.data
            z2, pts2, arcs2 = other.data
            z = z1 and z2
            pts = [p for p in pts1 if other._contains_payload(p)]
            pts += [q for q in pts2 if self._contains_payload(q)]
            acs = []
            for a1 in arcs1:
                for a2 in arcs2:
                    acs += _arc_intersect(a1, a2)
            if not z and not pts and not acs:
                return None
            return SumSet(hf, _canon_phase(z, pts, acs))
        raise AssertionError(group)

    def equals(self, other: "SumSet") -> bool:
        if other.hyperfield != self.hyperfield:
            raise MismatchError("sets over different hyperfields")
        group = self.group
        if group in ("finite", "tropical"):
            return self.data == other.data
        eps = config.get_eps()
        if group == "interval":
            if len(self.data) != len(other.data):
                return False
            return all(abs(lo1 - lo2) <= eps and abs(hi1 - hi2) <= eps
                       for (lo1, hi1), (lo2, hi2) in zip(self.data, other.data))
        if group == "arc":
            z1, pts1, arcs1 = self.data
            z2, pts2, arcs2 = other.data
            if z1 != z2 or len(pts1) != len(pts2) or len(arcs1) != len(arcs2):
                return False
            if not all(angle_close(p, q) for p, q in zip(pts1, pts2)):
                return False
            return all(angle_close(s1, s2) and abs(l1 - l2) <= eps
                       for (s1, l1), (s2, l2) in zip(arcs1, arcs2))
        raise AssertionError(group)

    def sample(self) -> list:
        """Representative payloads of this set (zero included when present)."""
        group = self.group
        if group == "finite":
            return sorted(self.data, key=repr)
        if group == "tropical":
            tag, a = self.data
            if tag == "point":
                return [a]
            out = [Fraction(0), a]
            if a > 0:
                out.append(a / 2)
            return out
        if group == "interval":
            out = []
            for lo, hi in self.data:
                out.append(lo)
                if hi > lo:
                    out += [(lo + hi) / 2.0, hi]
            return out
        if group == "arc":
            has_zero, points, arcs = self.data
            out: list = [None] if has_zero else []
            out += list(points)
            out += [norm_angle(s + length / 2.0) for s, length in arcs]
            return out
        raise AssertionError(group)

    def describe(self) -> dict:
        group = self.group
        if group == "finite":
            return {"kind": "set", "members": sorted((repr(p) for p in self.data))}
        if group == "tropical":
            tag, a = self.data
            return {"kind": tag, "value": str(a)}
        if group == "interval":
            return {"kind": "intervals", "pieces": [[lo, hi] for lo, hi in self.data]}
        if group == "arc":
            has_zero, points, arcs = self.data
            return {"kind": "arcs", "zero": has_zero,
                    "points": list(points),
                    "arcs": [[s, length] for s, length in arcs]}
        raise AssertionError(group)


# -- construction ----------------------------------------------------------


def singleton(el: HFElement) -> SumSet:
    hf = el.hyperfield
    group = GROUP[hf.kind]
    if group == "finite":
        return SumSet(hf, frozenset([el.value]))
    if group == "tropical":
        return _trop(hf, "point", el.value)
    if group == "interval":
        return SumSet(hf, ((el.value, el.value),))
    if group == "arc":
        if el.is_zero:
            return SumSet(hf, (True, (), ()))
        return SumSet(hf, (False, (el.value,), ()))
    raise AssertionError(group)


def fold(terms: list) -> SumSet:
    """The n-ary hypersum of the terms.

    For every hyperfield except phase this is the left fold of the binary
    rule, which is associative on these representations.  For phase the
    nonzero part is still the folded arc set (the phases of strictly
    positive combinations), but whether 0 belongs is decided globally: 0
    lies in the sum iff it is a nonnegative combination of the terms with
    not all weights zero, i.e. iff the directions do not fit inside an open
    half-plane.  Folding the binary rule would lose 0 from sums such as
    x + (-x) + y, where the cancelling pair is killed by the third term.
    """
    if not terms:
        raise ValueError("empty term list")
    hf = terms[0].hyperfield
    for t in terms:
        if t.hyperfield != hf:
            raise MismatchError("mixed hyperfields in a hypersum")
    acc = singleton(terms[0])
    for t in terms[1:]:
        acc = acc.add_term(t)
    if hf.kind == "phase" and len(terms) > 2:
        from .hyperfields import _zero_in_phase_sum

        has_zero = _zero_in_phase_sum([t.value for t in terms if not t.is_zero])
        _, points, arcs = acc.data
        acc = SumSet(hf, _canon_phase(has_zero, list(points), list(arcs)))
    return acc


def difference_sample(a: SumSet, b: SumSet) -> tuple:
    """(found, payload): a payload in a \\ b, if any.

    Used to extract concrete witnesses when two hypersum expressions that
    ought to agree do not.  For interval and arc sets the search refines
    `a` by the boundaries of `b` and probes piece midpoints.
    """
    if b.hyperfield != a.hyperfield:
        raise MismatchError("sets over different hyperfields")
    group = a.group
    if group == "finite":
        out = a.data - b.data
        return (True, sorted(out, key=repr)[0]) if out else (False, None)
    if group == "tropical":
        for payload in a.sample():
            if not b._contains_payload(payload):
                return True, payload
        tag_a, va = a.data
        tag_b, vb = b.data
        if tag_a == "down" and tag_b == "point" and va > 0:
            probe = va / 3 if va / 3 != vb else va / 5
            if not b._contains_payload(probe):
                return True, probe
        return False, None
    if group == "interval":
        cuts = set()
        for lo, hi in b.data:
            cuts.add(lo)
            cuts.add(hi)
        for lo, hi in a.data:
            marks = sorted({lo, hi} | {c for c in cuts if lo < c < hi})
            probes = list(marks)
            probes += [(x + y) / 2.0 for x, y in zip(marks, marks[1:])]
            for probe in probes:
                if not b._contains_payload(probe):
                    return True, probe
        return False, None
    if group == "arc":
        za, pa, aa = a.data
        zb = b.data[0]
        if za and not zb:
            return True, None
        for p in pa:
            if not b._contains_payload(p):
                return True, p
        cuts = []
        for s, length in b.data[2]:
            cuts += [s, norm_angle(s + length)]
        cuts += list(b.data[1])
        eps = config.get_eps()
        for s, length in aa:
            marks = sorted({0.0, length} |
                           {d for d in (_ccw(s, c) for c in cuts) if eps < d < length - eps})
            probes = [(x + y) / 2.0 for x, y in zip(marks, marks[1:])]
            for off in probes:
                payload = norm_angle(s + off)
                if a._contains_payload(payload) and not b._contains_payload(payload):
                    return True, payload
        return False, None
    raise AssertionError(group)


# -- finite kinds ------------------------------------------------------------


def _finite_binary(hf: Hyperfield, a, b) -> set:
    """Binary hypersum on raw payloads for the finite kinds and fields."""
    kind = hf.kind
    zero = 0 if kind != "rational" else Fraction(0)
    if kind == "krasner":
        if a == 0:
            return {b}
        if b == 0:
            return {a}
        return {0, 1}
    if kind == "sign":
        if a == 0:
            return {b}
        if b == 0:
            return {a}
        if a == b:
            return {a}
        return {-1, 0, 1}
    if kind == "gf":
        return {(a + b) % hf.p}
    if kind == "rational":
        return {a + b}
    raise AssertionError(kind)


def _trop(hf: Hyperfield, tag: str, value: Fraction) -> SumSet:
    if value == 0:
        tag = "point"
    return SumSet(hf, (tag, value))


# -- interval algebra --------------------------------------------------------


def _canon_intervals(pieces: list) -> tuple:
    eps = config.get_eps()
    cleaned = sorted((max(lo, 0.0), hi) for lo, hi in pieces)
    merged: list = []
    for lo, hi in cleaned:
        if merged and lo <= merged[-1][1] + eps:
            merged[-1][1] = max(merged[-1][1], hi)
        else:
            merged.append([lo, hi])
    return tuple((lo, hi) for lo, hi in merged)


# -- arc algebra -------------------------------------------------------------


def _ccw(start: float, theta: float) -> float:
    """Counterclockwise distance from start to theta, in [0, 2pi)."""
    d = math.fmod(theta - start, TAU)
    if d < 0:
        d += TAU
    return d


def _phase_point_plus(p: float, b: float) -> tuple:
    """p + b for unit payloads: (zero?, points, arcs)."""
    d = _ccw(p, b)
    eps = config.get_eps()
    if d <= eps or TAU - d <= eps:
        return False, [p], []
    if abs(d - math.pi) <= eps:
        return True, [p, b], []
    if d < math.pi:
        return False, [], [(p, d)]
    return False, [], [(b, TAU - d)]


def _phase_arc_plus(arc: tuple, b: float) -> tuple:
    """Hypersum of an open arc with a unit element b.

    Work in coordinates centered at b.  For arc directions c within the open
    half circle after b the contribution is the open arc from b to c; for
    directions in the half circle before b it runs from c to b; the
    direction b itself contributes the point b and the antipode -b
    contributes {0, b, -b}.
    """
    s, length = arc
    eps = config.get_eps()
    a0 = _ccw(b, s)
    # unrolled components of the arc in b-centered coordinates
    if a0 + length <= TAU:
        comps = [(a0, a0 + length)]
    else:
        comps = [(a0, TAU), (0.0, a0 + length - TAU)]
    zero = False
    points: list = []
    arcs: list = []
    if a0 < TAU - eps and a0 + length > TAU + eps:
        points.append(b)  # b lies strictly inside the arc
    for lo, hi in comps:
        # The antipode of b must lie strictly inside the open arc to give a
        # cancellation; landing on an excluded endpoint (up to tolerance)
        # does not.
        if lo + eps < math.pi < hi - eps:
            zero = True
            points += [b, norm_angle(b + math.pi)]
        cut_lo, cut_hi = max(lo, 0.0), min(hi, math.pi)
        if cut_hi - cut_lo > eps:
            arcs.append((b, cut_hi))
        cut_lo, cut_hi = max(lo, math.pi), min(hi, TAU)
        if cut_hi - cut_lo > eps:
            arcs.append((norm_angle(b + cut_lo), TAU - cut_lo))
    return zero, points, arcs


def _arc_intersect(a: tuple, b: tuple) -> list:
    """Intersection pieces of two open arcs."""
    s1, l1 = a
    s2, l2 = b
    eps = config.get_eps()
    d = _ccw(s1, s2)
    comps = [(d, d + l2)] if d + l2 <= TAU else [(d, TAU), (0.0, d + l2 - TAU)]
    out = []
    for lo, hi in comps:
        cut_lo, cut_hi = max(lo, 0.0), min(hi, l1)
        if cut_hi - cut_lo > eps:
            out.append((norm_angle(s1 + cut_lo), cut_hi - cut_lo))
    return out


def _canon_phase(has_zero: bool, points: list, arcs: list) -> tuple:
    eps = config.get_eps()
    pts: list = []
    for p in points:
        p = norm_angle(p)
        if not any(angle_close(p, q) for q in pts):
            pts.append(p)
    acs = [(norm_angle(s), min(length, TAU)) for s, length in arcs if length > eps]

    def inside(arc, theta):
        d = _ccw(arc[0], theta)
        return eps < d < arc[1] - eps

    changed = True
    while changed:
        changed = False
        # merge strictly overlapping arcs
        for i in range(len(acs)):
            for j in range(len(acs)):
                if i == j:
                    continue
                s1, l1 = acs[i]
                s2, l2 = acs[j]
                d = _ccw(s1, s2)
                if d < l1 - eps or d <= eps:
                    new_len = max(l1, d + l2)
                    keep = [acs[k] for k in range(len(acs)) if k not in (i, j)]
                    if new_len > TAU + eps:
                        keep.append((0.0, TAU))
                        pts.append(0.0)
                    else:
                        keep.append((s1, min(new_len, TAU)))
                    acs = keep
                    changed = True
                    break
            if changed:
                break
        if changed:
            continue
        # fuse arcs that touch at a point of the set
        for pi, p in enumerate(pts):
            left = right = None
            for k, (s, length) in enumerate(acs):
                if angle_close(norm_angle(s + length), p):
                    left = k
                if angle_close(s, p):
                    right = k
            if left is not None and left == right:
                # a full-length arc closed by its own start point: whole circle
                if not (acs[left] == (0.0, TAU) and p == 0.0):
                    acs[left] = (0.0, TAU)
                    pts[pi] = 0.0
                    changed = True
                    break
                continue
            if left is not None and right is not None and left != right:
                s1, l1 = acs[left]
                l2 = acs[right][1]
                keep = [acs[k] for k in range(len(acs)) if k not in (left, right)]
                total = l1 + l2
                if total > TAU + eps:
                    keep.append((0.0, TAU))
                    pts.append(0.0)
                else:
                    keep.append((s1, min(total, TAU)))
                acs = keep
                del pts[pi]
                changed = True
                break
        if changed:
            continue
        # drop points swallowed by arc interiors
        for pi, p in enumerate(pts):
            if any(inside(arc, p) for arc in acs):
                del pts[pi]
                changed = True
                break

    dedup: list = []
    for p in pts:
        if not any(angle_close(p, q) for q in dedup):
            dedup.append(p)
    return (bool(has_zero), tuple(sorted(dedup)), tuple(sorted(acs)))
