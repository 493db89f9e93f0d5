"""Classical matroids presented by their circuit sets.

Everything here is exhaustive and exact; ground sets are capped (see
`config.MAX_GROUND_SIZE`) because several operations enumerate subsets.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import FrozenSet, Iterable, Optional, Tuple

from . import config
from .errors import InputError
from .vectors import GroundSet


@dataclass
class CircuitViolation:
    rule: str
    detail: dict

    def as_json(self) -> dict:
        return {"rule": self.rule, **{k: sorted(v) if isinstance(v, (set, frozenset)) else v
                                      for k, v in self.detail.items()}}


def validate_circuits(ground: GroundSet, circuits: Iterable[frozenset]) -> Optional[CircuitViolation]:
    """Check the circuit axioms for a finite matroid.

    Empty circuits and nested circuits are rejected, then elimination is
    verified on every pair sharing an element (a stronger pass than the
    modular pairs alone, which is what makes the construction sound).
    """
    circuits = [frozenset(c) for c in circuits]
    for c in circuits:
        if not c:
            return CircuitViolation("nonempty", {"circuit": c})
        for label in c:
            if label not in ground:
                raise InputError(f"circuit label {label!r} not in ground set")
    for c1, c2 in combinations(circuits, 2):
        if c1 <= c2 or c2 <= c1:
            return CircuitViolation("incomparable", {"first": c1, "second": c2})
    family = set(circuits)
    for c1, c2 in combinations(circuits, 2):
        for e in c1 & c2:
            rest = (c1 | c2) - {e}
            if not any(c3 <= rest for c3 in family):
                return CircuitViolation("elimination", {"first": c1, "second": c2, "element": e})
    return None


class ClassicalMatroid:
    def __init__(self, ground: GroundSet, circuits: Iterable[frozenset],
                 _validated: bool = False):
        if len(ground) > config.MAX_GROUND_SIZE:
            raise InputError(f"ground set larger than the cap ({config.MAX_GROUND_SIZE})")
        self.ground = ground
        self.circuits: FrozenSet[frozenset] = frozenset(frozenset(c) for c in circuits)
        if not _validated:
            violation = validate_circuits(ground, self.circuits)
            if violation is not None:
                raise InputError(f"not a matroid: {violation.as_json()}")
        self._rank_cache: dict = {}
        self._bases: Optional[frozenset] = None

    @classmethod
    def from_circuits(cls, ground: GroundSet, circuits: Iterable[frozenset]) -> "ClassicalMatroid":
        return cls(ground, circuits)

    @classmethod
    def from_bases(cls, ground: GroundSet, bases: Iterable[frozenset]) -> "ClassicalMatroid":
        bases = [frozenset(b) for b in bases]
        if not bases:
            raise InputError("no bases given")
        sizes = {len(b) for b in bases}
        if len(sizes) != 1:
            raise InputError("bases of unequal size")
        r = sizes.pop()
        independent = set()
        for b in bases:
            for k in range(len(b) + 1):
                independent.update(map(frozenset, combinations(sorted(b, key=ground.index), k)))
        circuits = []
        for size in range(1, r + 2):
            for cand in combinations(ground.labels, size):
                cand_set = frozenset(cand)
                if cand_set in independent:
                    continue
                if all(cand_set - {x} in independent for x in cand_set):
                    circuits.append(cand_set)
        m = cls(ground, circuits)
        if m.bases() != frozenset(bases):
            raise InputError("the given family is not the basis set of a matroid")
        return m

    def __eq__(self, other) -> bool:
        return (isinstance(other, ClassicalMatroid)
                and self.ground == other.ground and self.circuits == other.circuits)

    def __repr__(self) -> str:
        return f"ClassicalMatroid(|E|={len(self.ground)}, circuits={len(self.circuits)})"

    # -- rank machinery ---------------------------------------------------

    def independent(self, subset: Iterable) -> bool:
        s = frozenset(subset)
        return not any(c <= s for c in self.circuits)

    def rank(self, subset: Optional[Iterable] = None) -> int:
        s = frozenset(subset) if subset is not None else frozenset(self.ground.labels)
        key = s
        if key in self._rank_cache:
            return self._rank_cache[key]
        picked: set = set()
        for label in self.ground:
            if label in s:
                picked.add(label)
                if not self.independent(picked):
                    picked.remove(label)
        self._rank_cache[key] = len(picked)
        return len(picked)

    def nullity(self, subset: Iterable) -> int:
        s = frozenset(subset)
        return len(s) - self.rank(s)

    def max_independent(self, subset: Iterable) -> tuple:
        """The greedy (ground-order) maximal independent subset."""
        picked: list = []
        for label in self.ground:
            if label in set(subset):
                picked.append(label)
                if not self.independent(picked):
                    picked.pop()
        return tuple(picked)

    def bases(self) -> frozenset:
        if self._bases is None:
            r = self.rank()
            self._bases = frozenset(frozenset(b) for b in combinations(self.ground.labels, r)
                                    if self.independent(b))
        return self._bases

    def extend_to_basis(self, independent_set: Iterable) -> tuple:
        picked = list(self.ground.sort(independent_set))
        if not self.independent(picked):
            raise InputError("cannot extend a dependent set to a basis")
        for label in self.ground:
            if label in picked:
                continue
            picked.append(label)
            if not self.independent(picked):
                picked.pop()
        return self.ground.sort(picked)

    # -- duality and fundamental circuits ----------------------------------

    def dual(self) -> "ClassicalMatroid":
        full = frozenset(self.ground.labels)
        co_bases = [full - b for b in self.bases()]
        return ClassicalMatroid.from_bases(self.ground, co_bases)

    def cocircuits(self) -> frozenset:
        return self.dual().circuits

    def fundamental_circuit(self, basis: Iterable, e) -> frozenset:
        """The unique circuit inside basis + {e}, for e outside the basis."""
        b = frozenset(basis)
        if b not in self.bases():
            raise InputError("not a basis")
        if e in b:
            raise InputError("element already in the basis")
        hits = [c for c in self.circuits if c <= b | {e}]
        if len(hits) != 1:
            raise InputError("no unique fundamental circuit")
        return hits[0]

    def fundamental_cocircuit(self, basis: Iterable, f) -> frozenset:
        """The unique cocircuit avoiding basis - {f}, for f in the basis."""
        b = frozenset(basis)
        if b not in self.bases():
            raise InputError("not a basis")
        if f not in b:
            raise InputError("element not in the basis")
        dual = self.dual()
        return dual.fundamental_circuit(frozenset(self.ground.labels) - b, f)


# -- modularity -------------------------------------------------------------


def modular_pair(m: ClassicalMatroid, c1: frozenset, c2: frozenset) -> bool:
    """Whether two distinct circuits form a modular pair:
    rank(C1 | C2) = |C1 | C2| - 2."""
    c1, c2 = frozenset(c1), frozenset(c2)
    if c1 not in m.circuits or c2 not in m.circuits:
        raise InputError("modular_pair needs circuits of the matroid")
    if c1 == c2:
        raise InputError("modular_pair needs two distinct circuits")
    union = c1 | c2
    return m.rank(union) == len(union) - 2


def modular_family(m: ClassicalMatroid, supports: Iterable[frozenset]) -> bool:
    """Whether distinct circuits form a modular family: the nullity of their
    union equals the family size (the union's height in the lattice of
    circuit unions)."""
    supports = [frozenset(s) for s in supports]
    if len(set(supports)) != len(supports):
        return False
    for s in supports:
        if s not in m.circuits:
            raise InputError("modular_family needs circuits of the matroid")
    union = frozenset().union(*supports)
    return m.nullity(union) == len(supports)


def union_lattice_height(circuits: Iterable[frozenset], target: frozenset) -> int:
    """Height of `target` in the lattice of unions of the given circuits.

    Independent oracle for `modular_family`, exponential in the number of
    circuits under the target; use on small instances only.
    """
    target = frozenset(target)
    atoms = [c for c in {frozenset(c) for c in circuits} if c <= target]
    unions = {frozenset()}
    frontier = {frozenset()}
    while frontier:
        new = set()
        for u in frontier:
            for a in atoms:
                cand = u | a
                if cand not in unions:
                    new.add(cand)
        unions |= new
        frontier = new
    if target not in unions:
        raise InputError("target is not a union of circuits")
    heights = {frozenset(): 0}
    ordered = sorted(unions, key=len)
    for u in ordered:
        if u not in heights:
            below = [heights[v] for v in ordered if v < u and v in heights]
            heights[u] = 1 + max(below)
    return heights[target]
