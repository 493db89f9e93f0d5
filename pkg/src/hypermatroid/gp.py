"""Grassmann-Pluecker functions over a hyperfield.

Values are stored on position-sorted r-subsets only; evaluation on
arbitrary tuples derives the alternating sign.  The relation checkers,
the circuit extraction, and the dual-pair reconstruction all pin
deterministic canonical choices (lexicographic subsets, least anchors,
greedy bases) so outputs and witnesses are reproducible.
"""

from __future__ import annotations

from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .circuits import CircuitSignature, check_C0_C2
from .errors import (GPInconsistencyError, InputError, InvalidDualPairError,
                     RatioInconsistencyError)
from .hyperfields import (HFElement, Hyperfield, eq, inv, invol, mul, neg,
                          signed, zero_in_sum)
from .matroids import ClassicalMatroid
from .search import first_witness
from .vectors import FVector, GroundSet, orthogonal, scalar_mul, support, vectors_equal


def _perm_parity(values: Sequence[int]) -> int:
    """Parity (0 or 1) of the permutation sorting `values` ascending."""
    count = 0
    n = len(values)
    for i in range(n):
        for j in range(i + 1, n):
            if values[i] > values[j]:
                count += 1
    return count % 2


class GPFunction:
    """An alternating function from r-tuples of ground labels to F."""

    def __init__(self, hyperfield: Hyperfield, ground: GroundSet, rank: int,
                 values: Dict[tuple, HFElement]):
        if rank < 1 or rank > len(ground):
            raise InputError(f"rank {rank} out of range for |E| = {len(ground)}")
        self.hyperfield = hyperfield
        self.ground = ground
        self.rank = rank
        stored: Dict[tuple, HFElement] = {}
        for key, value in values.items():
            key = tuple(key)
            if len(key) != rank or len(set(key)) != rank:
                raise InputError(f"subset {key} is not an {rank}-set")
            if ground.sort(key) != key:
                raise InputError(f"subset {key} is not in ground order")
            if value.hyperfield != hyperfield:
                raise InputError("value over the wrong hyperfield")
            if not value.is_zero:
                stored[key] = value
        if not stored:
            raise InputError("identically zero (GP1 fails)")
        self.values = stored

    def value(self, subset: Iterable) -> HFElement:
        """The stored value on an unordered r-set of distinct labels."""
        key = self.ground.sort(subset)
        if len(key) != self.rank:
            raise InputError(f"expected {self.rank} distinct labels, got {key}")
        return self.values.get(key, self.hyperfield.zero())

    def evaluate(self, labels: Sequence) -> HFElement:
        """Alternating evaluation on an arbitrary tuple."""
        labels = tuple(labels)
        if len(labels) != self.rank:
            raise InputError(f"expected arity {self.rank}, got {len(labels)}")
        if len(set(labels)) != len(labels):
            return self.hyperfield.zero()
        positions = [self.ground.index(x) for x in labels]
        parity = _perm_parity(positions)
        return signed(self.value(labels), parity)

    def __call__(self, *labels) -> HFElement:
        return self.evaluate(labels)

    def bases_support(self) -> frozenset:
        return frozenset(frozenset(k) for k in self.values)

    def underlying_matroid(self) -> ClassicalMatroid:
        return ClassicalMatroid.from_bases(self.ground, self.bases_support())

    def scale(self, alpha: HFElement) -> "GPFunction":
        if alpha.is_zero:
            raise InputError("scaling by zero")
        return GPFunction(self.hyperfield, self.ground, self.rank,
                          {k: mul(alpha, v) for k, v in self.values.items()})

    def __repr__(self) -> str:
        return (f"GPFunction({self.hyperfield.kind}, |E|={len(self.ground)}, "
                f"rank={self.rank}, support={len(self.values)})")


def gp_value(phi: GPFunction, labels: Sequence) -> HFElement:
    return phi.evaluate(labels)


def equivalent_gp(phi1: GPFunction, phi2: GPFunction) -> bool:
    """Whether phi1 is a global nonzero multiple of phi2."""
    if (phi1.hyperfield, phi1.ground, phi1.rank) != \
            (phi2.hyperfield, phi2.ground, phi2.rank):
        return False
    if set(phi1.values) != set(phi2.values):
        return False
    anchor = min(phi1.values, key=lambda k: tuple(map(phi1.ground.index, k)))
    alpha = mul(phi1.values[anchor], inv(phi2.values[anchor]))
    return all(eq(v, mul(alpha, phi2.values[k])) for k, v in phi1.values.items())


# -- relations ---------------------------------------------------------------


def _exchange_witness(phi: GPFunction) -> Optional[dict]:
    """Basis-exchange failure in the support, or None."""
    bases = sorted(phi.values)
    base_sets = {frozenset(b) for b in bases}
    for b1 in bases:
        s1 = frozenset(b1)
        for b2 in bases:
            s2 = frozenset(b2)
            for x in phi.ground.sort(s1 - s2):
                if not any((s1 - {x}) | {y} in base_sets for y in s2 - s1):
                    return {"axiom": "exchange", "B1": b1, "B2": b2, "x": x}
    return None


def relation_terms(phi: GPFunction, I: Sequence, J: Sequence) -> List[HFElement]:
    """The r+2 x r-2 relation's term list for sorted subsets I (r+1) and
    J (r-1): the k-th term is (-1)^k phi(I minus its k-th element) times
    phi(that element prepended to J)."""
    I = phi.ground.sort(I)
    J = phi.ground.sort(J)
    if len(I) != phi.rank + 1 or len(set(I)) != len(I):
        raise InputError("I must be a set of rank+1 labels")
    if len(J) != phi.rank - 1 or len(set(J)) != len(J):
        raise InputError("J must be a set of rank-1 labels")
    terms = []
    for k, x in enumerate(I, start=1):
        left = phi.evaluate(tuple(y for y in I if y != x))
        right = phi.evaluate((x,) + J)
        terms.append(signed(mul(left, right), k))
    return terms


def _relation_tasks(phi: GPFunction, three_term_only: bool) -> List[tuple]:
    labels = phi.ground.labels
    tasks = []
    for I in combinations(labels, phi.rank + 1):
        for J in combinations(labels, phi.rank - 1):
            if three_term_only and len(set(I) - set(J)) != 3:
                continue
            tasks.append((I, J))
    return tasks


def _check_relations(phi: GPFunction, three_term_only: bool, axiom: str,
                     workers: int = 1) -> Optional[dict]:
    problem = _exchange_witness(phi)
    if problem is not None:
        return problem

    def check(task):
        I, J = task
        terms = relation_terms(phi, I, J)
        if zero_in_sum(terms):
            return None
        return {"axiom": axiom, "I": I, "J": J, "terms": terms}

    return first_witness(_relation_tasks(phi, three_term_only), check, workers=workers)


def check_gp_weak(phi: GPFunction, workers: int = 1) -> Optional[dict]:
    """Three-term relations (pairs with |I - J| = 3) plus basis exchange
    on the support."""
    return _check_relations(phi, True, "GP3'", workers=workers)


def check_gp_strong(phi: GPFunction, workers: int = 1) -> Optional[dict]:
    """The full relation family, over all (I, J) pairs."""
    return _check_relations(phi, False, "GP3", workers=workers)


# -- Pluecker vector view -----------------------------------------------------


class PlueckerVector:
    """The same data as a GPFunction, keyed by r-subsets."""

    def __init__(self, phi: GPFunction):
        self.phi = phi

    def entry(self, subset: Iterable) -> HFElement:
        return self.phi.value(subset)

    @classmethod
    def from_entries(cls, hyperfield: Hyperfield, ground: GroundSet, rank: int,
                     entries: Dict[frozenset, HFElement]) -> "PlueckerVector":
        values = {ground.sort(k): v for k, v in entries.items()}
        return cls(GPFunction(hyperfield, ground, rank, values))


def pluecker_relation_check(p: PlueckerVector, I: Iterable, J: Iterable) -> bool:
    """Sign-form relation on unordered I (r+1) and J (r-1): zero must lie
    in the hypersum over i in I of sign(i; I, J) * x_{J+i} * x_{I-i},
    where the sign counts elements of I and of J above i."""
    phi = p.phi
    I = phi.ground.sort(I)
    J = phi.ground.sort(J)
    if len(I) != phi.rank + 1 or len(J) != phi.rank - 1:
        raise InputError("need |I| = rank+1 and |J| = rank-1")
    terms = []
    pos = phi.ground.index
    for i in I:
        if i in J:
            continue
        s = sum(1 for x in I if pos(i) < pos(x)) + sum(1 for j in J if pos(i) < pos(j))
        term = mul(p.entry(tuple(sorted(J + (i,), key=pos))),
                   p.entry(tuple(x for x in I if x != i)))
        terms.append(signed(term, s))
    return zero_in_sum(terms)


# -- circuits from a GP function ----------------------------------------------


def _circuit_from_basis(phi: GPFunction, circuit: frozenset, x0, basis: tuple) -> FVector:
    """The circuit vector anchored at X(x0) = 1, computed against one basis
    containing the circuit minus its anchor."""
    hf = phi.hyperfield
    denom = inv(phi.value(basis))
    entries = {x0: hf.one()}
    for i, xi in enumerate(basis, start=1):
        if xi not in circuit:
            continue
        rest = tuple(b for b in basis if b != xi)
        val = signed(mul(phi.evaluate((x0,) + rest), denom), i)
        if val.is_zero:
            raise GPInconsistencyError(
                f"vanishing value at {xi} inside circuit {sorted(circuit)}")
        entries[xi] = val
    return FVector(hf, phi.ground, entries)


def circuits_from_gp(phi: GPFunction) -> CircuitSignature:
    """One representative per circuit of the underlying matroid, anchored
    at value 1 on the circuit's least element.

    Well-definedness across the choice of completing basis is asserted by
    recomputing against a second basis whenever one exists.
    """
    matroid = phi.underlying_matroid()
    pos = phi.ground.index
    vectors = []
    for circuit in sorted(matroid.circuits, key=lambda c: sorted(map(pos, c))):
        x0 = min(circuit, key=pos)
        partial = circuit - {x0}
        carriers = [b for b in sorted(matroid.bases(),
                                      key=lambda b: sorted(map(pos, b)))
                    if partial <= b]
        basis = phi.ground.sort(carriers[0])
        vector = _circuit_from_basis(phi, circuit, x0, basis)
        if len(carriers) > 1:
            other = phi.ground.sort(carriers[1])
            again = _circuit_from_basis(phi, circuit, x0, other)
            if not vectors_equal(vector, again):
                raise GPInconsistencyError(
                    f"circuit {sorted(circuit)} depends on the completing basis")
        vectors.append(vector)
    return CircuitSignature(phi.hyperfield, phi.ground, vectors)


# -- cocircuits from circuits -------------------------------------------------


def cocircuit_signature_from_circuits(sig: CircuitSignature) -> CircuitSignature:
    """The unique partner signature on the dual matroid, built cocircuit by
    cocircuit from circuit ratios through a fixed hyperplane basis.

    For a cocircuit D and a maximal independent set A in its complement,
    each pair e, f in D determines a unique circuit inside A + {e, f}; the
    ratio W(e)/W(f) is the negated inverted circuit ratio, and consistency
    of all pairs against the anchored representative is verified.

    Orthogonality pairs a circuit entry with the involution of a cocircuit
    entry, so the ratios are built under the involution; with the identity
    involution this changes nothing.
    """
    hf = sig.hyperfield
    matroid = sig.underlying_matroid()
    pos = sig.ground.index
    full = frozenset(sig.ground.labels)
    vectors = []
    for cocircuit in sorted(matroid.cocircuits(), key=lambda c: sorted(map(pos, c))):
        hyperplane_basis = frozenset(matroid.max_independent(full - cocircuit))

        def circuit_between(e, f):
            basis = hyperplane_basis | {e}
            circ = matroid.fundamental_circuit(basis, f)
            return sig.class_with_support(circ)

        ordered = sig.ground.sort(cocircuit)
        f0 = ordered[0]
        entries = {f0: hf.one()}
        for e in ordered[1:]:
            rep = circuit_between(e, f0)
            entries[e] = invol(neg(mul(rep.entry(f0), inv(rep.entry(e)))))
        vector = FVector(hf, sig.ground, entries)
        for e, f in combinations(ordered, 2):
            rep = circuit_between(e, f)
            lhs = mul(vector.entry(e), inv(vector.entry(f)))
            rhs = invol(neg(mul(rep.entry(f), inv(rep.entry(e)))))
            if not eq(lhs, rhs):
                raise RatioInconsistencyError(
                    f"cocircuit {sorted(cocircuit)} ratios disagree at "
                    f"({e}, {f})")
        vectors.append(vector)
    return CircuitSignature(hf, sig.ground, vectors)


# -- GP function from a dual pair ---------------------------------------------


def _signature_of(sig: CircuitSignature, matroid: ClassicalMatroid) -> bool:
    if check_C0_C2(sig) is not None:
        return False
    return frozenset(sig.supports()) == matroid.circuits


def dual_pair_witness(C: CircuitSignature, D: CircuitSignature,
                      max_overlap: Optional[int] = None) -> Optional[dict]:
    """First failure of the dual-pair requirements, or None.

    `max_overlap` bounds the support overlap for the orthogonality clause
    (3 for the weak form, None for the full form).
    """
    try:
        matroid = C.underlying_matroid()
    except InputError:
        return {"axiom": "DP1", "reason": "supports are not matroid circuits"}
    if not _signature_of(C, matroid):
        return {"axiom": "DP1", "reason": "not a signature of a matroid"}
    if not _signature_of(D, matroid.dual()):
        return {"axiom": "DP2", "reason": "not a signature of the dual matroid"}
    for x in C.classes:
        for y in D.classes:
            if max_overlap is not None and \
                    len(support(x) & support(y)) > max_overlap:
                continue
            if not orthogonal(x, y):
                return {"axiom": "DP3" if max_overlap is None else "DP3'",
                        "X": x, "Y": y}
    return None


def gp_from_dual_pair(C: CircuitSignature, D: CircuitSignature,
                      _check: bool = True) -> GPFunction:
    """Reconstruct the function whose circuit signature is C, from a weak
    dual pair (C, D).

    Walks the basis-exchange graph from the lexicographically least basis
    (pinned to value 1); each exchange edge determines the value ratio
    through the circuit crossing it.  Revisits must agree, weak relations
    must hold afterwards, and when (C, D) is a full dual pair the strong
    relations are verified too.
    """
    problem = dual_pair_witness(C, D, max_overlap=3)
    if problem is not None:
        raise InvalidDualPairError(str(problem))
    hf = C.hyperfield
    ground = C.ground
    pos = ground.index
    matroid = C.underlying_matroid()
    bases = sorted(matroid.bases(), key=lambda b: sorted(map(pos, b)))
    root = bases[0]
    values: Dict[tuple, HFElement] = {ground.sort(root): hf.one()}
    queue = [frozenset(root)]
    while queue:
        basis = queue.pop(0)
        key = ground.sort(basis)
        current = values[key]
        sorted_basis = list(key)
        for e in ground:
            if e in basis:
                continue
            circ = matroid.fundamental_circuit(basis, e)
            rep = C.class_with_support(circ)
            for f in ground.sort(circ - {e}):
                new_basis = (basis - {f}) | {e}
                sign1 = sorted_basis.index(f)
                new_key = ground.sort(new_basis)
                sign2 = new_key.index(e)
                ratio = neg(mul(rep.entry(f), inv(rep.entry(e))))
                value = signed(mul(ratio, current), sign1 + sign2)
                if new_key in values:
                    if not eq(values[new_key], value):
                        raise InvalidDualPairError(
                            f"inconsistent exchange cycle at basis {new_key}")
                else:
                    values[new_key] = value
                    queue.append(new_basis)
    phi = GPFunction(hf, ground, matroid.rank(), values)
    if _check:
        witness = check_gp_weak(phi)
        if witness is not None:
            raise InvalidDualPairError(f"reconstruction is not weak-valid: {witness}")
        if dual_pair_witness(C, D, max_overlap=None) is None:
            witness = check_gp_strong(phi)
            if witness is not None:
                raise InvalidDualPairError(
                    f"full dual pair gave a non-strong function: {witness}")
    return phi


def underlying_matroid(phi: GPFunction) -> ClassicalMatroid:
    return phi.underlying_matroid()
