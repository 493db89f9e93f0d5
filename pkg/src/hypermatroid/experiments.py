"""Randomized weak-valid instance generation and the perfection sweep.

The sampler produces alternating functions that pass the weak relation
check, drawn two ways.  At sizes where the three-term relation family is
small, values are drawn independently (signs, dyadic magnitudes, angles)
and rejection-sampled on the weak check.  At larger sizes blind
rejection is hopeless (the pass probability decays like 0.75 to the
number of relations), so a random integer matrix seeds an exact
realizable instance, which is then perturbed by single-value mutations
that are kept only when the weak check still passes.  Over fields the
matrix instance is used as drawn: a random assignment over a field is
never weak-valid, and every weak-valid function there is realizable
anyway.

The perfection sweep samples weak-valid functions and records which are
strong.  Over the doubly distributive hyperfields (Krasner, sign,
tropical, finite fields, the rationals) a weak-only find is a
contract violation, reported as such.  Triangle and phase runs seed the
sample list with the known weak-only corpus instances, so those runs
always record at least one weak-only find.  Each sample also gets the
bounded-overlap orthogonality sweep between derived circuits and
cocircuits, and random vector/covector pairs are tested for
orthogonality on strong instances.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Dict, List, Optional, Tuple

from .circuits import CircuitSignature
from .errors import InputError
from .gp import (GPFunction, check_gp_strong, check_gp_weak, circuits_from_gp,
                 dual_pair_witness)
from .hyperfields import (HFElement, Hyperfield, sample_element)
from .transforms import dual_circuits
from .vectors import (FVector, GroundSet, is_covector_of, is_vector_of,
                      orthogonal)

_DOUBLY_DISTRIBUTIVE = ("krasner", "sign", "tropical", "gf", "rational")

_REJECTION_TRIES = 20000


def _three_term_pairs(rank: int, m: int) -> int:
    if rank < 2 or m < rank + 2:
        return 0
    return comb(m, rank + 1) * comb(rank + 1, rank - 2) * (m - rank - 1)


def _random_unit(hf: Hyperfield, rng: random.Random) -> HFElement:
    kind = hf.kind
    if kind == "sign":
        return hf.element(rng.choice((1, -1)))
    if kind == "tropical":
        return hf.element(Fraction(2) ** rng.randint(0, 3))
    if kind == "triangle":
        return hf.element(float(2 ** rng.randint(0, 3)))
    if kind == "phase":
        angle = rng.uniform(0.0, 6.283)
        return hf.element(1) if angle == 0.0 else hf.element(angle)
    return sample_element(hf, rng, nonzero=True)


def _minor_det(columns: List[Tuple[Fraction, ...]], picks: Tuple[int, ...]) -> Fraction:
    cols = [columns[i] for i in picks]
    r = len(picks)
    if r == 1:
        return cols[0][0]
    if r == 2:
        return cols[0][0] * cols[1][1] - cols[0][1] * cols[1][0]
    a, b, c = cols
    return (a[0] * (b[1] * c[2] - b[2] * c[1])
            - b[0] * (a[1] * c[2] - a[2] * c[1])
            + c[0] * (a[1] * b[2] - a[2] * b[1]))


def _element_from_det(hf: Hyperfield, det: Fraction, rng: random.Random) -> HFElement:
    kind = hf.kind
    if det == 0:
        return hf.zero()
    if kind == "rational":
        return hf.element(det)
    if kind == "sign":
        return hf.element(1 if det > 0 else -1)
    if kind == "krasner":
        return hf.one()
    if kind == "gf":
        value = int(det) % hf.p
        return hf.element(value)
    if kind == "tropical":
        n, two = abs(int(det)), 0
        while n % 2 == 0:
            n //= 2
            two += 1
        return hf.element(Fraction(2) ** (-two))
    if kind == "triangle":
        return hf.element(float(abs(det)))
    if kind == "phase":
        return hf.element(1 if det > 0 else -1)
    raise AssertionError(kind)


def _matrix_seeded(hf: Hyperfield, rng: random.Random, rank: int,
                   labels: tuple) -> Optional[GPFunction]:
    """An exact realizable instance from a random integer matrix, pushed
    into the hyperfield; None when the push-forward loses full rank."""
    m = len(labels)
    columns = [tuple(Fraction(rng.randint(-4, 4)) for _ in range(rank))
               for _ in range(m)]
    ground = GroundSet(labels)
    values = {}
    for picks in combinations(range(m), rank):
        el = _element_from_det(hf, _minor_det(columns, picks), rng)
        if not el.is_zero:
            values[tuple(labels[i] for i in picks)] = el
    if not values:
        return None
    phi = GPFunction(hf, ground, rank, values)
    if check_gp_weak(phi) is not None:
        return None
    return phi


def _mutate(phi: GPFunction, rng: random.Random, rounds: int) -> GPFunction:
    """Random single-value rewrites, each kept only if still weak-valid."""
    current = phi
    keys = sorted(current.values)
    for _ in range(rounds):
        key = keys[rng.randrange(len(keys))]
        values = dict(current.values)
        values[key] = _random_unit(current.hyperfield, rng)
        candidate = GPFunction(current.hyperfield, current.ground,
                               current.rank, values)
        if check_gp_weak(candidate) is None:
            current = candidate
    return current


def random_weak_gp(hf: Hyperfield, rng: random.Random, max_rank: int = 3,
                   max_ground: int = 6) -> GPFunction:
    """A random alternating function passing the weak relation check."""
    sizes = [(r, m) for r in range(1, max_rank + 1)
             for m in range(r + 1, max_ground + 1)]
    if not sizes:
        raise InputError("no feasible (rank, size) pairs under the bounds")
    rank, m = sizes[rng.randrange(len(sizes))]
    labels = tuple(range(1, m + 1))
    pairs = _three_term_pairs(rank, m)
    field_like = hf.kind in ("rational", "gf")
    if not field_like and hf.kind != "krasner" and pairs <= 24:
        ground = GroundSet(labels)
        for _ in range(_REJECTION_TRIES):
            values = {key: _random_unit(hf, rng)
                      for key in combinations(labels, rank)}
            phi = GPFunction(hf, ground, rank, values)
            if check_gp_weak(phi) is None:
                return phi
    for _ in range(200):
        phi = _matrix_seeded(hf, rng, rank, labels)
        if phi is None:
            continue
        if field_like or hf.kind == "krasner":
            return phi
        return _mutate(phi, rng, rounds=rng.randint(1, 3))
    raise InputError(f"could not sample a weak-valid instance over {hf}")


def random_weak_signature(hf: Hyperfield, rng: random.Random,
                          max_rank: int = 3,
                          max_ground: int = 6) -> CircuitSignature:
    """Circuits of a random weak-valid alternating function."""
    return circuits_from_gp(random_weak_gp(hf, rng, max_rank, max_ground))


# -- the perfection sweep ----------------------------------------------------


@dataclass(frozen=True)
class ExperimentConfig:
    hyperfield: Hyperfield
    max_rank: int = 3
    max_ground: int = 6
    samples: int = 50
    seed: int = 0

    def __post_init__(self):
        if not 1 <= self.max_rank <= 3:
            raise InputError("max_rank must be between 1 and 3")
        if not 2 <= self.max_ground <= 7:
            raise InputError("max_ground must be between 2 and 7")
        if not 1 <= self.samples <= 5000:
            raise InputError("samples must be between 1 and 5000")


def config_from_json(raw, where: str = "config") -> ExperimentConfig:
    from .serialization import hyperfield_from_id

    if not isinstance(raw, dict) or "hyperfield" not in raw:
        raise InputError(f"{where}: expected an object with a 'hyperfield' field")
    known = {"hyperfield", "max_rank", "max_ground", "samples", "seed"}
    for key in raw:
        if key not in known:
            raise InputError(f"{where}.{key}: unknown field")
    hf = hyperfield_from_id(raw["hyperfield"], f"{where}.hyperfield")
    ints = {}
    for key in ("max_rank", "max_ground", "samples", "seed"):
        if key in raw:
            value = raw[key]
            if isinstance(value, bool) or not isinstance(value, int):
                raise InputError(f"{where}.{key}: expected an integer")
            ints[key] = value
    return ExperimentConfig(hf, **ints)


def _seed_instances(hf: Hyperfield) -> List[GPFunction]:
    """Known weak-only corpus instances leading the sample list."""
    from .corpus import CORPUS

    names = {"triangle": "triangle-weak-not-strong",
             "phase": "phase-weak-not-strong"}
    name = names.get(hf.kind)
    if name is None:
        return []
    entry = CORPUS[name]
    instance = entry.build()
    return [instance] if instance.hyperfield == hf else []


def _random_candidate(hf: Hyperfield, ground: GroundSet,
                      rng: random.Random) -> FVector:
    entries = {}
    for label in ground:
        if rng.random() < 0.5:
            entries[label] = sample_element(hf, rng, nonzero=True)
    return FVector(hf, ground, entries)


def run_perfection_experiment(cfg: ExperimentConfig) -> dict:
    """Sample weak-valid functions and test them for strength, bounded
    orthogonality levels, and vector/covector pairings.  See the module
    docstring for the exact protocol."""
    rng = random.Random(cfg.seed)
    hf = cfg.hyperfield
    strict = hf.kind in _DOUBLY_DISTRIBUTIVE
    instances = _seed_instances(hf)
    while len(instances) < cfg.samples:
        instances.append(random_weak_gp(hf, rng, cfg.max_rank, cfg.max_ground))
    instances = instances[:cfg.samples]

    strong_count = 0
    weak_only: List[dict] = []
    hierarchy: Dict[int, int] = {}
    hierarchy_total: Dict[int, int] = {}
    pairs_checked = 0
    orthogonality_failures: List[dict] = []

    for index, phi in enumerate(instances):
        witness = check_gp_strong(phi)
        is_strong = witness is None
        if is_strong:
            strong_count += 1
        else:
            weak_only.append({"sample": index, "gp": phi, "witness": witness})
        circuits = circuits_from_gp(phi)
        cocircuits = dual_circuits(circuits)
        m = len(phi.ground)
        for k in range(3, m + 1):
            hierarchy_total[k] = hierarchy_total.get(k, 0) + 1
            if dual_pair_witness(circuits, cocircuits, max_overlap=k) is None:
                hierarchy[k] = hierarchy.get(k, 0) + 1
        if is_strong:
            candidates = [_random_candidate(hf, phi.ground, rng)
                          for _ in range(12)]
            vectors = [v for v in list(circuits.classes) + candidates
                       if not v.is_zero and is_vector_of(v, cocircuits.classes)]
            covectors = [w for w in list(cocircuits.classes) + candidates
                         if not w.is_zero and is_covector_of(w, circuits.classes)]
            for v in vectors:
                for w in covectors:
                    pairs_checked += 1
                    if not orthogonal(v, w):
                        orthogonality_failures.append(
                            {"sample": index, "vector": v, "covector": w})

    report = {
        "hyperfield": str(hf),
        "samples": len(instances),
        "strong": strong_count,
        "weak_only": weak_only,
        "contract_violation": strict and bool(weak_only),
        "bounded_orthogonality": {
            str(k): {"passed": hierarchy.get(k, 0), "of": hierarchy_total[k]}
            for k in sorted(hierarchy_total)},
        "vector_covector_pairs_checked": pairs_checked,
        "orthogonality_failures": orthogonality_failures,
    }
    return report
