"""Alternating functions: relation checks, derived circuits, dual pairs."""

import random
from fractions import Fraction

import pytest

from hypermatroid import (CORPUS, RATIONALS, SIGN, TROPICAL, FVector,
                          GPFunction, GroundSet, InputError,
                          InvalidDualPairError, PlueckerVector,
                          check_gp_strong, check_gp_weak, circuits_from_gp,
                          cocircuit_signature_from_circuits,
                          dual_pair_witness, eq, equivalent_gp,
                          gp_from_dual_pair, mul, pluecker_relation_check,
                          relation_terms, zero_in_sum)
from hypermatroid.corpus import gp_from_matrix

import oracles


def rational_u24():
    return CORPUS["rational-u24"].build()


def test_gp_construction_rules():
    g = GroundSet((1, 2, 3))
    with pytest.raises(InputError):
        GPFunction(SIGN, g, 0, {})
    with pytest.raises(InputError):
        GPFunction(SIGN, g, 1, {})  # identically zero
    with pytest.raises(InputError):
        GPFunction(SIGN, g, 2, {(2, 1): SIGN.element(1)})  # unsorted key
    phi = GPFunction(SIGN, g, 2, {(1, 2): SIGN.element(1),
                                  (1, 3): SIGN.zero()})
    assert (1, 3) not in phi.values, "zero values are dropped"


def test_evaluate_signs():
    phi = rational_u24()
    a = phi.evaluate((1, 2))
    b = phi.evaluate((2, 1))
    assert eq(a, mul(RATIONALS.element(-1), b))
    assert phi.evaluate((1, 1)).is_zero


def test_scale_equivalence():
    phi = rational_u24()
    scaled = phi.scale(RATIONALS.element(Fraction(-7, 3)))
    assert equivalent_gp(phi, scaled)
    assert not equivalent_gp(phi, CORPUS["rational-k4"].build())


def test_relation_terms_zero_inclusion():
    phi = rational_u24()
    terms = relation_terms(phi, (1, 2, 3), (4,))
    assert len(terms) == 3
    assert zero_in_sum(terms)


def test_weak_and_strong_on_realizable():
    phi = rational_u24()
    assert check_gp_weak(phi) is None
    assert check_gp_strong(phi) is None


def test_weak_witness_on_broken_values():
    """Corrupting one minor of a realizable function breaks the relations."""
    phi = rational_u24()
    values = dict(phi.values)
    values[(1, 2)] = RATIONALS.element(Fraction(999))
    broken = GPFunction(RATIONALS, phi.ground, 2, values)
    witness = check_gp_weak(broken)
    assert witness is not None
    assert witness["axiom"] in ("GP3", "GP3'")
    assert not zero_in_sum(witness["terms"])


def test_underlying_matroid_and_bases():
    phi = CORPUS["rational-k4"].build()
    m = phi.underlying_matroid()
    assert m.rank() == 3 and len(m.bases()) == 16
    assert phi.bases_support() == frozenset(m.bases())


def test_circuits_from_gp_matches_kernel_oracle():
    """Derived rational circuits are exactly the minimal-support kernel
    vectors of the defining matrix, up to scale."""
    labels = (1, 2, 3, 4, 5)
    columns = [(Fraction(1), Fraction(0), Fraction(0)),
               (Fraction(0), Fraction(1), Fraction(0)),
               (Fraction(0), Fraction(0), Fraction(1)),
               (Fraction(1), Fraction(1), Fraction(1)),
               (Fraction(1), Fraction(2), Fraction(3))]
    phi = gp_from_matrix(labels, columns)
    sig = circuits_from_gp(phi)
    deps = oracles.minimal_dependencies(columns)
    assert len(sig.classes) == len(deps)
    for vec in sig.classes:
        indices = frozenset(labels.index(x) for x in sorted(vec.entries))
        coeffs = deps[indices]
        anchor = min(vec.entries, key=phi.ground.index)
        scale = coeffs[labels.index(anchor)] / vec.entry(anchor).value
        for label in vec.entries:
            assert vec.entry(label).value * scale == coeffs[labels.index(label)]


def test_cocircuits_are_orthogonal():
    phi = CORPUS["sign-k4"].build()
    circuits = circuits_from_gp(phi)
    cocircuits = cocircuit_signature_from_circuits(circuits)
    assert dual_pair_witness(circuits, cocircuits, max_overlap=3) is None
    assert dual_pair_witness(circuits, cocircuits, max_overlap=None) is None


def test_gp_from_dual_pair_roundtrip():
    for name in ("sign-u24", "sign-k4", "gf3-u24", "tropical-u24",
                 "rational-k4"):
        phi = CORPUS[name].build()
        circuits = circuits_from_gp(phi)
        cocircuits = cocircuit_signature_from_circuits(circuits)
        rebuilt = gp_from_dual_pair(circuits, cocircuits)
        assert equivalent_gp(rebuilt, phi), name


def test_gp_from_dual_pair_rejects_non_pair():
    sig = circuits_from_gp(CORPUS["sign-u24"].build())
    with pytest.raises(InvalidDualPairError):
        gp_from_dual_pair(sig, sig)


def test_pluecker_three_term_tropical():
    phi = CORPUS["tropical-u24"].build()
    p = PlueckerVector(phi)
    assert pluecker_relation_check(p, (1, 2, 3), (4,))
    with pytest.raises(InputError):
        pluecker_relation_check(p, (1, 2), (4,))


def test_random_realizable_always_strong():
    rng = random.Random(404)
    labels = (1, 2, 3, 4, 5)
    built = 0
    while built < 12:
        columns = [tuple(Fraction(rng.randint(-4, 4)) for _ in range(3))
                   for _ in range(5)]
        if oracles.rank([[col[i] for col in columns] for i in range(3)]) < 3:
            continue
        phi = gp_from_matrix(labels, columns)
        assert check_gp_strong(phi) is None
        built += 1
