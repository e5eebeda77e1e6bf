import random
import warnings
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fuzzyrough import (
    CrispRelation,
    FuzzyRelation,
    Partition,
    TNorm,
    Universe,
    alpha_cut,
    classes,
    min_transitive_closure,
    random_min_equivalence,
    relation_core,
    relation_support,
    spectrum,
    validate,
)
from fuzzyrough.errors import NonPositiveTNormWarning, NotAnEquivalence, PreconditionViolated
from fuzzyrough.relation import RANDOM_GRID
from oracles import cut_pairs, eq_class, is_min_transitive, transitivity_violations
from published import FIVE_LABELS, FIVE_ROWS

H = Fraction(1, 2)


def blocks(partition):
    return sorted("".join(b) for b in partition.label_blocks())


def test_example_relation_is_min_equivalence(five):
    report = validate(five, TNorm.MINIMUM)
    assert report.reflexive and report.symmetric and report.t_transitive
    assert report.witnesses == []
    assert report.spectrum_dually_well_ordered


@pytest.mark.parametrize("t", list(TNorm))
def test_identity_valid_for_every_tnorm(t):
    report = validate(FuzzyRelation.identity(Universe("xyz")), t)
    assert report.is_equivalence


def test_broken_transitivity_reports_witnesses():
    rows = [list(r) for r in FIVE_ROWS]
    rows[0][2] = rows[2][0] = "0.9"
    rel = FuzzyRelation.from_rows(FIVE_LABELS, rows)
    report = validate(rel, TNorm.MINIMUM)
    assert report.reflexive and report.symmetric and not report.t_transitive

    # the oracle scans every triple independently
    expected = transitivity_violations(rel.mu, min)
    found = [w[1:4] for w in report.witnesses if w[0] == "transitive"]
    assert found == expected[: len(found)]
    c, a, b = 2, 0, 1
    assert (c, a, b) in expected
    assert (c, a, b) in found
    witness = next(w for w in report.witnesses if w[1:4] == (c, a, b))
    assert witness[4] == Fraction(9, 10) and witness[5] == H


def test_witness_cap_keeps_full_verdict():
    n = 8
    mu = [["1" if i == j else "1/2" for j in range(n)] for i in range(n)]
    mu[0][1] = mu[1][0] = "0"
    mu[0][2] = mu[2][0] = "1"
    rel = FuzzyRelation.from_rows([f"x{i}" for i in range(n)], mu)
    report = validate(rel)
    assert not report.t_transitive
    assert len(report.witnesses) <= 16


def test_asymmetric_and_irreflexive_detected():
    rel = FuzzyRelation.from_rows("ab", [["1", "1/2"], ["1/4", "0.9"]])
    report = validate(rel)
    assert not report.reflexive and not report.symmetric
    kinds = {w[0] for w in report.witnesses}
    assert {"reflexive", "symmetric"} <= kinds


def test_spectrum(five, four):
    assert spectrum(five) == [0, H, 1]
    assert spectrum(four) == [0, Fraction(3, 10), 1]
    assert spectrum(FuzzyRelation.identity(Universe("ab"))) == [0, 1]


def test_alpha_cuts(five):
    assert blocks(classes(alpha_cut(five, Fraction(1)))) == ["ab", "c", "de"]
    assert blocks(classes(alpha_cut(five, H))) == ["abc", "de"]
    assert all(all(row) for row in alpha_cut(five, Fraction(0)).pairs)


def test_core_and_support(five, four):
    assert blocks(classes(relation_core(five))) == ["ab", "c", "de"]
    assert blocks(classes(relation_core(four))) == ["ab", "c", "d"]
    assert blocks(classes(relation_support(four))) == ["abc", "d"]
    assert blocks(classes(relation_support(five))) == ["abc", "de"]
    ident = FuzzyRelation.identity(Universe("pqr"))
    assert blocks(classes(relation_core(ident))) == ["p", "q", "r"]
    assert blocks(classes(relation_support(ident))) == ["p", "q", "r"]


def test_support_cut_matches_oracle(five):
    assert {(x, y) for x in range(5) for y in range(5) if relation_support(five)(x, y)} == cut_pairs(
        five.mu, lambda v: v > 0
    )


def test_support_warns_for_non_positive_tnorm(five):
    with pytest.warns(NonPositiveTNormWarning):
        relation_support(five, TNorm.LUKASIEWICZ)
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        relation_support(five, TNorm.PRODUCT)


def test_lukasiewicz_support_need_not_be_transitive():
    # 1/2 (x) 1/2 = 0 under Lukasiewicz, so a-b and b-c positive with a-c zero is allowed
    rel = FuzzyRelation.from_rows("abc", [["1", "1/2", "0"], ["1/2", "1", "1/2"], ["0", "1/2", "1"]])
    assert validate(rel, TNorm.LUKASIEWICZ).is_equivalence
    assert not validate(rel, TNorm.MINIMUM).t_transitive
    with pytest.warns(NonPositiveTNormWarning):
        support = relation_support(rel, TNorm.LUKASIEWICZ)
    with pytest.raises(NotAnEquivalence):
        classes(support)


def test_classes_examples():
    u = Universe("abcde")
    e = CrispRelation.from_partition(u, ["ab", "c", "de"])
    assert blocks(classes(e)) == ["ab", "c", "de"]
    full = CrispRelation(u, tuple(tuple(True for _ in range(5)) for _ in range(5)))
    assert blocks(classes(full)) == ["abcde"]


@pytest.mark.parametrize(
    "pairs",
    [
        ((False, False), (False, True)),  # not reflexive
        ((True, True), (False, True)),  # not symmetric
    ],
)
def test_classes_rejects_non_equivalence(pairs):
    with pytest.raises(NotAnEquivalence):
        classes(CrispRelation(Universe("ab"), pairs))


def test_classes_rejects_non_transitive():
    pairs = ((True, True, False), (True, True, True), (False, True, True))
    with pytest.raises(NotAnEquivalence):
        classes(CrispRelation(Universe("abc"), pairs))


def test_partition_invariants():
    u = Universe("abc")
    with pytest.raises(ValueError):
        Partition.from_labels(u, ["ab", "bc"])
    with pytest.raises(ValueError):
        Partition.from_labels(u, ["ab"])
    assert blocks(Partition.discrete(u)) == ["a", "b", "c"]


def test_closure_leaves_transitive_relation_unchanged(five):
    assert min_transitive_closure(five) == five
    ident = FuzzyRelation.identity(Universe("abcd"))
    assert min_transitive_closure(ident) == ident


def test_closure_single_step():
    rel = FuzzyRelation.from_rows("abc", [["1", "0.8", "0"], ["0.8", "1", "0.6"], ["0", "0.6", "1"]])
    closed = min_transitive_closure(rel)
    assert closed(0, 2) == closed(2, 0) == Fraction(3, 5)
    assert is_min_transitive(closed.mu)


def test_closure_rejects_non_symmetric():
    with pytest.raises(PreconditionViolated):
        min_transitive_closure(FuzzyRelation.from_rows("ab", [["1", "1/2"], ["0", "1"]]))


def _least_closure_oracle(mu):
    # least fixpoint by repeated relational squaring with max-min, checked minimal below
    n = len(mu)
    cur = [list(r) for r in mu]
    for _ in range(n):
        cur = [[max(min(cur[x][y], cur[y][z]) for y in range(n)) for z in range(n)] for x in range(n)]
    return tuple(map(tuple, cur))


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 6), st.randoms(use_true_random=False))
def test_random_closure_is_valid_min_equivalence(n, rng):
    u = Universe([f"x{i}" for i in range(n)])
    mu = [[Fraction(1)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            mu[i][j] = mu[j][i] = rng.choice(RANDOM_GRID)
    base = FuzzyRelation(u, tuple(map(tuple, mu)))
    closed = min_transitive_closure(base)
    assert validate(closed, TNorm.MINIMUM).is_equivalence
    assert all(closed(x, y) >= base(x, y) for x in range(n) for y in range(n))
    assert closed.mu == _least_closure_oracle(base.mu)


def test_random_generator_is_seeded():
    a = random_min_equivalence(5, random.Random(3))
    b = random_min_equivalence(5, random.Random(3))
    assert a == b
    assert set(spectrum(a)) <= set(RANDOM_GRID)


def test_cut_properties(instances):
    for rel in instances[:40]:
        values = spectrum(rel)
        cuts = [alpha_cut(rel, a) for a in values]
        for small, big in zip(cuts, cuts[1:]):
            assert big <= small
        assert relation_core(rel) <= relation_support(rel)
        for a in values:
            if a > 0:
                assert alpha_cut(rel, a).is_equivalence()


def test_core_classes_share_degrees(instances):
    """Elements in the same core class see every third element with equal degree."""
    for rel in instances:
        core = {(x, y) for x in range(rel.n) for y in range(rel.n) if rel(x, y) == 1}
        for x in range(rel.n):
            for y in eq_class(core, x):
                assert all(rel(z, x) == rel(z, y) for z in range(rel.n))
