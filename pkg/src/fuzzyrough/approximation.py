"""
Crisp rough approximation with respect to a partition, and fuzzy lower/upper
approximation of a crisp reference set with respect to a fuzzy equivalence.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import ONE, ZERO, CrispSet, FuzzySet, TNorm, check_same_universe, core_of, support_of
from .errors import NotAnEquivalence
from .relation import FuzzyRelation, Partition, classes, relation_core, relation_support


@dataclass(frozen=True)
class RoughPair:
    lower: CrispSet
    upper: CrispSet

    def __le__(self, other: RoughPair) -> bool:
        return self.lower <= other.lower and self.upper <= other.upper

    @property
    def is_exact(self) -> bool:
        return self.lower == self.upper


@dataclass(frozen=True)
class FuzzyRoughPair:
    lower: FuzzySet
    upper: FuzzySet

    def __le__(self, other: FuzzyRoughPair) -> bool:
        return self.lower <= other.lower and self.upper <= other.upper

    @property
    def is_exact(self) -> bool:
        return self.lower == self.upper


def crisp_approx(reference: CrispSet, partition: Partition) -> RoughPair:
    check_same_universe(reference, partition)
    lower: set[int] = set()
    upper: set[int] = set()
    for block in partition.blocks:
        if block.members <= reference.members:
            lower |= block.members
        if block.members & reference.members:
            upper |= block.members
    u = reference.universe
    return RoughPair(CrispSet(u, frozenset(lower)), CrispSet(u, frozenset(upper)))


def fuzzy_lower(reference: CrispSet, relation: FuzzyRelation) -> FuzzySet:
    """Membership ``1 - max{mu(x, y) | y not in A}``; all ones when A is the whole universe."""
    check_same_universe(reference, relation)
    outside = [y for y in range(relation.n) if y not in reference.members]
    if not outside:
        return FuzzySet(relation.universe, (ONE,) * relation.n)
    mu = relation.mu
    return FuzzySet(relation.universe, tuple(ONE - max(mu[x][y] for y in outside) for x in range(relation.n)))


def fuzzy_upper(reference: CrispSet, relation: FuzzyRelation) -> FuzzySet:
    """Membership ``max{mu(x, y) | y in A}``; all zeros for the empty set."""
    check_same_universe(reference, relation)
    inside = sorted(reference.members)
    if not inside:
        return FuzzySet(relation.universe, (ZERO,) * relation.n)
    mu = relation.mu
    return FuzzySet(relation.universe, tuple(max(mu[x][y] for y in inside) for x in range(relation.n)))


def fuzzy_rough_pair(reference: CrispSet, relation: FuzzyRelation) -> FuzzyRoughPair:
    return FuzzyRoughPair(fuzzy_lower(reference, relation), fuzzy_upper(reference, relation))


@dataclass(frozen=True)
class Lemma2Bridge:
    """
    Crisp approximations by the core E and the support S, each computed twice:
    through the partitions, and as core/support of the fuzzy approximations.
    The S-side fields are None when S could not be used (non-positive t-norm
    or a support that is not an equivalence).
    """

    ae_lower: CrispSet
    ae_upper: CrispSet
    as_lower: Optional[CrispSet]
    as_upper: Optional[CrispSet]
    mismatches: tuple[str, ...]
    verified: bool


def lemma2_bridge(reference: CrispSet, relation: FuzzyRelation, t: TNorm = TNorm.MINIMUM) -> Lemma2Bridge:
    check_same_universe(reference, relation)
    pair = fuzzy_rough_pair(reference, relation)
    mismatches = []

    by_core = crisp_approx(reference, classes(relation_core(relation)))
    if by_core.upper != core_of(pair.upper):
        mismatches.append("A^E != core(upper)")
    if by_core.lower != support_of(pair.lower):
        mismatches.append("A_E != support(lower)")

    as_lower = as_upper = None
    if t.is_positive:
        try:
            support_partition = classes(relation_support(relation, t))
        except NotAnEquivalence:
            mismatches.append("support is not an equivalence")
        else:
            by_support = crisp_approx(reference, support_partition)
            as_lower, as_upper = by_support.lower, by_support.upper
            if as_upper != support_of(pair.upper):
                mismatches.append("A^S != support(upper)")
            if as_lower != core_of(pair.lower):
                mismatches.append("A_S != core(lower)")

    return Lemma2Bridge(by_core.lower, by_core.upper, as_lower, as_upper, tuple(mismatches), not mismatches)


def prop1_check(reference: CrispSet, relation: FuzzyRelation) -> bool:
    """Fuzzy approximations of A equal those of its E-approximations (A^E for upper, A_E for lower)."""
    check_same_universe(reference, relation)
    by_core = crisp_approx(reference, classes(relation_core(relation)))
    return (
        fuzzy_upper(reference, relation) == fuzzy_upper(by_core.upper, relation)
        and fuzzy_lower(reference, relation) == fuzzy_lower(by_core.lower, relation)
    )
