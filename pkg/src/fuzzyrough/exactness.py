"""
Exact reference sets, the three-valued (certain / uncertain / unrelated) model,
and the alpha-cut threshold identities.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .approximation import FuzzyRoughPair, crisp_approx, fuzzy_rough_pair
from .core import ONE, ZERO, CrispSet, FuzzySet, TNorm, check_same_universe
from .errors import InvalidAlpha, InvalidRelation, NotAnEquivalence, PreconditionViolated
from .relation import CrispRelation, FuzzyRelation, alpha_cut, classes, relation_support, validate

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class ExactnessRecord:
    set: CrispSet
    fuzzy_exact: bool
    s_exact: bool

    @property
    def agree(self) -> bool:
        return self.fuzzy_exact == self.s_exact


def exactness_scan(relation: FuzzyRelation, t: TNorm = TNorm.MINIMUM) -> list[ExactnessRecord]:
    """One record per reference set, comparing fuzzy exactness with exactness under the support S."""
    report = validate(relation, t)
    if not report.is_equivalence:
        raise InvalidRelation(f"not a {t.value}-equivalence: {report.witnesses[:3]}")
    try:
        partition = classes(relation_support(relation, t))
    except NotAnEquivalence as exc:
        raise InvalidRelation(f"support is not an equivalence: {exc}") from exc
    records = []
    for mask in range(1 << relation.n):
        reference = CrispSet.from_mask(relation.universe, mask)
        pair = fuzzy_rough_pair(reference, relation)
        rough = crisp_approx(reference, partition)
        records.append(ExactnessRecord(reference, pair.lower == pair.upper, rough.lower == rough.upper))
    return records


def exact_sets(records: list[ExactnessRecord]) -> list[CrispSet]:
    return [r.set for r in records if r.fuzzy_exact]


def three_valued_relation(certain: CrispRelation, possible: CrispRelation) -> FuzzyRelation:
    """Degree 1 on certain pairs, 1/2 on merely possible ones, 0 elsewhere."""
    check_same_universe(certain, possible)
    if not (certain.is_equivalence() and possible.is_equivalence()):
        raise PreconditionViolated("certain and possible relations must both be equivalences")
    if not certain <= possible:
        raise PreconditionViolated("every certain pair must also be possible")
    mu = tuple(
        tuple(ONE if c else HALF if p else ZERO for c, p in zip(crow, prow))
        for crow, prow in zip(certain.pairs, possible.pairs)
    )
    return FuzzyRelation(certain.universe, mu)


def three_valued_cases(certain: CrispRelation, possible: CrispRelation, reference: CrispSet) -> FuzzyRoughPair:
    """Piecewise form: lower is 1 on A_S, 1/2 on A_E minus A_S, else 0; upper is 1 on A^E, 1/2 on A^S minus A^E, else 0."""
    by_e = crisp_approx(reference, classes(certain))
    by_s = crisp_approx(reference, classes(possible))

    def grade(x, strong, weak):
        if x in strong.members:
            return ONE
        if x in weak.members:
            return HALF
        return ZERO

    u, n = reference.universe, len(reference.universe)
    lower = FuzzySet(u, tuple(grade(x, by_s.lower, by_e.lower) for x in range(n)))
    upper = FuzzySet(u, tuple(grade(x, by_e.upper, by_s.upper) for x in range(n)))
    return FuzzyRoughPair(lower, upper)


class RouteMismatch(AssertionError):
    pass


def three_valued_approx(certain: CrispRelation, possible: CrispRelation, reference: CrispSet) -> FuzzyRoughPair:
    """
    Fuzzy rough pair of ``reference`` under the three-valued relation built from
    ``certain`` and ``possible``, cross-checked against the piecewise formulas.
    Raises :class:`RouteMismatch` if the two computations differ.
    """
    relation = three_valued_relation(certain, possible)
    check_same_universe(reference, relation)
    general = fuzzy_rough_pair(reference, relation)
    cases = three_valued_cases(certain, possible, reference)
    if general != cases:
        raise RouteMismatch(f"operators give {general}, case formulas give {cases}")
    return general


@dataclass(frozen=True)
class AlphaIdentities:
    upper_holds: bool
    lower_holds: bool

    @property
    def both(self) -> bool:
        return self.upper_holds and self.lower_holds


def alpha_identities(relation: FuzzyRelation, reference: CrispSet, alpha: Fraction) -> AlphaIdentities:
    """Compare rough approximation by the alpha-cut with level sets of the fuzzy pair (upper >= alpha, lower > 1 - alpha)."""
    alpha = Fraction(alpha)
    if not ZERO < alpha <= ONE:
        raise InvalidAlpha(f"alpha must lie in (0, 1], got {alpha}")
    check_same_universe(reference, relation)
    rough = crisp_approx(reference, classes(alpha_cut(relation, alpha)))
    pair = fuzzy_rough_pair(reference, relation)
    return AlphaIdentities(
        upper_holds=rough.upper == pair.upper.threshold(alpha),
        lower_holds=rough.lower == pair.lower.threshold(ONE - alpha, strict=True),
    )


def alpha_sweep(relation: FuzzyRelation) -> list[Fraction]:
    """Positive spectrum values plus midpoints between consecutive spectrum values."""
    values = sorted({v for row in relation.mu for v in row} | {ZERO})
    sweep = set(v for v in values if v > ZERO)
    sweep |= {(a + b) / 2 for a, b in zip(values, values[1:])}
    return sorted(sweep)
