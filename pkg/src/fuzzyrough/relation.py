"""
Fuzzy relations on a finite universe, their crisp cuts and equivalence classes.
"""
from __future__ import annotations

import random
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .core import (
    ONE,
    ZERO,
    CrispSet,
    DegreeLike,
    TNorm,
    Universe,
    format_degree,
    parse_degree,
    tnorm_eval,
)
from .errors import NonPositiveTNormWarning, NotAnEquivalence, PreconditionViolated

MAX_WITNESSES = 16

RANDOM_GRID = (Fraction(0), Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), Fraction(1))


@dataclass(frozen=True)
class FuzzyRelation:
    universe: Universe
    mu: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        n = len(self.universe)
        mu = tuple(tuple(Fraction(v) for v in row) for row in self.mu)
        if len(mu) != n or any(len(row) != n for row in mu):
            raise ValueError(f"relation matrix must be {n}x{n}")
        if any(not ZERO <= v <= ONE for row in mu for v in row):
            raise ValueError("relation degrees must lie in [0, 1]")
        object.__setattr__(self, "mu", mu)

    @classmethod
    def from_rows(cls, labels: Iterable[str], rows: Sequence[Sequence[DegreeLike]]) -> FuzzyRelation:
        return cls(Universe(labels), tuple(tuple(parse_degree(v) for v in row) for row in rows))

    @classmethod
    def identity(cls, universe: Universe) -> FuzzyRelation:
        n = len(universe)
        return cls(universe, tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)))

    @property
    def n(self) -> int:
        return len(self.universe)

    def __call__(self, x: int, y: int) -> Fraction:
        return self.mu[x][y]

    def format_rows(self) -> list[list[str]]:
        return [[format_degree(v) for v in row] for row in self.mu]


@dataclass(frozen=True)
class CrispRelation:
    universe: Universe
    pairs: tuple[tuple[bool, ...], ...]

    def __post_init__(self):
        n = len(self.universe)
        pairs = tuple(tuple(bool(v) for v in row) for row in self.pairs)
        if len(pairs) != n or any(len(row) != n for row in pairs):
            raise ValueError(f"relation matrix must be {n}x{n}")
        object.__setattr__(self, "pairs", pairs)

    @classmethod
    def from_partition(cls, universe: Universe, blocks: Iterable[Iterable[str]]) -> CrispRelation:
        """Equivalence whose classes are the given label groups."""
        n = len(universe)
        pairs = [[False] * n for _ in range(n)]
        for block in blocks:
            idx = [universe.index(x) for x in block]
            for i in idx:
                for j in idx:
                    pairs[i][j] = True
        return cls(universe, tuple(map(tuple, pairs)))

    @property
    def n(self) -> int:
        return len(self.universe)

    def __call__(self, x: int, y: int) -> bool:
        return self.pairs[x][y]

    def __le__(self, other: CrispRelation) -> bool:
        return all(not a or b for ra, rb in zip(self.pairs, other.pairs) for a, b in zip(ra, rb))

    def is_reflexive(self) -> bool:
        return all(self.pairs[i][i] for i in range(self.n))

    def is_symmetric(self) -> bool:
        return all(self.pairs[i][j] == self.pairs[j][i] for i in range(self.n) for j in range(i))

    def is_transitive(self) -> bool:
        p, n = self.pairs, self.n
        return all(p[x][z] for x in range(n) for y in range(n) if p[x][y] for z in range(n) if p[y][z])

    def is_equivalence(self) -> bool:
        return self.is_reflexive() and self.is_symmetric() and self.is_transitive()

    def related(self, x: int) -> CrispSet:
        """The neighbourhood ``{y | (x, y) in C}``; the class of x for an equivalence."""
        return CrispSet(self.universe, frozenset(y for y in range(self.n) if self.pairs[x][y]))


@dataclass(frozen=True)
class Partition:
    universe: Universe
    blocks: tuple[CrispSet, ...]

    def __post_init__(self):
        blocks = tuple(sorted(self.blocks, key=lambda b: min(b.members, default=-1)))
        seen: set[int] = set()
        for b in blocks:
            if not b.members:
                raise ValueError("partition blocks must be nonempty")
            if seen & b.members:
                raise ValueError("partition blocks overlap")
            seen |= b.members
        if seen != set(range(len(self.universe))):
            raise ValueError("partition blocks do not cover the universe")
        object.__setattr__(self, "blocks", blocks)

    @classmethod
    def from_labels(cls, universe: Universe, blocks: Iterable[Iterable[str]]) -> Partition:
        return cls(universe, tuple(CrispSet.from_labels(universe, b) for b in blocks))

    @classmethod
    def discrete(cls, universe: Universe) -> Partition:
        return cls(universe, tuple(CrispSet(universe, frozenset([i])) for i in range(len(universe))))

    def block_of(self, x: int) -> CrispSet:
        for b in self.blocks:
            if x in b.members:
                return b
        raise IndexError(x)

    def label_blocks(self) -> list[list[str]]:
        return [list(b.labels) for b in self.blocks]

    def __len__(self) -> int:
        return len(self.blocks)


@dataclass
class ValidationReport:
    reflexive: bool
    symmetric: bool
    t_transitive: bool
    witnesses: list = field(default_factory=list)
    spectrum_dually_well_ordered: bool = True

    @property
    def is_equivalence(self) -> bool:
        return self.reflexive and self.symmetric and self.t_transitive


def validate(relation: FuzzyRelation, t: TNorm = TNorm.MINIMUM) -> ValidationReport:
    """
    Check reflexivity, symmetry and T-transitivity with a full scan.

    Witnesses are tuples tagged by the failed property:
    ``("reflexive", x, mu(x,x))``, ``("symmetric", x, y, mu(x,y), mu(y,x))`` and
    ``("transitive", x, y, z, T(mu(x,y), mu(y,z)), mu(x,z))``. At most
    ``MAX_WITNESSES`` are kept; the verdicts always reflect the whole scan.
    """
    mu, n = relation.mu, relation.n
    witnesses: list = []

    def note(w):
        if len(witnesses) < MAX_WITNESSES:
            witnesses.append(w)

    reflexive = True
    for x in range(n):
        if mu[x][x] != ONE:
            reflexive = False
            note(("reflexive", x, mu[x][x]))
    symmetric = True
    for x in range(n):
        for y in range(x + 1, n):
            if mu[x][y] != mu[y][x]:
                symmetric = False
                note(("symmetric", x, y, mu[x][y], mu[y][x]))
    transitive = True
    for x in range(n):
        for y in range(n):
            for z in range(n):
                joint = tnorm_eval(t, mu[x][y], mu[y][z])
                if joint > mu[x][z]:
                    transitive = False
                    note(("transitive", x, y, z, joint, mu[x][z]))
    # a finite spectrum always has maxima in every nonempty subset
    return ValidationReport(reflexive, symmetric, transitive, witnesses, True)


def spectrum(relation: FuzzyRelation) -> list[Fraction]:
    return sorted({v for row in relation.mu for v in row})


def alpha_cut(relation: FuzzyRelation, alpha: Fraction) -> CrispRelation:
    return CrispRelation(relation.universe, tuple(tuple(v >= alpha for v in row) for row in relation.mu))


def relation_core(relation: FuzzyRelation) -> CrispRelation:
    return alpha_cut(relation, ONE)


def relation_support(relation: FuzzyRelation, t: Optional[TNorm] = None) -> CrispRelation:
    """
    Pairs with nonzero degree. Transitivity of the result relies on a positive
    t-norm, so a :class:`NonPositiveTNormWarning` is issued when ``t`` is not one.
    """
    if t is not None and not t.is_positive:
        warnings.warn(
            f"support of a {t.value}-equivalence need not be transitive",
            NonPositiveTNormWarning,
            stacklevel=2,
        )
    return CrispRelation(relation.universe, tuple(tuple(v > ZERO for v in row) for row in relation.mu))


def classes(relation: CrispRelation) -> Partition:
    if not relation.is_reflexive():
        raise NotAnEquivalence("relation is not reflexive")
    if not relation.is_symmetric():
        raise NotAnEquivalence("relation is not symmetric")
    if not relation.is_transitive():
        raise NotAnEquivalence("relation is not transitive")
    blocks = {relation.related(x) for x in range(relation.n)}
    return Partition(relation.universe, tuple(blocks))


def min_transitive_closure(relation: FuzzyRelation) -> FuzzyRelation:
    """Least min-transitive relation above a reflexive, symmetric one (max-min iteration)."""
    mu, n = [list(row) for row in relation.mu], relation.n
    if any(mu[i][i] != ONE for i in range(n)) or any(mu[i][j] != mu[j][i] for i in range(n) for j in range(n)):
        raise PreconditionViolated("closure needs a reflexive and symmetric relation")
    changed = True
    while changed:
        changed = False
        for x in range(n):
            for z in range(n):
                best = max(min(mu[x][y], mu[y][z]) for y in range(n))
                if best > mu[x][z]:
                    mu[x][z] = best
                    changed = True
    return FuzzyRelation(relation.universe, tuple(map(tuple, mu)))


def random_min_equivalence(
    n: int,
    rng: random.Random,
    grid: Sequence[Fraction] = RANDOM_GRID,
    labels: Optional[Sequence[str]] = None,
) -> FuzzyRelation:
    """Random min-equivalence: symmetric grid entries, unit diagonal, then closed."""
    if labels is None:
        labels = [chr(ord("a") + i) if n <= 26 else f"x{i}" for i in range(n)]
    mu = [[ONE] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            mu[i][j] = mu[j][i] = rng.choice(grid)
    return min_transitive_closure(FuzzyRelation(Universe(labels), tuple(map(tuple, mu))))
