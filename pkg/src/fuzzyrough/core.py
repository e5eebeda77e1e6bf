"""
Exact membership degrees, t-norms and sets over a finite universe.

Degrees are plain :class:`fractions.Fraction` values restricted to [0, 1].
Decimal input is converted exactly, so ``parse_degree("0.5") == Fraction(1, 2)``
and no rounding ever happens downstream.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import DegreeOutOfRange, ParseError, UniverseMismatch

Degree = Fraction
DegreeLike = Union[Fraction, int, str]

ZERO = Fraction(0)
ONE = Fraction(1)


def parse_degree(text: DegreeLike, position=None) -> Fraction:
    """Parse ``"0.5"``, ``"1/2"``, ``1`` or a Fraction into a checked degree."""
    if isinstance(text, bool):
        raise ParseError(f"not a degree: {text!r}", position)
    if isinstance(text, (Fraction, int)):
        value = Fraction(text)
    elif isinstance(text, str):
        try:
            value = Fraction(text.strip())
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"not a degree: {text!r}", position) from None
    else:
        # floats are rejected: their binary value is rarely the intended decimal
        raise ParseError(f"degrees must be strings or exact numbers, got {type(text).__name__}", position)
    if not ZERO <= value <= ONE:
        raise DegreeOutOfRange(f"degree {text!r} is outside [0, 1]", position)
    return value


def format_degree(value: Fraction) -> str:
    """Canonical reduced rational: ``0``, ``1``, ``1/2``."""
    return str(Fraction(value))


@dataclass(frozen=True)
class Universe:
    elements: tuple[str, ...]

    def __init__(self, elements: Iterable[str]):
        elements = tuple(str(e) for e in elements)
        if not elements:
            raise ValueError("a universe needs at least one element")
        if len(set(elements)) != len(elements):
            raise ValueError(f"universe labels must be distinct: {elements}")
        object.__setattr__(self, "elements", elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def index(self, label: str) -> int:
        try:
            return self.elements.index(label)
        except ValueError:
            raise KeyError(f"{label!r} is not in the universe") from None

    def label(self, i: int) -> str:
        return self.elements[i]

    @property
    def full_mask(self) -> int:
        return (1 << len(self.elements)) - 1


def check_same_universe(*objects) -> Universe:
    first = objects[0].universe
    for obj in objects[1:]:
        if obj.universe != first:
            raise UniverseMismatch(f"{first.elements} vs {obj.universe.elements}")
    return first


@dataclass(frozen=True)
class CrispSet:
    universe: Universe
    members: frozenset[int]

    def __post_init__(self):
        n = len(self.universe)
        members = frozenset(self.members)
        if any(not 0 <= i < n for i in members):
            raise ValueError(f"indices {sorted(members)} out of range for n={n}")
        object.__setattr__(self, "members", members)

    @classmethod
    def from_labels(cls, universe: Universe, labels: Iterable[str]) -> CrispSet:
        return cls(universe, frozenset(universe.index(x) for x in labels))

    @classmethod
    def from_mask(cls, universe: Universe, mask: int) -> CrispSet:
        return cls(universe, frozenset(i for i in range(len(universe)) if mask >> i & 1))

    @classmethod
    def empty(cls, universe: Universe) -> CrispSet:
        return cls(universe, frozenset())

    @classmethod
    def full(cls, universe: Universe) -> CrispSet:
        return cls(universe, frozenset(range(len(universe))))

    @property
    def mask(self) -> int:
        return sum(1 << i for i in self.members)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(self.universe.elements[i] for i in sorted(self.members))

    def complement(self) -> CrispSet:
        return CrispSet(self.universe, frozenset(range(len(self.universe))) - self.members)

    def __contains__(self, i: int) -> bool:
        return i in self.members

    def __iter__(self):
        return iter(sorted(self.members))

    def __len__(self) -> int:
        return len(self.members)

    def __le__(self, other: CrispSet) -> bool:
        check_same_universe(self, other)
        return self.members <= other.members

    def __or__(self, other: CrispSet) -> CrispSet:
        check_same_universe(self, other)
        return CrispSet(self.universe, self.members | other.members)

    def __and__(self, other: CrispSet) -> CrispSet:
        check_same_universe(self, other)
        return CrispSet(self.universe, self.members & other.members)

    def __str__(self) -> str:
        return "{" + ",".join(self.labels) + "}"

    def indicator(self) -> FuzzySet:
        return FuzzySet(self.universe, tuple(ONE if i in self.members else ZERO for i in range(len(self.universe))))


@dataclass(frozen=True)
class FuzzySet:
    universe: Universe
    degrees: tuple[Fraction, ...]

    def __post_init__(self):
        degrees = tuple(Fraction(d) for d in self.degrees)
        if len(degrees) != len(self.universe):
            raise ValueError(f"expected {len(self.universe)} degrees, got {len(degrees)}")
        if any(not ZERO <= d <= ONE for d in degrees):
            raise ValueError(f"degrees outside [0, 1]: {degrees}")
        object.__setattr__(self, "degrees", degrees)

    @classmethod
    def parse(cls, universe: Universe, values: Sequence[DegreeLike]) -> FuzzySet:
        return cls(universe, tuple(parse_degree(v) for v in values))

    @classmethod
    def constant(cls, universe: Universe, value: DegreeLike) -> FuzzySet:
        return cls(universe, (parse_degree(value),) * len(universe))

    def __getitem__(self, i: int) -> Fraction:
        return self.degrees[i]

    def __len__(self) -> int:
        return len(self.degrees)

    def __le__(self, other: FuzzySet) -> bool:
        check_same_universe(self, other)
        return all(x <= y for x, y in zip(self.degrees, other.degrees))

    def threshold(self, alpha: Fraction, strict: bool = False) -> CrispSet:
        """The crisp level set ``{x | F(x) >= alpha}`` (``>`` when strict)."""
        if strict:
            return CrispSet(self.universe, frozenset(i for i, d in enumerate(self.degrees) if d > alpha))
        return CrispSet(self.universe, frozenset(i for i, d in enumerate(self.degrees) if d >= alpha))

    def format(self) -> list[str]:
        return [format_degree(d) for d in self.degrees]

    def __str__(self) -> str:
        return "(" + ", ".join(self.format()) + ")"


def core_of(fuzzy: FuzzySet) -> CrispSet:
    return CrispSet(fuzzy.universe, frozenset(i for i, d in enumerate(fuzzy.degrees) if d == ONE))


def support_of(fuzzy: FuzzySet) -> CrispSet:
    return CrispSet(fuzzy.universe, frozenset(i for i, d in enumerate(fuzzy.degrees) if d > ZERO))


class TNorm(enum.Enum):
    MINIMUM = "min"
    PRODUCT = "product"
    LUKASIEWICZ = "lukasiewicz"

    @property
    def is_positive(self) -> bool:
        """True when T(x, y) > 0 for all x, y > 0."""
        return self is not TNorm.LUKASIEWICZ

    def __call__(self, x: Fraction, y: Fraction) -> Fraction:
        return tnorm_eval(self, x, y)

    @classmethod
    def parse(cls, name: str) -> TNorm:
        aliases = {"minimum": cls.MINIMUM, "prod": cls.PRODUCT, "luk": cls.LUKASIEWICZ}
        try:
            return aliases.get(name) or cls(name)
        except ValueError:
            raise ValueError(f"unknown t-norm {name!r}; choose min, product or lukasiewicz") from None


def tnorm_eval(t: TNorm, x: Fraction, y: Fraction) -> Fraction:
    if t is TNorm.MINIMUM:
        return min(x, y)
    if t is TNorm.PRODUCT:
        return x * y
    if t is TNorm.LUKASIEWICZ:
        return max(ZERO, x + y - ONE)
    raise TypeError(f"not a t-norm: {t!r}")
