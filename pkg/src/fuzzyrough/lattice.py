"""
Finite lattices of rough and fuzzy rough sets.

Elements are deduplicated approximation pairs over all reference sets A of
the universe, ordered component-wise. Meets and joins are found by scanning
the order matrix, never by a closed formula on the pairs, so the same code
checks arbitrary finite posets such as the M3 fixture in the tests.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Optional, Sequence

import numpy as np

from .approximation import FuzzyRoughPair, RoughPair, crisp_approx, fuzzy_rough_pair
from .core import CrispSet, TNorm, Universe, format_degree
from .errors import InvalidRelation, NotALattice, UniverseTooLarge
from .relation import FuzzyRelation, Partition, classes, relation_core, validate

MAX_UNIVERSE = 16
MAX_COMPLETE_CHECK = 20


class RoughLattice:
    """
    A finite poset of approximation pairs.

    ``kind`` is ``"crisp"`` (elements are :class:`RoughPair`), ``"fuzzy"``
    (:class:`FuzzyRoughPair`) or ``"abstract"`` (arbitrary labels, for fixtures).
    ``leq[i, j]`` is True iff element i <= element j. ``subset_index[mask]``
    maps every reference set (as a bitmask) to the element it produces and
    ``representatives[i]`` is the first reference set that produced element i.
    """

    def __init__(
        self,
        kind: str,
        elements: Sequence[Any],
        leq: np.ndarray,
        representatives: Sequence[Optional[CrispSet]] = (),
        subset_index: Sequence[int] = (),
        universe: Optional[Universe] = None,
    ):
        self.kind = kind
        self.elements = tuple(elements)
        leq = np.array(leq, dtype=bool)
        leq.setflags(write=False)
        self.leq = leq
        self.representatives = tuple(representatives)
        self.subset_index = tuple(subset_index)
        self.universe = universe

    @classmethod
    def from_order(cls, labels: Sequence[Any], less_or_equal) -> RoughLattice:
        """Abstract poset from labels and a predicate ``less_or_equal(a, b)``."""
        leq = [[bool(less_or_equal(a, b)) for b in labels] for a in labels]
        return cls("abstract", labels, np.array(leq, dtype=bool))

    @classmethod
    def from_covers(cls, labels: Sequence[Any], covers: Sequence[tuple[Any, Any]]) -> RoughLattice:
        """Abstract poset as the reflexive-transitive closure of cover pairs (lower, upper)."""
        index = {x: i for i, x in enumerate(labels)}
        n = len(labels)
        leq = np.eye(n, dtype=bool)
        for a, b in covers:
            leq[index[a], index[b]] = True
        for k in range(n):
            leq |= leq[:, [k]] & leq[[k], :]
        return cls("abstract", labels, leq)

    def __len__(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        return f"RoughLattice(kind={self.kind!r}, size={len(self)})"

    def is_partial_order(self) -> bool:
        leq = self.leq
        if not leq.diagonal().all():
            return False
        if (leq & leq.T & ~np.eye(len(self), dtype=bool)).any():
            return False
        li = leq.astype(np.int64)
        return not ((li @ li > 0) & ~leq).any()

    @cached_property
    def down_sizes(self) -> np.ndarray:
        return self.leq.sum(axis=0)

    @cached_property
    def cover_matrix(self) -> np.ndarray:
        lt = self.leq & ~np.eye(len(self), dtype=bool)
        li = lt.astype(np.int64)
        return lt & ~(li @ li > 0)

    @cached_property
    def covers(self) -> tuple[tuple[int, int], ...]:
        """Hasse diagram edges (lower, upper), sorted."""
        return tuple((int(i), int(j)) for i, j in zip(*np.nonzero(self.cover_matrix)))

    @cached_property
    def ranks(self) -> tuple[int, ...]:
        """Length of the longest chain from a minimal element up to each element."""
        rank = [0] * len(self)
        cover = self.cover_matrix
        for j in sorted(range(len(self)), key=lambda k: self.down_sizes[k]):
            below = np.nonzero(cover[:, j])[0]
            if below.size:
                rank[j] = max(rank[i] for i in below) + 1
        return tuple(rank)

    @cached_property
    def bottom(self) -> Optional[int]:
        found = np.nonzero(self.leq.all(axis=1))[0]
        return int(found[0]) if found.size else None

    @cached_property
    def top(self) -> Optional[int]:
        found = np.nonzero(self.leq.all(axis=0))[0]
        return int(found[0]) if found.size else None

    @cached_property
    def meet_table(self) -> np.ndarray:
        """``meet_table[i, j]`` is the greatest lower bound, or -1 if none exists."""
        return _bound_table(self.leq, self.down_sizes)

    @cached_property
    def join_table(self) -> np.ndarray:
        """``join_table[i, j]`` is the least upper bound, or -1 if none exists."""
        return _bound_table(self.leq.T, self.leq.sum(axis=1))

    def index_of(self, element) -> int:
        return self.elements.index(element)

    def label(self, i: int) -> str:
        return _element_label(self.elements[i])


def _bound_table(leq: np.ndarray, down_sizes: np.ndarray) -> np.ndarray:
    # leq[k, i]: k is below i. The meet of (i, j) is the common lower bound with
    # the largest down-set, provided every common lower bound sits below it.
    n = leq.shape[0]
    table = np.full((n, n), -1, dtype=np.int64)
    for i in range(n):
        common = leq[:, [i]] & leq  # common[k, j]: k <= i and k <= j
        score = np.where(common, down_sizes[:, None], -1)
        cand = score.argmax(axis=0)
        has_any = common.any(axis=0)
        dominated = ~(common & ~leq[:, cand]).any(axis=0)
        ok = has_any & dominated
        table[i, ok] = cand[ok]
    return table


@dataclass(frozen=True)
class Bounds:
    meet: int
    join: int


def bounds(lattice: RoughLattice, i: int, j: int) -> Bounds:
    n = len(lattice)
    if not (0 <= i < n and 0 <= j < n):
        raise IndexError(f"element indices must lie in [0, {n})")
    meet = int(lattice.meet_table[i, j])
    join = int(lattice.join_table[i, j])
    if meet < 0:
        raise NotALattice(f"elements {i} and {j} have no greatest lower bound")
    if join < 0:
        raise NotALattice(f"elements {i} and {j} have no least upper bound")
    return Bounds(meet, join)


def _check_size(universe: Universe, max_universe: int) -> None:
    if len(universe) > max_universe:
        raise UniverseTooLarge(
            f"universe has {len(universe)} elements; enumeration is capped at {max_universe} (2^n reference sets)"
        )


def _pair_vector(pair) -> tuple:
    if isinstance(pair, RoughPair):
        n = len(pair.lower.universe)
        return tuple(int(i in pair.lower.members) for i in range(n)) + tuple(
            int(i in pair.upper.members) for i in range(n)
        )
    return pair.lower.degrees + pair.upper.degrees


def _componentwise_order(elements: Sequence) -> np.ndarray:
    vectors = [_pair_vector(e) for e in elements]
    # order-preserving integer codes keep the comparison exact
    code = {v: k for k, v in enumerate(sorted({v for vec in vectors for v in vec}))}
    coded = np.array([[code[v] for v in vec] for vec in vectors], dtype=np.int64)
    if coded.size == 0:
        return np.zeros((0, 0), dtype=bool)
    leq = np.empty((len(vectors), len(vectors)), dtype=bool)
    for i in range(len(vectors)):
        leq[i] = (coded[i] <= coded).all(axis=1)
    return leq


def _enumerate(universe: Universe, kind: str, approximate) -> RoughLattice:
    index: dict = {}
    elements = []
    representatives = []
    subset_index = []
    for mask in range(1 << len(universe)):
        reference = CrispSet.from_mask(universe, mask)
        pair = approximate(reference)
        k = index.get(pair)
        if k is None:
            k = index[pair] = len(elements)
            elements.append(pair)
            representatives.append(reference)
        subset_index.append(k)
    return RoughLattice(kind, elements, _componentwise_order(elements), representatives, subset_index, universe)


def enumerate_crisp(partition: Partition, max_universe: int = MAX_UNIVERSE) -> RoughLattice:
    """All rough sets (A_E, A^E) for A ranging over every subset of the universe."""
    _check_size(partition.universe, max_universe)
    return _enumerate(partition.universe, "crisp", lambda a: crisp_approx(a, partition))


def enumerate_fuzzy(
    relation: FuzzyRelation, t: TNorm = TNorm.MINIMUM, max_universe: int = MAX_UNIVERSE
) -> RoughLattice:
    """All fuzzy rough pairs of crisp reference sets under a validated T-equivalence."""
    _check_size(relation.universe, max_universe)
    report = validate(relation, t)
    if not report.is_equivalence:
        raise InvalidRelation(f"not a {t.value}-equivalence: {report.witnesses[:3]}")
    return _enumerate(relation.universe, "fuzzy", lambda a: fuzzy_rough_pair(a, relation))


@dataclass
class IsomorphismWitness:
    mapping: tuple[int, ...]
    well_defined: bool
    bijective: bool
    order_preserving_both_ways: bool
    counterexamples: list = field(default_factory=list)
    crisp: Optional[RoughLattice] = None
    fuzzy: Optional[RoughLattice] = None

    @property
    def valid(self) -> bool:
        return self.well_defined and self.bijective and self.order_preserving_both_ways


def theorem1_verify(
    relation: FuzzyRelation, t: TNorm = TNorm.MINIMUM, max_universe: int = MAX_UNIVERSE
) -> IsomorphismWitness:
    """
    Check that (A_E, A^E) -> fuzzy rough pair of A is an order isomorphism
    between the rough set lattice of the core E and the fuzzy rough lattice.
    """
    fuzzy = enumerate_fuzzy(relation, t, max_universe)
    crisp = enumerate_crisp(classes(relation_core(relation)), max_universe)
    counterexamples: list = []

    mapping: list[Optional[int]] = [None] * len(crisp)
    well_defined = True
    for mask, (c, f) in enumerate(zip(crisp.subset_index, fuzzy.subset_index)):
        if mapping[c] is None:
            mapping[c] = f
        elif mapping[c] != f:
            well_defined = False
            counterexamples.append(("not well-defined", c, mapping[c], f, mask))

    image = [f for f in mapping if f is not None]
    bijective = None not in mapping and len(set(image)) == len(image) == len(fuzzy)
    if not bijective:
        counterexamples.append(("not bijective", len(crisp), len(fuzzy), len(set(image))))

    order_ok = True
    if well_defined and bijective:
        f = np.array(mapping, dtype=np.int64)
        mismatch = crisp.leq != fuzzy.leq[np.ix_(f, f)]
        if mismatch.any():
            order_ok = False
            for a, b in zip(*np.nonzero(mismatch)):
                counterexamples.append(("order", int(a), int(b), bool(crisp.leq[a, b])))
                if len(counterexamples) >= 16:
                    break
    else:
        order_ok = False

    final = tuple(-1 if m is None else int(m) for m in mapping)
    return IsomorphismWitness(final, well_defined, bijective, order_ok, counterexamples, crisp, fuzzy)


@dataclass
class StoneReport:
    is_lattice: bool
    is_distributive: bool
    stone_identity: bool
    dual_stone_identity: bool
    is_regular: bool
    is_complete: Optional[bool] = None  # None when the subset scan was skipped
    counterexamples: list = field(default_factory=list)
    pseudocomplement: Optional[tuple[int, ...]] = None
    dual_pseudocomplement: Optional[tuple[int, ...]] = None

    @property
    def all_true(self) -> bool:
        flags = [self.is_lattice, self.is_distributive, self.stone_identity, self.dual_stone_identity, self.is_regular]
        return all(flags) and self.is_complete is not False


def _extreme_in(candidates: np.ndarray, leq: np.ndarray, greatest: bool) -> int:
    """Greatest (or least) index among candidates under leq, -1 if none."""
    idx = np.nonzero(candidates)[0]
    for c in idx:
        if (leq[idx, c] if greatest else leq[c, idx]).all():
            return int(c)
    return -1


def stone_verify(lattice: RoughLattice, max_complete_check: int = MAX_COMPLETE_CHECK) -> StoneReport:
    """
    Check lattice, distributivity, Stone and dual Stone identities and regularity.

    Failures never raise: each false flag gets a counterexample tuple whose
    first entry names the check.
    """
    n = len(lattice)
    leq = lattice.leq
    cex: list = []

    if not lattice.is_partial_order():
        cex.append(("partial order",))
        return StoneReport(False, False, False, False, False, False, cex)

    M, J = lattice.meet_table, lattice.join_table
    missing = np.argwhere((M < 0) | (J < 0))
    bot, top = lattice.bottom, lattice.top
    if missing.size or bot is None or top is None:
        if missing.size:
            i, j = missing[0]
            cex.append(("lattice", int(i), int(j)))
        else:
            cex.append(("lattice", "no bounds"))
        for name in ("distributive", "stone", "dual stone", "regular"):
            cex.append((name, "requires a lattice"))
        return StoneReport(False, False, False, False, False, False, cex)

    distributive = True
    for x in range(n):
        lhs = M[x][J]
        mx = M[x]
        rhs = J[mx[:, None], mx[None, :]]
        bad = np.argwhere(lhs != rhs)
        if bad.size:
            y, z = bad[0]
            distributive = False
            cex.append(("distributive", x, int(y), int(z)))
            break

    star = [_extreme_in(M[:, a] == bot, leq, greatest=True) for a in range(n)]
    plus = [_extreme_in(J[:, a] == top, leq, greatest=False) for a in range(n)]

    stone = True
    for a in range(n):
        s = star[a]
        if s < 0 or star[s] < 0:
            stone = False
            cex.append(("stone", a, "no pseudocomplement"))
            break
        if J[s, star[s]] != top:
            stone = False
            cex.append(("stone", a, s, star[s]))
            break

    dual = True
    for a in range(n):
        p = plus[a]
        if p < 0 or plus[p] < 0:
            dual = False
            cex.append(("dual stone", a, "no dual pseudocomplement"))
            break
        if M[p, plus[p]] != bot:
            dual = False
            cex.append(("dual stone", a, p, plus[p]))
            break

    regular = True
    seen: dict = {}
    for a in range(n):
        key = (star[a], plus[a])
        if key in seen:
            regular = False
            cex.append(("regular", seen[key], a))
            break
        seen[key] = a
    if -1 in star or -1 in plus:
        regular = False
        cex.append(("regular", "pseudocomplements missing"))

    complete = None
    if n <= max_complete_check:
        complete = _every_subset_bounded(leq)
        if not complete:
            cex.append(("complete", "some subset lacks a bound"))

    return StoneReport(
        True, distributive, stone, dual, regular, complete, cex, tuple(star), tuple(plus)
    )


def _every_subset_bounded(leq: np.ndarray) -> bool:
    """Every subset (empty one included) has a least upper and a greatest lower bound."""
    n = leq.shape[0]
    up = [sum(1 << j for j in np.nonzero(leq[i])[0]) for i in range(n)]
    down = [sum(1 << j for j in np.nonzero(leq[:, i])[0]) for i in range(n)]
    # a least upper bound m of S satisfies up(m) == the set of upper bounds of S
    up_of = set(up)
    down_of = set(down)
    full = (1 << n) - 1
    ub = [full] * (1 << n)
    lb = [full] * (1 << n)
    if full not in up_of or full not in down_of:
        return False
    for s in range(1, 1 << n):
        low = s & -s
        k = low.bit_length() - 1
        ub[s] = ub[s ^ low] & up[k]
        lb[s] = lb[s ^ low] & down[k]
        if ub[s] not in up_of or lb[s] not in down_of:
            return False
    return True


def _element_label(element) -> str:
    if isinstance(element, FuzzyRoughPair):
        upper = " ".join(format_degree(d) for d in element.upper.degrees)
        lower = " ".join(format_degree(d) for d in element.lower.degrees)
        return f"{upper}\\n{lower}"
    if isinstance(element, RoughPair):
        n = len(element.lower.universe)
        upper = " ".join("1" if i in element.upper.members else "0" for i in range(n))
        lower = " ".join("1" if i in element.lower.members else "0" for i in range(n))
        return f"{upper}\\n{lower}"
    return str(element)


def to_dot(lattice: RoughLattice, name: str = "hasse") -> str:
    """
    Hasse diagram as Graphviz text. Node labels put the upper approximation on
    the first row and the lower one on the second. Nodes are numbered by
    (rank, label) so the output is byte-stable.
    """
    labels = [lattice.label(i) for i in range(len(lattice))]
    order = sorted(range(len(lattice)), key=lambda i: (lattice.ranks[i], labels[i]))
    node_id = {i: k for k, i in enumerate(order)}
    lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=box, fontname=monospace];", "  edge [arrowhead=none];"]
    if lattice.universe is not None:
        header = " ".join(lattice.universe.elements).replace('"', '\\"')
        lines.append(f'  label="{header}";')
    for i in order:
        label = labels[i].replace('"', '\\"')
        lines.append(f'  n{node_id[i]} [label="{label}"];')
    edges = sorted((node_id[a], node_id[b]) for a, b in lattice.covers)
    for a, b in edges:
        lines.append(f"  n{a} -> n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
