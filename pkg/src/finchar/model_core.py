"""Finite universes and lists, with the list predicate representations.

Subsets are stored as member bitmasks. List predicates use set semantics:
membership of a list depends only on the set of elements it mentions, so
every representation reduces to a test on a bitmask and, below the
exhaustive cap, to a table with one bit per subset (see ``_bits``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import TYPE_CHECKING, Iterable, Iterator

from . import _bits
from ._config import FincharError, UniverseMismatch, check_cap

if TYPE_CHECKING:
    from .gdc import Relation
    from .zorn import OrderedModel

__all__ = [
    "Universe",
    "BOOL",
    "UNIT",
    "Subset",
    "RawList",
    "CanonicalList",
    "ListPredicate",
    "Explicit",
    "SetBased",
    "DownwardClosureOf",
    "AlignmentOf",
    "SubchainsOf",
    "Complement",
    "SubsetPredicate",
    "star",
    "list_subseteq",
    "element_of",
    "hat",
    "canonicalize",
    "lp_member",
    "enumerate_subsets",
    "canonical_lists",
]


@dataclass(frozen=True)
class Universe:
    """A finite ground type with elements ``0 .. size-1``.

    ``kind`` is ``"atomic"``, ``"product"`` (``parts == (left, right)``,
    row-major indexing) or ``"bottom"`` (``parts == (base,)``, the extra
    element ⊥ has index ``base.size``).
    """

    name: str
    size: int
    kind: str = "atomic"
    parts: tuple[Universe, ...] = ()

    def __post_init__(self) -> None:
        if self.size < 0:
            raise ValueError(f"universe size must be >= 0, got {self.size}")
        if self.kind == "product":
            left, right = self.parts
            if self.size != left.size * right.size:
                raise ValueError("product size must be left.size * right.size")
        elif self.kind == "bottom":
            (base,) = self.parts
            if self.size != base.size + 1:
                raise ValueError("bottom-extended size must be base.size + 1")
        elif self.kind != "atomic" or self.parts:
            raise ValueError(f"unknown universe kind {self.kind!r}")

    @classmethod
    def atomic(cls, name: str, size: int) -> Universe:
        return cls(name, size)

    @classmethod
    def product(cls, left: Universe, right: Universe, name: str | None = None) -> Universe:
        return cls(name or f"{left.name}x{right.name}", left.size * right.size, "product", (left, right))

    @classmethod
    def bottom(cls, base: Universe, name: str | None = None) -> Universe:
        return cls(name or f"{base.name}_bot", base.size + 1, "bottom", (base,))

    @property
    def is_product(self) -> bool:
        return self.kind == "product"

    @property
    def left(self) -> Universe:
        self._require("product")
        return self.parts[0]

    @property
    def right(self) -> Universe:
        self._require("product")
        return self.parts[1]

    @property
    def base(self) -> Universe:
        self._require("bottom")
        return self.parts[0]

    @property
    def bottom_index(self) -> int:
        self._require("bottom")
        return self.parts[0].size

    @property
    def full_mask(self) -> int:
        return (1 << self.size) - 1

    def pair(self, a: int, b: int) -> int:
        self._require("product")
        left, right = self.parts
        if not (0 <= a < left.size and 0 <= b < right.size):
            raise IndexError(f"pair ({a},{b}) out of range for {self.name}")
        return a * right.size + b

    def unpair(self, index: int) -> tuple[int, int]:
        self._require("product")
        return divmod(index, self.parts[1].size)

    def check_index(self, index: int) -> None:
        if not 0 <= index < self.size:
            raise IndexError(f"element {index} out of range for universe {self.name} of size {self.size}")

    def render(self, index: int) -> str:
        """Element literal in ``.fch`` syntax."""
        if self.kind == "product":
            a, b = self.unpair(index)
            return f"({a},{b})"
        return str(index)

    def _require(self, kind: str) -> None:
        if self.kind != kind:
            raise FincharError(f"universe {self.name} is not a {kind} universe")


BOOL = Universe.atomic("Bool", 2)
UNIT = Universe.atomic("Unit", 1)


def _same_universe(x: Universe, y: Universe) -> None:
    if x != y:
        raise UniverseMismatch(f"universe mismatch: {x.name} vs {y.name}")


@dataclass(frozen=True)
class Subset:
    """An element set over a universe, stored as a member bitmask."""

    universe: Universe
    mask: int = 0

    def __post_init__(self) -> None:
        if self.mask < 0 or self.mask >> self.universe.size:
            raise IndexError(f"subset mask {self.mask:#x} out of range for {self.universe.name}")

    @classmethod
    def of(cls, universe: Universe, members: Iterable[int] = ()) -> Subset:
        mask = 0
        for m in members:
            universe.check_index(m)
            mask |= 1 << m
        return cls(universe, mask)

    @classmethod
    def full(cls, universe: Universe) -> Subset:
        return cls(universe, universe.full_mask)

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(_bits.iter_bits(self.mask))

    def __iter__(self) -> Iterator[int]:
        return _bits.iter_bits(self.mask)

    def __contains__(self, element: object) -> bool:
        return isinstance(element, int) and element >= 0 and bool(self.mask >> element & 1)

    def __len__(self) -> int:
        return _bits.popcount(self.mask)

    def issubset(self, other: Subset) -> bool:
        _same_universe(self.universe, other.universe)
        return self.mask & ~other.mask == 0

    def add(self, element: int) -> Subset:
        self.universe.check_index(element)
        return Subset(self.universe, self.mask | 1 << element)

    def render(self) -> str:
        return "{" + ", ".join(self.universe.render(m) for m in self) + "}"

    def __repr__(self) -> str:
        return f"Subset({self.universe.name}, {self.render()})"


@dataclass(frozen=True)
class RawList:
    """A list of element indices; order and duplicates are kept."""

    universe: Universe
    items: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        items = tuple(self.items)
        for i in items:
            self.universe.check_index(i)
        object.__setattr__(self, "items", items)

    @property
    def mask(self) -> int:
        mask = 0
        for i in self.items:
            mask |= 1 << i
        return mask

    def __len__(self) -> int:
        return len(self.items)

    def __iter__(self) -> Iterator[int]:
        return iter(self.items)

    def snoc(self, element: int) -> RawList:
        """Append one element: ``u@a``."""
        return RawList(self.universe, self.items + (element,))

    def render(self) -> str:
        return "[" + " ".join(self.universe.render(i) for i in self.items) + "]"


@dataclass(frozen=True)
class CanonicalList:
    """Sorted, duplicate-free list: the set-semantics representative."""

    universe: Universe
    items: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        items = tuple(self.items)
        for i in items:
            self.universe.check_index(i)
        if any(x >= y for x, y in zip(items, items[1:])):
            raise ValueError(f"canonical list items must be strictly increasing: {items}")
        object.__setattr__(self, "items", items)

    @staticmethod
    @lru_cache(maxsize=1 << 16)
    def from_mask(universe: Universe, mask: int) -> CanonicalList:
        return CanonicalList(universe, tuple(_bits.iter_bits(mask)))

    @property
    def mask(self) -> int:
        mask = 0
        for i in self.items:
            mask |= 1 << i
        return mask

    def __len__(self) -> int:
        return len(self.items)

    def __iter__(self) -> Iterator[int]:
        return iter(self.items)

    def as_raw(self) -> RawList:
        return RawList(self.universe, self.items)

    def render(self) -> str:
        return "[" + " ".join(self.universe.render(i) for i in self.items) + "]"


AnyList = RawList | CanonicalList


# ---------------------------------------------------------------- list algebra


def star(u: RawList, v: RawList) -> RawList:
    """Concatenation ``u ⋆ v``."""
    _same_universe(u.universe, v.universe)
    return RawList(u.universe, u.items + v.items)


def list_subseteq(u: AnyList, v: AnyList) -> bool:
    """Every element occurring in ``u`` occurs in ``v``."""
    _same_universe(u.universe, v.universe)
    return u.mask & ~v.mask == 0


def element_of(a: int, u: AnyList) -> bool:
    return list_subseteq(RawList(u.universe, (a,)), u)


def hat(u: AnyList) -> Subset:
    """The subset of elements occurring in ``u``."""
    return Subset(u.universe, u.mask)


def canonicalize(u: AnyList) -> CanonicalList:
    if isinstance(u, CanonicalList):
        return u
    return CanonicalList.from_mask(u.universe, u.mask)


def canonical_lists(universe: Universe) -> list[CanonicalList]:
    """All ``2**size`` canonical lists, in lexicographic order."""
    check_cap(universe.size)
    return sorted((CanonicalList.from_mask(universe, m) for m in range(1 << universe.size)), key=lambda u: u.items)


def enumerate_subsets(universe: Universe) -> list[Subset]:
    """All subsets in ascending member-mask order."""
    check_cap(universe.size)
    return [Subset(universe, m) for m in range(1 << universe.size)]


# ------------------------------------------------------------ list predicates


class ListPredicate:
    """A predicate on lists over ``universe`` with set semantics.

    Subclasses implement ``member_mask``; ``table`` is the derived bitset
    with bit ``m`` set iff the canonical list with element set ``m`` is a
    member (requires the universe to be within the exhaustive cap).
    """

    universe: Universe

    def member_mask(self, mask: int) -> bool:
        raise NotImplementedError

    @cached_property
    def table(self) -> int:
        check_cap(self.universe.size)
        out = 0
        for m in range(1 << self.universe.size):
            if self.member_mask(m):
                out |= 1 << m
        return out

    def __contains__(self, u: object) -> bool:
        if not isinstance(u, (RawList, CanonicalList)):
            return False
        return lp_member(self, u)

    def members(self) -> list[CanonicalList]:
        """Canonical members in lexicographic order."""
        found = (CanonicalList.from_mask(self.universe, m) for m in _bits.iter_bits(self.table))
        return sorted(found, key=lambda u: u.items)

    def same_extension(self, other: ListPredicate) -> bool:
        return self.universe == other.universe and self.table == other.table


def _coerce_canonical(universe: Universe, lists: Iterable) -> frozenset[CanonicalList]:
    out = set()
    for u in lists:
        if isinstance(u, (RawList, CanonicalList)):
            _same_universe(universe, u.universe)
            out.add(canonicalize(u))
        else:
            out.add(canonicalize(RawList(universe, tuple(u))))
    return frozenset(out)


@dataclass(frozen=True, eq=True)
class Explicit(ListPredicate):
    """A finite set of lists, stored canonicalized."""

    universe: Universe
    lists: frozenset[CanonicalList] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        object.__setattr__(self, "lists", _coerce_canonical(self.universe, self.lists))

    @classmethod
    def from_masks(cls, universe: Universe, masks: Iterable[int]) -> Explicit:
        return cls(universe, frozenset(CanonicalList.from_mask(universe, m) for m in masks))

    @cached_property
    def _masks(self) -> frozenset[int]:
        return frozenset(u.mask for u in self.lists)

    def member_mask(self, mask: int) -> bool:
        return mask in self._masks

    @cached_property
    def table(self) -> int:
        check_cap(self.universe.size)
        out = 0
        for m in self._masks:
            out |= 1 << m
        return out


@dataclass(frozen=True, eq=True)
class SetBased(ListPredicate):
    """A predicate given directly by its table on canonical lists."""

    universe: Universe
    table: int = 0  # type: ignore[assignment]

    def __post_init__(self) -> None:
        check_cap(self.universe.size)
        if self.table < 0 or self.table >> (1 << self.universe.size):
            raise ValueError("table has bits outside the universe")

    def member_mask(self, mask: int) -> bool:
        return bool(self.table >> mask & 1)


@dataclass(frozen=True, eq=True)
class DownwardClosureOf(ListPredicate):
    """``u`` is a member iff ``u ⊆ v`` for some stored list ``v``."""

    universe: Universe
    lists: frozenset[RawList] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        lists = set()
        for v in self.lists:
            if not isinstance(v, RawList):
                v = RawList(self.universe, tuple(v))
            _same_universe(self.universe, v.universe)
            lists.add(v)
        object.__setattr__(self, "lists", frozenset(lists))

    @cached_property
    def _maxima(self) -> tuple[int, ...]:
        return tuple({v.mask for v in self.lists})

    def member_mask(self, mask: int) -> bool:
        return any(mask & ~m == 0 for m in self._maxima)

    @cached_property
    def table(self) -> int:
        check_cap(self.universe.size)
        out = 0
        for m in self._maxima:
            out |= 1 << m
        return _bits.closure_down(out, self.universe.size)


@dataclass(frozen=True, eq=True)
class AlignmentOf(ListPredicate):
    """Positive alignment: every pair of the list satisfies the relation."""

    relation: Relation
    universe: Universe = None  # type: ignore[assignment]

    def __post_init__(self) -> None:
        rel = self.relation
        if self.universe is None:
            object.__setattr__(self, "universe", Universe.product(rel.left, rel.right))
        elif not (self.universe.is_product and self.universe.parts == (rel.left, rel.right)):
            raise UniverseMismatch(
                f"alignment universe {self.universe.name} is not {rel.left.name} x {rel.right.name}"
            )

    @cached_property
    def _allowed(self) -> int:
        mask = 0
        for a, b in self.relation.pairs:
            mask |= 1 << self.universe.pair(a, b)
        return mask

    def member_mask(self, mask: int) -> bool:
        return mask & ~self._allowed == 0


@dataclass(frozen=True, eq=True)
class SubchainsOf(ListPredicate):
    """``u`` is a member iff ``hat(u)`` is a subchain of the model's carrier."""

    model: OrderedModel

    @property
    def universe(self) -> Universe:  # type: ignore[override]
        return self.model.universe

    def member_mask(self, mask: int) -> bool:
        return self.model.is_chain_mask(mask)


@dataclass(frozen=True, eq=True)
class Complement(ListPredicate):
    inner: ListPredicate

    @property
    def universe(self) -> Universe:  # type: ignore[override]
        return self.inner.universe

    def member_mask(self, mask: int) -> bool:
        return not self.inner.member_mask(mask)

    @cached_property
    def table(self) -> int:
        return _bits.full_table(self.universe.size) ^ self.inner.table


def lp_member(T: ListPredicate, u: AnyList) -> bool:
    """Membership of ``u`` in ``T``; invariant under permutation and duplication."""
    _same_universe(T.universe, u.universe)
    return T.member_mask(canonicalize(u).mask)


# ---------------------------------------------------------- subset predicates


@dataclass(frozen=True)
class SubsetPredicate:
    """A truth table over all subsets of ``universe`` (bit ``m`` ↔ subset ``m``)."""

    universe: Universe
    table: int = 0

    def __post_init__(self) -> None:
        check_cap(self.universe.size)
        if self.table < 0 or self.table >> (1 << self.universe.size):
            raise ValueError("table has bits outside the universe")

    @classmethod
    def from_subsets(cls, universe: Universe, subsets: Iterable[Subset | Iterable[int]]) -> SubsetPredicate:
        table = 0
        for s in subsets:
            if not isinstance(s, Subset):
                s = Subset.of(universe, s)
            _same_universe(universe, s.universe)
            table |= 1 << s.mask
        return cls(universe, table)

    @classmethod
    def everything(cls, universe: Universe) -> SubsetPredicate:
        return cls(universe, _bits.full_table(universe.size))

    def holds(self, alpha: Subset) -> bool:
        _same_universe(self.universe, alpha.universe)
        return bool(self.table >> alpha.mask & 1)

    __contains__ = holds

    def holds_mask(self, mask: int) -> bool:
        return bool(self.table >> mask & 1)

    def subsets(self) -> list[Subset]:
        return [Subset(self.universe, m) for m in _bits.iter_bits(self.table)]

    def complement(self) -> SubsetPredicate:
        return SubsetPredicate(self.universe, _bits.full_table(self.universe.size) ^ self.table)

    def is_inhabited(self) -> bool:
        return self.table != 0

    def render(self) -> str:
        return "{" + ", ".join(s.render() for s in self.subsets()) + "}"


def check_same_universe(x: Universe, y: Universe) -> None:
    """Raise ``UniverseMismatch`` unless ``x == y``."""
    _same_universe(x, y)

