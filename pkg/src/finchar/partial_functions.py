"""Partial functions ``A → B_⊥`` and maximal partial choice functions.

On finite universes relational and decidable partial functions coincide,
so a single ``PFun`` (a total table with ``None`` standing for ⊥) serves
both readings.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from ._config import FincharError, check_cap
from .maximality import ttl_witness
from .model_core import UNIT, ListPredicate, SetBased, Subset, Universe

__all__ = [
    "PFun",
    "pf_graph",
    "pf_updates",
    "pfun_from_graph",
    "functional_table",
    "pfun_filter",
    "project_unit",
    "empcf_witness",
    "functional_masks",
    "pfuns",
]


@dataclass(frozen=True)
class PFun:
    """A partial function stored as one entry per domain element (``None`` = ⊥).

    ``universe`` is the product ``A × B`` the graph lives in.
    """

    universe: Universe
    table: tuple[int | None, ...]

    def __post_init__(self) -> None:
        if not self.universe.is_product:
            raise FincharError("a partial function needs a product universe A x B")
        table = tuple(self.table)
        if len(table) != self.universe.left.size:
            raise ValueError(f"table has {len(table)} entries, domain has {self.universe.left.size}")
        for b in table:
            if b is not None:
                self.universe.right.check_index(b)
        object.__setattr__(self, "table", table)

    @classmethod
    def make(cls, A: Universe, B: Universe, table: Sequence[int | None], universe: Universe | None = None) -> PFun:
        return cls(universe or Universe.product(A, B), tuple(table))

    @classmethod
    def nowhere(cls, universe: Universe) -> PFun:
        return cls(universe, (None,) * universe.left.size)

    @property
    def domain_universe(self) -> Universe:
        return self.universe.left

    @property
    def codomain_universe(self) -> Universe:
        return self.universe.right

    def __call__(self, a: int) -> int | None:
        return self.table[a]

    @property
    def dom(self) -> Subset:
        return Subset.of(self.domain_universe, (a for a, b in enumerate(self.table) if b is not None))

    @property
    def graph_mask(self) -> int:
        mask = 0
        for a, b in enumerate(self.table):
            if b is not None:
                mask |= 1 << self.universe.pair(a, b)
        return mask

    def is_total(self) -> bool:
        return None not in self.table

    def render(self) -> str:
        """Graph as an ``.fch`` pair-set literal."""
        return "{" + ", ".join(f"({a},{b})" for a, b in enumerate(self.table) if b is not None) + "}"


def pf_graph(f: PFun) -> Subset:
    return Subset(f.universe, f.graph_mask)


def pf_updates(f: PFun) -> list[PFun]:
    """Extensions of ``f`` at one undefined point, ordered by ``(a, b)``."""
    out = []
    for a, value in enumerate(f.table):
        if value is None:
            for b in range(f.codomain_universe.size):
                out.append(PFun(f.universe, f.table[:a] + (b,) + f.table[a + 1:]))
    return out


def pfun_from_graph(universe: Universe, mask: int) -> PFun:
    table: list[int | None] = [None] * universe.left.size
    for a in range(universe.left.size):
        for b in range(universe.right.size):
            if mask >> universe.pair(a, b) & 1:
                if table[a] is not None:
                    raise FincharError(f"graph is not functional at {a}")
                table[a] = b
    return PFun(universe, tuple(table))


@lru_cache(maxsize=None)
def functional_masks(universe: Universe) -> tuple[int, ...]:
    """Masks over ``A × B`` with at most one pair per ``a``."""
    masks = [0]
    for a in range(universe.left.size):
        row = [0] + [1 << universe.pair(a, b) for b in range(universe.right.size)]
        masks = [m | r for m in masks for r in row]
    return tuple(sorted(masks))


@lru_cache(maxsize=None)
def functional_table(universe: Universe) -> int:
    check_cap(universe.size)
    out = 0
    for m in functional_masks(universe):
        out |= 1 << m
    return out


def pfun_filter(T: ListPredicate) -> SetBased:
    """Members of ``T`` that never pair one ``a`` with two different ``b``."""
    return SetBased(T.universe, T.table & functional_table(T.universe))


def project_unit(T: ListPredicate) -> SetBased:
    """Pull ``T`` back along the projection ``(A × 1)* → A*``.

    Pair ``(a, 0)`` has index ``a`` in ``A × 1``, so the table carries over
    unchanged.
    """
    return SetBased(Universe.product(T.universe, UNIT), T.table)


def empcf_witness(T: ListPredicate) -> PFun | None:
    """A partial function maximal for ``eng(T)``; ``None`` when ``ε ∉ T``.

    Computed as the greedy maximal element of ``eng(pfun_filter(T))``
    (pairs tried row-major), read back as a function.
    """
    if not T.universe.is_product:
        raise FincharError(f"universe {T.universe.name} is not a product A x B")
    alpha = ttl_witness(pfun_filter(T))
    if alpha is None:
        return None
    return pfun_from_graph(T.universe, alpha.mask)


def pfuns(universe: Universe) -> Iterable[PFun]:
    """Every partial function over ``universe`` (used by brute-force checks)."""
    return (pfun_from_graph(universe, m) for m in functional_masks(universe))
