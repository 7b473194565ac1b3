"""Approximability, choice functions, positive alignments and the ⊥-lifting.

``phi_step`` is the one-step extension operator; its greatest fixed point
is computed on the finite carrier of partial-function-shaped canonical
lists (each ``a`` paired at most once), which is all that extension from
``ε`` can ever reach.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from . import _bits
from ._config import FincharError, check_cap
from .closures import eng
from .model_core import (
    AlignmentOf,
    CanonicalList,
    DownwardClosureOf,
    ListPredicate,
    RawList,
    Universe,
    check_same_universe,
)
from .partial_functions import PFun, functional_masks

__all__ = [
    "Relation",
    "phi_step",
    "approximation",
    "choice_witness",
    "positive_alignment",
    "is_downward_prime",
    "relation_of",
    "erase_bottom",
    "lift_bottom",
    "lift_choice",
]


@dataclass(frozen=True)
class Relation:
    """A set of pairs ``(a, b)`` with ``a`` in ``left`` and ``b`` in ``right``."""

    left: Universe
    right: Universe
    pairs: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        pairs = frozenset((int(a), int(b)) for a, b in self.pairs)
        for a, b in pairs:
            self.left.check_index(a)
            self.right.check_index(b)
        object.__setattr__(self, "pairs", pairs)

    def __contains__(self, pair: object) -> bool:
        return pair in self.pairs

    def render(self) -> str:
        return "{" + ", ".join(f"({a},{b})" for a, b in sorted(self.pairs)) + "}"


def _require_product(T: ListPredicate) -> Universe:
    if not T.universe.is_product:
        raise FincharError(f"universe {T.universe.name} is not a product A x B")
    check_cap(T.universe.size)
    return T.universe


def _phi(universe: Universe, allowed: int, X: frozenset[int]) -> frozenset[int]:
    A, B = universe.left.size, universe.right.size
    rows = [sum(1 << universe.pair(a, b) for b in range(B)) for a in range(A)]
    out = set()
    for u in X:
        if not allowed >> u & 1:
            continue
        if all(
            u & rows[a] or any(u | 1 << universe.pair(a, b) in X for b in range(B))
            for a in range(A)
        ):
            out.add(u)
    return frozenset(out)


def phi_step(T: ListPredicate, X: Iterable[CanonicalList]) -> frozenset[CanonicalList]:
    """Keep ``u ∈ X`` that lie in ``restrict(eng(T))`` and extend into ``X`` at every fresh ``a``."""
    universe = _require_product(T)
    masks = set()
    for u in X:
        check_same_universe(universe, u.universe)
        masks.add(u.mask)
    kept = _phi(universe, eng(T).table, frozenset(masks))
    return frozenset(CanonicalList.from_mask(universe, m) for m in kept)


def _gfp(T: ListPredicate) -> frozenset[int]:
    universe = _require_product(T)
    allowed = eng(T).table
    X = frozenset(m for m in functional_masks(universe) if allowed >> m & 1)
    while True:
        nxt = _phi(universe, allowed, X)
        if nxt == X:
            return X
        X = nxt


def approximation(T: ListPredicate) -> tuple[frozenset[CanonicalList], bool]:
    """Greatest fixed point of ``phi_step`` and whether ``ε`` belongs to it."""
    gfp = _gfp(T)
    lists = frozenset(CanonicalList.from_mask(T.universe, m) for m in gfp)
    return lists, 0 in gfp


def choice_witness(T: ListPredicate) -> PFun | None:
    """A total ``f`` with ``graph(f) ∈ eng(T)``, or ``None`` if ``T`` is not approximable.

    Extends ``ε`` inside the fixed point, smallest ``a`` first, then the
    smallest ``b`` that keeps the list in the fixed point.
    """
    gfp = _gfp(T)
    if 0 not in gfp:
        return None
    universe = T.universe
    u = 0
    table = []
    for a in range(universe.left.size):
        for b in range(universe.right.size):
            if u | 1 << universe.pair(a, b) in gfp:
                u |= 1 << universe.pair(a, b)
                table.append(b)
                break
        else:
            raise AssertionError("fixed point member without an extension")
    return PFun(universe, tuple(table))


def positive_alignment(R: Relation, universe: Universe | None = None) -> AlignmentOf:
    return AlignmentOf(R, universe)


def is_downward_prime(T: ListPredicate) -> bool:
    """Members are closed under concatenation (union of element sets)."""
    check_cap(T.universe.size)
    table = T.table
    members = list(_bits.iter_bits(table))
    for i, u in enumerate(members):
        for v in members[i + 1:]:
            if not table >> (u | v) & 1:
                return False
    return True


def relation_of(T: ListPredicate) -> Relation:
    """``{(a, b) : [(a, b)] ∈ T}``."""
    universe = T.universe
    if not universe.is_product:
        raise FincharError(f"universe {universe.name} is not a product A x B")
    pairs = frozenset(
        (a, b)
        for a in range(universe.left.size)
        for b in range(universe.right.size)
        if T.member_mask(1 << universe.pair(a, b))
    )
    return Relation(universe.left, universe.right, pairs)


def _lifted_universe(universe: Universe) -> Universe:
    return Universe.product(universe.left, Universe.bottom(universe.right))


def erase_bottom(u: RawList, target: Universe | None = None) -> RawList:
    """Drop every ``(a, ⊥)`` pair, landing in ``A × B``."""
    lifted = u.universe
    if not (lifted.is_product and lifted.right.kind == "bottom"):
        raise FincharError(f"universe {lifted.name} is not of the form A x B_bot")
    bot = lifted.right.bottom_index
    if target is None:
        target = Universe.product(lifted.left, lifted.right.base)
    items = []
    for x in u.items:
        a, c = lifted.unpair(x)
        if c != bot:
            items.append(target.pair(a, c))
    return RawList(target, tuple(items))


def lift_bottom(T: ListPredicate) -> DownwardClosureOf:
    """The ⊥-lifted predicate over ``A × B_⊥``.

    Stage ``k`` extends each stage-``k-1`` list ``u`` by every ``(k, b)``
    with ``erase(u)@(k, b)`` in ``restrict(eng(T))``, or by ``(k, ⊥)`` when
    no such ``b`` exists. The result is the ``⊆``-downward closure of all
    stages.
    """
    universe = _require_product(T)
    lifted = _lifted_universe(universe)
    check_cap(lifted.size)
    allowed = eng(T).table
    bot = universe.right.size
    stage: list[tuple[tuple[int, ...], int]] = [((), 0)]  # (lifted items, erased mask)
    lists = {()}
    for k in range(universe.left.size):
        nxt = []
        for items, erased in stage:
            extended = False
            for b in range(universe.right.size):
                grown = erased | 1 << universe.pair(k, b)
                if allowed >> grown & 1:
                    nxt.append((items + (lifted.pair(k, b),), grown))
                    extended = True
            if not extended:
                nxt.append((items + (lifted.pair(k, bot),), erased))
        stage = nxt
        lists.update(items for items, _ in stage)
    return DownwardClosureOf(lifted, frozenset(RawList(lifted, u) for u in lists))


def lift_choice(T: ListPredicate) -> PFun | None:
    """Choice function of ``lift_bottom(T)`` with ⊥ read back as undefined."""
    lifted = lift_bottom(T)
    f = choice_witness(lifted)
    if f is None:
        return None
    bot = lifted.universe.right.bottom_index
    return PFun(T.universe, tuple(None if c == bot else c for c in f.table))
