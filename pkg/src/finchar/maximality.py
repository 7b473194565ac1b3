"""Updates, maximal elements and the TTL / TTLco / GUI statements."""

from __future__ import annotations

import enum

from .closures import eng, eng_exists
from .model_core import (
    ListPredicate,
    Subset,
    SubsetPredicate,
    check_same_universe,
    enumerate_subsets,
)

__all__ = [
    "Principle",
    "updates",
    "is_maximal",
    "ttl_witness",
    "max_elements",
    "evaluate_principle",
]


class Principle(str, enum.Enum):
    TTL = "ttl"
    TTLCO = "ttlco"
    GUI = "gui"


def updates(alpha: Subset) -> list[Subset]:
    """Every one-element extension ``alpha ∪ {a}``, ``a`` ascending."""
    return [alpha.add(a) for a in range(alpha.universe.size) if a not in alpha]


def is_maximal(P: SubsetPredicate, alpha: Subset) -> bool:
    check_same_universe(P.universe, alpha.universe)
    return P.holds(alpha) and not any(P.holds(beta) for beta in updates(alpha))


def ttl_witness(T: ListPredicate) -> Subset | None:
    """A ≺-maximal element of ``eng(T)``, or ``None`` when ``ε ∉ T``.

    Greedy from the empty set, trying elements in index order. One pass is
    enough: ``eng(T)`` is downward closed, so an element rejected early is
    rejected for every larger set.
    """
    P = eng(T)
    if not P.holds_mask(0):
        return None
    mask = 0
    for a in range(T.universe.size):
        if P.holds_mask(mask | 1 << a):
            mask |= 1 << a
    return Subset(T.universe, mask)


def max_elements(P: SubsetPredicate) -> list[Subset]:
    return [alpha for alpha in enumerate_subsets(P.universe) if is_maximal(P, alpha)]


def evaluate_principle(T: ListPredicate, kind: Principle | str) -> bool:
    """Truth of the closed statement ``kind`` instantiated at ``T``.

    ``β ≺ α`` means β extends α, so "for all β ≺ α" ranges over
    ``updates(α)``.
    """
    kind = Principle(kind)
    subsets = enumerate_subsets(T.universe)
    if kind is Principle.TTL:
        P = eng(T)
        premise = any(P.holds(a) for a in subsets)
        return not premise or any(is_maximal(P, a) for a in subsets)
    if kind is Principle.TTLCO:
        P = eng(T)
        premise = all(not P.holds(a) or any(P.holds(b) for b in updates(a)) for a in subsets)
        return not premise or all(not P.holds(a) for a in subsets)
    Q = eng_exists(T)
    premise = all(not all(Q.holds(b) for b in updates(a)) or Q.holds(a) for a in subsets)
    return not premise or all(Q.holds(a) for a in subsets)
