"""Strict orders, chains, inductive carriers and Zorn witnesses.

A Zorn witness is not searched for directly: the subchains of the carrier
are presented as a list predicate, a ≺-maximal chain is extracted with
``ttl_witness`` and its upper bound is returned. Chain grammars (lists of
chains) are the syntactic presentation of subchain predicates.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from . import _bits
from ._config import GrammarError, OrderError, check_cap
from .closures import eng
from .maximality import ttl_witness
from .model_core import (
    DownwardClosureOf,
    ListPredicate,
    RawList,
    Subset,
    SubsetPredicate,
    Universe,
    check_same_universe,
)

__all__ = [
    "OrderedModel",
    "ChainGrammar",
    "is_subchain",
    "is_inductive",
    "zorn_witness",
    "chain_lists",
    "subchains_as_listpred",
    "chain_grammar_check",
    "grammar_violation",
    "order_of_grammar",
    "subset_inclusion_model",
    "ttl_via_zorn",
]


@dataclass(frozen=True)
class OrderedModel:
    """A strict order ``lt`` on ``universe`` together with a carrier ``E``."""

    universe: Universe
    lt: frozenset[tuple[int, int]] = field(default_factory=frozenset)
    carrier: Subset | None = None

    def __post_init__(self) -> None:
        lt = frozenset((int(a), int(b)) for a, b in self.lt)
        object.__setattr__(self, "lt", lt)
        if self.carrier is None:
            object.__setattr__(self, "carrier", Subset.full(self.universe))
        check_same_universe(self.universe, self.carrier.universe)
        for a, b in lt:
            self.universe.check_index(a)
            self.universe.check_index(b)
            if a == b:
                raise OrderError(f"order is not irreflexive: ({a},{a})")
        for a, b in lt:
            for c in _bits.iter_bits(self._above[b]):
                if (a, c) not in lt:
                    raise OrderError(f"order is not transitive: ({a},{b}),({b},{c}) but not ({a},{c})")

    @cached_property
    def _above(self) -> tuple[int, ...]:
        above = [0] * self.universe.size
        for a, b in self.lt:
            above[a] |= 1 << b
        return tuple(above)

    @cached_property
    def _below(self) -> tuple[int, ...]:
        below = [0] * self.universe.size
        for a, b in self.lt:
            below[b] |= 1 << a
        return tuple(below)

    def less(self, a: int, b: int) -> bool:
        return (a, b) in self.lt

    def leq(self, a: int, b: int) -> bool:
        return a == b or (a, b) in self.lt

    def with_carrier(self, carrier: Subset) -> OrderedModel:
        return OrderedModel(self.universe, self.lt, carrier)

    def down_set(self, a: int) -> int:
        """Mask of ``{b : b ≤ a}``."""
        return self._below[a] | 1 << a

    def is_chain_mask(self, mask: int) -> bool:
        if mask & ~self.carrier.mask:
            return False
        for a in _bits.iter_bits(mask):
            comparable = self._above[a] | self._below[a] | 1 << a
            if mask & ~comparable:
                return False
        return True

    def maximal_elements(self) -> list[int]:
        """``{a ∈ E : no b ∈ E with a < b}``, ascending."""
        E = self.carrier.mask
        return [a for a in _bits.iter_bits(E) if not self._above[a] & E]


@dataclass(frozen=True)
class ChainGrammar:
    """A finite set of raw lists meant to satisfy the list-of-chains axioms."""

    universe: Universe
    core: frozenset[RawList] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        core = set()
        for u in self.core:
            if not isinstance(u, RawList):
                u = RawList(self.universe, tuple(u))
            check_same_universe(self.universe, u.universe)
            core.add(u)
        object.__setattr__(self, "core", frozenset(core))


def is_subchain(M: OrderedModel, F: Subset) -> bool:
    """``F ⊆ E`` and any two members of ``F`` are comparable."""
    check_same_universe(M.universe, F.universe)
    return M.is_chain_mask(F.mask)


def is_inductive(M: OrderedModel) -> bool:
    """Every subchain of ``E`` has an upper bound inside ``E``."""
    check_cap(M.universe.size)
    bounds = [M.down_set(a) for a in M.carrier]
    for F in _bits.submasks(M.carrier.mask):
        if M.is_chain_mask(F) and not any(F & ~d == 0 for d in bounds):
            return False
    return True


def zorn_witness(M: OrderedModel) -> int | None:
    """A <-maximal element of ``E``, or ``None`` when ``M`` is not inductive.

    Route: take a ≺-maximal subchain ``G`` via ``ttl_witness`` on the
    subchain predicate, then return the smallest upper bound of ``G`` in
    ``E``. Anything strictly above that bound would extend ``G``.
    """
    if not is_inductive(M):
        return None
    G = ttl_witness(subchains_as_listpred(M))
    assert G is not None  # ε is always a chain
    for a in M.carrier:
        if G.mask & ~M.down_set(a) == 0:
            return a
    raise AssertionError("inductive carrier without an upper bound for a maximal chain")


def chain_lists(M: OrderedModel) -> frozenset[RawList]:
    """Lists ``ε``, ``[a]`` for ``a ∈ E`` and ``u@a@b`` for ``u@a`` generated, ``a < b``, ``b ∈ E``.

    These are exactly the strictly increasing lists over ``E``, so length is
    bounded by ``|E|`` and generation terminates.
    """
    E = M.carrier.mask
    frontier = [(a,) for a in _bits.iter_bits(E)]
    out = {()}
    while frontier:
        out.update(frontier)
        frontier = [u + (b,) for u in frontier for b in _bits.iter_bits(M._above[u[-1]] & E)]
    return frozenset(RawList(M.universe, u) for u in out)


def subchains_as_listpred(M: OrderedModel) -> DownwardClosureOf:
    """Downward closure of ``chain_lists(M)``; its ``eng`` is the subchain table."""
    return DownwardClosureOf(M.universe, chain_lists(M))


def grammar_violation(G: ChainGrammar) -> str | None:
    """Describe the first violated list-of-chains axiom, or ``None``."""
    core = {u.items for u in G.core}
    if () not in core:
        return "ε is not in the grammar"
    for w in sorted(core):
        for i, a in enumerate(w):
            u, v = w[:i], w[i + 1:]
            if u + (a,) not in core or (a,) + v not in core:
                return f"split of {list(w)} at {a}: {list(u + (a,))} or {list((a,) + v)} missing"
            if u + v not in core:
                return f"deleting {a} from {list(w)} gives {list(u + v)}, missing"
    by_head: dict[int, list[tuple[int, ...]]] = {}
    for y in core:
        if y:
            by_head.setdefault(y[0], []).append(y)
    for x in sorted(core):
        if not x:
            continue
        u, a = x[:-1], x[-1]
        for y in sorted(by_head.get(a, ())):
            if u + y not in core:
                return f"joining {list(x)} and {list(y)} at {a} gives {list(u + y)}, missing"
    before: set[tuple[int, int]] = set()
    for w in core:
        for i, a in enumerate(w):
            for b in w[i + 1:]:
                if a != b:
                    before.add((a, b))
    for a, b in sorted(before):
        if (b, a) in before:
            return f"{a} occurs before {b} and {b} before {a}"
    return None


def chain_grammar_check(G: ChainGrammar) -> bool:
    return grammar_violation(G) is None


def order_of_grammar(G: ChainGrammar) -> OrderedModel:
    """Read ``a < b`` off the two-element lists and ``E`` off the occurring elements."""
    problem = grammar_violation(G)
    if problem is not None:
        raise GrammarError(problem)
    lt = frozenset((u.items[0], u.items[1]) for u in G.core if len(u) == 2)
    carrier = 0
    for u in G.core:
        carrier |= u.mask
    return OrderedModel(G.universe, lt, Subset(G.universe, carrier))


def subset_inclusion_model(P: SubsetPredicate) -> OrderedModel:
    """Subsets of ``P.universe`` as elements (index = mask), ordered by strict inclusion, carrier ``P``."""
    n = P.universe.size
    check_cap(1 << n, "powerset universe")
    powerset = Universe.atomic(f"Pow{P.universe.name}", 1 << n)
    lt = frozenset(
        (a, b) for b in range(1 << n) for a in _bits.submasks(b) if a != b
    )
    return OrderedModel(powerset, lt, Subset(powerset, P.table))


def ttl_via_zorn(T: ListPredicate) -> Subset | None:
    """A ≺-maximal element of ``eng(T)`` obtained from Zorn on ``(eng(T), ⊂)``."""
    M = subset_inclusion_model(eng(T))
    top = zorn_witness(M)
    if top is None:
        return None
    return Subset(T.universe, top)

