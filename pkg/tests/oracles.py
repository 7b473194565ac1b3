"""Brute-force reference implementations on plain Python sets.

Nothing here touches bit tables or the library's greedy searches. A list
predicate is a set of tuples; a subset is a frozenset; a subset predicate
is a set of frozensets. Raw-list quantifiers are unfolded over every list
of bounded length, so duplicates and permutations really are enumerated.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator


def powerset(elements: Iterable[int]) -> list[frozenset[int]]:
    xs = sorted(elements)
    return [frozenset(c) for r in range(len(xs) + 1) for c in itertools.combinations(xs, r)]


def raw_lists(alphabet: Iterable[int], max_len: int) -> Iterator[tuple[int, ...]]:
    xs = sorted(alphabet)
    for k in range(max_len + 1):
        yield from itertools.product(xs, repeat=k)


def member(T: Iterable[tuple[int, ...]], u: tuple[int, ...]) -> bool:
    """Set-semantics membership: some list of ``T`` has the same element set."""
    return frozenset(u) in {frozenset(v) for v in T}


def eng(T: Iterable[tuple[int, ...]], n: int) -> set[frozenset[int]]:
    """``{α : every raw list drawn from α lies in T}``; lengths up to ``|α|+1`` cover repeats."""
    T = list(T)
    return {a for a in powerset(range(n)) if all(member(T, u) for u in raw_lists(a, len(a) + 1))}


def eng_exists(T: Iterable[tuple[int, ...]], n: int) -> set[frozenset[int]]:
    T = list(T)
    return {a for a in powerset(range(n)) if any(member(T, u) for u in raw_lists(a, len(a) + 1))}


def restrict(P: set[frozenset[int]]) -> set[tuple[int, ...]]:
    return {tuple(sorted(a)) for a in P}


def all_list_sets(n: int) -> Iterator[frozenset[tuple[int, ...]]]:
    """Every set of canonical lists over ``n`` elements."""
    canon = [tuple(sorted(a)) for a in powerset(range(n))]
    for r in range(len(canon) + 1):
        for combo in itertools.combinations(canon, r):
            yield frozenset(combo)


def is_fc_by_search(P: set[frozenset[int]], n: int) -> bool:
    """Is there any list predicate ``T`` with ``eng(T) = P``?"""
    return any(eng(T, n) == P for T in all_list_sets(n))


def is_open_by_search(P: set[frozenset[int]], n: int) -> bool:
    return any(eng_exists(T, n) == P for T in all_list_sets(n))


def maximal(P: set[frozenset[int]], n: int) -> set[frozenset[int]]:
    return {a for a in P if not any(a | {x} in P for x in range(n) if x not in a)}


# ------------------------------------------------------------------- orders


def strict_orders(n: int) -> list[frozenset[tuple[int, int]]]:
    pairs = [(a, b) for a in range(n) for b in range(n) if a != b]
    out = []
    for r in range(len(pairs) + 1):
        for combo in itertools.combinations(pairs, r):
            lt = set(combo)
            if any((b, a) in lt for a, b in lt):
                continue
            if all((a, d) in lt for a, b in lt for c, d in lt if b == c):
                out.append(frozenset(lt))
    return out


def is_chain(lt, F) -> bool:
    return all(a == b or (a, b) in lt or (b, a) in lt for a in F for b in F)


def is_inductive(lt, E: frozenset[int]) -> bool:
    return all(
        any(all(x == a or (x, a) in lt for x in F) for a in E)
        for F in powerset(E)
        if is_chain(lt, F)
    )


def max_lt(lt, E: frozenset[int]) -> set[int]:
    return {a for a in E if not any((a, b) in lt for b in E)}


# -------------------------------------------------------- partial functions


def partial_functions(na: int, nb: int) -> Iterator[dict[int, int]]:
    for choice in itertools.product([None, *range(nb)], repeat=na):
        yield {a: b for a, b in enumerate(choice) if b is not None}


def total_functions(na: int, nb: int) -> Iterator[dict[int, int]]:
    for choice in itertools.product(range(nb), repeat=na):
        yield dict(enumerate(choice))


def graph(f: dict[int, int], nb: int) -> frozenset[int]:
    """Pair indices, row major."""
    return frozenset(a * nb + b for a, b in f.items())


def is_max_dpf(P: set[frozenset[int]], f: dict[int, int], na: int, nb: int) -> bool:
    if graph(f, nb) not in P:
        return False
    for a in range(na):
        if a in f:
            continue
        for b in range(nb):
            if graph({**f, a: b}, nb) in P:
                return False
    return True


def choice_functions(P: set[frozenset[int]], na: int, nb: int) -> list[dict[int, int]]:
    """Total functions whose graph lies in the downward-closed ``P``."""
    return [f for f in total_functions(na, nb) if graph(f, nb) in P]


def gfp(allowed: set[frozenset[int]], na: int, nb: int) -> set[frozenset[int]]:
    """Greatest fixed point of the one-step extension operator, by naive iteration.

    Carrier: partial-function graphs in ``allowed``; ``X`` keeps ``u`` iff for
    every ``a`` outside ``dom u`` some ``(a,b)`` extends ``u`` inside ``X``.
    """
    def dom(u):
        return {p // nb for p in u}

    X = {u for u in allowed if len(dom(u)) == len(u)}
    while True:
        Y = {
            u for u in X
            if all(any(u | {a * nb + b} in X for b in range(nb)) for a in range(na) if a not in dom(u))
        }
        if Y == X:
            return X
        X = Y


def eng_sets(T: Iterable[frozenset[int]], n: int) -> set[frozenset[int]]:
    """``eng`` on element sets directly: every subset of ``α`` is a member.

    Agrees with :func:`eng` under set semantics; cheap enough for 2×2 sweeps.
    """
    S = set(T)
    return {a for a in powerset(range(n)) if all(b in S for b in powerset(a))}
