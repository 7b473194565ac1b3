"""Closure operators between list predicates and subset predicates.

``eng`` lifts a list predicate universally (every list drawn from the
subset is a member), ``eng_exists`` existentially, and ``restrict`` reads a
subset predicate back as a list predicate through the element set of each
list. Finite character and openness are fixed-point conditions of these.
"""

from __future__ import annotations

from . import _bits
from ._config import check_cap
from .model_core import Complement, ListPredicate, SetBased, SubsetPredicate

__all__ = [
    "eng",
    "eng_exists",
    "restrict",
    "is_finite_character",
    "is_open",
    "complement_duality_check",
]


def eng(T: ListPredicate) -> SubsetPredicate:
    """Subsets all of whose finite lists belong to ``T``."""
    n = T.universe.size
    check_cap(n)
    return SubsetPredicate(T.universe, _bits.interior_down(T.table, n))


def eng_exists(T: ListPredicate) -> SubsetPredicate:
    """Subsets containing at least one list that belongs to ``T``."""
    n = T.universe.size
    check_cap(n)
    return SubsetPredicate(T.universe, _bits.closure_up(T.table, n))


def restrict(P: SubsetPredicate) -> SetBased:
    """``u`` is a member iff ``hat(u)`` satisfies ``P``."""
    # under set semantics the table of the restriction is P's own table
    return SetBased(P.universe, P.table)


def is_finite_character(P: SubsetPredicate) -> tuple[bool, SetBased | None]:
    """Decide ``P == eng(restrict(P))``; the restriction is the witness."""
    witness = restrict(P)
    if eng(witness) == P:
        return True, witness
    return False, None


def is_open(P: SubsetPredicate) -> tuple[bool, SetBased | None]:
    """Decide ``P == eng_exists(restrict(P))``; the restriction is the witness."""
    witness = restrict(P)
    if eng_exists(witness) == P:
        return True, witness
    return False, None


def complement_duality_check(T: ListPredicate) -> bool:
    """``not eng(T)`` and ``eng_exists(not T)`` agree on every subset.

    Always true; a ``False`` return means an implementation fault.
    """
    return eng(T).complement() == eng_exists(Complement(T))
