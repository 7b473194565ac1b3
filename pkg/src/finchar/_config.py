"""Exhaustive-search caps and the exception hierarchy."""

from __future__ import annotations

import contextlib
import os
from contextvars import ContextVar
from typing import Iterator

DEFAULT_MAX_UNIVERSE = 16
ENV_MAX_UNIVERSE = "FINCHAR_MAX_UNIVERSE"

_max_universe: ContextVar[int | None] = ContextVar("finchar_max_universe", default=None)


class FincharError(Exception):
    """Base class for every error raised by finchar."""


class UniverseMismatch(FincharError, ValueError):
    """Two operands live over different universes."""


class CapExceeded(FincharError):
    """An exhaustive operation was asked to enumerate a universe above the cap."""


class GrammarError(FincharError, ValueError):
    """A chain grammar violates one of the list-of-chains axioms."""


class OrderError(FincharError, ValueError):
    """A relation handed to OrderedModel is not a strict order."""


def max_universe() -> int:
    """Current exhaustive cap: context override, then env var, then 16."""
    value = _max_universe.get()
    if value is not None:
        return value
    env = os.environ.get(ENV_MAX_UNIVERSE)
    if env:
        try:
            return int(env)
        except ValueError:
            raise FincharError(f"{ENV_MAX_UNIVERSE} must be an integer, got {env!r}") from None
    return DEFAULT_MAX_UNIVERSE


@contextlib.contextmanager
def universe_cap(limit: int) -> Iterator[None]:
    """Temporarily override the exhaustive cap for the current context."""
    token = _max_universe.set(limit)
    try:
        yield
    finally:
        _max_universe.reset(token)


def check_cap(size: int, what: str = "universe") -> None:
    limit = max_universe()
    if size > limit:
        raise CapExceeded(f"{what} of size {size} exceeds the exhaustive cap {limit}")
