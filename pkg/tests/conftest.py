from __future__ import annotations

import itertools
import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from finchar import Explicit, SubsetPredicate, Universe  # noqa: E402


def masks_of(members: int) -> list[int]:
    return [m for m in range(members.bit_length()) if members >> m & 1]


def all_explicit(universe: Universe, need_empty: bool | None = None):
    """Every Explicit predicate over ``universe``, indexed by its table."""
    n = universe.size
    for table in range(1 << (1 << n)):
        if need_empty is not None and bool(table & 1) != need_empty:
            continue
        yield Explicit.from_masks(universe, masks_of(table))


def as_tuples(T) -> set[tuple[int, ...]]:
    return {u.items for u in T.members()}


def as_sets(T) -> set[frozenset[int]]:
    return {frozenset(u.items) for u in T.members()}


def family(P: SubsetPredicate) -> set[frozenset[int]]:
    return {frozenset(a.members) for a in P.subsets()}


def from_family(universe: Universe, fam) -> SubsetPredicate:
    return SubsetPredicate.from_subsets(universe, fam)


@pytest.fixture
def A2() -> Universe:
    return Universe.atomic("A", 2)


@pytest.fixture
def A3() -> Universe:
    return Universe.atomic("A", 3)


@pytest.fixture
def P22() -> Universe:
    return Universe.product(Universe.atomic("A", 2), Universe.atomic("B", 2))


def pairs(n: int):
    return list(itertools.product(range(n), repeat=2))


# ------------------------------------------------------- acceptance report


class _Acceptance:
    """Times criterion blocks and remembers the outcome for the summary."""

    def __init__(self) -> None:
        self.results: dict[int, list[tuple[str | None, bool, float, float, str]]] = {}

    def check(self, number: int, limit: float, part: str | None = None):
        return _Block(self, number, limit, part)


class _Block:
    def __init__(self, owner: _Acceptance, number: int, limit: float, part: str | None) -> None:
        self.owner, self.number, self.limit, self.part = owner, number, limit, part

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.start
        ok = exc_type is None and elapsed < self.limit
        note = "" if exc_type is None else f"{exc_type.__name__}: {str(exc).splitlines()[0] if str(exc) else ''}"
        if exc_type is None and not ok:
            note = f"took {elapsed:.2f} s"
        self.owner.results.setdefault(self.number, []).append((self.part, ok, elapsed, self.limit, note))
        if exc_type is None:
            assert elapsed < self.limit, f"criterion {self.number} took {elapsed:.2f} s (limit {self.limit} s)"
        return False


_ACCEPTANCE = _Acceptance()


@pytest.fixture
def acceptance() -> _Acceptance:
    return _ACCEPTANCE


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE.results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE.results):
        rows = _ACCEPTANCE.results[number]
        elapsed = sum(r[2] for r in rows)
        limit = rows[0][3]
        failed = [f"{r[0] or ''} {r[4]}".strip() for r in rows if not r[1]]
        if elapsed >= limit:
            failed.append(f"parts together took {elapsed:.2f} s")
        ok = not failed
        detail = f"  [{'; '.join(failed)}]" if failed else ""
        terminalreporter.write_line(
            f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {elapsed:6.2f} s (limit {limit:g} s){detail}"
        )
