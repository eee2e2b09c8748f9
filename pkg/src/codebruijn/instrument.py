"""Counters for the traversal-freedom and termination checks.

Code that walks term structure calls :func:`visit` once per node it enters.
Nothing is recorded unless a :func:`recording` block is active, so the hooks
cost one list check in normal use.
"""

from __future__ import annotations

from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Iterator


@dataclass
class Recorder:
    visits: int = 0
    visited_ids: set[int] = field(default_factory=set)
    #: (measure before, measure after) for every hereditary re-entry into substitution.
    descents: list[tuple[int, int]] = field(default_factory=list)

    @property
    def violations(self) -> list[tuple[int, int]]:
        return [(a, b) for a, b in self.descents if not b < a]


_active: list[Recorder] = []


def visit(node: object) -> None:
    if _active:
        for r in _active:
            r.visits += 1
            r.visited_ids.add(id(node))


def descent(before: int, after: int) -> None:
    if _active:
        for r in _active:
            r.descents.append((before, after))


@contextmanager
def recording() -> Iterator[Recorder]:
    r = Recorder()
    _active.append(r)
    try:
        yield r
    finally:
        _active.remove(r)
