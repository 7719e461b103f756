"""Exact enumeration of inclusion-minimal transversals of a finite set family."""
from __future__ import annotations

from collections.abc import Iterable, Sequence


def minimal_transversals(
    family: Iterable[Iterable[str]],
    order: Sequence[str],
) -> list[frozenset[str]]:
    """All inclusion-minimal sets meeting every member of ``family``.

    Depth-first branch on the first uncovered set; within a set, trying
    vertex x bans the vertices tried before x, so no transversal is emitted
    twice.  Non-minimal leaves are dropped by the private-witness test
    (every chosen vertex must be the sole hit of some set).  Exact and
    deterministic; intended scale is a few dozen vertices.
    """
    sets = [frozenset(s) for s in family]
    if any(not s for s in sets):
        return []  # an empty member can never be hit
    rank = {x: i for i, x in enumerate(order)}
    for s in sets:
        for x in s:
            if x not in rank:
                raise ValueError(f"set member {x!r} missing from the vertex order")
    sets.sort(key=lambda s: (len(s), sorted(rank[x] for x in s)))
    out: list[frozenset[str]] = []

    def is_minimal(cover: frozenset[str]) -> bool:
        return all(any(s & cover == {x} for s in sets) for x in cover)

    def dive(chosen: frozenset[str], banned: frozenset[str], todo: tuple[frozenset[str], ...]):
        remaining = tuple(s for s in todo if not (s & chosen))
        if not remaining:
            if is_minimal(chosen):
                out.append(chosen)
            return
        branch = sorted(remaining[0] - banned, key=rank.__getitem__)
        seen: set[str] = set()
        for x in branch:
            dive(chosen | {x}, banned | seen, remaining)
            seen.add(x)

    dive(frozenset(), frozenset(), tuple(sets))
    out.sort(key=lambda c: (len(c), sorted(rank[x] for x in c)))
    return out
