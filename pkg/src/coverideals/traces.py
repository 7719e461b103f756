"""Reduction traces over expanded hypergraphs.

A trace applies delete (D) or contract (L) moves to shadow vertices of an
expanded hypergraph.  Each state carries the contracted and deleted base
sets and per-edge reduced weights, which characterize the candidate edges
("constructible sets") of the reduced hypergraph; the duality checker
verifies that characterization in both directions.  witness_sequence builds
the canonical reduction used to certify vertex decomposability of skeleton
attachments, and check_witness_properties validates its three structural
properties step by step.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence

from .complexes import AttachmentRecord
from .decompose import is_shedding_vertex
from .errors import MovePatternExhausted, TraceInvalid
from .expansion import WeightedHypergraph, expand_hypergraph, weighted_from_record, check_star_condition
from .hypergraphs import Hypergraph, contract_vertex, delete_vertex, strip_isolated
from .shadows import split_shadow

DELETE = "D"
CONTRACT = "L"
MOVES = (DELETE, CONTRACT)


def shadow_key(label: str, base_rank: Mapping[str, int]) -> tuple[int, int]:
    """Sort key for the shadow-major order: level first, then base position."""
    base, level = split_shadow(label)
    if level < 1:
        raise ValueError(f"{label!r} is not a shadow vertex")
    return (level, base_rank[base])


def index_key(label: str, base_rank: Mapping[str, int]) -> tuple[int, int]:
    """Sort key for the index-major order: base position first, then level."""
    base, level = split_shadow(label)
    if level < 1:
        raise ValueError(f"{label!r} is not a shadow vertex")
    return (base_rank[base], level)


def cmp_shadow(u: str, v: str, base_rank: Mapping[str, int]) -> int:
    a, b = shadow_key(u, base_rank), shadow_key(v, base_rank)
    return (a > b) - (a < b)


def cmp_index(u: str, v: str, base_rank: Mapping[str, int]) -> int:
    a, b = index_key(u, base_rank), index_key(v, base_rank)
    return (a > b) - (a < b)


@dataclass(frozen=True)
class ReductionTrace:
    origin: WeightedHypergraph
    steps: tuple[tuple[str, str], ...]

    def __post_init__(self):
        steps = tuple((str(m), str(v)) for m, v in self.steps)
        for m, _ in steps:
            if m not in MOVES:
                raise ValueError(f"unknown move {m!r}")
        if len({v for _, v in steps}) != len(steps):
            raise ValueError("trace steps must use distinct vertices")
        contracted = [split_shadow(v)[0] for m, v in steps if m == CONTRACT]
        if len(set(contracted)) != len(contracted):
            raise ValueError("a base vertex may be contracted at most once")
        object.__setattr__(self, "steps", steps)


@dataclass(frozen=True)
class TraceState:
    """Hypergraph after r moves, with the bookkeeping the edge criterion needs."""

    origin: WeightedHypergraph
    r: int
    current: Hypergraph
    contracted: tuple[str, ...]
    deleted: tuple[str, ...]
    contraction_level: tuple[tuple[str, int], ...]
    deletion_levels: tuple[tuple[str, tuple[int, ...]], ...]
    reduced_weights: tuple[int, ...]

    @property
    def contracted_set(self) -> frozenset[str]:
        return frozenset(self.contracted)

    @property
    def deleted_set(self) -> frozenset[str]:
        return frozenset(self.deleted)


def _reduced_weights(
    wh: WeightedHypergraph, contraction_level: Mapping[str, int]
) -> tuple[int, ...]:
    out = []
    for e, w in zip(wh.base.edge_sets, wh.weights):
        drop = sum(contraction_level[x] - 1 for x in e if x in contraction_level)
        out.append(max(0, w - drop))
    return tuple(out)


def apply_trace(
    origin: WeightedHypergraph,
    steps: Sequence[tuple[str, str]],
    strict_min_shadow: bool = True,
) -> list[TraceState]:
    """Replay a move sequence, returning the states r = 0 .. len(steps).

    In strict mode every step must hit the least live shadow level of its
    base vertex, measured in the stripped current hypergraph.
    """
    trace = ReductionTrace(origin, tuple(steps))
    current = expand_hypergraph(origin)
    contracted: list[str] = []
    deleted: list[str] = []
    c_level: dict[str, int] = {}
    d_levels: dict[str, list[int]] = {}

    def snapshot(r: int) -> TraceState:
        return TraceState(
            origin=origin,
            r=r,
            current=current,
            contracted=tuple(contracted),
            deleted=tuple(deleted),
            contraction_level=tuple(sorted(c_level.items())),
            deletion_levels=tuple(sorted((b, tuple(ls)) for b, ls in d_levels.items())),
            reduced_weights=_reduced_weights(origin, c_level),
        )

    states = [snapshot(0)]
    for r, (move, vertex) in enumerate(trace.steps, start=1):
        if vertex not in current.rank:
            raise TraceInvalid(r, f"vertex {vertex!r} is not in the current hypergraph")
        base, level = split_shadow(vertex)
        if level < 1:
            raise TraceInvalid(r, f"step vertex {vertex!r} is not a shadow vertex")
        if strict_min_shadow:
            live = [
                split_shadow(v)[1]
                for v in strip_isolated(current).vertices
                if split_shadow(v)[0] == base
            ]
            if not live or level != min(live):
                raise TraceInvalid(
                    r,
                    f"strict mode requires the least live shadow of {base!r}"
                    f" (wanted {min(live) if live else None}, got {level})",
                )
        try:
            if move == DELETE:
                current = delete_vertex(current, vertex)
                deleted_new = base not in d_levels
                d_levels.setdefault(base, []).append(level)
                if deleted_new:
                    deleted.append(base)
            else:
                current = contract_vertex(current, vertex)
                contracted.append(base)
                c_level[base] = level
        except ValueError as e:
            raise TraceInvalid(r, str(e)) from None
        states.append(snapshot(r))
    return states


def _parse_candidate(labels: Iterable[str]) -> dict[str, int] | None:
    """Map base -> level for a candidate edge; None when bases repeat."""
    out: dict[str, int] = {}
    for v in labels:
        base, level = split_shadow(v)
        if level < 1 or base in out:
            return None
        out[base] = level
    return out


def is_constructible(labels: Iterable[str], state: TraceState) -> bool:
    """Edge criterion for the reduced hypergraph at this state."""
    cand = _parse_candidate(labels)
    if not cand:
        return False
    bases = frozenset(cand)
    a = len(bases)
    d_levels = dict(state.deletion_levels)
    contracted = state.contracted_set
    for k, (edge, w) in enumerate(zip(state.origin.base.edge_sets, state.origin.weights)):
        if edge - contracted != bases:
            continue
        levels = [cand[b] for b in bases]
        if any(f < 1 or f > w for f in levels):
            continue
        floor_ok = all(
            cand[b] > max(d_levels[b])
            for b in bases
            if b in d_levels and b not in contracted
        )
        if not floor_ok:
            continue
        if sum(levels) <= state.reduced_weights[k] + a - 1:
            return True
    return False


def constructible_sets(state: TraceState) -> list[tuple[str, ...]]:
    """All candidate edges the criterion admits at this state, deduplicated."""
    d_levels = dict(state.deletion_levels)
    contracted = state.contracted_set
    rank = state.origin.base.rank
    out: set[tuple[str, ...]] = set()
    for k, (edge, w) in enumerate(zip(state.origin.base.edge_sets, state.origin.weights)):
        bases = sorted(edge - contracted, key=rank.__getitem__)
        a = len(bases)
        if a == 0 or state.reduced_weights[k] < 1 or w < 1:
            continue
        cap = state.reduced_weights[k] + a - 1
        floors = [
            (max(d_levels[b]) + 1 if b in d_levels and b not in contracted else 1)
            for b in bases
        ]

        def grow(idx: int, total: int, chosen: list[int]):
            if idx == a:
                out.add(
                    tuple(f"{b}#{f}" for b, f in zip(bases, chosen))
                )
                return
            for f in range(floors[idx], w + 1):
                if total + f + sum(floors[idx + 1:]) > cap:
                    break
                grow(idx + 1, total + f, chosen + [f])

        grow(0, 0, [])
    return sorted(out)


@dataclass(frozen=True)
class DualityReport:
    forward_ok: bool
    backward_ok: bool
    forward_violations: tuple[tuple[str, ...], ...]
    backward_violations: tuple[tuple[str, ...], ...]


def check_constructible_duality(state: TraceState) -> DualityReport:
    """Every current edge is constructible; every constructible set holds an edge."""
    forward = [
        e for e in state.current.edges if not is_constructible(e, state)
    ]
    edge_sets = [frozenset(e) for e in state.current.edges]
    backward = [
        c
        for c in constructible_sets(state)
        if not any(es <= frozenset(c) for es in edge_sets)
    ]
    return DualityReport(
        forward_ok=not forward,
        backward_ok=not backward,
        forward_violations=tuple(forward),
        backward_violations=tuple(backward),
    )


def witness_sequence(
    record: AttachmentRecord,
    weights: Sequence[int],
    moves: Sequence[str],
) -> tuple[ReductionTrace, int]:
    """Canonical reduction of an expanded attachment: repeatedly take the
    index-least live shadow over the cover vertices, applying the caller's
    move at each step, until no cover shadow survives.

    ``weights`` is indexed by the record's facet order and must satisfy the
    weight-domination condition.
    """
    if not check_star_condition(record, weights):
        raise ValueError("weights violate the domination condition")
    origin = weighted_from_record(record, weights)
    cover = set(record.cover)
    base_rank = origin.base.rank
    current = expand_hypergraph(origin)
    steps: list[tuple[str, str]] = []
    while True:
        live = [
            v
            for v in strip_isolated(current).vertices
            if split_shadow(v)[0] in cover
        ]
        if not live:
            break
        if len(steps) >= len(moves):
            raise MovePatternExhausted(
                f"need a move for step {len(steps) + 1}, got only {len(moves)}"
            )
        move = moves[len(steps)]
        if move not in MOVES:
            raise ValueError(f"unknown move {move!r}")
        vertex = min(live, key=lambda v: index_key(v, base_rank))
        steps.append((move, vertex))
        current = (
            delete_vertex(current, vertex)
            if move == DELETE
            else contract_vertex(current, vertex)
        )
    return ReductionTrace(origin, tuple(steps)), len(steps)


@dataclass(frozen=True)
class WitnessReport:
    runs_ok: bool
    per_step: tuple[dict, ...]
    all_ok: bool


def _runs_consecutive(trace: ReductionTrace) -> bool:
    """Steps on one base form a consecutive block of consecutive shadow
    levels, all moves but the block's last being deletions."""
    by_base: dict[str, list[tuple[int, int, str]]] = {}
    for idx, (move, vertex) in enumerate(trace.steps):
        base, level = split_shadow(vertex)
        by_base.setdefault(base, []).append((idx, level, move))
    for runs in by_base.values():
        indices = [i for i, _, _ in runs]
        levels = [l for _, l, _ in runs]
        moves = [m for _, _, m in runs]
        if indices != list(range(indices[0], indices[0] + len(runs))):
            return False
        if levels != list(range(levels[0], levels[0] + len(runs))):
            return False
        if any(m != DELETE for m in moves[:-1]):
            return False
    return True


def check_witness_properties(
    record: AttachmentRecord, trace: ReductionTrace
) -> WitnessReport:
    """Validate the canonical reduction step by step.

    At each step the distinguished-simplex edge through the step vertex must
    be present in the stripped state (with level-1 copies of the fresh
    vertices), and the step vertex must shed there; globally the per-base
    runs must be consecutive with deletions before the final move.
    """
    states = apply_trace(trace.origin, trace.steps, strict_min_shadow=True)
    per_step = []
    all_ok = runs_ok = _runs_consecutive(trace)
    for r, (move, vertex) in enumerate(trace.steps, start=1):
        base, level = split_shadow(vertex)
        stripped = strip_isolated(states[r - 1].current)
        facet = record.distinguished_for(base)
        edge_present = False
        if facet is not None:
            wanted = frozenset(
                [f"{base}#{level}"] + [f"{y}#1" for y in facet if y != base]
            )
            edge_present = wanted in stripped.edge_sets
        shedding = is_shedding_vertex(stripped, vertex)
        per_step.append(
            {
                "step": r,
                "move": move,
                "vertex": vertex,
                "edge_present": edge_present,
                "shedding": shedding,
            }
        )
        all_ok = all_ok and edge_present and shedding
    return WitnessReport(runs_ok=runs_ok, per_step=tuple(per_step), all_ok=all_ok)
