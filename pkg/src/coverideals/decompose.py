"""Shedding vertices and recursive vertex-decomposability with certificates."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import BudgetExceeded
from .hypergraphs import (
    Hypergraph,
    contract_vertex,
    delete_vertex,
    maximal_independent_sets,
    strip_isolated,
)

DEFAULT_BUDGET = 10**6


@dataclass(frozen=True)
class VDWitness:
    """Certificate tree: a shedding vertex per node, 'isolated' at the leaves."""

    shed: str | None = None
    del_child: "VDWitness | None" = None
    link_child: "VDWitness | None" = None

    def __post_init__(self):
        if self.shed is None:
            if self.del_child is not None or self.link_child is not None:
                raise ValueError("leaf witness cannot have children")
        else:
            if self.del_child is None or self.link_child is None:
                raise ValueError("inner witness needs both children")

    @property
    def is_leaf(self) -> bool:
        return self.shed is None

    def size(self) -> int:
        if self.is_leaf:
            return 1
        return 1 + self.del_child.size() + self.link_child.size()


LEAF = VDWitness()


@dataclass
class VDResult:
    decision: str  # "yes" | "no" | "budget_exceeded"
    witness: VDWitness | None
    nodes: int
    memo_hits: int


def _maximal_elements(sets: Iterable[frozenset[str]]) -> list[frozenset[str]]:
    pool = list(set(sets))
    return [s for s in pool if not any(s < t for t in pool)]


def _shedding_with_mis(hg: Hypergraph, x: str, mis: Sequence[frozenset[str]]) -> bool:
    reduced = _maximal_elements(m - {x} for m in mis)
    edges_at_x = [e - {x} for e in hg.edge_sets if x in e]
    return all(any(core <= s for core in edges_at_x) for s in reduced)


def is_shedding_vertex(hg: Hypergraph, x: str) -> bool:
    """True iff every maximal independent set of hg minus x stays dependent with x added.

    The caller is expected to pass a hypergraph without isolated vertices.
    """
    if x not in hg.rank:
        raise ValueError(f"vertex {x!r} not in the hypergraph")
    return _shedding_with_mis(hg, x, maximal_independent_sets(hg))


def shedding_vertices(hg: Hypergraph) -> tuple[str, ...]:
    mis = maximal_independent_sets(hg)
    return tuple(x for x in hg.vertices if _shedding_with_mis(hg, x, mis))


def _canonical_key(hg: Hypergraph) -> tuple:
    rank = hg.rank
    return (
        len(hg.vertices),
        tuple(sorted(tuple(rank[v] for v in e) for e in hg.edges)),
    )


def _witness_to_indices(w: VDWitness, rank: dict[str, int]) -> tuple:
    if w.is_leaf:
        return ()
    return (
        rank[w.shed],
        _witness_to_indices(w.del_child, rank),
        _witness_to_indices(w.link_child, rank),
    )


def _witness_from_indices(t: tuple, vertices: tuple[str, ...]) -> VDWitness:
    if t == ():
        return LEAF
    i, d, l = t
    return VDWitness(vertices[i], _witness_from_indices(d, vertices), _witness_from_indices(l, vertices))


def vd_check(hg: Hypergraph, budget: int = DEFAULT_BUDGET, use_memo: bool = True) -> VDResult:
    """Decide vertex decomposability, producing a replayable certificate on yes.

    Isolated vertices are stripped before every test; candidates are tried in
    vertex-universe order, so the verdict and witness are deterministic.  The
    budget counts recursion nodes.
    """
    memo: dict[tuple, tuple[str, tuple | None]] = {}
    stats = {"nodes": 0, "memo_hits": 0}

    def rec(h: Hypergraph) -> tuple[str, VDWitness | None]:
        k = strip_isolated(h)
        if not k.vertices:
            return "yes", LEAF
        stats["nodes"] += 1
        if stats["nodes"] > budget:
            raise BudgetExceeded("vertex-decomposability budget exhausted", stats)
        key = _canonical_key(k) if use_memo else None
        if use_memo and key in memo:
            stats["memo_hits"] += 1
            decision, packed = memo[key]
            witness = _witness_from_indices(packed, k.vertices) if packed is not None else None
            return decision, witness
        mis = maximal_independent_sets(k)
        answer: tuple[str, VDWitness | None] = ("no", None)
        for x in k.vertices:
            if not _shedding_with_mis(k, x, mis):
                continue
            d_dec, d_wit = rec(delete_vertex(k, x))
            if d_dec != "yes":
                continue
            c_dec, c_wit = rec(contract_vertex(k, x))
            if c_dec != "yes":
                continue
            answer = ("yes", VDWitness(x, d_wit, c_wit))
            break
        if use_memo:
            decision, witness = answer
            packed = _witness_to_indices(witness, k.rank) if witness is not None else None
            memo[key] = (decision, packed)
        return answer

    try:
        decision, witness = rec(hg)
    except BudgetExceeded as e:
        return VDResult("budget_exceeded", None, e.stats["nodes"], e.stats["memo_hits"])
    return VDResult(decision, witness, stats["nodes"], stats["memo_hits"])


def verify_certificate(hg: Hypergraph, witness: VDWitness) -> bool:
    """Replay a certificate: shedding at every node, isolated hypergraphs at leaves."""
    if not isinstance(witness, VDWitness):
        raise ValueError("malformed witness")
    k = strip_isolated(hg)
    if witness.is_leaf:
        return not k.vertices
    if witness.shed not in k.rank:
        return False
    if not is_shedding_vertex(k, witness.shed):
        return False
    return verify_certificate(
        delete_vertex(k, witness.shed), witness.del_child
    ) and verify_certificate(contract_vertex(k, witness.shed), witness.link_child)
