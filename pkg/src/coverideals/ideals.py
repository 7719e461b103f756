"""Exact monomial-ideal arithmetic over named variables.

Edge and cover ideals, Alexander duals, intersections, ordinary and symbolic
powers, polarization, and a linear-quotients search that certifies
componentwise linearity.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations_with_replacement
from math import gcd as _int_gcd
from typing import Iterable, Mapping, Sequence

from .errors import BudgetExceeded
from .hypergraphs import Hypergraph, minimal_vertex_covers
from .shadows import make_shadow, split_shadow
from .transversals import minimal_transversals

LQ_NODE_CAP = 10**5


@dataclass(frozen=True)
class Monomial:
    """Exponent map with positive entries, stored sorted by variable name."""

    exps: tuple[tuple[str, int], ...]

    def __post_init__(self):
        cleaned = tuple(sorted((v, int(e)) for v, e in self.exps if e))
        if any(e < 0 for _, e in cleaned):
            raise ValueError("negative exponent")
        if len({v for v, _ in cleaned}) != len(cleaned):
            raise ValueError("repeated variable in exponent map")
        object.__setattr__(self, "exps", cleaned)

    @classmethod
    def from_map(cls, exps: Mapping[str, int]) -> "Monomial":
        return cls(tuple(exps.items()))

    @cached_property
    def as_dict(self) -> dict[str, int]:
        return dict(self.exps)

    @property
    def degree(self) -> int:
        return sum(e for _, e in self.exps)

    @property
    def support(self) -> frozenset[str]:
        return frozenset(v for v, _ in self.exps)

    @property
    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self.exps)

    def exp(self, v: str) -> int:
        return self.as_dict.get(v, 0)

    def divides(self, other: "Monomial") -> bool:
        o = other.as_dict
        return all(e <= o.get(v, 0) for v, e in self.exps)

    def times(self, other: "Monomial") -> "Monomial":
        d = dict(self.exps)
        for v, e in other.exps:
            d[v] = d.get(v, 0) + e
        return Monomial.from_map(d)

    def lcm(self, other: "Monomial") -> "Monomial":
        d = dict(self.exps)
        for v, e in other.exps:
            d[v] = max(d.get(v, 0), e)
        return Monomial.from_map(d)

    def gcd(self, other: "Monomial") -> "Monomial":
        o = other.as_dict
        return Monomial.from_map({v: min(e, o[v]) for v, e in self.exps if v in o})

    def quotient(self, other: "Monomial") -> "Monomial":
        """self / gcd(self, other)."""
        o = other.as_dict
        return Monomial.from_map({v: e - min(e, o.get(v, 0)) for v, e in self.exps})


ONE = Monomial(())


def render_monomial(m: Monomial, var_order: Sequence[str]) -> str:
    if not m.exps:
        return "1"
    rank = {v: i for i, v in enumerate(var_order)}
    parts = []
    for v, e in sorted(m.exps, key=lambda p: rank.get(p[0], len(rank))):
        parts.append(v if e == 1 else f"{v}^{e}")
    return "*".join(parts)


def parse_monomial(text: str) -> Monomial:
    text = text.strip()
    if text in ("1", ""):
        return ONE
    exps: dict[str, int] = {}
    for tok in text.split("*"):
        tok = tok.strip()
        var, _, power = tok.partition("^")
        if not var:
            raise ValueError(f"malformed monomial factor {tok!r}")
        e = int(power) if power else 1
        if e < 1:
            raise ValueError(f"exponent must be positive in {tok!r}")
        exps[var] = exps.get(var, 0) + e
    return Monomial.from_map(exps)


def _minimalize(gens: Iterable[Monomial]) -> list[Monomial]:
    pool = sorted(set(gens), key=lambda m: m.degree)
    kept: list[Monomial] = []
    for m in pool:
        if not any(k.divides(m) for k in kept):
            kept.append(m)
    return kept


@dataclass(frozen=True)
class MonomialIdeal:
    """Ordered variable list plus the minimal monomial generating set."""

    variables: tuple[str, ...]
    gens: tuple[Monomial, ...]

    def __post_init__(self):
        variables = tuple(self.variables)
        if len(set(variables)) != len(variables):
            raise ValueError("duplicate variables")
        vset = set(variables)
        for g in self.gens:
            stray = g.support - vset
            if stray:
                raise ValueError(f"generator uses unknown variables {sorted(stray)}")
        rank = {v: i for i, v in enumerate(variables)}
        minimal = _minimalize(self.gens)
        minimal.sort(key=lambda m: self._gen_key(m, variables, rank))
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "gens", tuple(minimal))

    @staticmethod
    def _gen_key(m: Monomial, variables: tuple[str, ...], rank: dict[str, int]):
        vec = [0] * len(variables)
        for v, e in m.exps:
            vec[rank[v]] = e
        return (m.degree, tuple(-e for e in vec))

    @property
    def is_squarefree(self) -> bool:
        return all(g.is_squarefree for g in self.gens)

    @property
    def is_zero(self) -> bool:
        return not self.gens

    def contains(self, m: Monomial) -> bool:
        return any(g.divides(m) for g in self.gens)

    def gen_strings(self) -> tuple[str, ...]:
        return tuple(render_monomial(g, self.variables) for g in self.gens)


def ideal_from_strings(variables: Sequence[str], gens: Iterable[str]) -> MonomialIdeal:
    return MonomialIdeal(tuple(variables), tuple(parse_monomial(g) for g in gens))


def edge_ideal(hg: Hypergraph) -> MonomialIdeal:
    gens = tuple(Monomial.from_map({v: 1 for v in e}) for e in hg.edges)
    return MonomialIdeal(hg.vertices, gens)


def cover_ideal(hg: Hypergraph) -> MonomialIdeal:
    gens = tuple(
        Monomial.from_map({v: 1 for v in c}) for c in minimal_vertex_covers(hg)
    )
    return MonomialIdeal(hg.vertices, gens)


def alexander_dual(ideal: MonomialIdeal) -> MonomialIdeal:
    """Dual of a squarefree ideal via minimal transversals of generator supports."""
    if not ideal.is_squarefree:
        raise ValueError("Alexander dual requires a squarefree ideal")
    transversals = minimal_transversals(
        [g.support for g in ideal.gens], ideal.variables
    )
    gens = tuple(Monomial.from_map({v: 1 for v in t}) for t in transversals)
    return MonomialIdeal(ideal.variables, gens)


def intersect(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    if a.variables != b.variables:
        raise ValueError("ideals live over different variable lists")
    gens = {x.lcm(y) for x in a.gens for y in b.gens}
    return MonomialIdeal(a.variables, tuple(gens))


def power(ideal: MonomialIdeal, ell: int) -> MonomialIdeal:
    if ell < 1:
        raise ValueError("power exponent must be >= 1")
    gens = set()
    for combo in combinations_with_replacement(ideal.gens, ell):
        m = ONE
        for g in combo:
            m = m.times(g)
        gens.add(m)
    return MonomialIdeal(ideal.variables, tuple(gens))


def colon_by_monomial(ideal: MonomialIdeal, m: Monomial) -> MonomialIdeal:
    return MonomialIdeal(ideal.variables, tuple(g.quotient(m) for g in ideal.gens))


def minimal_primes(ideal: MonomialIdeal) -> list[frozenset[str]]:
    """Variable sets generating the minimal primes of a squarefree ideal."""
    if not ideal.is_squarefree:
        raise ValueError("minimal primes computed for squarefree ideals only")
    return minimal_transversals([g.support for g in ideal.gens], ideal.variables)


def symbolic_power(ideal: MonomialIdeal, ell: int) -> MonomialIdeal:
    """Intersection of the ell-th powers of the minimal primes."""
    if ell < 1:
        raise ValueError("symbolic power exponent must be >= 1")
    if not ideal.is_squarefree:
        raise ValueError("symbolic power requires a squarefree ideal")
    if ell == 1 or ideal.is_zero:
        return ideal
    result: MonomialIdeal | None = None
    for prime in minimal_primes(ideal):
        vs = sorted(prime, key=ideal.variables.index)
        gens = tuple(
            Monomial.from_map(
                {v: combo.count(v) for v in set(combo)}
            )
            for combo in combinations_with_replacement(vs, ell)
        )
        component = MonomialIdeal(ideal.variables, gens)
        result = component if result is None else intersect(result, component)
    assert result is not None
    return result


def prime_power_membership(m: Monomial, primes: Iterable[frozenset[str]], ell: int) -> bool:
    """Degree-count oracle: m lies in each prime's ell-th power."""
    return all(sum(m.exp(v) for v in p) >= ell for p in primes)


def polarize(ideal: MonomialIdeal) -> MonomialIdeal:
    """Replace every power v^k by the product of shadow copies v#1 .. v#k."""
    depth = {v: 0 for v in ideal.variables}
    for g in ideal.gens:
        for v, e in g.exps:
            depth[v] = max(depth[v], e)
    variables = tuple(
        make_shadow(v, k) for v in ideal.variables for k in range(1, depth[v] + 1)
    )
    gens = []
    for g in ideal.gens:
        gens.append(
            Monomial.from_map(
                {make_shadow(v, k): 1 for v, e in g.exps for k in range(1, e + 1)}
            )
        )
    return MonomialIdeal(variables, tuple(gens))


def depolarize(ideal: MonomialIdeal) -> MonomialIdeal:
    """Substitute every shadow copy back to its base variable."""
    bases: list[str] = []
    for v in ideal.variables:
        b, _ = split_shadow(v)
        if b not in bases:
            bases.append(b)
    gens = []
    for g in ideal.gens:
        d: dict[str, int] = {}
        for v, e in g.exps:
            b, _ = split_shadow(v)
            d[b] = d.get(b, 0) + e
        gens.append(Monomial.from_map(d))
    return MonomialIdeal(tuple(bases), tuple(gens))


def deg_max(ideal: MonomialIdeal) -> int:
    if ideal.is_zero:
        raise ValueError("zero ideal has no generator degree")
    return max(g.degree for g in ideal.gens)


def linear_quotients_order(
    ideal: MonomialIdeal, node_cap: int = LQ_NODE_CAP
) -> tuple[Monomial, ...] | None:
    """Search for a generator order with variable-generated colon ideals.

    Depth-first over placements seeded by the canonical (degree, lex) order;
    exhaustive, so None means no order exists.  Raises BudgetExceeded when
    the node cap runs out before the search finishes.
    """
    gens = list(ideal.gens)
    r = len(gens)
    if r <= 1:
        return tuple(gens)
    bit = {v: 1 << i for i, v in enumerate(ideal.variables)}

    # q_mask[l][i]: support mask of gens[l] : gens[i]; q_single[l][i]: that mask
    # when the quotient is a single variable, else 0.
    q_mask = [[0] * r for _ in range(r)]
    q_single = [[0] * r for _ in range(r)]
    for l in range(r):
        for i in range(r):
            if l == i:
                continue
            q = gens[l].quotient(gens[i])
            mask = 0
            for v in q.support:
                mask |= bit[v]
            q_mask[l][i] = mask
            if q.degree == 1:
                q_single[l][i] = mask

    nodes = 0
    # per-candidate state, versioned per depth: accumulated single-variable
    # mask, and the placed generators whose quotient is not yet hit by it
    singles = [0] * r
    pending: list[tuple[int, ...]] = [()] * r

    def place(w: int, singles_in, pending_in):
        s_out = list(singles_in)
        p_out = list(pending_in)
        for i in range(r):
            if i == w:
                continue
            s = s_out[i] | q_single[w][i]
            pend = p_out[i]
            if s != s_out[i]:
                s_out[i] = s
                pend = tuple(j for j in pend if not q_mask[j][i] & s)
            if not q_mask[w][i] & s:
                pend = pend + (w,)
            p_out[i] = pend
        return s_out, p_out

    order: list[int] = []
    used = [False] * r

    def dfs(singles_in, pending_in) -> bool:
        nonlocal nodes
        if len(order) == r:
            return True
        for i in range(r):
            if used[i] or pending_in[i]:
                continue
            nodes += 1
            if nodes > node_cap:
                raise BudgetExceeded("linear-quotients search budget exhausted", {"nodes": nodes})
            used[i] = True
            order.append(i)
            s_next, p_next = place(i, singles_in, pending_in)
            if dfs(s_next, p_next):
                return True
            order.pop()
            used[i] = False
        return False

    if dfs(singles, pending):
        return tuple(gens[i] for i in order)
    return None


def cl_certificate(
    ideal: MonomialIdeal, node_cap: int = LQ_NODE_CAP
) -> tuple[str, tuple[Monomial, ...] | None]:
    """('linear_quotients', order) when an order is found, else ('unknown', None).

    Linear quotients certify componentwise linearity; their absence refutes
    nothing, so the negative outcome stays 'unknown'.
    """
    try:
        order = linear_quotients_order(ideal, node_cap)
    except BudgetExceeded:
        return "unknown", None
    if order is None:
        return "unknown", None
    return "linear_quotients", order


def reg_if_cl(ideal: MonomialIdeal, node_cap: int = LQ_NODE_CAP) -> int | None:
    """Regularity shortcut: max generator degree once linear quotients certify."""
    status, _ = cl_certificate(ideal, node_cap)
    if status == "linear_quotients":
        return deg_max(ideal)
    return None
