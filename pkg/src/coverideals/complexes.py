"""Simplicial complexes given by facet antichains.

Skeletons, skeleton complexes glued at an apex, links and deletions, good
leaves and forests, special cycles and cycle covers, and the attachment of
skeleton complexes at the vertices of a cycle cover.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .errors import InternalCheckFailed
from .shadows import validate_label
from .transversals import minimal_transversals


def _sorted_face(face: Iterable[str], rank: Mapping[str, int]) -> tuple[str, ...]:
    vs = tuple(sorted(set(face), key=rank.__getitem__))
    if len(vs) != len(tuple(face)) and len(set(face)) != len(tuple(face)):
        raise ValueError(f"face {tuple(face)!r} has repeated vertices")
    return vs


def _face_key(face: Sequence[str], rank: Mapping[str, int]) -> tuple[int, ...]:
    return tuple(rank[x] for x in face)


@dataclass(frozen=True)
class SimplicialComplex:
    """Vertex universe plus the antichain of maximal faces.

    The universe is an explicitly ordered tuple; faces are stored sorted by
    universe position and the facet list is sorted by its position tuple, so
    equal complexes compare equal structurally.
    """

    vertices: tuple[str, ...]
    facets: tuple[tuple[str, ...], ...]

    def __post_init__(self):
        vertices = tuple(self.vertices)
        if len(set(vertices)) != len(vertices):
            raise ValueError("duplicate vertex labels")
        for v in vertices:
            validate_label(v)
        rank = {v: i for i, v in enumerate(vertices)}
        faces = []
        for f in self.facets:
            for v in f:
                if v not in rank:
                    raise ValueError(f"facet vertex {v!r} not in the universe")
            faces.append(_sorted_face(f, rank))
        faces = sorted(set(faces), key=lambda f: _face_key(f, rank))
        sets = [frozenset(f) for f in faces]
        for i, a in enumerate(sets):
            for j, b in enumerate(sets):
                if i != j and a <= b:
                    raise ValueError(f"facets are not an antichain: {faces[i]} <= {faces[j]}")
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "facets", tuple(faces))

    @cached_property
    def rank(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def facet_sets(self) -> tuple[frozenset[str], ...]:
        return tuple(frozenset(f) for f in self.facets)

    @property
    def dim(self) -> int:
        if not self.facets:
            raise ValueError("void complex has no dimension")
        return max(len(f) for f in self.facets) - 1

    def is_face(self, face: Iterable[str]) -> bool:
        fs = frozenset(face)
        return any(fs <= g for g in self.facet_sets)

    def sort_face(self, face: Iterable[str]) -> tuple[str, ...]:
        return _sorted_face(face, self.rank)


def complex_from_faces(vertices: Sequence[str], faces: Iterable[Iterable[str]]) -> SimplicialComplex:
    """Build a complex from an arbitrary face family, keeping only maximal faces."""
    sets = {frozenset(f) for f in faces}
    maximal = [f for f in sets if not any(f < g for g in sets)]
    rank = {v: i for i, v in enumerate(vertices)}
    facets = [tuple(sorted(f, key=rank.__getitem__)) for f in maximal]
    return SimplicialComplex(tuple(vertices), tuple(facets))


@dataclass(frozen=True)
class SkeletonSpec:
    """Simplices sharing exactly one apex, each truncated to a chosen skeleton degree."""

    apex: str
    parts: tuple[tuple[tuple[str, ...], int], ...]

    def __post_init__(self):
        validate_label(self.apex)
        parts = []
        for vs, s in self.parts:
            vset = tuple(dict.fromkeys(vs))
            if self.apex not in vset:
                raise ValueError(f"part {vs!r} does not contain the apex {self.apex!r}")
            if len(vset) < 2:
                raise ValueError(f"part {vs!r} must have dimension >= 1")
            if not 1 <= s <= len(vset) - 1:
                raise ValueError(f"skeleton degree {s} out of range for part {vs!r}")
            parts.append((vset, int(s)))
        for i, (a, _) in enumerate(parts):
            for b, _ in parts[i + 1:]:
                shared = set(a) & set(b)
                if shared != {self.apex}:
                    raise ValueError(f"parts {a!r} and {b!r} share more than the apex")
        object.__setattr__(self, "parts", tuple(parts))

    @property
    def is_pure(self) -> bool:
        return all(s < len(vs) - 1 for vs, s in self.parts)

    @property
    def new_vertices(self) -> tuple[str, ...]:
        out = []
        for vs, _ in self.parts:
            out.extend(v for v in vs if v != self.apex)
        return tuple(dict.fromkeys(out))


@dataclass(frozen=True)
class Cycle:
    """Alternating closed walk of distinct vertices and distinct facets."""

    vertices: tuple[str, ...]
    facets: tuple[tuple[str, ...], ...]

    def __len__(self) -> int:
        return len(self.vertices)


def skeleton(cx: SimplicialComplex, s: int) -> SimplicialComplex:
    """Maximal faces of dimension <= s."""
    if not 0 <= s <= cx.dim:
        raise ValueError(f"skeleton degree {s} out of range 0..{cx.dim}")
    faces: set[frozenset[str]] = set()
    for f in cx.facets:
        if len(f) - 1 <= s:
            faces.add(frozenset(f))
        else:
            faces.update(map(frozenset, _subsets_of_size(f, s + 1)))
    return complex_from_faces(cx.vertices, faces)


def _subsets_of_size(items: Sequence[str], k: int):
    from itertools import combinations

    return combinations(items, k)


def build_skeleton_complex(spec: SkeletonSpec) -> tuple[SimplicialComplex, bool]:
    """Union of the chosen skeletons of the parts; also reports purity."""
    universe = (spec.apex,) + spec.new_vertices
    faces: set[frozenset[str]] = set()
    for vs, s in spec.parts:
        part = SimplicialComplex(tuple(vs), (tuple(vs),))
        faces.update(map(frozenset, skeleton(part, s).facets))
    return complex_from_faces(universe, faces), spec.is_pure


def link(cx: SimplicialComplex, face: Iterable[str]) -> SimplicialComplex:
    """Faces disjoint from ``face`` whose union with it is again a face."""
    fs = frozenset(face)
    _check_subset(cx, fs)
    rest = tuple(v for v in cx.vertices if v not in fs)
    carriers = [g - fs for g in cx.facet_sets if fs <= g]
    if not carriers:
        return SimplicialComplex(rest, ())
    return complex_from_faces(rest, carriers)


def delete(cx: SimplicialComplex, face: Iterable[str]) -> SimplicialComplex:
    """Faces disjoint from ``face``; the universe shrinks by ``face``."""
    fs = frozenset(face)
    _check_subset(cx, fs)
    rest = tuple(v for v in cx.vertices if v not in fs)
    return complex_from_faces(rest, [g - fs for g in cx.facet_sets])


def _check_subset(cx: SimplicialComplex, fs: frozenset[str]):
    missing = fs - set(cx.vertices)
    if missing:
        raise ValueError(f"face vertices {sorted(missing)} not in the universe")


def is_good_leaf(cx: SimplicialComplex, facet: Iterable[str]) -> bool:
    """A facet whose intersections with all facets form a chain under inclusion."""
    fs = frozenset(facet)
    if fs not in cx.facet_sets:
        raise ValueError(f"{tuple(facet)!r} is not a facet")
    cuts = sorted((fs & g for g in cx.facet_sets), key=len, reverse=True)
    return all(b <= a for a, b in zip(cuts, cuts[1:]))


def good_leaf_order(cx: SimplicialComplex) -> tuple[tuple[str, ...], ...] | None:
    """Facet order in which each facet is a good leaf of the remaining tail."""
    remaining = list(cx.facets)
    order: list[tuple[str, ...]] = []
    universe = cx.vertices
    while remaining:
        sub = SimplicialComplex(universe, tuple(remaining))
        leaf = next((f for f in remaining if is_good_leaf(sub, f)), None)
        if leaf is None:
            return None
        order.append(leaf)
        remaining.remove(leaf)
    return tuple(order)


def special_cycles(
    cx: SimplicialComplex,
    max_len: int | None = None,
    forbidden: Iterable[str] = (),
) -> list[Cycle]:
    """All special cycles of length 3..max_len avoiding the forbidden vertices.

    One representative per rotation/reflection class: the stored cycle starts
    at its least vertex and runs toward its smaller neighbour.
    """
    if max_len is not None and max_len < 3:
        raise ValueError("max_len must be >= 3")
    rank = cx.rank
    banned = frozenset(forbidden)
    facets = cx.facets
    limit = min(max_len or len(facets), len(facets), len(cx.vertices))
    by_vertex: dict[str, list[int]] = {v: [] for v in cx.vertices}
    for i, f in enumerate(cx.facet_sets):
        for v in f:
            by_vertex[v].append(i)
    out: list[Cycle] = []

    def counts_ok(used_facets: list[int], verts: frozenset[str]) -> bool:
        return all(len(cx.facet_sets[i] & verts) <= 2 for i in used_facets)

    def grow(start: str, verts: list[str], fids: list[int]):
        vset = frozenset(verts)
        if len(verts) > limit:
            return
        last = verts[-1]
        for fid in by_vertex[last]:
            if fid in fids:
                continue
            fset = cx.facet_sets[fid]
            # close the cycle
            if len(verts) >= 3 and start in fset:
                trial = fids + [fid]
                if counts_ok(trial, vset) and rank[verts[1]] < rank[verts[-1]]:
                    out.append(Cycle(tuple(verts), tuple(facets[i] for i in trial)))
            for nxt in sorted(fset, key=rank.__getitem__):
                if nxt in vset or nxt in banned or rank[nxt] <= rank[start]:
                    continue
                trial = fids + [fid]
                if counts_ok(trial, vset | {nxt}):
                    grow(start, verts + [nxt], trial)

    for start in cx.vertices:
        if start in banned:
            continue
        grow(start, [start], [])
    out.sort(key=lambda c: (len(c), _face_key(c.vertices, rank)))
    return out


def _forest_by_cycles(cx: SimplicialComplex) -> bool:
    return not special_cycles(cx)


def _forest_by_elimination(cx: SimplicialComplex) -> bool:
    return good_leaf_order(cx) is not None


def is_forest(cx: SimplicialComplex) -> bool:
    """Forest test run through both independent routes, which must agree."""
    by_cycles = _forest_by_cycles(cx)
    by_elim = _forest_by_elimination(cx)
    if by_cycles != by_elim:
        raise InternalCheckFailed(
            f"forest checkers disagree on {cx.facets}: cycles={by_cycles} elimination={by_elim}"
        )
    return by_cycles


def is_cycle_cover(cx: SimplicialComplex, cover: Iterable[str]) -> bool:
    """True iff no special cycle of length >= 3 avoids the given vertices."""
    w = frozenset(cover)
    _check_subset(cx, w)
    return not special_cycles(cx, forbidden=w)


def minimum_cycle_covers(cx: SimplicialComplex) -> list[frozenset[str]]:
    """All minimum-cardinality vertex sets meeting every special cycle."""
    cycles = special_cycles(cx)
    covers = minimal_transversals([set(c.vertices) for c in cycles], cx.vertices)
    if not covers:
        return []
    least = min(len(c) for c in covers)
    return [c for c in covers if len(c) == least]


def is_unmixed(cx: SimplicialComplex) -> bool:
    """All minimal vertex covers of the facet hypergraph share one cardinality."""
    covers = minimal_transversals([f for f in cx.facets if f], cx.vertices)
    return len({len(c) for c in covers}) <= 1


@dataclass(frozen=True)
class AttachmentRecord:
    """Result of attaching skeleton complexes at the vertices of a cycle cover.

    ``facet_order`` fixes the indexing used by weight tuples: the base
    complex's facets first, then one distinguished full-simplex facet per
    attachment vertex, then the remaining attachment facets.  A pure
    attachment has no full-simplex part and records ``None``.
    """

    complex: SimplicialComplex
    base: SimplicialComplex
    cover: tuple[str, ...]
    facet_order: tuple[tuple[str, ...], ...]
    base_facet_count: int
    distinguished: tuple[tuple[str, ...] | None, ...]
    setup_names: tuple[tuple[str, str], ...]

    def weights_from_map(self, by_facet: Mapping[tuple[str, ...], int]) -> tuple[int, ...]:
        key = {tuple(sorted(f)): w for f, w in by_facet.items()}
        try:
            return tuple(key[tuple(sorted(f))] for f in self.facet_order)
        except KeyError as e:
            raise ValueError(f"no weight given for facet {e.args[0]!r}") from None

    def distinguished_for(self, vertex: str) -> tuple[str, ...] | None:
        return self.distinguished[self.cover.index(vertex)]


def attach_skeletons(
    cx: SimplicialComplex,
    assignments: Mapping[str, SkeletonSpec],
    allow_pure: bool = False,
) -> AttachmentRecord:
    """Attach one skeleton complex at every vertex of a cycle cover of ``cx``."""
    cover = tuple(sorted(assignments, key=cx.rank.__getitem__))
    if not is_cycle_cover(cx, cover):
        raise ValueError("assignment keys are not a cycle cover")
    used: set[str] = set(cx.vertices)
    parts: list[tuple[str, SkeletonSpec, SimplicialComplex, bool]] = []
    for v in cover:
        spec = assignments[v]
        if spec.apex != v:
            raise ValueError(f"spec at {v!r} has apex {spec.apex!r}")
        fresh = set(spec.new_vertices)
        clash = fresh & used
        if clash:
            raise ValueError(f"attachment vertices {sorted(clash)} are not fresh")
        used |= fresh
        built, pure = build_skeleton_complex(spec)
        if pure and not allow_pure:
            raise ValueError(
                f"skeleton complex at {v!r} is pure; pass allow_pure=True to force it"
            )
        parts.append((v, spec, built, pure))

    universe = list(cx.vertices)
    for _, spec, _, _ in parts:
        universe.extend(spec.new_vertices)
    faces = set(map(frozenset, cx.facets))
    for _, _, built, _ in parts:
        faces.update(map(frozenset, built.facets))
    new_cx = complex_from_faces(universe, faces)

    distinguished: list[tuple[str, ...] | None] = []
    for v, spec, built, pure in parts:
        full = sorted(
            (tuple(sorted(vs)) for vs, s in spec.parts if s == len(vs) - 1),
        )
        distinguished.append(
            tuple(sorted(full[0], key=new_cx.rank.__getitem__)) if full else None
        )

    head = list(cx.facets)
    middle = [d for d in distinguished if d is not None]
    tail = [f for f in new_cx.facets if f not in head and f not in middle]
    facet_order = tuple(head) + tuple(middle) + tuple(tail)
    if set(facet_order) != set(new_cx.facets):
        # base facets swallowed during minimalization are dropped from the order
        head = [f for f in head if f in set(new_cx.facets)]
        facet_order = tuple(head) + tuple(middle) + tuple(tail)

    names: list[tuple[str, str]] = []
    counter = 1
    for v in cover:
        names.append((v, f"x{counter}"))
        counter += 1
    for v in cx.vertices:
        if v not in cover:
            names.append((v, f"x{counter}"))
            counter += 1
    for v in universe[len(cx.vertices):]:
        names.append((v, f"x{counter}"))
        counter += 1

    return AttachmentRecord(
        complex=new_cx,
        base=cx,
        cover=cover,
        facet_order=facet_order,
        base_facet_count=len(head),
        distinguished=tuple(distinguished),
        setup_names=tuple(names),
    )
