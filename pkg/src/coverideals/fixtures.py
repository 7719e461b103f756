"""Built-in instances used by the golden tests, the corpus files, and the CLI."""
from __future__ import annotations

from .complexes import AttachmentRecord, SimplicialComplex, SkeletonSpec, attach_skeletons
from .hypergraphs import Hypergraph, from_complex


def single_edge_hypergraph() -> Hypergraph:
    return Hypergraph(("x1", "x2"), (("x1", "x2"),))


def triangle_hypergraph() -> Hypergraph:
    return Hypergraph(
        ("x1", "x2", "x3"), (("x1", "x2"), ("x1", "x3"), ("x2", "x3"))
    )


def path_complex() -> SimplicialComplex:
    return SimplicialComplex(
        ("x1", "x2", "x3", "x4", "x5"), (("x1", "x2", "x3"), ("x3", "x4", "x5"))
    )


def fan_complex() -> SimplicialComplex:
    """Four triangles around a central rim; {x5} meets every special cycle."""
    return SimplicialComplex(
        ("x1", "x2", "x3", "x4", "x5", "x6"),
        (
            ("x1", "x2", "x3"),
            ("x2", "x4", "x5"),
            ("x2", "x3", "x5"),
            ("x3", "x5", "x6"),
        ),
    )


def cluster_hypergraph() -> Hypergraph:
    """Two triple-edge clusters glued through x5, with spectator vertices."""
    return Hypergraph(
        tuple(f"x{i}" for i in range(1, 11)),
        (
            ("x1", "x3", "x5"),
            ("x2", "x3", "x5"),
            ("x1", "x4", "x5"),
            ("x1", "x3", "x6"),
            ("x5", "x7", "x9"),
            ("x6", "x7", "x9"),
            ("x5", "x8", "x9"),
            ("x5", "x7", "x10"),
        ),
    )


def tetrahedron_boundary() -> SimplicialComplex:
    return SimplicialComplex(
        ("x1", "x2", "x3", "x4"),
        (
            ("x1", "x2", "x3"),
            ("x1", "x2", "x4"),
            ("x1", "x3", "x4"),
            ("x2", "x3", "x4"),
        ),
    )


def tetrahedron_boundary_hypergraph() -> Hypergraph:
    return from_complex(tetrahedron_boundary())


def ring_complex() -> SimplicialComplex:
    """Four triangles forming a ring; {x1} meets the single special cycle."""
    return SimplicialComplex(
        tuple(f"x{i}" for i in range(1, 9)),
        (
            ("x1", "x2", "x3"),
            ("x3", "x4", "x5"),
            ("x5", "x6", "x7"),
            ("x1", "x7", "x8"),
        ),
    )


def ring_attachment() -> AttachmentRecord:
    spec = SkeletonSpec("x1", ((("x1", "x9", "x10"), 2),))
    return attach_skeletons(ring_complex(), {"x1": spec})


def fan_attachment() -> AttachmentRecord:
    spec = SkeletonSpec("x5", ((("x5", "x7", "x8"), 2),))
    return attach_skeletons(fan_complex(), {"x5": spec})


def square_complex() -> SimplicialComplex:
    return SimplicialComplex(
        ("x1", "x2", "x3", "x4"),
        (("x1", "x2"), ("x2", "x3"), ("x3", "x4"), ("x1", "x4")),
    )


def square_pure_attachment() -> AttachmentRecord:
    """Square with the 2-skeleton of a solid tetrahedron glued at x1 (pure)."""
    spec = SkeletonSpec("x1", ((("x1", "x5", "x6", "x7"), 2),))
    return attach_skeletons(square_complex(), {"x1": spec}, allow_pure=True)


def whiskered_ring() -> SimplicialComplex:
    """Ring with pendant edges at a vertex cover that is not a cycle cover."""
    facets = ring_complex().facets + (
        ("x2", "x9"),
        ("x4", "x10"),
        ("x6", "x11"),
        ("x8", "x12"),
    )
    return SimplicialComplex(tuple(f"x{i}" for i in range(1, 13)), facets)


def golden_catalog() -> list[tuple[str, Hypergraph]]:
    """Hypergraphs for the polarization-identity sweep."""
    return [
        ("single_edge", single_edge_hypergraph()),
        ("triangle", triangle_hypergraph()),
        ("fan", from_complex(fan_complex())),
        ("tetrahedron_boundary", tetrahedron_boundary_hypergraph()),
        ("ring_attachment", from_complex(ring_attachment().complex)),
    ]
