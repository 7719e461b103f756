"""Vertex labels and their shadow copies.

A plain label is a non-empty token without whitespace or '#'.  A shadow copy
of a base vertex x at level k >= 1 is written "x#k"; these names are shared
by the edge-duplication construction and by polarization so that the two
always align literally.
"""
from __future__ import annotations


def is_shadow(label: str) -> bool:
    return "#" in label


def make_shadow(base: str, level: int) -> str:
    if level < 1:
        raise ValueError(f"shadow level must be >= 1, got {level}")
    validate_label(base, allow_shadow=False)
    return f"{base}#{level}"


def split_shadow(label: str) -> tuple[str, int]:
    """Return (base, level) for "x#k"; plain labels get level 0."""
    if "#" not in label:
        return label, 0
    base, _, tail = label.partition("#")
    if not tail.isdigit() or int(tail) < 1:
        raise ValueError(f"malformed shadow label {label!r}")
    return base, int(tail)


def validate_label(label: str, allow_shadow: bool = True) -> str:
    if not label or any(c.isspace() for c in label):
        raise ValueError(f"invalid vertex label {label!r}")
    if "#" in label:
        if not allow_shadow:
            raise ValueError(f"'#' is reserved for shadow copies: {label!r}")
        base, level = split_shadow(label)
        if not base or "#" in base:
            raise ValueError(f"malformed shadow label {label!r}")
    return label
