"""JSON round-tripping for the package's value types.

All emitted lists are canonically sorted by construction, so dumping the
same value twice yields identical bytes.
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .complexes import SimplicialComplex, SkeletonSpec, complex_from_faces
from .decompose import LEAF, VDWitness
from .expansion import WeightedHypergraph
from .hypergraphs import Hypergraph
from .ideals import MonomialIdeal, ideal_from_strings


def dump_complex(cx: SimplicialComplex) -> dict:
    return {
        "type": "simplicial_complex",
        "vertices": list(cx.vertices),
        "facets": [list(f) for f in cx.facets],
    }


def load_complex(d: dict, normalize: bool = False) -> SimplicialComplex:
    vertices = tuple(d["vertices"])
    facets = [tuple(f) for f in d["facets"]]
    if normalize:
        return complex_from_faces(vertices, facets)
    return SimplicialComplex(vertices, tuple(facets))


def dump_hypergraph(hg: Hypergraph) -> dict:
    return {
        "type": "hypergraph",
        "vertices": list(hg.vertices),
        "edges": [list(e) for e in hg.edges],
    }


def load_hypergraph(d: dict) -> Hypergraph:
    return Hypergraph(tuple(d["vertices"]), tuple(tuple(e) for e in d["edges"]))


def dump_weighted(wh: WeightedHypergraph) -> dict:
    out = dump_hypergraph(wh.base)
    out["type"] = "weighted_hypergraph"
    out["weights"] = list(wh.weights)
    return out


def load_weighted(d: dict) -> WeightedHypergraph:
    hg = Hypergraph(tuple(d["vertices"]), tuple(tuple(e) for e in d["edges"]))
    return WeightedHypergraph(hg, tuple(d["weights"]))


def dump_ideal(ideal: MonomialIdeal) -> dict:
    return {
        "type": "monomial_ideal",
        "variables": list(ideal.variables),
        "generators": list(ideal.gen_strings()),
    }


def load_ideal(d: dict) -> MonomialIdeal:
    return ideal_from_strings(tuple(d["variables"]), d["generators"])


def dump_skeleton_spec(spec: SkeletonSpec) -> dict:
    return {
        "type": "skeleton_spec",
        "apex": spec.apex,
        "parts": [{"vertices": list(vs), "s": s} for vs, s in spec.parts],
    }


def load_skeleton_spec(d: dict) -> SkeletonSpec:
    return SkeletonSpec(
        d["apex"], tuple((tuple(p["vertices"]), int(p["s"])) for p in d["parts"])
    )


def dump_witness(w: VDWitness) -> dict:
    if w.is_leaf:
        return {"isolated": True}
    return {
        "shed": w.shed,
        "del": dump_witness(w.del_child),
        "link": dump_witness(w.link_child),
    }


def load_witness(d: dict) -> VDWitness:
    if d.get("isolated"):
        return LEAF
    return VDWitness(d["shed"], load_witness(d["del"]), load_witness(d["link"]))


_LOADERS = {
    "simplicial_complex": load_complex,
    "hypergraph": load_hypergraph,
    "weighted_hypergraph": load_weighted,
    "monomial_ideal": load_ideal,
    "skeleton_spec": load_skeleton_spec,
}


def load_any(d: dict) -> Any:
    kind = d.get("type")
    if kind not in _LOADERS:
        raise ValueError(f"unknown or missing document type {kind!r}")
    return _LOADERS[kind](d)


def canonical_json(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def read_json(path: str | Path) -> dict:
    with open(path) as fh:
        return json.load(fh)


def write_json(path: str | Path, obj: Any):
    Path(path).write_text(canonical_json(obj))
