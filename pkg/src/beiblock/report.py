"""Assemble the invariant report for a graph and render it as JSON or text."""

from __future__ import annotations

import json
from typing import Any, Dict, List, Optional

from beiblock.blocks import BlockDecomposition, split_indecomposable, validate_block_graph
from beiblock.graph import Graph, induced_subgraph
from beiblock.krull import krull_dim_linear, traversal_witness
from beiblock.oracle import minh_maxh
from beiblock.regularity import compute_regularity, flower_vertices, reg_bounds


class OracleMismatch(RuntimeError):
    pass


def _bounds(bd: BlockDecomposition) -> Optional[Dict[str, int]]:
    if len(bd.components) != 1 or bd.n < 2:
        return None
    b = reg_bounds(bd)
    return {"flower_lower": b.flower_lower, "path_lower": b.path_lower, "clique_upper": b.clique_upper}


def _component_entry(g: Graph, comp) -> Dict[str, Any]:
    sub = induced_subgraph(g, comp)
    bd = validate_block_graph(sub)
    return {
        "vertices": list(comp),
        "n": sub.n,
        "krull_dimension": krull_dim_linear(bd),
        "regularity": compute_regularity(bd),
        "reg_bounds": _bounds(bd),
    }


def invariant_report(g: Graph, check: bool = False, limit: Optional[int] = None) -> Dict[str, Any]:
    """Full report; raises NotBlockGraph, or OracleLimitExceeded under ``check``."""
    bd = validate_block_graph(g)
    c = len(bd.components)
    dim = krull_dim_linear(bd)
    witness = traversal_witness(bd)
    oracle: Dict[str, Any] = {"used": False, "dim_bruteforce": None, "minh_height": None, "maxh_height": None}
    if check:
        summary = minh_maxh(g, limit)
        oracle = {
            "used": True,
            "dim_bruteforce": summary.dim,
            "minh_height": summary.minh_height,
            "maxh_height": summary.maxh_height,
        }
        if summary.dim != dim or 2 * g.n - summary.minh_height != dim:
            raise OracleMismatch(f"linear dimension {dim} but exhaustive search gives {summary.dim}")
    report: Dict[str, Any] = {
        "n": g.n,
        "edge_count": g.m,
        "component_count": c,
        "is_block_graph": True,
        "depth": g.n + c,
        "projective_dimension": g.n - c,
        "krull_dimension": dim,
        "dim_witness": list(witness.cutset.vertices),
        "regularity": compute_regularity(bd),
        "reg_bounds": _bounds(bd),
        "flowers": [{"vertex": s.vertex, "max_cdeg_f": s.max_cdeg_f} for s in flower_vertices(bd)],
        "indecomposable_part_count": len(split_indecomposable(bd).parts),
        "oracle": oracle,
    }
    if c > 1:
        report["components"] = [_component_entry(g, comp) for comp in bd.components]
    return report


def to_json(report: Dict[str, Any]) -> str:
    return json.dumps(report, indent=2) + "\n"


def _flatten(prefix: str, value: Any, out: List[str]) -> None:
    if isinstance(value, dict):
        for k, v in value.items():
            _flatten(f"{prefix}.{k}" if prefix else k, v, out)
    elif isinstance(value, list) and value and isinstance(value[0], dict):
        for i, item in enumerate(value, start=1):
            _flatten(f"{prefix}[{i}]", item, out)
    else:
        out.append(f"{prefix}: {json.dumps(value, separators=(',', ':'))}")


def to_text(report: Dict[str, Any]) -> str:
    lines: List[str] = []
    _flatten("", report, lines)
    return "\n".join(lines) + "\n"
