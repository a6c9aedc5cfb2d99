"""File formats: JSON graphs/certificates/reports, CSV matrices, DOT and
graph6 exports, swap-move lists.

All emitters iterate in sorted structural order so output is byte-stable;
the JSON graph format round-trips exactly.
"""
from __future__ import annotations

import json
from typing import Dict, List, Optional

import networkx as nx

from .families import SwapMove
from .graph import ColorReport, Edge, LabeledGraph, VertexId, edge
from .matrices import Family, FamilyParams, LabelMatrix

FORMAT_VERSION = 1


class ParseError(ValueError):
    pass


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


# ---------------------------------------------------------------- graphs

def graph_to_json(g: LabeledGraph) -> str:
    vertices = [
        {"id": str(v), "part": g.part[v]} for v in g.vertices()
    ]
    edges = []
    for a, b in g.sorted_edges():
        item: Dict[str, object] = {"u": str(a), "v": str(b)}
        lab = g.labels.get((a, b))
        if lab is not None:
            item["label"] = lab
        edges.append(item)
    return _dumps(
        {"format_version": FORMAT_VERSION, "vertices": vertices, "edges": edges}
    )


def graph_from_json(text: str) -> LabeledGraph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not valid JSON: {exc}") from exc
    try:
        if data["format_version"] != FORMAT_VERSION:
            raise ParseError(
                f"unsupported format_version {data['format_version']}"
            )
        part = {
            VertexId.parse(item["id"]): int(item["part"])
            for item in data["vertices"]
        }
        edges = set()
        labels: Dict[Edge, int] = {}
        for item in data["edges"]:
            e = edge(VertexId.parse(item["u"]), VertexId.parse(item["v"]))
            edges.add(e)
            if "label" in item:
                labels[e] = int(item["label"])
        return LabeledGraph(part=part, edges=edges, labels=labels)
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad graph file: {exc}") from exc


def graph_to_dot(g: LabeledGraph) -> str:
    lines = ["graph G {"]
    fills = {1: "lightblue", 2: "lightpink", 3: "lightgray"}
    for v in g.vertices():
        lines.append(
            f'  "{v}" [label="{v}", fillcolor={fills[g.part[v]]}, style=filled];'
        )
    for a, b in g.sorted_edges():
        lab = g.labels.get((a, b))
        attr = f' [label="{lab}"]' if lab is not None else ""
        lines.append(f'  "{a}" -- "{b}"{attr};')
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_to_graph6(g: LabeledGraph) -> str:
    """graph6 line for the unlabeled simple graph; vertices numbered in
    sorted structural order.  Labels are dropped (format limitation);
    pair with labels_sidecar() to keep them."""
    verts = g.vertices()
    index = {v: i for i, v in enumerate(verts)}
    G = nx.Graph()
    G.add_nodes_from(range(len(verts)))
    G.add_edges_from((index[a], index[b]) for a, b in g.sorted_edges())
    return nx.to_graph6_bytes(G, header=False).decode("ascii")


def labels_sidecar(g: LabeledGraph) -> str:
    """One 'u v label' line per labeled edge, in sorted edge order."""
    lines = []
    for a, b in g.sorted_edges():
        lab = g.labels.get((a, b))
        if lab is not None:
            lines.append(f"{a} {b} {lab}")
    return "\n".join(lines) + "\n"


# -------------------------------------------------------------- matrices

def matrix_to_csv(mat: LabelMatrix) -> str:
    lines = [
        ",".join(str(v) for v in mat.row_values(role)) for role in mat.rows
    ]
    return "\n".join(lines) + "\n"


def matrix_to_json(mat: LabelMatrix) -> str:
    p = mat.params
    rows = [
        {"role": role[0], "leaf": role[1], "values": mat.row_values(role)}
        for role in mat.rows
    ]
    return _dumps(
        {
            "format_version": FORMAT_VERSION,
            "family": p.family.value,
            "n": p.n,
            "k": p.k,
            "rows": rows,
        }
    )


# ---------------------------------------------------------- certificates

def certificate_to_json(g: LabeledGraph, report: ColorReport) -> str:
    lower, upper = report.chi_la_bracket
    return _dumps(
        {
            "format_version": FORMAT_VERSION,
            "q": g.q,
            "bijection_ok": report.bijection_ok,
            "bad_labels": report.bad_labels,
            "conflict_edges": [[str(a), str(b)] for a, b in report.conflict_edges],
            "is_local_antimagic": report.is_local_antimagic,
            "c_f": report.c_f,
            "distinct_colors": report.distinct_colors,
            "colors": {str(v): report.color_of[v] for v in sorted(report.color_of)},
            "chi_lower": report.chi_lower,
            "chi_la_bracket": [lower, upper],
        }
    )


# ----------------------------------------------------------- swap moves

def _edge_json(e: Edge) -> List[str]:
    return [str(e[0]), str(e[1])]


def _edge_parse(item: List[str]) -> Edge:
    return edge(VertexId.parse(item[0]), VertexId.parse(item[1]))


def swaps_to_json(moves: List[SwapMove], g: Optional[LabeledGraph] = None) -> str:
    out = []
    for mv in moves:
        item: Dict[str, object] = {
            "center_a": str(mv.center_a),
            "center_b": str(mv.center_b),
            "pair_a": [_edge_json(e) for e in mv.pair_a],
            "pair_b": [_edge_json(e) for e in mv.pair_b],
        }
        if g is not None:
            la, lb = mv.label_pairs(g)
            item["labels_a"] = list(la)
            item["labels_b"] = list(lb)
        out.append(item)
    return _dumps({"format_version": FORMAT_VERSION, "moves": out})


def swaps_from_json(text: str) -> List[SwapMove]:
    try:
        data = json.loads(text)
        moves = []
        for item in data["moves"]:
            moves.append(
                SwapMove(
                    center_a=VertexId.parse(item["center_a"]),
                    center_b=VertexId.parse(item["center_b"]),
                    pair_a=(
                        _edge_parse(item["pair_a"][0]),
                        _edge_parse(item["pair_a"][1]),
                    ),
                    pair_b=(
                        _edge_parse(item["pair_b"][0]),
                        _edge_parse(item["pair_b"][1]),
                    ),
                )
            )
        return moves
    except (json.JSONDecodeError, KeyError, IndexError, TypeError, ValueError) as exc:
        raise ParseError(f"bad swap list: {exc}") from exc


# --------------------------------------------------------------- params

def params_to_json(p: FamilyParams) -> Dict[str, object]:
    r, s = p.factorization if p.factorization else (None, None)
    return {"family": p.family.value, "n": p.n, "k": p.k, "r": r, "s": s}


def params_from_json(item: Dict[str, object]) -> FamilyParams:
    fact = None
    if item.get("r") is not None:
        fact = (int(item["r"]), int(item["s"]))  # type: ignore[arg-type]
    return FamilyParams(
        family=Family(item["family"]),
        n=int(item["n"]),  # type: ignore[arg-type]
        k=int(item["k"]),  # type: ignore[arg-type]
        factorization=fact,
    )
