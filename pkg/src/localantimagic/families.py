"""Graph family constructions: base disjoint joins, the crossing step,
the leaf-merge step, and label-preserving 2-swaps."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Tuple

from .graph import (
    Edge,
    GraphError,
    LabeledGraph,
    Role,
    VertexId,
    components_of,
    edge,
)
from .matrices import Family, FamilyParams, LabelMatrix, ParamError, build_matrix


class ConstructionError(Exception):
    pass


def build_base_graph(mat: LabelMatrix) -> LabeledGraph:
    """2k+1 disjoint copies of P_2 v O_m, copy i labeled by column i.

    u vertices get part 1, v part 2, leaves part 3.
    """
    p = mat.params
    m = p.leaves_per_copy
    part: Dict[VertexId, int] = {}
    labels: Dict[Edge, int] = {}
    for i in range(1, p.copies + 1):
        u = VertexId(Role.U, i)
        v = VertexId(Role.V, i)
        part[u] = 1
        part[v] = 2
        labels[edge(u, v)] = mat.cell[(("uv", 0), i)]
        for j in range(1, m + 1):
            x = VertexId(Role.X, i, j)
            part[x] = 3
            labels[edge(u, x)] = mat.cell[(("ux", j), i)]
            labels[edge(v, x)] = mat.cell[(("vx", j), i)]
    return LabeledGraph(part=part, edges=set(labels), labels=labels)


def apply_crossing(g: LabeledGraph, params: FamilyParams) -> LabeledGraph:
    """Exchange the v-to-leaf edges between copies i and 2k+2-i.

    For i in [1,k] and each leaf j: drop v_i x_{i,j} and the mirror edge
    v_{2k+2-i} x_{2k+2-i,j}, then reattach each v to the opposite copy's
    leaf, keeping its own far label on the new edge at the same leaf.
    Leaf x_{i,j} becomes y_{i,j}; leaf x_{2k+2-i,j} becomes z_{i,j}.
    """
    if any(v.role in (Role.Y, Role.Z) for v in g.part):
        raise ConstructionError("crossing already applied")
    k = params.k
    m = params.leaves_per_copy
    rename: Dict[VertexId, VertexId] = {}
    for i in range(1, k + 1):
        for j in range(1, m + 1):
            rename[VertexId(Role.X, i, j)] = VertexId(Role.Y, i, j)
            rename[VertexId(Role.X, 2 * k + 2 - i, j)] = VertexId(Role.Z, i, j)

    labels: Dict[Edge, int] = {}
    for (a, b), lab in g.labels.items():
        labels[edge(rename.get(a, a), rename.get(b, b))] = lab
    part = {rename.get(v, v): c for v, c in g.part.items()}

    for i in range(1, k + 1):
        ii = 2 * k + 2 - i
        v_i = VertexId(Role.V, i)
        v_ii = VertexId(Role.V, ii)
        for j in range(1, m + 1):
            y = VertexId(Role.Y, i, j)  # was x_{i,j}
            z = VertexId(Role.Z, i, j)  # was x_{2k+2-i,j}
            lab_near = labels.pop(edge(v_i, y))
            lab_far = labels.pop(edge(v_ii, z))
            labels[edge(v_ii, y)] = lab_far
            labels[edge(v_i, z)] = lab_near
    return LabeledGraph(part=part, edges=set(labels), labels=labels)


def _merge_groups(params: FamilyParams) -> Dict[VertexId, VertexId]:
    """Old vertex -> merged vertex for every leaf, per column j."""
    r, s = params.factorization  # type: ignore[misc]
    k = params.k
    m = params.leaves_per_copy
    block = 2 * s + 1
    target: Dict[VertexId, VertexId] = {}
    for j in range(1, m + 1):
        for a in range(1, r + 1):
            lo = (a - 1) * block + 1
            my = VertexId(Role.MY, lo, j)
            mz = VertexId(Role.MZ, lo, j)
            for b in range(lo, lo + block):
                target[VertexId(Role.Y, b, j)] = my
                target[VertexId(Role.Z, b, j)] = mz
        # middle group: the block of original leaf columns straddling k+1
        mx = VertexId(Role.MX, k + 1, j)
        for i in range(r * block + 1, (r + 1) * block + 1):
            if i <= k:
                target[VertexId(Role.Y, i, j)] = mx
            elif i == k + 1:
                target[VertexId(Role.X, k + 1, j)] = mx
            else:
                target[VertexId(Role.Z, 2 * k + 2 - i, j)] = mx
    return target


def apply_merge(g: LabeledGraph, params: FamilyParams) -> LabeledGraph:
    """Identify each run of 2s+1 same-role leaves into a single vertex.

    Requires 2k+1 = (2r+1)(2s+1); edge labels are untouched, only leaf
    identities change.  The merged graph has r+1 components.
    """
    if params.factorization is None:
        raise ParamError("merge requires a factorization (r, s)")
    target = _merge_groups(params)
    part = {}
    for v, c in g.part.items():
        part[target.get(v, v)] = c
    labels: Dict[Edge, int] = {}
    for (a, b), lab in g.labels.items():
        e = edge(target.get(a, a), target.get(b, b))
        if e in labels:
            raise ConstructionError(f"merge would create parallel edge {e}")
        labels[e] = lab
    return LabeledGraph(part=part, edges=set(labels), labels=labels)


@dataclass(frozen=True)
class SwapMove:
    """Exchange two equal-sum edge pairs between two center vertices,
    keeping labels and far endpoints; all induced colors are preserved."""

    center_a: VertexId
    center_b: VertexId
    pair_a: Tuple[Edge, Edge]
    pair_b: Tuple[Edge, Edge]

    def far_endpoints(self, g: LabeledGraph) -> Tuple[List[VertexId], List[VertexId]]:
        fa = [e[0] if e[1] == self.center_a else e[1] for e in self.pair_a]
        fb = [e[0] if e[1] == self.center_b else e[1] for e in self.pair_b]
        return fa, fb

    def label_pairs(self, g: LabeledGraph) -> Tuple[Tuple[int, int], Tuple[int, int]]:
        la = tuple(sorted(g.labels[e] for e in self.pair_a))
        lb = tuple(sorted(g.labels[e] for e in self.pair_b))
        return la, lb  # type: ignore[return-value]


class SwapError(Exception):
    pass


def _validate_swap(g: LabeledGraph, move: SwapMove) -> None:
    if move.center_a == move.center_b:
        raise SwapError("centers must be distinct")
    for e in (*move.pair_a, *move.pair_b):
        if e not in g.edges:
            raise SwapError(f"edge {e} not in graph")
    if move.pair_a[0] == move.pair_a[1] or move.pair_b[0] == move.pair_b[1]:
        raise SwapError("each pair needs two distinct edges")
    if set(move.pair_a) & set(move.pair_b):
        raise SwapError("pairs share an edge")
    for e in move.pair_a:
        if move.center_a not in e:
            raise SwapError(f"edge {e} not incident to {move.center_a}")
    for e in move.pair_b:
        if move.center_b not in e:
            raise SwapError(f"edge {e} not incident to {move.center_b}")
    sum_a = sum(g.labels[e] for e in move.pair_a)
    sum_b = sum(g.labels[e] for e in move.pair_b)
    if sum_a != sum_b:
        raise SwapError(f"pair sums differ: {sum_a} != {sum_b}")
    fa, fb = move.far_endpoints(g)
    for w in fa:
        if g.part[w] == g.part[move.center_b]:
            raise SwapError(f"{w} shares a part with {move.center_b}")
    for w in fb:
        if g.part[w] == g.part[move.center_a]:
            raise SwapError(f"{w} shares a part with {move.center_a}")
    if fa[0] == fa[1] or fb[0] == fb[1]:
        raise SwapError("pair edges share a far endpoint")
    removed = {*move.pair_a, *move.pair_b}
    for w in fa:
        if w == move.center_b:
            raise SwapError("swap would create a loop")
        e = edge(w, move.center_b)
        if e in g.edges and e not in removed:
            raise SwapError(f"swap would duplicate edge {e}")
    for w in fb:
        if w == move.center_a:
            raise SwapError("swap would create a loop")
        e = edge(w, move.center_a)
        if e in g.edges and e not in removed:
            raise SwapError(f"swap would duplicate edge {e}")


def apply_swap(g: LabeledGraph, move: SwapMove) -> LabeledGraph:
    _validate_swap(g, move)
    labels = dict(g.labels)
    fa, fb = move.far_endpoints(g)
    lab_a = [labels.pop(e) for e in move.pair_a]
    lab_b = [labels.pop(e) for e in move.pair_b]
    for w, lab in zip(fa, lab_a):
        labels[edge(w, move.center_b)] = lab
    for w, lab in zip(fb, lab_b):
        labels[edge(w, move.center_a)] = lab
    return LabeledGraph(part=dict(g.part), edges=set(labels), labels=labels)


def swap_pair_buckets(
    g: LabeledGraph,
) -> Dict[VertexId, Dict[int, List[Tuple[Edge, Edge]]]]:
    """Per leaf-class vertex: incident edge pairs grouped by label sum,
    pairs ordered by their (smaller, larger) label pair."""
    inc = g.incident()
    buckets: Dict[VertexId, Dict[int, List[Tuple[Edge, Edge]]]] = {}
    for c in sorted(g.part):
        if g.part[c] != 3:
            continue
        edges_c = sorted(inc[c], key=lambda e: g.labels[e])
        by_sum: Dict[int, List[Tuple[Edge, Edge]]] = {}
        for ai in range(len(edges_c)):
            for bi in range(ai + 1, len(edges_c)):
                e1, e2 = edges_c[ai], edges_c[bi]
                by_sum.setdefault(g.labels[e1] + g.labels[e2], []).append((e1, e2))
        buckets[c] = by_sum
    return buckets


def iter_connecting_swaps(g: LabeledGraph) -> Iterator[SwapMove]:
    """Valid 2-swaps between leaf-class centers in different components,
    in lexicographic (center_a, center_b, labels) order.

    Any such swap splices its two components together, so every yielded
    move reduces the component count.  Centers are restricted to part-3
    vertices of equal degree (the only kind of center the construction
    ever re-homes).  For centers in different components of a tripartite
    graph no loop or parallel edge can arise (the far endpoints of one
    pair lie in the other center's component complement and in parts 1/2),
    so equal pair sums are the only surviving constraint.
    """
    g.check_tripartite()
    comp = components_of(g)
    buckets = swap_pair_buckets(g)
    centers = sorted(buckets)
    inc = g.incident()
    for ai, ca in enumerate(centers):
        for cb in centers[ai + 1 :]:
            if comp[ca] == comp[cb] or len(inc[ca]) != len(inc[cb]):
                continue
            shared = buckets[ca].keys() & buckets[cb].keys()
            combos = []
            for s in shared:
                for pa in buckets[ca][s]:
                    la = (g.labels[pa[0]], g.labels[pa[1]])
                    for pb in buckets[cb][s]:
                        lb = (g.labels[pb[0]], g.labels[pb[1]])
                        combos.append((la, lb, pa, pb))
            combos.sort()
            for _, _, pa, pb in combos:
                yield SwapMove(ca, cb, pa, pb)


def find_connecting_swaps(g: LabeledGraph) -> List[SwapMove]:
    """List form of iter_connecting_swaps; see there for the contract."""
    return list(iter_connecting_swaps(g))


def build_family(
    params: FamilyParams,
    stage: str = "crossed",
    swaps: Optional[List[SwapMove]] = None,
) -> LabeledGraph:
    """Convenience pipeline: matrix -> base -> crossed [-> merged] [-> swaps]."""
    if stage not in ("base", "crossed", "merged"):
        raise ParamError(f"unknown stage {stage!r}")
    g = build_base_graph(build_matrix(params))
    if stage != "base":
        g = apply_crossing(g, params)
    if stage == "merged":
        g = apply_merge(g, params)
    for idx, move in enumerate(swaps or []):
        try:
            g = apply_swap(g, move)
        except SwapError as exc:
            raise SwapError(f"swap #{idx}: {exc}") from exc
    return g
