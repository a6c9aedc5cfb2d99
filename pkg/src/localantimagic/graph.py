"""Graph data model, induced colors, and the local antimagic verifier."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from enum import IntEnum
from typing import Dict, Iterable, List, Optional, Set, Tuple


class Role(IntEnum):
    """Structural vertex roles. MY/MZ/MX are merged leaf groups."""

    U = 0
    V = 1
    X = 2
    Y = 3
    Z = 4
    MY = 5
    MZ = 6
    MX = 7


@dataclass(frozen=True, order=True)
class VertexId:
    role: Role
    copy_index: int
    leaf_index: int = 0

    def __post_init__(self):
        if self.copy_index < 1:
            raise ValueError(f"copy_index must be >= 1, got {self.copy_index}")
        if self.leaf_index < 0:
            raise ValueError(f"leaf_index must be >= 0, got {self.leaf_index}")
        if self.role in (Role.U, Role.V) and self.leaf_index != 0:
            raise ValueError("U/V vertices carry no leaf index")

    def __str__(self) -> str:
        return f"{self.role.name.lower()}:{self.copy_index}:{self.leaf_index}"

    @classmethod
    def parse(cls, s: str) -> "VertexId":
        try:
            role, copy_index, leaf_index = s.split(":")
            return cls(Role[role.upper()], int(copy_index), int(leaf_index))
        except (ValueError, KeyError) as exc:
            raise ValueError(f"bad vertex id {s!r}") from exc


Edge = Tuple[VertexId, VertexId]


def edge(a: VertexId, b: VertexId) -> Edge:
    """Normalized (smaller-first) edge; rejects loops."""
    if a == b:
        raise ValueError(f"loop at {a}")
    return (a, b) if a < b else (b, a)


class GraphError(Exception):
    pass


@dataclass
class LabeledGraph:
    """Simple undirected graph with a 3-part class per vertex and
    (optionally) a positive integer label per edge.

    Treated as immutable after construction; transforms return new graphs.
    """

    part: Dict[VertexId, int]
    edges: Set[Edge]
    labels: Dict[Edge, int] = field(default_factory=dict)

    def __post_init__(self):
        for a, b in self.edges:
            if a == b:
                raise GraphError(f"loop at {a}")
            if a not in self.part or b not in self.part:
                raise GraphError(f"edge ({a}, {b}) has endpoint outside vertex set")
            if not a < b:
                raise GraphError(f"edge ({a}, {b}) not normalized")
        for e in self.labels:
            if e not in self.edges:
                raise GraphError(f"label on non-edge {e}")
        for v, c in self.part.items():
            if c not in (1, 2, 3):
                raise GraphError(f"part class of {v} is {c}, expected 1..3")

    @property
    def q(self) -> int:
        return len(self.edges)

    def vertices(self) -> List[VertexId]:
        return sorted(self.part)

    def sorted_edges(self) -> List[Edge]:
        return sorted(self.edges)

    def adjacency(self) -> Dict[VertexId, List[VertexId]]:
        adj: Dict[VertexId, List[VertexId]] = {v: [] for v in self.part}
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        return adj

    def incident(self) -> Dict[VertexId, List[Edge]]:
        inc: Dict[VertexId, List[Edge]] = {v: [] for v in self.part}
        for e in self.edges:
            inc[e[0]].append(e)
            inc[e[1]].append(e)
        return inc

    def degree(self, v: VertexId) -> int:
        return sum(1 for e in self.edges if v in e)

    def check_tripartite(self) -> None:
        for a, b in self.edges:
            if self.part[a] == self.part[b]:
                raise GraphError(
                    f"edge ({a}, {b}) joins two part-{self.part[a]} vertices"
                )


@dataclass
class ColorReport:
    color_of: Dict[VertexId, int]
    distinct_colors: List[int]
    c_f: int
    is_local_antimagic: bool
    bijection_ok: bool
    bad_labels: List[int]
    conflict_edges: List[Edge]
    chi_lower: int
    chi_la_bracket: Tuple[int, Optional[int]]


def induced_colors(g: LabeledGraph) -> Dict[VertexId, int]:
    """Incident-label sum per vertex. Requires a fully labeled graph."""
    missing = sorted(e for e in g.edges if e not in g.labels)
    if missing:
        a, b = missing[0]
        raise GraphError(f"unlabeled edge ({a}, {b})")
    colors = {v: 0 for v in g.part}
    for (a, b), lab in g.labels.items():
        colors[a] += lab
        colors[b] += lab
    return colors


def _bijection_failures(g: LabeledGraph) -> List[int]:
    """Labels that are duplicated or outside [1, q]."""
    q = g.q
    seen: Dict[int, int] = {}
    bad: Set[int] = set()
    for lab in g.labels.values():
        if lab < 1 or lab > q:
            bad.add(lab)
        seen[lab] = seen.get(lab, 0) + 1
    for lab, cnt in seen.items():
        if cnt > 1:
            bad.add(lab)
    return sorted(bad)


def verify_local_antimagic(g: LabeledGraph) -> ColorReport:
    """Full check: edge labels form a bijection onto [1,q] and adjacent
    vertices get distinct incident-label sums."""
    colors = induced_colors(g)
    bad = _bijection_failures(g)
    bijection_ok = not bad and len(g.labels) == g.q
    conflicts = sorted(
        (a, b) for a, b in g.edges if colors[a] == colors[b]
    )
    distinct = sorted(set(colors.values()))
    ok = bijection_ok and not conflicts
    chi_lower = chromatic_lower_bound(g)
    bracket = (chi_lower, len(distinct) if ok else None)
    return ColorReport(
        color_of=colors,
        distinct_colors=distinct,
        c_f=len(distinct),
        is_local_antimagic=ok,
        bijection_ok=bijection_ok,
        bad_labels=bad,
        conflict_edges=conflicts,
        chi_lower=chi_lower,
        chi_la_bracket=bracket,
    )


def _is_bipartite(g: LabeledGraph) -> bool:
    adj = g.adjacency()
    side: Dict[VertexId, int] = {}
    for start in g.vertices():
        if start in side:
            continue
        side[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if w not in side:
                    side[w] = 1 - side[v]
                    queue.append(w)
                elif side[w] == side[v]:
                    return False
    return True


def chromatic_lower_bound(g: LabeledGraph) -> int:
    """Chromatic number within the {1,2,3} bracket: 1 if edgeless, 2 if
    bipartite with an edge, else 3 certified by the stored tripartition."""
    if not g.edges:
        return 1
    if _is_bipartite(g):
        return 2
    g.check_tripartite()
    return 3


def graph_stats(
    g: LabeledGraph,
) -> Tuple[int, List[int], Optional[int]]:
    """(component count, sorted degree sequence, regular degree or None)."""
    adj = g.adjacency()
    seen: Set[VertexId] = set()
    components = 0
    for start in g.vertices():
        if start in seen:
            continue
        components += 1
        queue = deque([start])
        seen.add(start)
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    degs = sorted(len(adj[v]) for v in g.part)
    regular = degs[0] if degs and degs[0] == degs[-1] else None
    return components, degs, regular


def components_of(g: LabeledGraph) -> Dict[VertexId, int]:
    """Component index per vertex, numbered by smallest contained vertex."""
    adj = g.adjacency()
    comp: Dict[VertexId, int] = {}
    idx = 0
    for start in g.vertices():
        if start in comp:
            continue
        comp[start] = idx
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if w not in comp:
                    comp[w] = idx
                    queue.append(w)
        idx += 1
    return comp
