"""Edge-weighted graphs, their edge ideals, and the forbidden-pattern scan.

A graph on vertices 1..n with positive integer edge weights w yields the
monomial ideal generated by (x_u x_v)^w(e) over its edges e = {u, v}.
The ideal fails to be integrally closed exactly when the graph contains
one of three induced patterns built from heavy edges (weight >= 2): a
heavy path on three vertices, a heavy pair of disjoint edges with no
connection, or a fully heavy triangle.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import GraphFormatError
from .ideals import ExponentVector, MonomialIdeal

HEAVY = 2  # least non-trivial weight


class PatternKind(enum.Enum):
    """The three forbidden induced patterns, in scan priority order."""

    HEAVY_P3 = "heavy_p3"
    HEAVY_2K2 = "heavy_2k2"
    HEAVY_TRIANGLE = "heavy_triangle"


_KIND_ORDER = {
    PatternKind.HEAVY_P3: 0,
    PatternKind.HEAVY_2K2: 1,
    PatternKind.HEAVY_TRIANGLE: 2,
}


@dataclass(frozen=True)
class PatternWitness:
    """A concrete occurrence of a forbidden pattern.

    Vertex tuples are canonical: (a, b, c) with a < c for the path
    (b is the middle), (a, b, c, d) with a < b, c < d, a < c for the
    disjoint pair, and sorted for the triangle.  Weights follow the edge
    order implied by the vertex tuple.
    """

    kind: PatternKind
    vertices: tuple[int, ...]
    weights: tuple[int, ...]


@dataclass(frozen=True)
class WeightedGraph:
    """Simple graph on vertices 1..n with positive integer edge weights."""

    n: int
    edges: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be >= 0")
        seen = set()
        for u, v, w in self.edges:
            if not (1 <= u < v <= self.n):
                raise ValueError(f"edge ({u},{v}) out of range for n={self.n}")
            if (u, v) in seen:
                raise ValueError(f"duplicate edge ({u},{v})")
            if not isinstance(w, int) or w < 1:
                raise ValueError(f"edge ({u},{v}) has invalid weight {w!r}")
            seen.add((u, v))
        object.__setattr__(self, "edges", tuple(sorted(self.edges)))

    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset((u, v) for u, v, _ in self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self.edge_set()

    def weight(self, u: int, v: int) -> int:
        if u > v:
            u, v = v, u
        for a, b, w in self.edges:
            if (a, b) == (u, v):
                return w
        raise KeyError(f"no edge ({u},{v})")

    def heavy_edges(self) -> tuple[tuple[int, int, int], ...]:
        return tuple(e for e in self.edges if e[2] >= HEAVY)


def path_graph(weights: Sequence[int]) -> WeightedGraph:
    """Path 1-2-...-(len(weights)+1) with the given edge weights."""
    n = len(weights) + 1
    return WeightedGraph(n, tuple((i, i + 1, w) for i, w in enumerate(weights, 1)))


def cycle_graph(weights: Sequence[int]) -> WeightedGraph:
    """Cycle 1-2-...-n-1; weights[i] is the weight of edge {i+1, i+2}."""
    n = len(weights)
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    edges = [(i, i + 1, weights[i - 1]) for i in range(1, n)]
    edges.append((1, n, weights[-1]))
    return WeightedGraph(n, tuple(edges))


def star_graph(weights: Sequence[int]) -> WeightedGraph:
    """Star with center n = len(weights)+1; weights[i] on edge {i+1, n}."""
    n = len(weights) + 1
    return WeightedGraph(n, tuple((i, n, w) for i, w in enumerate(weights, 1)))


def edge_ideal(g: WeightedGraph) -> MonomialIdeal:
    """The ideal generated by (x_u x_v)^w over the edges of g.

    Distinct edges give incomparable exponent vectors, so the edge
    vectors are already the minimal generators.
    """
    gens = []
    for u, v, w in g.edges:
        vec = [0] * g.n
        vec[u - 1] = w
        vec[v - 1] = w
        gens.append(tuple(vec))
    return MonomialIdeal(g.n, gens)


def induced_subgraph(
    g: WeightedGraph, vertices: Iterable[int]
) -> tuple[WeightedGraph, tuple[int, ...]]:
    """Induced subgraph on the given vertices, relabeled 1..|A|.

    Returns the subgraph together with the label map: entry i-1 is the
    original vertex that became vertex i.
    """
    order = tuple(sorted(set(vertices)))
    for v in order:
        if not 1 <= v <= g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")
    relabel = {old: new for new, old in enumerate(order, 1)}
    edges = tuple(
        (relabel[u], relabel[v], w)
        for u, v, w in g.edges
        if u in relabel and v in relabel
    )
    return WeightedGraph(len(order), edges), order


def forbidden_pattern_scan(
    g: WeightedGraph, kinds: Iterable[PatternKind] | None = None
) -> PatternWitness | None:
    """Find a forbidden induced pattern, or None when the graph is clean.

    Every pattern contains two heavy edges, so the scan inspects pairs
    of heavy edges plus local adjacency.  Among all occurrences it
    returns the smallest kind (path < disjoint pair < triangle), then
    the lexicographically smallest vertex tuple.  `kinds` restricts the
    scan; it exists as a fault-injection hook for the harness.
    """
    active = set(PatternKind) if kinds is None else set(kinds)
    heavy = g.heavy_edges()
    weight_of = {(u, v): w for u, v, w in g.edges}

    def lookup(u: int, v: int) -> int | None:
        return weight_of.get((u, v) if u < v else (v, u))

    candidates: set[PatternWitness] = set()
    for i, (a, b, w1) in enumerate(heavy):
        for c, d, w2 in heavy[i + 1:]:
            shared = {a, b} & {c, d}
            if len(shared) == 1:
                mid = shared.pop()
                p, q = sorted(({a, b} | {c, d}) - {mid})
                third = lookup(p, q)
                if third is None:
                    if PatternKind.HEAVY_P3 in active:
                        candidates.add(
                            PatternWitness(
                                PatternKind.HEAVY_P3,
                                (p, mid, q),
                                (lookup(p, mid), lookup(mid, q)),
                            )
                        )
                elif third >= HEAVY and PatternKind.HEAVY_TRIANGLE in active:
                    x, y, z = sorted((p, mid, q))
                    candidates.add(
                        PatternWitness(
                            PatternKind.HEAVY_TRIANGLE,
                            (x, y, z),
                            (lookup(x, y), lookup(y, z), lookup(x, z)),
                        )
                    )
            elif not shared and PatternKind.HEAVY_2K2 in active:
                cross = [(a, c), (a, d), (b, c), (b, d)]
                if all(lookup(u, v) is None for u, v in cross):
                    first, second = sorted([(a, b, w1), (c, d, w2)])
                    candidates.add(
                        PatternWitness(
                            PatternKind.HEAVY_2K2,
                            (first[0], first[1], second[0], second[1]),
                            (first[2], second[2]),
                        )
                    )
    if not candidates:
        return None
    return min(candidates, key=lambda c: (_KIND_ORDER[c.kind], c.vertices))


def pattern_witness(
    kind: PatternKind, weights: Sequence[int]
) -> tuple[WeightedGraph, ExponentVector]:
    """The standard non-membership witness monomial for a heavy pattern.

    Builds the pattern graph with the given heavy weights and returns it
    with the exponent vector of a monomial outside the edge ideal whose
    square lies in the ideal's square.  All weights must be >= 2.
    """
    ws = tuple(weights)
    expected = {PatternKind.HEAVY_P3: 2, PatternKind.HEAVY_2K2: 2, PatternKind.HEAVY_TRIANGLE: 3}[kind]
    if len(ws) != expected:
        raise ValueError(f"{kind.value} needs {expected} weights, got {len(ws)}")
    if any(w < HEAVY for w in ws):
        raise ValueError(f"witness formulas require all weights >= {HEAVY}, got {ws}")
    if kind is PatternKind.HEAVY_P3:
        w1, w2 = ws
        graph = path_graph((w1, w2))
        return graph, (w1 - 1, w1 + w2, w2 - 1)
    if kind is PatternKind.HEAVY_2K2:
        w1, w3 = ws
        graph = WeightedGraph(4, ((1, 2, w1), (3, 4, w3)))
        return graph, (w1 - 1, w1 - 1, w3 - 1, w3 - 1)
    w1, w2, w3 = ws
    graph = cycle_graph((w1, w2, w3))
    if w1 > w2 - 1:
        return graph, (w3 - 1, w2 - 1, w2 + w3)
    return graph, (w1 + w3, w1 - 1, w3 - 1)


def graph_to_jsonable(g: WeightedGraph) -> dict:
    return {
        "n": g.n,
        "edges": [{"u": u, "v": v, "w": w} for u, v, w in g.edges],
    }


def graph_from_jsonable(data: object) -> WeightedGraph:
    """Parse the graph JSON shape, rejecting malformed input with position info."""
    if not isinstance(data, dict):
        raise GraphFormatError("graph must be a JSON object")
    if "n" not in data:
        raise GraphFormatError("missing field 'n'")
    n = data["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise GraphFormatError(f"'n' must be a non-negative integer, got {n!r}")
    raw_edges = data.get("edges", [])
    if not isinstance(raw_edges, list):
        raise GraphFormatError("'edges' must be a list")
    seen: dict[tuple[int, int], int] = {}
    edges = []
    for idx, item in enumerate(raw_edges):
        where = f"edges[{idx}]"
        if not isinstance(item, dict):
            raise GraphFormatError(f"{where}: must be an object")
        for field in ("u", "v", "w"):
            if field not in item:
                raise GraphFormatError(f"{where}: missing field '{field}'")
            if not isinstance(item[field], int) or isinstance(item[field], bool):
                raise GraphFormatError(f"{where}: field '{field}' must be an integer")
        u, v, w = item["u"], item["v"], item["w"]
        if u == v:
            raise GraphFormatError(f"{where}: loop ({u},{v}) not allowed")
        if u > v:
            raise GraphFormatError(
                f"{where}: reversed edge ({u},{v}); vertices must satisfy u < v"
            )
        if not (1 <= u and v <= n):
            raise GraphFormatError(f"{where}: edge ({u},{v}) out of range for n={n}")
        if w < 1:
            raise GraphFormatError(f"{where}: weight must be >= 1, got {w}")
        if (u, v) in seen:
            raise GraphFormatError(
                f"{where}: duplicate of edges[{seen[(u, v)]}] for pair ({u},{v})"
            )
        seen[(u, v)] = idx
        edges.append((u, v, w))
    return WeightedGraph(n, tuple(edges))
