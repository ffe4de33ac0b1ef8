# Finite lattice-embedded graphs with per-edge direction classes, plus the
# elementary graph algorithms everything else is built from.
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .lattice import Direction, HexCoord, Vertex, edge_direction, hexagon_edges, hexagon_vertices


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class ComponentShape:
    """Degree census of a connected component: a path, a cycle, or neither."""

    kind: str  # "path" | "cycle" | "other"
    size: int

    @classmethod
    def path(cls, n: int) -> "ComponentShape":
        return cls("path", n)

    @classmethod
    def cycle(cls, n: int) -> "ComponentShape":
        return cls("cycle", n)


Edge = tuple[int, int, Direction]


class MolGraph:
    """Simple undirected graph with integer lattice coordinates per vertex.

    Vertex ids are dense and assigned in lexicographic (y, x) order, so
    identical inputs always produce identical graphs. Immutable after
    construction.
    """

    __slots__ = ("coords", "adj", "edges", "_id_of", "_edge_ids")

    def __init__(self, coords: Sequence[Vertex], edges: Iterable[Edge]):
        self.coords: tuple[Vertex, ...] = tuple(coords)
        self._id_of: dict[Vertex, int] = {c: i for i, c in enumerate(self.coords)}
        if len(self._id_of) != len(self.coords):
            raise GraphError("duplicate vertex coordinates")
        es: list[Edge] = []
        edge_ids: set[tuple[int, int]] = set()
        adj: list[list[int]] = [[] for _ in self.coords]
        for u, v, d in edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < len(self.coords) and 0 <= v < len(self.coords)):
                raise GraphError(f"edge ({u},{v}) references unknown vertex")
            a, b = (u, v) if u < v else (v, u)
            if (a, b) in edge_ids:
                raise GraphError(f"parallel edge ({a},{b})")
            edge_ids.add((a, b))
            es.append((a, b, Direction(d)))
        es.sort(key=lambda e: (e[0], e[1]))
        for a, b, _ in es:
            adj[a].append(b)
            adj[b].append(a)
        self.edges: tuple[Edge, ...] = tuple(es)
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(ns)) for ns in adj)
        self._edge_ids = edge_ids

    @property
    def n(self) -> int:
        return len(self.coords)

    @property
    def m(self) -> int:
        return len(self.edges)

    def id_of(self, coord: Vertex) -> int:
        return self._id_of[coord]

    def has_vertex(self, coord: Vertex) -> bool:
        return coord in self._id_of

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self._edge_ids

    def degree(self, u: int) -> int:
        return len(self.adj[u])

    def bfs_distances_capped(self, src: int, cap: int) -> dict[int, int]:
        """Exact distances from src for every vertex within distance cap."""
        if not 0 <= src < self.n:
            raise GraphError(f"invalid vertex id {src}")
        if cap < 0:
            raise GraphError("cap must be non-negative")
        dist = {src: 0}
        frontier = deque([src])
        while frontier:
            u = frontier.popleft()
            du = dist[u]
            if du == cap:
                continue
            for w in self.adj[u]:
                if w not in dist:
                    dist[w] = du + 1
                    frontier.append(w)
        return dist

    def delete_direction(self, d: Direction) -> "MolGraph":
        """Same vertex set (ids preserved), edges of class d removed."""
        return MolGraph(self.coords, [e for e in self.edges if e[2] is not d])

    def connected_components(self) -> list[list[int]]:
        """Components as sorted id lists, ordered by smallest contained id."""
        seen = [False] * self.n
        comps: list[list[int]] = []
        for s in range(self.n):
            if seen[s]:
                continue
            comp = [s]
            seen[s] = True
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w in self.adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        queue.append(w)
            comp.sort()
            comps.append(comp)
        return comps

    def to_json_obj(self) -> dict:
        return {
            "vertices": [{"id": i, "x": x, "y": y} for i, (x, y) in enumerate(self.coords)],
            "edges": [[u, v, d.value] for u, v, d in self.edges],
        }

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> "MolGraph":
        try:
            verts = obj["vertices"]
            raw_edges = obj["edges"]
        except (KeyError, TypeError):
            raise GraphError("graph JSON must have 'vertices' and 'edges'") from None
        coords: list[Vertex | None] = [None] * len(verts)
        for rec in verts:
            i = rec["id"]
            if not (0 <= i < len(verts)) or coords[i] is not None:
                raise GraphError(f"vertex ids must be dense, got {i}")
            coords[i] = (int(rec["x"]), int(rec["y"]))
        edges = [(int(u), int(v), Direction(d)) for u, v, d in raw_edges]
        return cls([c for c in coords if c is not None], edges)


def build_graph(hexes: Iterable[HexCoord]) -> MolGraph:
    """Graph of the union of the given hexagons.

    Vertices are deduplicated by coordinate; an edge is present iff both of
    its endpoints lie on a common member hexagon.
    """
    hexes = set(hexes)
    if not hexes:
        raise GraphError("hexes must be nonempty")
    vertices: set[Vertex] = set()
    coord_edges: set[tuple[Vertex, Vertex]] = set()
    for h in hexes:
        vertices.update(hexagon_vertices(h))
        for u, v in hexagon_edges(h):
            coord_edges.add((u, v) if u < v else (v, u))
    coords = sorted(vertices, key=lambda p: (p[1], p[0]))
    id_of = {c: i for i, c in enumerate(coords)}
    edges = [(id_of[u], id_of[v], edge_direction(u, v)) for u, v in coord_edges]
    return MolGraph(coords, edges)


def girth(g: MolGraph) -> int:
    """Length of a shortest cycle; g.n + 1 if the graph is acyclic."""
    best = g.n + 1
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] >= best:
                continue
            for w in g.adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w and parent[w] != u:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def component_shape(g: MolGraph, comp: Iterable[int]) -> ComponentShape:
    """Classify a connected component of g as Path(n), Cycle(n) or other."""
    ids = sorted(set(comp))
    if not ids:
        raise GraphError("empty component")
    idset = set(ids)
    # verify comp really is connected and closed under adjacency
    reached = {ids[0]}
    queue = deque([ids[0]])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if w not in idset:
                raise GraphError(f"vertex {w} adjacent to component but not in it")
            if w not in reached:
                reached.add(w)
                queue.append(w)
    if reached != idset:
        raise GraphError("component is not connected")

    n = len(ids)
    degs = [g.degree(u) for u in ids]
    m = sum(degs) // 2
    if any(d > 2 for d in degs):
        return ComponentShape("other", n)
    if n >= 3 and m == n and all(d == 2 for d in degs):
        return ComponentShape.cycle(n)
    if m == n - 1 and (n == 1 or sum(1 for d in degs if d == 1) == 2):
        return ComponentShape.path(n)
    return ComponentShape("other", n)
