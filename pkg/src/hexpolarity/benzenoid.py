# Benzenoid systems: validation, boundary cycle, elementary-cut counts,
# external-hexagon classification, and a seeded random generator.
from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .graph import MolGraph, build_graph
from .lattice import Direction, HexCoord, Vertex, hex_neighbors, hexagon_edges, hexagon_vertices


class BenzenoidError(ValueError):
    pass


class DisconnectedHexes(BenzenoidError):
    pass


class HasHoles(BenzenoidError):
    pass


@dataclass(frozen=True)
class CutStats:
    """Elementary-cut counts per direction: alpha[i] cuts made of Di edges."""

    alpha: tuple[int, int, int]

    @property
    def total(self) -> int:
        return sum(self.alpha)


@dataclass(frozen=True)
class ExternalHexTally:
    """Counts of external hexagons whose largest intersection with the
    system is a P4 (h1), P5 (h2) or P6 (h3)."""

    h1: int
    h2: int
    h3: int

    def as_list(self) -> list[int]:
        return [self.h1, self.h2, self.h3]


@dataclass(frozen=True)
class BenzenoidSystem:
    hexes: frozenset[HexCoord]
    graph: MolGraph
    boundary: tuple[int, ...]  # cyclic vertex-id list of the outer face

    @property
    def hexagon_count(self) -> int:
        return len(self.hexes)


def _hexes_connected(hexes: set[HexCoord]) -> bool:
    start = next(iter(hexes))
    seen = {start}
    queue = deque([start])
    while queue:
        h = queue.popleft()
        for nb in hex_neighbors(h):
            if nb in hexes and nb not in seen:
                seen.add(nb)
                queue.append(nb)
    return len(seen) == len(hexes)


def has_hole(hexes: set[HexCoord]) -> bool:
    """True iff some non-member hexagon is enclosed by members.

    Flood-fills the non-member cells of the bounding box inflated by 1,
    starting from the box border; anything unreachable is a hole.
    """
    qmin = min(h.q for h in hexes) - 1
    qmax = max(h.q for h in hexes) + 1
    rmin = min(h.r for h in hexes) - 1
    rmax = max(h.r for h in hexes) + 1
    outside: set[HexCoord] = set()
    queue: deque[HexCoord] = deque()
    for q in range(qmin, qmax + 1):
        for r in range(rmin, rmax + 1):
            if q in (qmin, qmax) or r in (rmin, rmax):
                c = HexCoord(q, r)
                if c not in hexes:
                    outside.add(c)
                    queue.append(c)
    while queue:
        h = queue.popleft()
        for nb in hex_neighbors(h):
            if (
                qmin <= nb.q <= qmax
                and rmin <= nb.r <= rmax
                and nb not in hexes
                and nb not in outside
            ):
                outside.add(nb)
                queue.append(nb)
    n_empty = (qmax - qmin + 1) * (rmax - rmin + 1) - len(hexes)
    return len(outside) != n_empty


def _boundary_edge_coords(hexes: set[HexCoord]) -> set[tuple[Vertex, Vertex]]:
    # boundary edges lie on exactly one member hexagon
    count: dict[tuple[Vertex, Vertex], int] = {}
    for h in hexes:
        for u, v in hexagon_edges(h):
            key = (u, v) if u < v else (v, u)
            count[key] = count.get(key, 0) + 1
    return {e for e, c in count.items() if c == 1}


def _walk_boundary(g: MolGraph, boundary_edges: set[tuple[Vertex, Vertex]]) -> tuple[int, ...]:
    nbrs: dict[int, list[int]] = {}
    for u, v in boundary_edges:
        a, b = g.id_of(u), g.id_of(v)
        nbrs.setdefault(a, []).append(b)
        nbrs.setdefault(b, []).append(a)
    if any(len(ns) != 2 for ns in nbrs.values()):
        raise HasHoles("boundary edges do not form a single cycle")
    start = min(nbrs)
    cycle = [start, min(nbrs[start])]
    while True:
        prev, cur = cycle[-2], cycle[-1]
        nxt = nbrs[cur][0] if nbrs[cur][0] != prev else nbrs[cur][1]
        if nxt == start:
            break
        cycle.append(nxt)
    if len(cycle) != len(boundary_edges):
        raise HasHoles("boundary is not a single cycle")
    return tuple(cycle)


def build_benzenoid(hexes: Iterable[HexCoord]) -> BenzenoidSystem:
    """Validate a hexagon set and assemble the benzenoid system.

    Raises DisconnectedHexes or HasHoles when the set is not a single
    simply connected patch.
    """
    hexset = set(hexes)
    if not hexset:
        raise BenzenoidError("hexes must be nonempty")
    if not _hexes_connected(hexset):
        raise DisconnectedHexes("hexagons are not connected")
    if has_hole(hexset):
        raise HasHoles("hexagon set encloses a hole")
    g = build_graph(hexset)
    boundary = _walk_boundary(g, _boundary_edge_coords(hexset))
    return BenzenoidSystem(frozenset(hexset), g, boundary)


def boundary_cycle(b: BenzenoidSystem) -> tuple[int, ...]:
    return b.boundary


def internal_vertex_count(b: BenzenoidSystem) -> int:
    """Number of vertices lying on exactly three member hexagons."""
    counts: dict[Vertex, int] = {}
    for h in b.hexes:
        for v in hexagon_vertices(h):
            counts[v] = counts.get(v, 0) + 1
    return sum(1 for c in counts.values() if c == 3)


def cut_stats(b: BenzenoidSystem) -> CutStats:
    """alpha_i = components of G - Di, minus one."""
    alpha = tuple(
        len(b.graph.delete_direction(d).connected_components()) - 1 for d in Direction
    )
    return CutStats(alpha)  # type: ignore[arg-type]


def largest_hex_component(vertex_in: list[bool], edge_in: list[bool]) -> tuple[int, int]:
    """Largest component of a partially-present 6-cycle.

    vertex_in[i] marks vertex i of the hexagon as present; edge_in[i] marks
    the edge between vertices i and i+1 (mod 6). Returns (vertices, edges)
    of a component with the most vertices.
    """
    best = (0, 0)
    seen = [False] * 6
    for s in range(6):
        if seen[s] or not vertex_in[s]:
            continue
        comp = {s}
        seen[s] = True
        stack = [s]
        edges = 0
        while stack:
            i = stack.pop()
            for j, e in ((i + 1) % 6, i), ((i - 1) % 6, (i - 1) % 6):
                if edge_in[e] and vertex_in[j]:
                    if j not in comp:
                        comp.add(j)
                        seen[j] = True
                        stack.append(j)
            edges += sum(1 for e in (i, (i - 1) % 6) if edge_in[e])
        edges //= 2
        if len(comp) > best[0]:
            best = (len(comp), edges)
    return best


def _classify_candidates(
    g: MolGraph,
    candidates: Iterable[HexCoord],
    canon: "callable[[Vertex], Vertex] | None" = None,
) -> ExternalHexTally:
    tally = [0, 0, 0]
    for h in candidates:
        vs = hexagon_vertices(h)
        if canon is not None:
            vs = [canon(v) for v in vs]
        vertex_in = [g.has_vertex(v) for v in vs]
        ids = [g.id_of(v) if present else -1 for v, present in zip(vs, vertex_in)]
        edge_in = [
            vertex_in[i] and vertex_in[(i + 1) % 6] and g.has_edge(ids[i], ids[(i + 1) % 6])
            for i in range(6)
        ]
        if not any(edge_in):
            continue  # shares vertices only, not an external hexagon
        size, edges = largest_hex_component(vertex_in, edge_in)
        if size == 6 and edges == 6:
            raise BenzenoidError(f"external hexagon {h} intersects the system in a full cycle")
        if size >= 4:
            tally[size - 4] += 1
    return ExternalHexTally(*tally)


def classify_external_hexagons(b: BenzenoidSystem) -> ExternalHexTally:
    """Tally external hexagons by the largest component of their
    intersection with the system: P4 -> h1, P5 -> h2, P6 -> h3."""
    candidates = sorted(
        {nb for h in b.hexes for nb in hex_neighbors(h)} - set(b.hexes)
    )
    return _classify_candidates(b.graph, candidates)


def random_benzenoid(h: int, seed: int) -> BenzenoidSystem:
    """Seeded random benzenoid with h hexagons.

    Grows from a single hexagon by uniform draws over boundary-adjacent
    candidates, rejecting any draw that would enclose a hole.
    """
    if h < 1:
        raise BenzenoidError("h must be >= 1")
    rng = random.Random(seed)
    hexes: set[HexCoord] = {HexCoord(0, 0)}
    while len(hexes) < h:
        candidates = sorted({nb for m in hexes for nb in hex_neighbors(m)} - hexes)
        c = rng.choice(candidates)
        if has_hole(hexes | {c}):
            continue
        hexes.add(c)
    return build_benzenoid(hexes)


def benzenoid_stats(b: BenzenoidSystem) -> dict:
    return {
        "h": b.hexagon_count,
        "n": b.graph.n,
        "m": b.graph.m,
        "boundary": len(b.boundary),
        "internal": internal_vertex_count(b),
        "alpha": list(cut_stats(b).alpha),
        "external": classify_external_hexagons(b).as_list(),
    }
