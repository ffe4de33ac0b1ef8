# Zig-zag and armchair open-ended nanotube graphs, built in the universal
# cover of the brick-wall lattice and then identified under the wrap
# translation, so direction classes stay consistent with the planar case.
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .benzenoid import ExternalHexTally, _classify_candidates
from .graph import MolGraph
from .lattice import Direction, HexCoord, Vertex, edge_direction, hex_neighbors, hexagon_edges


class TubuleneError(ValueError):
    pass


class ParamOutOfRange(TubuleneError):
    pass


@dataclass(frozen=True)
class Tubulene:
    kind: str  # "zigzag" | "armchair"
    r: int
    h: int
    graph: MolGraph
    wrap: tuple[int, int]  # identifying translation, brick coordinates
    hexes: frozenset[HexCoord]  # canonical representatives of member hexagons
    _vcanon: Callable[[Vertex], Vertex]
    _hcanon: Callable[[HexCoord], HexCoord]

    @property
    def hexagon_count(self) -> int:
        return len(self.hexes)


def _quotient_graph(
    cover_hexes: list[HexCoord], vcanon: Callable[[Vertex], Vertex]
) -> MolGraph:
    vertices: set[Vertex] = set()
    edges: dict[tuple[Vertex, Vertex], Direction] = {}
    for hx in cover_hexes:
        for u, v in hexagon_edges(hx):
            d = edge_direction(u, v)  # direction from cover coords
            cu, cv = vcanon(u), vcanon(v)
            vertices.update((cu, cv))
            key = (cu, cv) if cu < cv else (cv, cu)
            prev = edges.setdefault(key, d)
            if prev is not d:
                raise TubuleneError(f"inconsistent direction for quotient edge {key}")
    coords = sorted(vertices, key=lambda p: (p[1], p[0]))
    id_of = {c: i for i, c in enumerate(coords)}
    return MolGraph(coords, [(id_of[u], id_of[v], d) for (u, v), d in edges.items()])


def _make_tubulene(
    kind: str,
    r: int,
    h: int,
    cover_hexes: list[HexCoord],
    wrap: tuple[int, int],
    vcanon: Callable[[Vertex], Vertex],
    hcanon: Callable[[HexCoord], HexCoord],
) -> Tubulene:
    canon_hexes = frozenset(hcanon(hx) for hx in cover_hexes)
    if len(canon_hexes) != len(cover_hexes):
        raise TubuleneError("fundamental domain double-covers a hexagon")
    return Tubulene(kind, r, h, _quotient_graph(cover_hexes, vcanon), wrap, canon_hexes, vcanon, hcanon)


def build_zigzag(r: int, h: int) -> Tubulene:
    """Zig-zag tube with r layers of h hexagons; wrap translation (2h, 0)."""
    if r < 1 or h < 3:
        raise ParamOutOfRange(f"zigzag requires r >= 1 and h >= 3, got r={r}, h={h}")
    period = 2 * h

    def vcanon(v: Vertex) -> Vertex:
        return (v[0] % period, v[1])

    def hcanon(hx: HexCoord) -> HexCoord:
        return HexCoord(hx.q % h, hx.r)

    cover = [HexCoord(q, row) for row in range(r) for q in range(h)]
    return _make_tubulene("zigzag", r, h, cover, (period, 0), vcanon, hcanon)


def build_armchair(r: int, h: int) -> Tubulene:
    """Armchair tube with r columns of h hexagons; wrap (3r/2, r/2)."""
    if r < 4 or r % 2 != 0 or h < 1:
        raise ParamOutOfRange(f"armchair requires even r >= 4 and h >= 1, got r={r}, h={h}")
    wx, wy = 3 * r // 2, r // 2

    def vcanon(v: Vertex) -> Vertex:
        k = v[1] // wy
        return (v[0] - k * wx, v[1] - k * wy)

    def hcanon(hx: HexCoord) -> HexCoord:
        k = hx.r // wy
        return HexCoord(hx.q - k * wy, hx.r - k * wy)

    # column c starts at hexagon ((c+1)//2, c//2) and climbs along (-1, +1)
    cover = [
        HexCoord((c + 1) // 2 - j, c // 2 + j) for c in range(r) for j in range(h)
    ]
    return _make_tubulene("armchair", r, h, cover, (wx, wy), vcanon, hcanon)


def classify_external_hexagons_tub(t: Tubulene) -> ExternalHexTally:
    """Tally external hexagons at the two open ends, by the largest
    component of their intersection with the tube (P4/P5/P6)."""
    candidates = sorted(
        {t._hcanon(nb) for hx in t.hexes for nb in hex_neighbors(hx)} - set(t.hexes)
    )
    return _classify_candidates(t.graph, candidates, canon=t._vcanon)


def tubulene_stats(t: Tubulene) -> dict:
    return {
        "kind": t.kind,
        "r": t.r,
        "h": t.h,
        "n": t.graph.n,
        "hexagons": t.hexagon_count,
        "external": classify_external_hexagons_tub(t).as_list(),
    }
