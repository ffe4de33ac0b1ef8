# Brick-wall integer embedding of the hexagonal lattice.
#
# A hexagon with axial coordinates (q, r) is anchored at brick vertex
# (2q + r, r) and occupies the six vertices of the 2x1 brick above it.
# Vertical edges exist only where x + y is even, so edge existence,
# deduplication and direction classification are pure parity rules.
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable

Vertex = tuple[int, int]  # brick-wall (x, y)


class LatticeError(ValueError):
    pass


class HexFileError(LatticeError):
    pass


@dataclass(frozen=True, order=True)
class HexCoord:
    """Axial coordinates of a hexagon on the infinite lattice."""

    q: int
    r: int


# The six axial neighbour offsets; each neighbour shares exactly one edge.
_HEX_DIRS = ((1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1))


def hex_neighbors(h: HexCoord) -> list[HexCoord]:
    return [HexCoord(h.q + dq, h.r + dr) for dq, dr in _HEX_DIRS]


class Direction(str, Enum):
    """The three edge directions of the hexagonal lattice.

    D1 is vertical in the brick frame; D2/D3 are the horizontal edges
    split by the parity of their left endpoint.
    """

    D1 = "D1"
    D2 = "D2"
    D3 = "D3"


def hexagon_anchor(h: HexCoord) -> Vertex:
    return (2 * h.q + h.r, h.r)


def hexagon_vertices(h: HexCoord) -> list[Vertex]:
    """The 6 vertices of hexagon h, in cyclic order around the face."""
    ax, ay = hexagon_anchor(h)
    return [
        (ax, ay),
        (ax + 1, ay),
        (ax + 2, ay),
        (ax + 2, ay + 1),
        (ax + 1, ay + 1),
        (ax, ay + 1),
    ]


def hexagon_edges(h: HexCoord) -> list[tuple[Vertex, Vertex]]:
    """The 6 boundary edges of hexagon h, in cyclic order."""
    vs = hexagon_vertices(h)
    return [(vs[i], vs[(i + 1) % 6]) for i in range(6)]


def is_lattice_edge(u: Vertex, v: Vertex) -> bool:
    (ux, uy), (vx, vy) = u, v
    if uy == vy and abs(ux - vx) == 1:
        return True
    if ux == vx and abs(uy - vy) == 1:
        # vertical edges exist only below an even-parity bottom endpoint
        return (ux + min(uy, vy)) % 2 == 0
    return False


def edge_direction(u: Vertex, v: Vertex) -> Direction:
    """Direction class of the lattice edge uv.

    Raises LatticeError if u and v are not adjacent lattice vertices.
    """
    if not is_lattice_edge(u, v):
        raise LatticeError(f"not a lattice edge: {u}-{v}")
    if u[0] == v[0]:
        return Direction.D1
    left = min(u, v)
    return Direction.D2 if (left[0] + left[1]) % 2 == 0 else Direction.D3


def parse_hex_file(text: str) -> list[HexCoord]:
    """Parse the hexagon-set text format: one "q r" pair per line.

    '#' starts a comment; blank lines are skipped; duplicates are rejected.
    """
    seen: set[HexCoord] = set()
    out: list[HexCoord] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise HexFileError(f"line {lineno}: expected 'q r', got {raw!r}")
        try:
            h = HexCoord(int(parts[0]), int(parts[1]))
        except ValueError:
            raise HexFileError(f"line {lineno}: non-integer coordinate in {raw!r}") from None
        if h in seen:
            raise HexFileError(f"line {lineno}: duplicate hexagon {h.q} {h.r}")
        seen.add(h)
        out.append(h)
    return out


def format_hex_file(hexes: Iterable[HexCoord]) -> str:
    return "".join(f"{h.q} {h.r}\n" for h in sorted(hexes))
