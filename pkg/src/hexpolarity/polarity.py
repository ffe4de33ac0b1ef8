# Wiener polarity index by three independent routes: brute-force distance
# counting, decomposition over the three edge directions, and closed
# formulas for the supported structure families.
from __future__ import annotations

from dataclasses import dataclass

from .benzenoid import ExternalHexTally
from .graph import ComponentShape, MolGraph, component_shape
from .lattice import Direction


class PolarityError(ValueError):
    pass


class MalformedComponent(PolarityError):
    """A direction-deleted component is neither a path nor a cycle."""


class FormulaUnavailable(PolarityError):
    """No closed formula applies to the given input."""


def wp_bruteforce(g: MolGraph) -> int:
    """Number of unordered vertex pairs at distance exactly three."""
    ordered = 0
    for src in range(g.n):
        dist = g.bfs_distances_capped(src, 3)
        ordered += sum(1 for d in dist.values() if d == 3)
    assert ordered % 2 == 0
    return ordered // 2


def distance_distribution(g: MolGraph, cap: int) -> list[int]:
    """Unordered pair counts per distance 1..cap (Hosoya coefficients)."""
    if cap < 1:
        raise PolarityError("cap must be >= 1")
    ordered = [0] * cap
    for src in range(g.n):
        for d in g.bfs_distances_capped(src, cap).values():
            if d >= 1:
                ordered[d - 1] += 1
    assert all(c % 2 == 0 for c in ordered)
    return [c // 2 for c in ordered]


def wp_path_formula(n: int) -> int:
    """Wiener polarity index of the path on n vertices."""
    if n < 1:
        raise PolarityError("path needs n >= 1")
    return 0 if n <= 2 else n - 3


def wp_cycle_formula(n: int) -> int:
    """Wiener polarity index of the cycle on n vertices."""
    if n < 3:
        raise PolarityError("cycle needs n >= 3")
    if n <= 5:
        return 0
    if n == 6:
        return 3
    return n


def _score(shape: ComponentShape) -> int:
    if shape.kind == "path":
        return wp_path_formula(shape.size)
    if shape.kind == "cycle":
        return wp_cycle_formula(shape.size)
    raise MalformedComponent(
        f"component of {shape.size} vertices is neither a path nor a cycle"
    )


@dataclass(frozen=True)
class CutDecomposition:
    """Per-direction component shapes and their index contributions."""

    per_direction: dict[Direction, list[tuple[ComponentShape, int]]]
    hexagon_count: int
    external: ExternalHexTally

    @property
    def component_term(self) -> int:
        return sum(s for comps in self.per_direction.values() for _, s in comps)

    @property
    def total(self) -> int:
        e = self.external
        return 3 * self.hexagon_count + e.h1 + 2 * e.h2 + 3 * e.h3 + self.component_term


def cut_decomposition(
    g: MolGraph, hexagon_count: int, external: ExternalHexTally
) -> CutDecomposition:
    per_direction: dict[Direction, list[tuple[ComponentShape, int]]] = {}
    for d in Direction:
        gd = g.delete_direction(d)
        scored = []
        for comp in gd.connected_components():
            shape = component_shape(gd, comp)
            scored.append((shape, _score(shape)))
        per_direction[d] = scored
    return CutDecomposition(per_direction, hexagon_count, external)


def wp_cut_method(g: MolGraph, hexagon_count: int, external: ExternalHexTally) -> int:
    """Index via the direction decomposition:
    3*h + h1 + 2*h2 + 3*h3 + sum of component indices."""
    return cut_decomposition(g, hexagon_count, external).total


def wp_benzenoid_closed(h: int, h1: int, h2: int, h3: int) -> int:
    """Closed formula for any benzenoid system: 9h + h1 + 2*h2 + 3*h3 - 6."""
    if h < 1:
        raise PolarityError("benzenoid needs h >= 1")
    return 9 * h + h1 + 2 * h2 + 3 * h3 - 6


def wp_zigzag_closed(r: int, h: int) -> int:
    """Closed formula for the zig-zag tube: 24r - 3 when h = 3, else 9rh."""
    if r < 1 or h < 3:
        raise PolarityError(f"zigzag formula needs r >= 1 and h >= 3, got r={r}, h={h}")
    return 24 * r - 3 if h == 3 else 9 * r * h


def wp_armchair_closed(r: int, h: int) -> int:
    """Closed formula for the armchair tube: 9rh + r."""
    if r < 4 or r % 2 != 0 or h < 1:
        raise PolarityError(f"armchair formula needs even r >= 4 and h >= 1, got r={r}, h={h}")
    return 9 * r * h + r
