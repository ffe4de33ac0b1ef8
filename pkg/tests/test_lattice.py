import pytest
from hypothesis import given
from hypothesis import strategies as st

from hexpolarity.lattice import (
    Direction,
    HexCoord,
    HexFileError,
    LatticeError,
    edge_direction,
    format_hex_file,
    hex_neighbors,
    hexagon_edges,
    hexagon_vertices,
    is_lattice_edge,
    parse_hex_file,
)

hexcoords = st.builds(HexCoord, st.integers(-50, 50), st.integers(-50, 50))


def test_hexagon_vertices_origin():
    assert set(hexagon_vertices(HexCoord(0, 0))) == {
        (0, 0), (1, 0), (2, 0), (0, 1), (1, 1), (2, 1),
    }


def test_hexagon_vertices_neighbor_shares_one_edge():
    a = set(hexagon_vertices(HexCoord(0, 0)))
    b = set(hexagon_vertices(HexCoord(1, 0)))
    assert b == {(2, 0), (3, 0), (4, 0), (2, 1), (3, 1), (4, 1)}
    assert a & b == {(2, 0), (2, 1)}
    c = set(hexagon_vertices(HexCoord(0, 1)))
    assert (1, 1) in c and (2, 1) in c
    assert a & c == {(1, 1), (2, 1)}


@given(hexcoords)
def test_hex_neighbors_six_distinct(h):
    ns = hex_neighbors(h)
    assert len(ns) == 6
    assert len(set(ns)) == 6
    assert h not in ns


@given(hexcoords)
def test_neighbors_share_exactly_one_edge(h):
    mine = set(hexagon_vertices(h))
    for nb in hex_neighbors(h):
        shared = mine & set(hexagon_vertices(nb))
        assert len(shared) == 2
        u, v = sorted(shared)
        assert is_lattice_edge(u, v)


def test_edge_direction_examples():
    assert edge_direction((0, 0), (0, 1)) is Direction.D1
    assert edge_direction((0, 0), (1, 0)) is Direction.D2
    assert edge_direction((1, 0), (2, 0)) is Direction.D3


def test_edge_direction_rejects_non_edges():
    with pytest.raises(LatticeError):
        edge_direction((0, 0), (2, 0))
    with pytest.raises(LatticeError):
        # vertical edge missing where x+y is odd
        edge_direction((1, 0), (1, 1))


@given(hexcoords)
def test_hexagon_has_two_edges_per_class(h):
    dirs = [edge_direction(u, v) for u, v in hexagon_edges(h)]
    assert sorted(dirs, key=lambda d: d.value) == [
        Direction.D1, Direction.D1,
        Direction.D2, Direction.D2,
        Direction.D3, Direction.D3,
    ]


@given(hexcoords)
def test_hexagon_anchor_parity(h):
    (ax, ay) = hexagon_vertices(h)[0]
    assert (ax + ay) % 2 == 0


def test_parse_hex_file_roundtrip():
    text = "# comment\n0 0\n1 0   # trailing\n\n-2 3\n"
    hexes = parse_hex_file(text)
    assert hexes == [HexCoord(0, 0), HexCoord(1, 0), HexCoord(-2, 3)]
    assert parse_hex_file(format_hex_file(hexes)) == sorted(hexes)


def test_parse_hex_file_rejects_duplicates_and_garbage():
    with pytest.raises(HexFileError):
        parse_hex_file("0 0\n0 0\n")
    with pytest.raises(HexFileError):
        parse_hex_file("0\n")
    with pytest.raises(HexFileError):
        parse_hex_file("a b\n")
