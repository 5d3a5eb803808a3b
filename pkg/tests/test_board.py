from collections import Counter

import pytest

import helpers
from ludokit.engine import build_board, cell_label, parse_label


def degree_histogram(board):
    return Counter(len(nbs) for nbs in board.neighbors)


@pytest.mark.parametrize("family", ["hex", "square"])
@pytest.mark.parametrize("side", range(2, 12))
def test_cell_count_is_side_squared(family, side):
    assert len(build_board(family, side).neighbors) == side * side


@pytest.mark.parametrize("side", range(2, 12))
def test_hex_degree_histogram(side):
    # rhombus: 2 acute corners deg 2, 2 obtuse corners deg 3,
    # 4(n-2) edge cells deg 4, (n-2)^2 interior cells deg 6
    hist = degree_histogram(build_board("hex", side))
    expected = Counter({2: 2, 3: 2})
    if side > 2:
        expected[4] = 4 * (side - 2)
        expected[6] = (side - 2) ** 2
    assert hist == expected


@pytest.mark.parametrize("side", range(2, 12))
def test_square_degree_histogram(side):
    hist = degree_histogram(build_board("square", side))
    expected = Counter({2: 4})
    if side > 2:
        expected[3] = 4 * (side - 2)
        expected[4] = (side - 2) ** 2
    assert hist == expected


def test_hex2_adjacency_exact():
    board = build_board("hex", 2)
    # ids are row-major from (1,1); (1,1)=0 (1,2)=1 (2,1)=2 (2,2)=3
    assert set(board.neighbors[0]) == {1, 2}
    assert set(board.neighbors[2]) == {0, 1, 3}


@pytest.mark.parametrize("side", range(2, 8))
def test_hex_adjacency_matches_axial_oracle(side):
    board = build_board("hex", side)
    for r in range(1, side + 1):
        for c in range(1, side + 1):
            cell = (r - 1) * side + (c - 1)
            expected = {(a - 1) * side + (b - 1) for a, b in helpers.hex_neighbors(side, r, c)}
            assert set(board.neighbors[cell]) == expected


def test_square3_center():
    board = build_board("square", 3)
    center = 4
    assert len(board.neighbors[center]) == 4
    assert len(board.rays[center]) == 8


def test_adjacency_is_symmetric():
    for family in ("hex", "square"):
        board = build_board(family, 5)
        for cell, nbs in enumerate(board.neighbors):
            for nb in nbs:
                assert cell in board.neighbors[nb]


def test_labels_round_trip():
    for family, side in (("hex", 11), ("square", 15)):
        board = build_board(family, side)
        for cell in range(side * side):
            label = cell_label(cell, side)
            assert board.labels[cell] == label
            assert parse_label(label, side) == cell


def test_label_format():
    assert cell_label(0, 3) == "a1"
    assert cell_label(8, 3) == "c3"
    assert cell_label(120, 11) == "k11"


def test_parse_label_rejects_off_board():
    with pytest.raises(ValueError) as err:
        parse_label("z9", 5)
    assert "z9" in str(err.value)
    with pytest.raises(ValueError):
        parse_label("a0", 5)
    with pytest.raises(ValueError):
        parse_label("", 5)


def test_unknown_family_rejected():
    with pytest.raises(Exception):
        build_board("triangle", 4)
