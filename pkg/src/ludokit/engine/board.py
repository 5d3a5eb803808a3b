"""Board topology: cells, adjacency, line rays, edges and labels.

Both families use 1-based (row, col) coordinates with row-major 0-based
cell ids and chess-style labels (column letter then row number, "a1" is
row 1 col 1). HexBoard(n) is an n x n rhombus in axial coordinates:
neighbors of (r, c) are (r+-1, c), (r, c+-1), (r+1, c-1) and (r-1, c+1)
clipped to the board, giving the usual 6-neighbor hex grid with two
acute corners. SquareBoard(n) connects orthogonally and runs line rays
along 8 directions.

Edge naming fixes an orientation: N and NE mean row n, S and SW row 1,
W and NW column 1, E and SE column n. Corner cells belong to both
incident edges. On the hex rhombus this is the standard Hex convention
(one player spans row 1 to row n, the other column 1 to column n).
"""

from __future__ import annotations

from dataclasses import dataclass, replace

_HEX_OFFSETS = ((1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1))
_SQUARE_OFFSETS = ((1, 0), (-1, 0), (0, 1), (0, -1))

# one entry per axis; rays walk both the vector and its negation
_HEX_AXES = ((0, 1), (1, 0), (1, -1))
_SQUARE_AXES = ((0, 1), (1, 0), (1, 1), (1, -1))


def line_axes(family: str) -> tuple[tuple[int, int], ...]:
    """Axis vectors (dr, dc) for line rays; each also runs negated."""
    return _HEX_AXES if family == "hex" else _SQUARE_AXES


def cell_label(cell: int, side: int) -> str:
    row, col = divmod(cell, side)
    letters = ""
    c = col + 1
    while c > 0:
        c, rem = divmod(c - 1, 26)
        letters = chr(ord("a") + rem) + letters
    return f"{letters}{row + 1}"


def parse_label(label: str, side: int) -> int:
    """Inverse of cell_label; raises ValueError on malformed or off-board labels."""
    i = 0
    while i < len(label) and label[i].isalpha():
        i += 1
    letters, digits = label[:i], label[i:]
    if not letters or not digits or not digits.isdigit():
        raise ValueError(f"bad cell label {label!r}")
    col = 0
    for ch in letters.lower():
        if not "a" <= ch <= "z":
            raise ValueError(f"bad cell label {label!r}")
        col = col * 26 + (ord(ch) - ord("a") + 1)
    row = int(digits)
    if not (1 <= row <= side and 1 <= col <= side):
        raise ValueError(f"cell label {label!r} is off the board")
    return (row - 1) * side + (col - 1)


@dataclass(frozen=True)
class Region:
    """A named goal area for one player (1-based player number)."""

    player: int
    cells: frozenset[int]


@dataclass(frozen=True)
class BoardGraph:
    family: str  # "hex" | "square"
    side: int
    neighbors: tuple[tuple[int, ...], ...]
    rays: tuple[tuple[tuple[int, ...], ...], ...]
    labels: tuple[str, ...]
    regions: tuple[Region, ...] = ()

    @property
    def cell_count(self) -> int:
        return self.side * self.side

    def cell_id(self, row: int, col: int) -> int:
        return (row - 1) * self.side + (col - 1)

    def coords(self, cell: int) -> tuple[int, int]:
        row, col = divmod(cell, self.side)
        return row + 1, col + 1

    def label(self, cell: int) -> str:
        return self.labels[cell]

    def cell(self, label: str) -> int:
        return parse_label(label, self.side)

    def edge_cells(self, direction: str) -> frozenset[int]:
        n = self.side
        if direction in ("N", "NE"):
            return frozenset(self.cell_id(n, c) for c in range(1, n + 1))
        if direction in ("S", "SW"):
            return frozenset(self.cell_id(1, c) for c in range(1, n + 1))
        if direction in ("W", "NW"):
            return frozenset(self.cell_id(r, 1) for r in range(1, n + 1))
        if direction in ("E", "SE"):
            return frozenset(self.cell_id(r, n) for r in range(1, n + 1))
        raise ValueError(f"unknown edge direction {direction!r}")

    def region_sets(self, player: int) -> tuple[frozenset[int], ...]:
        return tuple(r.cells for r in self.regions if r.player == player)

    def with_regions(self, regions: tuple[Region, ...]) -> "BoardGraph":
        return replace(self, regions=regions)


def build_board(family: str, side: int) -> BoardGraph:
    """Construct the cell graph for "hex" or "square" with the given side."""
    if family not in ("hex", "square"):
        raise ValueError(f"unknown board family {family!r}")
    if side < 2:
        raise ValueError(f"board side must be at least 2, got {side}")
    offsets = _HEX_OFFSETS if family == "hex" else _SQUARE_OFFSETS
    axes = _HEX_AXES if family == "hex" else _SQUARE_AXES

    def cid(r: int, c: int) -> int:
        return (r - 1) * side + (c - 1)

    def on_board(r: int, c: int) -> bool:
        return 1 <= r <= side and 1 <= c <= side

    neighbors = []
    rays = []
    labels = []
    for r in range(1, side + 1):
        for c in range(1, side + 1):
            nbs = sorted(cid(r + dr, c + dc) for dr, dc in offsets if on_board(r + dr, c + dc))
            neighbors.append(tuple(nbs))
            cell_rays = []
            for dr, dc in axes:
                for sr, sc in ((dr, dc), (-dr, -dc)):
                    ray = []
                    rr, cc = r + sr, c + sc
                    while on_board(rr, cc):
                        ray.append(cid(rr, cc))
                        rr, cc = rr + sr, cc + sc
                    if ray:
                        cell_rays.append(tuple(ray))
            rays.append(tuple(cell_rays))
            labels.append(cell_label(cid(r, c), side))
    return BoardGraph(family, side, tuple(neighbors), tuple(rays), tuple(labels))
