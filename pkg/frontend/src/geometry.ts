/** Pixel geometry for hex and square boards.
 *
 * Hex cells are pointy-top hexagons laid out as a rhombus sheared to the
 * right: row 1 sits at the bottom, each row above it shifts half a cell
 * to the right. Player 1 owns the NE (top) and SW (bottom) edges, player
 * 2 the NW (left) and SE (right) edges. Square boards are plain grids
 * with row 1 at the bottom. Purely cosmetic choices; the cell numbering
 * is the engine's.
 */

import { cellLabel } from "./labels.js";

export interface CellGeometry {
  cell: number;
  label: string;
  cx: number;
  cy: number;
  points: string;
}

export type EdgeSide = "ne" | "sw" | "nw" | "se";

export interface EdgeMark {
  side: EdgeSide;
  player: 1 | 2;
  points: string;
}

export interface BoardGeometry {
  family: "hex" | "square";
  side: number;
  width: number;
  height: number;
  cells: CellGeometry[];
  edges: EdgeMark[];
}

export interface CellView extends CellGeometry {
  occupant: number;
  isLegal: boolean;
  isLast: boolean;
}

const MARGIN = 8;

type Point = [number, number];

function hexCorner(cx: number, cy: number, size: number, k: number): Point {
  const angle = (Math.PI / 180) * (60 * k - 30);
  return [cx + size * Math.cos(angle), cy + size * Math.sin(angle)];
}

// corner indices: 0 upper-right, 1 lower-right, 2 bottom, 3 lower-left,
// 4 upper-left, 5 top (SVG y grows downward)
function hexCorners(cx: number, cy: number, size: number): Point[] {
  return [0, 1, 2, 3, 4, 5].map((k) => hexCorner(cx, cy, size, k));
}

function toPoints(points: Point[]): string {
  return points.map(([x, y]) => `${round2(x)},${round2(y)}`).join(" ");
}

function round2(v: number): number {
  return Math.round(v * 100) / 100;
}

export function buildGeometry(
  family: "hex" | "square",
  side: number,
  size = 22,
): BoardGeometry {
  if (side < 1) throw new Error("board side must be at least 1");
  return family === "hex" ? hexGeometry(side, size) : squareGeometry(side, size);
}

function hexGeometry(side: number, size: number): BoardGeometry {
  const w = Math.sqrt(3) * size;
  const centers: Point[] = [];
  for (let cell = 0; cell < side * side; cell += 1) {
    const row = Math.floor(cell / side) + 1;
    const col = (cell % side) + 1;
    const cx = w * (col - 1) + (w / 2) * (row - 1);
    const cy = 1.5 * size * (side - row);
    centers.push([cx, cy]);
  }
  const allCorners = centers.map(([cx, cy]) => hexCorners(cx, cy, size));
  const xs = allCorners.flat().map((p) => p[0]);
  const ys = allCorners.flat().map((p) => p[1]);
  const dx = MARGIN - Math.min(...xs);
  const dy = MARGIN - Math.min(...ys);
  const shift = ([x, y]: Point): Point => [x + dx, y + dy];

  const cells: CellGeometry[] = centers.map(([cx, cy], cell) => ({
    cell,
    label: cellLabel(cell, side),
    cx: round2(cx + dx),
    cy: round2(cy + dy),
    points: toPoints(allCorners[cell].map(shift)),
  }));

  const corner = (cell: number, k: number): Point => shift(allCorners[cell][k]);
  const index = (row: number, col: number): number => (row - 1) * side + (col - 1);

  const ne: Point[] = [];
  const sw: Point[] = [];
  for (let col = 1; col <= side; col += 1) {
    ne.push(corner(index(side, col), 4), corner(index(side, col), 5), corner(index(side, col), 0));
    sw.push(corner(index(1, col), 3), corner(index(1, col), 2), corner(index(1, col), 1));
  }
  const nw: Point[] = [];
  const se: Point[] = [];
  for (let row = side; row >= 1; row -= 1) {
    nw.push(corner(index(row, 1), 4), corner(index(row, 1), 3));
    se.push(corner(index(row, side), 0), corner(index(row, side), 1));
  }

  return {
    family: "hex",
    side,
    width: round2(Math.max(...xs) + dx + MARGIN),
    height: round2(Math.max(...ys) + dy + MARGIN),
    cells,
    edges: [
      { side: "ne", player: 1, points: toPoints(ne) },
      { side: "sw", player: 1, points: toPoints(sw) },
      { side: "nw", player: 2, points: toPoints(nw) },
      { side: "se", player: 2, points: toPoints(se) },
    ],
  };
}

function squareGeometry(side: number, size: number): BoardGeometry {
  const pitch = 2 * size;
  const cells: CellGeometry[] = [];
  for (let cell = 0; cell < side * side; cell += 1) {
    const row = Math.floor(cell / side) + 1;
    const col = (cell % side) + 1;
    const x = MARGIN + pitch * (col - 1);
    const y = MARGIN + pitch * (side - row);
    const points: Point[] = [
      [x, y],
      [x + pitch, y],
      [x + pitch, y + pitch],
      [x, y + pitch],
    ];
    cells.push({
      cell,
      label: cellLabel(cell, side),
      cx: round2(x + size),
      cy: round2(y + size),
      points: toPoints(points),
    });
  }
  const extent = round2(2 * MARGIN + pitch * side);
  return { family: "square", side, width: extent, height: extent, cells, edges: [] };
}

export function buildCellViews(
  geometry: BoardGeometry,
  occupancy: number[],
  legal: string[],
  lastMove: string | null,
): CellView[] {
  if (occupancy.length !== geometry.cells.length) {
    throw new Error(
      `occupancy has ${occupancy.length} cells, geometry has ${geometry.cells.length}`,
    );
  }
  const legalSet = new Set(legal);
  return geometry.cells.map((cell) => ({
    ...cell,
    occupant: occupancy[cell.cell],
    isLegal: legalSet.has(cell.label),
    isLast: lastMove !== null && cell.label === lastMove,
  }));
}
