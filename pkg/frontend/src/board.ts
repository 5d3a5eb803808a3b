/** SVG board renderer. Redrawn from scratch after every confirmed state;
 * there is no optimistic path, so what is on screen is what the service
 * returned last.
 */

import { buildCellViews, buildGeometry } from "./geometry.js";
import type { BoardGeometry } from "./geometry.js";

const SVG_NS = "http://www.w3.org/2000/svg";

export interface BoardProps {
  family: "hex" | "square";
  side: number;
  occupancy: number[];
  legal: string[];
  lastMove: string | null;
  locked: boolean;
  onCellClick?: (label: string) => void;
}

const geometryCache = new Map<string, BoardGeometry>();

function geometryFor(family: "hex" | "square", side: number): BoardGeometry {
  const key = `${family}:${side}`;
  let geometry = geometryCache.get(key);
  if (!geometry) {
    geometry = buildGeometry(family, side);
    geometryCache.set(key, geometry);
  }
  return geometry;
}

export function renderBoard(container: HTMLElement, props: BoardProps): void {
  const geometry = geometryFor(props.family, props.side);
  const views = buildCellViews(geometry, props.occupancy, props.legal, props.lastMove);

  const svg = document.createElementNS(SVG_NS, "svg");
  svg.setAttribute("viewBox", `0 0 ${geometry.width} ${geometry.height}`);
  svg.setAttribute("class", `board ${props.family}${props.locked ? " locked" : ""}`);

  for (const edge of geometry.edges) {
    const line = document.createElementNS(SVG_NS, "polyline");
    line.setAttribute("points", edge.points);
    line.setAttribute("class", `edge p${edge.player}`);
    svg.appendChild(line);
  }

  for (const view of views) {
    const cell = document.createElementNS(SVG_NS, "polygon");
    cell.setAttribute("points", view.points);
    const classes = ["cell"];
    if (view.occupant) classes.push(`stone-p${view.occupant}`);
    if (view.isLast) classes.push("last-move");
    if (!props.locked && view.isLegal) classes.push("legal");
    cell.setAttribute("class", classes.join(" "));
    const title = document.createElementNS(SVG_NS, "title");
    title.textContent = view.label;
    cell.appendChild(title);
    if (!props.locked && view.isLegal && props.onCellClick) {
      const handler = props.onCellClick;
      cell.addEventListener("click", () => handler(view.label));
    }
    svg.appendChild(cell);

    if (view.occupant) {
      const stone = document.createElementNS(SVG_NS, "circle");
      stone.setAttribute("cx", String(view.cx));
      stone.setAttribute("cy", String(view.cy));
      stone.setAttribute("r", props.family === "hex" ? "13" : "15");
      stone.setAttribute("class", `stone p${view.occupant}${view.isLast ? " last-move" : ""}`);
      svg.appendChild(stone);
    }
  }

  container.textContent = "";
  container.appendChild(svg);
}
