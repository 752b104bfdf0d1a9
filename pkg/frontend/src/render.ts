import { edgeWidth, type NodePosition } from "./layout";
import { Raster, type Color } from "./raster";
import type { FormMatch, GraphDoc } from "./types";

export const NODE_RADIUS = 14;
export const NODE_FILL: Color = [86, 116, 255, 255];
export const NODE_RING: Color = [40, 50, 90, 255];
export const EDGE_COLOR: Color = [150, 158, 180, 255];
export const LABEL_COLOR: Color = [25, 28, 40, 255];
export const DIM_EDGE: Color = [215, 218, 228, 255];
// distinct emphasis per component of a highlighted disconnected form
export const COMPONENT_COLORS: Color[] = [
  [235, 87, 87, 255],
  [39, 174, 96, 255],
  [242, 153, 74, 255],
  [155, 81, 224, 255],
  [6, 174, 212, 255],
];

export interface ViewTransform {
  scale: number;
  tx: number;
  ty: number;
}

export const IDENTITY: ViewTransform = { scale: 1, tx: 0, ty: 0 };

export interface Painter {
  circle(x: number, y: number, r: number, fill: Color, ring?: Color): void;
  line(x0: number, y0: number, x1: number, y1: number, width: number, color: Color): void;
  label(x: number, y: number, text: string, size: number, color: Color): void;
}

export class RasterPainter implements Painter {
  constructor(readonly raster: Raster) {}

  circle(x: number, y: number, r: number, fill: Color, ring?: Color): void {
    if (ring) this.raster.fillCircle(x, y, r + 2, ring);
    this.raster.fillCircle(x, y, r, fill);
  }

  line(x0: number, y0: number, x1: number, y1: number, width: number, color: Color): void {
    this.raster.line(x0, y0, x1, y1, width, color);
  }

  label(x: number, y: number, text: string, size: number, color: Color): void {
    const scale = size / 5;
    this.raster.text(x - this.raster.textWidth(text, scale) / 2, y, text, scale, color);
  }
}

function css([r, g, b, a]: Color): string {
  return `rgba(${r},${g},${b},${a / 255})`;
}

export class CanvasPainter implements Painter {
  constructor(readonly ctx: CanvasRenderingContext2D) {}

  circle(x: number, y: number, r: number, fill: Color, ring?: Color): void {
    const ctx = this.ctx;
    ctx.beginPath();
    ctx.arc(x, y, r, 0, 2 * Math.PI);
    ctx.fillStyle = css(fill);
    ctx.fill();
    if (ring) {
      ctx.lineWidth = 2;
      ctx.strokeStyle = css(ring);
      ctx.stroke();
    }
  }

  line(x0: number, y0: number, x1: number, y1: number, width: number, color: Color): void {
    const ctx = this.ctx;
    ctx.beginPath();
    ctx.moveTo(x0, y0);
    ctx.lineTo(x1, y1);
    ctx.lineWidth = width;
    ctx.lineCap = "round";
    ctx.strokeStyle = css(color);
    ctx.stroke();
  }

  label(x: number, y: number, text: string, size: number, color: Color): void {
    const ctx = this.ctx;
    ctx.font = `${size}px sans-serif`;
    ctx.textAlign = "center";
    ctx.textBaseline = "top";
    ctx.fillStyle = css(color);
    ctx.fillText(text, x, y);
  }
}

function componentColor(match: FormMatch, node: number): Color | null {
  if (!match.functions.includes(node)) return null;
  if (match.components.length <= 1) return COMPONENT_COLORS[1];
  const index = match.components.findIndex((c) => c.includes(node));
  return COMPONENT_COLORS[index % COMPONENT_COLORS.length];
}

/**
 * Draw a graph with weight-proportional edge thickness. When a form is
 * highlighted, its induced edges and nodes take over the color channel:
 * one accent when connected, one distinct accent per component otherwise,
 * with everything else dimmed.
 */
export function drawGraphScene(
  painter: Painter,
  graph: GraphDoc,
  positions: NodePosition[],
  transform: ViewTransform = IDENTITY,
  highlight: FormMatch | null = null,
): void {
  const { scale, tx, ty } = transform;
  const px = (p: NodePosition) => p.x * scale + tx;
  const py = (p: NodePosition) => p.y * scale + ty;
  const maxWeight = graph.edges.reduce((m, e) => Math.max(m, e.weight), 0);
  const inducedPairs = new Set(
    (highlight?.edges ?? []).map(([u, v]) => `${Math.min(u, v)}:${Math.max(u, v)}`),
  );

  for (const edge of graph.edges) {
    const a = positions[edge.source];
    const b = positions[edge.target];
    const key = `${Math.min(edge.source, edge.target)}:${Math.max(edge.source, edge.target)}`;
    let color = highlight ? DIM_EDGE : EDGE_COLOR;
    if (highlight && inducedPairs.has(key)) {
      color = componentColor(highlight, edge.source) ?? EDGE_COLOR;
    }
    painter.line(
      px(a), py(a), px(b), py(b),
      edgeWidth(edge.weight, maxWeight) * Math.sqrt(scale),
      color,
    );
  }

  for (const node of graph.nodes) {
    const p = positions[node.id];
    const accent = highlight ? componentColor(highlight, node.id) : null;
    const fill = accent ?? NODE_FILL;
    painter.circle(px(p), py(p), NODE_RADIUS * Math.sqrt(scale), fill, NODE_RING);
    painter.label(
      px(p),
      py(p) + NODE_RADIUS * Math.sqrt(scale) + 4,
      node.label,
      12,
      LABEL_COLOR,
    );
  }
}

/** Render to an RGBA raster (the PNG export path). */
export function renderToRaster(
  graph: GraphDoc,
  positions: NodePosition[],
  width: number,
  height: number,
  highlight: FormMatch | null = null,
): Raster {
  const raster = new Raster(width, height);
  drawGraphScene(new RasterPainter(raster), graph, positions, IDENTITY, highlight);
  return raster;
}
