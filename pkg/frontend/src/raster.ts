// Software rasterizer for the PNG export path: draws the same scene the
// canvas shows into a plain RGBA buffer, so exporting never depends on a
// browser canvas implementation. Labels use a small stroke font (3x5 grid).

export type Color = [number, number, number, number];

export const WHITE: Color = [255, 255, 255, 255];
export const BLACK: Color = [30, 30, 36, 255];

// character strokes on a 3-wide x 5-tall grid, [x0, y0, x1, y1] per segment
const O_STROKES = [
  [0, 1, 1, 0], [1, 0, 2, 1], [2, 1, 2, 3], [2, 3, 1, 4], [1, 4, 0, 3], [0, 3, 0, 1],
];
const STROKES: Record<string, number[][]> = {
  A: [[0, 4, 0, 1], [0, 1, 1, 0], [1, 0, 2, 1], [2, 1, 2, 4], [0, 2, 2, 2]],
  B: [[0, 0, 0, 4], [0, 0, 1, 0], [1, 0, 2, 1], [2, 1, 1, 2], [0, 2, 1, 2], [1, 2, 2, 3], [2, 3, 1, 4], [1, 4, 0, 4]],
  C: [[2, 0, 0, 1], [0, 1, 0, 3], [0, 3, 2, 4]],
  D: [[0, 0, 0, 4], [0, 0, 1, 0], [1, 0, 2, 1], [2, 1, 2, 3], [2, 3, 1, 4], [1, 4, 0, 4]],
  E: [[2, 0, 0, 0], [0, 0, 0, 4], [0, 4, 2, 4], [0, 2, 1, 2]],
  F: [[2, 0, 0, 0], [0, 0, 0, 4], [0, 2, 1, 2]],
  G: [[2, 0, 0, 1], [0, 1, 0, 3], [0, 3, 2, 4], [2, 4, 2, 2], [2, 2, 1, 2]],
  H: [[0, 0, 0, 4], [2, 0, 2, 4], [0, 2, 2, 2]],
  I: [[0, 0, 2, 0], [1, 0, 1, 4], [0, 4, 2, 4]],
  J: [[2, 0, 2, 3], [2, 3, 1, 4], [1, 4, 0, 3]],
  K: [[0, 0, 0, 4], [2, 0, 0, 2], [0, 2, 2, 4]],
  L: [[0, 0, 0, 4], [0, 4, 2, 4]],
  M: [[0, 4, 0, 0], [0, 0, 1, 2], [1, 2, 2, 0], [2, 0, 2, 4]],
  N: [[0, 4, 0, 0], [0, 0, 2, 4], [2, 4, 2, 0]],
  O: O_STROKES,
  P: [[0, 4, 0, 0], [0, 0, 2, 0], [2, 0, 2, 2], [2, 2, 0, 2]],
  Q: [...O_STROKES, [1, 3, 2, 4]],
  R: [[0, 4, 0, 0], [0, 0, 2, 0], [2, 0, 2, 2], [2, 2, 0, 2], [0, 2, 2, 4]],
  S: [[2, 0, 0, 1], [0, 1, 2, 3], [2, 3, 0, 4]],
  T: [[0, 0, 2, 0], [1, 0, 1, 4]],
  U: [[0, 0, 0, 3], [0, 3, 1, 4], [1, 4, 2, 3], [2, 3, 2, 0]],
  V: [[0, 0, 1, 4], [1, 4, 2, 0]],
  W: [[0, 0, 0, 4], [0, 4, 1, 2], [1, 2, 2, 4], [2, 4, 2, 0]],
  X: [[0, 0, 2, 4], [2, 0, 0, 4]],
  Y: [[0, 0, 1, 2], [2, 0, 1, 2], [1, 2, 1, 4]],
  Z: [[0, 0, 2, 0], [2, 0, 0, 4], [0, 4, 2, 4]],
  "0": [...O_STROKES, [2, 1, 0, 3]],
  "1": [[0, 1, 1, 0], [1, 0, 1, 4], [0, 4, 2, 4]],
  "2": [[0, 1, 1, 0], [1, 0, 2, 1], [2, 1, 0, 4], [0, 4, 2, 4]],
  "3": [[0, 0, 2, 0], [2, 0, 1, 2], [1, 2, 2, 3], [2, 3, 1, 4], [1, 4, 0, 4]],
  "4": [[2, 4, 2, 0], [2, 0, 0, 3], [0, 3, 2, 3]],
  "5": [[2, 0, 0, 0], [0, 0, 0, 2], [0, 2, 1, 2], [1, 2, 2, 3], [2, 3, 1, 4], [1, 4, 0, 4]],
  "6": [[2, 0, 0, 2], [0, 2, 0, 4], [0, 4, 2, 4], [2, 4, 2, 2], [2, 2, 0, 2]],
  "7": [[0, 0, 2, 0], [2, 0, 1, 4]],
  "8": [[1, 0, 0, 1], [0, 1, 2, 3], [2, 3, 1, 4], [1, 4, 0, 3], [0, 3, 2, 1], [2, 1, 1, 0]],
  "9": [[2, 2, 0, 2], [0, 2, 0, 0], [0, 0, 2, 0], [2, 0, 2, 4]],
  "-": [[0, 2, 2, 2]],
  _: [[0, 4, 2, 4]],
  ".": [[1, 4, 1, 4]],
  " ": [],
};

export class Raster {
  readonly data: Uint8Array;

  constructor(
    readonly width: number,
    readonly height: number,
    background: Color = WHITE,
  ) {
    this.data = new Uint8Array(width * height * 4);
    for (let i = 0; i < width * height; i++) {
      this.data.set(background, i * 4);
    }
  }

  setPixel(x: number, y: number, color: Color): void {
    const xi = Math.round(x);
    const yi = Math.round(y);
    if (xi < 0 || yi < 0 || xi >= this.width || yi >= this.height) return;
    this.data.set(color, (yi * this.width + xi) * 4);
  }

  fillCircle(cx: number, cy: number, radius: number, color: Color): void {
    const r2 = radius * radius;
    const x0 = Math.max(0, Math.floor(cx - radius));
    const x1 = Math.min(this.width - 1, Math.ceil(cx + radius));
    const y0 = Math.max(0, Math.floor(cy - radius));
    const y1 = Math.min(this.height - 1, Math.ceil(cy + radius));
    for (let y = y0; y <= y1; y++) {
      for (let x = x0; x <= x1; x++) {
        const dx = x - cx;
        const dy = y - cy;
        if (dx * dx + dy * dy <= r2) {
          this.data.set(color, (y * this.width + x) * 4);
        }
      }
    }
  }

  /** Thick line: stamped circles along the segment (round caps). */
  line(x0: number, y0: number, x1: number, y1: number, width: number, color: Color): void {
    const dx = x1 - x0;
    const dy = y1 - y0;
    const length = Math.sqrt(dx * dx + dy * dy);
    const steps = Math.max(1, Math.ceil(length * 2));
    const radius = Math.max(width / 2, 0.5);
    for (let s = 0; s <= steps; s++) {
      const t = s / steps;
      this.fillCircle(x0 + dx * t, y0 + dy * t, radius, color);
    }
  }

  text(x: number, y: number, content: string, scale: number, color: Color): void {
    let cursor = x;
    for (const raw of content) {
      const glyph = STROKES[raw] ?? STROKES[raw.toUpperCase()] ?? [[0, 0, 2, 4], [2, 0, 0, 4]];
      for (const [ax, ay, bx, by] of glyph) {
        this.line(
          cursor + ax * scale,
          y + ay * scale,
          cursor + bx * scale,
          y + by * scale,
          Math.max(1, scale * 0.45),
          color,
        );
      }
      cursor += 4 * scale;
    }
  }

  textWidth(content: string, scale: number): number {
    return content.length * 4 * scale;
  }
}
