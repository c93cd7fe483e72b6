import { describe, expect, it } from "vitest";

import { boardLayout, pointCount } from "../src/layout.js";

describe("boardLayout", () => {
  it("produces one position per point id", () => {
    for (const q of [3, 5, 7, 9]) {
      expect(boardLayout(q)).toHaveLength(pointCount(q));
    }
  });

  it("puts the affine block on a grid in enumeration order", () => {
    const layout = boardLayout(3);
    // id = y*q + z sits at (z, y)
    expect(layout[0]).toEqual({ x: 0, y: 0 });
    expect(layout[5]).toEqual({ x: 2, y: 1 });
    expect(layout[8]).toEqual({ x: 2, y: 2 });
  });

  it("puts the infinity points above the grid", () => {
    for (const q of [3, 5]) {
      const layout = boardLayout(q);
      for (let i = q * q; i < pointCount(q); i++) {
        expect(layout[i].y).toBeGreaterThan(q - 1);
      }
    }
  });

  it("assigns distinct positions", () => {
    const layout = boardLayout(5);
    const keys = new Set(layout.map((p) => `${p.x.toFixed(6)}|${p.y.toFixed(6)}`));
    expect(keys.size).toBe(layout.length);
  });

  it("is a pure function of q", () => {
    expect(boardLayout(7)).toEqual(boardLayout(7));
  });
});
