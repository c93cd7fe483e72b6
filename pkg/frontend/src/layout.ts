// Board geometry. Pure function of q: the q*q affine points (1,y,z) sit on
// a grid at (z, y); the q+1 points with first coordinate zero (the line at
// infinity) sit on an arc above it. Point ids follow the service's
// canonical enumeration, so layout[i] is the position of point id i.

export interface Point2D {
  x: number;
  y: number;
}

export function boardLayout(q: number): Point2D[] {
  const coords: Point2D[] = [];
  for (let y = 0; y < q; y++) {
    for (let z = 0; z < q; z++) {
      coords.push({ x: z, y });
    }
  }
  const cx = (q - 1) / 2;
  const radius = q / 2 + 1;
  for (let i = 0; i <= q; i++) {
    const angle = Math.PI * (1 - i / q);
    coords.push({
      x: cx + radius * Math.cos(angle),
      y: q + 0.2 + 0.45 * radius * Math.sin(angle),
    });
  }
  return coords;
}

export function pointCount(q: number): number {
  return q * q + q + 1;
}
