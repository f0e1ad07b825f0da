// Grid arithmetic on the client side, used only for drawing: which point
// pairs get an adjacency arc and how a position is labeled.

export interface GridPoint {
  num: number;
  depth: number;
}

export function valueOf(p: GridPoint): number {
  return p.num / 2 ** p.depth;
}

// Two grid points are neighbors exactly when they differ by one step of the
// finer of their two grids.
export function adjacent(a: GridPoint, b: GridPoint): boolean {
  const depth = Math.max(a.depth, b.depth);
  const an = a.num * 2 ** (depth - a.depth);
  const bn = b.num * 2 ** (depth - b.depth);
  return Math.abs(an - bn) === 1;
}

export function formatDyadic(p: GridPoint): string {
  if (p.depth === 0) return String(p.num);
  return `${p.num}/${2 ** p.depth}`;
}
