/** Parsing and serialising the adjacency text form used by the service.
 *
 * The client validates imports locally so bad matrices produce an inline
 * message without a round trip; the rules mirror the server's (square,
 * symmetric, zero diagonal, entries 0/1).
 */

export interface ParsedGraph {
  n: number;
  edges: Array<[number, number]>; // u < v
}

export class AdjacencyError extends Error {
  constructor(message: string, readonly location?: [number, number]) {
    super(message);
  }
}

export function parseAdjacency(text: string): ParsedGraph {
  let data: unknown;
  try {
    data = JSON.parse(text);
  } catch {
    throw new AdjacencyError('not a nested array literal');
  }
  if (!Array.isArray(data) || data.length === 0) {
    throw new AdjacencyError('adjacency matrix must be a non-empty array of rows');
  }
  const n = data.length;
  const rows: number[][] = [];
  for (let i = 0; i < n; i++) {
    const row: unknown = data[i];
    if (!Array.isArray(row) || row.length !== n) {
      throw new AdjacencyError(`matrix is not square at row ${i}`, [i, 0]);
    }
    for (let j = 0; j < n; j++) {
      const entry: unknown = row[j];
      if (entry !== 0 && entry !== 1) {
        throw new AdjacencyError(`entry (${i}, ${j}) must be 0 or 1`, [i, j]);
      }
    }
    rows.push(row as number[]);
  }
  for (let i = 0; i < n; i++) {
    if (rows[i][i] !== 0) {
      throw new AdjacencyError(`nonzero diagonal entry at (${i}, ${i})`, [i, i]);
    }
    for (let j = i + 1; j < n; j++) {
      if (rows[i][j] !== rows[j][i]) {
        throw new AdjacencyError(`asymmetric at (${j}, ${i})`, [j, i]);
      }
    }
  }
  const edges: Array<[number, number]> = [];
  for (let i = 0; i < n; i++) {
    for (let j = i + 1; j < n; j++) {
      if (rows[i][j] === 1) edges.push([i, j]);
    }
  }
  return { n, edges };
}

export function serializeAdjacency(n: number, edges: Array<[number, number]>): string {
  const rows: number[][] = Array.from({ length: n }, () => new Array<number>(n).fill(0));
  for (const [u, v] of edges) {
    rows[u][v] = 1;
    rows[v][u] = 1;
  }
  return JSON.stringify(rows);
}
