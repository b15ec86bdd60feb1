/** Editor state: the drawn graph, the selected notion, the last response.
 *
 * Every mutation bumps the revision counter; rendered values are only ever
 * accepted for the revision they were requested at, so a slow response for
 * an old drawing can never decorate a newer one.
 */

import { AdjacencyError, parseAdjacency, serializeAdjacency } from './adjacency.js';
import { CurvatureResponse, Notion, NotionParams, isEdgeNotion } from './types.js';

export interface NodeState {
  id: number;
  x: number;
  y: number;
}

export interface DisplayedValues {
  revision: number;
  response: CurvatureResponse;
}

export type EditorListener = (editor: Editor) => void;

export class Editor {
  nodes: NodeState[] = [];
  edges: Array<[number, number]> = [];
  notion: Notion = 'ollivier';
  params: NotionParams = {};
  revision = 0;
  displayed: DisplayedValues | null = null;
  pendingRequest = false;
  importError: string | null = null;
  private editListeners: EditorListener[] = [];
  private displayListeners: EditorListener[] = [];
  private nextId = 0;

  /** Fired when the graph or the selected notion changes (revision bumps). */
  onChange(listener: EditorListener): void {
    this.editListeners.push(listener);
  }

  /** Fired when displayed values or the inline import error change; never a
   * reason to issue a request, which is what keeps the loop from feeding
   * itself. */
  onDisplay(listener: EditorListener): void {
    this.displayListeners.push(listener);
  }

  private notifyDisplay(): void {
    for (const listener of this.displayListeners) listener(this);
  }

  /** Bump the revision and notify; `requestWanted` is false for edits that
   * leave nothing to compute (clearing the canvas). */
  private touch(requestWanted: boolean): void {
    this.revision += 1;
    if (!requestWanted) this.displayed = null;
    for (const listener of this.editListeners) listener(this);
  }

  get vertexCount(): number {
    return this.nodes.length;
  }

  /** Dense ids 0..n-1 in node order, as the wire format requires. */
  private indexOf(id: number): number {
    return this.nodes.findIndex((node) => node.id === id);
  }

  addVertex(x: number, y: number): number {
    const id = this.nextId++;
    this.nodes.push({ id, x, y });
    this.importError = null;
    this.touch(true);
    return id;
  }

  addEdge(a: number, b: number): boolean {
    const i = this.indexOf(a);
    const j = this.indexOf(b);
    if (i < 0 || j < 0 || a === b) return false;
    if (this.hasEdge(a, b)) return false; // simple graph: no duplicates, no loops
    this.edges.push(a < b ? [a, b] : [b, a]);
    this.importError = null;
    this.touch(true);
    return true;
  }

  hasEdge(a: number, b: number): boolean {
    return this.edges.some(([u, v]) => (u === a && v === b) || (u === b && v === a));
  }

  deleteVertex(id: number): void {
    const index = this.indexOf(id);
    if (index < 0) return;
    this.nodes.splice(index, 1);
    this.edges = this.edges.filter(([u, v]) => u !== id && v !== id);
    this.touch(this.nodes.length > 0);
  }

  deleteEdge(a: number, b: number): void {
    const before = this.edges.length;
    this.edges = this.edges.filter(
      ([u, v]) => !((u === a && v === b) || (u === b && v === a)),
    );
    if (this.edges.length !== before) this.touch(this.nodes.length > 0);
  }

  clear(): void {
    this.nodes = [];
    this.edges = [];
    this.nextId = 0;
    this.importError = null;
    this.touch(false); // nothing to compute on an empty canvas
  }

  /** Import the adjacency text form; on bad input the state is unchanged
   * and `importError` carries the inline message. */
  importAdjacency(text: string, layout?: (index: number, n: number) => [number, number]): boolean {
    let parsed;
    try {
      parsed = parseAdjacency(text);
    } catch (error) {
      this.importError = error instanceof AdjacencyError ? error.message : String(error);
      this.notifyDisplay();
      return false;
    }
    const place = layout ?? circleLayout;
    this.nodes = [];
    this.nextId = 0;
    for (let i = 0; i < parsed.n; i++) {
      const [x, y] = place(i, parsed.n);
      this.nodes.push({ id: this.nextId++, x, y });
    }
    this.edges = parsed.edges.map(([u, v]) => [this.nodes[u].id, this.nodes[v].id]);
    this.importError = null;
    this.touch(true);
    return true;
  }

  /** Adjacency text of the current drawing (ids densified in node order). */
  exportAdjacency(): string {
    const dense = new Map(this.nodes.map((node, index) => [node.id, index]));
    const edges = this.edges.map(
      ([u, v]) => [dense.get(u)!, dense.get(v)!] as [number, number],
    );
    return serializeAdjacency(this.nodes.length, edges);
  }

  selectNotion(notion: Notion, params: NotionParams = {}): void {
    this.notion = notion;
    this.params = params;
    this.touch(this.nodes.length > 0);
  }

  /** Accept a response only if it answers the current revision. */
  acceptResponse(revision: number, response: CurvatureResponse): boolean {
    if (revision !== this.revision) return false; // stale: dropped silently
    this.displayed = { revision, response };
    this.notifyDisplay();
    return true;
  }

  /** Values keyed for the renderer: edge "i-j" keys use dense indices. */
  valueForEdge(a: number, b: number): string | null {
    if (!this.displayed || !isEdgeNotion(this.displayed.response.notion)) return null;
    const dense = new Map(this.nodes.map((node, index) => [node.id, index]));
    const i = dense.get(a);
    const j = dense.get(b);
    if (i === undefined || j === undefined) return null;
    return `${Math.min(i, j)}-${Math.max(i, j)}`;
  }

  valueForVertex(id: number): string | null {
    if (!this.displayed || isEdgeNotion(this.displayed.response.notion)) return null;
    const index = this.indexOf(id);
    return index < 0 ? null : String(index);
  }
}

export function circleLayout(index: number, n: number): [number, number] {
  const angle = (2 * Math.PI * index) / Math.max(n, 1) - Math.PI / 2;
  return [400 + 220 * Math.cos(angle), 300 + 220 * Math.sin(angle)];
}
