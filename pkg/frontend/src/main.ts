/** Wires the editor, scheduler, client and canvas to the page.
 *
 * Interaction: click empty canvas to add a vertex; click one vertex then
 * another to add an edge; shift-click deletes a vertex or a clicked edge.
 * All curvature numbers come from the service; this file only formats them.
 */

import { CurvatureClient } from './client.js';
import { Editor } from './editor.js';
import { draw, NODE_RADIUS } from './render.js';
import { RequestScheduler } from './scheduler.js';
import { CurvatureRequest, CurvatureResponse, Notion, isEdgeNotion } from './types.js';

const canvas = document.getElementById('canvas') as HTMLCanvasElement;
const notionSelect = document.getElementById('notion') as HTMLSelectElement;
const idlenessRow = document.getElementById('idleness-row') as HTMLDivElement;
const idlenessSlider = document.getElementById('idleness') as HTMLInputElement;
const idlenessLabel = document.getElementById('idleness-label') as HTMLSpanElement;
const dimensionRow = document.getElementById('dimension-row') as HTMLDivElement;
const dimensionInput = document.getElementById('dimension') as HTMLInputElement;
const importBox = document.getElementById('import-box') as HTMLTextAreaElement;
const importButton = document.getElementById('import-btn') as HTMLButtonElement;
const exportButton = document.getElementById('export-btn') as HTMLButtonElement;
const clearButton = document.getElementById('clear-btn') as HTMLButtonElement;
const statusLine = document.getElementById('status') as HTMLDivElement;

// exact presets shown on the slider: 0, 1/4, 1/2, 3/4, 1
const IDLENESS_PRESETS = ['0', '1/4', '1/2', '3/4', '1'];

const editor = new Editor();
const client = new CurvatureClient('');
const scheduler = new RequestScheduler<CurvatureRequest, CurvatureResponse>(
  (payload) => client.curvature(payload),
  (revision, response) => {
    editor.pendingRequest = false;
    editor.acceptResponse(revision, response);
    draw(editor, canvas);
    statusLine.textContent = '';
  },
  150,
  (error) => {
    editor.pendingRequest = false;
    statusLine.textContent = `service error: ${String(error)}`;
    draw(editor, canvas);
  },
);

function currentParams(): CurvatureRequest['params'] {
  if (editor.notion === 'ollivier_idleness') {
    return { idleness: IDLENESS_PRESETS[Number(idlenessSlider.value)] };
  }
  if (editor.notion === 'bakry_emery_dimension') {
    return { dimension: dimensionInput.value.trim() || 'inf' };
  }
  return undefined;
}

editor.onChange(() => {
  draw(editor, canvas);
  statusLine.textContent = '';
  if (editor.vertexCount === 0) {
    scheduler.cancel();
    editor.pendingRequest = false;
    return;
  }
  editor.pendingRequest = true;
  scheduler.schedule({
    revision: editor.revision,
    payload: {
      adjacency: editor.exportAdjacency(),
      notion: editor.notion,
      params: currentParams(),
    },
  });
});

editor.onDisplay(() => {
  if (editor.importError) {
    statusLine.textContent = `import error: ${editor.importError}`;
  }
  draw(editor, canvas);
});

let pendingEdgeStart: number | null = null;

canvas.addEventListener('click', (event) => {
  const rect = canvas.getBoundingClientRect();
  const x = event.clientX - rect.left;
  const y = event.clientY - rect.top;
  const hit = editor.nodes.find(
    (node) => (node.x - x) ** 2 + (node.y - y) ** 2 <= NODE_RADIUS ** 2,
  );
  if (event.shiftKey) {
    if (hit) {
      editor.deleteVertex(hit.id);
    } else {
      const edge = findEdgeNear(x, y);
      if (edge) editor.deleteEdge(edge[0], edge[1]);
    }
    pendingEdgeStart = null;
    return;
  }
  if (hit) {
    if (pendingEdgeStart !== null && pendingEdgeStart !== hit.id) {
      editor.addEdge(pendingEdgeStart, hit.id); // duplicates rejected inside
      pendingEdgeStart = null;
    } else {
      pendingEdgeStart = hit.id;
    }
    return;
  }
  pendingEdgeStart = null;
  editor.addVertex(x, y);
});

function findEdgeNear(x: number, y: number): [number, number] | null {
  for (const [a, b] of editor.edges) {
    const from = editor.nodes.find((node) => node.id === a);
    const to = editor.nodes.find((node) => node.id === b);
    if (!from || !to) continue;
    const lengthSq = (to.x - from.x) ** 2 + (to.y - from.y) ** 2;
    if (lengthSq === 0) continue;
    let t = ((x - from.x) * (to.x - from.x) + (y - from.y) * (to.y - from.y)) / lengthSq;
    t = Math.max(0, Math.min(1, t));
    const px = from.x + t * (to.x - from.x);
    const py = from.y + t * (to.y - from.y);
    if ((px - x) ** 2 + (py - y) ** 2 < 36) return [a, b];
  }
  return null;
}

notionSelect.addEventListener('change', () => {
  const notion = notionSelect.value as Notion;
  idlenessRow.hidden = notion !== 'ollivier_idleness';
  dimensionRow.hidden = notion !== 'bakry_emery_dimension';
  editor.selectNotion(notion, currentParams() ?? {});
});

idlenessSlider.addEventListener('input', () => {
  idlenessLabel.textContent = IDLENESS_PRESETS[Number(idlenessSlider.value)];
  if (editor.notion === 'ollivier_idleness') {
    editor.selectNotion('ollivier_idleness', currentParams() ?? {});
  }
});

dimensionInput.addEventListener('change', () => {
  if (editor.notion === 'bakry_emery_dimension') {
    const raw = dimensionInput.value.trim();
    if (raw !== 'inf' && !(Number(raw) > 0)) {
      statusLine.textContent = 'dimension must be positive or "inf"';
      return;
    }
    editor.selectNotion('bakry_emery_dimension', currentParams() ?? {});
  }
});

importButton.addEventListener('click', () => {
  editor.importAdjacency(importBox.value);
});

exportButton.addEventListener('click', () => {
  importBox.value = editor.exportAdjacency();
});

clearButton.addEventListener('click', () => {
  scheduler.cancel();
  editor.clear();
});

const legend = isEdgeNotion(editor.notion) ? 'edge values' : 'vertex values';
statusLine.textContent = `click to draw (${legend} update live)`;
draw(editor, canvas);
