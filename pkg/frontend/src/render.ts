/** Canvas drawing of the graph with per-element curvature annotations. */

import { colorFor, labelFor, ZERO_COLOR } from './colors.js';
import { Editor } from './editor.js';
import { CurvatureValue } from './types.js';

export const NODE_RADIUS = 14;

export function draw(editor: Editor, canvas: HTMLCanvasElement): void {
  const ctx = canvas.getContext('2d');
  if (!ctx) return;
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  const values = editor.displayed?.response.values ?? {};

  ctx.lineWidth = 2.5;
  ctx.font = '13px system-ui, sans-serif';
  ctx.textAlign = 'center';
  ctx.textBaseline = 'middle';

  for (const [a, b] of editor.edges) {
    const from = editor.nodes.find((node) => node.id === a);
    const to = editor.nodes.find((node) => node.id === b);
    if (!from || !to) continue;
    const key = editor.valueForEdge(a, b);
    const value: CurvatureValue | undefined = key === null ? undefined : values[key];
    ctx.strokeStyle = value ? colorFor(value) : '#3a3f46';
    ctx.beginPath();
    ctx.moveTo(from.x, from.y);
    ctx.lineTo(to.x, to.y);
    ctx.stroke();
    if (value) {
      const mx = (from.x + to.x) / 2;
      const my = (from.y + to.y) / 2;
      const label = labelFor(value);
      ctx.fillStyle = '#ffffff';
      const width = ctx.measureText(label).width + 8;
      ctx.fillRect(mx - width / 2, my - 10, width, 20);
      ctx.fillStyle = colorFor(value);
      ctx.fillText(label, mx, my);
    }
  }

  for (const node of editor.nodes) {
    const key = editor.valueForVertex(node.id);
    const value: CurvatureValue | undefined = key === null ? undefined : values[key];
    ctx.beginPath();
    ctx.arc(node.x, node.y, NODE_RADIUS, 0, 2 * Math.PI);
    ctx.fillStyle = value ? colorFor(value) : '#4c6ef5';
    ctx.fill();
    ctx.strokeStyle = '#1b1e23';
    ctx.stroke();
    if (value) {
      ctx.fillStyle = '#ffffff';
      ctx.fillText(labelFor(value), node.x, node.y);
    }
  }

  if (editor.pendingRequest) {
    ctx.fillStyle = ZERO_COLOR;
    ctx.textAlign = 'left';
    ctx.fillText('computing...', 12, 16);
    ctx.textAlign = 'center';
  }
}
