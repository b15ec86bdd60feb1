/** End-to-end conformance of the client pipeline against recorded service
 * bodies: editor edits feed the debounced scheduler, responses gate on the
 * revision counter, and rendering derives labels/colours only from the
 * response values.
 */

import { afterEach, beforeEach, describe, expect, it, vi } from 'vitest';
import { colorFor, labelFor, POSITIVE_COLOR, ZERO_COLOR } from '../src/colors.js';
import { Editor } from '../src/editor.js';
import { RequestScheduler } from '../src/scheduler.js';
import { CurvatureRequest, CurvatureResponse } from '../src/types.js';

const K4_TEXT = '[[0,1,1,1],[1,0,1,1],[1,1,0,1],[1,1,1,0]]';

/** What the service returns for a complete graph on four vertices. */
function fakeService(request: CurvatureRequest): CurvatureResponse {
  const edges = ['0-1', '0-2', '0-3', '1-2', '1-3', '2-3'];
  const values: CurvatureResponse['values'] = {};
  if (request.notion === 'ollivier') {
    for (const key of edges) values[key] = { fraction: '2/3', decimal: 0.667 };
  } else if (request.notion === 'ollivier_idleness') {
    const idle = request.params?.idleness ?? '0';
    const value =
      idle === '1' ? { fraction: '0', decimal: 0.0 } : { fraction: '2/3', decimal: 0.667 };
    for (const key of edges) values[key] = value;
  }
  return { notion: request.notion, kind: 'edge', values };
}

function pipeline() {
  const editor = new Editor();
  const sentRequests: CurvatureRequest[] = [];
  const scheduler = new RequestScheduler<CurvatureRequest, CurvatureResponse>(
    async (request) => {
      sentRequests.push(request);
      return fakeService(request);
    },
    (revision, response) => {
      editor.acceptResponse(revision, response);
    },
  );
  editor.onChange(() => {
    if (editor.importError || editor.vertexCount === 0) {
      scheduler.cancel();
      return;
    }
    scheduler.schedule({
      revision: editor.revision,
      payload: {
        adjacency: editor.exportAdjacency(),
        notion: editor.notion,
        params: editor.notion === 'ollivier_idleness' ? editor.params : undefined,
      },
    });
  });
  return { editor, scheduler, sentRequests };
}

describe('UI conformance', () => {
  beforeEach(() => vi.useFakeTimers());
  afterEach(() => vi.useRealTimers());

  it('imported complete graph with the transport notion shows 0.667 in green on every edge', async () => {
    const { editor } = pipeline();
    editor.importAdjacency(K4_TEXT);
    await vi.runAllTimersAsync();
    expect(editor.displayed).not.toBeNull();
    expect(editor.edges).toHaveLength(6);
    for (const [a, b] of editor.edges) {
      const key = editor.valueForEdge(a, b)!;
      const value = editor.displayed!.response.values[key];
      expect(labelFor(value)).toBe('0.667');
      expect(colorFor(value)).toBe(POSITIVE_COLOR);
    }
  });

  it('toggling idleness to 1 shows 0.000 in grey on every edge', async () => {
    const { editor } = pipeline();
    editor.importAdjacency(K4_TEXT);
    await vi.runAllTimersAsync();
    editor.selectNotion('ollivier_idleness', { idleness: '1' });
    await vi.runAllTimersAsync();
    for (const [a, b] of editor.edges) {
      const key = editor.valueForEdge(a, b)!;
      const value = editor.displayed!.response.values[key];
      expect(labelFor(value)).toBe('0.000');
      expect(colorFor(value)).toBe(ZERO_COLOR);
    }
  });

  it('a burst of edits settles into exactly one request for the final revision', async () => {
    const { editor, sentRequests } = pipeline();
    const a = editor.addVertex(0, 0);
    const b = editor.addVertex(10, 0);
    const c = editor.addVertex(20, 0);
    editor.addEdge(a, b);
    editor.addEdge(b, c);
    await vi.runAllTimersAsync();
    expect(sentRequests).toHaveLength(1);
    expect(sentRequests[0].adjacency).toBe(editor.exportAdjacency());
    // one more settled edit round-trips exactly once more
    editor.addEdge(a, c);
    await vi.runAllTimersAsync();
    expect(sentRequests).toHaveLength(2);
  });

  it('clearing the canvas issues no request', async () => {
    const { editor, sentRequests } = pipeline();
    editor.importAdjacency(K4_TEXT);
    await vi.runAllTimersAsync();
    const before = sentRequests.length;
    editor.clear();
    await vi.runAllTimersAsync();
    expect(sentRequests).toHaveLength(before);
    expect(editor.displayed).toBeNull();
  });

  it('stale responses are dropped silently', async () => {
    const { editor } = pipeline();
    editor.importAdjacency(K4_TEXT);
    const stale = editor.revision;
    editor.addVertex(50, 50);
    const accepted = editor.acceptResponse(stale, {
      notion: 'ollivier',
      kind: 'edge',
      values: {},
    });
    expect(accepted).toBe(false);
    expect(editor.displayed).toBeNull();
  });
});
