/**
 * Studio acceptance against a live edge server (spawned in global setup):
 * hit-test parity with the server picker, publish-roundtrip geometry,
 * and the fidelity toggle's weight badge.
 */

import { readFileSync } from 'node:fs';
import { join } from 'node:path';
import { fileURLToPath } from 'node:url';
import { beforeAll, describe, expect, it } from 'vitest';

import { EdgeClient, ValidationRejected } from '../src/api.js';
import { applyGesture, newEditor } from '../src/editor.js';
import { MamlDocument, contentHeight, geometryOf, hitTest } from '../src/maml.js';

const FRONTEND_ROOT = fileURLToPath(new URL('..', import.meta.url));
const REPO_ROOT = join(FRONTEND_ROOT, '..');

interface ServerInfo {
  base: string;
  token: string;
  newsPageId: string;
}

let info: ServerInfo;
let client: EdgeClient;

beforeAll(() => {
  info = JSON.parse(
    readFileSync(join(FRONTEND_ROOT, 'tests', '.server.json'), 'utf-8'),
  ) as ServerInfo;
  client = new EdgeClient(info.base, info.token);
});

function fixtureDoc(relpath: string): MamlDocument {
  return JSON.parse(readFileSync(join(REPO_ROOT, relpath), 'utf-8')) as MamlDocument;
}

const FIXTURE_PAGES = [
  'fixtures/maml/table_demo.maml',
  'fixtures/maml/form.maml',
  'fixtures/maml/empty.maml',
  'fixtures/maml/rss_feed5.maml',
  'fixtures/corpus/news/page.maml',
];

describe('hit-test parity with the server (A10)', () => {
  it('matches on a 10x10 grid over five fixture pages', async () => {
    for (const path of FIXTURE_PAGES) {
      const doc = fixtureDoc(path);
      const width = doc.page.canvas_width ?? 1080;
      const height = Math.max(doc.page.canvas_height ?? contentHeight(doc.objects), 100);
      const points: Array<[number, number]> = [];
      for (let i = 0; i < 10; i++) {
        for (let j = 0; j < 10; j++) {
          points.push([((i + 0.5) * width) / 10, ((j + 0.5) * height) / 10]);
        }
      }
      const serverPicks = await client.hittest(doc, points);
      const clientPicks = points.map(([x, y]) => hitTest(doc.objects, x, y));
      expect(serverPicks, path).toEqual(clientPicks);
    }
  });
});

describe('publish roundtrip (A10)', () => {
  it('served geometry equals the editor state', async () => {
    const state = newEditor({ page: { title: 'built in studio' }, objects: [] });
    applyGesture(state, {
      kind: 'add',
      object: { type: 'rect', x: 0, y: 0, w: 1080, h: 220, color: '#f4f1ea' },
    });
    applyGesture(state, {
      kind: 'add',
      object: {
        type: 'txt', txt: 'Hyperlocal notice', x: 48, y: 40, w: 900, h: 56,
        font: 32, 'font-type': 'Arial', color: '#101010',
      },
    });
    applyGesture(state, {
      kind: 'add',
      object: { type: 'img', url: 'www.example.com/logo.png', x: 48, y: 120, w: 390, h: 60 },
    });
    applyGesture(state, { kind: 'select', index: 2 });
    applyGesture(state, { kind: 'beginDrag' });
    applyGesture(state, { kind: 'move', dx: 12.4, dy: 7.9 });
    applyGesture(state, { kind: 'end' });

    const { page_id } = await client.publish(state.doc);
    const served = await client.fetchPage(page_id, 'high');
    expect(geometryOf(served.doc)).toEqual(geometryOf(state.doc));
  });

  it('surfaces server rule ids on invalid documents', async () => {
    const bad: MamlDocument = {
      page: { title: 'broken' },
      objects: [{ type: 'rect', x: 0, y: 0, w: 10, h: 10, color: '#XYZXYZ' }],
    };
    await expect(client.publish(bad)).rejects.toSatisfy((err: unknown) => {
      return err instanceof ValidationRejected &&
        err.violations.some((v) => v.rule === 'color-format' || v.rule === 'parse');
    });
  });
});

describe('fidelity toggle (A10)', () => {
  it('weight badge tracks the size header and low/high <= 0.25 on the news fixture', async () => {
    const low = await client.fetchPage(info.newsPageId, 'low');
    const high = await client.fetchPage(info.newsPageId, 'high');
    expect(low.fidelity).toBe('low');
    expect(high.fidelity).toBe('high');
    expect(low.sizeBytes).toBeGreaterThan(0);
    expect(low.sizeBytes / high.sizeBytes).toBeLessThanOrEqual(0.25);
  });

  it('toggling back restores the prior bytes', async () => {
    const first = await client.fetchPage(info.newsPageId, 'high');
    await client.fetchPage(info.newsPageId, 'low');
    const again = await client.fetchPage(info.newsPageId, 'high');
    expect(again.sizeBytes).toBe(first.sizeBytes);
    expect(JSON.stringify(again.doc)).toBe(JSON.stringify(first.doc));
  });

  it('reports client load time through the metrics token', async () => {
    const fetched = await client.fetchPage(info.newsPageId, 'low');
    await client.postMetrics(fetched.metricsToken, 321, 'wifi', 'vitest');
  });
});
