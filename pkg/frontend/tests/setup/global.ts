/**
 * Boots the Python edge server once for the whole test run, seeds it with
 * the news fixture (media uploaded through the public API, page published),
 * and records the connection info for the tests.
 *
 * The primary package must be installed (`pip install -e . --no-build-isolation`
 * at the repo root) so `python3 -m gaius.cli` resolves.
 */

import { ChildProcess, spawn } from 'node:child_process';
import { mkdtempSync, readFileSync, rmSync, writeFileSync } from 'node:fs';
import { createServer } from 'node:net';
import { tmpdir } from 'node:os';
import { join } from 'node:path';
import { fileURLToPath } from 'node:url';

const FRONTEND_ROOT = fileURLToPath(new URL('../..', import.meta.url));
const REPO_ROOT = join(FRONTEND_ROOT, '..');
export const SERVER_INFO_PATH = join(FRONTEND_ROOT, 'tests', '.server.json');

let proc: ChildProcess | null = null;
let workDir: string | null = null;

async function freePort(): Promise<number> {
  return await new Promise((resolve, reject) => {
    const srv = createServer();
    srv.listen(0, '127.0.0.1', () => {
      const address = srv.address();
      if (address && typeof address === 'object') {
        const port = address.port;
        srv.close(() => resolve(port));
      } else {
        srv.close(() => reject(new Error('no port')));
      }
    });
  });
}

async function waitForHealth(base: string, timeoutMs = 30_000): Promise<void> {
  const deadline = Date.now() + timeoutMs;
  while (Date.now() < deadline) {
    try {
      const res = await fetch(`${base}/v1/health`);
      if (res.ok) return;
    } catch {
      /* not up yet */
    }
    await new Promise((r) => setTimeout(r, 100));
  }
  throw new Error(`edge server at ${base} never became healthy`);
}

interface NewsSeed {
  pageId: string;
  token: string;
}

async function seedNewsFixture(base: string): Promise<NewsSeed> {
  const register = await fetch(`${base}/v1/users`, {
    method: 'POST',
    headers: { 'Content-Type': 'application/json' },
    body: JSON.stringify({ language: 'en-IN', location: { lat: 12.97, lon: 77.59 } }),
  });
  const user = (await register.json()) as { token: string };
  const auth = { Authorization: `Bearer ${user.token}` };

  const newsDir = join(REPO_ROOT, 'fixtures', 'corpus', 'news');
  const docText = readFileSync(join(newsDir, 'page.maml'), 'utf-8');
  const doc = JSON.parse(docText) as {
    page: Record<string, unknown>;
    objects: Array<{ type: string; url?: string }>;
  };
  const manifest = JSON.parse(readFileSync(join(newsDir, 'manifest.json'), 'utf-8')) as {
    resources: Array<{ url: string; file?: string }>;
  };
  const fileByUrl = new Map(manifest.resources.map((r) => [r.url, r.file]));
  const mediaUrls = new Set(
    doc.objects.filter((o) => o.type === 'img' || o.type === 'video').map((o) => o.url as string),
  );
  for (const url of mediaUrls) {
    const file = fileByUrl.get(url);
    if (!file) throw new Error(`news fixture misses resource for ${url}`);
    const bytes = readFileSync(join(newsDir, file));
    const res = await fetch(`${base}/v1/media?kind=image&url=${encodeURIComponent(url)}`, {
      method: 'POST',
      headers: auth,
      body: bytes,
    });
    if (!res.ok) throw new Error(`media upload for ${url} failed: ${res.status}`);
  }
  delete doc.page.author_id;
  const published = await fetch(`${base}/v1/pages`, {
    method: 'POST',
    headers: { ...auth, 'Content-Type': 'application/json' },
    body: JSON.stringify(doc),
  });
  if (!published.ok) throw new Error(`news publish failed: ${published.status} ${await published.text()}`);
  const { page_id } = (await published.json()) as { page_id: string };
  return { pageId: page_id, token: user.token };
}

export default async function setup(): Promise<() => Promise<void>> {
  const port = await freePort();
  workDir = mkdtempSync(join(tmpdir(), 'gaius-studio-test-'));
  const configPath = join(workDir, 'edge.conf');
  writeFileSync(
    configPath,
    `listen_host = 127.0.0.1\nlisten_port = ${port}\nstore_path = ${join(workDir, 'store')}\n`,
  );
  proc = spawn('python3', ['-m', 'gaius.cli', 'serve', '--config', configPath], {
    cwd: REPO_ROOT,
    stdio: ['ignore', 'pipe', 'pipe'],
  });
  const base = `http://127.0.0.1:${port}`;
  await waitForHealth(base);
  const seed = await seedNewsFixture(base);
  writeFileSync(
    SERVER_INFO_PATH,
    JSON.stringify({ base, token: seed.token, newsPageId: seed.pageId }),
  );

  return async () => {
    if (proc && proc.exitCode === null) {
      proc.kill('SIGINT');
      await new Promise((resolve) => proc!.once('exit', resolve));
    }
    if (workDir) rmSync(workDir, { recursive: true, force: true });
    rmSync(SERVER_INFO_PATH, { force: true });
  };
}
