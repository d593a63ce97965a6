/**
 * Browser entry point: wires the editor, renderer and edge client to the
 * studio chrome (palette, canvas, fidelity toggle with weight badge,
 * community browser, ad form, publish button).
 */

import { EdgeClient, ValidationRejected } from './api.js';
import {
  EditorState,
  Gesture,
  applyGesture,
  canPublish,
  newEditor,
  violations,
} from './editor.js';
import { CANVAS_WIDTH, MamlDocument, MamlObject, emptyDocument } from './maml.js';
import { ElementLike, renderPage } from './render.js';

const CSS_WIDTH = 540; // canvas shown at half reference scale

interface StudioDom {
  canvas: HTMLElement;
  badge: HTMLElement;
  fidelity: HTMLSelectElement;
  publish: HTMLButtonElement;
  status: HTMLElement;
  issues: HTMLElement;
  pageIdInput: HTMLInputElement;
  communityList: HTMLElement;
  adForm: HTMLFormElement;
}

const PALETTE: Record<string, () => MamlObject> = {
  text: () => ({
    type: 'txt',
    txt: 'New text',
    x: 40,
    y: 40,
    w: 400,
    h: 48,
    font: 24,
    'font-type': 'Arial',
    color: '#222222',
  }),
  image: () => ({ type: 'img', url: '/v1/media/placeholder?fidelity=high', x: 40, y: 120, w: 400, h: 260 }),
  rect: () => ({ type: 'rect', x: 20, y: 20, w: 1040, h: 120, color: '#eef2f6' }),
  video: () => ({ type: 'video', url: '/v1/media/placeholder?fidelity=high', x: 40, y: 420, w: 640, h: 360 }),
  field: () => ({ type: 'text-field', name: 'field1', placeholder: 'Type here', x: 40, y: 820, w: 600, h: 56 }),
  button: () => ({ type: 'button', label: 'Go', action: '/v1/pages', x: 40, y: 900, w: 220, h: 64, color: '#1a7f4b' }),
};

export class Studio {
  state: EditorState;
  client: EdgeClient;
  pageId: string | null = null;
  fidelity = 'medium';
  lastPointer: { x: number; y: number } | null = null;

  constructor(
    private dom: StudioDom,
    baseUrl: string,
  ) {
    this.client = new EdgeClient(baseUrl);
    this.state = newEditor(emptyDocument());
  }

  async init(): Promise<void> {
    const saved = localStorage.getItem('gaius-token');
    if (saved) {
      this.client.token = saved;
    } else {
      const user = await this.client.register({ language: navigator.language || 'en' });
      localStorage.setItem('gaius-token', user.token);
    }
    this.bind();
    await this.refreshCommunities();
    this.repaint();
  }

  private bind(): void {
    for (const [name, make] of Object.entries(PALETTE)) {
      document.querySelector(`[data-add="${name}"]`)?.addEventListener('click', () => {
        this.gesture({ kind: 'add', object: make() });
      });
    }
    document.querySelector('[data-act="undo"]')?.addEventListener('click', () => this.gesture({ kind: 'undo' }));
    document.querySelector('[data-act="redo"]')?.addEventListener('click', () => this.gesture({ kind: 'redo' }));
    document.querySelector('[data-act="remove"]')?.addEventListener('click', () => this.gesture({ kind: 'remove' }));

    const canvas = this.dom.canvas;
    canvas.addEventListener('pointerdown', (ev) => this.onPointerDown(ev as PointerEvent));
    canvas.addEventListener('pointermove', (ev) => this.onPointerMove(ev as PointerEvent));
    canvas.addEventListener('pointerup', () => this.gesture({ kind: 'end' }));

    this.dom.fidelity.addEventListener('change', () => {
      void this.toggleFidelity(this.dom.fidelity.value);
    });
    this.dom.publish.addEventListener('click', () => void this.publish());
    this.dom.pageIdInput.addEventListener('change', () => {
      void this.open(this.dom.pageIdInput.value.trim());
    });
    this.dom.adForm.addEventListener('submit', (ev) => {
      ev.preventDefault();
      void this.submitAd();
    });
  }

  /* -- editing ------------------------------------------------------- */

  private canvasPoint(ev: PointerEvent): { x: number; y: number } {
    const rect = this.dom.canvas.getBoundingClientRect();
    const scale = CANVAS_WIDTH / CSS_WIDTH;
    return { x: (ev.clientX - rect.left) * scale, y: (ev.clientY - rect.top) * scale };
  }

  private onPointerDown(ev: PointerEvent): void {
    const p = this.canvasPoint(ev);
    this.gesture({ kind: 'press', x: p.x, y: p.y });
    this.lastPointer = p;
    this.gesture({ kind: ev.shiftKey ? 'beginResize' : 'beginDrag' });
  }

  private onPointerMove(ev: PointerEvent): void {
    if (!this.lastPointer || this.state.mode === 'idle') return;
    const p = this.canvasPoint(ev);
    const dx = p.x - this.lastPointer.x;
    const dy = p.y - this.lastPointer.y;
    this.lastPointer = p;
    this.gesture(this.state.mode === 'drag' ? { kind: 'move', dx, dy } : { kind: 'pinch', dw: dx, dh: dy });
  }

  gesture(g: Gesture): void {
    applyGesture(this.state, g);
    this.repaint();
  }

  /* -- server round trips --------------------------------------------- */

  async publish(): Promise<void> {
    if (!canPublish(this.state)) return;
    this.dom.publish.disabled = true; // optimistic disable while pending
    try {
      const result = await this.client.publish(this.state.doc);
      this.pageId = result.page_id;
      this.dom.status.textContent = `published ${result.page_id} (v${result.version})`;
      this.state.dirty = false;
      await this.open(result.page_id); // show the served round trip
    } catch (err) {
      if (err instanceof ValidationRejected) {
        this.showIssues(err.violations.map((v) => `${v.rule}: ${v.message}`));
      } else {
        this.dom.status.textContent = String(err);
      }
    } finally {
      this.dom.publish.disabled = !canPublish(this.state);
    }
  }

  async open(pageId: string): Promise<void> {
    if (!pageId) return;
    const t0 = performance.now();
    const fetched = await this.client.fetchPage(pageId, this.fidelity);
    this.pageId = pageId;
    this.state = newEditor(fetched.doc, this.client.token);
    this.repaint();
    this.dom.badge.textContent = formatBytes(fetched.sizeBytes);
    this.dom.badge.dataset.bytes = String(fetched.sizeBytes);
    if (fetched.metricsToken) {
      void this.client.postMetrics(fetched.metricsToken, performance.now() - t0);
    }
  }

  async toggleFidelity(fidelity: string): Promise<void> {
    this.fidelity = fidelity;
    if (this.pageId) await this.open(this.pageId);
  }

  async refreshCommunities(): Promise<void> {
    const communities = await this.client.communities();
    this.dom.communityList.replaceChildren(
      ...communities.map((c) => {
        const li = document.createElement('li');
        li.textContent = `${c.name} (${c.visibility})`;
        return li;
      }),
    );
  }

  async submitAd(): Promise<void> {
    const data = new FormData(this.dom.adForm);
    try {
      const adId = await this.client.submitAd({
        creatives: { text_body: String(data.get('text_body') || '') || undefined },
        click_href: String(data.get('click_href') || ''),
        home_community_id: String(data.get('community') || ''),
        target_impressions: Number(data.get('impressions') || 1000),
      });
      const quote = await this.client.quote(adId);
      this.dom.status.textContent = `ad ${adId}: ${quote.weekly_charge} per week`;
    } catch (err) {
      this.dom.status.textContent = String(err);
    }
  }

  /* -- painting --------------------------------------------------------- */

  repaint(): void {
    renderPage(
      this.state.doc,
      this.dom.canvas as unknown as ElementLike,
      CSS_WIDTH,
      (tag) => document.createElement(tag) as unknown as ElementLike,
      this.client.baseUrl,
    );
    this.highlightSelection();
    this.dom.publish.disabled = !canPublish(this.state);
    this.showIssues(violations(this.state).map((v) => `${v.rule} at object ${v.objectIndex}`));
  }

  private highlightSelection(): void {
    if (this.state.selected === null) return;
    const el = this.dom.canvas.querySelector(`[data-index="${this.state.selected}"]`);
    el?.classList.add('selected');
  }

  private showIssues(lines: string[]): void {
    this.dom.issues.replaceChildren(
      ...lines.map((line) => {
        const li = document.createElement('li');
        li.textContent = line;
        return li;
      }),
    );
  }
}

function formatBytes(n: number): string {
  if (n >= 1024 * 1024) return `${(n / (1024 * 1024)).toFixed(2)} MB`;
  if (n >= 1024) return `${(n / 1024).toFixed(1)} kB`;
  return `${n} B`;
}

export function boot(): void {
  const dom: StudioDom = {
    canvas: document.getElementById('canvas')!,
    badge: document.getElementById('weight-badge')!,
    fidelity: document.getElementById('fidelity') as HTMLSelectElement,
    publish: document.getElementById('publish') as HTMLButtonElement,
    status: document.getElementById('status')!,
    issues: document.getElementById('issues')!,
    pageIdInput: document.getElementById('page-id') as HTMLInputElement,
    communityList: document.getElementById('communities')!,
    adForm: document.getElementById('ad-form') as HTMLFormElement,
  };
  const studio = new Studio(dom, window.location.origin);
  void studio.init();
  (window as unknown as { studio: Studio }).studio = studio;
}

if (typeof document !== 'undefined' && document.getElementById('canvas')) {
  boot();
}
