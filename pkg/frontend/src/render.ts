/**
 * Rendering splits into pure layout (testable anywhere) and a thin DOM
 * painter. Objects paint in list order on an absolutely positioned canvas
 * scaled from the 1080-wide reference; media that fails to load swaps to a
 * placeholder box of the same geometry.
 */

import { CANVAS_WIDTH, MamlDocument, MamlObject, contentHeight } from './maml.js';

export interface PaintOp {
  index: number;
  kind: MamlObject['type'];
  /* css pixels after scaling */
  x: number;
  y: number;
  w: number;
  h: number;
  src?: string;
  href?: string;
  text?: string;
  color?: string;
  fontPx?: number;
  fontFamily?: string;
  label?: string;
  name?: string;
  placeholder?: string;
}

export const FALLBACK_FONT = 'Arial, Helvetica, sans-serif';

export function resolveUrl(url: string, baseUrl: string): string {
  if (/^https?:\/\//.test(url)) return url;
  if (url.startsWith('/')) return baseUrl.replace(/\/$/, '') + url;
  return 'https://' + url; // scheme-less wire urls like "www.example.com/x.png"
}

export function layoutOps(doc: MamlDocument, scale: number, baseUrl = ''): PaintOp[] {
  const ops: PaintOp[] = [];
  doc.objects.forEach((o, index) => {
    const op: PaintOp = {
      index,
      kind: o.type,
      x: o.x * scale,
      y: o.y * scale,
      w: o.w * scale,
      h: o.h * scale,
    };
    switch (o.type) {
      case 'img':
        op.src = resolveUrl(o.url, baseUrl);
        op.href = o.href;
        break;
      case 'txt':
        op.text = o.txt;
        op.color = o.color;
        op.fontPx = o.font * scale;
        op.fontFamily = `${o['font-type']}, ${FALLBACK_FONT}`;
        op.href = o.href;
        break;
      case 'rect':
        op.color = o.color;
        break;
      case 'video':
        op.src = resolveUrl(o.url, baseUrl);
        op.href = o.href;
        break;
      case 'text-field':
        op.name = o.name;
        op.placeholder = o.placeholder;
        break;
      case 'button':
        op.label = o.label;
        op.color = o.color;
        op.href = o.action;
        break;
    }
    ops.push(op);
  });
  return ops;
}

export function canvasCssHeight(doc: MamlDocument, scale: number): number {
  const h = doc.page.canvas_height ?? contentHeight(doc.objects);
  return h * scale;
}

/* ------------------------------------------------------------------ */
/* DOM painting (browser side; element factory injectable for tests)  */

export interface ElementLike {
  style: Record<string, string>;
  dataset: Record<string, string>;
  textContent: string | null;
  appendChild(child: ElementLike): void;
  setAttribute(name: string, value: string): void;
  addEventListener(name: string, handler: (event?: unknown) => void): void;
  replaceChildren?(...children: ElementLike[]): void;
  onerror?: (() => void) | null;
}

export type ElementFactory = (tag: string) => ElementLike;

function position(el: ElementLike, op: PaintOp): void {
  el.style.position = 'absolute';
  el.style.left = `${op.x}px`;
  el.style.top = `${op.y}px`;
  el.style.width = `${op.w}px`;
  el.style.height = `${op.h}px`;
  el.dataset.index = String(op.index);
}

function placeholderFor(op: PaintOp, create: ElementFactory): ElementLike {
  const box = create('div');
  position(box, op);
  box.setAttribute('class', 'media-placeholder');
  box.textContent = op.kind === 'video' ? 'video unavailable' : 'image unavailable';
  return box;
}

/** Paint one op; unloadable media swaps itself for a placeholder box. */
export function paintOp(op: PaintOp, create: ElementFactory, container: ElementLike): ElementLike {
  let el: ElementLike;
  switch (op.kind) {
    case 'img': {
      el = create('img');
      el.setAttribute('src', op.src ?? '');
      el.onerror = () => {
        const swap = placeholderFor(op, create);
        container.appendChild(swap);
        el.style.display = 'none';
      };
      break;
    }
    case 'video': {
      el = create('video');
      el.setAttribute('src', op.src ?? '');
      el.setAttribute('controls', 'controls');
      el.onerror = () => {
        const swap = placeholderFor(op, create);
        container.appendChild(swap);
        el.style.display = 'none';
      };
      break;
    }
    case 'txt': {
      el = create('div');
      el.textContent = op.text ?? '';
      el.style.color = op.color ?? '#000000';
      el.style.fontSize = `${op.fontPx}px`;
      el.style.fontFamily = op.fontFamily ?? FALLBACK_FONT;
      el.style.overflow = 'hidden';
      break;
    }
    case 'rect': {
      el = create('div');
      el.style.background = op.color ?? '#ffffff';
      break;
    }
    case 'text-field': {
      el = create('input');
      el.setAttribute('name', op.name ?? '');
      el.setAttribute('placeholder', op.placeholder ?? '');
      break;
    }
    case 'button': {
      el = create('button');
      el.textContent = op.label ?? '';
      el.style.background = op.color ?? '#dddddd';
      break;
    }
  }
  position(el, op);
  container.appendChild(el);
  return el;
}

/** Repaint a whole document into the container at the given css scale. */
export function renderPage(
  doc: MamlDocument,
  container: ElementLike,
  cssWidth: number,
  create: ElementFactory,
  baseUrl = '',
): PaintOp[] {
  const scale = cssWidth / (doc.page.canvas_width ?? CANVAS_WIDTH);
  if (container.replaceChildren) container.replaceChildren();
  container.style.position = 'relative';
  container.style.width = `${cssWidth}px`;
  container.style.height = `${canvasCssHeight(doc, scale)}px`;
  const ops = layoutOps(doc, scale, baseUrl);
  for (const op of ops) paintOp(op, create, container);
  return ops;
}
