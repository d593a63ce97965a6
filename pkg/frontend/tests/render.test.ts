import { describe, expect, it } from 'vitest';

import { MamlDocument } from '../src/maml.js';
import {
  ElementLike,
  canvasCssHeight,
  layoutOps,
  paintOp,
  renderPage,
  resolveUrl,
} from '../src/render.js';

const TABLE_IMAGE: MamlDocument = {
  page: { title: 'demo', canvas_width: 1080 },
  objects: [
    { type: 'img', url: 'www.example.com/logo.png', x: 43.0, y: 57.0, w: 390, h: 60 },
  ],
};

describe('layoutOps', () => {
  it('paints the wire-format image example at 1:1', () => {
    const [op] = layoutOps(TABLE_IMAGE, 1.0);
    expect([op.x, op.y, op.w, op.h]).toEqual([43, 57, 390, 60]);
    expect(op.kind).toBe('img');
    expect(op.src).toBe('https://www.example.com/logo.png');
  });

  it('scales geometry and fonts together', () => {
    const doc: MamlDocument = {
      page: { title: 't' },
      objects: [
        { type: 'txt', txt: 'x', x: 100, y: 200, w: 400, h: 60, font: 20, 'font-type': 'Roboto', color: '#101010' },
      ],
    };
    const [op] = layoutOps(doc, 0.5);
    expect([op.x, op.y, op.w, op.h]).toEqual([50, 100, 200, 30]);
    expect(op.fontPx).toBe(10);
    expect(op.fontFamily).toContain('Roboto');
  });

  it('produces nothing for an empty page', () => {
    expect(layoutOps({ page: { title: '' }, objects: [] }, 1)).toEqual([]);
    expect(canvasCssHeight({ page: { title: '' }, objects: [] }, 1)).toBe(0);
  });

  it('keeps paint order', () => {
    const doc: MamlDocument = {
      page: { title: 't' },
      objects: [
        { type: 'rect', x: 0, y: 0, w: 10, h: 10, color: '#ffffff' },
        { type: 'img', url: 'a.png', x: 0, y: 0, w: 5, h: 5 },
      ],
    };
    expect(layoutOps(doc, 1).map((o) => o.kind)).toEqual(['rect', 'img']);
  });
});

describe('resolveUrl', () => {
  it('passes absolute urls through', () => {
    expect(resolveUrl('https://cdn.example/x.jpg', 'http://edge.local')).toBe('https://cdn.example/x.jpg');
  });
  it('prefixes server-relative media urls with the edge base', () => {
    expect(resolveUrl('/v1/media/abc?fidelity=low', 'http://edge.local')).toBe(
      'http://edge.local/v1/media/abc?fidelity=low',
    );
  });
  it('treats scheme-less wire urls as https', () => {
    expect(resolveUrl('www.example.com/logo.png', '')).toBe('https://www.example.com/logo.png');
  });
});

/* fake DOM just rich enough for the painter */

class FakeElement implements ElementLike {
  style: Record<string, string> = {};
  dataset: Record<string, string> = {};
  textContent: string | null = null;
  attributes: Record<string, string> = {};
  children: FakeElement[] = [];
  onerror: (() => void) | null = null;
  constructor(public tag: string) {}
  appendChild(child: ElementLike): void {
    this.children.push(child as FakeElement);
  }
  setAttribute(name: string, value: string): void {
    this.attributes[name] = value;
  }
  addEventListener(): void {}
  replaceChildren(...children: ElementLike[]): void {
    this.children = children as FakeElement[];
  }
}

const createFake = (tag: string) => new FakeElement(tag);

describe('paintOp', () => {
  it('positions elements absolutely with the object index recorded', () => {
    const container = new FakeElement('div');
    const [op] = layoutOps(TABLE_IMAGE, 1.0);
    const el = paintOp(op, createFake, container) as FakeElement;
    expect(el.tag).toBe('img');
    expect(el.style.left).toBe('43px');
    expect(el.style.top).toBe('57px');
    expect(el.style.width).toBe('390px');
    expect(el.dataset.index).toBe('0');
    expect(container.children).toContain(el);
  });

  it('swaps unloadable media for a placeholder box of the same geometry', () => {
    const container = new FakeElement('div');
    const [op] = layoutOps(TABLE_IMAGE, 1.0);
    const el = paintOp(op, createFake, container) as FakeElement;
    expect(container.children.length).toBe(1);
    el.onerror?.();
    expect(container.children.length).toBe(2);
    const placeholder = container.children[1];
    expect(placeholder.attributes.class).toBe('media-placeholder');
    expect(placeholder.style.left).toBe('43px');
    expect(placeholder.style.width).toBe('390px');
    expect(el.style.display).toBe('none');
  });
});

describe('renderPage', () => {
  it('paints every object scaled into the container', () => {
    const container = new FakeElement('div');
    const doc: MamlDocument = {
      page: { title: 't', canvas_width: 1080, canvas_height: 800 },
      objects: [
        { type: 'rect', x: 0, y: 0, w: 1080, h: 400, color: '#eeeeee' },
        { type: 'txt', txt: 'hello', x: 40, y: 40, w: 500, h: 60, font: 24, 'font-type': 'Arial', color: '#111111' },
        { type: 'button', label: 'Go', action: '/x', x: 40, y: 700, w: 200, h: 60, color: '#1a7f4b' },
      ],
    };
    const ops = renderPage(doc, container, 540, createFake);
    expect(ops.length).toBe(3);
    expect(container.children.length).toBe(3);
    expect(container.style.width).toBe('540px');
    expect(container.style.height).toBe('400px'); // 800 * 0.5
    expect(container.children[2].tag).toBe('button');
    expect(container.children[2].textContent).toBe('Go');
  });
});
