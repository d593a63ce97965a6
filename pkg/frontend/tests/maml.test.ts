import { describe, expect, it } from 'vitest';

import {
  MamlDocument,
  contentHeight,
  emptyDocument,
  geometryOf,
  hitTest,
  validateDocument,
} from '../src/maml.js';

function doc(objects: MamlDocument['objects']): MamlDocument {
  return { page: { title: 't' }, objects };
}

describe('validateDocument', () => {
  it('accepts a well-formed page', () => {
    const d = doc([
      { type: 'img', url: 'www.example.com/logo.png', x: 43, y: 57, w: 390, h: 60 },
      { type: 'rect', x: 0, y: 28, w: 1080, h: 147, color: '#ffffff' },
    ]);
    expect(validateDocument(d)).toEqual([]);
  });

  it('flags zero extents and bad colors with rule ids', () => {
    const d = doc([
      { type: 'rect', x: 0, y: 0, w: 0, h: 10, color: '#ZZZZZZ' },
    ]);
    const rules = validateDocument(d).map((v) => v.rule);
    expect(rules).toContain('positive-extent');
    expect(rules).toContain('color-format');
  });

  it('flags canvas shorter than content', () => {
    const d = doc([{ type: 'rect', x: 0, y: 0, w: 10, h: 300, color: '#ffffff' }]);
    d.page.canvas_height = 100;
    expect(validateDocument(d).map((v) => v.rule)).toContain('canvas-height');
  });

  it('flags empty media urls and bad locations', () => {
    const d = doc([{ type: 'img', url: '', x: 0, y: 0, w: 10, h: 10 }]);
    d.page.location = { lat: 95, lon: 0 };
    const rules = validateDocument(d).map((v) => v.rule);
    expect(rules).toContain('empty-resource');
    expect(rules).toContain('lat-range');
  });
});

describe('hitTest', () => {
  const objects: MamlDocument['objects'] = [
    { type: 'rect', x: 0, y: 0, w: 100, h: 100, color: '#ffffff' },
    { type: 'img', url: 'a.png', x: 10, y: 10, w: 20, h: 20 },
  ];

  it('picks the topmost object', () => {
    expect(hitTest(objects, 15, 15)).toBe(1);
    expect(hitTest(objects, 90, 90)).toBe(0);
    expect(hitTest(objects, 500, 500)).toBeNull();
  });

  it('uses half-open edges', () => {
    expect(hitTest(objects, 10, 10)).toBe(1); // left/top edge contained
    expect(hitTest(objects, 30, 30)).toBe(0); // right/bottom edge excluded
    expect(hitTest(objects, 100, 50)).toBeNull();
  });

  it('returns null on an empty page', () => {
    expect(hitTest(emptyDocument().objects, 5, 5)).toBeNull();
  });
});

describe('geometry helpers', () => {
  it('contentHeight is the ceil of the lowest extent', () => {
    expect(contentHeight([{ type: 'rect', x: 0, y: 28, w: 10, h: 147, color: '#ffffff' }])).toBe(175);
    expect(contentHeight([])).toBe(0);
  });

  it('geometryOf fingerprints type and box only', () => {
    const d = doc([{ type: 'img', url: 'x', x: 1, y: 2, w: 3, h: 4 }]);
    expect(geometryOf(d)).toEqual([['img', 1, 2, 3, 4]]);
  });
});
