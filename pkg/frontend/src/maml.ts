/**
 * Client-side model of the flat page wire format.
 *
 * Objects keep their wire keys (including the hyphenated `font-type`) so a
 * fetched document round-trips through the editor without re-mapping.
 */

export interface GeoPoint {
  lat: number;
  lon: number;
}

export interface PageMeta {
  page_id?: string;
  title: string;
  language?: string;
  location?: GeoPoint;
  author_id?: string;
  community_id?: string;
  canvas_width?: number;
  canvas_height?: number;
  version?: number;
  created_at?: string;
  updated_at?: string;
}

interface Box {
  x: number;
  y: number;
  w: number;
  h: number;
}

export interface ImageObj extends Box {
  type: 'img';
  url: string;
  href?: string;
}

export interface TextObj extends Box {
  type: 'txt';
  txt: string;
  font: number;
  'font-type': string;
  color: string;
  href?: string;
}

export interface RectObj extends Box {
  type: 'rect';
  color: string;
}

export interface VideoObj extends Box {
  type: 'video';
  url: string;
  href?: string;
}

export interface TextFieldObj extends Box {
  type: 'text-field';
  name: string;
  placeholder: string;
}

export interface ButtonObj extends Box {
  type: 'button';
  label: string;
  action: string;
  color: string;
}

export type MamlObject =
  | ImageObj
  | TextObj
  | RectObj
  | VideoObj
  | TextFieldObj
  | ButtonObj;

export interface MamlDocument {
  page: PageMeta;
  objects: MamlObject[];
}

export const CANVAS_WIDTH = 1080;

const COLOR_RE = /^#[0-9a-f]{6}$/;
const LANG_RE = /^[A-Za-z]{2,8}(-[A-Za-z0-9]{1,8})*$/;

export interface Violation {
  rule: string;
  objectIndex: number | null;
  message: string;
}

export function contentHeight(objects: MamlObject[]): number {
  let bottom = 0;
  for (const o of objects) bottom = Math.max(bottom, Math.ceil(o.y + o.h));
  return bottom;
}

/** Mirror of the server-side invariants; publish stays disabled until empty. */
export function validateDocument(doc: MamlDocument): Violation[] {
  const out: Violation[] = [];
  const meta = doc.page ?? ({} as PageMeta);
  if ((meta.canvas_width ?? CANVAS_WIDTH) <= 0) {
    out.push({ rule: 'canvas-width', objectIndex: null, message: 'canvas width must be positive' });
  }
  if (meta.canvas_height !== undefined && meta.canvas_height < contentHeight(doc.objects)) {
    out.push({ rule: 'canvas-height', objectIndex: null, message: 'canvas shorter than content' });
  }
  if (meta.language !== undefined && !LANG_RE.test(meta.language)) {
    out.push({ rule: 'language-tag', objectIndex: null, message: `bad language tag ${meta.language}` });
  }
  if (meta.location) {
    if (meta.location.lat < -90 || meta.location.lat > 90) {
      out.push({ rule: 'lat-range', objectIndex: null, message: 'latitude outside [-90, 90]' });
    }
    if (meta.location.lon < -180 || meta.location.lon > 180) {
      out.push({ rule: 'lon-range', objectIndex: null, message: 'longitude outside [-180, 180]' });
    }
  }
  doc.objects.forEach((o, i) => {
    if (o.w <= 0 || o.h <= 0) {
      out.push({ rule: 'positive-extent', objectIndex: i, message: `w=${o.w} h=${o.h}` });
    }
    if (o.x < 0 || o.y < 0) {
      out.push({ rule: 'nonneg-origin', objectIndex: i, message: `x=${o.x} y=${o.y}` });
    }
    if ('color' in o && !COLOR_RE.test(o.color)) {
      out.push({ rule: 'color-format', objectIndex: i, message: `${(o as RectObj).color}` });
    }
    if ((o.type === 'img' || o.type === 'video') && !o.url) {
      out.push({ rule: 'empty-resource', objectIndex: i, message: 'url required' });
    }
    if (o.type === 'button' && !o.action) {
      out.push({ rule: 'empty-link', objectIndex: i, message: 'action required' });
    }
  });
  return out;
}

/**
 * Topmost object containing (x, y), or null. Containment is half-open
 * ([x, x+w) by [y, y+h)) to agree exactly with the server's picker.
 */
export function hitTest(objects: MamlObject[], x: number, y: number): number | null {
  for (let i = objects.length - 1; i >= 0; i--) {
    const o = objects[i];
    if (o.x <= x && x < o.x + o.w && o.y <= y && y < o.y + o.h) return i;
  }
  return null;
}

export function cloneDocument(doc: MamlDocument): MamlDocument {
  return JSON.parse(JSON.stringify(doc)) as MamlDocument;
}

export function emptyDocument(title = 'Untitled page'): MamlDocument {
  return { page: { title }, objects: [] };
}

/** Geometry fingerprint used by the publish-roundtrip parity checks. */
export function geometryOf(doc: MamlDocument): Array<[string, number, number, number, number]> {
  return doc.objects.map((o) => [o.type, o.x, o.y, o.w, o.h]);
}
