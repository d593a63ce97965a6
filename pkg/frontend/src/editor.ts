/**
 * Editor state machine: selection, drag, pinch-resize, undo.
 *
 * Every edit snaps to integer pixels and keeps extents at 8x8 or larger;
 * gestures are plain data so a recorded script replays deterministically.
 */

import {
  MamlDocument,
  MamlObject,
  Violation,
  cloneDocument,
  contentHeight,
  hitTest,
  validateDocument,
} from './maml.js';

export const MIN_EXTENT = 8;
export const UNDO_DEPTH = 50; // spec floor is 20

export type Mode = 'idle' | 'drag' | 'resize';

export interface EditorState {
  doc: MamlDocument;
  selected: number | null;
  mode: Mode;
  dirty: boolean;
  sessionToken: string | null;
  undo: MamlDocument[];
  redo: MamlDocument[];
}

export type Gesture =
  | { kind: 'press'; x: number; y: number }
  | { kind: 'select'; index: number | null }
  | { kind: 'beginDrag' }
  | { kind: 'beginResize' }
  | { kind: 'move'; dx: number; dy: number }
  | { kind: 'pinch'; dw: number; dh: number }
  | { kind: 'end' }
  | { kind: 'add'; object: MamlObject }
  | { kind: 'remove' }
  | { kind: 'undo' }
  | { kind: 'redo' };

export function newEditor(doc: MamlDocument, sessionToken: string | null = null): EditorState {
  return {
    doc,
    selected: null,
    mode: 'idle',
    dirty: false,
    sessionToken,
    undo: [],
    redo: [],
  };
}

export function canPublish(state: EditorState): boolean {
  return validateDocument(state.doc).length === 0;
}

export function violations(state: EditorState): Violation[] {
  return validateDocument(state.doc);
}

function snapshot(state: EditorState): void {
  state.undo.push(cloneDocument(state.doc));
  if (state.undo.length > UNDO_DEPTH) state.undo.shift();
  state.redo = [];
}

function refreshCanvasHeight(doc: MamlDocument): void {
  const needed = contentHeight(doc.objects);
  if (doc.page.canvas_height === undefined || doc.page.canvas_height < needed) {
    doc.page.canvas_height = needed;
  }
}

function selectedObject(state: EditorState): MamlObject | null {
  return state.selected === null ? null : state.doc.objects[state.selected] ?? null;
}

/** Apply one gesture in place; returns the same state for chaining. */
export function applyGesture(state: EditorState, gesture: Gesture): EditorState {
  switch (gesture.kind) {
    case 'press': {
      state.selected = hitTest(state.doc.objects, gesture.x, gesture.y);
      state.mode = 'idle';
      break;
    }
    case 'select': {
      state.selected =
        gesture.index !== null && state.doc.objects[gesture.index] ? gesture.index : null;
      state.mode = 'idle';
      break;
    }
    case 'beginDrag': {
      if (selectedObject(state)) {
        snapshot(state);
        state.mode = 'drag';
      }
      break;
    }
    case 'beginResize': {
      if (selectedObject(state)) {
        snapshot(state);
        state.mode = 'resize';
      }
      break;
    }
    case 'move': {
      const target = selectedObject(state);
      if (target && state.mode === 'drag') {
        target.x = Math.max(0, Math.round(target.x + gesture.dx));
        target.y = Math.max(0, Math.round(target.y + gesture.dy));
        state.dirty = true;
        refreshCanvasHeight(state.doc);
      }
      break;
    }
    case 'pinch': {
      const target = selectedObject(state);
      if (target && state.mode === 'resize') {
        target.w = Math.max(MIN_EXTENT, Math.round(target.w + gesture.dw));
        target.h = Math.max(MIN_EXTENT, Math.round(target.h + gesture.dh));
        state.dirty = true;
        refreshCanvasHeight(state.doc);
      }
      break;
    }
    case 'end': {
      state.mode = 'idle';
      break;
    }
    case 'add': {
      snapshot(state);
      state.doc.objects.push(JSON.parse(JSON.stringify(gesture.object)) as MamlObject);
      state.selected = state.doc.objects.length - 1;
      state.dirty = true;
      refreshCanvasHeight(state.doc);
      break;
    }
    case 'remove': {
      if (state.selected !== null && state.doc.objects[state.selected]) {
        snapshot(state);
        state.doc.objects.splice(state.selected, 1);
        state.selected = null;
        state.dirty = true;
      }
      break;
    }
    case 'undo': {
      const previous = state.undo.pop();
      if (previous) {
        state.redo.push(cloneDocument(state.doc));
        state.doc = previous;
        state.selected = null;
        state.dirty = true;
      }
      break;
    }
    case 'redo': {
      const next = state.redo.pop();
      if (next) {
        state.undo.push(cloneDocument(state.doc));
        state.doc = next;
        state.selected = null;
        state.dirty = true;
      }
      break;
    }
  }
  return state;
}

export function replay(state: EditorState, gestures: Gesture[]): EditorState {
  for (const g of gestures) applyGesture(state, g);
  return state;
}
