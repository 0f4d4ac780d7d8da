/**
 * Application state and the pure logic behind the what-if loop.
 *
 * The UI layer owns the DOM; everything that decides *what* to render lives
 * here so it can be tested headlessly: weight re-normalization, render
 * request construction, and the sequence numbers that discard out-of-order
 * responses. `renderVersion` bumps only on changes that affect the plot —
 * a failed upload leaves it untouched, so no request is issued.
 */

export type Tab = "origami" | "weighted";
export type Mode = "single" | "pairwise" | "weighted";

export interface DatasetData {
  object_names: string[];
  attribute_names: string[];
  values: number[][];
  scale_max?: number;
}

export interface AreaEntry {
  raw: number;
  normalized: number;
  weighted_raw?: number;
  weighted_normalized?: number;
}

export interface RenderResponse {
  svg: string;
  areas: Record<string, AreaEntry>;
}

export interface RenderRequest {
  mode: Mode;
  data: DatasetData;
  objects: string[];
  weights?: number[];
  aux?: number;
}

export interface BarSpec {
  label: string;
  value: number;
}

export interface AppState {
  dataset: DatasetData | null;
  tab: Tab;
  pairwise: boolean;
  object1: string | null;
  object2: string | null;
  sliders: number[];
  aux: number | null;
  inlineError: string | null;
  banner: string | null;
  response: RenderResponse | null;
  issuedSeq: number;
  displayedSeq: number;
  renderVersion: number;
}

export function initialState(): AppState {
  return {
    dataset: null,
    tab: "origami",
    pairwise: false,
    object1: null,
    object2: null,
    sliders: [],
    aux: null,
    inlineError: null,
    banner: null,
    response: null,
    issuedSeq: 0,
    displayedSeq: 0,
    renderVersion: 0,
  };
}

function bump(state: AppState): void {
  state.renderVersion++;
}

/** Install a dataset (upload or example) and reset the selections. */
export function loadDataset(state: AppState, data: DatasetData): void {
  state.dataset = data;
  state.object1 = data.object_names[0] ?? null;
  state.object2 = data.object_names[1] ?? null;
  state.sliders = data.attribute_names.map(() => 1);
  state.aux = null;
  state.inlineError = null;
  state.banner = null;
  bump(state);
}

/** Record a failed upload. Keeps the current plot; issues no render. */
export function setUploadError(state: AppState, message: string): void {
  state.inlineError = message;
}

export function selectTab(state: AppState, tab: Tab): void {
  if (state.tab !== tab) {
    state.tab = tab;
    bump(state);
  }
}

export function setPairwise(state: AppState, on: boolean): void {
  if (state.pairwise !== on) {
    state.pairwise = on;
    bump(state);
  }
}

export function selectObject1(state: AppState, name: string): void {
  state.object1 = name;
  bump(state);
}

export function selectObject2(state: AppState, name: string): void {
  state.object2 = name;
  bump(state);
}

export function setSlider(state: AppState, index: number, value: number): void {
  state.sliders[index] = value;
  bump(state);
}

export function setSliders(state: AppState, values: number[]): void {
  state.sliders = values.slice();
  bump(state);
}

export function setAux(state: AppState, aux: number | null): void {
  state.aux = aux;
  bump(state);
}

/** Raw slider positions scaled to sum to 1 (the vector sent to the API). */
export function normalizeWeights(sliders: number[]): number[] {
  const total = sliders.reduce((acc, v) => acc + v, 0);
  if (!(total > 0)) {
    return sliders.map(() => 1 / sliders.length);
  }
  return sliders.map((v) => v / total);
}

/** Weights formatted for display; always shows a sum of 1.000. */
export function formatWeights(sliders: number[]): string[] {
  return normalizeWeights(sliders).map((w) => w.toFixed(3));
}

/** The request for the current state, or null when the state is not renderable. */
export function buildRequest(state: AppState): RenderRequest | null {
  const data = state.dataset;
  if (!data || !state.object1) {
    return null;
  }
  const base = { data, ...(state.aux !== null ? { aux: state.aux } : {}) };
  if (state.tab === "weighted") {
    if (state.sliders.length !== data.attribute_names.length) {
      return null;
    }
    if (state.sliders.some((v) => !(v > 0))) {
      return null;
    }
    return {
      mode: "weighted",
      objects: [state.object1],
      weights: normalizeWeights(state.sliders),
      ...base,
    };
  }
  if (state.pairwise) {
    if (!state.object2 || state.object2 === state.object1) {
      return null;
    }
    return { mode: "pairwise", objects: [state.object1, state.object2], ...base };
  }
  return { mode: "single", objects: [state.object1], ...base };
}

/** Stamp an outgoing request; the returned sequence tags its response. */
export function issueRequest(state: AppState): number {
  return ++state.issuedSeq;
}

/**
 * Accept a response only if it belongs to the newest issued request;
 * anything older is stale and dropped.
 */
export function acceptResponse(
  state: AppState,
  seq: number,
  response: RenderResponse,
): boolean {
  if (seq !== state.issuedSeq) {
    return false;
  }
  state.response = response;
  state.displayedSeq = seq;
  state.banner = null;
  return true;
}

export function acceptFailure(state: AppState, seq: number, message: string): boolean {
  if (seq !== state.issuedSeq) {
    return false;
  }
  state.banner = message;
  return true;
}

/** Exact server bytes for the download button. */
export function downloadPayload(state: AppState): string | null {
  return state.response ? state.response.svg : null;
}

/** Area bars for the current response: unweighted vs weighted, or per object. */
export function barSpecs(state: AppState): BarSpec[] {
  const response = state.response;
  if (!response) {
    return [];
  }
  const bars: BarSpec[] = [];
  for (const [name, entry] of Object.entries(response.areas)) {
    bars.push({ label: name, value: entry.normalized });
    if (entry.weighted_normalized !== undefined) {
      bars.push({ label: `${name} (weighted)`, value: entry.weighted_normalized });
    }
  }
  return bars;
}
