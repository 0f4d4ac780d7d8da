/**
 * DOM wiring for the origami plot explorer.
 *
 * Layout: upload panel on top, table preview lower-left, plot and area bars
 * lower-right. All chart geometry comes from POST /api/render; this file
 * only moves state around and injects the returned SVG verbatim.
 */

import { checkUploadName, CsvError, parseDataset } from "./csv.js";
import { ApiError, fetchExample, postRender } from "./api.js";
import {
  acceptFailure,
  acceptResponse,
  AppState,
  barSpecs,
  buildRequest,
  downloadPayload,
  formatWeights,
  initialState,
  issueRequest,
  loadDataset,
  selectObject1,
  selectObject2,
  selectTab,
  setAux,
  setPairwise,
  setSlider,
  setUploadError,
  Tab,
} from "./state.js";

const DEBOUNCE_MS = 150;

const state: AppState = initialState();
let debounceTimer: number | undefined;
let lastRenderedVersion = -1;

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) {
    throw new Error(`missing element #${id}`);
  }
  return node as T;
}

// ---- rendering loop --------------------------------------------------------

function scheduleRender(): void {
  refreshControls();
  if (state.renderVersion === lastRenderedVersion) {
    return;
  }
  window.clearTimeout(debounceTimer);
  debounceTimer = window.setTimeout(issueRender, DEBOUNCE_MS);
}

async function issueRender(): Promise<void> {
  const request = buildRequest(state);
  if (!request) {
    return;
  }
  lastRenderedVersion = state.renderVersion;
  const seq = issueRequest(state);
  try {
    const response = await postRender(request);
    if (acceptResponse(state, seq, response)) {
      showPlot();
    }
  } catch (error) {
    const message =
      error instanceof ApiError ? `${error.code}: ${error.message}` : String(error);
    if (acceptFailure(state, seq, message)) {
      showBanner(message);
    }
  }
}

// ---- view updates -----------------------------------------------------------

function showBanner(message: string | null): void {
  const banner = el<HTMLDivElement>("banner");
  banner.textContent = message ?? "";
  banner.hidden = !message;
}

function showInlineError(message: string | null): void {
  const box = el<HTMLDivElement>("upload-error");
  box.textContent = message ?? "";
  box.hidden = !message;
}

function showPlot(): void {
  showBanner(null);
  const pane = el<HTMLDivElement>("plot-pane");
  pane.innerHTML = state.response ? state.response.svg : "";
  const bars = el<HTMLDivElement>("area-bars");
  bars.innerHTML = "";
  for (const bar of barSpecs(state)) {
    const row = document.createElement("div");
    row.className = "bar-row";
    const label = document.createElement("span");
    label.className = "bar-label";
    label.textContent = `${bar.label} — ${bar.value.toFixed(3)}`;
    const track = document.createElement("div");
    track.className = "bar-track";
    const fill = document.createElement("div");
    fill.className = "bar-fill";
    fill.style.width = `${(100 * bar.value).toFixed(2)}%`;
    track.appendChild(fill);
    row.appendChild(label);
    row.appendChild(track);
    bars.appendChild(row);
  }
  el<HTMLButtonElement>("download").disabled = !state.response;
}

function renderTable(): void {
  const container = el<HTMLDivElement>("table-preview");
  container.innerHTML = "";
  const data = state.dataset;
  if (!data) {
    container.textContent = "No data loaded yet.";
    return;
  }
  const table = document.createElement("table");
  const head = table.createTHead().insertRow();
  head.insertCell().textContent = "";
  for (const name of data.attribute_names) {
    head.insertCell().textContent = name;
  }
  const body = table.createTBody();
  data.object_names.forEach((name, i) => {
    const row = body.insertRow();
    row.insertCell().textContent = name;
    for (const value of data.values[i]) {
      row.insertCell().textContent = String(value);
    }
  });
  container.appendChild(table);
}

function fillObjectSelect(select: HTMLSelectElement, selected: string | null): void {
  select.innerHTML = "";
  for (const name of state.dataset?.object_names ?? []) {
    const option = document.createElement("option");
    option.value = name;
    option.textContent = name;
    option.selected = name === selected;
    select.appendChild(option);
  }
}

function rebuildSliders(): void {
  const container = el<HTMLDivElement>("sliders");
  container.innerHTML = "";
  const data = state.dataset;
  if (!data) {
    return;
  }
  const labels = formatWeights(state.sliders);
  data.attribute_names.forEach((name, i) => {
    const row = document.createElement("label");
    row.className = "slider-row";
    const caption = document.createElement("span");
    caption.textContent = `${name}: ${labels[i]}`;
    const input = document.createElement("input");
    input.type = "range";
    input.min = "1";
    input.max = "100";
    input.step = "1";
    input.value = String(Math.round(state.sliders[i] * 20));
    input.addEventListener("input", () => {
      setSlider(state, i, Number(input.value) / 20);
      caption.textContent = `${name}: ${formatWeights(state.sliders)[i]}`;
      updateWeightSum();
      scheduleRender();
    });
    row.appendChild(caption);
    row.appendChild(input);
    container.appendChild(row);
  });
  updateWeightSum();
}

function updateWeightSum(): void {
  const total = formatWeights(state.sliders)
    .map(Number)
    .reduce((acc, v) => acc + v, 0);
  el<HTMLSpanElement>("weight-sum").textContent = `weights sum: ${total.toFixed(3)}`;
}

function refreshControls(): void {
  const hasData = state.dataset !== null;
  el<HTMLDivElement>("controls").hidden = !hasData;
  el<HTMLDivElement>("origami-controls").hidden = state.tab !== "origami";
  el<HTMLDivElement>("weighted-controls").hidden = state.tab !== "weighted";
  el<HTMLSelectElement>("object2-select").disabled = !state.pairwise;
  document.querySelectorAll<HTMLButtonElement>(".tab").forEach((button) => {
    button.classList.toggle("active", button.dataset.tab === state.tab);
  });
}

function installDataset(): void {
  renderTable();
  fillObjectSelect(el<HTMLSelectElement>("object1-select"), state.object1);
  fillObjectSelect(el<HTMLSelectElement>("object2-select"), state.object2);
  fillObjectSelect(el<HTMLSelectElement>("weighted-object-select"), state.object1);
  rebuildSliders();
  showInlineError(null);
  scheduleRender();
}

// ---- event handlers -----------------------------------------------------------

function handleCsvText(text: string): void {
  try {
    loadDataset(state, parseDataset(text));
    installDataset();
  } catch (error) {
    const message = error instanceof CsvError ? error.message : String(error);
    setUploadError(state, message);
    showInlineError(message);
  }
}

function wireEvents(): void {
  el<HTMLInputElement>("file-input").addEventListener("change", async (event) => {
    const input = event.target as HTMLInputElement;
    const file = input.files?.[0];
    if (!file) {
      return;
    }
    const nameProblem = checkUploadName(file.name);
    if (nameProblem) {
      setUploadError(state, nameProblem);
      showInlineError(nameProblem);
      input.value = "";
      return;
    }
    handleCsvText(await file.text());
    input.value = "";
  });

  el<HTMLButtonElement>("load-example").addEventListener("click", async () => {
    try {
      loadDataset(state, await fetchExample());
      installDataset();
    } catch (error) {
      showBanner(String(error));
    }
  });

  document.querySelectorAll<HTMLButtonElement>(".tab").forEach((button) => {
    button.addEventListener("click", () => {
      selectTab(state, button.dataset.tab as Tab);
      const weightedSelect = el<HTMLSelectElement>("weighted-object-select");
      fillObjectSelect(weightedSelect, state.object1);
      scheduleRender();
    });
  });

  el<HTMLSelectElement>("object1-select").addEventListener("change", (event) => {
    selectObject1(state, (event.target as HTMLSelectElement).value);
    scheduleRender();
  });
  el<HTMLSelectElement>("object2-select").addEventListener("change", (event) => {
    selectObject2(state, (event.target as HTMLSelectElement).value);
    scheduleRender();
  });
  el<HTMLSelectElement>("weighted-object-select").addEventListener("change", (event) => {
    selectObject1(state, (event.target as HTMLSelectElement).value);
    scheduleRender();
  });
  el<HTMLInputElement>("pairwise-toggle").addEventListener("change", (event) => {
    setPairwise(state, (event.target as HTMLInputElement).checked);
    scheduleRender();
  });
  el<HTMLInputElement>("aux-input").addEventListener("change", (event) => {
    const raw = (event.target as HTMLInputElement).value.trim();
    setAux(state, raw === "" ? null : Number(raw));
    scheduleRender();
  });

  el<HTMLButtonElement>("download").addEventListener("click", () => {
    const payload = downloadPayload(state);
    if (!payload) {
      return;
    }
    const blob = new Blob([payload], { type: "image/svg+xml" });
    const url = URL.createObjectURL(blob);
    const link = document.createElement("a");
    link.href = url;
    link.download = "origami-plot.svg";
    link.click();
    URL.revokeObjectURL(url);
  });
}

document.addEventListener("DOMContentLoaded", () => {
  wireEvents();
  refreshControls();
  renderTable();
});
