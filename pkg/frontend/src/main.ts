// DOM wiring for the writing pad. All linguistic work happens on the
// service; this file only moves payloads between the network and the view.

import { ApiClient } from "./client.js";
import { debounce } from "./debounce.js";
import {
  renderFallback,
  renderFeaturePanel,
  renderHints,
  renderLevelCounters,
  renderMatches,
} from "./render.js";
import { acceptAnalysis, acceptHints, clear, initialState } from "./state.js";

const API_BASE = (window as { SAKUBUN_API?: string }).SAKUBUN_API ?? "http://localhost:8800";

const editor = document.getElementById("editor") as HTMLTextAreaElement;
const hintsPanel = document.getElementById("hints")!;
const matchesPanel = document.getElementById("matches")!;
const countersPanel = document.getElementById("counters")!;
const featuresPanel = document.getElementById("features")!;
const banner = document.getElementById("banner")!;
const clearButton = document.getElementById("clear")!;

const client = new ApiClient(API_BASE);
const state = initialState();

function paint(): void {
  try {
    hintsPanel.innerHTML = renderHints(state.hints?.hints ?? []);
    if (state.analysis) {
      matchesPanel.innerHTML = renderMatches(state.analysis);
      countersPanel.innerHTML = renderLevelCounters(state.analysis.grammar_report);
    } else {
      matchesPanel.innerHTML = "";
      countersPanel.innerHTML = "";
    }
    featuresPanel.innerHTML = renderFeaturePanel(state.analysis);
  } catch {
    // payload shape we do not understand: show it raw instead of breaking
    matchesPanel.innerHTML = renderFallback(state.analysis ?? state.hints);
    countersPanel.innerHTML = "";
    featuresPanel.innerHTML = renderFeaturePanel(null);
  }
}

async function refresh(text: string): Promise<void> {
  if (!text.trim()) {
    clear(state);
    paint();
    return;
  }
  const seq = client.nextSeq();
  state.pendingRequest = true;
  try {
    const [hintsRes, analysisRes] = await Promise.all([
      client.hints(text, seq),
      client.analyze(text, seq),
    ]);
    const changed = [acceptHints(state, hintsRes), acceptAnalysis(state, analysisRes)];
    state.serviceDown = false;
    banner.hidden = true;
    if (changed.some(Boolean)) paint();
  } catch {
    state.serviceDown = true;
    banner.hidden = false; // non-blocking: typing continues regardless
  } finally {
    state.pendingRequest = false;
  }
}

const scheduleRefresh = debounce((text: string) => void refresh(text), 300);

editor.addEventListener("input", () => {
  state.text = editor.value;
  scheduleRefresh(editor.value);
});

clearButton.addEventListener("click", () => {
  editor.value = "";
  scheduleRefresh.cancel();
  clear(state);
  paint();
  editor.focus();
});

void client.health().then((ok) => {
  banner.hidden = ok;
  state.serviceDown = !ok;
});
paint();
