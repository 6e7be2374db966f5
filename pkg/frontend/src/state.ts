// Editor state: the text the user has, plus the latest analysis/hints we
// are allowed to show. The sequence-number rule guarantees the invariant
// that whatever is rendered corresponds to a text value the user actually
// had, and is the newest such response received.

import { AnalyzeResponse, HintsResponse } from "./schema.js";
import { Tagged } from "./client.js";

export interface EditorState {
  text: string;
  analysis: AnalyzeResponse | null;
  hints: HintsResponse | null;
  renderedAnalysisSeq: number;
  renderedHintsSeq: number;
  pendingRequest: boolean;
  serviceDown: boolean;
}

export function initialState(): EditorState {
  return {
    text: "",
    analysis: null,
    hints: null,
    renderedAnalysisSeq: 0,
    renderedHintsSeq: 0,
    pendingRequest: false,
    serviceDown: false,
  };
}

/** Accept an analyze response only if it is newer than the rendered one. */
export function acceptAnalysis(
  state: EditorState,
  res: Tagged<AnalyzeResponse>,
): boolean {
  if (res.seq <= state.renderedAnalysisSeq) return false;
  state.analysis = res.payload;
  state.renderedAnalysisSeq = res.seq;
  return true;
}

export function acceptHints(state: EditorState, res: Tagged<HintsResponse>): boolean {
  if (res.seq <= state.renderedHintsSeq) return false;
  state.hints = res.payload;
  state.renderedHintsSeq = res.seq;
  return true;
}

export function clear(state: EditorState): void {
  state.text = "";
  state.analysis = null;
  state.hints = null;
  // sequence counters keep increasing so in-flight responses stay stale
}
