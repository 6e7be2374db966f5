// Pure view functions: payload in, HTML string out. Keeping them free of
// DOM state makes them directly unit-testable under node.

import { AnalyzeResponse, GrammarReport, Hint, LEVELS, Match } from "./schema.js";

export function escapeHtml(s: string): string {
  return s
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export function renderHints(hints: Hint[]): string {
  if (hints.length === 0) {
    return `<p class="empty">パターンの途中ではありません</p>`;
  }
  const cards = hints.map((h) => {
    const expected = h.expected.map((e) => `<code>${escapeHtml(e)}</code>`).join(" → ");
    return (
      `<div class="hint-card">` +
      `<span class="badge level-${h.level}">${h.level}</span>` +
      `<span class="hint-name">${escapeHtml(h.display_name)}</span>` +
      `<span class="hint-progress">${h.consumed} token${h.consumed === 1 ? "" : "s"} in</span>` +
      (expected ? `<div class="hint-expected">next: ${expected}</div>` : "") +
      `</div>`
    );
  });
  return cards.join("\n");
}

/** Matched token spans wrapped in <mark>; different patterns may overlap,
 * so each token carries every covering pattern in its title. */
export function renderMatches(analysis: AnalyzeResponse): string {
  const bySentence = new Map<number, Match[]>();
  for (const m of analysis.matches) {
    const list = bySentence.get(m.sentence_index) ?? [];
    list.push(m);
    bySentence.set(m.sentence_index, list);
  }
  const sentenceCount = analysis.sentence_features.sentence_count;
  const parts: string[] = [];
  for (let s = 0; s < sentenceCount; s++) {
    const matches = bySentence.get(s) ?? [];
    const tokens = matches[0]?.sentence_tokens;
    if (!tokens) {
      continue; // nothing highlighted in this sentence
    }
    const covering: Match[][] = tokens.map(() => []);
    for (const m of matches) {
      for (let i = m.token_span[0]; i < m.token_span[1]; i++) {
        covering[i].push(m);
      }
    }
    const html = tokens
      .map((tok, i) => {
        if (covering[i].length === 0) return escapeHtml(tok);
        const names = covering[i]
          .map((m) => `${m.display_name} (${m.level})`)
          .join(", ");
        const levels = covering[i].map((m) => m.level).join(" ");
        return (
          `<mark class="match ${levels}" title="${escapeHtml(names)}">` +
          `${escapeHtml(tok)}</mark>`
        );
      })
      .join("");
    const badges = [...new Set(matches.map((m) => m.level))]
      .map((lv) => `<span class="badge level-${lv}">${lv}</span>`)
      .join("");
    parts.push(`<p class="sentence">${badges} ${html}</p>`);
  }
  if (parts.length === 0) {
    return `<p class="empty">認識された文法はまだありません</p>`;
  }
  return parts.join("\n");
}

/** Per-level counters straight from the report totals (display contract:
 * no client-side recomputation). */
export function renderLevelCounters(report: GrammarReport): string {
  return LEVELS.map((lv) => {
    const t = report.totals.levels[lv];
    return (
      `<span class="counter"><span class="badge level-${lv}">${lv}</span>` +
      ` ${t.total_count} (${t.unique_patterns} unique)</span>`
    );
  }).join(" ");
}

/** Last-resort view when a payload does not look like the schema we know:
 * show the raw JSON rather than a blank or broken panel. */
export function renderFallback(payload: unknown): string {
  const raw = JSON.stringify(payload, null, 2) ?? "null";
  return `<pre class="fallback">${escapeHtml(raw)}</pre>`;
}

export function renderFeaturePanel(analysis: AnalyzeResponse | null): string {
  if (analysis === null) {
    return `<table class="features"><tr><td>total words</td><td>–</td></tr>` +
      `<tr><td>unique words</td><td>–</td></tr>` +
      `<tr><td>avg sentence length</td><td>–</td></tr></table>`;
  }
  const wf = analysis.word_features;
  const sf = analysis.sentence_features;
  const posRows = Object.entries(wf.pos_counts)
    .map(([pos, n]) => `<tr><td>${escapeHtml(pos)}</td><td>${n}</td></tr>`)
    .join("");
  return (
    `<table class="features">` +
    `<tr><td>total words</td><td>${wf.total_words}</td></tr>` +
    `<tr><td>unique words</td><td>${wf.unique_words}</td></tr>` +
    `<tr><td>kanji</td><td>${wf.kanji_chars}</td></tr>` +
    `<tr><td>sentences</td><td>${sf.sentence_count}</td></tr>` +
    `<tr><td>avg sentence length</td><td>${sf.avg_sentence_length}</td></tr>` +
    posRows +
    `</table>`
  );
}
