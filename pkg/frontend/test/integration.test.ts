// End-to-end check against a live service. Opt-in:
//   sakubun serve --port 8800            (terminal 1)
//   SAKUBUN_API=http://localhost:8800 vitest run test/integration.test.ts
import { describe, expect, it } from "vitest";

import { ApiClient } from "../src/client.js";
import { renderHints, renderMatches } from "../src/render.js";

const API = process.env.SAKUBUN_API;
const PARTIAL = "彼が来ようが来";
const FULL = "彼が来ようが来まいが、パーティーは時間通りにやる。";
const PATTERN = "〜う(よう)が、〜まいが";

describe.skipIf(!API)("live service", () => {
  const client = () => new ApiClient(API!);

  it("partial showcase sentence surfaces the hint card within 1s", async () => {
    const started = Date.now();
    const res = await client().hints(PARTIAL, 1);
    expect(Date.now() - started).toBeLessThan(1000);
    const pending = res.payload.hints.filter((h) => h.pattern_id === PATTERN);
    expect(pending.length).toBe(1);
    const html = renderHints(res.payload.hints);
    expect(html).toContain("hint-card");
    expect(html).toContain(PATTERN);
  });

  it("completing the sentence replaces the hint with an N1 highlight", async () => {
    const c = client();
    const hints = await c.hints(FULL, 1);
    expect(hints.payload.hints.some((h) => h.pattern_id === PATTERN)).toBe(false);
    const analysis = await c.analyze(FULL, 2);
    const html = renderMatches(analysis.payload);
    expect(html).toContain("<mark");
    expect(html).toContain("level-N1");
  });
});
