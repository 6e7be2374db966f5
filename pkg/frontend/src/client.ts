// API client with request sequence numbers. Responses resolve out of
// order on a real network; the caller keeps only the payload with the
// highest sequence number (see state.ts), so a stale response for
// superseded text is never rendered.

import { AnalyzeResponse, HintsResponse } from "./schema.js";

export interface Tagged<T> {
  seq: number;
  payload: T;
}

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  private seq = 0;

  constructor(
    private baseUrl: string,
    private fetchImpl: FetchLike = (...args) => fetch(...args),
  ) {}

  nextSeq(): number {
    return ++this.seq;
  }

  private async post<T>(path: string, text: string, seq: number): Promise<Tagged<T>> {
    const res = await this.fetchImpl(`${this.baseUrl}${path}`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ text }),
    });
    if (!res.ok) {
      throw new Error(`${path} -> HTTP ${res.status}`);
    }
    return { seq, payload: (await res.json()) as T };
  }

  analyze(text: string, seq: number): Promise<Tagged<AnalyzeResponse>> {
    return this.post<AnalyzeResponse>("/api/analyze", text, seq);
  }

  hints(text: string, seq: number): Promise<Tagged<HintsResponse>> {
    return this.post<HintsResponse>("/api/hints", text, seq);
  }

  async health(): Promise<boolean> {
    try {
      const res = await this.fetchImpl(`${this.baseUrl}/api/health`);
      return res.ok;
    } catch {
      return false;
    }
  }
}
