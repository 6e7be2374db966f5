// Typed mirror of api-schema.json (the checked-in contract file at the
// repository root). The UI performs no linguistic computation of its own:
// everything rendered comes verbatim from these payloads.

export type Level = "N5" | "N4" | "N3" | "N2" | "N1";

export const LEVELS: Level[] = ["N1", "N2", "N3", "N4", "N5"];

export interface WordFeatures {
  pos_counts: Record<string, number>;
  total_words: number;
  unique_words: number;
  origin_counts: Record<string, number>;
  kanji_chars: number;
}

export interface SentenceFeatures {
  sentence_count: number;
  avg_sentence_length: number;
}

export interface ReportEntry {
  grammar: string;
  level: Level;
  count: number;
  unique: 0 | 1;
}

export interface GrammarReport {
  N1: ReportEntry[];
  N2: ReportEntry[];
  N3: ReportEntry[];
  N4: ReportEntry[];
  N5: ReportEntry[];
  totals: {
    levels: Record<Level, { total_count: number; unique_patterns: number }>;
    grand_total: number;
    grand_unique: number;
  };
}

export interface Match {
  pattern_id: string;
  display_name: string;
  level: Level;
  sentence_index: number;
  token_span: [number, number];
  sentence_tokens: string[];
}

export interface AnalyzeResponse {
  doc_id: string;
  word_features: WordFeatures;
  sentence_features: SentenceFeatures;
  grammar_report: GrammarReport;
  matches: Match[];
}

export interface Hint {
  pattern_id: string;
  display_name: string;
  level: Level;
  consumed: number;
  expected: string[];
}

export interface HintsResponse {
  hints: Hint[];
}
