// Hand-written wire-shaped fixtures for the pure-render tests.

import type { HistoryRecord, HistoryResponse, TraceView } from "../src/types.js";

export function traceFixture(overrides: Partial<TraceView> = {}): TraceView {
  return {
    tagged: {
      original: "a minha bateria está ruim",
      tokens: [
        { surface: "a", normalized: "a", pos: "article", index: 0, trailing_punct: "" },
        { surface: "minha", normalized: "minha", pos: "pronoun", index: 1, trailing_punct: "" },
        { surface: "bateria", normalized: "bateria", pos: "noun", index: 2, trailing_punct: "" },
        { surface: "está", normalized: "está", pos: "verb", index: 3, trailing_punct: "" },
        { surface: "ruim", normalized: "ruim", pos: "adjective", index: 4, trailing_punct: "" },
      ],
    },
    candidates: [
      { token_index: 2, surface: "bateria", in_locution: false },
      { token_index: 3, surface: "está", in_locution: false },
    ],
    decisions: [
      {
        word: "bateria",
        skipped_reason: null,
        resolution_source: "ontology",
        concept_iri: "http://purl.org/ontology/mo/mit#Drums",
        target_word: "drums",
      },
      {
        word: "está",
        skipped_reason: "not_in_ontology",
        resolution_source: null,
        concept_iri: null,
        target_word: null,
      },
    ],
    replacements: [
      { token_index: 2, original: "bateria", substituted: "drums", source: "ontology" },
    ],
    pre_mt_text: "a minha drums está ruim",
    final_text: "my drums is bad",
    iteration: 1,
    window_reset: false,
    ...overrides,
  };
}

export function recordFixture(overrides: Partial<HistoryRecord> = {}): HistoryRecord {
  return {
    seq: 1,
    sender: "Diego",
    original: "a minha bateria está ruim",
    translated: "my drums is bad",
    trace: traceFixture(),
    iteration: 1,
    window_reset: false,
    ...overrides,
  };
}

export function historyFixture(records: HistoryRecord[]): HistoryResponse {
  return {
    session_id: "s1",
    context_id: "Music",
    ontology_id: "music_ontology",
    iteration: records.length ? records[records.length - 1].iteration : 0,
    window_limit: 3,
    records,
  };
}
