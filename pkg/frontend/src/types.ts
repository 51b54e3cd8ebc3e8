// Wire types, mirroring the service's JSON exactly (snake_case fields).

export interface TokenView {
  surface: string;
  normalized: string;
  pos: string;
  index: number;
  trailing_punct: string;
}

export interface CandidateView {
  token_index: number;
  surface: string;
  in_locution: boolean;
}

export interface DecisionView {
  word: string;
  skipped_reason: "locution" | "not_in_ontology" | "no_ontology" | null;
  resolution_source: "temp_log" | "ontology" | null;
  concept_iri: string | null;
  target_word: string | null;
}

export interface ReplacementView {
  token_index: number;
  original: string;
  substituted: string;
  source: "temp_log" | "ontology";
}

export interface TraceView {
  tagged: { original: string; tokens: TokenView[] };
  candidates: CandidateView[];
  decisions: DecisionView[];
  replacements: ReplacementView[];
  pre_mt_text: string;
  final_text: string;
  iteration: number;
  window_reset: boolean;
}

export interface HistoryRecord {
  seq: number;
  sender: string;
  original: string;
  translated: string;
  trace: TraceView;
  iteration: number;
  window_reset: boolean;
}

export interface HistoryResponse {
  session_id: string;
  context_id: string | null;
  ontology_id: string | null;
  iteration: number;
  window_limit: number;
  records: HistoryRecord[];
}

export interface OntologyInfo {
  id: string;
  concepts: number;
}

export interface ContextInfo {
  name: string;
  ontology_id: string;
}

export interface OntologiesResponse {
  ontologies: OntologyInfo[];
  contexts: ContextInfo[];
}

export interface MessageResponse {
  translated: string;
  trace: TraceView;
}

export interface CreateSessionRequest {
  source_lang: string;
  target_lang: string;
  context_id?: string;
  ontology_id?: string;
}
