// Pure HTML-string renderers. The client shows exactly the trace fields the
// server sent; nothing is re-derived here. Rendering the same history twice
// yields the same string, so the caller can skip redundant DOM updates.

import type { DecisionView, HistoryRecord, HistoryResponse, TraceView } from "./types.js";
import { ApiError } from "./api.js";

export function escapeHtml(text: string): string {
  return text
    .replaceAll("&", "&amp;")
    .replaceAll("<", "&lt;")
    .replaceAll(">", "&gt;")
    .replaceAll('"', "&quot;")
    .replaceAll("'", "&#39;");
}

export function renderContextBadge(contextId: string | null, ontologyId: string | null): string {
  const label = contextId ?? "none";
  const ontology = ontologyId ? ` · ${escapeHtml(ontologyId)}` : "";
  return `<span class="badge context-badge">${escapeHtml(label)}${ontology}</span>`;
}

function decisionLine(decision: DecisionView): string {
  const word = escapeHtml(decision.word);
  if (decision.skipped_reason !== null) {
    return `<li class="decision skipped" data-word="${word}">` +
      `<b>${word}</b> skipped (${escapeHtml(decision.skipped_reason)})</li>`;
  }
  const source = decision.resolution_source ?? "?";
  const target = decision.target_word ?? "?";
  const iri = decision.concept_iri
    ? ` <span class="iri">${escapeHtml(decision.concept_iri)}</span>`
    : "";
  return `<li class="decision resolved" data-word="${word}" data-source="${escapeHtml(source)}">` +
    `<b>${word}</b> → ${escapeHtml(target)} via ${escapeHtml(source)}${iri}</li>`;
}

export function renderTraceDrawer(trace: TraceView): string {
  const candidates = trace.candidates
    .map(
      (c) =>
        `<li>${escapeHtml(c.surface)}${c.in_locution ? " (locution)" : ""}</li>`,
    )
    .join("");
  const decisions = trace.decisions.map(decisionLine).join("");
  const reset = trace.window_reset
    ? ` <span class="reset-indicator" title="temporary log cleared">window reset</span>`
    : "";
  return (
    `<details class="trace-drawer">` +
    `<summary>trace · iteration ${trace.iteration}${reset}</summary>` +
    `<div class="trace-body">` +
    `<p class="pre-mt">pre-translation: ${escapeHtml(trace.pre_mt_text)}</p>` +
    `<p>candidates:</p><ul class="candidates">${candidates || "<li>none</li>"}</ul>` +
    `<p>decisions:</p><ul class="decisions">${decisions || "<li>none</li>"}</ul>` +
    `</div></details>`
  );
}

export function renderBubble(record: HistoryRecord): string {
  const reset = record.window_reset ? ` <span class="reset-indicator">window reset</span>` : "";
  return (
    `<div class="bubble" data-seq="${record.seq}" data-sender="${escapeHtml(record.sender)}">` +
    `<div class="meta">${escapeHtml(record.sender)} · iteration ${record.iteration}${reset}</div>` +
    `<div class="text">${escapeHtml(record.translated)} ` +
    `<span class="original">(${escapeHtml(record.original)})</span></div>` +
    renderTraceDrawer(record.trace) +
    `</div>`
  );
}

export function renderHistory(history: HistoryResponse): string {
  return history.records.map(renderBubble).join("\n");
}

export function renderSessionHeader(history: HistoryResponse): string {
  return (
    renderContextBadge(history.context_id, history.ontology_id) +
    ` <span class="badge">iteration ${history.iteration}/${history.window_limit}</span>`
  );
}

export function formErrorMessage(error: unknown): string {
  if (error instanceof ApiError) {
    return `could not create session: ${error.detail}`;
  }
  return `service unreachable: ${String(error)}`;
}
