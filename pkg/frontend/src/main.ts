// DOM wiring for the chat client: session form, two participants, polling,
// and the per-message trace drawers.

import { ApiError, ServiceClient } from "./api.js";
import { HistoryPoller } from "./poll.js";
import {
  formErrorMessage,
  renderHistory,
  renderSessionHeader,
} from "./render.js";
import { canSend, senderLabel } from "./state.js";
import type { HistoryResponse } from "./types.js";

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

const params = new URLSearchParams(window.location.search);
const client = new ServiceClient(params.get("service") ?? "http://127.0.0.1:8040");
const pollInterval = Number(params.get("poll") ?? "1500");

let sessionId: string | null = null;
let lastRenderedHtml = "";
const sendsInFlight = new Set<string>();

const form = el<HTMLFormElement>("session-form");
const contextSelect = el<HTMLSelectElement>("context-select");
const formError = el<HTMLDivElement>("form-error");
const dialogue = el<HTMLDivElement>("dialogue");
const messages = el<HTMLDivElement>("messages");
const header = el<HTMLDivElement>("session-header");
const sendError = el<HTMLDivElement>("send-error");
const textInput = el<HTMLInputElement>("message-text");
const sendButton = el<HTMLButtonElement>("send-button");

function renderIfChanged(history: HistoryResponse): void {
  const html = renderHistory(history);
  header.innerHTML = renderSessionHeader(history);
  if (html !== lastRenderedHtml) {
    lastRenderedHtml = html;
    messages.innerHTML = html;
    messages.scrollTop = messages.scrollHeight;
  }
}

const poller = new HistoryPoller(
  () => {
    if (!sessionId) return Promise.reject(new Error("no session"));
    return client.fetchHistory(sessionId);
  },
  renderIfChanged,
);

async function populateContexts(): Promise<void> {
  try {
    const listing = await client.listOntologies();
    for (const context of listing.contexts) {
      const option = document.createElement("option");
      option.value = context.name;
      option.textContent = `${context.name} (${context.ontology_id})`;
      contextSelect.appendChild(option);
    }
  } catch (error) {
    formError.textContent = formErrorMessage(error);
  }
}

function currentSender(): string {
  const checked = document.querySelector<HTMLInputElement>("input[name=sender]:checked");
  return checked?.value === "b"
    ? senderLabel(el<HTMLInputElement>("sender-b").value, "Thomas")
    : senderLabel(el<HTMLInputElement>("sender-a").value, "Diego");
}

function updateSendEnabled(): void {
  const sender = currentSender();
  sendButton.disabled = !canSend(sessionId, textInput.value, sendsInFlight.has(sender));
}

form.addEventListener("submit", async (event) => {
  event.preventDefault();
  formError.textContent = "";
  const source = el<HTMLInputElement>("source-lang").value.trim();
  const target = el<HTMLInputElement>("target-lang").value.trim();
  const context = contextSelect.value;
  try {
    sessionId = await client.createSession({
      source_lang: source,
      target_lang: target,
      ...(context ? { context_id: context } : {}),
    });
  } catch (error) {
    formError.textContent = formErrorMessage(error);
    return;
  }
  dialogue.hidden = false;
  lastRenderedHtml = "";
  messages.innerHTML = "";
  poller.start(pollInterval);
  updateSendEnabled();
});

async function send(text: string): Promise<void> {
  if (!sessionId) return;
  const sender = currentSender();
  if (sendsInFlight.has(sender)) return;
  sendsInFlight.add(sender);
  sendError.innerHTML = "";
  updateSendEnabled();
  try {
    await client.sendMessage(sessionId, sender, text);
    textInput.value = "";
    await poller.tick();
  } catch (error) {
    const label = error instanceof ApiError ? error.detail : "network failure";
    sendError.innerHTML = `<span>${label}</span> `;
    const retry = document.createElement("button");
    retry.textContent = "retry";
    retry.addEventListener("click", () => void send(text));
    sendError.appendChild(retry);
  } finally {
    sendsInFlight.delete(sender);
    updateSendEnabled();
  }
}

sendButton.addEventListener("click", () => void send(textInput.value.trim()));
textInput.addEventListener("input", updateSendEnabled);
textInput.addEventListener("keydown", (event) => {
  if (event.key === "Enter" && !sendButton.disabled) {
    void send(textInput.value.trim());
  }
});
for (const radio of document.querySelectorAll("input[name=sender]")) {
  radio.addEventListener("change", updateSendEnabled);
}

updateSendEnabled();
void populateContexts();
