// Thin typed client over the service's HTTP+JSON API.

import type {
  CreateSessionRequest,
  HistoryResponse,
  MessageResponse,
  OntologiesResponse,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    public readonly status: number,
    public readonly detail: string,
  ) {
    super(`HTTP ${status}: ${detail}`);
    this.name = "ApiError";
  }
}

async function readDetail(response: Response): Promise<string> {
  try {
    const body = await response.json();
    if (typeof body.detail === "string") return body.detail;
    return JSON.stringify(body);
  } catch {
    return response.statusText;
  }
}

export class ServiceClient {
  constructor(private readonly baseUrl: string) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await fetch(this.baseUrl + path, init);
    if (!response.ok) {
      throw new ApiError(response.status, await readDetail(response));
    }
    return (await response.json()) as T;
  }

  async health(): Promise<boolean> {
    try {
      await this.request<{ status: string }>("/health");
      return true;
    } catch {
      return false;
    }
  }

  listOntologies(): Promise<OntologiesResponse> {
    return this.request("/ontologies");
  }

  async createSession(req: CreateSessionRequest): Promise<string> {
    const body = await this.request<{ session_id: string }>("/sessions", {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(req),
    });
    return body.session_id;
  }

  sendMessage(sessionId: string, sender: string, text: string): Promise<MessageResponse> {
    return this.request(`/sessions/${encodeURIComponent(sessionId)}/messages`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ sender, text }),
    });
  }

  fetchHistory(sessionId: string): Promise<HistoryResponse> {
    return this.request(`/sessions/${encodeURIComponent(sessionId)}/history`);
  }
}
