// History polling with change detection. The signature is cheap to compare;
// the view layer only re-renders when it moves.

import type { HistoryResponse } from "./types.js";

export function historySignature(history: HistoryResponse): string {
  const last = history.records[history.records.length - 1];
  return [
    history.session_id,
    history.records.length,
    last ? last.seq : 0,
    history.iteration,
  ].join(":");
}

export class HistoryPoller {
  private timer: ReturnType<typeof setInterval> | null = null;
  private lastSignature = "";

  constructor(
    private readonly fetchHistory: () => Promise<HistoryResponse>,
    private readonly onChange: (history: HistoryResponse) => void,
    private readonly onError: (error: unknown) => void = () => {},
  ) {}

  async tick(): Promise<void> {
    let history: HistoryResponse;
    try {
      history = await this.fetchHistory();
    } catch (error) {
      this.onError(error);
      return;
    }
    const signature = historySignature(history);
    if (signature !== this.lastSignature) {
      this.lastSignature = signature;
      this.onChange(history);
    }
  }

  start(intervalMs: number): void {
    this.stop();
    void this.tick();
    this.timer = setInterval(() => void this.tick(), intervalMs);
  }

  stop(): void {
    if (this.timer !== null) {
      clearInterval(this.timer);
      this.timer = null;
    }
  }

  get running(): boolean {
    return this.timer !== null;
  }
}
