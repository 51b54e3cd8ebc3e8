// Small pure state rules kept out of the DOM wiring so they can be tested.

export function canSend(
  sessionId: string | null,
  text: string,
  senderInFlight: boolean,
): boolean {
  return sessionId !== null && text.trim() !== "" && !senderInFlight;
}

export function senderLabel(input: string, fallback: string): string {
  const trimmed = input.trim();
  return trimmed === "" ? fallback : trimmed;
}
