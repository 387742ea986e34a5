// Fetch client for the sharing-nim HTTP API. All state lives on the server;
// nothing here caches game state.

export type Label = "L0" | "L1" | "L2";

export interface LabelMove {
  source: Label;
  dest: Label;
  k: number;
}

export interface HistoryEntry {
  mover: "human" | "engine";
  move: LabelMove;
  position: Record<Label, number>;
}

export interface GameState {
  id: string;
  piles: Record<Label, number>;
  status: "in_progress" | "finished";
  history: HistoryEntry[];
  winner?: "human" | "engine";
  next_mover?: "human" | "engine";
}

/** Move indices refer to the sorted triple, not to labels. */
export interface IndexMove {
  source: number;
  dest: number;
  k: number;
}

export interface AnalysisStatus {
  outcome: "P" | "N";
  terminal: boolean;
  normalized: { A: number; B: number };
  valuation: number | null;
  odd_part: number | null;
  winning_moves: IndexMove[];
}

export interface TableSlice {
  max_b: number;
  rows: (number | null)[][];
}

export class ApiError extends Error {
  status: number;
  code: string;
  detail: string;

  constructor(status: number, code: string, detail: string) {
    super(`${code}: ${detail}`);
    this.status = status;
    this.code = code;
    this.detail = detail;
  }
}

let base = "";

/** Point the client at another origin (tests run the server on its own port). */
export function configure(baseUrl: string): void {
  base = baseUrl;
}

async function request<T>(method: string, path: string, body?: unknown): Promise<T> {
  const init: RequestInit = { method };
  if (body !== undefined) {
    init.headers = { "Content-Type": "application/json" };
    init.body = JSON.stringify(body);
  }
  const res = await fetch(base + path, init);
  const data = await res.json();
  if (!res.ok) {
    throw new ApiError(res.status, data.error ?? "unknown", data.detail ?? res.statusText);
  }
  return data as T;
}

export function createGame(piles: [number, number, number]): Promise<GameState> {
  return request("POST", "/api/games", { piles });
}

export function getGame(id: string): Promise<GameState> {
  return request("GET", `/api/games/${id}`);
}

export function submitMove(id: string, move: LabelMove): Promise<GameState> {
  return request("POST", `/api/games/${id}/moves`, move);
}

export function engineMove(id: string): Promise<GameState> {
  return request("POST", `/api/games/${id}/engine-move`);
}

export function analysisStatus(a: number, b: number, c: number): Promise<AnalysisStatus> {
  return request("GET", `/api/analysis/status?a=${a}&b=${b}&c=${c}`);
}

export function fetchTable(maxB: number): Promise<TableSlice> {
  return request("GET", `/api/analysis/table?max_b=${maxB}`);
}

export function fetchGrundy(a: number, b: number): Promise<{ a: number; b: number; value: number }> {
  return request("GET", `/api/analysis/grundy?a=${a}&b=${b}`);
}
