// View-state derivation. Everything is computed from the last server
// response; the board never mutates pile counts locally.

import type { GameState, IndexMove, Label, LabelMove } from "./client";

export const LABELS: Label[] = ["L0", "L1", "L2"];

export interface Selection {
  source: Label | null;
  dest: Label | null;
  k: number;
}

export interface HintInfo {
  outcome: "P" | "N";
  move: LabelMove | null;
}

export interface ViewState {
  game: GameState;
  selection: Selection;
  hintOn: boolean;
  hint: HintInfo | null;
  error: string | null;
}

export function emptySelection(): Selection {
  return { source: null, dest: null, k: 1 };
}

export function initialView(game: GameState): ViewState {
  // hint starts off so the game stays a puzzle
  return { game, selection: emptySelection(), hintOn: false, hint: null, error: null };
}

/**
 * Largest k the move rule allows from source to dest: after moving k the
 * destination may not exceed the source, so k <= (source - dest) / 2.
 * Can be zero or negative; anything below 1 means no move exists.
 */
export function sliderMax(piles: Record<Label, number>, source: Label, dest: Label): number {
  return Math.floor((piles[source] - piles[dest]) / 2);
}

export function canMove(piles: Record<Label, number>, source: Label, dest: Label): boolean {
  return source !== dest && sliderMax(piles, source, dest) >= 1;
}

/** Ordered pairs a human could legally pick, creation-label order. */
export function movablePairs(piles: Record<Label, number>): [Label, Label][] {
  const pairs: [Label, Label][] = [];
  for (const src of LABELS) {
    for (const dst of LABELS) {
      if (src !== dst && canMove(piles, src, dst)) pairs.push([src, dst]);
    }
  }
  return pairs;
}

export function isTerminal(piles: Record<Label, number>): boolean {
  return movablePairs(piles).length === 0;
}

/**
 * Labels in ascending pile order, ties broken by label name. Must match the
 * server's ordering exactly or hint moves would point at the wrong piles.
 */
export function sortedLabels(piles: Record<Label, number>): Label[] {
  return [...LABELS].sort((x, y) => piles[x] - piles[y] || (x < y ? -1 : 1));
}

/** Translate a sorted-index analysis move to the labels on screen. */
export function indexMoveToLabels(piles: Record<Label, number>, m: IndexMove): LabelMove {
  const order = sortedLabels(piles);
  return { source: order[m.source], dest: order[m.dest], k: m.k };
}

export function bannerText(game: GameState): string {
  if (game.status === "finished") {
    if (game.winner === "human") return "You win";
    if (game.winner === "engine") return "Engine wins";
    return "Game over"; // terminal from the start, nobody moved
  }
  return game.next_mover === "engine" ? "Engine to move" : "Your move";
}
