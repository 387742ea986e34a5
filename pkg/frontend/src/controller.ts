// Glue between the API client and the board. One controller per tab, one
// game at a time; every transition waits for the server's answer before
// touching the view.

import {
  ApiError,
  GameState,
  Label,
  analysisStatus,
  createGame,
  engineMove,
  submitMove,
} from "./client";
import { render } from "./board";
import { ViewState, emptySelection, indexMoveToLabels, initialView } from "./state";

function sleep(ms: number): Promise<void> {
  return new Promise((resolve) => setTimeout(resolve, ms));
}

export class GameController {
  container: HTMLElement;
  view: ViewState | null = null;
  /** Pause between showing the human's move and the engine's reply. */
  pauseMs: number;
  /** Last async action kicked off by a DOM event, awaitable by tests. */
  pending: Promise<void> | null = null;

  constructor(container: HTMLElement, opts: { pauseMs?: number } = {}) {
    this.container = container;
    this.pauseMs = opts.pauseMs ?? 300;
  }

  async newGame(piles: [number, number, number]): Promise<GameState> {
    const game = await createGame(piles);
    this.view = initialView(game);
    this.draw();
    return game;
  }

  select(label: Label): void {
    if (!this.view) return;
    const sel = this.view.selection;
    if (sel.source === null) {
      sel.source = label;
    } else if (sel.dest === null && label !== sel.source) {
      sel.dest = label;
    } else {
      // third click starts over from the clicked pile
      this.view.selection = { ...emptySelection(), source: label };
    }
    this.draw();
  }

  setK(k: number): void {
    if (this.view) this.view.selection.k = k;
  }

  /** Submit the selected human move, then let the engine answer. */
  async playTurn(): Promise<void> {
    const view = this.view;
    if (!view) return;
    const { source, dest, k } = view.selection;
    if (source === null || dest === null) return;
    let state: GameState;
    try {
      state = await submitMove(view.game.id, { source, dest, k });
    } catch (e) {
      if (e instanceof ApiError && e.code === "illegal_move") {
        view.error = e.detail; // keep the selection so the user can fix k
        this.draw();
        return;
      }
      throw e;
    }
    view.game = state;
    view.selection = emptySelection();
    view.error = null;
    await this.refreshHint();
    this.draw();
    if (state.status === "in_progress") {
      if (this.pauseMs > 0) await sleep(this.pauseMs);
      await this.engineTurn();
    }
  }

  /** Ask the engine to move now (also used when the engine opens the game). */
  async engineTurn(): Promise<void> {
    const view = this.view;
    if (!view || view.game.status !== "in_progress") return;
    view.game = await engineMove(view.game.id);
    await this.refreshHint();
    this.draw();
  }

  async setHint(on: boolean): Promise<void> {
    if (!this.view) return;
    this.view.hintOn = on;
    await this.refreshHint();
    this.draw();
  }

  private async refreshHint(): Promise<void> {
    const view = this.view;
    if (!view) return;
    if (!view.hintOn || view.game.status !== "in_progress") {
      view.hint = null;
      return;
    }
    const p = view.game.piles;
    const status = await analysisStatus(p.L0, p.L1, p.L2);
    view.hint = {
      outcome: status.outcome,
      move: status.winning_moves.length
        ? indexMoveToLabels(p, status.winning_moves[0])
        : null,
    };
  }

  private draw(): void {
    if (!this.view) return;
    render(this.container, this.view, {
      onSelect: (label) => this.select(label),
      onKChange: (k) => this.setK(k),
      onMove: () => {
        this.pending = this.playTurn();
      },
      onHintToggle: (on) => {
        this.pending = this.setHint(on);
      },
    });
  }
}
