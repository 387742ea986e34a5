// Scripted full-game runs against the live server. The "human" draws its
// choices from a seeded PRNG, restricted to exactly what the UI offers:
// a source/dest pair with a visible slider and a k within the slider range.

import { beforeAll, describe, expect, it } from "vitest";
import { GameState, configure, createGame, engineMove, submitMove } from "../src/client";
import { bannerText, movablePairs, sliderMax } from "../src/state";
import { BASE, mulberry32, pick, randInt } from "./helpers";

beforeAll(() => configure(BASE));

async function randomHumanMove(state: GameState, rng: () => number): Promise<GameState> {
  const pairs = movablePairs(state.piles);
  expect(pairs.length).toBeGreaterThan(0);
  const [src, dst] = pick(rng, pairs);
  const k = randInt(rng, 1, sliderMax(state.piles, src, dst));
  // within slider bounds this must never 4xx
  return submitMove(state.id, { source: src, dest: dst, k });
}

async function playOut(
  start: [number, number, number],
  seed: number,
  engineFirst: boolean
): Promise<GameState> {
  const rng = mulberry32(seed);
  let state = await createGame(start);
  if (engineFirst) state = await engineMove(state.id);
  for (let guard = 0; guard < 100 && state.status === "in_progress"; guard++) {
    state = await randomHumanMove(state, rng);
    if (state.status !== "in_progress") break;
    expect(state.next_mover).toBe("engine");
    state = await engineMove(state.id);
  }
  expect(state.status).toBe("finished");
  return state;
}

function expectAlternation(state: GameState, first: "human" | "engine") {
  state.history.forEach((entry, i) => {
    const expected = (i % 2 === 0) === (first === "human") ? "human" : "engine";
    expect(entry.mover).toBe(expected);
  });
}

describe("full game loop from (0,2,5)", () => {
  it("engine moving first wins no matter what the human does", async () => {
    // no seed can save the human here: the engine's reply always restores a
    // losing position, and from one of those no move ever reaches a dead end
    for (let seed = 1; seed <= 10; seed++) {
      const state = await playOut([0, 2, 5], seed, true);
      expect(state.winner).toBe("engine");
      expect(bannerText(state)).toBe("Engine wins");
      expectAlternation(state, "engine");
      expect(state.history[state.history.length - 1].mover).toBe("engine");
    }
  });

  it("engine moving second wins whenever the human misses the one shot", async () => {
    // seeds picked so the scripted human never opens with a winning move;
    // (0,2,5) is winnable for the first mover, so some seeds do luck out
    for (const seed of [1, 2, 3, 4, 5, 6, 8, 9]) {
      const state = await playOut([0, 2, 5], seed, false);
      expect(state.winner).toBe("engine");
      expect(bannerText(state)).toBe("Engine wins");
      expectAlternation(state, "human");
    }
  });

  it("credits the human when random play does find the winning move", async () => {
    // seed 10 happens to open with the equalizing transfer to (2,2,3)
    const state = await playOut([0, 2, 5], 10, false);
    expect(state.winner).toBe("human");
    expect(bannerText(state)).toBe("You win");
    expect(state.history).toHaveLength(1);
  });
});

describe("slider bounds vs server legality", () => {
  const starts: [number, number, number][] = [
    [0, 1, 3],
    [0, 2, 4],
    [1, 2, 7],
    [0, 0, 8],
    [2, 3, 9],
    [0, 4, 4],
    [1, 1, 5],
    [3, 4, 9],
    [0, 2, 5],
    [5, 0, 2],
    [0, 0, 12],
  ];

  it("accepts every k the slider would offer", async () => {
    let checked = 0;
    for (const start of starts) {
      const probe = await createGame(start);
      for (const [src, dst] of movablePairs(probe.piles)) {
        const max = sliderMax(probe.piles, src, dst);
        for (let k = 1; k <= max; k++) {
          const game = await createGame(start);
          const after = await submitMove(game.id, { source: src, dest: dst, k });
          expect(after.piles[src]).toBe(game.piles[src] - k);
          expect(after.piles[dst]).toBe(game.piles[dst] + k);
          checked++;
        }
      }
    }
    expect(checked).toBeGreaterThan(50);
  });

  it("and the server rejects exactly the pairs the slider hides", async () => {
    for (const start of starts) {
      const probe = await createGame(start);
      const offered = new Set(movablePairs(probe.piles).map(([s, d]) => `${s}>${d}`));
      for (const src of ["L0", "L1", "L2"] as const) {
        for (const dst of ["L0", "L1", "L2"] as const) {
          if (src === dst || offered.has(`${src}>${dst}`)) continue;
          const game = await createGame(start);
          if (game.status !== "in_progress") continue;
          const err = await submitMove(game.id, { source: src, dest: dst, k: 1 }).catch((e) => e);
          expect(err.code).toBe("illegal_move");
        }
      }
    }
  });
});
