import { GameController } from "./controller";
import { renderHeatmap } from "./heatmap";

// entry point for the served page; tests use the modules directly

const app = document.querySelector<HTMLElement>("#app");

if (app) {
  app.innerHTML = `
    <h1>Sharing Nim</h1>
    <p>Pick a pile to move from, a pile to move to, choose how many tokens,
       and try to make the last move. The engine answers every move.</p>
    <form id="new-game">
      <input type="number" id="p0" min="0" value="0">
      <input type="number" id="p1" min="0" value="2">
      <input type="number" id="p2" min="0" value="5">
      <button type="submit">New game</button>
      <button type="button" id="engine-first">Engine starts</button>
    </form>
    <div id="board-panel"></div>
    <h2>Value table</h2>
    <form id="heatmap-form">
      max b <input type="number" id="heatmap-max-b" min="0" max="600" value="16">
      <button type="submit">Draw</button>
    </form>
    <div id="heatmap-panel"></div>`;

  const boardPanel = document.querySelector<HTMLElement>("#board-panel")!;
  const controller = new GameController(boardPanel);

  const pileInputs = () =>
    (["#p0", "#p1", "#p2"] as const).map(
      (sel) => Number(document.querySelector<HTMLInputElement>(sel)!.value)
    ) as [number, number, number];

  document.querySelector<HTMLFormElement>("#new-game")!.addEventListener("submit", (e) => {
    e.preventDefault();
    void controller.newGame(pileInputs());
  });

  document.querySelector<HTMLElement>("#engine-first")!.addEventListener("click", () => {
    void controller.newGame(pileInputs()).then(() => controller.engineTurn());
  });

  document.querySelector<HTMLFormElement>("#heatmap-form")!.addEventListener("submit", (e) => {
    e.preventDefault();
    const maxB = Number(document.querySelector<HTMLInputElement>("#heatmap-max-b")!.value);
    void renderHeatmap(document.querySelector<HTMLElement>("#heatmap-panel")!, maxB);
  });
}
