// Board rendering. The whole panel is rebuilt from the current ViewState on
// every change; no DOM node carries state of its own.

import type { Label } from "./client";
import { LABELS, ViewState, bannerText, sliderMax } from "./state";

export interface BoardHandlers {
  onSelect(label: Label): void;
  onKChange(k: number): void;
  onMove(): void;
  onHintToggle(on: boolean): void;
}

const STACK_CAP = 30; // draw at most this many tokens, the count is shown anyway

function pileHtml(view: ViewState, label: Label): string {
  const size = view.game.piles[label];
  const classes = ["pile"];
  if (view.selection.source === label) classes.push("selected-source");
  if (view.selection.dest === label) classes.push("selected-dest");
  if (view.hint?.move?.source === label) classes.push("hint-source");
  if (view.hint?.move?.dest === label) classes.push("hint-dest");
  const tokens = '<div class="token"></div>'.repeat(Math.min(size, STACK_CAP));
  return `
    <div class="${classes.join(" ")}" data-label="${label}">
      <div class="stack">${tokens}</div>
      <div class="pile-name">${label}</div>
      <div class="pile-count">${size}</div>
    </div>`;
}

function controlsHtml(view: ViewState): string {
  const { source, dest, k } = view.selection;
  let slider = "";
  let button = '<button class="move-btn" disabled>Move</button>';
  if (source && dest && view.game.status === "in_progress") {
    const max = sliderMax(view.game.piles, source, dest);
    if (max >= 1) {
      const value = Math.min(Math.max(k, 1), max);
      slider = `
        <label class="k-control">
          k = <span class="k-value">${value}</span>
          <input type="range" class="k-slider" min="1" max="${max}" value="${value}">
        </label>`;
      button = '<button class="move-btn">Move</button>';
    }
  }
  return `<div class="controls">${slider}${button}</div>`;
}

export function render(container: HTMLElement, view: ViewState, handlers: BoardHandlers): void {
  const piles = LABELS.map((lab) => pileHtml(view, lab)).join("");
  const hintInfo = view.hint
    ? `<div class="hint-info">position: ${view.hint.outcome}</div>`
    : "";
  container.innerHTML = `
    <div class="banner">${bannerText(view.game)}</div>
    <div class="board">${piles}</div>
    ${controlsHtml(view)}
    <div class="error">${view.error ?? ""}</div>
    <label class="hint-control">
      <input type="checkbox" class="hint-toggle"${view.hintOn ? " checked" : ""}> hint
    </label>
    ${hintInfo}`;

  for (const pileEl of container.querySelectorAll<HTMLElement>(".pile")) {
    pileEl.addEventListener("click", () => handlers.onSelect(pileEl.dataset.label as Label));
  }
  const slider = container.querySelector<HTMLInputElement>(".k-slider");
  slider?.addEventListener("input", () => {
    const span = container.querySelector(".k-value");
    if (span) span.textContent = slider.value;
    handlers.onKChange(Number(slider.value));
  });
  const moveBtn = container.querySelector<HTMLButtonElement>(".move-btn");
  if (moveBtn && !moveBtn.disabled) moveBtn.addEventListener("click", () => handlers.onMove());
  const toggle = container.querySelector<HTMLInputElement>(".hint-toggle");
  toggle?.addEventListener("change", () => handlers.onHintToggle(toggle.checked));
}
