// Grundy-table heatmap. One colored cell per (a, b) with a <= b, tooltip on
// hover. Color depends only on the value, so equal values read as equal
// cells and the column palindromes are visible directly.

import { ApiError, fetchTable } from "./client";

const PALETTE = [
  "#2c3e70", // 0, the losing class, dark so it stands out
  "#e8554e",
  "#f19c38",
  "#f2d13e",
  "#7fbf4d",
  "#3fa7a3",
  "#4f81c7",
  "#9068be",
  "#c95f8e",
  "#8a6f4d",
  "#5e5e5e",
];

// values past the palette fall back to a computed hue
export function valueColor(v: number): string {
  if (v < PALETTE.length) return PALETTE[v];
  return `hsl(${(v * 47) % 360}, 55%, 55%)`;
}

export async function renderHeatmap(container: HTMLElement, maxB: number): Promise<void> {
  let slice;
  try {
    slice = await fetchTable(maxB);
  } catch (e) {
    if (e instanceof ApiError) {
      container.innerHTML = `<div class="heatmap-error">${e.detail}</div>`;
      return;
    }
    throw e;
  }

  const cells: string[] = [];
  for (let a = 0; a <= slice.max_b; a++) {
    for (let b = 0; b <= slice.max_b; b++) {
      const v = slice.rows[a][b];
      if (v === null) {
        cells.push('<div class="cell empty"></div>');
      } else {
        cells.push(
          `<div class="cell" data-a="${a}" data-b="${b}" data-value="${v}"` +
            ` style="background:${valueColor(v)}"></div>`
        );
      }
    }
  }
  container.innerHTML = `
    <div class="heatmap-grid" style="grid-template-columns:repeat(${slice.max_b + 1},16px)">
      ${cells.join("")}
    </div>
    <div class="heatmap-tooltip" hidden></div>`;

  const grid = container.querySelector<HTMLElement>(".heatmap-grid")!;
  const tooltip = container.querySelector<HTMLElement>(".heatmap-tooltip")!;
  grid.addEventListener("mouseover", (e) => {
    const cell = (e.target as HTMLElement).closest<HTMLElement>(".cell[data-value]");
    if (!cell) return;
    const { a, b, value } = cell.dataset;
    tooltip.textContent = `a=${a}, b=${b}, value=${value}`;
    tooltip.hidden = false;
  });
  grid.addEventListener("mousemove", (e) => {
    const me = e as MouseEvent;
    tooltip.style.left = `${me.pageX + 12}px`;
    tooltip.style.top = `${me.pageY + 12}px`;
  });
  grid.addEventListener("mouseout", () => {
    tooltip.hidden = true;
  });
}
