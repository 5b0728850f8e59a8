/**
 * Headless tests of the built chart asset (dist/chart.js): the exact file
 * embedded into reports is evaluated inside a jsdom window, the way a
 * browser would run it.
 */
import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

import { JSDOM } from "jsdom";
import { beforeEach, describe, expect, it } from "vitest";

const here = dirname(fileURLToPath(import.meta.url));
const ASSET = readFileSync(join(here, "..", "dist", "chart-asset.js"), "utf-8");

type RenderFn = (payload: unknown, root: unknown) => number;

interface Page {
  window: JSDOM["window"];
  document: Document;
  render: RenderFn;
  networkCalls: string[];
}

function makePayload(metricCount: number): Record<string, unknown> {
  return {
    repo: "demo",
    unit: "year",
    boundaries: ["2022-01-01", "2023-01-01", "2024-01-01"],
    metrics: Array.from({ length: metricCount }, (_, i) => ({
      name: `Metric ${i}`,
      kind: i % 2 === 0 ? "numeric" : "categorical",
      series:
        i % 2 === 0
          ? [{ label: `Metric ${i}`, values: [1, 2.5, 3] }]
          : [
              { label: "alpha", values: [1, 0, 2] },
              { label: "beta", values: [0, 1, 0] },
            ],
    })),
    metadata: { language: "python" },
  };
}

function loadPage(html?: string): Page {
  const dom = new JSDOM(html ?? "<!doctype html><html><body></body></html>", {
    runScripts: "outside-only",
  });
  const networkCalls: string[] = [];
  const win = dom.window as unknown as Record<string, unknown>;
  win.fetch = (...args: unknown[]) => {
    networkCalls.push(`fetch:${String(args[0])}`);
    return Promise.reject(new Error("network disabled in tests"));
  };
  class BlockedXHR {
    open(...args: unknown[]) {
      networkCalls.push(`xhr:${String(args[1])}`);
    }
    send() {}
  }
  win.XMLHttpRequest = BlockedXHR;
  dom.window.eval(ASSET);
  const render = (dom.window as unknown as { renderReport: RenderFn }).renderReport;
  expect(typeof render).toBe("function");
  return { window: dom.window, document: dom.window.document, render, networkCalls };
}

describe("renderReport", () => {
  let page: Page;

  beforeEach(() => {
    page = loadPage();
  });

  it("renders exactly one chart container per metric (5 -> 5)", () => {
    const count = page.render(makePayload(5), page.document);
    expect(count).toBe(5);
    expect(page.document.querySelectorAll(".chart-slot").length).toBe(5);
    expect(page.document.querySelectorAll(".chart-slot svg").length).toBe(5);
  });

  it("makes zero network requests and adds no external resources", () => {
    page.render(makePayload(5), page.document);
    expect(page.networkCalls).toEqual([]);
    expect(page.document.querySelectorAll("img, link, iframe, script[src]").length).toBe(0);
  });

  it("renders zero charts for an empty metric list but keeps the page alive", () => {
    const payload = makePayload(0);
    const count = page.render(payload, page.document);
    expect(count).toBe(0);
    expect(page.document.querySelectorAll(".chart-slot").length).toBe(0);
    expect(page.document.querySelector(".render-error")).toBeNull();
  });

  it("chart count always equals payload metric count", () => {
    for (const n of [1, 2, 3, 7]) {
      const fresh = loadPage();
      expect(fresh.render(makePayload(n), fresh.document)).toBe(n);
      expect(fresh.document.querySelectorAll(".chart-slot").length).toBe(n);
    }
  });

  it("categorical metrics get one legend entry per series", () => {
    const payload = {
      repo: "demo",
      unit: "year",
      boundaries: ["2022-01-01", "2023-01-01"],
      metrics: [
        {
          name: "Data structures",
          kind: "categorical",
          series: [
            { label: "list", values: [1, 2] },
            { label: "dictionary", values: [0, 1] },
            { label: "set", values: [3, 0] },
            { label: "tuple", values: [1, 1] },
          ],
        },
      ],
      metadata: {},
    };
    expect(page.render(payload, page.document)).toBe(1);
    expect(page.document.querySelectorAll(".chart-slot").length).toBe(1);
    expect(page.document.querySelectorAll(".legend-entry").length).toBe(4);
    expect(page.document.querySelectorAll("polyline.series-line").length).toBe(4);
  });

  it("numeric metrics render a single line and no legend", () => {
    const payload = makePayload(1);
    page.render(payload, page.document);
    expect(page.document.querySelectorAll("polyline.series-line").length).toBe(1);
    expect(page.document.querySelectorAll(".chart-legend").length).toBe(0);
  });

  it("schema-invalid payload renders a visible error banner, never a blank page", () => {
    const bad = {
      repo: "demo",
      unit: "year",
      boundaries: ["2022-01-01"],
      metrics: [{ name: "broken", kind: "numeric", series: [{ label: "broken", values: [1, 2] }] }],
      metadata: { language: "python" },
    };
    const count = page.render(bad, page.document);
    expect(count).toBe(0);
    const banner = page.document.querySelector(".render-error");
    expect(banner).not.toBeNull();
    expect(banner!.textContent).toContain("broken");
    // Metadata still shown alongside the banner.
    expect(page.document.querySelector(".render-error-metadata")!.textContent).toContain("python");
    expect(page.document.body.textContent!.trim().length).toBeGreaterThan(0);
  });

  it("rejects wrong kinds and non-numeric values", () => {
    for (const bad of [
      { ...makePayload(1), unit: 7 },
      { ...makePayload(1), boundaries: "2022" },
      {
        repo: "x", unit: "year", boundaries: ["2022-01-01"],
        metrics: [{ name: "m", kind: "weird", series: [] }], metadata: {},
      },
      {
        repo: "x", unit: "year", boundaries: ["2022-01-01"],
        metrics: [{ name: "m", kind: "numeric", series: [{ label: "m", values: ["high"] }] }],
        metadata: {},
      },
    ]) {
      const fresh = loadPage();
      expect(fresh.render(bad, fresh.document)).toBe(0);
      expect(fresh.document.querySelector(".render-error")).not.toBeNull();
    }
  });

  it("re-rendering is idempotent: replaces charts instead of duplicating", () => {
    const payload = makePayload(3);
    page.render(payload, page.document);
    const first = page.document.querySelectorAll(".chart-slot").length;
    page.render(payload, page.document);
    page.render(payload, page.document);
    expect(page.document.querySelectorAll(".chart-slot").length).toBe(first);
    expect(page.document.querySelectorAll(".chart-slot svg").length).toBe(3);
  });

  it("re-rendering after an error clears the banner", () => {
    page.render({ nope: true }, page.document);
    expect(page.document.querySelector(".render-error")).not.toBeNull();
    page.render(makePayload(2), page.document);
    expect(page.document.querySelector(".render-error")).toBeNull();
    expect(page.document.querySelectorAll(".chart-slot").length).toBe(2);
  });

  it("fills pre-rendered slots from the host page instead of duplicating them", () => {
    const html = `<!doctype html><html><body><main id="charts">
      <section class="chart-slot" data-metric="Metric 0"><h2>Metric 0</h2><div class="chart-mount"></div></section>
      <section class="chart-slot" data-metric="Stale"><h2>Stale</h2><div class="chart-mount"></div></section>
    </main></body></html>`;
    const fresh = loadPage(html);
    expect(fresh.render(makePayload(1), fresh.document)).toBe(1);
    const slots = fresh.document.querySelectorAll(".chart-slot");
    expect(slots.length).toBe(1);
    expect(slots[0].getAttribute("data-metric")).toBe("Metric 0");
    expect(slots[0].querySelectorAll("svg").length).toBe(1);
  });
});

describe("auto-run on embedded payload", () => {
  function pageWithPayload(payloadJson: string): JSDOM {
    const html = `<!doctype html><html><body>
      <main id="charts"></main>
      <script id="report-data" type="application/json">${payloadJson}</script>
    </body></html>`;
    const dom = new JSDOM(html, { runScripts: "outside-only" });
    dom.window.eval(ASSET);
    // jsdom fires DOMContentLoaded on a later tick; force it so the
    // asset's auto-run path executes synchronously for the assertions.
    dom.window.document.dispatchEvent(new dom.window.Event("DOMContentLoaded"));
    return dom;
  }

  it("renders charts from the embedded script tag", () => {
    const dom = pageWithPayload(JSON.stringify(makePayload(3)));
    expect(dom.window.document.querySelectorAll(".chart-slot svg").length).toBe(3);
  });

  it("shows the error banner on unparseable payloads", () => {
    const dom = pageWithPayload("{not json");
    expect(dom.window.document.querySelector(".render-error")).not.toBeNull();
  });
});
