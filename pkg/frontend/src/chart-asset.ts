/**
 * Chart rendering asset embedded into every HTML report.
 *
 * Reads the JSON payload from the page (script#report-data), renders one
 * SVG time-series chart per metric (single line for numeric metrics, one
 * line per series with a legend for categorical ones), and exposes
 * renderReport for host pages and tests. No imports, no network: the
 * compiled file is a plain self-contained script.
 */

interface SeriesData {
  label: string;
  values: number[];
}

interface MetricData {
  name: string;
  kind: string;
  series: SeriesData[];
}

interface ReportPayload {
  repo: string;
  unit: string;
  boundaries: string[];
  metrics: MetricData[];
  metadata: Record<string, unknown>;
}

const CHART_WIDTH = 560;
const CHART_HEIGHT = 260;
const MARGIN = { top: 14, right: 16, bottom: 34, left: 52 };
const PALETTE = [
  "#2563eb", "#dc2626", "#059669", "#d97706",
  "#7c3aed", "#0d9488", "#db2777", "#65a30d",
];
const SVG_NS = "http://www.w3.org/2000/svg";

function validatePayload(raw: unknown): string | null {
  if (typeof raw !== "object" || raw === null) return "payload is not an object";
  const p = raw as Partial<ReportPayload>;
  if (typeof p.repo !== "string") return "payload.repo must be a string";
  if (typeof p.unit !== "string") return "payload.unit must be a string";
  if (!Array.isArray(p.boundaries) || p.boundaries.some((b) => typeof b !== "string")) {
    return "payload.boundaries must be an array of date strings";
  }
  if (!Array.isArray(p.metrics)) return "payload.metrics must be an array";
  for (const metric of p.metrics) {
    if (typeof metric !== "object" || metric === null) return "metric entries must be objects";
    if (typeof metric.name !== "string" || metric.name === "") return "metric.name must be a non-empty string";
    if (metric.kind !== "numeric" && metric.kind !== "categorical") {
      return `metric ${JSON.stringify(metric.name)} has unknown kind ${JSON.stringify(metric.kind)}`;
    }
    if (!Array.isArray(metric.series)) return `metric ${JSON.stringify(metric.name)} series must be an array`;
    for (const series of metric.series) {
      if (typeof series !== "object" || series === null) return "series entries must be objects";
      if (typeof series.label !== "string") return "series.label must be a string";
      if (!Array.isArray(series.values) || series.values.some((v) => typeof v !== "number" || !isFinite(v))) {
        return `series ${JSON.stringify(series.label)} values must be finite numbers`;
      }
      if (series.values.length !== p.boundaries.length) {
        return `series ${JSON.stringify(series.label)} has ${series.values.length} values for ${p.boundaries.length} boundaries`;
      }
    }
  }
  return null;
}

function formatNumber(value: number): string {
  if (Number.isInteger(value)) return String(value);
  const rounded = Math.round(value * 100) / 100;
  return String(rounded);
}

function svgEl(doc: Document, tag: string, attrs: Record<string, string>): SVGElement {
  const el = doc.createElementNS(SVG_NS, tag) as SVGElement;
  for (const key of Object.keys(attrs)) el.setAttribute(key, attrs[key]);
  return el;
}

function drawChart(doc: Document, metric: MetricData, boundaries: string[]): SVGElement {
  const svg = svgEl(doc, "svg", {
    viewBox: `0 0 ${CHART_WIDTH} ${CHART_HEIGHT}`,
    width: "100%",
    role: "img",
    class: "evo-chart",
  });
  const innerW = CHART_WIDTH - MARGIN.left - MARGIN.right;
  const innerH = CHART_HEIGHT - MARGIN.top - MARGIN.bottom;
  const n = boundaries.length;
  let maxValue = 0;
  for (const series of metric.series) {
    for (const v of series.values) maxValue = Math.max(maxValue, v);
  }
  if (maxValue <= 0) maxValue = 1;
  const x = (i: number) => MARGIN.left + (n <= 1 ? innerW / 2 : (i * innerW) / (n - 1));
  const y = (v: number) => MARGIN.top + innerH - (v / maxValue) * innerH;

  // Axes.
  svg.appendChild(svgEl(doc, "line", {
    x1: String(MARGIN.left), y1: String(MARGIN.top + innerH),
    x2: String(MARGIN.left + innerW), y2: String(MARGIN.top + innerH),
    stroke: "#999", "stroke-width": "1",
  }));
  svg.appendChild(svgEl(doc, "line", {
    x1: String(MARGIN.left), y1: String(MARGIN.top),
    x2: String(MARGIN.left), y2: String(MARGIN.top + innerH),
    stroke: "#999", "stroke-width": "1",
  }));

  // Y ticks.
  const yTicks = 4;
  for (let t = 0; t <= yTicks; t++) {
    const value = (maxValue * t) / yTicks;
    const ty = y(value);
    if (t > 0) {
      svg.appendChild(svgEl(doc, "line", {
        x1: String(MARGIN.left), y1: String(ty),
        x2: String(MARGIN.left + innerW), y2: String(ty),
        stroke: "#eee", "stroke-width": "1",
      }));
    }
    const label = svgEl(doc, "text", {
      x: String(MARGIN.left - 6), y: String(ty + 3),
      "text-anchor": "end", "font-size": "10", fill: "#555", class: "y-tick",
    });
    label.textContent = formatNumber(value);
    svg.appendChild(label);
  }

  // X tick labels, thinned to at most 8.
  const step = Math.max(1, Math.ceil(n / 8));
  for (let i = 0; i < n; i += step) {
    const label = svgEl(doc, "text", {
      x: String(x(i)), y: String(MARGIN.top + innerH + 16),
      "text-anchor": "middle", "font-size": "9", fill: "#555", class: "x-tick",
    });
    label.textContent = boundaries[i];
    svg.appendChild(label);
  }

  metric.series.forEach((series, idx) => {
    const color = PALETTE[idx % PALETTE.length];
    const points = series.values.map((v, i) => `${x(i)},${y(v)}`).join(" ");
    if (series.values.length > 1) {
      svg.appendChild(svgEl(doc, "polyline", {
        points,
        fill: "none",
        stroke: color,
        "stroke-width": "2",
        class: "series-line",
        "data-series": series.label,
      }));
    }
    series.values.forEach((v, i) => {
      const dot = svgEl(doc, "circle", {
        cx: String(x(i)), cy: String(y(v)), r: "2.8",
        fill: color, class: "series-point",
      });
      const title = doc.createElementNS(SVG_NS, "title");
      title.textContent = `${series.label} · ${boundaries[i]}: ${formatNumber(v)}`;
      dot.appendChild(title);
      svg.appendChild(dot);
    });
  });
  return svg;
}

function legendFor(doc: Document, metric: MetricData): HTMLElement {
  const legend = doc.createElement("ul");
  legend.className = "chart-legend";
  legend.setAttribute("style", "list-style:none;display:flex;flex-wrap:wrap;gap:0.8em;padding:0;margin:0.4em 0 0;font-size:12px;");
  metric.series.forEach((series, idx) => {
    const item = doc.createElement("li");
    item.className = "legend-entry";
    const swatch = doc.createElement("span");
    swatch.setAttribute(
      "style",
      `display:inline-block;width:10px;height:10px;margin-right:4px;background:${PALETTE[idx % PALETTE.length]};`,
    );
    item.appendChild(swatch);
    item.appendChild(doc.createTextNode(series.label));
    legend.appendChild(item);
  });
  return legend;
}

function errorBanner(doc: Document, host: HTMLElement, message: string, metadata: unknown): void {
  const banner = doc.createElement("div");
  banner.className = "render-error";
  banner.setAttribute("role", "alert");
  banner.textContent = `report rendering failed: ${message}`;
  host.appendChild(banner);
  if (metadata !== undefined) {
    const details = doc.createElement("pre");
    details.className = "render-error-metadata";
    try {
      details.textContent = JSON.stringify(metadata, null, 2);
    } catch {
      details.textContent = String(metadata);
    }
    host.appendChild(details);
  }
}

function docOf(root: Document | HTMLElement): Document {
  return root.nodeType === 9 ? (root as Document) : (root as HTMLElement).ownerDocument!;
}

function chartsHost(root: Document | HTMLElement): HTMLElement {
  const existing = root.querySelector<HTMLElement>("#charts");
  if (existing) return existing;
  const doc = docOf(root);
  const host = doc.createElement("main");
  host.id = "charts";
  const body = root.nodeType === 9 ? (root as Document).body : (root as HTMLElement);
  body.appendChild(host);
  return host;
}

/**
 * Render one chart per metric into the page; returns the chart count.
 * Re-rendering replaces previous charts. A schema-invalid payload renders
 * a visible error banner (plus any metadata) and returns 0.
 */
function renderReport(payload: unknown, root: Document | HTMLElement): number {
  const doc = docOf(root);
  const host = chartsHost(root);
  // Idempotency: previous error banners and charts are replaced.
  for (const stale of Array.from(host.querySelectorAll(".render-error, .render-error-metadata"))) {
    stale.remove();
  }
  const problem = validatePayload(payload);
  if (problem !== null) {
    for (const slot of Array.from(host.querySelectorAll(".chart-slot"))) slot.remove();
    const metadata = (typeof payload === "object" && payload !== null)
      ? (payload as { metadata?: unknown }).metadata
      : undefined;
    errorBanner(doc, host, problem, metadata);
    return 0;
  }
  const report = payload as ReportPayload;

  const wanted = new Set(report.metrics.map((m) => m.name));
  for (const slot of Array.from(host.querySelectorAll<HTMLElement>(".chart-slot"))) {
    const name = slot.getAttribute("data-metric");
    if (name === null || !wanted.has(name)) slot.remove();
  }

  report.metrics.forEach((metric) => {
    let slot = host.querySelector<HTMLElement>(
      `.chart-slot[data-metric="${cssEscape(metric.name)}"]`,
    );
    if (slot === null) {
      slot = doc.createElement("section");
      slot.className = "chart-slot";
      slot.setAttribute("data-metric", metric.name);
      const title = doc.createElement("h2");
      title.textContent = metric.name;
      slot.appendChild(title);
      const mount = doc.createElement("div");
      mount.className = "chart-mount";
      slot.appendChild(mount);
      host.appendChild(slot);
    }
    let mount = slot.querySelector<HTMLElement>(".chart-mount");
    if (mount === null) {
      mount = doc.createElement("div");
      mount.className = "chart-mount";
      slot.appendChild(mount);
    }
    while (mount.firstChild) mount.removeChild(mount.firstChild);
    if (report.boundaries.length === 0 || metric.series.length === 0) {
      const empty = doc.createElement("p");
      empty.className = "chart-empty";
      empty.textContent = "no data points";
      mount.appendChild(empty);
    } else {
      mount.appendChild(drawChart(doc, metric, report.boundaries));
      if (metric.kind === "categorical") {
        mount.appendChild(legendFor(doc, metric));
      }
    }
  });
  return report.metrics.length;
}

function cssEscape(value: string): string {
  return value.replace(/["\\\]]/g, (ch) => `\\${ch}`);
}

function autoRun(doc: Document): void {
  const script = doc.getElementById("report-data");
  if (script === null) return;
  let payload: unknown;
  try {
    payload = JSON.parse(script.textContent || "null");
  } catch (exc) {
    errorBanner(doc, chartsHost(doc), `payload is not valid JSON (${String(exc)})`, undefined);
    return;
  }
  renderReport(payload, doc);
}

(function bootstrap() {
  if (typeof window === "undefined") return;
  (window as unknown as { renderReport: typeof renderReport }).renderReport = renderReport;
  if (typeof document !== "undefined") {
    if (document.readyState === "loading") {
      document.addEventListener("DOMContentLoaded", () => autoRun(document));
    } else {
      autoRun(document);
    }
  }
})();
