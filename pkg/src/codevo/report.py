"""CSV and self-contained HTML serialization of evolution tables.

The CSV is long-format (metric, series, date, value) so it stays
rectangular whatever the categorical label universe is. The HTML embeds
the table as a JSON payload plus the chart-rendering script, so a report
opens from disk with zero network requests; the payload alone is enough
to rebuild every chart.
"""

from __future__ import annotations

import csv
import html
import io
import json
from datetime import datetime, timezone
from importlib import resources
from pathlib import Path

from .engine import EvolutionTable
from .errors import IoFailure

PAYLOAD_SCRIPT_ID = "report-data"


def format_value(value: float) -> str:
    """Render without trailing zeros: 12.0 -> "12", 2.5 -> "2.5"."""
    value = float(value)
    if value.is_integer():
        return str(int(value))
    return repr(value)


def to_csv(table: EvolutionTable) -> bytes:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["metric", "series", "date", "value"])
    for metric, series, boundary, value in table.cells():
        writer.writerow([metric, series, boundary.isoformat(), format_value(value)])
    return out.getvalue().encode("utf-8")


def payload_dict(table: EvolutionTable) -> dict:
    """The JSON payload embedded in HTML; schema shared with the renderer."""
    return {
        "repo": table.repo_name,
        "unit": table.unit,
        "boundaries": [b.isoformat() for b in table.boundaries],
        "metrics": [
            {
                "name": metric.name,
                "kind": metric.kind,
                "series": [
                    {
                        "label": series.label,
                        "values": [_json_number(v) for v in series.values],
                    }
                    for series in metric.series
                ],
            }
            for metric in table.metrics
        ],
        "metadata": table.metadata,
    }


def table_from_payload(payload: dict) -> EvolutionTable:
    """Inverse of payload_dict (used by the cross-serialization checks)."""
    from datetime import date

    from .engine import MetricSeries, Series

    return EvolutionTable(
        repo_name=payload["repo"],
        unit=payload["unit"],
        boundaries=[date.fromisoformat(b) for b in payload["boundaries"]],
        metrics=[
            MetricSeries(
                name=m["name"],
                kind=m["kind"],
                series=[Series(s["label"], [float(v) for v in s["values"]]) for s in m["series"]],
            )
            for m in payload["metrics"]
        ],
        metadata=payload.get("metadata", {}),
    )


def _json_number(value: float):
    value = float(value)
    return int(value) if value.is_integer() else value


def default_asset() -> str:
    return resources.files("codevo").joinpath("_asset/chart.js").read_text("utf-8")


_PAGE_CSS = """
:root { color-scheme: light; }
body { font-family: system-ui, sans-serif; margin: 0; background: #fafafa; color: #1a1a1a; }
header { background: #fff; border-bottom: 1px solid #e2e2e2; padding: 1.2rem 2rem; }
header h1 { margin: 0 0 0.3rem; font-size: 1.4rem; }
header .meta { color: #555; margin: 0; font-size: 0.9rem; }
details { margin-top: 0.6rem; font-size: 0.85rem; color: #444; }
details pre { background: #f4f4f4; padding: 0.6rem; overflow-x: auto; }
main { max-width: 1100px; margin: 1.5rem auto; padding: 0 1rem; display: grid;
       grid-template-columns: repeat(auto-fit, minmax(480px, 1fr)); gap: 1.2rem; }
.chart-slot { background: #fff; border: 1px solid #e2e2e2; border-radius: 6px; padding: 1rem; }
.chart-slot h2 { margin: 0 0 0.6rem; font-size: 1.05rem; font-weight: 600; }
.chart-mount { min-height: 60px; }
.render-error { background: #fdecec; border: 1px solid #e3a6a6; color: #8a1f1f;
                padding: 0.8rem 1rem; border-radius: 6px; margin: 1rem 2rem; }
"""


def to_html(
    table: EvolutionTable,
    asset: str | None = None,
    generated_at: datetime | None = None,
) -> bytes:
    """One self-contained HTML page: payload + renderer + one slot per metric."""
    if asset is None:
        asset = default_asset()
    # A literal "</script" inside the asset would end the inline script
    # early; in valid JS it can only occur inside string/regex literals,
    # where this escape is equivalent.
    asset = asset.replace("</script", "<\\/script")
    if generated_at is None:
        generated_at = datetime.now(timezone.utc)
    payload = payload_dict(table)
    payload["metadata"] = dict(payload["metadata"])
    payload["metadata"]["generated_at"] = generated_at.isoformat(timespec="seconds")
    payload_json = json.dumps(payload, indent=2, sort_keys=True).replace("<", "\\u003c")

    meta = table.metadata
    window = meta.get("window", {})
    summary = " · ".join(
        part
        for part in (
            f"language: {meta.get('language', '?')}",
            f"unit: {table.unit}",
            f"window: {window.get('start_year', '?')}–{window.get('end_year', '?')}",
            f"boundaries: {len(table.boundaries)}",
            f"generated: {payload['metadata']['generated_at']}",
        )
    )
    details = json.dumps(
        {
            "grammar_versions": meta.get("grammar_versions", {}),
            "skipped_files": meta.get("skipped_files", []),
            "metric_errors": meta.get("metric_errors", []),
            "commits_on_branch": meta.get("commits_on_branch"),
            "input": meta.get("input"),
        },
        indent=2,
        sort_keys=True,
    )

    slots = "\n".join(
        '<section class="chart-slot" data-metric="{name}">'
        "<h2>{title}</h2>"
        '<div class="chart-mount"></div>'
        "</section>".format(name=html.escape(m.name, quote=True), title=html.escape(m.name))
        for m in table.metrics
    )

    page = f"""<!doctype html>
<html lang="en">
<head>
<meta charset="utf-8">
<meta name="viewport" content="width=device-width, initial-scale=1">
<title>{html.escape(table.repo_name)} · code evolution</title>
<style>{_PAGE_CSS}</style>
</head>
<body>
<header>
<h1>{html.escape(table.repo_name)}</h1>
<p class="meta">{html.escape(summary)}</p>
<details><summary>analysis metadata</summary><pre>{html.escape(details)}</pre></details>
</header>
<main id="charts">
{slots}
</main>
<script id="{PAYLOAD_SCRIPT_ID}" type="application/json">
{payload_json}
</script>
<script>
{asset}
</script>
</body>
</html>
"""
    return page.encode("utf-8")


def extract_payload(html_bytes: bytes) -> dict:
    """Pull the embedded JSON payload back out of a report page."""
    text = html_bytes.decode("utf-8")
    marker = f'<script id="{PAYLOAD_SCRIPT_ID}" type="application/json">'
    start = text.index(marker) + len(marker)
    end = text.index("</script>", start)
    return json.loads(text[start:end])


def write_reports(
    tables: list[EvolutionTable],
    output_dir: str | Path,
    formats: tuple[str, ...] = ("html", "csv"),
    asset: str | None = None,
) -> list[Path]:
    """Write <repo>.html / <repo>.csv per table, plus an index when >1."""
    out = Path(output_dir)
    try:
        out.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise IoFailure(out, str(exc)) from exc
    written: list[Path] = []
    for table in tables:
        base = table.repo_name
        if "csv" in formats:
            written.append(_write(out / f"{base}.csv", to_csv(table)))
        if "html" in formats:
            written.append(_write(out / f"{base}.html", to_html(table, asset=asset)))
    if len(tables) > 1 and "html" in formats:
        written.append(_write(out / "index.html", _index_page(tables)))
    return written


def _write(path: Path, data: bytes) -> Path:
    try:
        path.write_bytes(data)
    except OSError as exc:
        raise IoFailure(path, str(exc)) from exc
    return path


def _index_page(tables: list[EvolutionTable]) -> bytes:
    items = "\n".join(
        f'<li><a href="{html.escape(t.repo_name, quote=True)}.html">{html.escape(t.repo_name)}</a>'
        f" <small>({len(t.boundaries)} boundaries)</small></li>"
        for t in tables
    )
    page = f"""<!doctype html>
<html lang="en">
<head><meta charset="utf-8"><title>code evolution reports</title>
<style>{_PAGE_CSS}</style></head>
<body>
<header><h1>Code evolution reports</h1>
<p class="meta">{len(tables)} repositories analyzed</p></header>
<main><section class="chart-slot"><ul>
{items}
</ul></section></main>
</body>
</html>
"""
    return page.encode("utf-8")
