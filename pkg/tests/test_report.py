"""CSV and HTML serialization, determinism, and cross-format equality."""

import json
from datetime import date, datetime, timezone

import pytest

from codevo.engine import EvolutionTable, MetricSeries, Series
from codevo.errors import IoFailure
from codevo.report import (
    extract_payload,
    format_value,
    payload_dict,
    table_from_payload,
    to_csv,
    to_html,
    write_reports,
)

STUB_ASSET = "/* stub asset for tests */"
FIXED_TIME = datetime(2024, 5, 4, 12, 0, 0, tzinfo=timezone.utc)


def fixture_table(name="demo", metrics=None) -> EvolutionTable:
    boundaries = [date(2022, 1, 1), date(2023, 1, 1)]
    if metrics is None:
        metrics = [
            MetricSeries("Lines of code", "numeric", [Series("Lines of code", [12.0, 30.5])]),
            MetricSeries(
                "Data structures",
                "categorical",
                [Series("list", [2.0, 3.0]), Series("dictionary", [0.0, 1.0])],
            ),
        ]
    return EvolutionTable(
        repo_name=name,
        unit="year",
        boundaries=boundaries,
        metrics=metrics,
        metadata={"language": "python", "window": {"start_year": 2022, "end_year": 2023}},
    )


def test_format_value_trailing_zeros():
    assert format_value(12.0) == "12"
    assert format_value(2.5) == "2.5"
    assert format_value(0.0) == "0"
    assert format_value(123456789012345.0) == "123456789012345"
    assert format_value(1 / 3) == repr(1 / 3)


def test_csv_layout():
    data = to_csv(fixture_table()).decode()
    lines = data.splitlines()
    assert lines[0] == "metric,series,date,value"
    assert lines[1] == "Lines of code,Lines of code,2022-01-01,12"
    assert lines[2] == "Lines of code,Lines of code,2023-01-01,30.5"
    assert lines[3] == "Data structures,list,2022-01-01,2"
    assert len(lines) == 1 + 2 + 4
    assert data.endswith("\n")
    assert "\r" not in data


def test_csv_quoting_rfc4180():
    table = fixture_table(
        metrics=[MetricSeries('Size, "net"', "numeric", [Series('Size, "net"', [1.0, 2.0])])]
    )
    lines = to_csv(table).decode().splitlines()
    assert lines[1].startswith('"Size, ""net""","Size, ""net""",')


def test_csv_deterministic_bytes():
    assert to_csv(fixture_table()) == to_csv(fixture_table())


def test_row_count_arithmetic():
    table = fixture_table(
        metrics=[MetricSeries("Only", "numeric", [Series("Only", [1.0, 2.0])])]
    )
    lines = to_csv(table).decode().splitlines()
    assert len(lines) == 3  # header + one row per boundary


def test_payload_round_trip():
    table = fixture_table()
    payload = payload_dict(table)
    rebuilt = table_from_payload(payload)
    assert rebuilt.repo_name == table.repo_name
    assert rebuilt.boundaries == table.boundaries
    assert to_csv(rebuilt) == to_csv(table)


def test_payload_schema_fields():
    payload = payload_dict(fixture_table())
    assert set(payload) == {"repo", "unit", "boundaries", "metrics", "metadata"}
    for metric in payload["metrics"]:
        assert set(metric) == {"name", "kind", "series"}
        for series in metric["series"]:
            assert set(series) == {"label", "values"}
            assert len(series["values"]) == len(payload["boundaries"])


def test_html_contains_payload_and_slots():
    table = fixture_table()
    page = to_html(table, asset=STUB_ASSET, generated_at=FIXED_TIME)
    text = page.decode()
    assert text.count('class="chart-slot"') == len(table.metrics)
    assert STUB_ASSET in text
    assert "http://" not in text and "https://" not in text  # self-contained
    payload = extract_payload(page)
    rebuilt = table_from_payload(payload)
    assert to_csv(rebuilt) == to_csv(table)


def test_html_five_metrics_five_slots():
    metrics = [
        MetricSeries(f"m{i}", "numeric", [Series(f"m{i}", [1.0, 2.0])]) for i in range(5)
    ]
    page = to_html(fixture_table(metrics=metrics), asset=STUB_ASSET).decode()
    assert page.count('class="chart-slot"') == 5


def test_html_empty_table_still_valid():
    table = fixture_table(metrics=[])
    page = to_html(table, asset=STUB_ASSET).decode()
    assert page.count('class="chart-slot"') == 0
    assert "analysis metadata" in page
    assert extract_payload(page.encode())["metrics"] == []


def test_html_payload_value_equal_except_timestamp():
    t1 = to_html(fixture_table(), asset=STUB_ASSET, generated_at=FIXED_TIME)
    t2 = to_html(
        fixture_table(), asset=STUB_ASSET, generated_at=datetime(2030, 1, 1, tzinfo=timezone.utc)
    )
    p1, p2 = extract_payload(t1), extract_payload(t2)
    p1["metadata"].pop("generated_at")
    p2["metadata"].pop("generated_at")
    assert p1 == p2


def test_html_escapes_script_closers():
    table = fixture_table(
        metrics=[MetricSeries("</script><b>x", "numeric", [Series("</script><b>x", [1.0, 2.0])])]
    )
    page = to_html(table, asset=STUB_ASSET)
    payload = extract_payload(page)
    assert payload["metrics"][0]["name"] == "</script><b>x"


def test_write_reports_single_repo(tmp_path):
    paths = write_reports([fixture_table()], tmp_path, asset=STUB_ASSET)
    names = sorted(p.name for p in paths)
    assert names == ["demo.csv", "demo.html"]
    assert not (tmp_path / "index.html").exists()


def test_write_reports_two_repos_with_index(tmp_path):
    tables = [fixture_table("alpha"), fixture_table("beta")]
    paths = write_reports(tables, tmp_path, asset=STUB_ASSET)
    names = sorted(p.name for p in paths)
    assert names == ["alpha.csv", "alpha.html", "beta.csv", "beta.html", "index.html"]
    index = (tmp_path / "index.html").read_text()
    assert 'href="alpha.html"' in index and 'href="beta.html"' in index


def test_write_reports_formats(tmp_path):
    write_reports([fixture_table()], tmp_path / "csv", formats=("csv",), asset=STUB_ASSET)
    assert (tmp_path / "csv" / "demo.csv").exists()
    assert not (tmp_path / "csv" / "demo.html").exists()
    write_reports([fixture_table()], tmp_path / "html", formats=("html",), asset=STUB_ASSET)
    assert (tmp_path / "html" / "demo.html").exists()
    assert not (tmp_path / "html" / "demo.csv").exists()


def test_write_reports_distinct_names_never_overwrite(tmp_path):
    tables = [fixture_table("app"), fixture_table("app-2")]
    paths = write_reports(tables, tmp_path, asset=STUB_ASSET)
    assert len({p.name for p in paths}) == len(paths)


def test_write_reports_io_failure(tmp_path):
    blocked = tmp_path / "blocked"
    blocked.write_text("a file, not a directory")
    with pytest.raises(IoFailure):
        write_reports([fixture_table()], blocked, asset=STUB_ASSET)


def test_dates_round_trip():
    table = fixture_table()
    payload = payload_dict(table)
    assert [date.fromisoformat(b) for b in payload["boundaries"]] == table.boundaries
    for line in to_csv(table).decode().splitlines()[1:]:
        day = line.split(",")[2]
        assert date.fromisoformat(day) in table.boundaries
