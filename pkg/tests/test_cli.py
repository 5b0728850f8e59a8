"""CLI argument contract, exit codes, and end-to-end runs."""

import logging

import pytest

from codevo.cli import main, parse_args
from codevo.report import extract_payload

from conftest import make_repo, run_git


def test_parse_args_basic():
    args = parse_args(["-r", "python", "https://github.com/pallets/flask"])
    assert args.report_type == "python"
    assert args.repo == "https://github.com/pallets/flask"
    assert not args.monthly
    assert args.output == "."


def test_parse_args_unknown_language_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        parse_args(["-r", "ruby", "x"])
    assert exc.value.code == 2
    err = capsys.readouterr().err
    for lang in ("python", "javascript", "typescript", "java"):
        assert lang in err


def test_parse_args_window_order_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        parse_args(["-r", "java", "repo", "--from", "2022", "--to", "2020"])
    assert exc.value.code == 2


def test_parse_args_csv_and_html_only_conflict():
    with pytest.raises(SystemExit) as exc:
        parse_args(["-r", "python", "repo", "--csv-only", "--html-only"])
    assert exc.value.code == 2


def test_parse_args_flags():
    args = parse_args(
        ["-r", "typescript", "repo", "--monthly", "--from", "2020", "--to", "2021",
         "-o", "out", "--csv-only", "-v", "--workers", "2"]
    )
    assert args.monthly and args.csv_only and args.verbose
    assert (args.from_year, args.to_year) == (2020, 2021)
    assert args.workers == 2


def test_run_end_to_end(three_year_repo, tmp_path, capsys):
    out = tmp_path / "reports"
    code = main(
        ["-r", "python", str(three_year_repo), "--from", "2022", "--to", "2024", "-o", str(out)]
    )
    assert code == 0
    captured = capsys.readouterr()
    produced = sorted(line.rsplit("/", 1)[-1] for line in captured.out.splitlines())
    assert produced == ["threeyear.csv", "threeyear.html"]
    csv_text = (out / "threeyear.csv").read_text()
    assert "Lines of code,Lines of code,2022-01-01,2" in csv_text
    payload = extract_payload((out / "threeyear.html").read_bytes())
    assert payload["repo"] == "threeyear"
    assert payload["boundaries"] == ["2022-01-01", "2023-01-01", "2024-01-01"]


def test_run_nonexistent_path_exit_1(tmp_path, capsys):
    code = main(["-r", "python", str(tmp_path / "missing"), "-o", str(tmp_path)])
    assert code == 1


def test_run_directory_mode_with_corrupt_and_plain(tmp_path, capsys, caplog):
    base = tmp_path / "batch"
    base.mkdir()
    make_repo(
        base / "good",
        [
            {"date": "2022-06-01T00:00:00+00:00", "files": {"a.py": "x = 1\n"}},
            {"date": "2023-06-01T00:00:00+00:00", "files": {"a.py": "x = 1\ny = 2\n"}},
        ],
    )
    corrupt = base / "corrupt"
    make_repo(corrupt, [{"date": "2022-06-01T00:00:00+00:00", "files": {"b.py": "b = 1\n"}}])
    (corrupt / ".git" / "HEAD").write_text("garbage, not a ref\n")
    (base / "plain_dir").mkdir()

    out = tmp_path / "reports"
    with caplog.at_level(logging.WARNING):
        code = main(["-r", "python", str(base), "--from", "2023", "--to", "2024", "-o", str(out)])
    assert code == 0
    assert (out / "good.csv").exists() and (out / "good.html").exists()
    assert not (out / "corrupt.csv").exists()
    warned = [r.getMessage() for r in caplog.records if r.levelno >= logging.WARNING]
    assert sum("corrupt" in w for w in warned) == 1
    assert sum("plain_dir" in w for w in warned) == 1


def test_run_all_repos_fail_exit_1(tmp_path, caplog):
    base = tmp_path / "allbad"
    base.mkdir()
    bad = base / "broken"
    make_repo(bad, [{"date": "2022-01-01T00:00:00+00:00", "files": {"a.py": "x = 1\n"}}])
    (bad / ".git" / "HEAD").write_text("garbage\n")
    code = main(["-r", "python", str(base), "-o", str(tmp_path / "r")])
    assert code == 1


def test_run_csv_only(three_year_repo, tmp_path, capsys):
    out = tmp_path / "csvonly"
    code = main(
        ["-r", "python", str(three_year_repo), "--from", "2022", "--to", "2024",
         "-o", str(out), "--csv-only"]
    )
    assert code == 0
    assert (out / "threeyear.csv").exists()
    assert not (out / "threeyear.html").exists()


def test_run_monthly(three_year_repo, tmp_path, capsys):
    out = tmp_path / "monthly"
    code = main(
        ["-r", "python", str(three_year_repo), "--monthly", "--from", "2022", "--to", "2022",
         "-o", str(out)]
    )
    assert code == 0
    payload = extract_payload((out / "threeyear.html").read_bytes())
    assert payload["unit"] == "month"
    # Commit of 2021-03 exists before every 2022 month boundary.
    assert len(payload["boundaries"]) == 12


def test_run_repo_with_no_samples_in_window_exit_1(three_year_repo, tmp_path, caplog):
    code = main(
        ["-r", "python", str(three_year_repo), "--from", "2019", "--to", "2020",
         "-o", str(tmp_path / "empty")]
    )
    assert code == 1
