"""Shared fixtures: deterministic synthetic Git repositories."""

from __future__ import annotations

import os
import subprocess
from pathlib import Path

import pytest

CORPUS = Path(__file__).parent / "corpus"


def pytest_runtest_logreport(report):
    """One visible PASS/FAIL line per acceptance criterion."""
    if report.when != "call" or "test_acceptance" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    outcome = "PASS" if report.passed else "FAIL"
    print(f"\n[ACCEPTANCE] {name}: {outcome}", flush=True)

_GIT_ENV = {
    "GIT_AUTHOR_NAME": "Fixture Author",
    "GIT_AUTHOR_EMAIL": "fixture@example.invalid",
    "GIT_COMMITTER_NAME": "Fixture Committer",
    "GIT_COMMITTER_EMAIL": "fixture@example.invalid",
    "GIT_CONFIG_GLOBAL": "/dev/null",
    "GIT_CONFIG_SYSTEM": "/dev/null",
}


def run_git(cwd: Path, *args: str, date: str | None = None) -> str:
    env = dict(os.environ, **_GIT_ENV)
    if date is not None:
        env["GIT_AUTHOR_DATE"] = date
        env["GIT_COMMITTER_DATE"] = date
    proc = subprocess.run(
        ["git", *args], cwd=cwd, env=env, capture_output=True, text=True, check=True
    )
    return proc.stdout


def make_repo(root: Path, commits: list[dict]) -> Path:
    """Build a repository with backdated commits.

    Each commit dict: {"date": iso-8601 string, "files": {path: content},
    optional "remove": [paths], optional "message": str}.
    """
    root.mkdir(parents=True, exist_ok=True)
    run_git(root, "init", "-q", "-b", "main")
    for i, commit in enumerate(commits):
        for rel in commit.get("remove", ()):
            target = root / rel
            if target.exists():
                target.unlink()
        for rel, content in commit.get("files", {}).items():
            target = root / rel
            target.parent.mkdir(parents=True, exist_ok=True)
            if isinstance(content, bytes):
                target.write_bytes(content)
            else:
                target.write_text(content, encoding="utf-8")
        run_git(root, "add", "-A")
        run_git(
            root,
            "commit",
            "-q",
            "--allow-empty",
            "-m",
            commit.get("message", f"commit {i}"),
            date=commit["date"],
        )
    return root


@pytest.fixture
def three_year_repo(tmp_path: Path) -> Path:
    """Python repo with one commit per year and hand-checkable contents."""
    return make_repo(
        tmp_path / "threeyear",
        [
            {
                "date": "2021-03-01T10:00:00+00:00",
                "files": {
                    "app.py": "x = 1\n\ny = [1, 2]\n",  # 2 loc, 1 list
                },
            },
            {
                "date": "2022-07-15T09:30:00+00:00",
                "files": {
                    "app.py": "x = 1\ny = [1, 2]\nd = {}\n",  # 3 loc, list+dict
                    "util.py": "def f(a):\n    return (a, a)\n",  # 2 loc, tuple
                },
            },
            {
                "date": "2023-11-20T18:45:00+00:00",
                "files": {
                    "app.py": "x = 1\ny = [1, 2]\nd = {}\ns = {1, 2}\n",  # 4 loc
                },
            },
        ],
    )
