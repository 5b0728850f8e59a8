"""Repository resolution, history listing, and snapshot reads.

All reads go through the Git object database; the working tree is never
touched. History is the first-parent chain of the default branch, so
each boundary date maps onto one linear mainline.
"""

from __future__ import annotations

import logging
import os
import re
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path

import git

from .errors import CloneFailed, EmptyRepository, NotARepository, PathMissing, UnknownCommit

log = logging.getLogger(__name__)

_URL_SCHEME = re.compile(r"^(https?|ssh|git)://")

WORKSPACE_ENV_VAR = "CODEVO_WORKSPACE"
DEFAULT_WORKSPACE = "codevo-workspace"


@dataclass(frozen=True)
class CommitRef:
    """Identity and timestamps of one commit.

    committer_date drives all sampling decisions; both timestamps are
    normalized to UTC so date comparisons ignore committer timezones.
    """

    hash: str
    committer_date: datetime
    author_date: datetime

    def __post_init__(self):
        if len(self.hash) != 40 or any(c not in "0123456789abcdef" for c in self.hash):
            raise ValueError(f"not a 40-hex commit hash: {self.hash!r}")


@dataclass(frozen=True)
class FileBlob:
    """Exact blob bytes of one file at one commit.

    path is repo-relative with forward slashes on every platform.
    """

    path: str
    content: bytes

    @property
    def name(self) -> str:
        return self.path.rsplit("/", 1)[-1]


@dataclass
class RepositoryHandle:
    """An opened repository plus the branch its history is read from.

    A handle is single-consumer: do not share one across concurrent
    readers. Different handles are fully independent.
    """

    name: str
    root_path: Path
    default_branch: str
    _repo: git.Repo = field(repr=False, compare=False)


def _open_repo(path: Path) -> git.Repo:
    return git.Repo(path, search_parent_directories=False)


def _default_branch(repo: git.Repo) -> str:
    try:
        return repo.active_branch.name
    except (TypeError, ValueError):
        # Detached or unreadable HEAD; read history from wherever HEAD
        # points and let commit listing surface real corruption.
        return "HEAD"


def _handle_from_repo(repo: git.Repo, name: str) -> RepositoryHandle:
    root = Path(repo.working_dir or repo.git_dir)
    return RepositoryHandle(
        name=name,
        root_path=root,
        default_branch=_default_branch(repo),
        _repo=repo,
    )


def is_remote_url(raw: str) -> bool:
    return bool(_URL_SCHEME.match(raw))


def workspace_dir(override: str | Path | None = None) -> Path:
    """Directory that clones of remote URLs are placed in."""
    if override is not None:
        return Path(override)
    return Path(os.environ.get(WORKSPACE_ENV_VAR) or DEFAULT_WORKSPACE)


def _clone(url: str, workspace: Path) -> RepositoryHandle:
    name = url.rstrip("/").rsplit("/", 1)[-1]
    if name.endswith(".git"):
        name = name[: -len(".git")]
    name = name or "repository"
    dest = workspace / name
    if dest.exists():
        # Reuse a previous clone of the same URL rather than failing on
        # a non-empty destination.
        try:
            repo = _open_repo(dest)
            log.info("reusing existing clone at %s", dest)
            return _handle_from_repo(repo, name)
        except git.InvalidGitRepositoryError:
            raise CloneFailed(f"{dest} exists but is not a usable clone of {url}")
    workspace.mkdir(parents=True, exist_ok=True)
    log.info("cloning %s into %s", url, dest)
    try:
        repo = git.Repo.clone_from(url, dest)
    except git.GitCommandError as exc:
        raise CloneFailed(f"cloning {url} failed: {exc.stderr.strip() or exc}") from exc
    return _handle_from_repo(repo, name)


def _unique_names(names: list[str]) -> list[str]:
    seen: dict[str, int] = {}
    out = []
    for name in names:
        if name in seen:
            seen[name] += 1
            out.append(f"{name}-{seen[name]}")
        else:
            seen[name] = 1
            out.append(name)
    return out


def resolve_sources(raw: str, workspace: str | Path | None = None) -> list[RepositoryHandle]:
    """Turn user input into repository handles.

    Accepts a remote URL (cloned into the workspace directory), a local
    repository, or a directory of repositories (one handle per valid
    immediate child, sorted by name; children that are not usable
    repositories are skipped with a warning). Never recurses deeper
    than one level.
    """
    if not raw:
        raise PathMissing("empty repository input")
    if is_remote_url(raw):
        return [_clone(raw, workspace_dir(workspace))]

    path = Path(raw)
    if not path.exists():
        raise PathMissing(f"path does not exist: {raw}")
    if not path.is_dir():
        raise NotARepository(f"not a directory: {raw}")

    try:
        repo = _open_repo(path)
    except git.InvalidGitRepositoryError:
        pass
    else:
        return [_handle_from_repo(repo, path.resolve().name)]

    children = sorted((p for p in path.iterdir() if p.is_dir()), key=lambda p: p.name)
    handles = []
    for child in children:
        try:
            repo = _open_repo(child)
        except git.InvalidGitRepositoryError:
            log.warning("skipping %s: not a git repository", child)
            continue
        handles.append((child.name, repo))
    if not handles:
        raise NotARepository(f"no git repository found at or under {raw}")
    names = _unique_names([name for name, _ in handles])
    return [_handle_from_repo(repo, name) for name, (_, repo) in zip(names, handles)]


def list_commits(handle: RepositoryHandle) -> list[CommitRef]:
    """First-parent history of the default branch, oldest first.

    Sorted ascending by committer date with hash as tie break, which
    makes the result deterministic for a fixed repository state.
    """
    try:
        commits = [
            CommitRef(
                hash=c.hexsha,
                committer_date=c.committed_datetime.astimezone(timezone.utc),
                author_date=c.authored_datetime.astimezone(timezone.utc),
            )
            for c in handle._repo.iter_commits(handle.default_branch, first_parent=True)
        ]
    except (git.GitCommandError, ValueError) as exc:
        raise EmptyRepository(f"{handle.name}: no commits ({exc})") from exc
    if not commits:
        raise EmptyRepository(f"{handle.name}: no commits")
    commits.sort(key=lambda c: (c.committer_date, c.hash))
    return commits


def read_snapshot(
    handle: RepositoryHandle, commit: CommitRef, extensions: set[str]
) -> list[FileBlob]:
    """All blobs at the commit whose path ends with one of `extensions`.

    Reads straight from the object database; returns blobs sorted by
    path. An empty result is valid.
    """
    exts = tuple(extensions)
    try:
        tree = handle._repo.commit(commit.hash).tree
    except (git.BadName, ValueError, KeyError) as exc:
        raise UnknownCommit(f"{commit.hash} not in {handle.name}") from exc
    blobs = []
    for obj in tree.traverse():
        if obj.type != "blob":
            continue
        if not obj.path.endswith(exts):
            continue
        blobs.append(FileBlob(path=obj.path, content=obj.data_stream.read()))
    blobs.sort(key=lambda b: b.path)
    return blobs
