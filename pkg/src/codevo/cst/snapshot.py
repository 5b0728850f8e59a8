"""Parsed snapshots and the node-query surface metrics are built on."""

from __future__ import annotations

from dataclasses import dataclass, field
from datetime import date
from statistics import mean, median
from typing import TYPE_CHECKING, Callable, Iterable, Iterator

from .languages import LanguageSpec
from .node import CstNode

if TYPE_CHECKING:
    from ..repo import CommitRef, FileBlob

_WHITESPACE = b" \t\r\f\v"


def count_loc(content: bytes) -> int:
    """Lines containing at least one non-whitespace byte."""
    return sum(1 for line in content.split(b"\n") if line.strip(_WHITESPACE))


@dataclass(frozen=True)
class SkippedFile:
    path: str
    reason: str  # DecodeFailure | GrammarFailure


@dataclass
class ParsedFile:
    """One parsed source file of a snapshot."""

    name: str
    path: str
    root: CstNode
    loc: int

    def walk_named(self) -> Iterator[CstNode]:
        return self.root.walk_named()


@dataclass
class ParsedCommit:
    """A fully parsed repository snapshot at one boundary date.

    Metric evaluators receive this object; all queries below are pure
    reads, so one instance can be shared by every evaluator.
    """

    commit: "CommitRef"
    boundary: date
    files: list[ParsedFile]
    loc: int
    skipped: list[SkippedFile] = field(default_factory=list)

    # -- queries --------------------------------------------------------------

    def walk_named(self) -> Iterator[CstNode]:
        for f in self.files:
            yield from f.root.walk_named()

    def find_node_types(self, type_names: Iterable[str]) -> list[str]:
        """One label per matching named node, in file order then pre-order.

        Unknown type names simply match nothing; frequency-counting the
        result gives per-type counts.
        """
        wanted = set(type_names)
        return [n.type_name for n in self.walk_named() if n.type_name in wanted]

    def count_nodes(self, type_names: Iterable[str] | str) -> int:
        if isinstance(type_names, str):
            type_names = [type_names]
        return len(self.find_node_types(type_names))

    def loc_by_type(self, type_name: str, aggregate: str = "median") -> float:
        """Aggregate line span of all nodes of the given type (0 if none)."""
        if aggregate not in ("median", "mean", "sum"):
            raise ValueError(f"unknown aggregate: {aggregate!r}")
        spans = [n.span_lines for n in self.walk_named() if n.type_name == type_name]
        if not spans:
            return 0
        if aggregate == "median":
            return median(spans)
        if aggregate == "mean":
            return mean(spans)
        return sum(spans)

    def nodes_matching(self, predicate: Callable[[CstNode], bool]) -> list[CstNode]:
        return [n for n in self.walk_named() if predicate(n)]


def parse_snapshot(
    blobs: list["FileBlob"],
    spec: LanguageSpec,
    commit: "CommitRef",
    boundary: date,
) -> ParsedCommit:
    """Parse every blob with the language grammar.

    Never fails the snapshot: files that do not decode as UTF-8 or that
    crash the grammar are skipped and recorded on the result. Files with
    syntax errors still produce (partial) trees and are kept.
    """
    files: list[ParsedFile] = []
    skipped: list[SkippedFile] = []
    for blob in blobs:
        try:
            source = blob.content.decode("utf-8")
        except UnicodeDecodeError:
            skipped.append(SkippedFile(blob.path, "DecodeFailure"))
            continue
        if source.startswith("﻿"):
            source = source[1:]
        try:
            root = spec.grammar.parse(source)
        except Exception:  # grammar bugs must not kill the snapshot
            skipped.append(SkippedFile(blob.path, "GrammarFailure"))
            continue
        files.append(
            ParsedFile(name=blob.name, path=blob.path, root=root, loc=count_loc(blob.content))
        )
    files.sort(key=lambda f: f.path)
    return ParsedCommit(
        commit=commit,
        boundary=boundary,
        files=files,
        loc=sum(f.loc for f in files),
        skipped=skipped,
    )
