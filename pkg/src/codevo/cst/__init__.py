"""Concrete-syntax-tree parsing with a per-language grammar registry."""

from .languages import LANGUAGE_IDS, LANGUAGES, LanguageSpec, get_language
from .node import CstNode
from .snapshot import ParsedCommit, ParsedFile, SkippedFile, count_loc, parse_snapshot

__all__ = [
    "LANGUAGE_IDS",
    "LANGUAGES",
    "LanguageSpec",
    "get_language",
    "CstNode",
    "ParsedCommit",
    "ParsedFile",
    "SkippedFile",
    "count_loc",
    "parse_snapshot",
]
