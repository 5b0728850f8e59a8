"""Grammar registry: language id -> file extensions + grammar."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import UnsupportedLanguage
from .clike_parser import JavaParser, JsParser, TsParser
from .python_parser import PythonParser


@dataclass(frozen=True)
class LanguageSpec:
    language_id: str
    file_extensions: frozenset[str]
    grammar: object = field(compare=False)

    @property
    def grammar_version(self) -> str:
        return f"{self.language_id}-cst {self.grammar.version}"


LANGUAGES: dict[str, LanguageSpec] = {
    "python": LanguageSpec("python", frozenset({".py"}), PythonParser()),
    "javascript": LanguageSpec("javascript", frozenset({".js", ".mjs", ".cjs"}), JsParser()),
    "typescript": LanguageSpec("typescript", frozenset({".ts", ".tsx"}), TsParser()),
    "java": LanguageSpec("java", frozenset({".java"}), JavaParser()),
}

LANGUAGE_IDS = tuple(LANGUAGES)


def get_language(language_id: str) -> LanguageSpec:
    try:
        return LANGUAGES[language_id]
    except KeyError:
        raise UnsupportedLanguage(
            f"{language_id!r} is not supported; choose one of {', '.join(LANGUAGE_IDS)}"
        ) from None
