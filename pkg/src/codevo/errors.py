"""Exception types raised by the public API."""


class CodevoError(Exception):
    """Base class for all errors raised by this package."""


class PathMissing(CodevoError):
    """The given repository path does not exist."""


class NotARepository(CodevoError):
    """Path exists but holds no Git metadata and no repository children."""


class CloneFailed(CodevoError):
    """Cloning a remote URL failed; carries the underlying git message."""


class EmptyRepository(CodevoError):
    """The repository has zero commits on its default branch."""


class UnknownCommit(CodevoError):
    """The requested commit does not exist in the repository."""


class NoSamples(CodevoError):
    """No boundary date has any eligible commit."""


class DuplicateMetricName(CodevoError):
    """A metric with this name is already registered."""


class UnsupportedLanguage(CodevoError):
    """The language id is not in the grammar registry."""


class IoFailure(CodevoError):
    """Writing a report file failed; carries the offending path."""

    def __init__(self, path, message):
        super().__init__(f"{path}: {message}")
        self.path = path
