"""codevo: code evolution analysis for Git repositories.

Samples a repository's mainline history at year or month boundaries,
parses each snapshot into concrete syntax trees, evaluates numeric and
categorical metrics per snapshot, and exports the resulting time series
as CSV and self-contained HTML reports.

Typical library use::

    from codevo import (
        AnalysisConfig, MetricRegistry, evaluate, resolve_sources, write_reports,
    )

    registry = MetricRegistry()

    @registry.metric("Lines of code")
    def loc(pc):
        return pc.loc

    @registry.metric("Data structures", kind="categorical")
    def data_structures(pc):
        return pc.find_node_types(["dictionary", "list", "set", "tuple"])

    handle = resolve_sources("path/to/repo")[0]
    table = evaluate(AnalysisConfig("path/to/repo", "python"), registry, handle)
    write_reports([table], "reports")
"""

__version__ = "0.1.0"

from .cst import (
    LANGUAGE_IDS,
    CstNode,
    LanguageSpec,
    ParsedCommit,
    ParsedFile,
    get_language,
    parse_snapshot,
)
from .engine import (
    CATEGORICAL,
    NUMERIC,
    AnalysisConfig,
    EvolutionTable,
    MetricDef,
    MetricRegistry,
    evaluate,
    fold_categorical,
)
from .errors import (
    CloneFailed,
    CodevoError,
    DuplicateMetricName,
    EmptyRepository,
    IoFailure,
    NoSamples,
    NotARepository,
    PathMissing,
    UnknownCommit,
    UnsupportedLanguage,
)
from .metrics import BuiltinSet, builtin_registry, builtin_set
from .repo import CommitRef, FileBlob, RepositoryHandle, list_commits, read_snapshot, resolve_sources
from .report import to_csv, to_html, write_reports
from .sampling import CommitSample, SamplingWindow, boundary_dates, default_window, sample

__all__ = [
    "__version__",
    "LANGUAGE_IDS",
    "CstNode",
    "LanguageSpec",
    "ParsedCommit",
    "ParsedFile",
    "get_language",
    "parse_snapshot",
    "AnalysisConfig",
    "EvolutionTable",
    "MetricDef",
    "MetricRegistry",
    "NUMERIC",
    "CATEGORICAL",
    "evaluate",
    "fold_categorical",
    "CodevoError",
    "CloneFailed",
    "DuplicateMetricName",
    "EmptyRepository",
    "IoFailure",
    "NoSamples",
    "NotARepository",
    "PathMissing",
    "UnknownCommit",
    "UnsupportedLanguage",
    "BuiltinSet",
    "builtin_registry",
    "builtin_set",
    "CommitRef",
    "FileBlob",
    "RepositoryHandle",
    "list_commits",
    "read_snapshot",
    "resolve_sources",
    "to_csv",
    "to_html",
    "write_reports",
    "CommitSample",
    "SamplingWindow",
    "boundary_dates",
    "default_window",
    "sample",
]
