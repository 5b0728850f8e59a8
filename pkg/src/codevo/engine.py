"""Metric registry, per-boundary evaluation loop, and the evolution table.

One ParsedCommit is built per sampled boundary and injected into every
registered evaluator. Numeric evaluators fill one cell; categorical
evaluators emit labels that are frequency-folded into one series per
label, zero-filled so every series is rectangular over the boundaries.
"""

from __future__ import annotations

import logging
import math
from collections import Counter
from dataclasses import dataclass, field
from datetime import date
from typing import Callable, Iterator, Literal

from . import repo as repo_mod
from .cst import get_language, parse_snapshot
from .cst.snapshot import ParsedCommit
from .errors import DuplicateMetricName
from .sampling import DateUnit, SamplingWindow, boundary_dates, default_window, sample

log = logging.getLogger(__name__)

MetricKind = Literal["numeric", "categorical"]

NUMERIC = "numeric"
CATEGORICAL = "categorical"


@dataclass(frozen=True)
class MetricDef:
    """Definition of one metric; `name` doubles as the chart title."""

    name: str
    kind: MetricKind = NUMERIC
    aggregate_hint: str | None = None
    show_version_chart: bool = True

    def __post_init__(self):
        if not self.name:
            raise ValueError("metric name must be non-empty")
        if self.kind not in (NUMERIC, CATEGORICAL):
            raise ValueError(f"unknown metric kind: {self.kind!r}")


Evaluator = Callable[[ParsedCommit], "float | list[str]"]


@dataclass(frozen=True)
class MetricEvaluator:
    definition: MetricDef
    eval: Evaluator


class MetricRegistry:
    """Ordered collection of metric evaluators; order drives chart order."""

    def __init__(self):
        self._metrics: list[MetricEvaluator] = []
        self._names: set[str] = set()

    def register(self, definition: MetricDef, evaluator: Evaluator) -> None:
        if definition.name in self._names:
            raise DuplicateMetricName(definition.name)
        self._names.add(definition.name)
        self._metrics.append(MetricEvaluator(definition, evaluator))

    def metric(
        self,
        name: str | None = None,
        kind: MetricKind = NUMERIC,
        aggregate: str | None = None,
        show_version_chart: bool = True,
    ):
        """Decorator form of register()."""

        def wrap(fn: Evaluator) -> Evaluator:
            title = name or fn.__name__.replace("_", " ").capitalize()
            self.register(
                MetricDef(title, kind, aggregate, show_version_chart), fn
            )
            return fn

        return wrap

    def __iter__(self) -> Iterator[MetricEvaluator]:
        return iter(self._metrics)

    def __len__(self) -> int:
        return len(self._metrics)

    @property
    def names(self) -> list[str]:
        return [m.definition.name for m in self._metrics]


@dataclass
class AnalysisConfig:
    """Everything evaluate() needs besides the repository itself."""

    repo_input: str
    language: str
    date_unit: DateUnit = "year"
    window: SamplingWindow | None = None
    output_dir: str = "."

    def resolved_window(self) -> SamplingWindow:
        return self.window if self.window is not None else default_window()


@dataclass
class Series:
    label: str
    values: list[float]


@dataclass
class MetricSeries:
    name: str
    kind: MetricKind
    series: list[Series]


@dataclass
class EvolutionTable:
    """(metric, series, boundary) -> value grid behind every export."""

    repo_name: str
    unit: DateUnit
    boundaries: list[date]
    metrics: list[MetricSeries]
    metadata: dict

    def value(self, metric_name: str, series_label: str, boundary: date) -> float:
        idx = self.boundaries.index(boundary)
        for metric in self.metrics:
            if metric.name == metric_name:
                for series in metric.series:
                    if series.label == series_label:
                        return series.values[idx]
        raise KeyError((metric_name, series_label, boundary))

    def cells(self) -> Iterator[tuple[str, str, date, float]]:
        """Rows in (registration order, series order, date order)."""
        for metric in self.metrics:
            for series in metric.series:
                for boundary, value in zip(self.boundaries, series.values):
                    yield metric.name, series.label, boundary, value


def fold_categorical(labels: list[str]) -> dict[str, int]:
    """Exact multiset frequency of the emitted labels."""
    return dict(Counter(labels))


def evaluate(
    config: AnalysisConfig,
    registry: MetricRegistry,
    handle: repo_mod.RepositoryHandle,
    progress: Callable[[str], None] | None = None,
) -> EvolutionTable:
    """Run every registered metric over the sampled history of one repo.

    An evaluator that throws (or returns a non-finite number) on one
    boundary records 0 for that cell and a metric-error entry in the
    table metadata; the rest of the analysis is unaffected.
    """
    if not len(registry):
        raise ValueError("metric registry is empty")
    spec = get_language(config.language)
    window = config.resolved_window()
    boundaries = boundary_dates(config.date_unit, window)
    commits = repo_mod.list_commits(handle)
    samples = sample(commits, boundaries)

    numeric_cells: dict[str, list[float]] = {}
    label_counts: dict[str, list[Counter]] = {}
    label_order: dict[str, list[str]] = {}
    errors: list[dict] = []
    skipped_files: list[dict] = []

    for pos, s in enumerate(samples):
        blobs = repo_mod.read_snapshot(handle, s.commit, set(spec.file_extensions))
        pc = parse_snapshot(blobs, spec, s.commit, s.boundary)
        for skip in pc.skipped:
            skipped_files.append(
                {"boundary": s.boundary.isoformat(), "path": skip.path, "reason": skip.reason}
            )
        if progress is not None:
            progress(
                f"{handle.name}: {s.boundary.isoformat()} "
                f"({pos + 1}/{len(samples)}) {len(pc.files)} files"
            )
        for metric in registry:
            name = metric.definition.name
            try:
                result = metric.eval(pc)
            except Exception as exc:
                errors.append(
                    {"metric": name, "boundary": s.boundary.isoformat(), "error": repr(exc)}
                )
                log.warning("metric %r failed at %s: %r", name, s.boundary, exc)
                result = 0 if metric.definition.kind == NUMERIC else []
            if metric.definition.kind == NUMERIC:
                value = _coerce_numeric(name, s.boundary, result, errors)
                numeric_cells.setdefault(name, []).append(value)
            else:
                counts = Counter(result)
                label_counts.setdefault(name, []).append(counts)
                order = label_order.setdefault(name, [])
                for label in result:
                    if label not in order:
                        order.append(label)

    table_boundaries = [s.boundary for s in samples]
    metrics: list[MetricSeries] = []
    for metric in registry:
        name = metric.definition.name
        if metric.definition.kind == NUMERIC:
            values = numeric_cells.get(name, [])
            metrics.append(MetricSeries(name, NUMERIC, [Series(name, values)]))
        else:
            per_boundary = label_counts.get(name, [])
            series = [
                Series(label, [float(counts.get(label, 0)) for counts in per_boundary])
                for label in label_order.get(name, [])
            ]
            metrics.append(MetricSeries(name, CATEGORICAL, series))

    metadata = {
        "repo": handle.name,
        "language": config.language,
        "date_unit": config.date_unit,
        "window": {"start_year": window.start_year, "end_year": window.end_year},
        "input": config.repo_input,
        "grammar_versions": {spec.language_id: spec.grammar_version},
        "commits_on_branch": len(commits),
        "skipped_files": skipped_files,
        "metric_errors": errors,
    }
    return EvolutionTable(
        repo_name=handle.name,
        unit=config.date_unit,
        boundaries=table_boundaries,
        metrics=metrics,
        metadata=metadata,
    )


def _coerce_numeric(name: str, boundary: date, result, errors: list[dict]) -> float:
    try:
        value = float(result)
    except (TypeError, ValueError):
        errors.append(
            {"metric": name, "boundary": boundary.isoformat(), "error": f"non-numeric result {result!r}"}
        )
        return 0.0
    if not math.isfinite(value):
        errors.append(
            {"metric": name, "boundary": boundary.isoformat(), "error": f"non-finite result {result!r}"}
        )
        return 0.0
    return value
