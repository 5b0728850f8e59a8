"""Pick one representative commit per year or month boundary.

A boundary date stands for the repository state "as of" that day: the
sample is the last mainline commit whose committer date falls at or
before the boundary's end of day (UTC). Quiet periods carry the previous
commit forward, so every boundary after project start gets a sample.
"""

from __future__ import annotations

from dataclasses import dataclass
from datetime import date, datetime, time, timedelta, timezone
from typing import TYPE_CHECKING, Literal

from .errors import NoSamples

if TYPE_CHECKING:
    from .repo import CommitRef

DateUnit = Literal["year", "month"]

DATE_UNITS = ("year", "month")


@dataclass(frozen=True)
class SamplingWindow:
    """Inclusive year range to analyze."""

    start_year: int
    end_year: int

    def __post_init__(self):
        if self.start_year > self.end_year:
            raise ValueError(
                f"start_year {self.start_year} is after end_year {self.end_year}"
            )
        for year in (self.start_year, self.end_year):
            if not 1000 <= year <= 9999:
                raise ValueError(f"year {year} is not a four-digit year")


@dataclass(frozen=True)
class CommitSample:
    """The commit representing one boundary date."""

    boundary: date
    commit: "CommitRef"


def boundary_dates(unit: DateUnit, window: SamplingWindow) -> list[date]:
    """All year or month boundaries in the window, ascending.

    Year boundaries are Jan 1 of each year; month boundaries are the
    first day of every month from January of the start year through
    December of the end year.
    """
    if unit == "year":
        return [date(y, 1, 1) for y in range(window.start_year, window.end_year + 1)]
    if unit == "month":
        return [
            date(y, m, 1)
            for y in range(window.start_year, window.end_year + 1)
            for m in range(1, 13)
        ]
    raise ValueError(f"unknown date unit: {unit!r}")


def default_window(today: date | None = None) -> SamplingWindow:
    """The last five years ending with the current one."""
    if today is None:
        today = datetime.now(timezone.utc).date()
    return SamplingWindow(start_year=today.year - 4, end_year=today.year)


def _cutoff(boundary: date) -> datetime:
    # End-of-day interpretation: everything committed up to and
    # including the boundary day belongs to its snapshot.
    return datetime.combine(boundary + timedelta(days=1), time.min, tzinfo=timezone.utc)


def sample(commits: list["CommitRef"], boundaries: list[date]) -> list[CommitSample]:
    """One sample per boundary: the last commit at or before it.

    `commits` must be ascending by committer date (ties by hash), as
    returned by repo.list_commits. Boundaries earlier than the first
    commit yield no sample. Raises NoSamples when nothing is eligible.
    """
    samples = []
    idx = -1
    n = len(commits)
    for boundary in boundaries:
        cutoff = _cutoff(boundary)
        while idx + 1 < n and commits[idx + 1].committer_date < cutoff:
            idx += 1
        if idx >= 0:
            samples.append(CommitSample(boundary=boundary, commit=commits[idx]))
    if not samples:
        raise NoSamples(
            f"no commit at or before any of {len(boundaries)} boundary dates"
        )
    return samples
