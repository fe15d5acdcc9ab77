"""Word rank-frequency extraction and power-law fitting.

The fit is plain least squares on (ln rank, ln count) over entries at
or above a count cutoff; the exponent is the negated slope. This is the
transparent desk-scale estimator, not a maximum-likelihood power-law
fit, and it weights the head of the distribution accordingly.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass

from .alphabet import WordSequence
from .errors import InputError


@dataclass(frozen=True)
class RankEntry:
    rank: int
    word: str
    count: int


@dataclass(frozen=True)
class RankFrequency:
    """Words ordered by decreasing count, ties broken lexicographically."""

    entries: tuple[RankEntry, ...]

    def __post_init__(self):
        prev = None
        for i, e in enumerate(self.entries, start=1):
            if e.rank != i:
                raise InputError("ranks must run 1..n")
            if e.count <= 0:
                raise InputError("counts must be positive")
            if prev is not None and e.count > prev:
                raise InputError("counts must be non-increasing with rank")
            prev = e.count

    @property
    def total(self) -> int:
        return sum(e.count for e in self.entries)


@dataclass(frozen=True)
class PowerLawFit:
    exponent: float
    intercept: float
    r_squared: float
    points_used: int

    def __post_init__(self):
        if self.points_used < 2:
            raise InputError("fit needs at least two points")

    def to_json_dict(self) -> dict:
        return {
            "exponent": self.exponent,
            "intercept": self.intercept,
            "r_squared": self.r_squared,
            "points_used": self.points_used,
        }


def word_rank_frequency(words: WordSequence) -> RankFrequency:
    """Rank distinct words by count; the counts sum to the token total."""
    if not words.words:
        raise InputError("empty word sequence")
    counts = Counter(words.words)
    ordered = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))
    entries = tuple(RankEntry(rank=i, word=w, count=c) for i, (w, c) in enumerate(ordered, start=1))
    return RankFrequency(entries=entries)


def fit_power_law(rf: RankFrequency, min_count: int = 5) -> PowerLawFit:
    """Least-squares fit of ln count against ln rank.

    Only entries with count >= min_count enter the fit; at least two
    such points are required. Scaling all counts by a constant moves
    the intercept and leaves the exponent unchanged.
    """
    points = [(math.log(e.rank), math.log(e.count)) for e in rf.entries if e.count >= min_count]
    if len(points) < 2:
        raise InputError(f"need at least 2 entries with count >= {min_count}, have {len(points)}")
    n = len(points)
    mx = sum(x for x, _ in points) / n
    my = sum(y for _, y in points) / n
    sxx = sum((x - mx) ** 2 for x, _ in points)
    sxy = sum((x - mx) * (y - my) for x, y in points)
    syy = sum((y - my) ** 2 for _, y in points)
    if sxx == 0.0:
        raise InputError("degenerate fit: all ranks identical")
    slope = sxy / sxx
    intercept = my - slope * mx
    if syy == 0.0:
        r_squared = 1.0  # flat counts: the zero-slope line is exact
    else:
        r_squared = (sxy * sxy) / (sxx * syy)
    return PowerLawFit(exponent=-slope, intercept=intercept, r_squared=r_squared, points_used=n)
