"""Letter and digram counting, ranking, comparison, and interval estimates.

Tables are immutable value objects over a fixed :class:`Alphabet`
universe; counting functions are pure, and chunked counts combine with
:func:`merge` (an exact monoid, so splitting a corpus never changes the
totals). Proportion intervals use the Wilson score construction, which
behaves sensibly at zero counts and small samples. Table distances
bundle total variation, a two-sample chi-square, and Spearman rank
correlation.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from statistics import NormalDist

from .alphabet import Alphabet, LetterSequence, WordSequence
from .errors import InputError


@dataclass(frozen=True)
class FrequencyTable:
    """Counts per letter. Every alphabet letter is keyed, zeros included."""

    alphabet: Alphabet
    counts: dict[str, int]
    total: int

    def __post_init__(self):
        if set(self.counts) != set(self.alphabet.letters):
            raise InputError("counts must key every alphabet letter exactly once")
        if any(c < 0 for c in self.counts.values()):
            raise InputError("negative count")
        if self.total != sum(self.counts.values()):
            raise InputError("total does not match counts")

    @classmethod
    def from_counts(cls, alphabet: Alphabet, counts: dict[str, int]) -> "FrequencyTable":
        full = {ch: 0 for ch in alphabet.letters}
        for ch, n in counts.items():
            if ch not in full:
                raise InputError(f"letter {ch!r} not in alphabet {alphabet.name!r}")
            full[ch] = n
        return cls(alphabet, full, sum(full.values()))

    @classmethod
    def empty(cls, alphabet: Alphabet) -> "FrequencyTable":
        return cls.from_counts(alphabet, {})

    def proportion(self, letter: str) -> float:
        return self.counts[letter] / self.total if self.total else 0.0

    def proportions(self) -> dict[str, float]:
        return {ch: self.proportion(ch) for ch in self.alphabet.letters}

    def to_csv(self) -> str:
        lines = ["letter,count,proportion"]
        for ch in self.alphabet.letters:
            lines.append(f"{ch},{self.counts[ch]},{self.proportion(ch):.6f}")
        return "\n".join(lines) + "\n"

    def to_json_dict(self) -> dict:
        return {
            "alphabet": self.alphabet.name,
            "counts": {ch: self.counts[ch] for ch in self.alphabet.letters},
            "total": self.total,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), ensure_ascii=False, indent=2)


@dataclass(frozen=True)
class DigramTable:
    """Counts per ordered letter pair; pairs never seen are simply absent."""

    alphabet: Alphabet
    counts: dict[tuple[str, str], int]
    total: int

    def __post_init__(self):
        for (a, b), n in self.counts.items():
            if a not in self.alphabet or b not in self.alphabet:
                raise InputError(f"pair ({a!r},{b!r}) not in alphabet {self.alphabet.name!r}")
            if n < 0:
                raise InputError("negative count")
        if self.total != sum(self.counts.values()):
            raise InputError("total does not match counts")

    def count(self, first: str, second: str) -> int:
        return self.counts.get((first, second), 0)

    def row_total(self, first: str) -> int:
        return sum(n for (a, _), n in self.counts.items() if a == first)

    def row_totals(self) -> dict[str, int]:
        rows = {ch: 0 for ch in self.alphabet.letters}
        for (a, _), n in self.counts.items():
            rows[a] += n
        return rows

    def _ordered_pairs(self):
        idx = self.alphabet.index
        return sorted(self.counts, key=lambda p: (idx(p[0]), idx(p[1])))

    def to_csv(self) -> str:
        lines = ["first,second,count,proportion"]
        for a, b in self._ordered_pairs():
            n = self.counts[(a, b)]
            prop = n / self.total if self.total else 0.0
            lines.append(f"{a},{b},{n},{prop:.6f}")
        return "\n".join(lines) + "\n"

    def to_json_dict(self) -> dict:
        return {
            "alphabet": self.alphabet.name,
            "counts": {f"{a}{b}": self.counts[(a, b)] for a, b in self._ordered_pairs()},
            "total": self.total,
        }


@dataclass(frozen=True)
class ConfidenceInterval:
    estimate: float
    lower: float
    upper: float
    level: float

    def __post_init__(self):
        if not (0.0 <= self.lower <= self.estimate <= self.upper <= 1.0):
            raise InputError("interval must satisfy 0 <= lower <= estimate <= upper <= 1")

    @property
    def width(self) -> float:
        return self.upper - self.lower


@dataclass(frozen=True)
class TableDistance:
    total_variation: float
    chi_square: float
    rank_correlation: float

    def __post_init__(self):
        if not (-1e-12 <= self.total_variation <= 1.0 + 1e-12):
            raise InputError("total variation out of [0,1]")
        if self.chi_square < 0:
            raise InputError("negative chi-square")
        if not (-1.0 - 1e-12 <= self.rank_correlation <= 1.0 + 1e-12):
            raise InputError("rank correlation out of [-1,1]")


@dataclass(frozen=True)
class PositionalStats:
    """Per-word letter placement tallies: first, last, second, penultimate
    positions, plus counts of immediate doublings inside words."""

    initial: FrequencyTable
    final: FrequencyTable
    second: FrequencyTable
    penultimate: FrequencyTable
    doubles: dict[str, int]
    word_count: int = field(default=0)


def count_letters(seq: LetterSequence) -> FrequencyTable:
    """Count every letter of the sequence; zero-count letters stay present."""
    counts = {ch: 0 for ch in seq.alphabet.letters}
    for ch in seq.symbols:
        counts[ch] += 1
    return FrequencyTable(seq.alphabet, counts, len(seq.symbols))


def count_digrams(seq: LetterSequence) -> DigramTable:
    """Count overlapping adjacent pairs; total is max(0, len - 1)."""
    counts: dict[tuple[str, str], int] = {}
    s = seq.symbols
    for i in range(len(s) - 1):
        pair = (s[i], s[i + 1])
        counts[pair] = counts.get(pair, 0) + 1
    return DigramTable(seq.alphabet, counts, max(0, len(s) - 1))


def merge(a, b):
    """Pointwise sum of two tables of the same kind over the same alphabet."""
    if type(a) is not type(b):
        raise InputError("cannot merge tables of different kinds")
    if a.alphabet != b.alphabet:
        raise InputError("alphabet mismatch")
    if isinstance(a, FrequencyTable):
        counts = {ch: a.counts[ch] + b.counts[ch] for ch in a.alphabet.letters}
        return FrequencyTable(a.alphabet, counts, a.total + b.total)
    if isinstance(a, DigramTable):
        counts = dict(a.counts)
        for pair, n in b.counts.items():
            counts[pair] = counts.get(pair, 0) + n
        return DigramTable(a.alphabet, counts, a.total + b.total)
    raise InputError(f"cannot merge {type(a).__name__}")


def rank_order(t: FrequencyTable) -> list[str]:
    """Letters by decreasing count; ties broken by alphabet letter order."""
    return sorted(t.alphabet.letters, key=lambda ch: (-t.counts[ch], t.alphabet.index(ch)))


def proportion_ci(count: int, total: int, level: float = 0.95) -> ConfidenceInterval:
    """Wilson score interval for a binomial proportion.

    With z the standard normal quantile at (1+level)/2 and p^ = count/total:

        center = (p^ + z^2/2n) / (1 + z^2/n)
        half   = z * sqrt(p^(1-p^)/n + z^2/4n^2) / (1 + z^2/n)

    Bounds are clamped to [0, 1] against float round-off. At count 0 the
    lower bound is exactly 0, which the Wald approximation gets wrong.
    """
    if total <= 0:
        raise InputError("total must be positive")
    if not 0 < level < 1:
        raise InputError("level must lie strictly between 0 and 1")
    if count < 0 or count > total:
        raise InputError("count must lie in [0, total]")
    z = NormalDist().inv_cdf((1.0 + level) / 2.0)
    n = total
    phat = count / n
    denom = 1.0 + z * z / n
    center = (phat + z * z / (2 * n)) / denom
    half = z * math.sqrt(phat * (1.0 - phat) / n + z * z / (4 * n * n)) / denom
    lower = min(max(center - half, 0.0), 1.0)
    upper = max(min(center + half, 1.0), 0.0)
    lower = min(lower, phat)
    upper = max(upper, phat)
    return ConfidenceInterval(estimate=phat, lower=lower, upper=upper, level=level)


def _average_ranks(values: list[int]) -> list[float]:
    # rank 1 = largest value; tied values share the average of their ranks
    order = sorted(range(len(values)), key=lambda i: -values[i])
    ranks = [0.0] * len(values)
    i = 0
    while i < len(order):
        j = i
        while j + 1 < len(order) and values[order[j + 1]] == values[order[i]]:
            j += 1
        avg = (i + j) / 2.0 + 1.0
        for k in range(i, j + 1):
            ranks[order[k]] = avg
        i = j + 1
    return ranks


def _pearson(xs: list[float], ys: list[float]) -> float:
    n = len(xs)
    mx = sum(xs) / n
    my = sum(ys) / n
    sxx = sum((x - mx) ** 2 for x in xs)
    syy = sum((y - my) ** 2 for y in ys)
    if sxx == 0.0 or syy == 0.0:
        return 1.0 if xs == ys else 0.0
    sxy = sum((x - mx) * (y - my) for x, y in zip(xs, ys))
    return sxy / math.sqrt(sxx * syy)


def compare_tables(a: FrequencyTable, b: FrequencyTable) -> TableDistance:
    """Distance bundle between two letter distributions.

    total_variation is half the L1 distance between the proportion
    vectors. chi_square is the two-sample homogeneity statistic with
    pooled expected counts (letters with pooled count 0 are skipped).
    rank_correlation is the Spearman correlation of the two rank
    vectors, ties averaged.
    """
    if a.alphabet != b.alphabet:
        raise InputError("alphabet mismatch")
    if a.total == 0 or b.total == 0:
        raise InputError("cannot compare an empty table")
    letters = a.alphabet.letters
    tv = 0.5 * sum(abs(a.proportion(ch) - b.proportion(ch)) for ch in letters)

    chi = 0.0
    na, nb = a.total, b.total
    for ch in letters:
        pooled = a.counts[ch] + b.counts[ch]
        if pooled == 0:
            continue
        ea = na * pooled / (na + nb)
        eb = nb * pooled / (na + nb)
        chi += (a.counts[ch] - ea) ** 2 / ea + (b.counts[ch] - eb) ** 2 / eb

    ranks_a = _average_ranks([a.counts[ch] for ch in letters])
    ranks_b = _average_ranks([b.counts[ch] for ch in letters])
    rho = _pearson(ranks_a, ranks_b)
    return TableDistance(total_variation=tv, chi_square=chi, rank_correlation=rho)


def positional_stats(words: WordSequence) -> PositionalStats:
    """Babbage-style word position tallies.

    initial/final cover every word; second/penultimate cover words of
    length at least 2 (for two-letter words they coincide). doubles
    counts adjacent equal letters inside words, overlapping, so "aaa"
    contributes two doublings of a.
    """
    ab = words.alphabet
    initial = {ch: 0 for ch in ab.letters}
    final = {ch: 0 for ch in ab.letters}
    second = {ch: 0 for ch in ab.letters}
    penult = {ch: 0 for ch in ab.letters}
    doubles = {ch: 0 for ch in ab.letters}
    for w in words.words:
        initial[w[0]] += 1
        final[w[-1]] += 1
        if len(w) >= 2:
            second[w[1]] += 1
            penult[w[-2]] += 1
        for x, y in zip(w, w[1:]):
            if x == y:
                doubles[x] += 1
    n = len(words.words)
    n2 = sum(1 for w in words.words if len(w) >= 2)
    return PositionalStats(
        initial=FrequencyTable(ab, initial, n),
        final=FrequencyTable(ab, final, n),
        second=FrequencyTable(ab, second, n2),
        penultimate=FrequencyTable(ab, penult, n2),
        doubles=doubles,
        word_count=n,
    )


def stability_curve(
    seq: LetterSequence, sizes: list[int]
) -> list[tuple[int, TableDistance]]:
    """Distance of prefix tables to the full-corpus table, per sample size.

    Prefixes keep the curve deterministic; at size == len(seq) every
    distance is exactly zero.
    """
    full = count_letters(seq)
    if full.total == 0:
        raise InputError("empty corpus")
    out = []
    for size in sizes:
        if size <= 0:
            raise InputError(f"sample size must be positive, got {size}")
        if size > len(seq.symbols):
            raise InputError(f"sample size {size} exceeds corpus length {len(seq.symbols)}")
        prefix = LetterSequence(seq.alphabet, seq.symbols[:size], source=f"{seq.source}[:{size}]")
        out.append((size, compare_tables(count_letters(prefix), full)))
    return out
