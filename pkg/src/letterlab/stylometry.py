"""Vowel/consonant proportion statistics.

The vowel share of a text, V/(V+C), separates styles: poetry-leaning
material sits above 7/16, oratory-leaning material above 3/7, a gap of
only 1/112 (under one percent). Threshold comparisons therefore use
exact rational arithmetic; equality gets its own "boundary" verdict
rather than drowning in float noise. The module also covers the
vowels-per-100-consonants normalization with its min/median/max spread
across samples, a pooled two-proportion z-test, and a letter-avoidance
(lipogram) scan based on exact binomial tails.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from statistics import NormalDist

from .alphabet import LetterSequence
from .errors import InputError
from .freq import FrequencyTable

POETRY_THRESHOLD = Fraction(7, 16)
ORATOR_THRESHOLD = Fraction(3, 7)


@dataclass(frozen=True)
class VCProfile:
    """Vowel and consonant totals of one sample."""

    vowel_count: int
    consonant_count: int

    def __post_init__(self):
        if self.vowel_count < 0 or self.consonant_count < 0:
            raise InputError("negative count")

    @property
    def total(self) -> int:
        return self.vowel_count + self.consonant_count

    @property
    def vowel_share(self) -> float | None:
        """V/(V+C), or None for an empty sample."""
        if self.total == 0:
            return None
        return self.vowel_count / self.total

    @property
    def vowels_per_100(self) -> float | None:
        """100*V/C; undefined (None) when there are no consonants."""
        if self.consonant_count == 0:
            return None
        return 100.0 * self.vowel_count / self.consonant_count


@dataclass(frozen=True)
class AlbertiVerdict:
    vowel_share: Fraction
    above_poetry_threshold: bool
    above_orator_threshold: bool
    label: str  # poetry-consistent | orator-consistent | below-both | boundary


@dataclass(frozen=True)
class VariationSummary:
    minimum: float
    median: float
    maximum: float
    sample_count: int

    def __post_init__(self):
        if not (self.minimum <= self.median <= self.maximum):
            raise InputError("summary must satisfy min <= median <= max")


@dataclass(frozen=True)
class LipogramFlag:
    letter: str
    observed: int
    expected: float
    p_value: float


def vc_profile(seq: LetterSequence) -> VCProfile:
    """Partition a letter sequence by the alphabet's vowel set."""
    v = sum(1 for ch in seq.symbols if seq.alphabet.is_vowel(ch))
    return VCProfile(vowel_count=v, consonant_count=len(seq.symbols) - v)


def alberti_test(p: VCProfile) -> AlbertiVerdict:
    """Classify a sample against the poetry (7/16) and oratory (3/7) thresholds.

    Comparisons are strict and exact; a share equal to either threshold
    is labelled "boundary". The verdict is invariant under scaling both
    counts by the same factor.
    """
    if p.total == 0:
        raise InputError("empty profile")
    share = Fraction(p.vowel_count, p.total)
    above_poetry = share > POETRY_THRESHOLD
    above_orator = share > ORATOR_THRESHOLD
    if share == POETRY_THRESHOLD or share == ORATOR_THRESHOLD:
        label = "boundary"
    elif above_poetry:
        label = "poetry-consistent"
    elif above_orator:
        label = "orator-consistent"
    else:
        label = "below-both"
    return AlbertiVerdict(
        vowel_share=share,
        above_poetry_threshold=above_poetry,
        above_orator_threshold=above_orator,
        label=label,
    )


def two_sample_proportion_test(a: VCProfile, b: VCProfile) -> tuple[float, float]:
    """Pooled two-proportion z-test on vowel shares.

    Returns (z, two-sided p). Antisymmetric in its arguments: swapping
    them negates z and keeps p.
    """
    if a.total == 0 or b.total == 0:
        raise InputError("empty profile")
    n1, n2 = a.total, b.total
    p1, p2 = a.vowel_count / n1, b.vowel_count / n2
    if p1 == p2:
        return 0.0, 1.0
    pooled = (a.vowel_count + b.vowel_count) / (n1 + n2)
    se = math.sqrt(pooled * (1.0 - pooled) * (1.0 / n1 + 1.0 / n2))
    z = (p1 - p2) / se
    p = 2.0 * NormalDist().cdf(-abs(z))
    return z, p


def compass_of_variation(profiles: list[VCProfile]) -> VariationSummary:
    """Min/median/max of vowels-per-100-consonants across samples.

    The median takes the lower middle value for even sample counts.
    """
    if not profiles:
        raise InputError("no samples")
    values = []
    for p in profiles:
        v = p.vowels_per_100
        if v is None:
            raise InputError("sample without consonants has no vowels-per-100 value")
        values.append(v)
    values.sort()
    return VariationSummary(
        minimum=values[0],
        median=values[(len(values) - 1) // 2],
        maximum=values[-1],
        sample_count=len(values),
    )


def blocks_of(seq: LetterSequence, block_size: int = 1000) -> list[VCProfile]:
    """Fixed-size block profiles of one long text (last partial block kept)."""
    if block_size <= 0:
        raise InputError("block size must be positive")
    out = []
    for start in range(0, len(seq.symbols), block_size):
        chunk = LetterSequence(seq.alphabet, seq.symbols[start : start + block_size], source=seq.source)
        out.append(vc_profile(chunk))
    return out


def _binom_cdf(k: int, n: int, p: float) -> float:
    """P(X <= k) for X ~ Binomial(n, p), exact log-space summation."""
    if p <= 0.0:
        return 1.0
    if p >= 1.0:
        return 1.0 if k >= n else 0.0
    if k < 0:
        return 0.0
    if k >= n:
        return 1.0
    lp, lq = math.log(p), math.log1p(-p)
    lg_n = math.lgamma(n + 1)
    total = 0.0
    for i in range(k + 1):
        total += math.exp(lg_n - math.lgamma(i + 1) - math.lgamma(n - i + 1) + i * lp + (n - i) * lq)
    return min(total, 1.0)


def lipogram_scan(
    observed: FrequencyTable, reference: FrequencyTable, alpha: float = 0.01
) -> list[LipogramFlag]:
    """Flag letters suspiciously underused relative to a reference table.

    For each letter, the p-value is the exact lower binomial tail
    P(X <= observed) with n = observed total and the reference
    proportion as success rate. A letter is flagged when its p-value
    clears the Bonferroni-corrected level alpha / |alphabet|. Letters
    with reference proportion zero are never flagged.
    """
    if observed.alphabet != reference.alphabet:
        raise InputError("alphabet mismatch")
    if reference.total == 0:
        raise InputError("empty reference table")
    if not 0 < alpha < 1:
        raise InputError("alpha must lie strictly between 0 and 1")
    n = observed.total
    cutoff = alpha / len(observed.alphabet.letters)
    flags = []
    for ch in observed.alphabet.letters:
        p_ref = reference.proportion(ch)
        if p_ref == 0.0:
            continue
        obs = observed.counts[ch]
        p_val = _binom_cdf(obs, n, p_ref)
        if p_val < cutoff:
            flags.append(LipogramFlag(letter=ch, observed=obs, expected=n * p_ref, p_value=p_val))
    return flags
