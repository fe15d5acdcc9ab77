"""Vowel/consonant chains, dependence testing, entropy, and generation.

A text reduces to its V/C state string; adjacent-state counts form a
2x2 transition table. The chi-square independence test (one degree of
freedom, no continuity correction) asks whether the observed
transitions are consistent with independent draws from the marginals;
its tail probability comes from the closed form erfc(sqrt(x/2)), so no
numerical integration is involved. Entropy estimates h0 >= h1 >= h2
quantify how much successive conditioning compresses the source, and
`generate` runs the chain forward with the package's deterministic
generator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .alphabet import Alphabet, LetterSequence
from .errors import InputError
from .freq import DigramTable, FrequencyTable
from .rng import SplitMix64

VOWEL = "V"
CONSONANT = "C"
STATES = (VOWEL, CONSONANT)


@dataclass(frozen=True)
class BinarySequence:
    """String over {V, C}."""

    states: str
    source: str = field(default="", compare=False)

    def __post_init__(self):
        if any(s not in "VC" for s in self.states):
            raise InputError("states must be V or C")

    def __len__(self) -> int:
        return len(self.states)


@dataclass(frozen=True)
class TransitionCounts:
    """Adjacent-pair counts of a two-state chain, plus the initial state."""

    n: dict[tuple[str, str], int]
    initial: str

    def __post_init__(self):
        if set(self.n) != {(a, b) for a in STATES for b in STATES}:
            raise InputError("transition counts must key all four state pairs")
        if any(v < 0 for v in self.n.values()):
            raise InputError("negative count")
        if self.initial not in STATES:
            raise InputError("initial state must be V or C")

    def row_total(self, state: str) -> int:
        return self.n[(state, VOWEL)] + self.n[(state, CONSONANT)]

    @property
    def total(self) -> int:
        return sum(self.n.values())

    def probabilities(self) -> dict[tuple[str, str], float]:
        """Maximum-likelihood row-conditional probabilities."""
        out = {}
        for a in STATES:
            row = self.row_total(a)
            for b in STATES:
                out[(a, b)] = self.n[(a, b)] / row if row else 0.0
        return out


@dataclass(frozen=True)
class MarkovTestReport:
    chi_square: float
    degrees_of_freedom: int
    p_value: float
    transition_probabilities: dict[tuple[str, str], float]

    def to_json_dict(self) -> dict:
        p = self.transition_probabilities
        return {
            "chi_square": self.chi_square,
            "df": self.degrees_of_freedom,
            "p_value": self.p_value,
            "p_vv": p[(VOWEL, VOWEL)],
            "p_vc": p[(VOWEL, CONSONANT)],
            "p_cv": p[(CONSONANT, VOWEL)],
            "p_cc": p[(CONSONANT, CONSONANT)],
        }


@dataclass(frozen=True)
class EntropyReport:
    """Bits per letter under progressively stronger models."""

    h0: float
    h1: float
    h2: float


def to_vc_sequence(seq: LetterSequence) -> BinarySequence:
    """Map each letter to V or C by the alphabet's vowel set."""
    states = "".join(VOWEL if seq.alphabet.is_vowel(ch) else CONSONANT for ch in seq.symbols)
    return BinarySequence(states=states, source=seq.source)


def fit_transitions(b: BinarySequence) -> TransitionCounts:
    """Count overlapping adjacent state pairs; needs length >= 2."""
    if len(b.states) < 2:
        raise InputError("need at least two states to fit transitions")
    n = {(a, c): 0 for a in STATES for c in STATES}
    s = b.states
    for i in range(len(s) - 1):
        n[(s[i], s[i + 1])] += 1
    return TransitionCounts(n=n, initial=s[0])


def chi_square_tail_df1(x: float) -> float:
    """Upper tail of the chi-square distribution with one degree of freedom."""
    if x < 0:
        raise InputError("chi-square statistic cannot be negative")
    return math.erfc(math.sqrt(x / 2.0))


def independence_test(t: TransitionCounts, continuity_correction: bool = False) -> MarkovTestReport:
    """2x2 chi-square test of serial independence.

    Expected cells come from the marginal products; cells with zero
    expectation contribute nothing. Both row totals must be positive.
    The optional Yates continuity correction is off by default.
    """
    rows = {a: t.row_total(a) for a in STATES}
    if any(r == 0 for r in rows.values()):
        raise InputError("degenerate chain: a row total is zero")
    total = t.total
    cols = {b: t.n[(VOWEL, b)] + t.n[(CONSONANT, b)] for b in STATES}
    chi = 0.0
    for a in STATES:
        for b in STATES:
            expected = rows[a] * cols[b] / total
            if expected == 0.0:
                continue
            diff = abs(t.n[(a, b)] - expected)
            if continuity_correction:
                diff = max(diff - 0.5, 0.0)
            chi += diff * diff / expected
    return MarkovTestReport(
        chi_square=chi,
        degrees_of_freedom=1,
        p_value=chi_square_tail_df1(chi),
        transition_probabilities=t.probabilities(),
    )


def entropy_estimates(unigram: FrequencyTable, digram: DigramTable) -> EntropyReport:
    """Zeroth, first, and conditional second order entropy in bits/letter.

    h0 = log2 of the alphabet size; h1 is the unigram entropy; h2 is the
    conditional entropy of the next letter given the current one, taken
    over the digram joint distribution. Zero-probability terms drop out.
    The chain h2 <= h1 <= h0 is guaranteed when the unigram table agrees
    with the digram's second-letter marginal (as it nearly does for
    tables counted from one long text).
    """
    if unigram.alphabet != digram.alphabet:
        raise InputError("alphabet mismatch")
    if unigram.total == 0 or digram.total == 0:
        raise InputError("empty table")
    h0 = math.log2(len(unigram.alphabet.letters))
    h1 = 0.0
    for ch in unigram.alphabet.letters:
        p = unigram.proportion(ch)
        if p > 0.0:
            h1 -= p * math.log2(p)
    rows = digram.row_totals()
    h2 = 0.0
    for (a, b), n in digram.counts.items():
        if n == 0:
            continue
        joint = n / digram.total
        conditional = n / rows[a]
        h2 -= joint * math.log2(conditional)
    return EntropyReport(h0=h0, h1=h1, h2=h2)


def _sample_index(rng: SplitMix64, probs: list[float]) -> int:
    # first index whose cumulative probability exceeds the draw
    u = rng.next_float()
    acc = 0.0
    for i, p in enumerate(probs):
        acc += p
        if u < acc:
            return i
    return len(probs) - 1


def generate(model, length: int, seed: int, order: int = 1):
    """Run a fitted model forward; deterministic for a given seed.

    With a :class:`TransitionCounts` the walk starts from the marginal
    state distribution and follows the row-conditional probabilities,
    returning a :class:`BinarySequence`. With a
    :class:`~letterlab.cipher.LanguageModel`, order 0 samples the raw
    unigram proportions and order 1 samples smoothed digram rows (the
    smoothing pseudo-count keeps every row normalizable), returning a
    :class:`LetterSequence`. A row that cannot be normalized raises
    :class:`InputError` when the walk reaches it.
    """
    if length < 0:
        raise InputError("length must be nonnegative")
    rng = SplitMix64(seed)
    if isinstance(model, TransitionCounts):
        return _generate_states(model, length, rng)
    # duck-typed language model: unigram/digram/smoothing attributes
    if not hasattr(model, "unigram") or not hasattr(model, "digram"):
        raise InputError(f"cannot generate from {type(model).__name__}")
    if order not in (0, 1):
        raise InputError("order must be 0 or 1")
    return _generate_letters(model, length, rng, order)


def _generate_states(t: TransitionCounts, length: int, rng: SplitMix64) -> BinarySequence:
    total = t.total
    if length > 0 and total == 0:
        raise InputError("non-normalizable row: no transitions observed")
    out = []
    if length > 0:
        marginal = [t.row_total(s) / total for s in STATES]
        state = STATES[_sample_index(rng, marginal)]
        out.append(state)
        for _ in range(length - 1):
            row = t.row_total(state)
            if row == 0:
                raise InputError(f"non-normalizable row for state {state!r}")
            probs = [t.n[(state, s)] / row for s in STATES]
            state = STATES[_sample_index(rng, probs)]
            out.append(state)
    return BinarySequence(states="".join(out), source="generated order-1 chain")


def _generate_letters(model, length: int, rng: SplitMix64, order: int) -> LetterSequence:
    alphabet: Alphabet = model.unigram.alphabet
    letters = alphabet.letters
    if length == 0:
        return LetterSequence(alphabet, "", source="generated")
    if model.unigram.total == 0:
        raise InputError("non-normalizable row: empty unigram table")
    marginal = [model.unigram.proportion(ch) for ch in letters]
    out = [letters[_sample_index(rng, marginal)]]
    if order == 0:
        for _ in range(length - 1):
            out.append(letters[_sample_index(rng, marginal)])
    else:
        lam = model.smoothing
        rows = model.digram.row_totals()
        size = len(letters)
        row_cache: dict[str, list[float]] = {}
        for _ in range(length - 1):
            prev = out[-1]
            probs = row_cache.get(prev)
            if probs is None:
                denom = rows[prev] + lam * size
                probs = [(model.digram.count(prev, ch) + lam) / denom for ch in letters]
                row_cache[prev] = probs
            out.append(letters[_sample_index(rng, probs)])
    return LetterSequence(alphabet, "".join(out), source=f"generated order-{order}")
