"""Monoalphabetic substitution ciphers and frequency-analysis solving.

A key is a bijection from plaintext letters onto a same-sized cipher
symbol inventory. Rank matching alone (most frequent symbol = most
frequent letter, and so on down) seeds the attack; digram log-likelihood
scoring plus hill climbing over key swaps finishes it. Every restart is
deterministic for a given seed, and ties across restarts go to the
lowest restart index, so reports are reproducible regardless of how
restarts are scheduled.

Short cryptograms are flagged: below about ninety symbols the frequency
ranks carry too little signal for the seed key to mean much.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field

import numpy as np

from .alphabet import Alphabet, LetterSequence
from .errors import InputError
from .freq import DigramTable, FrequencyTable, count_digrams, count_letters, rank_order
from .rng import substream

LENGTH_WARNING_THRESHOLD = 90


@dataclass(frozen=True)
class SubstitutionKey:
    """Bijection from plaintext letters to cipher symbols."""

    alphabet: Alphabet
    mapping: dict[str, str]

    def __post_init__(self):
        if set(self.mapping) != set(self.alphabet.letters):
            raise InputError("key must map every alphabet letter exactly once")
        values = list(self.mapping.values())
        if len(set(values)) != len(values):
            raise InputError("key mapping must be injective")
        for v in values:
            if len(v) != 1:
                raise InputError(f"cipher symbol {v!r} must be one character")

    @classmethod
    def identity(cls, alphabet: Alphabet) -> "SubstitutionKey":
        return cls(alphabet, {ch: ch for ch in alphabet.letters})

    @classmethod
    def from_target_string(cls, alphabet: Alphabet, targets: str) -> "SubstitutionKey":
        """Key sending the i-th alphabet letter to the i-th character of `targets`."""
        if len(targets) != len(alphabet.letters):
            raise InputError("target string length must match the alphabet")
        return cls(alphabet, dict(zip(alphabet.letters, targets)))

    def target_string(self) -> str:
        return "".join(self.mapping[ch] for ch in self.alphabet.letters)

    def inverse(self) -> dict[str, str]:
        return {v: k for k, v in self.mapping.items()}

    def compose(self, inner: "SubstitutionKey") -> "SubstitutionKey":
        """Key equivalent to applying `inner` first, then this key.

        Requires every image of `inner` to be a plaintext letter of this
        key's alphabet.
        """
        if inner.alphabet != self.alphabet:
            raise InputError("alphabet mismatch")
        try:
            mapping = {ch: self.mapping[inner.mapping[ch]] for ch in self.alphabet.letters}
        except KeyError as exc:
            raise InputError(f"inner key image {exc.args[0]!r} is not a plaintext letter") from None
        return SubstitutionKey(self.alphabet, mapping)


@dataclass(frozen=True)
class Cryptogram:
    """Ciphertext over a fixed symbol inventory of alphabet size."""

    alphabet: Alphabet
    symbols: str
    symbol_set: tuple[str, ...]
    source: str = field(default="", compare=False)

    def __post_init__(self):
        if len(self.symbol_set) != len(self.alphabet.letters):
            raise InputError("symbol inventory must match the alphabet size")
        if len(set(self.symbol_set)) != len(self.symbol_set):
            raise InputError("symbol inventory must be distinct")
        inventory = set(self.symbol_set)
        for ch in self.symbols:
            if ch not in inventory:
                raise InputError(f"cryptogram symbol {ch!r} outside the expected inventory")

    def __len__(self) -> int:
        return len(self.symbols)


@dataclass(frozen=True)
class LengthWarning:
    """Cryptogram shorter than the reliable-analysis threshold."""

    length: int
    threshold: int

    def message(self) -> str:
        return (
            f"cryptogram has {self.length} symbols; frequency analysis is "
            f"unreliable below {self.threshold}"
        )


@dataclass(frozen=True)
class LanguageModel:
    """Unigram and digram tables with a smoothing pseudo-count."""

    unigram: FrequencyTable
    digram: DigramTable
    smoothing: float = 0.5

    def __post_init__(self):
        if self.unigram.alphabet != self.digram.alphabet:
            raise InputError("unigram and digram tables must share an alphabet")
        if self.smoothing <= 0:
            raise InputError("smoothing pseudo-count must be positive")

    @property
    def alphabet(self) -> Alphabet:
        return self.unigram.alphabet

    @classmethod
    def train(cls, seq: LetterSequence, smoothing: float = 0.5) -> "LanguageModel":
        return cls(unigram=count_letters(seq), digram=count_digrams(seq), smoothing=smoothing)

    def log_prob(self, first: str, second: str) -> float:
        """Smoothed log probability of `second` following `first`."""
        lam = self.smoothing
        size = len(self.alphabet.letters)
        num = self.digram.count(first, second) + lam
        den = self.unigram.counts[first] + lam * size
        return math.log(num / den)

    def save(self, prefix: str) -> tuple[str, str]:
        """Write <prefix>.unigram.csv and <prefix>.digram.csv; returns the paths."""
        upath, dpath = f"{prefix}.unigram.csv", f"{prefix}.digram.csv"
        with open(upath, "w", encoding="utf-8", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["letter", "count"])
            for ch in self.alphabet.letters:
                w.writerow([ch, self.unigram.counts[ch]])
        with open(dpath, "w", encoding="utf-8", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["first", "second", "count"])
            idx = self.alphabet.index
            for (a, b) in sorted(self.digram.counts, key=lambda p: (idx(p[0]), idx(p[1]))):
                w.writerow([a, b, self.digram.counts[(a, b)]])
        return upath, dpath

    @classmethod
    def load(cls, prefix: str, alphabet: Alphabet, smoothing: float = 0.5) -> "LanguageModel":
        """Read the two CSV tables written by :meth:`save`."""
        ucounts: dict[str, int] = {}
        with open(f"{prefix}.unigram.csv", encoding="utf-8", newline="") as fh:
            rows = list(csv.reader(fh))
        if not rows or rows[0] != ["letter", "count"]:
            raise InputError("unigram file must start with header 'letter,count'")
        for lineno, row in enumerate(rows[1:], start=2):
            if len(row) != 2:
                raise InputError(f"unigram file line {lineno}: expected 2 fields")
            try:
                ucounts[row[0]] = int(row[1])
            except ValueError:
                raise InputError(f"unigram file line {lineno}: bad count {row[1]!r}") from None
        dcounts: dict[tuple[str, str], int] = {}
        with open(f"{prefix}.digram.csv", encoding="utf-8", newline="") as fh:
            rows = list(csv.reader(fh))
        if not rows or rows[0] != ["first", "second", "count"]:
            raise InputError("digram file must start with header 'first,second,count'")
        for lineno, row in enumerate(rows[1:], start=2):
            if len(row) != 3:
                raise InputError(f"digram file line {lineno}: expected 3 fields")
            try:
                dcounts[(row[0], row[1])] = int(row[2])
            except ValueError:
                raise InputError(f"digram file line {lineno}: bad count {row[2]!r}") from None
        unigram = FrequencyTable.from_counts(alphabet, ucounts)
        digram = DigramTable(alphabet, dcounts, sum(dcounts.values()))
        return cls(unigram=unigram, digram=digram, smoothing=smoothing)


@dataclass(frozen=True)
class SolverReport:
    best_key: SubstitutionKey
    best_score: float
    plaintext: LetterSequence
    restarts_run: int
    length_warning: LengthWarning | None


def parse_cryptogram(text: str, alphabet: Alphabet, source: str = "cryptogram") -> Cryptogram:
    """Read ciphertext whose symbol inventory is the alphabet itself.

    Whitespace is ignored and letters are lowercased; any other
    character is rejected, since a monoalphabetic cryptogram has a fixed
    symbol inventory.
    """
    out = []
    for ch in text:
        if ch.isspace():
            continue
        low = ch.lower()
        if low not in alphabet:
            raise InputError(f"unexpected cryptogram symbol {ch!r}")
        out.append(low)
    return Cryptogram(alphabet, "".join(out), tuple(alphabet.letters), source=source)


def encrypt(seq: LetterSequence, key: SubstitutionKey) -> Cryptogram:
    """Apply the key letter by letter; inverse of :func:`decrypt`."""
    if seq.alphabet != key.alphabet:
        raise InputError("alphabet mismatch")
    symbols = "".join(key.mapping[ch] for ch in seq.symbols)
    return Cryptogram(
        alphabet=seq.alphabet,
        symbols=symbols,
        symbol_set=tuple(sorted(key.mapping.values())),
        source=f"encrypted {seq.source}".strip(),
    )


def decrypt(c: Cryptogram, key: SubstitutionKey) -> LetterSequence:
    """Invert the key over the cryptogram."""
    if c.alphabet != key.alphabet:
        raise InputError("alphabet mismatch")
    inv = key.inverse()
    try:
        plain = "".join(inv[ch] for ch in c.symbols)
    except KeyError as exc:
        raise InputError(f"cryptogram symbol {exc.args[0]!r} not produced by this key") from None
    return LetterSequence(c.alphabet, plain, source=f"decrypted {c.source}".strip())


def length_check(c: Cryptogram, threshold: int = LENGTH_WARNING_THRESHOLD) -> LengthWarning | None:
    """Warn when the cryptogram is shorter than `threshold` symbols."""
    if len(c.symbols) < threshold:
        return LengthWarning(length=len(c.symbols), threshold=threshold)
    return None


def frequency_match_key(cipher_table: FrequencyTable, reference: FrequencyTable) -> SubstitutionKey:
    """Key pairing the i-th ranked cipher symbol with the i-th ranked letter.

    The two tables may live over different symbol universes, as long as
    the sizes agree; ties break by each table's own letter order.
    """
    if len(cipher_table.alphabet.letters) != len(reference.alphabet.letters):
        raise InputError("symbol sets differ in size")
    cipher_ranked = rank_order(cipher_table)
    reference_ranked = rank_order(reference)
    mapping = dict(zip(reference_ranked, cipher_ranked))
    return SubstitutionKey(reference.alphabet, mapping)


def score(seq: LetterSequence, model: LanguageModel) -> float:
    """Digram log likelihood of a letter sequence under the model.

    Sum over adjacent pairs of log((digram count + s) / (first-letter
    count + s * alphabet size)) with s the smoothing pseudo-count.
    Higher is better; an all-zero model scores (len-1) * log(1/size).
    """
    if seq.alphabet != model.alphabet:
        raise InputError("alphabet mismatch")
    if len(seq.symbols) == 0:
        raise InputError("empty sequence")
    total = 0.0
    s = seq.symbols
    for i in range(len(s) - 1):
        total += model.log_prob(s[i], s[i + 1])
    return total


def _log_prob_matrix(model: LanguageModel) -> np.ndarray:
    letters = model.alphabet.letters
    size = len(letters)
    lam = model.smoothing
    mat = np.empty((size, size), dtype=float)
    for i, a in enumerate(letters):
        den = model.unigram.counts[a] + lam * size
        for j, b in enumerate(letters):
            mat[i, j] = math.log((model.digram.count(a, b) + lam) / den)
    return mat


def _cipher_digram_matrix(c: Cryptogram) -> np.ndarray:
    index = {sym: i for i, sym in enumerate(c.symbol_set)}
    size = len(c.symbol_set)
    mat = np.zeros((size, size), dtype=float)
    s = c.symbols
    for i in range(len(s) - 1):
        mat[index[s[i]], index[s[i + 1]]] += 1.0
    return mat


def _seed_assignment(c: Cryptogram, model: LanguageModel) -> list[int]:
    """Frequency-match seed as `assignment[symbol index] = letter index`."""
    counts = {sym: 0 for sym in c.symbol_set}
    for ch in c.symbols:
        counts[ch] += 1
    sym_index = {sym: i for i, sym in enumerate(c.symbol_set)}
    ranked_syms = sorted(c.symbol_set, key=lambda sym: (-counts[sym], sym_index[sym]))
    ranked_letters = rank_order(model.unigram)
    letter_index = model.alphabet.index
    assignment = [0] * len(c.symbol_set)
    for sym, letter in zip(ranked_syms, ranked_letters):
        assignment[sym_index[sym]] = letter_index(letter)
    return assignment


def hill_climb_solve(
    c: Cryptogram,
    model: LanguageModel,
    restarts: int = 20,
    max_stale: int = 2,
    seed: int = 0,
    warning_threshold: int = LENGTH_WARNING_THRESHOLD,
) -> SolverReport:
    """Recover a substitution key by best-improvement hill climbing.

    Restart 1 starts from the frequency-match key; later restarts start
    from seeded random keys. Each sweep evaluates every pairwise swap of
    mapping targets and takes the best strict improvement; a restart
    ends after `max_stale` consecutive sweeps without one. The best key
    across restarts wins, earliest restart first on ties, which also
    guarantees the result never scores below the frequency-match seed.
    """
    if len(c.symbols) == 0:
        raise InputError("empty cryptogram")
    if restarts < 1:
        raise InputError("need at least one restart")
    if len(c.alphabet.letters) != len(model.alphabet.letters):
        raise InputError("alphabet mismatch")

    size = len(c.symbol_set)
    logp = _log_prob_matrix(model)
    ndig = _cipher_digram_matrix(c)

    def evaluate(assignment: np.ndarray) -> float:
        return float((ndig * logp[np.ix_(assignment, assignment)]).sum())

    best_assignment: np.ndarray | None = None
    best_score_val = -math.inf

    for r in range(1, restarts + 1):
        if r == 1:
            assignment = np.array(_seed_assignment(c, model), dtype=np.intp)
        else:
            perm = list(range(size))
            substream(seed, r).shuffle(perm)
            assignment = np.array(perm, dtype=np.intp)
        current = evaluate(assignment)
        stale = 0
        while stale < max_stale:
            best_swap = None
            best_gain_score = current
            for i in range(size - 1):
                for j in range(i + 1, size):
                    assignment[i], assignment[j] = assignment[j], assignment[i]
                    cand = evaluate(assignment)
                    assignment[i], assignment[j] = assignment[j], assignment[i]
                    if cand > best_gain_score:
                        best_gain_score = cand
                        best_swap = (i, j)
            if best_swap is None:
                stale += 1
            else:
                i, j = best_swap
                assignment[i], assignment[j] = assignment[j], assignment[i]
                current = best_gain_score
                stale = 0
        if current > best_score_val:
            best_score_val = current
            best_assignment = assignment.copy()

    letters = model.alphabet.letters
    mapping = {letters[best_assignment[s]]: c.symbol_set[s] for s in range(size)}
    best_key = SubstitutionKey(model.alphabet, mapping)
    plaintext = decrypt(c, best_key)
    return SolverReport(
        best_key=best_key,
        best_score=score(plaintext, model),
        plaintext=plaintext,
        restarts_run=restarts,
        length_warning=length_check(c, warning_threshold),
    )
