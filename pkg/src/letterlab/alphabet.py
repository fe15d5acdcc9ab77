"""Alphabets and text normalization.

An :class:`Alphabet` fixes the universe for every count in the package:
an ordered letter inventory (the order doubles as the tie-break for
frequency ranks), the vowel subset, and fold rules mapping external
characters onto letters (or discarding them). :func:`normalize` turns
raw text into a :class:`LetterSequence`; :func:`tokenize_words` splits
it into maximal letter runs.

Alphabets can be defined in a small line-oriented document::

    # comment
    name: en
    letters: abcdefghijklmnopqrstuvwxyz
    vowels: aeiou
    fold: é > e
    fold: ' > -

``fold: x > -`` discards ``x``. Lowercasing happens before fold lookup,
so fold sources are stored lowercased. Builtin names ("en",
"en-y-vowel", "la", "fr", "it") resolve without a document.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InputError


class AlphabetSpecError(InputError):
    """Malformed alphabet spec document; message includes the line number."""


@dataclass(frozen=True)
class Alphabet:
    """Ordered letter inventory with vowel subset and fold rules.

    Invariants checked at construction: letters are distinct single
    characters; vowels form a nonempty strict subset of letters; every
    fold target is a letter or None (discard).
    """

    name: str
    letters: tuple[str, ...]
    vowels: frozenset[str]
    folds: dict[str, str | None] = field(default_factory=dict)
    _index: dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not self.letters:
            raise InputError(f"alphabet {self.name!r}: no letters")
        for ch in self.letters:
            if len(ch) != 1:
                raise InputError(f"alphabet {self.name!r}: symbol {ch!r} is not a single character")
        if len(set(self.letters)) != len(self.letters):
            raise InputError(f"alphabet {self.name!r}: duplicate letters")
        letter_set = set(self.letters)
        if not self.vowels:
            raise InputError(f"alphabet {self.name!r}: vowels must be nonempty")
        if not self.vowels <= letter_set:
            bad = sorted(self.vowels - letter_set)
            raise InputError(f"alphabet {self.name!r}: vowels not in letters: {bad}")
        if self.vowels == letter_set:
            raise InputError(f"alphabet {self.name!r}: vowels must be a strict subset of letters")
        for src, dst in self.folds.items():
            if dst is not None and dst not in letter_set:
                raise InputError(f"alphabet {self.name!r}: fold target {dst!r} not a letter")
        object.__setattr__(self, "_index", {ch: i for i, ch in enumerate(self.letters)})

    def __len__(self) -> int:
        return len(self.letters)

    def index(self, letter: str) -> int:
        """Position of `letter` in the tie-break order."""
        return self._index[letter]

    def is_vowel(self, letter: str) -> bool:
        return letter in self.vowels

    def __contains__(self, ch: str) -> bool:
        return ch in self._index


@dataclass(frozen=True)
class LetterSequence:
    """Normalized symbols over one alphabet. `source` is provenance only."""

    alphabet: Alphabet
    symbols: str
    source: str = field(default="", compare=False)

    def __post_init__(self):
        for ch in self.symbols:
            if ch not in self.alphabet:
                raise InputError(f"symbol {ch!r} not in alphabet {self.alphabet.name!r}")

    def __len__(self) -> int:
        return len(self.symbols)


@dataclass(frozen=True)
class WordSequence:
    """Words (nonempty letter strings) over one alphabet."""

    alphabet: Alphabet
    words: tuple[str, ...]
    source: str = field(default="", compare=False)

    def __post_init__(self):
        for w in self.words:
            if not w:
                raise InputError("empty word")
            for ch in w:
                if ch not in self.alphabet:
                    raise InputError(f"symbol {ch!r} not in alphabet {self.alphabet.name!r}")

    def __len__(self) -> int:
        return len(self.words)


_BUILTIN_SPECS = {
    "en": """
        name: en
        letters: abcdefghijklmnopqrstuvwxyz
        vowels: aeiou
    """,
    # Alternate English alphabet treating y as a vowel.
    "en-y-vowel": """
        name: en-y-vowel
        letters: abcdefghijklmnopqrstuvwxyz
        vowels: aeiouy
    """,
    # Classical Latin: 23 letters, i/j and u/v merged by folding.
    "la": """
        name: la
        letters: abcdefghiklmnopqrstuxyz
        vowels: aeiouy
        fold: j > i
        fold: v > u
    """,
    "fr": """
        name: fr
        letters: abcdefghijklmnopqrstuvwxyz
        vowels: aeiouy
        fold: à > a
        fold: â > a
        fold: æ > a
        fold: ç > c
        fold: é > e
        fold: è > e
        fold: ê > e
        fold: ë > e
        fold: î > i
        fold: ï > i
        fold: ô > o
        fold: œ > o
        fold: ù > u
        fold: û > u
        fold: ü > u
        fold: ÿ > y
    """,
    # Italian: traditional 21-letter alphabet (no j, k, w, x, y).
    "it": """
        name: it
        letters: abcdefghilmnopqrstuvz
        vowels: aeiou
        fold: à > a
        fold: è > e
        fold: é > e
        fold: ì > i
        fold: î > i
        fold: ò > o
        fold: ó > o
        fold: ù > u
    """,
}


def builtin_names() -> tuple[str, ...]:
    return tuple(_BUILTIN_SPECS)


def load_alphabet(spec_text: str) -> Alphabet:
    """Parse an alphabet spec document (or a bare builtin name).

    Raises :class:`AlphabetSpecError` with line context for malformed
    documents, duplicate letters, or vowels outside the letter set.
    """
    bare = spec_text.strip()
    if bare in _BUILTIN_SPECS:
        spec_text = _BUILTIN_SPECS[bare]

    name = None
    letters: list[str] | None = None
    vowels: list[str] | None = None
    folds: dict[str, str | None] = {}
    letters_line = vowels_line = 0

    for lineno, raw_line in enumerate(spec_text.splitlines(), start=1):
        line = raw_line.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition(":")
        if not sep:
            raise AlphabetSpecError(f"line {lineno}: expected 'key: value', got {line!r}")
        key = key.strip()
        value = value.strip()
        if key == "name":
            if name is not None:
                raise AlphabetSpecError(f"line {lineno}: duplicate 'name'")
            if not value:
                raise AlphabetSpecError(f"line {lineno}: empty name")
            name = value
        elif key == "letters":
            if letters is not None:
                raise AlphabetSpecError(f"line {lineno}: duplicate 'letters'")
            letters = [ch for ch in value if not ch.isspace()]
            letters_line = lineno
            if not letters:
                raise AlphabetSpecError(f"line {lineno}: no letters given")
            if len(set(letters)) != len(letters):
                dups = sorted({ch for ch in letters if letters.count(ch) > 1})
                raise AlphabetSpecError(f"line {lineno}: duplicate letters {dups}")
        elif key == "vowels":
            if vowels is not None:
                raise AlphabetSpecError(f"line {lineno}: duplicate 'vowels'")
            vowels = [ch for ch in value if not ch.isspace()]
            vowels_line = lineno
            if not vowels:
                raise AlphabetSpecError(f"line {lineno}: no vowels given")
        elif key == "fold":
            parts = value.split(">")
            if len(parts) != 2:
                raise AlphabetSpecError(f"line {lineno}: fold must look like 'x > y' or 'x > -'")
            src, dst = parts[0].strip(), parts[1].strip()
            if len(src) != 1:
                raise AlphabetSpecError(f"line {lineno}: fold source must be one character, got {src!r}")
            if len(dst) != 1:
                raise AlphabetSpecError(f"line {lineno}: fold target must be one character or '-', got {dst!r}")
            src = src.lower()
            if src in folds:
                raise AlphabetSpecError(f"line {lineno}: duplicate fold for {src!r}")
            folds[src] = None if dst == "-" else dst
        else:
            raise AlphabetSpecError(f"line {lineno}: unknown key {key!r}")

    if name is None:
        raise AlphabetSpecError("missing 'name' line")
    if letters is None:
        raise AlphabetSpecError("missing 'letters' line")
    if vowels is None:
        raise AlphabetSpecError("missing 'vowels' line")

    letter_set = set(letters)
    bad_vowels = [v for v in vowels if v not in letter_set]
    if bad_vowels:
        raise AlphabetSpecError(f"line {vowels_line}: vowels not in letters: {bad_vowels}")
    if set(vowels) == letter_set:
        raise AlphabetSpecError(f"line {vowels_line}: vowels must be a strict subset of letters")
    for src, dst in folds.items():
        if dst is not None and dst not in letter_set:
            raise AlphabetSpecError(f"fold target {dst!r} not in letters (line {letters_line})")

    return Alphabet(name=name, letters=tuple(letters), vowels=frozenset(vowels), folds=folds)


def builtin_alphabet(name: str) -> Alphabet:
    """Return one of the builtin alphabets by name."""
    try:
        spec = _BUILTIN_SPECS[name]
    except KeyError:
        raise InputError(f"unknown builtin alphabet {name!r}; have {', '.join(_BUILTIN_SPECS)}") from None
    return load_alphabet(spec)


def _mapped(ch: str, alphabet: Alphabet) -> str | None:
    """Lowercase, apply fold rules, keep only alphabet letters."""
    ch = ch.lower()
    ch = alphabet.folds.get(ch, ch)
    if ch is not None and ch in alphabet:
        return ch
    return None


def normalize(raw: str, alphabet: Alphabet, source: str = "text") -> LetterSequence:
    """Reduce raw text to a letter sequence.

    Characters are lowercased, folded, and kept if they are alphabet
    letters; everything else is discarded (the discard count lands in
    the provenance label). Idempotent on its own rendered output.
    """
    out: list[str] = []
    discarded = 0
    for ch in raw:
        m = _mapped(ch, alphabet)
        if m is None:
            discarded += 1
        else:
            out.append(m)
    return LetterSequence(alphabet, "".join(out), source=f"{source} (discarded {discarded})")


def tokenize_words(raw: str, alphabet: Alphabet, source: str = "text") -> WordSequence:
    """Split raw text into maximal runs of letters.

    Any character that does not map to a letter (including explicit
    discard folds, apostrophes, hyphens) ends the current word, so the
    concatenation of the words equals ``normalize(raw).symbols``.
    """
    words: list[str] = []
    current: list[str] = []
    for ch in raw:
        m = _mapped(ch, alphabet)
        if m is None:
            if current:
                words.append("".join(current))
                current = []
        else:
            current.append(m)
    if current:
        words.append("".join(current))
    return WordSequence(alphabet, tuple(words), source=source)
