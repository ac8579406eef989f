"""Letters, words and factor machinery over the free monoid.

Text grammar: a word is a whitespace-separated sequence of tokens, each a
lowercase base plus an optional decimal index (``x``, ``t1``, ``z12``), so
``t1`` and ``t2`` are distinct letters.  The single token ``1`` denotes the
empty word, which is the identity for concatenation and prints as ``1``.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator

_TOKEN_RE = re.compile(r"([a-z]+)([0-9]+)?\Z")


class Letter:
    """A letter of the alphabet: lowercase base plus optional numeric index."""

    __slots__ = ("base", "index", "_key", "_hash")

    _cache: dict = {}

    def __new__(cls, base: str, index: int | None = None):
        cached = cls._cache.get((base, index))
        if cached is not None:
            return cached
        if not base or not base.isascii() or not base.islower() or not base.isalpha():
            raise ValueError(f"letter base must be lowercase ASCII: {base!r}")
        if index is not None and index < 0:
            raise ValueError(f"letter index must be non-negative: {index}")
        self = super().__new__(cls)
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "index", index)
        # -1 sorts the unindexed letter before its indexed variants (t < t0 < t1)
        object.__setattr__(self, "_key", (base, -1 if index is None else index))
        object.__setattr__(self, "_hash", hash(("Letter", base, index)))
        cls._cache[(base, index)] = self
        return self

    def __setattr__(self, name, value):
        raise AttributeError("Letter is immutable")

    @classmethod
    def parse(cls, token: str) -> "Letter":
        m = _TOKEN_RE.match(token)
        if m is None:
            raise ValueError(f"bad letter token: {token!r}")
        base, digits = m.groups()
        return cls(base, int(digits) if digits is not None else None)

    @property
    def key(self):
        return self._key

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Letter):
            return NotImplemented
        return self.base == other.base and self.index == other.index

    def __lt__(self, other):
        return self._key < other._key

    def __le__(self, other):
        return self._key <= other._key

    def __gt__(self, other):
        return self._key > other._key

    def __ge__(self, other):
        return self._key >= other._key

    def __hash__(self):
        return self._hash

    def __str__(self):
        return self.base if self.index is None else f"{self.base}{self.index}"

    def __repr__(self):
        return f"Letter({str(self)!r})"

    def __reduce__(self):
        return (Letter, (self.base, self.index))


class Word:
    """Immutable finite sequence of letters; ``*`` concatenates."""

    __slots__ = ("letters", "_hash", "_key")

    def __init__(self, letters: Iterable[Letter] = ()):
        tup = tuple(letters)
        for x in tup:
            if not isinstance(x, Letter):
                raise TypeError(f"not a Letter: {x!r}")
        object.__setattr__(self, "letters", tup)
        object.__setattr__(self, "_hash", hash(("Word", tup)))
        object.__setattr__(self, "_key", None)

    def __setattr__(self, name, value):
        raise AttributeError("Word is immutable")

    @classmethod
    def parse(cls, text: str) -> "Word":
        tokens = text.split()
        if not tokens:
            raise ValueError("empty word text; write the empty word as '1'")
        letters = []
        for tok in tokens:
            if tok == "1":
                continue  # identity token contributes nothing
            letters.append(Letter.parse(tok))
        return cls(letters)

    @property
    def key(self):
        """Shortlex sort key: by length, then letterwise."""
        k = self._key
        if k is None:
            k = (len(self.letters), tuple(x._key for x in self.letters))
            object.__setattr__(self, "_key", k)
        return k

    def __len__(self):
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return Word(self.letters[i])
        return self.letters[i]

    def __contains__(self, letter):
        return letter in self.letters

    def __mul__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        return Word(self.letters + other.letters)

    def __pow__(self, n: int) -> "Word":
        return Word(self.letters * n)

    def __eq__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        return self.letters == other.letters

    def __lt__(self, other):
        return self.key < other.key

    def __le__(self, other):
        return self.key <= other.key

    def __gt__(self, other):
        return self.key > other.key

    def __ge__(self, other):
        return self.key >= other.key

    def __hash__(self):
        return self._hash

    def __str__(self):
        return " ".join(str(x) for x in self.letters) if self.letters else "1"

    def __repr__(self):
        return f"Word.parse({str(self)!r})"

    def __reduce__(self):
        return (Word, (self.letters,))


EMPTY = Word()


def W(text: str) -> Word:
    """Shorthand parser (``W("x t1 x")``)."""
    return Word.parse(text)


def L(token: str) -> Letter:
    return Letter.parse(token)


def alphabet(w: Word) -> frozenset:
    """The set of letters with at least one occurrence in w."""
    return frozenset(w.letters)


def occurrences(w: Word, x: Letter) -> int:
    return w.letters.count(x)


def simple_letters(w: Word) -> frozenset:
    """Letters occurring exactly once in w."""
    counts = _counts(w)
    return frozenset(x for x, c in counts.items() if c == 1)


def multiple_letters(w: Word) -> frozenset:
    """Letters occurring more than once in w."""
    counts = _counts(w)
    return frozenset(x for x, c in counts.items() if c > 1)


def _counts(w: Word) -> dict:
    counts: dict = {}
    for x in w.letters:
        counts[x] = counts.get(x, 0) + 1
    return counts


def simple_sequence(w: Word) -> tuple:
    """The simple letters of w in order of occurrence."""
    simple = simple_letters(w)
    return tuple(x for x in w.letters if x in simple)


def delete_letters(w: Word, letters: Iterable[Letter]) -> Word:
    """Remove every occurrence of the given letters (absent letters are ignored)."""
    drop = frozenset(letters)
    return Word(x for x in w.letters if x not in drop)


def restrict_to(w: Word, letters: Iterable[Letter]) -> Word:
    """Keep only occurrences of the given letters."""
    keep = frozenset(letters)
    return Word(x for x in w.letters if x in keep)


def is_factor(f: Word, w: Word) -> bool:
    """True iff w = a f b for some words a, b (contiguous containment)."""
    lf = len(f)
    if lf == 0:
        return True
    ft, wt = f.letters, w.letters
    return any(wt[i : i + lf] == ft for i in range(len(wt) - lf + 1))


def factors(words: Iterable[Word]) -> frozenset:
    """All distinct contiguous factors of the given words, the empty word included.

    The empty collection has no factors at all (not even the empty word).
    """
    out = set()
    for w in words:
        t = w.letters
        out.add(EMPTY)
        n = len(t)
        for i in range(n):
            for j in range(i + 1, n + 1):
                out.add(Word(t[i:j]))
    return frozenset(out)


class OccurrenceRef:
    """The ordinal-th occurrence of a letter in a word, with its 0-based position."""

    __slots__ = ("letter", "ordinal", "position")

    def __init__(self, letter: Letter, ordinal: int, position: int):
        self.letter = letter
        self.ordinal = ordinal
        self.position = position

    def __eq__(self, other):
        return (
            isinstance(other, OccurrenceRef)
            and (self.letter, self.ordinal, self.position)
            == (other.letter, other.ordinal, other.position)
        )

    def __hash__(self):
        return hash((self.letter, self.ordinal, self.position))

    def __repr__(self):
        return f"OccurrenceRef({self.letter!r}, ordinal={self.ordinal}, position={self.position})"


def occurrence_ref(w: Word, letter: Letter, ordinal: int) -> OccurrenceRef:
    """Locate the ordinal-th occurrence of letter in w (ordinals start at 1)."""
    if ordinal < 1:
        raise ValueError(f"ordinal must be positive: {ordinal}")
    seen = 0
    for pos, x in enumerate(w.letters):
        if x == letter:
            seen += 1
            if seen == ordinal:
                return OccurrenceRef(letter, ordinal, pos)
    raise ValueError(f"{letter} has only {seen} occurrence(s) in {w}, wanted {ordinal}")


def occurrence_precedes(w: Word, a: OccurrenceRef, b: OccurrenceRef) -> bool:
    """True iff occurrence a strictly precedes occurrence b in w; refs must be valid."""
    for ref in (a, b):
        check = occurrence_ref(w, ref.letter, ref.ordinal)
        if check.position != ref.position:
            raise ValueError(f"stale occurrence reference {ref!r} for {w}")
    return a.position < b.position


_CANONICAL_BASES = "abcdefghijklmnopqrstuvwxyz"


def canonical_letter(i: int) -> Letter:
    """The i-th letter of the fixed canonical alphabet a, b, c, ..."""
    if i < len(_CANONICAL_BASES):
        return Letter(_CANONICAL_BASES[i])
    return Letter("a", i - len(_CANONICAL_BASES))


def canonical_map(letters: Iterable[Letter]) -> dict:
    """Renaming of letters onto the canonical alphabet in order of first occurrence."""
    out: dict = {}
    for x in letters:
        if x not in out:
            out[x] = canonical_letter(len(out))
    return out


def canonical_rename(w: Word) -> Word:
    """Rename letters to the canonical alphabet by first occurrence; idempotent."""
    m = canonical_map(w.letters)
    return Word(m[x] for x in w.letters)
