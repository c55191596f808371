"""Finite words, alphabets and ultimately periodic (lasso) omega-words.

Symbols are opaque strings; multi-character names such as ``"↢₁"`` or
``"α"`` are ordinary symbols.  Every value here is immutable.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

EMPTY = "@"

# ASCII spellings accepted by the parser and produced by ``render(ascii=True)``.
_SUBSCRIPTS = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")
_UNSUBSCRIPTS = str.maketrans("₀₁₂₃₄₅₆₇₈₉", "0123456789")


def to_ascii(symbol: str) -> str:
    if symbol == "α":
        return "al"
    if symbol == "β":
        return "be"
    if symbol.startswith("↢"):
        return "~" + symbol[1:].translate(_UNSUBSCRIPTS)
    return symbol


def from_ascii(name: str) -> str:
    if name == "al":
        return "α"
    if name == "be":
        return "β"
    if name.startswith("~"):
        return "↢" + name[1:].translate(_SUBSCRIPTS)
    return name


class AlphabetError(ValueError):
    """A symbol or word does not fit the alphabet it was used with."""


@dataclass(frozen=True)
class Alphabet:
    symbols: tuple[str, ...]
    _rank: dict = field(init=False, repr=False, compare=False, hash=False)

    def __init__(self, symbols: Iterable[str]):
        syms = tuple(symbols)
        if not syms:
            raise AlphabetError("alphabet must be nonempty")
        if len(set(syms)) != len(syms):
            raise AlphabetError(f"duplicate symbols in {syms!r}")
        if any(not s for s in syms):
            raise AlphabetError("symbols must be nonempty strings")
        object.__setattr__(self, "symbols", syms)
        object.__setattr__(self, "_rank", {s: i for i, s in enumerate(syms)})

    def __contains__(self, symbol) -> bool:
        return symbol in self._rank

    def __iter__(self) -> Iterator[str]:
        return iter(self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def rank(self, symbol: str) -> int:
        return self._rank[symbol]

    def extend(self, *extra: str) -> Alphabet:
        return Alphabet(self.symbols + tuple(extra))

    def without(self, *drop: str) -> Alphabet:
        return Alphabet(s for s in self.symbols if s not in drop)

    def word(self, letters: Iterable[str] | str = ()) -> Word:
        """Build a word; a plain string is tokenized with :func:`parse_word`."""
        if isinstance(letters, str):
            return parse_word(letters, self)
        return Word(self, tuple(letters))

    @property
    def empty(self) -> Word:
        return Word(self, ())

    def __str__(self) -> str:
        return "{" + ",".join(self.symbols) + "}"


@dataclass(frozen=True)
class Word:
    alphabet: Alphabet
    letters: tuple[str, ...] = ()

    def __post_init__(self):
        letters = tuple(self.letters)
        object.__setattr__(self, "letters", letters)
        for i, a in enumerate(letters):
            if a not in self.alphabet:
                raise AlphabetError(f"letter {a!r} at position {i} not in {self.alphabet}")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[str]:
        return iter(self.letters)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return Word(self.alphabet, self.letters[i])
        return self.letters[i]

    def __add__(self, other: Word) -> Word:
        return concat(self, other)

    def is_prefix_of(self, other: Word) -> bool:
        return other.letters[: len(self)] == self.letters

    def count(self, symbol: str) -> int:
        return self.letters.count(symbol)

    def sort_key(self) -> tuple:
        """Key for length-then-lexicographic order."""
        return (len(self), tuple(self.alphabet.rank(a) for a in self.letters))

    def render(self, ascii: bool = False) -> str:
        return render_letters(self.letters, self.alphabet, ascii=ascii)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"Word({self.render()!r})"


def render_letters(letters: Sequence[str], alphabet: Alphabet, ascii: bool = False) -> str:
    if not letters:
        return EMPTY
    names = [to_ascii(s) for s in alphabet] if ascii else list(alphabet)
    sep = "." if any(len(n) > 1 for n in names) else ""
    return sep.join(to_ascii(a) if ascii else a for a in letters)


def parse_word(text: str, alphabet: Alphabet) -> Word:
    """Parse the textual word syntax.

    ``"@"`` (or the empty string) is the empty word.  Symbols may be
    separated by ``"."``; otherwise the text is split by greedy longest match
    against the alphabet, with ASCII aliases (``~``, ``~2``, ``al``, ``be``)
    accepted for the eraser and code letters.
    """
    if text in ("", EMPTY):
        return alphabet.empty
    if "." in text:
        return Word(alphabet, tuple(from_ascii(t) for t in text.split(".")))
    spellings = {}
    for s in alphabet:
        spellings[s] = s
        spellings[to_ascii(s)] = s
    longest = max(len(k) for k in spellings)
    letters = []
    i = 0
    while i < len(text):
        for n in range(min(longest, len(text) - i), 0, -1):
            sym = spellings.get(text[i : i + n])
            if sym is not None:
                letters.append(sym)
                i += n
                break
        else:
            raise AlphabetError(f"cannot read a symbol of {alphabet} at offset {i} of {text!r}")
    return Word(alphabet, tuple(letters))


def concat(a: Word, b: Word) -> Word:
    if a.alphabet != b.alphabet:
        raise AlphabetError(f"cannot concatenate words over {a.alphabet} and {b.alphabet}")
    return Word(a.alphabet, a.letters + b.letters)


@dataclass(frozen=True)
class LassoWord:
    """The omega-word ``prefix · period · period · ...``."""

    prefix: Word
    period: Word

    def __post_init__(self):
        if len(self.period) < 1:
            raise ValueError("lasso period must be nonempty")
        if self.prefix.alphabet != self.period.alphabet:
            raise AlphabetError("lasso prefix and period use different alphabets")

    @property
    def alphabet(self) -> Alphabet:
        return self.prefix.alphabet

    def letter(self, i: int) -> str:
        u, v = self.prefix.letters, self.period.letters
        if i < len(u):
            return u[i]
        return v[(i - len(u)) % len(v)]

    def letters(self, start: int, stop: int) -> tuple[str, ...]:
        return tuple(self.letter(i) for i in range(start, stop))

    def unroll(self, n: int) -> Word:
        return lasso_prefix(self, n)

    def render(self, ascii: bool = False) -> str:
        return f"{self.prefix.render(ascii)}:{self.period.render(ascii)}"

    def __str__(self) -> str:
        return self.render()


def parse_lasso(text: str, alphabet: Alphabet) -> LassoWord:
    """Parse ``"u:v"``."""
    if text.count(":") != 1:
        raise AlphabetError(f"lasso must be written u:v, got {text!r}")
    u, v = text.split(":")
    return LassoWord(parse_word(u, alphabet), parse_word(v, alphabet))


def lasso_prefix(x: LassoWord, n: int) -> Word:
    if n < 0:
        raise ValueError("prefix length must be nonnegative")
    return Word(x.alphabet, x.letters(0, n))


def lasso_equivalent(x: LassoWord, y: LassoWord) -> bool:
    if x.alphabet != y.alphabet:
        raise AlphabetError("lassos over different alphabets")
    n = len(x.prefix) + len(y.prefix) + 2 * math.lcm(len(x.period), len(y.period))
    return x.letters(0, n) == y.letters(0, n)


def enumerate_words(alphabet: Alphabet, max_len: int) -> Iterator[Word]:
    """All words of length <= max_len, shortest first, then lexicographic."""
    if max_len < 0:
        raise ValueError("max_len must be nonnegative")
    for n in range(max_len + 1):
        for letters in itertools.product(alphabet.symbols, repeat=n):
            yield Word(alphabet, letters)


def enumerate_lassos(alphabet: Alphabet, max_prefix: int, max_period: int) -> Iterator[LassoWord]:
    for u in enumerate_words(alphabet, max_prefix):
        for v in enumerate_words(alphabet, max_period):
            if len(v):
                yield LassoWord(u, v)
