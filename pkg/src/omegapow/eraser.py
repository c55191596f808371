"""Back-space evaluation of eraser words.

Two evaluations are provided for a word over ``base ∪ {eraser}``:

* :func:`eval_tilde` is total; an eraser hitting an empty buffer does nothing.
* :func:`eval_approx` is partial; that same situation is undefined.

Any symbol other than the eraser being evaluated counts as an ordinary
letter, so ``↢₁`` may delete an occurrence of ``↢₂``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .words import Alphabet, LassoWord, Word, AlphabetError

ERASER = "↢"
ALPHA = "α"
BETA = "β"
_SUB = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")
_UNSUB = str.maketrans("₀₁₂₃₄₅₆₇₈₉", "0123456789")

BASE3 = Alphabet("012")


def indexed_eraser(k: int) -> str:
    if k < 1:
        raise ValueError("eraser indices start at 1")
    return ERASER + str(k).translate(_SUB)


def eraser_index(symbol: str) -> int | None:
    """Index of ``↢ₖ``; None for anything else (including the bare ``↢``)."""
    if symbol.startswith(ERASER) and len(symbol) > 1:
        digits = symbol[1:].translate(_UNSUB)
        if digits.isdigit():
            return int(digits)
    return None


@dataclass(frozen=True)
class EraserAlphabet:
    base: Alphabet
    erasers: tuple[str, ...] = (ERASER,)

    def __post_init__(self):
        if not self.erasers:
            raise AlphabetError("at least one eraser is required")
        clash = set(self.erasers) & set(self.base)
        if clash:
            raise AlphabetError(f"erasers {sorted(clash)} overlap the base alphabet")

    @property
    def alphabet(self) -> Alphabet:
        return self.base.extend(*self.erasers)

    @classmethod
    def iterated(cls, base: Alphabet, k: int) -> EraserAlphabet:
        """``base ∪ {↢ₖ, ..., ↢₁}``."""
        return cls(base, tuple(indexed_eraser(i) for i in range(k, 0, -1)))


@dataclass(frozen=True)
class Undefined:
    """Partial evaluation failed: the eraser at ``position`` met an empty buffer."""

    position: int

    def __bool__(self):
        return False


class DecodeError(ValueError):
    def __init__(self, position: int, message: str = ""):
        super().__init__(message or f"malformed eraser code at position {position}")
        self.position = position


def _base_of(w: Word, eraser: str) -> Alphabet:
    return w.alphabet.without(eraser) if eraser in w.alphabet else w.alphabet


def eval_tilde(w: Word, eraser: str = ERASER) -> Word:
    buf: list[str] = []
    for a in w:
        if a == eraser:
            if buf:
                buf.pop()
        else:
            buf.append(a)
    return Word(_base_of(w, eraser), tuple(buf))


def eval_approx(w: Word, eraser: str = ERASER) -> Word | Undefined:
    buf: list[str] = []
    for i, a in enumerate(w):
        if a == eraser:
            if not buf:
                return Undefined(i)
            buf.pop()
        else:
            buf.append(a)
    return Word(_base_of(w, eraser), tuple(buf))


def surviving_positions(w: Word, eraser: str = ERASER) -> frozenset[int]:
    """Positions of letters that no eraser deletes under partial evaluation."""
    stack: list[int] = []
    for i, a in enumerate(w):
        if a == eraser:
            if not stack:
                raise ValueError(f"evaluation undefined at position {i}")
            stack.pop()
        else:
            stack.append(i)
    return frozenset(stack)


def _reduce_period(v: Word, eraser: str) -> tuple[int, tuple[str, ...]]:
    # v acts on a deep enough buffer as: delete `need` letters, then append `rest`.
    need = 0
    rest: list[str] = []
    for a in v:
        if a == eraser:
            if rest:
                rest.pop()
            else:
                need += 1
        else:
            rest.append(a)
    return need, tuple(rest)


def lasso_decode_tilde(x: LassoWord, eraser: str = ERASER) -> Word | LassoWord:
    """Limit of ``eval_tilde`` over the prefixes of ``x``.

    The limit is a finite word when the buffer keeps dipping back to a fixed
    floor, and an ultimately periodic word when the period has a positive
    net effect on a deep buffer.
    """
    base = _base_of(x.prefix, eraser)
    buf = list(eval_tilde(x.prefix, eraser).letters)
    need, rest = _reduce_period(x.period, eraser)
    seen: dict[tuple[str, ...], int] = {}
    floors: list[int] = []
    while True:
        h = len(buf)
        if h >= need and len(rest) > need:
            stem = tuple(buf[: h - need])
            return LassoWord(Word(base, stem), Word(base, rest[: len(rest) - need]))
        key = tuple(buf)
        if key in seen:
            start = seen[key]
            return Word(base, key[: min(floors[start:])])
        seen[key] = len(floors)
        low = h
        for a in x.period:
            if a == eraser:
                if buf:
                    buf.pop()
            else:
                buf.append(a)
            low = min(low, len(buf))
        floors.append(low)


def count_letter(s: Word, j: str) -> int:
    if j not in s.alphabet:
        raise AlphabetError(f"{j!r} not in {s.alphabet}")
    return s.count(j)


def in_t(s: Word) -> bool:
    """Every prefix has at most as many 2s as 1s."""
    surplus = 0
    for a in s:
        if a == "1":
            surplus += 1
        elif a == "2":
            surplus -= 1
            if surplus < 0:
                return False
    return True


def backspace2(s: Word) -> Word:
    """The ternary back-space: each 2 turns the last remaining 1 into a 0."""
    out: list[str] = []
    ones: list[int] = []
    for i, a in enumerate(s):
        if a == "2":
            if not ones:
                raise ValueError(f"{s} is not in T: prefix of length {i + 1} has more 2s than 1s")
            out[ones.pop()] = "0"
        elif a in ("0", "1"):
            if a == "1":
                ones.append(len(out))
            out.append(a)
        else:
            raise AlphabetError(f"unexpected letter {a!r}")
    return Word(Alphabet("01"), tuple(out))


def t_k_member(w: Word, k: int) -> bool:
    """Membership in T_k: erasing with ↢₁, then ↢₂, ..., then ↢ₖ leaves nothing."""
    if k < 1:
        raise ValueError("k must be at least 1")
    letters = list(w)
    for a in letters:
        idx = eraser_index(a)
        if idx is not None and idx > k:
            return False
    for i in range(1, k + 1):
        e = indexed_eraser(i)
        buf: list[str] = []
        for a in letters:
            if a == e:
                if not buf:
                    return False
                buf.pop()
            else:
                buf.append(a)
        letters = buf
    return not letters


def code_eraser_ab(j: int) -> Word:
    if j < 1:
        raise ValueError("j must be at least 1")
    return Word(Alphabet((ALPHA, BETA)), (ALPHA,) + (BETA,) * j + (ALPHA,))


CODE5 = Alphabet((ALPHA, "B", "C", "D", "E", BETA))


def code_eraser_5(n: int) -> Word:
    if n < 1:
        raise ValueError("n must be at least 1")
    return Word(CODE5, (ALPHA,) + ("B",) * n + ("C",) * n + ("D",) * n + ("E",) * n + (BETA,))


def decode_erasers_ab(w: Word) -> Word:
    """Replace every ``α β^j α`` block by ``↢ⱼ``; base letters pass through."""
    letters = w.letters
    out: list[str] = []
    top = 0
    i = 0
    while i < len(letters):
        a = letters[i]
        if a == BETA:
            raise DecodeError(i, f"stray {BETA} at position {i}")
        if a != ALPHA:
            out.append(a)
            i += 1
            continue
        j = i + 1
        while j < len(letters) and letters[j] == BETA:
            j += 1
        if j == i + 1 or j == len(letters) or letters[j] != ALPHA:
            raise DecodeError(i, f"unterminated or empty code starting at position {i}")
        n = j - i - 1
        out.append(indexed_eraser(n))
        top = max(top, n)
        i = j + 1
    base = w.alphabet.without(ALPHA, BETA) if ALPHA in w.alphabet else w.alphabet
    erasers = [indexed_eraser(i) for i in range(max(top, 1), 0, -1)]
    return Word(base.extend(*[e for e in erasers if e not in base]), tuple(out))


def encode_erasers_ab(w: Word) -> Word:
    """Inverse of :func:`decode_erasers_ab`."""
    out: list[str] = []
    for a in w:
        idx = eraser_index(a)
        out.extend(code_eraser_ab(idx).letters if idx else (a,))
    base = [s for s in w.alphabet if eraser_index(s) is None]
    return Word(Alphabet(base + [ALPHA, BETA]), tuple(out))
