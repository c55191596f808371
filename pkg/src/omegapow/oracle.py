"""Brute-force reference implementations and the cross-checking harness.

Nothing here reuses the decision procedures it is meant to check: the
oracles re-derive each language from its set-builder definition by naive
search, so agreement is evidence rather than tautology.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator

from .words import Alphabet, LassoWord, Word, enumerate_words


@dataclass(frozen=True)
class Disagreement:
    word: Word
    left_verdict: bool
    right_verdict: bool
    context: tuple[str, str]

    def __post_init__(self):
        assert self.left_verdict != self.right_verdict


@dataclass
class Crosscheck:
    left: str
    right: str
    max_len: int
    examined: int = 0
    disagreements: list[Disagreement] = field(default_factory=list)

    @property
    def agree(self) -> bool:
        return not self.disagreements

    def as_dict(self, ascii: bool = False) -> dict:
        return {
            "left": self.left,
            "right": self.right,
            "max_len": self.max_len,
            "examined": self.examined,
            "agree": self.agree,
            "disagreements": [
                {"word": d.word.render(ascii), "left": d.left_verdict, "right": d.right_verdict}
                for d in self.disagreements
            ],
        }


def crosscheck(a, b, max_len: int) -> Crosscheck:
    """Compare two predicates on every word up to ``max_len``."""
    if a.alphabet != b.alphabet:
        raise ValueError(f"alphabets differ: {a.alphabet} vs {b.alphabet}")
    report = Crosscheck(a.name, b.name, max_len)
    for w in enumerate_words(a.alphabet, max_len):
        x, y = bool(a.decide(w)), bool(b.decide(w))
        report.examined += 1
        if x != y:
            report.disagreements.append(Disagreement(w, x, y, (a.name, b.name)))
    return report


def machine_predicate(m, undecided: list | None = None):
    """Wrap a pushdown automaton as a language predicate (default bounds).

    Words whose search hit a bound count as rejected and are appended to
    ``undecided`` when given.
    """
    from .automata import Outcome, accepts
    from .catalog import LanguagePredicate

    def decide(w):
        v = accepts(m, w)
        if v.outcome is Outcome.REJECTED_AT_BOUND and undecided is not None:
            undecided.append(w)
        return v.accepted

    return LanguagePredicate(f"machine:{m.name}", m.input, decide)


# -- naive decompositions -------------------------------------------------------


def brute_decompose(w: Word, blocks, terminator) -> set[tuple[tuple[Word, str], ...]]:
    """Every split w = c₁a₁…cₙaₙ with cᵢ accepted by ``blocks`` and aᵢ in ``terminator``."""
    out = set()

    def go(i, acc):
        if i == len(w):
            out.add(tuple(acc))
            return
        for j in range(i, len(w)):
            if w[j] in terminator and blocks.decide(w[i:j]):
                go(j + 1, acc + [(w[i:j], w[j])])

    go(0, [])
    return out


def naive_p2(letters) -> bool:
    s = "".join(letters)
    return s == "0" * (len(s) - 1) + "1" if s else False


def naive_l3(w: Word, eraser: str = "↢") -> bool:
    """L₃ by exhaustive rewriting: repeatedly delete an adjacent letter·eraser pair."""
    s = tuple(w)
    seen = set()
    stack = [s]
    while stack:
        s = stack.pop()
        if not s:
            return True
        if s in seen:
            continue
        seen.add(s)
        for i in range(len(s) - 1):
            if s[i] != eraser and s[i + 1] == eraser:
                stack.append(s[:i] + s[i + 2 :])
    return False


def brute_h_member(w: Word, inner_member, eraser: str = "↢") -> bool:
    """Membership in h(L) for h(a) = L₃·a via exhaustive decomposition."""

    class _L3:
        @staticmethod
        def decide(c):
            return naive_l3(c, eraser)

    base = [a for a in w.alphabet if a != eraser]
    return any(
        inner_member(tuple(a for _, a in d)) for d in brute_decompose(w, _L3, set(base))
    )


# -- the ternary back-space construction ----------------------------------------


def naive_in_T(s: str) -> bool:
    return all(s[:l].count("2") <= s[:l].count("1") for l in range(len(s) + 1))


def naive_backspace(s: str) -> str:
    if not s:
        return ""
    t, last = s[:-1], s[-1]
    head = naive_backspace(t)
    if last in "01":
        return head + last
    k = head.rindex("1")
    return head[:k] + "0" + head[k + 1 :]


def naive_E(s: str) -> bool:
    if s == "0":
        return True
    if not s or not naive_in_T(s) or s.count("2") != s.count("1"):
        return False
    return naive_backspace(s[:-1]).startswith("1")


def _splits(s: str) -> Iterator[list[str]]:
    for cuts in itertools.product((False, True), repeat=max(len(s) - 1, 0)):
        parts, start = [], 0
        for i, c in enumerate(cuts, 1):
            if c:
                parts.append(s[start:i])
                start = i
        parts.append(s[start:])
        yield parts


def naive_E_star(s: str) -> bool:
    return s == "" or any(all(naive_E(p) for p in parts) for parts in _splits(s))


def naive_S2(s: str) -> bool:
    if naive_E(s):
        return True
    if not s.endswith("1"):
        return False
    ones = [i for i, a in enumerate(s[:-1]) if a == "1"]
    for chosen in itertools.product((False, True), repeat=len(ones)):
        ends = [i for i, c in zip(ones, chosen) if c] + [len(s) - 1]
        pieces, start = [], 0
        for e in ends:
            pieces.append(s[start:e])
            start = e + 1
        if len(pieces) == 1 and pieces[0] == "":
            continue
        if all(naive_E_star(p) for p in pieces):
            return True
    return False


# -- bounded omega-factorizations ------------------------------------------------


def brute_factorizes(L, x: LassoWord, bound: int, horizon: int = 24) -> bool:
    """Whether the first ``horizon`` letters admit a chain of L-blocks of length ≤ bound.

    Exact for the bounded omega-power question whenever ``horizon // bound``
    is at least the number of lasso positions |u| + |v|.
    """
    letters = x.letters(0, horizon + bound)
    memo = {}

    def go(i):
        if i >= horizon:
            return True
        if i not in memo:
            memo[i] = any(
                L.decide(Word(x.alphabet, letters[i : i + n])) and go(i + n) for n in range(1, bound + 1)
            )
        return memo[i]

    return go(0)


# -- π words by parameter enumeration -------------------------------------------


def _M(j):
    return sum(4 ** (i + 1) for i in range(j))


def _pairs(length):
    """Pairs of binary words of the given length in the state order, by brute listing."""
    seqs = itertools.product([("0", "0"), ("0", "1"), ("1", "0"), ("1", "1")], repeat=length)
    return [("".join(a for a, _ in q), "".join(b for _, b in q)) for q in seqs]


def _state_table(max_index):
    table = [("", "")]
    length = 1
    while len(table) <= max_index:
        table.extend(_pairs(length))
        length += 1
    return table


def pi_words(max_len: int, R) -> dict[str, dict]:
    """All π-words of length ≤ max_len with their witnesses, by generating them."""
    j_max = 0
    while _M(j_max + 1) <= max_len:
        j_max += 1
    table = _state_table(_M(j_max + 1) + 1)
    index = {q: i for i, q in enumerate(table)}
    out: dict[str, dict] = {}

    def moves(n, m):
        s, t = table[n]
        return [p for p, (s2, t2) in enumerate(table) if s2.startswith(s) and len(s2) == len(s) + 1 and t2 == t + m]

    def extend(j, i, n, word, wit):
        if len(word) > max_len:
            return
        budget = _M(j + i + 1)
        for m in "01":
            for p in moves(n, m):
                r = budget - p
                if r < 0:
                    continue
                block = "2" * n + m + "2" * p + "2" * r + "3" + "2" * r
                w = word + block
                if len(w) > max_len:
                    continue
                w_wit = {
                    "j": j,
                    "m": wit["m"] + [m],
                    "n": wit["n"] + [n],
                    "p": wit["p"] + [p],
                    "r": wit["r"] + [r],
                }
                s, _ = table[p]
                t2 = table[p]
                if s and s[-1] == "1" and R(t2[0], t2[1]):
                    out.setdefault(w, w_wit)
                extend(j, i + 1, p, w, w_wit)

    for j in range(j_max):
        for n0 in range(_M(j) + 1):
            extend(j, 0, n0, "", {"m": [], "n": [], "p": [], "r": []})
    assert all(index[table[k]] == k for k in range(len(table)))
    return out


def brute_pi_witness(max_len: int, R):
    """The first π-word in length-then-lex order of 4^{≤max_len}, with its witness."""
    words = pi_words(max_len, R)
    if not words:
        return None
    best = min(words, key=lambda s: (len(s), s))
    return best, words[best]


def naive_mu(s: str) -> tuple[bool, bool]:
    """(μ₀, μ₁) membership by enumerating every way to write s as 2^N(m 2^P 3 2^R)^{l+2}."""
    Ms = {_M(j): j for j in range(8)}
    mu0 = mu1 = False

    def go(i, P, Rs):
        nonlocal mu0, mu1
        if i == len(s):
            if len(P) >= 2:
                if P[-2] != Rs[-2]:
                    mu0 = True
                if P[-1] != _M(Ms[P[-2]] + 1):
                    mu1 = True
            return
        if s[i] not in "01":
            return
        for p in Ms:
            if s[i + 1 : i + 1 + p] == "2" * p and s[i + 1 + p : i + 2 + p] == "3":
                k = i + 2 + p
                for r in range(len(s) - k + 1):
                    if s[k : k + r] == "2" * r:
                        go(k + r, P + [p], Rs + [r])
                    else:
                        break

    for N in range(len(s) + 1):
        if s[:N] == "2" * N:
            go(N, [], [])
        else:
            break
    return mu0, mu1


def mu_words(max_len: int) -> dict[str, tuple[bool, bool]]:
    """Every word of shape 2^N(m 2^P 3 2^R)^{l+2}, P ∈ {M_j}, up to max_len, with (μ₀, μ₁)."""
    Ps = [_M(j) for j in range(max_len + 1) if _M(j) <= max_len]
    shaped = set()

    def blocks(word, count):
        if count >= 2:
            shaped.add(word)
        for m in "01":
            for p in Ps:
                for r in range(max_len - len(word) - p - 1):
                    w = word + m + "2" * p + "3" + "2" * r
                    if len(w) <= max_len:
                        blocks(w, count + 1)

    for N in range(max_len + 1):
        blocks("2" * N, 0)
    return {s: naive_mu(s) for s in shaped}
