"""The coded transition system over pairs of binary words and the finitary
languages π, μ₀, μ₁ over the alphabet 4 = {0,1,2,3}.

States are pairs ``(left, right)`` of equal-length binary words, numbered
by length and then lexicographically as sequences of letter pairs, so that
``(00, 01)`` is state 6.  A move ``n --m--> p`` extends ``left`` by any bit
and ``right`` by the input bit ``m``.

The tree predicate ``R`` decides pairs ``(left, right)``; final states are
those in ``R`` whose chosen component ends in 1 (``left`` by default).

Functions taking words over 4 accept either a :class:`Word` or a plain
string; the audits over all of 4^{≤12} pass strings for speed.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, NamedTuple

from .words import Alphabet, Word

FOUR = Alphabet("0123")


def m_index(j: int) -> int:
    """Sum of 4^(i+1) for i < j; the index of the last state of length j."""
    if j < 0:
        raise ValueError("j must be nonnegative")
    return (4 ** (j + 1) - 4) // 3


class StatePair(NamedTuple):
    left: str
    right: str

    def __str__(self):
        return f"({self.left or '∅'}, {self.right or '∅'})"


def state_pair(n: int) -> StatePair:
    if n < 0:
        raise ValueError("state index must be nonnegative")
    length = 0
    while m_index(length) < n:
        length += 1
    r = n - m_index(length - 1) - 1 if length else 0
    left, right = [], []
    for shift in range(length - 1, -1, -1):
        digit = (r >> (2 * shift)) & 3
        left.append("01"[digit >> 1])
        right.append("01"[digit & 1])
    return StatePair("".join(left), "".join(right))


def state_index(q: StatePair | tuple[str, str]) -> int:
    left, right = q
    if len(left) != len(right):
        raise ValueError("state components must have equal length")
    if not left:
        return 0
    r = 0
    for a, b in zip(left, right):
        r = 4 * r + 2 * int(a) + int(b)
    return m_index(len(left) - 1) + 1 + r


def edge(n: int, m: int | str, p: int) -> bool:
    qn, qp = state_pair(n), state_pair(p)
    return qp.left.startswith(qn.left) and len(qp.left) == len(qn.left) + 1 and qp.right == qn.right + str(m)


def successors(n: int, m: int | str) -> list[int]:
    q = state_pair(n)
    return sorted(state_index((q.left + b, q.right + str(m))) for b in "01")


@dataclass(frozen=True)
class TreePredicate:
    """A prefix-closed set of pairs of equal-length binary words."""

    name: str
    decide: Callable[[str, str], bool]

    def __call__(self, left: str, right: str) -> bool:
        return self.decide(left, right)


R_FULL = TreePredicate("full", lambda t, s: True)
R_DIAG = TreePredicate("diag", lambda t, s: t == s)
TREES = {"full": R_FULL, "diag": R_DIAG}


def audit_prefix_closed(R: TreePredicate, max_len: int = 6) -> list[tuple[str, str]]:
    """Pairs in R with some prefix pair outside R (empty when the audit passes)."""
    from itertools import product

    bad = []
    for n in range(max_len + 1):
        for t in product("01", repeat=n):
            for s in product("01", repeat=n):
                t_, s_ = "".join(t), "".join(s)
                if R(t_, s_) and not all(R(t_[:i], s_[:i]) for i in range(n)):
                    bad.append((t_, s_))
    return bad


def is_final(q: StatePair | int, R: TreePredicate, component: str = "left") -> bool:
    """Final: ``q ∈ R`` and the chosen component is nonempty and ends in 1."""
    if isinstance(q, int):
        q = state_pair(q)
    t = q.left if component == "left" else q.right
    return bool(t) and t[-1] == "1" and R(q.left, q.right)


def _text(w: Word | str) -> str:
    return w if isinstance(w, str) else "".join(w.letters)


def k_prefix_member(w: Word | str, N: int, j: int) -> bool:
    """Whether ``w`` is a prefix of some element of the compact set K_{N,j}."""
    if N > m_index(j):
        raise ValueError(f"K_(N,j) needs N <= M_j, got N={N} > M_{j}={m_index(j)}")
    s = _text(w)
    pos = 0

    def take(expected: str, count: int) -> bool:
        nonlocal pos
        chunk = s[pos : pos + count]
        pos += count
        return chunk == expected * len(chunk)

    if not take("2", N):
        return False
    i = 0
    while pos < len(s):
        if s[pos] not in "01":
            return False
        pos += 1
        run = m_index(j + i + 1)
        if not (take("2", run) and take("3", 1) and take("2", run)):
            return False
        i += 1
    return True


@dataclass(frozen=True)
class PiParse:
    j: int
    marks: tuple[str, ...]  # m_0 .. m_l
    starts: tuple[int, ...]  # n_0 .. n_l
    ends: tuple[int, ...]  # p_0 .. p_l
    pads: tuple[int, ...]  # r_0 .. r_l

    @property
    def l(self) -> int:
        return len(self.marks) - 1

    def assemble(self) -> str:
        return "".join(
            "2" * n + m + "2" * p + "2" * r + "3" + "2" * r
            for n, m, p, r in zip(self.starts, self.marks, self.ends, self.pads)
        )


@dataclass(frozen=True)
class MuParse:
    N: int
    marks: tuple[str, ...]  # m_0 .. m_{l+1}
    P: tuple[int, ...]
    R: tuple[int, ...]

    @property
    def l(self) -> int:
        return len(self.marks) - 2

    def assemble(self) -> str:
        return "2" * self.N + "".join(
            m + "2" * p + "3" + "2" * r for m, p, r in zip(self.marks, self.P, self.R)
        )


_SHAPE = re.compile(r"(2*)((?:[01]2*32*)+)")
_BLOCK = re.compile(r"([01])(2*)3(2*)")


def _blocks(s: str):
    """(leading run, [(mark, run before 3, run after 3), ...]) or None."""
    m = _SHAPE.fullmatch(s)
    if m is None:
        return None
    return len(m.group(1)), [(b[0], len(b[1]), len(b[2])) for b in _BLOCK.findall(m.group(2))]


@lru_cache(maxsize=None)
def _m_level(value: int) -> int | None:
    """j with M_j == value, if any."""
    j = 0
    while m_index(j) < value:
        j += 1
    return j if m_index(j) == value else None


def pi_parse(w: Word | str, R: TreePredicate = R_FULL, component: str = "left") -> PiParse | None:
    """Recover the witnesses of π-membership, or None.

    Runs of 2s are fixed by the positions of the letters 0, 1, 3: before the
    first mark sits n₀, between a mark and its 3 sits p_i + r_i, and after
    the 3 sits r_i + n_{i+1} (r_l after the last one).  Since n_{i+1} = p_i,
    the middle and trailing runs of every inner block coincide.  j is read
    off from p₀ + r₀ = M_{j+1}; each successor state is pinned by the target
    state of the final block.
    """
    parsed = _blocks(_text(w))
    if parsed is None:
        return None
    n0, blocks = parsed
    j = _m_level(blocks[0][1])
    if j is None or j == 0:
        return None
    j -= 1
    if n0 > m_index(j):
        return None
    for i, (_, mid, after) in enumerate(blocks):
        if mid != m_index(j + i + 1):
            return None
        if i < len(blocks) - 1 and after != mid:
            return None
    last_mid, last_after = blocks[-1][1], blocks[-1][2]
    p_last = last_mid - last_after
    if p_last < 0:
        return None
    q0, ql = state_pair(n0), state_pair(p_last)
    marks = "".join(b[0] for b in blocks)
    depth = len(q0.left)
    if len(ql.left) != depth + len(blocks) or not ql.left.startswith(q0.left):
        return None
    if ql.right != q0.right + marks:
        return None
    if not is_final(ql, R, component):
        return None
    starts, ends, pads = [], [], []
    n = n0
    for i, (_, mid, _) in enumerate(blocks):
        k = depth + i + 1
        p = state_index((ql.left[:k], ql.right[:k]))
        starts.append(n)
        ends.append(p)
        pads.append(mid - p)
        n = p
    return PiParse(j, tuple(marks), tuple(starts), tuple(ends), tuple(pads))


def pi_member(w: Word | str, R: TreePredicate = R_FULL, component: str = "left") -> bool:
    return pi_parse(w, R, component) is not None


def mu_parse(w: Word | str) -> MuParse | None:
    """Split into 2^N and blocks m·2^P·3·2^R (at least two) with every P some M_j."""
    parsed = _blocks(_text(w))
    if parsed is None:
        return None
    N, blocks = parsed
    if len(blocks) < 2:
        return None
    if any(_m_level(p) is None for _, p, _ in blocks):
        return None
    return MuParse(N, tuple(b[0] for b in blocks), tuple(b[1] for b in blocks), tuple(b[2] for b in blocks))


def mu0_member(w: Word | str) -> bool:
    m = mu_parse(w)
    return m is not None and m.P[-2] != m.R[-2]


def mu1_member(w: Word | str) -> bool:
    m = mu_parse(w)
    if m is None:
        return False
    j = _m_level(m.P[-2])
    return m.P[-1] != m_index(j + 1)


def a_member(w: Word | str, R: TreePredicate = R_FULL, component: str = "left") -> bool:
    return mu0_member(w) or mu1_member(w) or pi_member(w, R, component)


def ts_run_prefixes(R: TreePredicate, bits: Word | str) -> set[tuple[int, ...]]:
    """All state sequences from state 0 following the input bits and staying in R."""
    runs = {(0,)}
    for m in _text(bits):
        nxt = set()
        for run in runs:
            for p in successors(run[-1], m):
                q = state_pair(p)
                if R(q.left, q.right):
                    nxt.add(run + (p,))
        runs = nxt
    return runs
