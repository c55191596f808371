"""Membership predicates for the named finitary languages.

Every language is a :class:`LanguagePredicate`: a name, an alphabet and a
total decision function on words.  :data:`REGISTRY` maps the CLI names to
factories; ``pn:<k>`` is parameterized.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .eraser import (
    ALPHA,
    BETA,
    ERASER,
    DecodeError,
    Undefined,
    backspace2,
    decode_erasers_ab,
    eraser_index,
    eval_approx,
    in_t,
    indexed_eraser,
    surviving_positions,
    t_k_member,
)
from .opower import kleene_star_member
from .words import Alphabet, Word

BINARY = Alphabet("01")
TERNARY = Alphabet("012")
QUATERNARY = Alphabet("0123")
D_ALPHABET = Alphabet("01d")
CODED = Alphabet(("0", "1", ALPHA, BETA))


@dataclass(frozen=True)
class LanguagePredicate:
    name: str
    alphabet: Alphabet
    decide: Callable[[Word], bool] = field(compare=False)
    anchor: str = ""

    def __call__(self, w: Word) -> bool:
        return self.decide(w)

    def __contains__(self, w: Word) -> bool:
        return self.decide(w)

    def word(self, text: str) -> Word:
        return self.alphabet.word(text)


def _text(w: Word) -> str:
    return "".join(w.letters)


def lang_P1() -> LanguagePredicate:
    return LanguagePredicate("p1", BINARY, lambda w: w.letters == ("0",), "P1 = {0}")


def _p2(letters: tuple[str, ...]) -> bool:
    return bool(letters) and letters[-1] == "1" and all(a == "0" for a in letters[:-1])


def lang_P2() -> LanguagePredicate:
    return LanguagePredicate("p2", BINARY, lambda w: _p2(w.letters), "P2 = 0*1")


def lang_S1() -> LanguagePredicate:
    def decide(w):
        s = _text(w)
        if s.startswith("0"):
            return True
        # 1 0^k 1 is a prefix
        return s.startswith("1") and "1" in s[1:]

    return LanguagePredicate("s1", BINARY, decide, "S1 = {s | 0 ⊆ s or 10^k1 ⊆ s}")


def lang_clopen_A() -> LanguagePredicate:
    def decide(w):
        s = _text(w)
        return s.startswith("0") or s.startswith("11")

    return LanguagePredicate("clopenA", BINARY, decide, "A = {s | 0 ⊆ s or 11 ⊆ s}")


def lang_L3(base: Alphabet = Alphabet("a"), eraser: str = ERASER) -> LanguagePredicate:
    """Self-erasing words: every prefix has no more erasers than letters, totals equal."""

    def decide(w):
        depth = 0
        for a in w:
            if a == eraser:
                depth -= 1
                if depth < 0:
                    return False
            else:
                depth += 1
        return depth == 0

    return LanguagePredicate("l3", base.extend(eraser), decide, "L3: S → aS↢S | a↢S | λ")


# -- grammars, CNF and CYK --------------------------------------------------


@dataclass(frozen=True)
class Grammar:
    nonterminals: tuple[str, ...]
    terminals: tuple[str, ...]
    productions: tuple[tuple[str, tuple[str, ...]], ...]
    start: str

    def __post_init__(self):
        if self.start not in self.nonterminals:
            raise ValueError("start symbol must be a nonterminal")
        known = set(self.nonterminals) | set(self.terminals)
        for head, body in self.productions:
            if head not in self.nonterminals:
                raise ValueError(f"production head {head!r} is not a nonterminal")
            if any(s not in known for s in body):
                raise ValueError(f"production {head} → {body} uses unknown symbols")


def l3_grammar(base: Alphabet = Alphabet("a"), eraser: str = ERASER) -> Grammar:
    prods = []
    for a in base:
        prods.append(("S", (a, "S", eraser, "S")))
        prods.append(("S", (a, eraser, "S")))
    prods.append(("S", ()))
    return Grammar(("S",), tuple(base) + (eraser,), tuple(prods), "S")


def to_cnf(g: Grammar) -> Grammar:
    """Chomsky normal form: A → BC, A → a, and S₀ → λ only for the new start."""
    fresh = itertools.count()
    nts = list(g.nonterminals)

    def new(prefix):
        while True:
            n = f"{prefix}{next(fresh)}"
            if n not in nts and n not in g.terminals:
                nts.append(n)
                return n

    start = new("S_")
    prods = {(start, (g.start,))} | set(g.productions)

    # terminals inside long bodies get their own nonterminal
    term_nt = {}
    step = set()
    for head, body in prods:
        if len(body) >= 2:
            nb = []
            for s in body:
                if s in g.terminals:
                    if s not in term_nt:
                        term_nt[s] = new("T_")
                    nb.append(term_nt[s])
                else:
                    nb.append(s)
            step.add((head, tuple(nb)))
        else:
            step.add((head, body))
    step |= {(nt, (t,)) for t, nt in term_nt.items()}

    # binarize
    prods = set()
    for head, body in step:
        while len(body) > 2:
            rest = new("X_")
            prods.add((head, (body[0], rest)))
            head, body = rest, body[1:]
        prods.add((head, body))

    # remove lambda-productions
    nullable = set()
    changed = True
    while changed:
        changed = False
        for head, body in prods:
            if head not in nullable and all(s in nullable for s in body):
                nullable.add(head)
                changed = True
    expanded = set()
    for head, body in prods:
        options = [((s,), ()) if s in nullable else ((s,),) for s in body]
        for pick in itertools.product(*options):
            nb = tuple(itertools.chain.from_iterable(pick))
            if nb:
                expanded.add((head, nb))
    if start in nullable:
        expanded.add((start, ()))

    # remove unit productions
    units = {(h, b[0]) for h, b in expanded if len(b) == 1 and b[0] in nts}
    closure = {(a, a) for a in nts} | units
    changed = True
    while changed:
        changed = False
        for a, b in list(closure):
            for c, d in units:
                if b == c and (a, d) not in closure:
                    closure.add((a, d))
                    changed = True
    final = set()
    for a, b in closure:
        for h, body in expanded:
            if h == b and not (len(body) == 1 and body[0] in nts):
                final.add((a, body))
    return Grammar(tuple(nts), g.terminals, tuple(sorted(final)), start)


def cyk(g: Grammar, w: Iterable[str]) -> bool:
    """CYK recognition for a grammar in Chomsky normal form."""
    w = tuple(w)
    n = len(w)
    if n == 0:
        return (g.start, ()) in g.productions
    unary: dict[str, set[str]] = {}
    binary: list[tuple[str, str, str]] = []
    for head, body in g.productions:
        if len(body) == 1:
            unary.setdefault(body[0], set()).add(head)
        elif len(body) == 2:
            binary.append((head, body[0], body[1]))
    table = [[set() for _ in range(n + 1)] for _ in range(n)]
    for i, a in enumerate(w):
        table[i][i + 1] = set(unary.get(a, ()))
    for span in range(2, n + 1):
        for i in range(n - span + 1):
            j = i + span
            cell = table[i][j]
            for k in range(i + 1, j):
                left, right = table[i][k], table[k][j]
                if not left or not right:
                    continue
                for head, b, c in binary:
                    if b in left and c in right:
                        cell.add(head)
    return g.start in table[0][n]


@functools.lru_cache(maxsize=None)
def _l3_cnf(base: tuple[str, ...], eraser: str) -> Grammar:
    return to_cnf(l3_grammar(Alphabet(base), eraser))


def l3_cyk_member(w: Word, eraser: str = ERASER) -> bool:
    base = tuple(s for s in w.alphabet if s != eraser)
    return cyk(_l3_cnf(base, eraser), w.letters)


def lang_L3_cyk(base: Alphabet = Alphabet("a"), eraser: str = ERASER) -> LanguagePredicate:
    g = _l3_cnf(tuple(base), eraser)
    return LanguagePredicate("l3-cyk", base.extend(eraser), lambda w: cyk(g, w.letters), "L3 by CYK")


# -- the Σ⁰₂ construction over 3 = {0,1,2} ------------------------------------


def _in_E(w: Word) -> bool:
    if w.letters == ("0",):
        return True
    if not w or not in_t(w):
        return False
    if w.count("2") != w.count("1"):
        return False
    head = backspace2(w[: len(w) - 1])
    return len(head) > 0 and head[0] == "1"


def lang_E() -> LanguagePredicate:
    return LanguagePredicate("e", TERNARY, _in_E, "E = 0 ∪ {s ∈ T | n2 = n1, 1 ⊆ (s|(|s|-1))^↩}")


def _s2_witness(w: Word) -> list[int] | None:
    """End positions (exclusive) of the blocks c_j·1 of an S₂ parse.

    ``[]`` means w ∈ E; None means w ∉ S₂.
    """
    if _in_E(w):
        return []
    E = lang_E()
    n = len(w)
    # back[j] = start of the last block of some parse of w[:j] into c·1 blocks
    back: dict[int, int] = {}
    for j in range(1, n + 1):
        if w[j - 1] != "1":
            continue
        for i in [0] + sorted(back):
            if i < j and kleene_star_member(E, w[i : j - 1]):
                back.setdefault(j, i)
                if i > 0:
                    back[j] = i
                    break
    if n not in back:
        return None
    if back[n] == 0 and n == 1:  # a single block needs c₀ ≠ λ
        return None
    cuts = [n]
    while back[cuts[-1]] != 0:
        cuts.append(back[cuts[-1]])
    return cuts[::-1]


def lang_S2() -> LanguagePredicate:
    return LanguagePredicate(
        "s2", TERNARY, lambda w: _s2_witness(w) is not None, "S2 = E ∪ {c0 1 … ck 1 | cj ∈ E*}"
    )


# -- D and g(W) over 2 ∪ {d} ----------------------------------------------------


def _in_D(s: str) -> bool:
    if s.count("d") != 1:
        return False
    p = s.index("d")
    return len(s) - p - 1 in (2 * p, 2 * p + 1)


def lang_D() -> LanguagePredicate:
    return LanguagePredicate(
        "d", D_ALPHABET, lambda w: _in_D(_text(w)), "D = {u d v | |v| = 2|u| or 2|u|+1}"
    )


def gw_blocks(w: Word) -> list[int] | None:
    """Block start positions of a g(W) parse, or None."""
    s = _text(w)
    n = len(s)
    # zeros[i]: parse of s[:i] into blocks whose letters are all 0
    zeros: dict[int, list[int]] = {0: []}
    for j in range(2, n + 1):
        for i in sorted(zeros):
            if i >= j - 1:
                break
            if s[i] in "01" and _in_D(s[i + 1 : j]):
                if s[i] == "1":
                    if j == n:
                        return zeros[i] + [i]
                elif j not in zeros:
                    zeros[j] = zeros[i] + [i]
    return None


def lang_gW() -> LanguagePredicate:
    return LanguagePredicate(
        "gw", D_ALPHABET, lambda w: gw_blocks(w) is not None, "g(W), g(a) = a·D, W = 0*1"
    )


# -- substitution a ↦ L₃·a ------------------------------------------------------


def substitute_h(L: LanguagePredicate, eraser: str = ERASER) -> LanguagePredicate:
    """h(L) with h(a) = L₃·a.

    A word is in h(L) iff its partial evaluation is defined, it is empty or
    its last letter survives, and the surviving letters spell a word of L.
    """
    if eraser in L.alphabet:
        raise ValueError(f"{eraser} already in {L.alphabet}")

    def decide(w):
        r = eval_approx(w, eraser)
        if isinstance(r, Undefined):
            return False
        if len(w) and len(w) - 1 not in surviving_positions(w, eraser):
            return False
        return L.decide(Word(L.alphabet, r.letters))

    return LanguagePredicate(f"h({L.name})", L.alphabet.extend(eraser), decide, f"h(a) = L3·a over {L.name}")


def lang_Pn(n: int) -> LanguagePredicate:
    """P₁, P₂, and P_n = h₁(h₂(…h_{n-2}(P₂))) with eraser ↢ᵢ in layer i."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if n == 1:
        return lang_P1()
    L = lang_P2()
    for i in range(n - 2, 0, -1):
        L = substitute_h(L, indexed_eraser(i))
    return LanguagePredicate(f"pn:{n}", L.alphabet, L.decide, f"P{n}: erasers ↢{n - 2}…↢1, ↢1 outermost")


# -- infinite-rank construction over {0,1,α,β} ----------------------------------


def _in_script_L(w: Word) -> bool:
    try:
        d = decode_erasers_ab(w)
    except DecodeError:
        return False
    k = max((eraser_index(a) or 0 for a in d), default=0)
    return t_k_member(d, max(k, 1))


def lang_script_L() -> LanguagePredicate:
    return LanguagePredicate("scriptL", CODED, _in_script_L, "𝓛 = ∪_k φ_k(T_k)")


def hp2_blocks(w: Word) -> list[int] | None:
    """End positions of the blocks c·a of an h(P₂) parse, or None."""
    n = len(w)
    zeros: dict[int, list[int]] = {0: []}
    for j in range(1, n + 1):
        a = w[j - 1]
        if a not in ("0", "1"):
            continue
        for i in sorted(zeros):
            if i >= j:
                break
            if _in_script_L(w[i : j - 1]):
                if a == "1":
                    if j == n:
                        return zeros[i] + [j]
                elif j not in zeros:
                    zeros[j] = zeros[i] + [j]
                    break
    return None


def lang_hP2_inf_rank() -> LanguagePredicate:
    return LanguagePredicate(
        "hp2", CODED, lambda w: hp2_blocks(w) is not None, "h(P2) with h(a) = 𝓛·a"
    )


REGISTRY: dict[str, Callable[[], LanguagePredicate]] = {
    "p1": lang_P1,
    "p2": lang_P2,
    "s1": lang_S1,
    "s2": lang_S2,
    "e": lang_E,
    "l3": lang_L3,
    "d": lang_D,
    "gw": lang_gW,
    "clopenA": lang_clopen_A,
    "scriptL": lang_script_L,
    "hp2": lang_hP2_inf_rank,
}


class UnknownLanguage(KeyError):
    pass


def get(name: str) -> LanguagePredicate:
    if name.startswith("pn:"):
        try:
            return lang_Pn(int(name[3:]))
        except ValueError as e:
            raise UnknownLanguage(f"bad level in {name!r}") from e
    try:
        return REGISTRY[name]()
    except KeyError:
        raise UnknownLanguage(name) from None


def names() -> list[str]:
    return list(REGISTRY) + ["pn:<k>"]
