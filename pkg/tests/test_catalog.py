import pytest
from hypothesis import given, settings, strategies as st

from omegapow import catalog as C
from omegapow import oracle as Q
from omegapow.eraser import in_t
from omegapow.words import Alphabet, Word, enumerate_words


def decide(name, text):
    L = C.get(name)
    return L.decide(L.word(text))


@pytest.mark.parametrize(
    "name,text,expected",
    [
        ("p1", "0", True),
        ("p1", "00", False),
        ("p2", "0001", True),
        ("p2", "10", False),
        ("s1", "0", True),
        ("s1", "1001", True),
        ("s1", "1000", False),
        ("clopenA", "11", True),
        ("clopenA", "10", False),
        ("e", "0", True),
        ("e", "12", True),
        ("e", "2", False),
        ("s2", "01", True),
        ("s2", "0", True),
        ("s2", "@", False),
        ("s2", "1", False),
        ("d", "d", True),
        ("d", "1d11", True),
        ("d", "dd", False),
        ("gw", "1d", True),
        ("gw", "0d01d", True),
        ("gw", "1d0", True),
        ("gw", "0d001d", False),
        ("gw", "0d00", False),
        ("l3", "@", True),
        ("l3", "a↢", True),
        ("l3", "↢a", False),
        ("scriptL", "@", True),
        ("scriptL", "0αβα", True),
        ("scriptL", "αβ0", False),
        ("hp2", "1", True),
        ("hp2", "0αβα1", True),
        ("hp2", "αβα01", False),
        ("hp2", "α1", False),
    ],
)
def test_language_examples(name, text, expected):
    assert decide(name, text) is expected


def test_substitute_examples():
    h = C.substitute_h(C.lang_P2())
    assert h.decide(h.word("1"))
    assert h.decide(h.word("0↢1"))
    assert not h.decide(h.word("0↢"))
    with pytest.raises(ValueError):
        C.substitute_h(h)


def test_pn_examples_and_naming():
    P3 = C.lang_Pn(3)
    assert P3.decide(P3.word("1"))
    assert P3.decide(P3.word("0~11"))
    assert not P3.decide(P3.word("~1"))
    assert list(C.lang_Pn(4).alphabet) == ["0", "1", "↢₂", "↢₁"]
    with pytest.raises(ValueError):
        C.lang_Pn(0)


def test_pn3_eraser_free_part_is_p2():
    P2, P3 = C.lang_P2(), C.lang_Pn(3)
    for w in enumerate_words(P2.alphabet, 8):
        assert P3.decide(Word(P3.alphabet, w.letters)) == P2.decide(w)


def test_cnf_shape():
    g = C.to_cnf(C.l3_grammar(Alphabet("ab")))
    for head, body in g.productions:
        if len(body) == 2:
            assert all(s in g.nonterminals for s in body)
        elif len(body) == 1:
            assert body[0] in g.terminals
        else:
            assert head == g.start


def test_l3_cyk_agreement_length_10_two_letters():
    b = Alphabet("ab")
    r = Q.crosscheck(C.lang_L3(b), C.lang_L3_cyk(b), 10)
    assert r.agree and r.examined == 88573


@given(st.text("a↢", max_size=14))
def test_l3_matches_rewriting_oracle(s):
    A = Alphabet("a↢")
    w = A.word(s) if s else A.empty
    assert C.lang_L3().decide(w) == Q.naive_l3(w)


def _e_split(c):
    """One split of c into E-words, or None."""
    E = C.lang_E()
    best = {0: []}
    for j in range(1, len(c) + 1):
        for i in list(best):
            if i < j and j not in best and E.decide(c[i:j]):
                best[j] = best[i] + [c[i:j]]
    return best.get(len(c))


def test_s2_witness_blocks_satisfy_t():
    S2 = C.lang_S2()
    for w in enumerate_words(C.TERNARY, 8):
        cuts = C._s2_witness(w)
        if cuts is None:
            continue
        assert S2.decide(w)
        if not cuts:
            assert in_t(w)
            continue
        start = 0
        for end in cuts:
            assert w[end - 1] == "1"
            blocks = _e_split(w[start : end - 1])
            assert blocks is not None
            assert all(in_t(b) for b in blocks)
            start = end
        assert start == len(w)


def test_e_matches_naive():
    E = C.lang_E()
    for w in enumerate_words(C.TERNARY, 8):
        assert E.decide(w) == Q.naive_E("".join(w))


def test_hp2_matches_brute_decomposition():
    L = C.lang_script_L()
    hp2 = C.lang_hP2_inf_rank()
    for w in enumerate_words(C.CODED, 6):
        brute = any(Q.naive_p2(a for _, a in d) for d in Q.brute_decompose(w, L, {"0", "1"}))
        assert hp2.decide(w) == brute, w


def test_gw_matches_brute_decomposition():
    D = C.lang_D()
    gw = C.lang_gW()

    # a block is a·D with its letter first, so decompose the reversed word
    for w in enumerate_words(C.D_ALPHABET, 8):
        rev = Word(w.alphabet, w.letters[::-1])
        rev_D = C.LanguagePredicate("rd", D.alphabet, lambda c: D.decide(Word(c.alphabet, c.letters[::-1])))
        parses = Q.brute_decompose(rev, rev_D, {"0", "1"})
        brute = any(Q.naive_p2(a for _, a in reversed(d)) for d in parses)
        assert gw.decide(w) == brute, w


def test_registry():
    assert set(C.REGISTRY) == {"p1", "p2", "s1", "s2", "e", "l3", "d", "gw", "clopenA", "scriptL", "hp2"}
    assert "pn:<k>" in C.names()
    assert C.get("pn:3").name == "pn:3"
    with pytest.raises(C.UnknownLanguage):
        C.get("nosuch")
    with pytest.raises(C.UnknownLanguage):
        C.get("pn:x")
