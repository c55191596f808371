import json

import pytest

from omegapow import automata as A
from omegapow import catalog as C
from omegapow.automata import (
    AutomatonError,
    Configuration,
    CounterShapeError,
    Outcome,
    PushdownAutomaton,
    Transition,
    accepts,
    enumerate_accepted,
    is_valid_run,
    step,
)
from omegapow.words import Alphabet, enumerate_words

BIN = Alphabet("01")


def _tiny(extra=()):
    ts = {Transition("q0", "0", "Z0", "q0", ("z", "Z0"))} | set(extra)
    return PushdownAutomaton(("q0", "q1"), BIN, ("Z0", "z"), "q0", frozenset({"q1"}), frozenset(ts))


def test_step_examples():
    m = _tiny()
    w = BIN.word("0")
    assert step(m, Configuration("q0", 0, ("Z0",)), w) == {Configuration("q0", 1, ("z", "Z0"))}
    assert step(m, Configuration("q0", 0, ("Z0",)), BIN.word("1")) == set()
    both = _tiny([Transition("q0", None, "Z0", "q1", ("Z0",))])
    assert step(both, Configuration("q0", 0, ("Z0",)), w) == {
        Configuration("q0", 1, ("z", "Z0")),
        Configuration("q1", 0, ("Z0",)),
    }


def test_accepts_examples():
    l3 = A.automaton_L3(Alphabet("a"))
    a = l3.input
    assert accepts(l3, a.word("a↢")).outcome is Outcome.ACCEPTED
    assert accepts(l3, a.word("↢a")).outcome is Outcome.REJECTED_PROVEN
    assert accepts(l3, a.empty).outcome is Outcome.ACCEPTED
    assert accepts(l3, a.word("a")).outcome is Outcome.REJECTED_PROVEN
    d = A.automaton_D()
    for w, ok in (("d", True), ("0d00", True), ("0d0", False)):
        assert accepts(d, d.input.word(w)).accepted is ok
    p2 = A.automaton_P2()
    for w, ok in (("1", True), ("001", True), ("10", False)):
        v = accepts(p2, BIN.word(w))
        assert v.accepted is ok
        assert v.outcome is not Outcome.REJECTED_AT_BOUND
    gw = A.automaton_gW()
    for w, ok in (("1d", True), ("0d01d", True), ("0d1d", True), ("1d0", True), ("0d00", False), ("0d001d", False)):
        assert accepts(gw, gw.input.word(w)).accepted is ok, w


def test_runs_are_valid():
    for m in [f() for f in A.MACHINES.values()] + [A.automaton_Pn(4)]:
        for w in enumerate_words(m.input, 5):
            v = accepts(m, w)
            if v.accepted:
                assert is_valid_run(m, w, v.run)


def test_tight_bounds_report_exhaustion():
    l3 = A.automaton_L3(Alphabet("a"))
    v = accepts(l3, l3.input.word("aaa↢↢↢"), stack_bound=2)
    assert v.outcome is Outcome.REJECTED_AT_BOUND


def test_enumerate_accepted_examples():
    render = lambda m, n: {w.render() for w in enumerate_accepted(m, n)}
    assert render(A.automaton_P2(), 2) == {"1", "01"}
    assert render(A.automaton_L3(Alphabet("a")), 2) == {"@", "a↢"}
    assert render(A.automaton_D(), 1) == {"d"}


def test_pn_machines_match_predicates():
    for n in range(1, 5):
        m, L = A.automaton_Pn(n), C.lang_Pn(n)
        assert m.input == L.alphabet
        limit = 6 if n < 4 else 5
        for w in enumerate_words(m.input, limit):
            v = accepts(m, w)
            assert v.outcome is not Outcome.REJECTED_AT_BOUND
            assert v.accepted == L.decide(w), (n, w)


def test_counter_shapes():
    assert A.automaton_Pn(2).shape.kind == "finite"
    assert A.automaton_Pn(3).shape.describe() == "one-counter:z0"
    assert A.automaton_Pn(4).shape.describe() == "iterated:z0,z1"
    assert A.automaton_L3(Alphabet("a")).shape.kind == "one-counter"
    assert A.automaton_L3(Alphabet("a")).deterministic and A.automaton_L3(Alphabet("a")).realtime


def test_shape_violation_is_reported():
    # declared finite, but the only rule grows the stack
    bad = PushdownAutomaton(
        ("q",), BIN, ("Z0", "z"), "q", frozenset({"q"}),
        frozenset({Transition("q", "0", "Z0", "q", ("z", "Z0"))}),
    )
    with pytest.raises(CounterShapeError):
        accepts(bad, BIN.word("0"))
    assert accepts(bad, BIN.word("0"), check_shape=False).accepted


def test_construction_rejects_bottom_removal():
    with pytest.raises(AutomatonError):
        PushdownAutomaton(("q",), BIN, ("Z0",), "q", frozenset(), frozenset({Transition("q", "0", "Z0", "q", ())}))


def test_dot_has_one_node_per_state():
    dot = A.to_dot(A.automaton_P2())
    assert dot.count("[shape=circle]") + dot.count("[shape=doublecircle]") == 2
    assert "doublecircle" in dot


def test_json_round_trip_and_schema():
    m = A.automaton_L3(Alphabet("a"))
    doc = json.loads(A.to_json(m))
    assert set(doc) >= {"states", "input", "stack", "bottom", "initial", "finals", "transitions"}
    assert doc["bottom"] == "Z0"
    assert A.from_json(A.to_json(m)) == m


def test_malformed_json_reports_location():
    with pytest.raises(AutomatonError, match="line 1 column"):
        A.from_json('{"states": [')
    with pytest.raises(AutomatonError):
        A.from_json('{"states": []}')


def test_malformed_dot_reports_line():
    with pytest.raises(AutomatonError, match="line 2"):
        A.from_dot('digraph "x" {\n  garbage\n}')


def test_p1_and_l3_machines_to_length_10():
    for m, L in ((A.automaton_P1(), C.lang_P1()), (A.automaton_L3(Alphabet("a")), C.lang_L3())):
        for w in enumerate_words(m.input, 10):
            v = accepts(m, w)
            assert v.outcome is not Outcome.REJECTED_AT_BOUND
            assert v.accepted == L.decide(w)


def test_counter_machines_push_only_z():
    for m in (A.automaton_L3(Alphabet("a")), A.automaton_D()):
        assert {s for t in m.transitions for s in t.push} <= {"z", "Z0"}
        assert m.shape.kind == "one-counter"
