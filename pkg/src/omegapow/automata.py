"""Pushdown automata with lambda-transitions, bounded membership search,
the concrete machines for the catalog languages, and JSON/DOT serialization.

Stacks are tuples with the top symbol first.
"""

from __future__ import annotations

import enum
import json
import re
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple

from .eraser import ERASER, indexed_eraser
from .words import Alphabet, Word, enumerate_words

BOTTOM = "Z0"
LAMBDA = "λ"


class AutomatonError(ValueError):
    pass


class CounterShapeError(AutomatonError):
    """A reachable stack left the shape the machine declares."""


class Transition(NamedTuple):
    source: str
    read: str | None  # None is a lambda-transition
    top: str
    target: str
    push: tuple[str, ...]


@dataclass(frozen=True)
class CounterShape:
    """``finite``, ``one-counter`` or ``iterated``; ``counters`` lists z₀, z₁, ..."""

    kind: str = "finite"
    counters: tuple[str, ...] = ()

    @property
    def k(self) -> int:
        return len(self.counters)

    def check(self, stack: tuple[str, ...], bottom: str) -> bool:
        if self.kind == "finite":
            return stack == (bottom,)
        rank = {z: i for i, z in enumerate(self.counters)}
        last = len(self.counters)
        for s in stack[:-1]:
            r = rank.get(s)
            if r is None or r > last:
                return False
            last = r
        return stack[-1] == bottom

    def describe(self) -> str:
        if self.kind == "iterated":
            return f"iterated:{','.join(self.counters)}"
        if self.kind == "one-counter":
            return f"one-counter:{self.counters[0]}"
        return "finite"

    @classmethod
    def parse(cls, text: str) -> CounterShape:
        kind, _, rest = text.partition(":")
        if kind == "finite":
            return cls()
        if kind in ("one-counter", "iterated") and rest:
            return cls(kind, tuple(rest.split(",")))
        raise AutomatonError(f"unknown counter shape {text!r}")


FINITE = CounterShape()


@dataclass(frozen=True)
class PushdownAutomaton:
    states: tuple[str, ...]
    input: Alphabet
    stack: tuple[str, ...]
    initial: str
    finals: frozenset[str]
    transitions: frozenset[Transition]
    bottom: str = BOTTOM
    shape: CounterShape = FINITE
    name: str = ""
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        states = set(self.states)
        if self.initial not in states:
            raise AutomatonError(f"initial state {self.initial!r} not among states")
        if not set(self.finals) <= states:
            raise AutomatonError(f"final states {sorted(set(self.finals) - states)} unknown")
        if self.bottom not in self.stack:
            raise AutomatonError("bottom symbol missing from the stack alphabet")
        if self.shape.kind == "one-counter" and len(self.stack) != 2:
            raise AutomatonError("a one-counter machine has stack alphabet {Z0, z}")
        index: dict[tuple, list[Transition]] = {}
        for t in self.transitions:
            if t.source not in states or t.target not in states:
                raise AutomatonError(f"transition {t} uses an unknown state")
            if t.read is not None and t.read not in self.input:
                raise AutomatonError(f"transition {t} reads a symbol outside the input alphabet")
            if t.top not in self.stack or any(s not in self.stack for s in t.push):
                raise AutomatonError(f"transition {t} uses an unknown stack symbol")
            if self.bottom in t.push[:-1] or (
                t.push and t.push[-1] == self.bottom and t.top != self.bottom
            ):
                raise AutomatonError(f"transition {t} pushes the bottom symbol")
            if t.top == self.bottom and (not t.push or t.push[-1] != self.bottom):
                raise AutomatonError(f"transition {t} removes the bottom symbol")
            index.setdefault((t.source, t.read, t.top), []).append(t)
        for ts in index.values():
            ts.sort()
        object.__setattr__(self, "_index", index)

    def rules(self, state: str, read: str | None, top: str) -> list[Transition]:
        return self._index.get((state, read, top), [])

    @property
    def deterministic(self) -> bool:
        """At most one move per (state, input-or-lambda, top), and never both kinds."""
        for (q, a, z), ts in self._index.items():
            if len(ts) > 1:
                return False
            if a is not None and self._index.get((q, None, z)):
                return False
        return True

    @property
    def realtime(self) -> bool:
        return all(t.read is not None for t in self.transitions)


class Configuration(NamedTuple):
    state: str
    position: int
    stack: tuple[str, ...]


class Outcome(enum.Enum):
    ACCEPTED = "accepted"
    REJECTED_PROVEN = "rejected"
    REJECTED_AT_BOUND = "rejected-at-bound"


@dataclass(frozen=True)
class MembershipVerdict:
    outcome: Outcome
    run: tuple[Configuration, ...] = ()
    stack_bound: int = 0
    step_bound: int = 0

    @property
    def accepted(self) -> bool:
        return self.outcome is Outcome.ACCEPTED

    def __bool__(self):
        return self.accepted


def step(m: PushdownAutomaton, c: Configuration, word: Word) -> set[Configuration]:
    out = set()
    top, below = c.stack[0], c.stack[1:]
    for t in m.rules(c.state, None, top):
        out.add(Configuration(t.target, c.position, t.push + below))
    if c.position < len(word):
        for t in m.rules(c.state, word[c.position], top):
            out.add(Configuration(t.target, c.position + 1, t.push + below))
    return out


def default_bounds(m: PushdownAutomaton, n: int) -> tuple[int, int]:
    stack_bound = (n + 2) * len(m.states)
    return stack_bound, stack_bound * len(m.states) * (n + 1)


def accepts(
    m: PushdownAutomaton,
    word: Word,
    stack_bound: int | None = None,
    step_bound: int | None = None,
    check_shape: bool = True,
) -> MembershipVerdict:
    """Breadth-first search over configurations within the given bounds.

    Raises :class:`CounterShapeError` if a reachable stack violates the
    machine's declared counter shape.
    """
    if word.alphabet != m.input and any(a not in m.input for a in word):
        raise AutomatonError(f"{word} is not over the input alphabet {m.input}")
    sb, tb = default_bounds(m, len(word))
    stack_bound = sb if stack_bound is None else stack_bound
    step_bound = tb if step_bound is None else step_bound

    start = Configuration(m.initial, 0, (m.bottom,))
    parent: dict[Configuration, Configuration | None] = {start: None}
    queue = deque([start])
    clipped = False
    expanded = 0
    n = len(word)
    while queue:
        c = queue.popleft()
        if c.state in m.finals and c.position == n:
            run = []
            node: Configuration | None = c
            while node is not None:
                run.append(node)
                node = parent[node]
            return MembershipVerdict(Outcome.ACCEPTED, tuple(reversed(run)), stack_bound, step_bound)
        if expanded >= step_bound:
            clipped = True
            break
        expanded += 1
        for d in sorted(step(m, c, word)):
            if d in parent:
                continue
            if len(d.stack) > stack_bound:
                clipped = True
                continue
            if check_shape and not m.shape.check(d.stack, m.bottom):
                raise CounterShapeError(f"{m.name or 'machine'} reached stack {d.stack} on {word}")
            parent[d] = c
            queue.append(d)
    outcome = Outcome.REJECTED_AT_BOUND if clipped else Outcome.REJECTED_PROVEN
    return MembershipVerdict(outcome, (), stack_bound, step_bound)


def is_valid_run(m: PushdownAutomaton, word: Word, run: Iterable[Configuration]) -> bool:
    """Check a run: starts at (q₀, Z₀), each step is a move, reads all of ``word``."""
    run = list(run)
    if not run or run[0] != Configuration(m.initial, 0, (m.bottom,)):
        return False
    for a, b in zip(run, run[1:]):
        if b not in step(m, a, word):
            return False
    return run[-1].position == len(word) and run[-1].state in m.finals


def enumerate_accepted(
    m: PushdownAutomaton, max_len: int, undecided: list | None = None
) -> Iterator[Word]:
    """Accepted words of length <= max_len in enumeration order.

    Words whose search hit a bound are appended to ``undecided`` when it is
    given; otherwise a :class:`BoundWarning` is issued for each.
    """
    import warnings

    for w in enumerate_words(m.input, max_len):
        v = accepts(m, w)
        if v.accepted:
            yield w
        elif v.outcome is Outcome.REJECTED_AT_BOUND:
            if undecided is not None:
                undecided.append(w)
            else:
                warnings.warn(f"{w} undecided at stack bound {v.stack_bound}", BoundWarning)


class BoundWarning(UserWarning):
    pass


# -- concrete machines ------------------------------------------------------


def _t(source, read, top, target, push=()) -> Transition:
    return Transition(source, read, top, target, tuple(push))


def automaton_L3(base: Alphabet, eraser: str = ERASER) -> PushdownAutomaton:
    """Deterministic real-time one-counter machine for L₃.

    In state ``zero`` the letter surplus is 0; in state ``pos`` it is one more
    than the number of z's on the stack.
    """
    z = "z"
    ts = []
    for a in base:
        ts.append(_t("zero", a, BOTTOM, "pos", [BOTTOM]))
        ts.append(_t("pos", a, BOTTOM, "pos", [z, BOTTOM]))
        ts.append(_t("pos", a, z, "pos", [z, z]))
    ts.append(_t("pos", eraser, BOTTOM, "zero", [BOTTOM]))
    ts.append(_t("pos", eraser, z, "pos", []))
    return PushdownAutomaton(
        states=("zero", "pos"),
        input=base.extend(eraser),
        stack=(BOTTOM, z),
        initial="zero",
        finals=frozenset({"zero"}),
        transitions=frozenset(ts),
        shape=CounterShape("one-counter", (z,)),
        name="L3",
    )


D_ALPHABET = Alphabet("01d")
BINARY = Alphabet("01")


def automaton_D() -> PushdownAutomaton:
    """u·d·v with |v| = 2|u| or 2|u|+1: two z's per letter of u, one pop per letter of v."""
    z = "z"
    ts = []
    for a in "01":
        ts.append(_t("u", a, BOTTOM, "u", [z, z, BOTTOM]))
        ts.append(_t("u", a, z, "u", [z, z, z]))
        ts.append(_t("v", a, z, "v", []))
        ts.append(_t("v", a, BOTTOM, "acc", [BOTTOM]))
    ts.append(_t("u", "d", BOTTOM, "v", [BOTTOM]))
    ts.append(_t("u", "d", z, "v", [z]))
    ts.append(_t("v", None, BOTTOM, "acc", [BOTTOM]))
    return PushdownAutomaton(
        states=("u", "v", "acc"),
        input=D_ALPHABET,
        stack=(BOTTOM, z),
        initial="u",
        finals=frozenset({"acc"}),
        transitions=frozenset(ts),
        shape=CounterShape("one-counter", (z,)),
        name="D",
    )


def automaton_P1() -> PushdownAutomaton:
    ts = [_t("p0", "0", BOTTOM, "p1", [BOTTOM])]
    return PushdownAutomaton(
        states=("p0", "p1"),
        input=BINARY,
        stack=(BOTTOM,),
        initial="p0",
        finals=frozenset({"p1"}),
        transitions=frozenset(ts),
        name="P1",
    )


def automaton_P2() -> PushdownAutomaton:
    ts = [
        _t("p0", "0", BOTTOM, "p0", [BOTTOM]),
        _t("p0", "1", BOTTOM, "p1", [BOTTOM]),
    ]
    return PushdownAutomaton(
        states=("p0", "p1"),
        input=BINARY,
        stack=(BOTTOM,),
        initial="p0",
        finals=frozenset({"p1"}),
        transitions=frozenset(ts),
        name="P2",
    )


def automaton_gW() -> PushdownAutomaton:
    """Blocks a·u·d·v (a·D) whose first letters spell 0…01.

    ``st`` expects the first letter of a block; ``u0``/``u1`` count the
    letters before d (two z's each) and remember whether the block letter
    was the final 1; ``v0``/``v1`` pop once per letter after d.
    """
    z = "z"
    ts = []
    for x in "01":
        ts.append(_t("st", x, BOTTOM, "u" + x, [BOTTOM]))
    for x in "01":
        u, v = "u" + x, "v" + x
        done = "st" if x == "0" else "acc"
        for a in "01":
            ts.append(_t(u, a, BOTTOM, u, [z, z, BOTTOM]))
            ts.append(_t(u, a, z, u, [z, z, z]))
            ts.append(_t(v, a, z, v, []))
            ts.append(_t(v, a, BOTTOM, done, [BOTTOM]))
        ts.append(_t(u, "d", BOTTOM, v, [BOTTOM]))
        ts.append(_t(u, "d", z, v, [z]))
        ts.append(_t(v, None, BOTTOM, done, [BOTTOM]))
    return PushdownAutomaton(
        states=("st", "u0", "v0", "u1", "v1", "acc"),
        input=D_ALPHABET,
        stack=(BOTTOM, z),
        initial="st",
        finals=frozenset({"acc"}),
        transitions=frozenset(ts),
        shape=CounterShape("one-counter", (z,)),
        name="gW",
    )


def substitute_machine(m: PushdownAutomaton, eraser: str, counter: str) -> PushdownAutomaton:
    """Machine for h(L(m)) where h(a) = L₃·a with the given eraser.

    Each state gets a ``clean`` copy (the last letter read survived, or
    nothing was read) and a ``dirty`` copy (inside an L₃ block).  Letters
    that open an L₃ block push ``counter`` above the simulated stack, and
    erasers pop it; the simulated machine only moves when ``counter`` is
    not on top.
    """
    if eraser in m.input:
        raise AutomatonError(f"{eraser} already in the input alphabet")
    if counter in m.stack:
        raise AutomatonError(f"{counter} already in the stack alphabet")

    def c(q):
        return f"{q}+"

    def d(q):
        return f"{q}-"

    stack = m.stack + (counter,)
    ts = []
    for t in m.transitions:
        if t.read is None:
            ts.append(_t(c(t.source), None, t.top, c(t.target), t.push))
            ts.append(_t(d(t.source), None, t.top, d(t.target), t.push))
        else:
            ts.append(_t(c(t.source), t.read, t.top, c(t.target), t.push))
            ts.append(_t(d(t.source), t.read, t.top, c(t.target), t.push))
    for q in m.states:
        for a in m.input:
            for x in stack:
                ts.append(_t(c(q), a, x, d(q), [counter, x]))
                ts.append(_t(d(q), a, x, d(q), [counter, x]))
        ts.append(_t(c(q), eraser, counter, d(q), []))
        ts.append(_t(d(q), eraser, counter, d(q), []))
    counters = m.shape.counters + (counter,)
    shape = CounterShape("one-counter" if len(counters) == 1 else "iterated", counters)
    states = tuple(f(q) for q in m.states for f in (c, d))
    return PushdownAutomaton(
        states=states,
        input=m.input.extend(eraser),
        stack=stack,
        initial=c(m.initial),
        finals=frozenset(c(q) for q in m.finals),
        transitions=frozenset(ts),
        bottom=m.bottom,
        shape=shape,
        name=f"h({m.name})" if m.name else "",
    )


def automaton_Pn(n: int) -> PushdownAutomaton:
    """Machine for P_n: P₁, P₂, then substitutions with ↢ₙ₋₂, ..., ↢₁ (↢₁ outermost)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if n == 1:
        return automaton_P1()
    m = automaton_P2()
    for i in range(n - 2, 0, -1):
        m = substitute_machine(m, indexed_eraser(i), f"z{n - 2 - i}")
    return PushdownAutomaton(
        m.states, m.input, m.stack, m.initial, m.finals, m.transitions, m.bottom, m.shape, f"P{n}"
    )


MACHINES = {
    "l3": lambda: automaton_L3(Alphabet("a")),
    "d": automaton_D,
    "p1": automaton_P1,
    "p2": automaton_P2,
    "gw": automaton_gW,
}


# -- serialization ----------------------------------------------------------


def _sorted_transitions(m: PushdownAutomaton) -> list[Transition]:
    order = {q: i for i, q in enumerate(m.states)}
    sym = {s: i for i, s in enumerate(m.input)}
    stk = {s: i for i, s in enumerate(m.stack)}
    return sorted(
        m.transitions,
        key=lambda t: (
            order[t.source],
            -1 if t.read is None else sym[t.read],
            stk[t.top],
            order[t.target],
            tuple(stk[s] for s in t.push),
        ),
    )


def to_json(m: PushdownAutomaton) -> str:
    doc = {
        "name": m.name,
        "states": list(m.states),
        "input": list(m.input),
        "stack": list(m.stack),
        "bottom": m.bottom,
        "initial": m.initial,
        "finals": [q for q in m.states if q in m.finals],
        "shape": m.shape.describe(),
        "transitions": [
            {"from": t.source, "read": t.read, "top": t.top, "to": t.target, "push": list(t.push)}
            for t in _sorted_transitions(m)
        ],
    }
    return json.dumps(doc, ensure_ascii=False, indent=1) + "\n"


def from_json(text: str) -> PushdownAutomaton:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise AutomatonError(f"malformed JSON at line {e.lineno} column {e.colno}: {e.msg}") from e
    try:
        ts = frozenset(
            Transition(t["from"], t["read"], t["top"], t["to"], tuple(t["push"]))
            for t in doc["transitions"]
        )
        return PushdownAutomaton(
            states=tuple(doc["states"]),
            input=Alphabet(doc["input"]),
            stack=tuple(doc["stack"]),
            initial=doc["initial"],
            finals=frozenset(doc["finals"]),
            transitions=ts,
            bottom=doc["bottom"],
            shape=CounterShape.parse(doc.get("shape", "finite")),
            name=doc.get("name", ""),
        )
    except (KeyError, TypeError) as e:
        raise AutomatonError(f"machine JSON is missing or mistypes field {e}") from e


def _q(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _label(t: Transition) -> str:
    read = LAMBDA if t.read is None else t.read
    push = " ".join(t.push) if t.push else LAMBDA
    return f"{read}, {t.top} / {push}"


def to_dot(m: PushdownAutomaton) -> str:
    lines = [f"digraph {_q(m.name or 'pda')} {{"]
    lines.append("  rankdir=LR;")
    lines.append(
        f"  graph [input={_q(' '.join(m.input))}, stack={_q(' '.join(m.stack))}, "
        f"bottom={_q(m.bottom)}, shape={_q(m.shape.describe())}];"
    )
    lines.append('  "" [shape=none];')
    for q in m.states:
        shape = "doublecircle" if q in m.finals else "circle"
        lines.append(f"  {_q(q)} [shape={shape}];")
    lines.append(f'  "" -> {_q(m.initial)};')
    for t in _sorted_transitions(m):
        lines.append(f"  {_q(t.source)} -> {_q(t.target)} [label={_q(_label(t))}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


_STR = r'"((?:[^"\\]|\\.)*)"'
_HEADER = re.compile(r"digraph " + _STR + r" \{")
_GRAPH = re.compile(
    r"graph \[input=" + _STR + ", stack=" + _STR + ", bottom=" + _STR + ", shape=" + _STR + r"\];"
)
_NODE = re.compile(_STR + r" \[shape=(\w+)\];")
_EDGE = re.compile(_STR + " -> " + _STR + r"(?: \[label=" + _STR + r"\])?;")


def _unq(s: str) -> str:
    return re.sub(r"\\(.)", r"\1", s)


def from_dot(text: str) -> PushdownAutomaton:
    """Read back the DOT dialect written by :func:`to_dot`."""
    name = None
    graph = None
    states: list[str] = []
    finals = set()
    initial = None
    ts = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line in ("rankdir=LR;", "}"):
            continue
        if mt := _HEADER.fullmatch(line):
            name = _unq(mt.group(1))
        elif mt := _GRAPH.fullmatch(line):
            graph = [_unq(g) for g in mt.groups()]
        elif mt := _NODE.fullmatch(line):
            q = _unq(mt.group(1))
            if q == "":
                continue
            states.append(q)
            if mt.group(2) == "doublecircle":
                finals.add(q)
        elif mt := _EDGE.fullmatch(line):
            src, dst, label = _unq(mt.group(1)), _unq(mt.group(2)), mt.group(3)
            if src == "":
                initial = dst
                continue
            if label is None:
                raise AutomatonError(f"line {lineno}: edge without label")
            lm = re.fullmatch(r"(.+), (\S+) / (.+)", _unq(label))
            if not lm:
                raise AutomatonError(f"line {lineno}: bad transition label {label!r}")
            read, top, push = lm.groups()
            ts.append(
                Transition(
                    src,
                    None if read == LAMBDA else read,
                    top,
                    dst,
                    () if push == LAMBDA else tuple(push.split(" ")),
                )
            )
        else:
            raise AutomatonError(f"line {lineno}: cannot parse {line!r}")
    if name is None or graph is None or initial is None:
        raise AutomatonError("DOT text lacks the digraph header, graph attributes or start edge")
    inp, stk, bottom, shape = graph
    return PushdownAutomaton(
        states=tuple(states),
        input=Alphabet(inp.split(" ")),
        stack=tuple(stk.split(" ")),
        initial=initial,
        finals=frozenset(finals),
        transitions=frozenset(ts),
        bottom=bottom,
        shape=CounterShape.parse(shape),
        name="" if name == "pda" else name,
    )


def export(m: PushdownAutomaton, format: str = "json") -> str:
    if format.lower() == "json":
        return to_json(m)
    if format.lower() == "dot":
        return to_dot(m)
    raise ValueError(f"unknown export format {format!r}")


def import_machine(text: str, format: str = "json") -> PushdownAutomaton:
    if format.lower() == "json":
        return from_json(text)
    if format.lower() == "dot":
        return from_dot(text)
    raise ValueError(f"unknown import format {format!r}")
