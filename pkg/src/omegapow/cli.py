"""Command-line entry point.

Exit status: 0 when a query is decided, 2 when a verdict depends on a
search bound (bounded ω-power negatives, PDA searches that hit a bound),
1 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import automata, catalog, mupi, opower, oracle
from .words import AlphabetError, Word, enumerate_words, parse_lasso, parse_word, to_ascii

DECIDED, USAGE, BOUNDED = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _language(name: str):
    """A catalog name, ``l3-cyk``, or ``automaton:<machine>``."""
    if name == "l3-cyk":
        return catalog.lang_L3_cyk()
    if name.startswith("automaton:"):
        return oracle.machine_predicate(_machine(name[len("automaton:") :]))
    try:
        return catalog.get(name)
    except catalog.UnknownLanguage:
        raise UsageError(f"unknown language {name!r}; known: {', '.join(catalog.names())}") from None


def _machine(name: str):
    if name.startswith("pn:"):
        try:
            return automata.automaton_Pn(int(name[3:]))
        except ValueError as e:
            raise UsageError(f"bad machine {name!r}: {e}") from None
    if name not in automata.MACHINES:
        raise UsageError(f"unknown machine {name!r}; known: {', '.join(automata.MACHINES)}, pn:<k>")
    return automata.MACHINES[name]()


def _word(text: str, alphabet) -> Word:
    try:
        return parse_word(text, alphabet)
    except AlphabetError as e:
        raise UsageError(str(e)) from None


def _tree(name: str):
    try:
        return mupi.TREES[name]
    except KeyError:
        raise UsageError(f"unknown tree {name!r}; known: {', '.join(mupi.TREES)}") from None


def _build() -> _Parser:
    p = _Parser(prog="omegapow", description="ω-powers, eraser calculi and pushdown automata.")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--ascii", action="store_true", help="ASCII symbol names (~, ~1, al, be)")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    s = sub.add_parser("member", help="finite-word membership")
    s.add_argument("lang")
    s.add_argument("word")

    _omega_args(sub.add_parser("omega-member", help="bounded-block ω-power membership of a lasso"))
    s = sub.add_parser("opower", help="ω-power queries")
    osub = s.add_subparsers(dest="op", required=True, parser_class=_Parser)
    _omega_args(osub.add_parser("member"))

    s = sub.add_parser("enumerate", help="list members up to a length")
    s.add_argument("lang")
    s.add_argument("--max-len", type=int, required=True)

    s = sub.add_parser("crosscheck", help="compare two languages exhaustively")
    _cross_args(s)
    s = sub.add_parser("oracle", help="oracle harness")
    osub = s.add_subparsers(dest="op", required=True, parser_class=_Parser)
    _cross_args(osub.add_parser("crosscheck"))

    s = sub.add_parser("construct", help="emit machine JSON: pn:<k> or automaton:<name>")
    s.add_argument("target")

    s = sub.add_parser("export", help="export a machine")
    s.add_argument("target")
    fmt = s.add_mutually_exclusive_group()
    fmt.add_argument("--dot", action="store_true")
    fmt.add_argument("--json-format", dest="json_format", action="store_true", help="JSON (default)")

    s = sub.add_parser("mupi", help="the μ/π construction over {0,1,2,3}")
    msub = s.add_subparsers(dest="op", required=True, parser_class=_Parser)
    t = msub.add_parser("pi-member")
    t.add_argument("word")
    t.add_argument("--tree", default="full")
    t = msub.add_parser("m-index")
    t.add_argument("j", type=int)
    t = msub.add_parser("state")
    t.add_argument("n", type=int)
    t = msub.add_parser("runs")
    t.add_argument("input")
    t.add_argument("--tree", default="full")

    s = sub.add_parser("catalog", help="language registry")
    csub = s.add_subparsers(dest="op", required=True, parser_class=_Parser)
    csub.add_parser("list")
    return p


def _omega_args(s):
    s.add_argument("--lang", required=True)
    s.add_argument("--lasso", required=True)
    s.add_argument("--bound", type=int, required=True)
    s.add_argument("--escalate", action="store_true", help="try bounds 1, 2, 4, … up to --bound")


def _cross_args(s):
    s.add_argument("left")
    s.add_argument("right")
    s.add_argument("--max-len", type=int, required=True)
    s.add_argument("--report", choices=("text", "json"), default="text")


# -- verbs ------------------------------------------------------------------------


def _member(a):
    L = _language(a.lang)
    w = _word(a.word, L.alphabet)
    status = DECIDED
    if a.lang.startswith("automaton:"):
        v = automata.accepts(_machine(a.lang[len("automaton:") :]), w)
        member = v.accepted
        if v.outcome is automata.Outcome.REJECTED_AT_BOUND:
            status = BOUNDED
        extra = {"outcome": v.outcome.value}
    else:
        member = L.decide(w)
        extra = {}
    doc = {"lang": a.lang, "word": w.render(a.ascii), "member": member, **extra}
    return status, doc, "true" if member else "false"


def _omega(a):
    L = _language(a.lang)
    if a.bound < 1:
        raise UsageError("--bound must be at least 1")
    try:
        x = parse_lasso(a.lasso, L.alphabet)
    except (AlphabetError, ValueError) as e:
        raise UsageError(str(e)) from None
    if a.escalate:
        v = opower.opower_member_escalating(L, x, a.bound)
    else:
        v = opower.opower_member_bounded(L, x, a.bound)
    doc = {
        "lang": a.lang,
        "lasso": x.render(a.ascii),
        "member": v.member,
        "bound": v.bound,
        "schedule": v.schedule(),
    }
    if v.member:
        doc["stem"] = [e.length for e in v.stem]
        doc["cycle"] = [e.length for e in v.cycle]
        return DECIDED, doc, "true\n" + v.schedule()
    return BOUNDED, doc, v.schedule()


def _enumerate(a):
    if a.max_len < 0:
        raise UsageError("--max-len must be nonnegative")
    L = _language(a.lang)
    words = [w.render(a.ascii) for w in enumerate_words(L.alphabet, a.max_len) if L.decide(w)]
    return DECIDED, {"lang": a.lang, "max_len": a.max_len, "words": words}, "\n".join(words)


def _crosscheck(a):
    if a.max_len < 0:
        raise UsageError("--max-len must be nonnegative")
    left, right = _language(a.left), _language(a.right)
    try:
        report = oracle.crosscheck(left, right, a.max_len)
    except ValueError as e:
        raise UsageError(str(e)) from None
    doc = report.as_dict(a.ascii)
    if a.report == "json":
        a.json = True
    lines = [f"examined {report.examined} words: {'agree' if report.agree else 'DISAGREE'}"]
    for d in report.disagreements:
        lines.append(f"  {d.word.render(a.ascii)}: {left.name}={d.left_verdict} {right.name}={d.right_verdict}")
    return DECIDED, doc, "\n".join(lines)


def _construct_target(target: str):
    if target.startswith("automaton:"):
        return _machine(target[len("automaton:") :])
    if target.startswith("pn:"):
        return _machine(target)
    raise UsageError(f"expected pn:<k> or automaton:<name>, got {target!r}")


def _construct(a):
    m = _construct_target(a.target)
    text = automata.to_json(m)
    return DECIDED, json.loads(text), text.rstrip("\n")


def _export(a):
    m = _construct_target(a.target)
    fmt = "dot" if a.dot else "json"
    text = automata.export(m, fmt)
    return DECIDED, {"format": fmt, "text": text}, text.rstrip("\n")


def _mupi(a):
    if a.op == "pi-member":
        R = _tree(a.tree)
        w = _word(a.word, mupi.FOUR)
        parse = mupi.pi_parse(w, R)
        doc = {"word": w.render(), "tree": R.name, "member": parse is not None}
        if parse is not None:
            doc["parse"] = {
                "j": parse.j,
                "m": list(parse.marks),
                "n": list(parse.starts),
                "p": list(parse.ends),
                "r": list(parse.pads),
            }
        return DECIDED, doc, "true" if parse else "false"
    if a.op == "m-index":
        if a.j < 0:
            raise UsageError("j must be nonnegative")
        v = mupi.m_index(a.j)
        return DECIDED, {"j": a.j, "m_index": v}, str(v)
    if a.op == "state":
        if a.n < 0:
            raise UsageError("state index must be nonnegative")
        q = mupi.state_pair(a.n)
        return DECIDED, {"n": a.n, "left": q.left, "right": q.right}, str(q)
    R = _tree(a.tree)
    bits = a.input if a.input != "@" else ""
    if any(b not in "01" for b in bits):
        raise UsageError(f"run input must be binary, got {a.input!r}")
    runs = sorted(mupi.ts_run_prefixes(R, bits))
    return DECIDED, {"input": bits, "tree": R.name, "runs": [list(r) for r in runs]}, "\n".join(
        " ".join(map(str, r)) for r in runs
    )


def _catalog(a):
    rows = []
    for name in catalog.REGISTRY:
        L = catalog.get(name)
        sym = [to_ascii(s) if a.ascii else s for s in L.alphabet]
        rows.append({"name": name, "alphabet": sym, "anchor": L.anchor})
    rows.append({"name": "pn:<k>", "alphabet": ["0", "1", "↢ᵢ (i < k-1)"], "anchor": "P_k by iterated substitution"})
    text = "\n".join(f"{r['name']}\t{{{','.join(r['alphabet'])}}}\t{r['anchor']}" for r in rows)
    return DECIDED, {"languages": rows}, text


def _dispatch(a):
    if a.verb == "member":
        return _member(a)
    if a.verb in ("omega-member", "opower"):
        return _omega(a)
    if a.verb == "enumerate":
        return _enumerate(a)
    if a.verb in ("crosscheck", "oracle"):
        return _crosscheck(a)
    if a.verb == "construct":
        return _construct(a)
    if a.verb == "export":
        return _export(a)
    if a.verb == "mupi":
        return _mupi(a)
    return _catalog(a)


def run(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        a = _build().parse_args(argv)
        status, doc, text = _dispatch(a)
    except UsageError as e:
        print(f"omegapow: error: {e}", file=err)
        return USAGE
    if a.json:
        doc = {"status": status, **doc} if isinstance(doc, dict) else doc
        print(json.dumps(doc, ensure_ascii=a.ascii), file=out)
    elif text:
        print(text, file=out)
    return status


def main() -> None:
    for stream in (sys.stdout, sys.stderr):
        if hasattr(stream, "reconfigure"):
            stream.reconfigure(encoding="utf-8")
    sys.exit(run())


if __name__ == "__main__":
    main()
