"""``eqlog`` command line.

Machine output is one line of JSON on stdout; diagnostics go to stderr.
Exit codes: 0 true/success, 1 false, 2 usage or parse error, 3 precondition
violated (incoherent input, entailment missing, vocabulary too large),
4 internal verification failure.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import IO, Sequence

from . import __version__
from .asp import answer_sets, entails_as, gl_answer_sets_oracle, program_to_theory
from .config import atom_cap, max_atoms
from .definability import define_set, lemma1_formula, project
from .equilibrium import EntailmentMode, entailment, equilibrium_models, is_coherent
from .errors import EqlogError, InternalError, ParseError, PreconditionError, VocabularyError
from .forgetting import forget_set, uniform_interpolant_program
from .ht import Interpretation, ModelSet, models_of
from .interpolation import InterpolationResult, interpolate, interpolant_cw, verify_interpolant
from .syntax import (Formula, Vocabulary, conj, parse_program, parse_theory, render_formula,
                     vocabulary_of)

EXIT_TRUE, EXIT_FALSE, EXIT_USAGE, EXIT_PRECONDITION, EXIT_INTERNAL = 0, 1, 2, 3, 4


class _Usage(EqlogError):
    pass


def load_raw(source: str, stdin: IO[str] | None = None) -> str:
    """Text of ``source``: stdin for ``-``, a file's contents, or ``source`` itself."""
    if source == "-":
        return (stdin or sys.stdin).read()
    if os.path.isfile(source):
        try:
            with open(source, encoding="utf-8") as fh:
                return fh.read()
        except OSError as exc:
            raise _Usage(f"cannot read {source}: {exc}") from exc
    return source


def load_input(source: str, kind: str, stdin: IO[str] | None = None):
    """Parse ``source`` as inline text, a file path, or ``-`` for stdin.

    ``kind`` is ``formula`` (a single formula), ``theory`` (one formula per
    line) or ``program``.
    """
    text = load_raw(source, stdin)
    if kind == "program":
        return parse_program(text)
    theory = parse_theory(text)
    if kind == "theory":
        return theory
    if not theory:
        raise _Usage("empty formula")
    return conj(theory) if len(theory) > 1 else theory[0]


def _vocab_arg(text: str | None) -> Vocabulary | None:
    if text is None:
        return None
    names = [n.strip() for n in text.split(",") if n.strip()]
    try:
        return Vocabulary(names)
    except ValueError as exc:
        raise _Usage(str(exc)) from exc


def _theory(args, stdin) -> tuple[Formula, ...]:
    if getattr(args, "program", None):
        return program_to_theory(load_input(args.program, "program", stdin))
    if not args.formula:
        raise _Usage("give a theory with -f or a program with -p")
    out: list[Formula] = []
    for source in args.formula:
        out.extend(load_input(source, "theory", stdin))
    return tuple(out)


def _widen(theory, vocab: Vocabulary | None) -> Vocabulary:
    base = vocabulary_of(theory)
    return base if vocab is None else base | vocab


# ---------------------------------------------------------------------------
# commands

def cmd_models(args, stdin):
    theory = _theory(args, stdin)
    v = _widen(theory, _vocab_arg(args.vocab))
    ms = models_of(theory, v)
    return EXIT_TRUE, {"vocab": list(v), "models": ms.to_json()}


def cmd_eqmodels(args, stdin):
    theory = _theory(args, stdin)
    report = equilibrium_models(theory, _widen(theory, _vocab_arg(args.vocab)))
    return EXIT_TRUE, report.to_json()


def cmd_entails(args, stdin):
    q = load_input(args.query, "formula", stdin)
    if args.mode == "as":
        if not args.program:
            raise _Usage("--mode as needs a program (-p)")
        holds = entails_as(load_input(args.program, "program", stdin), q)
        return (EXIT_TRUE if holds else EXIT_FALSE), {"entails": holds, "mode": "as"}
    theory = _theory(args, stdin)
    result = entailment(theory, q, args.mode, _vocab_arg(args.vocab))
    return (EXIT_TRUE if result.holds else EXIT_FALSE), result.to_json()


def _antecedent(args, stdin) -> Formula:
    if args.program:
        return conj(program_to_theory(load_input(args.program, "program", stdin)))
    if not args.a:
        raise _Usage("give the antecedent with -a (or -p for a program)")
    return load_input(args.a, "formula", stdin)


def cmd_interpolate(args, stdin):
    a = _antecedent(args, stdin)
    b = load_input(args.b, "formula", stdin)
    if args.mode == "as":
        result = interpolant_cw(a, b, args.simplify)
    else:
        result = interpolate(a, b, args.mode, args.simplify)
    out = result.to_json(verified=bool(verify_interpolant(a, b, result)))
    if args.mode == "as":
        out["mode"] = "as"
    return EXIT_TRUE, out


def cmd_check(args, stdin):
    a = _antecedent(args, stdin)
    b = load_input(args.b, "formula", stdin)
    g = load_input(args.g, "formula", stdin)
    mode = EntailmentMode("cw" if args.mode == "as" else args.mode)
    shared = vocabulary_of(a) & vocabulary_of(b)
    fresh = (vocabulary_of(b) - vocabulary_of(a)).atoms
    result = InterpolationResult(g, mode, shared, fresh, used_fallback=not is_coherent(a),
                                 strong=mode is not EntailmentMode.cw)
    check = verify_interpolant(a, b, result)
    return (EXIT_TRUE if check else EXIT_FALSE), {"verified": check.ok, "reason": check.reason,
                                                   "failed": list(check.failed)}


def cmd_define(args, stdin):
    if args.models:
        v = _vocab_arg(args.vocab)
        if v is None:
            raise _Usage("--models needs --vocab")
        raw = load_raw(args.models, stdin)
        try:
            members = [Interpretation.from_json(v, m) for m in json.loads(raw)]
        except (ValueError, KeyError, TypeError) as exc:
            raise _Usage(f"bad model list: {exc}") from exc
        f = define_set(ModelSet(v, members), simplify=args.simplify)
    else:
        theory = _theory(args, stdin)
        f = lemma1_formula(theory, _widen(theory, _vocab_arg(args.vocab)))
    return EXIT_TRUE, {"formula": render_formula(f)}




def cmd_project(args, stdin):
    theory = _theory(args, stdin)
    w = _vocab_arg(args.onto) or Vocabulary()
    return EXIT_TRUE, {"onto": list(w), "formula": render_formula(project(theory, w, args.simplify))}


def cmd_program2theory(args, stdin):
    p = load_input(args.program, "program", stdin)
    return EXIT_TRUE, {"formulas": [render_formula(f) for f in program_to_theory(p)]}


def cmd_answersets(args, stdin):
    p = load_input(args.program, "program", stdin)
    v = _widen(p, _vocab_arg(args.vocab))
    sets = gl_answer_sets_oracle(p, v) if args.oracle else answer_sets(p, v)
    return EXIT_TRUE, {"vocab": list(v), "answer_sets": [sorted(s) for s in sets]}


def cmd_query(args, stdin):
    p = load_input(args.program, "program", stdin)
    q = load_input(args.query, "formula", stdin)
    holds = entails_as(p, q, args.mode)
    return (EXIT_TRUE if holds else EXIT_FALSE), {"entails": holds, "mode": "as"}


def cmd_forget(args, stdin):
    p = load_input(args.program, "program", stdin)
    xs = list(_vocab_arg(args.atoms) or [])
    return EXIT_TRUE, forget_set(p, xs).to_json()


def cmd_uniform(args, stdin):
    p = load_input(args.program, "program", stdin)
    w = _vocab_arg(args.onto) or Vocabulary()
    out = uniform_interpolant_program(p, w).to_json()
    out["verified"] = True
    return EXIT_TRUE, out


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-atoms", type=int, default=None,
                        help="enumeration cap (default $EQLOG_MAX_ATOMS or 16)")
    common.add_argument("--vocab", help="comma-separated atoms added to the language")
    common.add_argument("--simplify", action="store_true",
                        help="drop syntactically repeated disjuncts in synthesized formulas")

    theory = argparse.ArgumentParser(add_help=False)
    theory.add_argument("-f", "--formula", action="append", default=[],
                        help="formula text, file (one formula per line) or '-'; repeatable")
    theory.add_argument("-p", "--program", help="program text, file or '-'")

    parser = argparse.ArgumentParser(prog="eqlog", description="Equilibrium logic and answer-set reasoning.")
    parser.add_argument("--version", action="version", version=f"eqlog {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, parents, help_):
        sp = sub.add_parser(name, parents=parents, help=help_)
        sp.set_defaults(func=func)
        return sp

    add("models", cmd_models, [common, theory], "HT models of a theory")
    add("eqmodels", cmd_eqmodels, [common, theory], "equilibrium models of a theory or program")

    sp = add("entails", cmd_entails, [common, theory], "decide equilibrium entailment")
    sp.add_argument("--mode", choices=["cw", "ow", "base", "as"], default="cw")
    sp.add_argument("-q", "--query", required=True)

    for name, func, help_ in (("interpolate", cmd_interpolate, "construct a verified interpolant"),
                              ("check", cmd_check, "verify a candidate interpolant")):
        sp = add(name, func, [common], help_)
        sp.add_argument("--mode", choices=["cw", "ow", "base", "as"], default="cw")
        sp.add_argument("-a", help="antecedent formula")
        sp.add_argument("-p", "--program", help="antecedent program (for --mode as)")
        sp.add_argument("-b", required=True, help="consequent formula")
        if name == "check":
            sp.add_argument("-g", required=True, help="candidate interpolant")

    sp = add("define", cmd_define, [common, theory], "defining formula of equilibrium models or a model set")
    sp.add_argument("--models", help="JSON list of {\"here\": [...], \"there\": [...]}")

    sp = add("project", cmd_project, [common, theory], "strongest consequence over a sub-vocabulary")
    sp.add_argument("--onto", required=True, help="comma-separated target atoms")

    sp = add("program2theory", cmd_program2theory, [common], "translate rules to HT formulas")
    sp.add_argument("-p", "--program", required=True)

    sp = add("answersets", cmd_answersets, [common], "answer sets of a program")
    sp.add_argument("-p", "--program", required=True)
    sp.add_argument("--oracle", action="store_true", help="use the reduct-based oracle")

    sp = add("query", cmd_query, [common], "skeptical answer-set query")
    sp.add_argument("-p", "--program", required=True)
    sp.add_argument("-q", "--query", required=True)
    sp.add_argument("--mode", choices=["cw", "ow"], default="cw")

    sp = add("forget", cmd_forget, [common], "forget atoms in a program")
    sp.add_argument("-p", "--program", required=True)
    sp.add_argument("--atoms", required=True, help="comma-separated atoms to forget")

    sp = add("uniform", cmd_uniform, [common], "uniform interpolant program over a vocabulary")
    sp.add_argument("-p", "--program", required=True)
    sp.add_argument("--onto", required=True, help="comma-separated atoms to keep")
    return parser


# Options taking a value.  Formulas such as "-a -> b" start with a dash, which
# argparse would read as another option, so such values are glued on with "=".
_VALUE_FLAGS = frozenset({"-f", "--formula", "-p", "--program", "-q", "--query", "-a", "-b", "-g",
                          "--mode", "--vocab", "--max-atoms", "--models", "--onto", "--atoms"})


def _glue_values(argv: Sequence[str]) -> list[str]:
    out: list[str] = []
    it = iter(argv)
    for tok in it:
        if tok in _VALUE_FLAGS:
            value = next(it, None)
            if value is None:
                out.append(tok)
            elif value.startswith("-"):
                out.append(f"{tok}={value}")
            else:
                out.extend([tok, value])
        else:
            out.append(tok)
    return out


def run(argv: Sequence[str], stdin: IO[str] | None = None, stdout: IO[str] | None = None,
        stderr: IO[str] | None = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(_glue_values(argv))
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_TRUE
    cap = args.max_atoms if args.max_atoms is not None else max_atoms()
    try:
        with atom_cap(cap):
            code, payload = args.func(args, stdin)
    except (ParseError, _Usage) as exc:
        print(f"eqlog: {exc}", file=stderr)
        return EXIT_USAGE
    except (PreconditionError, VocabularyError) as exc:
        print(f"eqlog: {exc}", file=stderr)
        return EXIT_PRECONDITION
    except InternalError as exc:
        print(f"eqlog: internal error: {exc}", file=stderr)
        return EXIT_INTERNAL
    except ValueError as exc:
        print(f"eqlog: {exc}", file=stderr)
        return EXIT_USAGE
    stdout.write(json.dumps(payload, separators=(",", ":")) + "\n")
    return code


def main(argv: Sequence[str] | None = None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
