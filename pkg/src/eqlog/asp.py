"""Ground disjunctive programs under the answer-set semantics.

Answer sets are computed as equilibrium models of the rule-by-rule HT
translation.  :func:`gl_answer_sets_oracle` is a separate implementation of
the Gelfond-Lifschitz reduct construction that shares no evaluator with the
HT code; :func:`answer_sets` cross-checks the two.
"""
from __future__ import annotations

from functools import lru_cache

from .config import check_size
from .equilibrium import EntailmentMode, entailment, equilibrium_masks
from .errors import InternalError, PreconditionError, VocabularyError
from .ht import consequence
from .syntax import (And, Atom, Falsum, Formula, Implies, Not, Or, Program, Rule,
                     Verum, Vocabulary, conj, disj, vocabulary_of)

ORACLE_CHECK_ATOMS = 10
AnswerSet = frozenset


def rule_to_formula(r: Rule) -> Formula:
    """``body -> head``; an empty body leaves the bare head, an empty head is ``_|_``."""
    body = [Atom(a) for a in r.pos_body] + [Not(Atom(a)) for a in r.neg_body]
    head = disj(Atom(a) for a in r.heads)
    return Implies(conj(body), head) if body else head


def program_to_theory(p: Program) -> tuple[Formula, ...]:
    return tuple(rule_to_formula(r) for r in p.rules)


def _vocab(p: Program, v: Vocabulary | None) -> Vocabulary:
    pv = vocabulary_of(p)
    if v is None:
        return pv
    if not pv.issubset(v):
        raise VocabularyError(f"program atoms {sorted(set(pv) - set(v))} not in {v!r}")
    return v


def _sort_sets(sets) -> list[AnswerSet]:
    return sorted((frozenset(s) for s in sets), key=lambda s: sorted(s))


# ---------------------------------------------------------------------------
# independent Gelfond-Lifschitz oracle

def gl_answer_sets_oracle(p: Program, v: Vocabulary | None = None) -> list[AnswerSet]:
    """Answer sets by exhaustive guess-and-check over ``2**|v|`` candidates.

    The reduct w.r.t. X drops every rule whose negative body meets X and
    deletes the negative bodies of the rest; X is an answer set when it is a
    minimal model of the reduct.
    """
    v = _vocab(p, v)
    check_size(len(v))
    idx = {a: i for i, a in enumerate(v.atoms)}
    rules = []
    for r in p.rules:
        rules.append((sum(1 << idx[a] for a in r.heads),
                      sum(1 << idx[a] for a in r.pos_body),
                      sum(1 << idx[a] for a in r.neg_body)))

    def is_model(positive, y):
        return all(pos & ~y or head & y for head, pos in positive)

    found = []
    for x in range(1 << len(v)):
        positive = [(head, pos) for head, pos, neg in rules if neg & x == 0]
        if not is_model(positive, x):
            continue
        minimal = True
        y = x
        while y:
            y = (y - 1) & x
            if is_model(positive, y):
                minimal = False
                break
        if minimal:
            found.append(frozenset(a for a, i in idx.items() if x >> i & 1))
    return _sort_sets(found)


# ---------------------------------------------------------------------------
# equilibrium route

@lru_cache(maxsize=4096)
def _answer_sets_cached(p: Program, v: Vocabulary) -> tuple[AnswerSet, ...]:
    masks = equilibrium_masks(program_to_theory(p), v)
    return tuple(_sort_sets(v.names(m) for m in masks))


def answer_sets(p: Program, v: Vocabulary | None = None, check: bool | None = None) -> list[AnswerSet]:
    """Answer sets of ``p`` over ``v`` (default ``V(p)``) via equilibrium models.

    With ``check`` (default: on for vocabularies up to 10 atoms) the result
    is compared with the reduct oracle and a mismatch raises InternalError.
    """
    v = _vocab(p, v)
    result = list(_answer_sets_cached(p, v))
    if check is None:
        check = len(v) <= ORACLE_CHECK_ATOMS
    if check:
        oracle = gl_answer_sets_oracle(p, v)
        if oracle != result:
            raise InternalError(f"equilibrium route {result} != reduct oracle {oracle}")
    return result


def is_coherent_program(p: Program) -> bool:
    """A program is coherent when it has an answer set (the empty program has one: {})."""
    return bool(_answer_sets_cached(p, vocabulary_of(p)))


def _check_query(q: Formula) -> None:
    if isinstance(q, (Atom, Falsum, Verum)):
        return
    if isinstance(q, (And, Or)):
        _check_query(q.left)
        _check_query(q.right)
    elif isinstance(q, Not):
        _check_query(q.body)
    else:
        raise PreconditionError("queries may only use atoms, &, | and -")


def _classical(q: Formula, s: frozenset) -> bool:
    if isinstance(q, Atom):
        return q.name in s
    if isinstance(q, Verum):
        return True
    if isinstance(q, Falsum):
        return False
    if isinstance(q, And):
        return _classical(q.left, s) and _classical(q.right, s)
    if isinstance(q, Or):
        return _classical(q.left, s) or _classical(q.right, s)
    return not _classical(q.body, s)


def entails_as(p: Program, q: Formula, mode: EntailmentMode | str = EntailmentMode.cw) -> bool:
    """``p |~AS q``: ``q`` holds in every answer set of ``p``.

    Atoms of ``q`` outside ``V(p)`` are false in every answer set; ``-a``
    holds when ``a`` is absent.  An incoherent program falls back to HT
    consequence of its translation.  ``mode='ow'`` delegates to open-world
    equilibrium entailment of the translation instead.
    """
    _check_query(q)
    mode = EntailmentMode(mode)
    if mode not in (EntailmentMode.cw, EntailmentMode.as_):
        return entailment(program_to_theory(p), q, mode).holds
    sets = _answer_sets_cached(p, vocabulary_of(p))
    if not sets:
        return consequence(program_to_theory(p), q)
    return all(_classical(q, s) for s in sets)
