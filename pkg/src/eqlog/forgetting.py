"""Forgetting atoms in disjunctive programs, and uniform interpolants built from it.

``forget(p, a)``: take the answer sets of ``p``, delete ``a`` from each, keep
the subset-minimal results A1..Am, and emit for every Ai the rules
``a' :- not b1, ..., not bk`` (one per ``a'`` in Ai, the ``b`` ranging over
the retained atoms outside Ai).  The answer sets of the new program are
exactly A1..Am.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .asp import _answer_sets_cached, entails_as, program_to_theory
from .equilibrium import equilibrium_masks
from .errors import IncoherentError, InternalError
from .ht import Interpretation, satisfies
from .syntax import Atom, Formula, Not, Program, Rule, Vocabulary, conj, render_program, vocabulary_of


@dataclass(frozen=True)
class ForgetResult:
    program: Program
    forgotten: tuple[str, ...]
    retained_vocab: Vocabulary
    minimal_sets: tuple[frozenset, ...]

    def to_json(self) -> dict:
        return {
            "program": render_program(self.program),
            "forgotten": list(self.forgotten),
            "retained_vocab": list(self.retained_vocab),
            "minimal_sets": [sorted(s) for s in self.minimal_sets],
        }


def _name(a) -> str:
    return a.name if isinstance(a, Atom) else a


def _minimal(sets: Iterable[frozenset]) -> list[frozenset]:
    sets = set(sets)
    keep = [s for s in sets if not any(o < s for o in sets)]
    return sorted(keep, key=sorted)


def _build(minimal: list[frozenset], retained: Vocabulary) -> Program:
    rules = []
    for a_i in minimal:
        complement = [b for b in retained if b not in a_i]
        for head in sorted(a_i):
            rules.append(Rule([head], [], complement))
    return Program(rules)


def _answer_sets_over(p: Program, v: Vocabulary) -> list[frozenset]:
    return list(_answer_sets_cached(p, v))


def forget_atom(p: Program, a: Atom | str, vocab: Vocabulary | None = None) -> ForgetResult:
    """Forget one atom.  ``vocab`` is the program's language (default ``V(p)``).

    Forgetting an atom outside ``V(p)`` returns ``p`` unchanged.
    """
    a = _name(a)
    v = vocabulary_of(p) if vocab is None else vocab | vocabulary_of(p)
    sets = _answer_sets_over(p, v)
    if not sets:
        raise IncoherentError("cannot forget in a program without answer sets")
    retained = v - [a]
    if a not in vocabulary_of(p):
        return ForgetResult(p, (a,), retained, tuple(_minimal(s - {a} for s in sets)))
    minimal = _minimal(s - {a} for s in sets)
    return ForgetResult(_build(minimal, retained), (a,), retained, tuple(minimal))


def forget_set(p: Program, xs: Iterable[Atom | str], keep_order: bool = False) -> ForgetResult:
    """Forget several atoms by folding :func:`forget_atom`.

    The fold runs in canonical atom order unless ``keep_order`` is set; the
    answer sets of the result do not depend on the order.
    """
    names = [_name(x) for x in xs]
    if not keep_order:
        names = sorted(set(names))
    v = vocabulary_of(p)
    sets = _answer_sets_over(p, v)
    if not sets:
        raise IncoherentError("cannot forget in a program without answer sets")
    result = ForgetResult(p, (), v, tuple(sets))
    forgotten: list[str] = []
    for x in names:
        step = forget_atom(result.program, x, result.retained_vocab)
        forgotten.append(x)
        result = ForgetResult(step.program, tuple(forgotten), step.retained_vocab, step.minimal_sets)
    return result


def literal_conjunctions(w: Vocabulary) -> Iterable[Formula]:
    """Every conjunction of literals over ``w`` (each atom absent, positive or negated)."""
    atoms = list(w)

    def walk(i: int, acc: list[Formula]):
        if i == len(atoms):
            yield conj(acc)
            return
        yield from walk(i + 1, acc)
        yield from walk(i + 1, acc + [Atom(atoms[i])])
        yield from walk(i + 1, acc + [Not(Atom(atoms[i]))])

    return walk(0, [])


def program_entailed(p: Program, q: Program) -> bool:
    """Every equilibrium model of ``p`` satisfies every rule of ``q`` read as a formula."""
    v = vocabulary_of(p) | vocabulary_of(q)
    theory = program_to_theory(q)
    return all(satisfies(Interpretation(v, m, m), theory)
               for m in equilibrium_masks(program_to_theory(p), v))


def uniform_interpolant_program(p: Program, w: Vocabulary | Iterable[str]) -> ForgetResult:
    """Program over ``w & V(p)`` that ``p`` entails and that entails every
    literal conjunction over ``w`` that ``p`` entails.

    Atoms of ``V(p)`` outside ``w`` are forgotten; atoms of ``w`` outside
    ``V(p)`` are forgotten trivially.
    """
    w = w if isinstance(w, Vocabulary) else Vocabulary(w)
    pv = vocabulary_of(p)
    xs = set(pv - w) | set(w - pv)
    result = forget_set(p, xs)
    if not program_entailed(p, result.program):
        raise InternalError("original program does not entail its forgetting result")
    # conjunctions are entailed iff each literal is, so literals suffice here
    for a in w:
        for lit in (Atom(a), Not(Atom(a))):
            if entails_as(p, lit) and not entails_as(result.program, lit):
                raise InternalError(f"uniform interpolant lost {lit}")
    return result
