"""Formulas that define given sets of HT interpretations.

Every set closed under total expansion (``<H,T>`` in S implies ``<T,T>`` in
S) is HT-definable.  The building block is :func:`pair_char_formula`, whose
models are exactly ``<H,T>`` and ``<T,T>``; disjunctions of these define any
closed set, and projecting a theory's models onto a sub-vocabulary and
defining the result gives its strongest consequence in that sub-vocabulary.
"""
from __future__ import annotations

from itertools import permutations
from typing import Iterable

from .equilibrium import equilibrium_models
from .errors import ClosureError, IncoherentError, VocabularyError
from .ht import Interpretation, ModelSet, TheoryLike, as_theory, models_of
from .syntax import Atom, Formula, Implies, Not, Vocabulary, conj, disj, vocabulary_of


class ClosedModelSet:
    """A :class:`ModelSet` verified to be closed under total expansion."""

    __slots__ = ("base",)

    def __init__(self, base: ModelSet):
        if not base.is_closed():
            bad = next(m for m in base if (m.t, m.t) not in base.pairs)
            raise ClosureError(f"{bad!r} is in the set but its total expansion is not")
        self.base = base

    @property
    def vocab(self) -> Vocabulary:
        return self.base.vocab

    def __iter__(self):
        return iter(self.base)

    def __len__(self) -> int:
        return len(self.base)


def total_char_formula(T: Iterable[str], v: Vocabulary) -> Formula:
    """``a1 & ... & ak & -(b1 | ... | bm)`` with the ``a`` in T and ``b`` outside.

    Its only model over ``v`` is ``<T,T>``.
    """
    T = set(T)
    if not T <= set(v):
        raise VocabularyError(f"atoms {sorted(T - set(v))} not in {v!r}")
    pos = [Atom(a) for a in v if a in T]
    rest = [Atom(a) for a in v if a not in T]
    return conj(pos + ([Not(disj(rest))] if rest else []))


def lemma1_formula(t: TheoryLike, v: Vocabulary | None = None) -> Formula:
    """Disjunction of the total characteristic formulas of the equilibrium models.

    Its HT-models over ``v`` are exactly the equilibrium models of ``t``.
    """
    theory = as_theory(t)
    report = equilibrium_models(theory, v)
    if not report.coherent:
        raise IncoherentError("theory has no equilibrium model")
    return disj(total_char_formula(report.vocab.names(m.t), report.vocab) for m in report.models)


def pair_char_formula(m: Interpretation) -> Formula:
    """Formula whose models are exactly ``m`` and its total expansion.

    Atoms of H hold, atoms of T - H are doubly negated, atoms outside T are
    negated, and the gap atoms imply each other pairwise so that a model's
    here-set contains either none or all of them.
    """
    v = m.vocab
    here, there = m.here, m.there
    gap = [a for a in v if a in there and a not in here]
    parts: list[Formula] = [Atom(a) for a in v if a in here]
    parts += [Not(Not(Atom(a))) for a in gap]
    parts += [Not(Atom(a)) for a in v if a not in there]
    parts += [Implies(Atom(a), Atom(b)) for a, b in permutations(gap, 2)]
    return conj(parts)


def define_set(s: ClosedModelSet | ModelSet, simplify: bool = False) -> Formula:
    """A formula whose models over ``s.vocab`` are exactly ``s``."""
    if isinstance(s, ModelSet):
        s = ClosedModelSet(s)
    parts = [pair_char_formula(m) for m in s]
    if simplify:
        parts = list(dict.fromkeys(parts))
    return disj(parts)


def project_models(t: TheoryLike, w: Vocabulary) -> ModelSet:
    """Reducts to ``w`` of all HT-models of ``t`` over ``V(t)``."""
    theory = as_theory(t)
    v = vocabulary_of(theory)
    if not w.issubset(v):
        raise VocabularyError(f"{w!r} is not a sub-vocabulary of {v!r}")
    keep = [v.atoms.index(a) for a in w]

    def squeeze(mask: int) -> int:
        return sum(1 << j for j, i in enumerate(keep) if mask >> i & 1)

    out = ModelSet.__new__(ModelSet)
    out.vocab = w
    out.pairs = frozenset((squeeze(h), squeeze(t)) for h, t in models_of(theory, v).pairs)
    return out


def project(t: TheoryLike, w: Vocabulary, simplify: bool = False) -> Formula:
    """Strongest formula over ``w`` that ``t`` entails in HT."""
    return define_set(ClosedModelSet(project_models(t, w)), simplify=simplify)

