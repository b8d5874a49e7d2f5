"""Equilibrium models and equilibrium entailment (closed-world, open-world, base).

An equilibrium model of a theory is a total HT-model ``<T,T>`` with no model
``<H,T>``, ``H`` a proper subset of ``T``.  Entailment is skeptical: truth in
every equilibrium model.  An empty or incoherent theory falls back to plain
HT consequence.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from . import kernel
from .config import check_size
from .errors import VocabularyError
from .ht import (Interpretation, ModelSet, TheoryLike, _check_vocab, as_theory,
                 consequence, joint_vocabulary)
from .syntax import Formula, Vocabulary, vocabulary_of


class EntailmentMode(str, enum.Enum):
    cw = "cw"
    ow = "ow"
    base = "base"
    # answer-set entailment; on a translated program it coincides with cw
    as_ = "as"


@dataclass(frozen=True)
class EquilibriumReport:
    vocab: Vocabulary
    models: ModelSet
    used_fallback: bool

    @property
    def coherent(self) -> bool:
        return not self.used_fallback

    def atom_sets(self) -> list[tuple[str, ...]]:
        return [self.vocab.names(m.t) for m in self.models]

    def to_json(self) -> dict:
        return {
            "vocab": list(self.vocab),
            "equilibrium_models": [{"atoms": list(a)} for a in self.atom_sets()],
            "fallback": self.used_fallback,
        }


@dataclass(frozen=True)
class Entailment:
    """Outcome of an entailment check, with the branch that decided it."""

    holds: bool
    mode: EntailmentMode
    vocab: Vocabulary
    used_fallback: bool

    def __bool__(self) -> bool:
        return self.holds

    def to_json(self) -> dict:
        return {"entails": self.holds, "mode": self.mode.value,
                "vocab": list(self.vocab), "fallback": self.used_fallback}


def order_lt(m1: Interpretation, m2: Interpretation) -> bool:
    """Strict order: same there-set, strictly smaller here-set."""
    if m1.vocab != m2.vocab:
        raise VocabularyError("interpretations over different vocabularies")
    return m1.t == m2.t and m1.h != m2.h and m1.h & ~m2.h == 0


def equilibrium_masks(theory: tuple[Formula, ...], v: Vocabulary) -> list[int]:
    _check_vocab(theory, v)
    check_size(len(v))
    return kernel.equilibria(kernel.compile_theory(theory, v), len(v))


def equilibrium_models(t: TheoryLike, v: Vocabulary | None = None) -> EquilibriumReport:
    theory = as_theory(t)
    v = vocabulary_of(theory) if v is None else v
    masks = equilibrium_masks(theory, v)
    return EquilibriumReport(
        vocab=v,
        models=ModelSet(v, [(m, m) for m in masks]),
        used_fallback=not theory or not masks,
    )


def is_coherent(t: TheoryLike, v: Vocabulary | None = None) -> bool:
    """Non-empty and has an equilibrium model (an empty theory counts as incoherent)."""
    return equilibrium_models(t, v).coherent


def entailment(t: TheoryLike, f: Formula, mode: EntailmentMode | str = EntailmentMode.cw,
               vocab: Vocabulary | None = None) -> Entailment:
    """Decide ``t |~ f`` and report how.

    ``vocab`` widens the theory's language: for ``cw`` equilibrium models are
    taken over ``V(t) | V(f) | vocab``; for ``ow`` over ``V(t) | vocab`` and
    then expanded arbitrarily to the atoms of ``f``.
    """
    mode = EntailmentMode(mode)
    theory = as_theory(t)
    extra = vocab if vocab is not None else Vocabulary()
    if mode is EntailmentMode.base:
        v = joint_vocabulary(theory, f, extra)
        return Entailment(consequence(theory, f), mode, v, False)

    if mode in (EntailmentMode.cw, EntailmentMode.as_):
        v = joint_vocabulary(theory, f, extra)
        masks = equilibrium_masks(theory, v) if theory else []
        if masks:
            pf = kernel.prepare(kernel.compile_formula(f, v))
            return Entailment(all(pf.value(m, m) == 2 for m in masks), mode, v, False)
    else:
        base = joint_vocabulary(theory, extra)
        masks = equilibrium_masks(theory, base) if theory else []
        if masks:
            v = base | vocabulary_of(f)
            check_size(len(v))
            code = kernel.compile_formula(f, v)
            free = v.mask(v - base)
            lifted = (v.mask(base.names(m)) for m in masks)
            holds = all(kernel.expansions_satisfy(code, m, m, free) for m in lifted)
            return Entailment(holds, mode, v, False)
    v = joint_vocabulary(theory, f)
    return Entailment(consequence(theory, f), mode, v, True)


def entails(t: TheoryLike, f: Formula, mode: EntailmentMode | str = EntailmentMode.cw,
            vocab: Vocabulary | None = None) -> bool:
    return entailment(t, f, mode, vocab).holds
