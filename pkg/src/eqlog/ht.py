"""Semantics of the logic of here-and-there (HT).

An interpretation ``<H, T>`` with ``H <= T`` is a two-world Kripke model
``h <= t``: atoms in ``H`` hold here, atoms in ``T`` hold there.  Both sets
are stored as bit-vectors over a :class:`~eqlog.syntax.Vocabulary`.

:func:`satisfies_at` is the reference, clause-by-clause evaluator.  Bulk
operations (:func:`models_of`, :func:`consequence`, ...) go through the
enumeration kernel in :mod:`eqlog.kernel`; the test suite checks that the two
agree everywhere at small vocabularies.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator, Union

from . import kernel
from .config import check_size
from .errors import VocabularyError
from .syntax import (And, Atom, Falsum, Formula, Implies, Not, Or, Verum,
                     Vocabulary, vocabulary_of)

TheoryLike = Union[Formula, Iterable[Formula]]


def as_theory(t: TheoryLike) -> tuple[Formula, ...]:
    if isinstance(t, Formula):
        return (t,)
    return tuple(t)


class World(enum.Enum):
    h = "h"
    t = "t"

    def __le__(self, other: World) -> bool:
        return self is World.h or other is World.t


@dataclass(frozen=True, slots=True)
class Interpretation:
    vocab: Vocabulary
    h: int
    t: int

    def __post_init__(self):
        full = (1 << len(self.vocab)) - 1
        if self.h & ~self.t or self.t & ~full:
            raise ValueError("need H <= T <= vocabulary")

    @classmethod
    def from_sets(cls, vocab: Vocabulary, here: Iterable[str], there: Iterable[str]) -> Interpretation:
        here, there = set(here), set(there)
        if not here <= there:
            raise ValueError("need H <= T")
        if not there <= set(vocab):
            raise VocabularyError(f"atoms {sorted(there - set(vocab))} not in vocabulary")
        return cls(vocab, vocab.mask(here), vocab.mask(there))

    @classmethod
    def total(cls, vocab: Vocabulary, atoms: Iterable[str]) -> Interpretation:
        m = vocab.mask(atoms)
        return cls(vocab, m, m)

    @property
    def here(self) -> frozenset[str]:
        return frozenset(self.vocab.names(self.h))

    @property
    def there(self) -> frozenset[str]:
        return frozenset(self.vocab.names(self.t))

    @property
    def is_total(self) -> bool:
        return self.h == self.t

    def to_json(self) -> dict:
        return {"here": list(self.vocab.names(self.h)), "there": list(self.vocab.names(self.t))}

    @classmethod
    def from_json(cls, vocab: Vocabulary, obj: dict) -> Interpretation:
        return cls.from_sets(vocab, obj["here"], obj["there"])

    def __repr__(self) -> str:
        return f"<{{{', '.join(self.vocab.names(self.h))}}}, {{{', '.join(self.vocab.names(self.t))}}}>"


class ModelSet:
    """A finite set of interpretations over one vocabulary.

    Iteration is in canonical order: by there-set bit-vector, then here-set.
    """

    __slots__ = ("vocab", "pairs")

    def __init__(self, vocab: Vocabulary, members: Iterable[Interpretation | tuple[int, int]] = ()):
        pairs = set()
        for m in members:
            if isinstance(m, Interpretation):
                if m.vocab != vocab:
                    raise VocabularyError("model set members must share the vocabulary")
                pairs.add((m.h, m.t))
            else:
                Interpretation(vocab, *m)  # validates
                pairs.add(tuple(m))
        self.vocab = vocab
        self.pairs = frozenset(pairs)

    def __iter__(self) -> Iterator[Interpretation]:
        for h, t in sorted(self.pairs, key=lambda p: (p[1], p[0])):
            yield Interpretation(self.vocab, h, t)

    def __len__(self) -> int:
        return len(self.pairs)

    def __bool__(self) -> bool:
        return bool(self.pairs)

    def __contains__(self, m: Interpretation) -> bool:
        return m.vocab == self.vocab and (m.h, m.t) in self.pairs

    def __eq__(self, other) -> bool:
        if not isinstance(other, ModelSet):
            return NotImplemented
        return self.vocab == other.vocab and self.pairs == other.pairs

    def __hash__(self) -> int:
        return hash((self.vocab, self.pairs))

    def __repr__(self) -> str:
        return f"ModelSet({list(self)!r})"

    def totals(self) -> ModelSet:
        return ModelSet(self.vocab, [(h, t) for h, t in self.pairs if h == t])

    def is_closed(self) -> bool:
        """Closed under total expansion: ``<H,T>`` in the set implies ``<T,T>`` is."""
        return all((t, t) in self.pairs for _, t in self.pairs)

    def to_json(self) -> list[dict]:
        return [m.to_json() for m in self]


# ---------------------------------------------------------------------------
# reference semantics

def _holds(f: Formula, w: World, here: frozenset, there: frozenset) -> bool:
    if isinstance(f, Atom):
        return f.name in (here if w is World.h else there)
    if isinstance(f, Falsum):
        return False
    if isinstance(f, Verum):
        return True
    if isinstance(f, And):
        return _holds(f.left, w, here, there) and _holds(f.right, w, here, there)
    if isinstance(f, Or):
        return _holds(f.left, w, here, there) or _holds(f.right, w, here, there)
    if isinstance(f, Implies):
        return all(not _holds(f.left, v, here, there) or _holds(f.right, v, here, there)
                   for v in World if w <= v)
    if isinstance(f, Not):
        return not any(_holds(f.body, v, here, there) for v in World if w <= v)
    raise TypeError(f"not a formula: {f!r}")


def _check_vocab(f: TheoryLike, vocab: Vocabulary) -> None:
    missing = set(vocabulary_of(f)) - set(vocab)
    if missing:
        raise VocabularyError(f"atoms {sorted(missing)} not in {vocab!r}")


def satisfies_at(m: Interpretation, w: World, f: Formula) -> bool:
    _check_vocab(f, m.vocab)
    return _holds(f, World(w), m.here, m.there)


def satisfies(m: Interpretation, f: TheoryLike) -> bool:
    """``m`` is an HT-model: every formula holds at both worlds."""
    theory = as_theory(f)
    _check_vocab(theory, m.vocab)
    here, there = m.here, m.there
    return all(_holds(g, w, here, there) for g in theory for w in World)


# ---------------------------------------------------------------------------
# enumeration

def enumerate_interpretations(v: Vocabulary) -> Iterator[Interpretation]:
    """All 3**|v| interpretations, ordered by there-set then here-set."""
    check_size(len(v))
    for t in range(1 << len(v)):
        h = 0
        while True:
            yield Interpretation(v, h, t)
            h = (h - t) & t
            if h == 0:
                break


def models_of(t: TheoryLike, v: Vocabulary) -> ModelSet:
    theory = as_theory(t)
    _check_vocab(theory, v)
    check_size(len(v))
    ms = ModelSet.__new__(ModelSet)
    ms.vocab = v
    ms.pairs = frozenset(kernel.ht_models(kernel.compile_theory(theory, v), len(v)))
    return ms


def joint_vocabulary(*parts: TheoryLike | Vocabulary | None) -> Vocabulary:
    names: set[str] = set()
    for p in parts:
        if p is not None:
            names.update(vocabulary_of(p) if not isinstance(p, Vocabulary) else p)
    return Vocabulary(names)


def countermodel(t: TheoryLike, f: Formula, vocab: Vocabulary | None = None) -> Interpretation | None:
    """An HT-model of ``t`` falsifying ``f``, or None.

    The search runs over the joint vocabulary of ``t`` and ``f`` (plus
    ``vocab`` if given); adding atoms never changes the answer.
    """
    theory = as_theory(t)
    v = joint_vocabulary(theory, f, vocab)
    check_size(len(v))
    hit = kernel.countermodel(kernel.compile_theory(theory, v), kernel.compile_formula(f, v), len(v))
    return None if hit is None else Interpretation(v, *hit)


def consequence(t: TheoryLike, f: Formula, vocab: Vocabulary | None = None) -> bool:
    """``t |- f`` in HT: ``f`` is true in every HT-model of ``t``."""
    return countermodel(t, f, vocab) is None


def equivalent(t1: TheoryLike, t2: TheoryLike) -> bool:
    t1, t2 = as_theory(t1), as_theory(t2)
    v = joint_vocabulary(t1, t2)
    return models_of(t1, v) == models_of(t2, v)


def reduct(m: Interpretation, v: Vocabulary) -> Interpretation:
    """Forget the atoms of ``m.vocab`` outside ``v``."""
    if not v.issubset(m.vocab):
        raise VocabularyError(f"{v!r} is not a sub-vocabulary of {m.vocab!r}")
    return Interpretation.from_sets(v, m.here & set(v), m.there & set(v))


def expansions_to(m: Interpretation, v: Vocabulary) -> Iterator[Interpretation]:
    """Every interpretation over ``v`` whose reduct to ``m.vocab`` is ``m``."""
    if not m.vocab.issubset(v):
        raise VocabularyError(f"{v!r} is not a super-vocabulary of {m.vocab!r}")
    extra = v - m.vocab
    check_size(len(v))
    base_h, base_t = v.mask(m.here), v.mask(m.there)
    for e in enumerate_interpretations(extra):
        yield Interpretation(v, base_h | v.mask(e.here), base_t | v.mask(e.there))
