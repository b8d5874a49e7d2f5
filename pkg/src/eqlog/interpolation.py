"""Interpolants for HT consequence and for equilibrium entailment.

All constructions are semantic: the interpolant is the canonical formula
defining the projection of a model set onto the shared vocabulary.  Every
result is re-verified before it is returned; a failed check raises
:class:`~eqlog.errors.InternalError`.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .definability import lemma1_formula, project
from .equilibrium import EntailmentMode, entails, is_coherent
from .errors import InternalError, PreconditionError, VocabularyError
from .ht import consequence
from .syntax import Atom, Formula, Not, Vocabulary, conj, render_formula, vocabulary_of


@dataclass(frozen=True)
class InterpolationResult:
    interpolant: Formula
    mode: EntailmentMode
    shared_vocab: Vocabulary
    fresh_query_atoms: tuple[str, ...]
    used_fallback: bool
    # True when ``interpolant |- b`` is promised, i.e. the (|~, |-) form
    strong: bool = False

    def to_json(self, verified: bool = True) -> dict:
        return {
            "interpolant": render_formula(self.interpolant),
            "mode": self.mode.value,
            "verified": verified,
            "shared_vocab": list(self.shared_vocab),
            "fresh_query_atoms": list(self.fresh_query_atoms),
            "fallback": self.used_fallback,
        }


@dataclass(frozen=True)
class Verification:
    ok: bool
    reason: str = ""
    failed: tuple[str, ...] = field(default=())

    def __bool__(self) -> bool:
        return self.ok


def _shared(a: Formula, b: Formula) -> tuple[Vocabulary, tuple[str, ...]]:
    va, vb = vocabulary_of(a), vocabulary_of(b)
    return va & vb, (vb - va).atoms


def _negated(names) -> Formula:
    return conj(Not(Atom(n)) for n in names)


def ht_interpolant(a: Formula, b: Formula, simplify: bool = False) -> Formula:
    """Interpolant for ``a |- b`` in HT over ``V(a) & V(b)``."""
    if not consequence(a, b):
        raise PreconditionError(f"{render_formula(a)} does not HT-entail {render_formula(b)}")
    shared, _ = _shared(a, b)
    gamma = project(a, shared, simplify=simplify)
    if not (consequence(a, gamma) and consequence(gamma, b)):
        raise InternalError("HT interpolant failed verification")
    return gamma


def _finish(a: Formula, b: Formula, result: InterpolationResult) -> InterpolationResult:
    check = verify_interpolant(a, b, result)
    if not check:
        raise InternalError(f"interpolant {render_formula(result.interpolant)} failed: {check.reason}")
    return result


def base_interpolant(a: Formula, b: Formula, simplify: bool = False) -> InterpolationResult:
    shared, fresh = _shared(a, b)
    gamma = ht_interpolant(a, b, simplify)
    return _finish(a, b, InterpolationResult(gamma, EntailmentMode.base, shared, fresh, False, True))


def interpolant_cw(a: Formula, b: Formula, simplify: bool = False) -> InterpolationResult:
    """``(|~, |~)`` interpolant for closed-world entailment ``a |~cw b``.

    For coherent ``a`` the equilibrium models over ``V(a) | V(b)`` are
    defined by ``-B1 & ... & -Bn & a'`` (``Bi`` the atoms of ``b`` missing
    from ``a``, ``a'`` the equilibrium definer of ``a``), and the result is
    that formula's projection onto the shared atoms.  It additionally
    satisfies ``gamma & -B1 & ... & -Bn |- b``.
    """
    if not entails(a, b, EntailmentMode.cw):
        raise PreconditionError(f"{render_formula(a)} does not |~cw {render_formula(b)}")
    shared, fresh = _shared(a, b)
    if not is_coherent(a):
        gamma = ht_interpolant(a, b, simplify)
        return _finish(a, b, InterpolationResult(gamma, EntailmentMode.cw, shared, fresh, True, not fresh))
    definer = conj([_negated(fresh), lemma1_formula(a)] if fresh else [lemma1_formula(a)])
    gamma = project(definer, shared, simplify=simplify)
    return _finish(a, b, InterpolationResult(gamma, EntailmentMode.cw, shared, fresh, False, not fresh))


def interpolant_cw_subvocab(a: Formula, b: Formula, simplify: bool = False) -> InterpolationResult:
    """``(|~, |-)`` interpolant for ``a |~cw b`` when ``V(b) <= V(a)``."""
    if not vocabulary_of(b).issubset(vocabulary_of(a)):
        raise VocabularyError("the consequent uses atoms outside the antecedent's vocabulary")
    return interpolant_cw(a, b, simplify)


def interpolant_ow(a: Formula, b: Formula, simplify: bool = False) -> InterpolationResult:
    """``(|~, |-)`` interpolant for open-world entailment ``a |~ow b``."""
    if not entails(a, b, EntailmentMode.ow):
        raise PreconditionError(f"{render_formula(a)} does not |~ow {render_formula(b)}")
    shared, fresh = _shared(a, b)
    if not is_coherent(a):
        gamma = ht_interpolant(a, b, simplify)
        return _finish(a, b, InterpolationResult(gamma, EntailmentMode.ow, shared, fresh, True, True))
    gamma = project(lemma1_formula(a), shared, simplify=simplify)
    return _finish(a, b, InterpolationResult(gamma, EntailmentMode.ow, shared, fresh, False, True))


def interpolate(a: Formula, b: Formula, mode: EntailmentMode | str, simplify: bool = False) -> InterpolationResult:
    mode = EntailmentMode(mode)
    if mode in (EntailmentMode.cw, EntailmentMode.as_):
        return interpolant_cw(a, b, simplify)
    if mode is EntailmentMode.ow:
        return interpolant_ow(a, b, simplify)
    return base_interpolant(a, b, simplify)


def verify_interpolant(a: Formula, b: Formula, r: InterpolationResult) -> Verification:
    """Re-check vocabulary containment and the mode's pair of entailments.

    * base: ``a |- g`` and ``g |- b``
    * cw: ``a |~cw g`` and ``g |~cw b``; plus ``g & -B1 & ... |- b`` on
      the equilibrium branch and ``g |- b`` when ``r.strong``
    * ow: ``a |~ow g`` and ``g |- b``
    """
    g = r.interpolant
    shared, fresh = _shared(a, b)
    stray = set(vocabulary_of(g)) - set(shared)
    if stray:
        return Verification(False, f"interpolant uses atoms {sorted(stray)} outside the shared vocabulary",
                            ("vocabulary",))
    checks: list[tuple[str, bool]] = []
    mode = r.mode
    if mode is EntailmentMode.base:
        checks.append(("a |- g", consequence(a, g)))
        checks.append(("g |- b", consequence(g, b)))
    elif mode is EntailmentMode.cw:
        checks.append(("a |~cw g", entails(a, g, mode)))
        checks.append(("g |~cw b", entails(g, b, mode)))
        if not r.used_fallback:
            checks.append(("g & -B |- b", consequence([g, _negated(fresh)], b)))
        if r.strong:
            checks.append(("g |- b", consequence(g, b)))
    else:
        checks.append(("a |~ow g", entails(a, g, mode)))
        checks.append(("g |- b", consequence(g, b)))
    failed = tuple(name for name, ok in checks if not ok)
    if failed:
        return Verification(False, "failed: " + ", ".join(failed), failed)
    return Verification(True)
