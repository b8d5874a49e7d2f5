"""Propositional equilibrium logic: HT semantics, equilibrium entailment,
answer sets, interpolation and forgetting."""

__version__ = "0.1.0"

from .asp import (answer_sets, entails_as, gl_answer_sets_oracle, is_coherent_program,
                  program_to_theory, rule_to_formula)
from .definability import (ClosedModelSet, define_set, lemma1_formula, pair_char_formula,
                           project, total_char_formula)
from .equilibrium import (EntailmentMode, EquilibriumReport, entailment, entails,
                          equilibrium_models, is_coherent, order_lt)
from .errors import (ClosureError, EqlogError, IncoherentError, InternalError, ParseError,
                     PreconditionError, VocabularyError, VocabularyTooLarge)
from .forgetting import ForgetResult, forget_atom, forget_set, uniform_interpolant_program
from .ht import (Interpretation, ModelSet, World, consequence, enumerate_interpretations,
                 equivalent, expansions_to, models_of, reduct, satisfies, satisfies_at)
from .interpolation import (InterpolationResult, base_interpolant, ht_interpolant, interpolate,
                            interpolant_cw, interpolant_cw_subvocab, interpolant_ow, verify_interpolant)
from .syntax import (BOT, TOP, And, Atom, Falsum, Formula, Implies, Not, Or, Program, Rule,
                     Verum, Vocabulary, parse_formula, parse_program, parse_theory, render_formula,
                     render_program, vocabulary_of)

__all__ = [
    "And",
    "answer_sets",
    "Atom",
    "base_interpolant",
    "BOT",
    "ClosedModelSet",
    "ClosureError",
    "consequence",
    "define_set",
    "entailment",
    "EntailmentMode",
    "entails",
    "entails_as",
    "enumerate_interpretations",
    "EqlogError",
    "equilibrium_models",
    "EquilibriumReport",
    "equivalent",
    "expansions_to",
    "Falsum",
    "forget_atom",
    "forget_set",
    "ForgetResult",
    "Formula",
    "gl_answer_sets_oracle",
    "ht_interpolant",
    "Implies",
    "IncoherentError",
    "InternalError",
    "interpolant_cw",
    "interpolant_cw_subvocab",
    "interpolant_ow",
    "interpolate",
    "InterpolationResult",
    "Interpretation",
    "is_coherent",
    "is_coherent_program",
    "lemma1_formula",
    "models_of",
    "ModelSet",
    "Not",
    "Or",
    "order_lt",
    "pair_char_formula",
    "parse_formula",
    "parse_program",
    "parse_theory",
    "ParseError",
    "PreconditionError",
    "Program",
    "program_to_theory",
    "project",
    "reduct",
    "render_formula",
    "render_program",
    "Rule",
    "rule_to_formula",
    "satisfies",
    "satisfies_at",
    "TOP",
    "total_char_formula",
    "uniform_interpolant_program",
    "verify_interpolant",
    "Verum",
    "Vocabulary",
    "vocabulary_of",
    "VocabularyError",
    "VocabularyTooLarge",
    "World",
]
