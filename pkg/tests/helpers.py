"""Seeded generators and brute-force oracles shared by the test modules.

The oracles here never touch ``eqlog.kernel``: they enumerate
interpretations and evaluate with the reference clauses in ``eqlog.ht`` or
with plain classical logic.
"""
import random
from itertools import combinations

from hypothesis import strategies as st

from eqlog.ht import enumerate_interpretations, satisfies
from eqlog.syntax import (BOT, TOP, And, Atom, Falsum, Implies, Not, Or, Program, Rule,
                          Verum, Vocabulary)

ATOMS = ("a", "b", "c", "d", "e", "f")


# --------------------------------------------------------------------------
# generators

def random_formula(rng: random.Random, atoms, depth=3, constants=True):
    if depth == 0 or rng.random() < 0.25:
        if constants and rng.random() < 0.08:
            return rng.choice([BOT, TOP])
        return Atom(rng.choice(atoms))
    kind = rng.choice("&|>-&|>")
    if kind == "-":
        return Not(random_formula(rng, atoms, depth - 1, constants))
    left = random_formula(rng, atoms, depth - 1, constants)
    right = random_formula(rng, atoms, depth - 1, constants)
    return {"&": And, "|": Or, ">": Implies}[kind](left, right)


def random_rule(rng: random.Random, atoms, max_each=2):
    def pick():
        return rng.sample(atoms, rng.randint(0, min(max_each, len(atoms))))
    return Rule(pick(), pick(), pick())


def random_program(rng: random.Random, atoms, max_rules=6):
    return Program(random_rule(rng, atoms) for _ in range(rng.randint(1, max_rules)))


def random_disjunctive_program(rng: random.Random, atoms, max_rules=6):
    """Programs without constraints, so coherence is common."""
    rules = []
    for _ in range(rng.randint(1, max_rules)):
        heads = rng.sample(atoms, rng.randint(1, 2))
        pos = rng.sample(atoms, rng.randint(0, 1))
        neg = rng.sample(atoms, rng.randint(0, 2))
        rules.append(Rule(heads, pos, neg))
    return Program(rules)


def formulas(atoms=ATOMS[:4], max_leaves=12):
    leaves = st.one_of(st.sampled_from([Atom(a) for a in atoms]), st.just(BOT), st.just(TOP))
    return st.recursive(
        leaves,
        lambda sub: st.one_of(
            st.builds(And, sub, sub), st.builds(Or, sub, sub),
            st.builds(Implies, sub, sub), st.builds(Not, sub)),
        max_leaves=max_leaves)


# --------------------------------------------------------------------------
# oracles

def classical(f, true_atoms) -> bool:
    if isinstance(f, Atom):
        return f.name in true_atoms
    if isinstance(f, Falsum):
        return False
    if isinstance(f, Verum):
        return True
    if isinstance(f, Not):
        return not classical(f.body, true_atoms)
    l, r = classical(f.left, true_atoms), classical(f.right, true_atoms)
    if isinstance(f, And):
        return l and r
    if isinstance(f, Or):
        return l or r
    return (not l) or r


def subsets(names):
    names = list(names)
    for k in range(len(names) + 1):
        yield from (frozenset(c) for c in combinations(names, k))


def brute_models(theory, v: Vocabulary):
    return {(m.h, m.t) for m in enumerate_interpretations(v) if satisfies(m, theory)}


def brute_equilibria(theory, v: Vocabulary):
    """Total models with no smaller-here model, by full enumeration."""
    models = brute_models(theory, v)
    return {t for h, t in models if h == t and not any(t2 == t and h2 != t for h2, t2 in models)}


def brute_consequence(theory, f, v: Vocabulary) -> bool:
    return all(satisfies(m, f) for m in enumerate_interpretations(v) if satisfies(m, theory))


# --------------------------------------------------------------------------
# entailment pairs for interpolation tests

def _random_sub(rng, v: Vocabulary) -> Vocabulary:
    return Vocabulary(x for x in v if rng.random() < 0.5)


def entailed_pair(rng: random.Random, mode: str, atoms="abcd", fresh="ef", tries=200):
    """Random ``(a, b)`` with ``a |- b`` (mode 'base') or ``a |~mode b``.

    Half the time ``b`` is plain random and kept only if entailed; otherwise
    it is a random formula disjoined with a known consequence of ``a`` over a
    random part of its vocabulary, so that the shared vocabulary varies.
    """
    from eqlog.definability import lemma1_formula, project
    from eqlog.equilibrium import entails, is_coherent
    from eqlog.ht import consequence
    from eqlog.syntax import vocabulary_of

    for _ in range(tries):
        a = random_formula(rng, atoms, depth=3)
        va = vocabulary_of(a)
        pool = tuple(va) + tuple(fresh)
        if not pool:
            continue
        r = random_formula(rng, pool, depth=2)
        if rng.random() < 0.5:
            b = r
        else:
            w = _random_sub(rng, va)
            if mode == "base" or not is_coherent(a):
                known = project(a, w)
            else:
                known = project(lemma1_formula(a), w)
            b = Or(r, known)
            if mode == "cw" and fresh and rng.random() < 0.5:
                b = And(b, Not(Atom(rng.choice(fresh))))
        ok = consequence(a, b) if mode == "base" else entails(a, b, mode)
        if ok:
            return a, b
    raise RuntimeError("no entailed pair found")


def random_query(rng: random.Random, atoms, depth=2):
    """Formula in the answer-set query fragment: atoms, &, | and -."""
    if depth == 0 or rng.random() < 0.3:
        return Atom(rng.choice(atoms))
    kind = rng.choice("&|-")
    if kind == "-":
        return Not(random_query(rng, atoms, depth - 1))
    op = And if kind == "&" else Or
    return op(random_query(rng, atoms, depth - 1), random_query(rng, atoms, depth - 1))


# --------------------------------------------------------------------------
# acceptance reporting

ACCEPTANCE_LOG: list[str] = []


class Criterion:
    """Collects failures for one acceptance criterion and logs a PASS/FAIL line."""

    def __init__(self, number: int, title: str):
        self.number, self.title = number, title
        self.checked = 0
        self.failures: list[str] = []

    def check(self, ok: bool, what: str = "") -> None:
        self.checked += 1
        if not ok:
            self.failures.append(what)

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc, tb):
        if exc is not None:
            self.failures.append(f"{exc_type.__name__}: {exc}")
        status = "FAIL" if self.failures else "PASS"
        line = f"{status} criterion {self.number}: {self.title} [{self.checked} checks, {len(self.failures)} failures]"
        if self.failures:
            line += f" first: {self.failures[0]}"
        print(line)
        ACCEPTANCE_LOG.append(line)
        if exc is None:
            assert not self.failures, line
        return False
