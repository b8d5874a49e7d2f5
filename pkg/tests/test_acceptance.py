"""The ten acceptance criteria, each at its stated sample size and zero tolerance."""
import os
import random
import subprocess
import sys
from itertools import combinations, permutations

from eqlog import kernel
from eqlog.asp import answer_sets, entails_as, gl_answer_sets_oracle, is_coherent_program
from eqlog.definability import lemma1_formula, project
from eqlog.equilibrium import EntailmentMode, entails, equilibrium_models, is_coherent
from eqlog.forgetting import (forget_atom, forget_set, literal_conjunctions, program_entailed,
                              uniform_interpolant_program)
from eqlog.ht import World, consequence, enumerate_interpretations, equivalent, models_of, satisfies_at
from eqlog.interpolation import (InterpolationResult, base_interpolant, ht_interpolant, interpolant_cw,
                                 interpolant_cw_subvocab, interpolant_ow, verify_interpolant)
from eqlog.syntax import (BOT, TOP, And, Atom, Implies, Not, Or, Program, Rule, Vocabulary,
                          conj, parse_formula as P, parse_program, vocabulary_of)
from golden_cases import CASES, GOLDEN, golden_text, run_case
from helpers import (Criterion, classical, entailed_pair, random_disjunctive_program,
                     random_formula, random_program, subsets)


def coherent_theory(rng, atoms="abcde"):
    while True:
        t = [random_formula(rng, atoms, depth=3) for _ in range(rng.randint(1, 3))]
        if is_coherent(t):
            return t


def coherent_disjunctive(rng, atoms="abcd"):
    while True:
        p = random_disjunctive_program(rng, atoms)
        if is_coherent_program(p):
            return p


def test_1_ht_soundness():
    rng = random.Random(1001)
    with Criterion(1, "HT axiom instances valid; persistence") as c:
        for _ in range(500):
            alpha = random_formula(rng, "abcdef", depth=3)
            beta = random_formula(rng, "abcdef", depth=3)
            axiom = Or(alpha, Or(Not(beta), Implies(alpha, beta)))
            c.check(consequence([], axiom), f"axiom fails for {alpha}, {beta}")
        for n in range(1, 5):
            v = Vocabulary("abcd"[:n])
            interps = list(enumerate_interpretations(v))
            for _ in range(100):
                f = random_formula(rng, v.atoms, depth=4)
                code = kernel.compile_formula(f, v)
                for m in interps:
                    here = satisfies_at(m, World.h, f)
                    c.check(not here or satisfies_at(m, World.t, f), f"{f} at {m}")
                    c.check(kernel.value(code, m.h, m.t) == (2 if here else 1 if satisfies_at(m, World.t, f) else 0),
                            f"kernel disagrees on {f} at {m}")


def test_2_answer_sets_match_reduct_oracle():
    v = Vocabulary("abc")
    heads = [h for k in (0, 1, 2) for h in combinations("abc", k)]
    bodies = [((), ())] + [((a,), ()) for a in "abc"] + [((), (a,)) for a in "abc"]
    template = [Rule(h, pos, neg) for h in heads for pos, neg in bodies]
    with Criterion(2, "answer sets equal the reduct oracle (exhaustive + 1000 random)") as c:
        assert len(template) == 49
        for k in range(4):
            for rules in combinations(template, k):
                p = Program(rules)
                c.check(answer_sets(p, v, check=False) == gl_answer_sets_oracle(p, v), repr(p))
        rng = random.Random(1002)
        for _ in range(1000):
            atoms = "abcde"[:rng.randint(1, 5)]
            p = random_program(rng, atoms, max_rules=6)
            c.check(answer_sets(p, check=False) == gl_answer_sets_oracle(p), repr(p))


def test_3_lemma1_defines_equilibria():
    rng = random.Random(1003)
    with Criterion(3, "equilibrium definer has exactly the equilibrium models") as c:
        for _ in range(500):
            t = coherent_theory(rng)
            v = vocabulary_of(t)
            report = equilibrium_models(t, v)
            c.check(models_of(lemma1_formula(t, v), v) == report.models, repr(t))


def test_4_ht_interpolation():
    rng = random.Random(1004)
    with Criterion(4, "HT interpolants verify") as c:
        for _ in range(500):
            a, b = entailed_pair(rng, "base")
            g = ht_interpolant(a, b)
            r = InterpolationResult(g, EntailmentMode.base, vocabulary_of(a) & vocabulary_of(b), (), False)
            c.check(bool(verify_interpolant(a, b, r)), f"{a} |- {b}")
            c.check(vocabulary_of(g).issubset(vocabulary_of(a) & vocabulary_of(b)), "vocabulary")


def test_5_equilibrium_interpolation():
    rng = random.Random(1005)
    with Criterion(5, "cw, cw-subvocabulary and ow interpolants meet every postcondition") as c:
        for _ in range(300):
            a, b = entailed_pair(rng, "cw")
            r = interpolant_cw(a, b)
            g = r.interpolant
            fresh = conj(Not(Atom(x)) for x in vocabulary_of(b) - vocabulary_of(a))
            shared = vocabulary_of(a) & vocabulary_of(b)
            c.check(vocabulary_of(g).issubset(shared), f"cw vocabulary {a} / {b}")
            c.check(entails(a, g, "cw"), f"a |~cw g for {a} / {b}")
            c.check(entails(g, b, "cw"), f"g |~cw b for {a} / {b}")
            if not r.used_fallback:
                c.check(consequence([g, fresh], b), f"g & -B |- b for {a} / {b}")
            else:
                c.check(consequence(a, b) and consequence(g, b), f"fallback for {a} / {b}")
        for _ in range(300):
            a, b = entailed_pair(rng, "cw", fresh="")
            g = interpolant_cw_subvocab(a, b).interpolant
            c.check(entails(a, g, "cw") and consequence(g, b), f"subvocab {a} / {b}")
        for _ in range(300):
            a, b = entailed_pair(rng, "ow")
            g = interpolant_ow(a, b).interpolant
            c.check(vocabulary_of(g).issubset(vocabulary_of(a) & vocabulary_of(b)), f"ow vocabulary {a} / {b}")
            c.check(entails(a, g, "ow"), f"a |~ow g for {a} / {b}")
            c.check(consequence(g, b), f"g |- b for {a} / {b}")


def _equivalent_variants(rng, f, atoms):
    x = Atom(rng.choice(atoms)) if atoms else TOP
    return [And(f, TOP), Or(f, BOT), And(f, f), Implies(TOP, f), Or(f, And(f, x)), And(f, Or(f, x))]


def test_6_interpolant_stability():
    rng = random.Random(1006)
    build = {"base": base_interpolant, "cw": interpolant_cw, "ow": interpolant_ow}
    with Criterion(6, "verification survives equivalent interpolants, antecedents and weaker consequents") as c:
        for mode, make in build.items():
            for _ in range(100):
                a, b = entailed_pair(rng, mode)
                r = make(a, b)
                shared = r.shared_vocab.atoms
                gammas = _equivalent_variants(rng, r.interpolant, shared)
                used = vocabulary_of(r.interpolant)
                if used:
                    gammas.append(project(r.interpolant, used))
                for g2 in gammas:
                    c.check(equivalent([g2], [r.interpolant]), "variant not equivalent")
                    r2 = InterpolationResult(g2, r.mode, r.shared_vocab, r.fresh_query_atoms, r.used_fallback, r.strong)
                    c.check(bool(verify_interpolant(a, b, r2)), f"{mode}: {g2} for {a} / {b}")
                for a2 in _equivalent_variants(rng, a, vocabulary_of(a).atoms)[:4]:
                    vb = vocabulary_of(b).atoms
                    b2 = Or(b, random_formula(rng, vb, depth=2, constants=False) if vb else TOP)
                    c.check(consequence(b, b2), "weakening")
                    c.check(bool(verify_interpolant(a2, b2, r)), f"{mode}: {a2} / {b2}")


def test_7_classical_base_fails():
    p = parse_program("b :- not a.")
    q = P("b & -c")
    with Criterion(7, "no formula over {b} is a classical (|~AS, |-) interpolant") as c:
        c.check(entails_as(p, q), "program should entail the query")
        # the four classes of formulas over {b}, by truth table
        classes = {"#t": TOP, "b": P("b"), "-b": P("-b"), "#f": BOT}
        not_c = P("-c")
        for name, g in classes.items():
            entails_not_c = all(classical(Implies(g, not_c), s) for s in subsets("bc"))
            follows = entails_as(p, g)
            c.check(not (follows and entails_not_c), f"{name} would be an interpolant")
            if name != "#f":
                c.check(not entails_not_c, f"{name} classically entails -c")
        c.check(not entails_as(p, BOT), "the program does not entail #f")


def test_8_forgetting():
    rng = random.Random(1008)
    with Criterion(8, "forgetting equivalences, order independence, entailment of the result, caveat") as c:
        for _ in range(300):
            p = coherent_disjunctive(rng)
            v = vocabulary_of(p)
            for a in v:
                r = forget_atom(p, a)
                c.check(program_entailed(p, r.program), f"Pi |~ Pi' fails forgetting {a} in {p}")
                for b in v - [a]:
                    c.check(entails_as(p, P(b)) == entails_as(r.program, P(b)), f"atom {b}, forget {a}, {p}")
                for phi in literal_conjunctions(v - [a]):
                    if entails_as(p, phi):
                        c.check(entails_as(r.program, phi), f"{phi}, forget {a}, {p}")
            w = Vocabulary(x for x in "abcde" if rng.random() < 0.5)
            u = uniform_interpolant_program(p, w)
            c.check(program_entailed(p, u.program), f"uniform Pi |~ Pi' for {p} onto {w}")
        for _ in range(100):
            p = coherent_disjunctive(rng, "abcde")
            atoms = sorted(vocabulary_of(p))
            xs = rng.sample(atoms, min(len(atoms), rng.randint(2, 3)))
            ref = forget_set(p, xs)
            for perm in permutations(xs):
                other = forget_set(p, perm, keep_order=True)
                c.check(answer_sets(other.program, other.retained_vocab) ==
                        answer_sets(ref.program, ref.retained_vocab), f"order {perm} for {p}")
        fixture = parse_program("a | b.")
        witness = entails_as(fixture, P("a | b")) and not entails_as(forget_atom(fixture, "a").program, P("a | b"))
        c.check(witness, "disjunction caveat witness not found")


def test_9_cw_ow_divergence():
    rng = random.Random(1009)
    q = Atom("q")
    with Criterion(9, "fresh atoms: cw decides them false, ow leaves them open") as c:
        for _ in range(100):
            psi = conj(coherent_theory(rng, "abcd"))
            c.check(entails(psi, Not(q), "cw"), f"cw -q for {psi}")
            c.check(not entails(psi, Not(q), "ow"), f"ow -q for {psi}")
            c.check(not entails(psi, Or(q, Not(q)), "ow"), f"ow q | -q for {psi}")


def test_10_cli_determinism():
    src = os.path.join(os.path.dirname(os.path.dirname(__file__)), "src")
    with Criterion(10, "CLI golden outputs byte-identical across runs") as c:
        for name in sorted(CASES):
            expected = (GOLDEN / f"{name}.out").read_text(encoding="utf-8")
            first, second = golden_text(*run_case(name)), golden_text(*run_case(name))
            c.check(first == expected and second == expected, f"{name} in process")
        for seed in ("1", "2"):
            env = dict(os.environ, PYTHONHASHSEED=seed, PYTHONPATH=src)
            code = ("import sys; sys.path.insert(0, %r)\n"
                    "from golden_cases import CASES, golden_text, run_case\n"
                    "for n in sorted(CASES): sys.stdout.write(n + '\\0' + golden_text(*run_case(n)) + '\\0')"
                    % os.path.dirname(__file__))
            out = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True, env=env).stdout
            parts = out.split("\0")
            got = dict(zip(parts[0::2], parts[1::2]))
            for name in sorted(CASES):
                expected = (GOLDEN / f"{name}.out").read_text(encoding="utf-8")
                c.check(got.get(name) == expected, f"{name} with PYTHONHASHSEED={seed}")
