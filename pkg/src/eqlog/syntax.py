"""Propositional formulas and ground disjunctive programs: AST, parsing, printing.

Formula grammar (ASCII)::

    form := impl
    impl := disj ("->" impl)?
    disj := conj ("|" conj)*
    conj := neg ("&" neg)*
    neg  := "-" neg | atom | "_|_" | "#t" | "(" form ")"

Program grammar: rules ``h1 | h2 :- b1, not b2.`` terminated by ``.``; either
side may be empty and ``%`` starts a comment running to the end of the line.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Iterator, Sequence, Union

from .errors import ParseError

ATOM_RE = re.compile(r"[a-zA-Z][a-zA-Z0-9_]*\Z")


class Formula:
    """Base class of the formula AST. Nodes are immutable and hashable."""

    __slots__ = ()

    def __and__(self, other: Formula) -> Formula:
        return And(self, other)

    def __or__(self, other: Formula) -> Formula:
        return Or(self, other)

    def __rshift__(self, other: Formula) -> Formula:
        return Implies(self, other)

    def __invert__(self) -> Formula:
        return Not(self)

    def __str__(self) -> str:
        return render_formula(self)


@dataclass(frozen=True, slots=True)
class Atom(Formula):
    name: str

    def __post_init__(self):
        if not ATOM_RE.match(self.name):
            raise ValueError(f"invalid atom name {self.name!r}")

    def __repr__(self) -> str:
        return f"Atom({self.name!r})"


@dataclass(frozen=True, slots=True)
class Falsum(Formula):
    def __repr__(self) -> str:
        return "Falsum()"


@dataclass(frozen=True, slots=True)
class Verum(Formula):
    def __repr__(self) -> str:
        return "Verum()"


@dataclass(frozen=True, slots=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class Implies(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class Not(Formula):
    body: Formula


BOT = Falsum()
TOP = Verum()


def conj(parts: Iterable[Formula]) -> Formula:
    """Left-nested conjunction; the empty conjunction is ``#t``."""
    parts = list(parts)
    return reduce(And, parts) if parts else TOP


def disj(parts: Iterable[Formula]) -> Formula:
    """Left-nested disjunction; the empty disjunction is ``_|_``."""
    parts = list(parts)
    return reduce(Or, parts) if parts else BOT


def atoms(*names: str) -> tuple[Atom, ...]:
    return tuple(Atom(n) for n in names)


@dataclass(frozen=True, slots=True)
class Vocabulary:
    """A finite set of atom names kept in canonical (lexicographic) order.

    Position ``i`` in ``atoms`` is bit ``i`` in every bit-vector encoding.
    """

    atoms: tuple[str, ...] = ()

    def __init__(self, names: Iterable[str | Atom] = ()):
        names = {n.name if isinstance(n, Atom) else n for n in names}
        for n in names:
            if not ATOM_RE.match(n):
                raise ValueError(f"invalid atom name {n!r}")
        object.__setattr__(self, "atoms", tuple(sorted(names)))

    def __len__(self) -> int:
        return len(self.atoms)

    def __iter__(self) -> Iterator[str]:
        return iter(self.atoms)

    def __contains__(self, name: object) -> bool:
        if isinstance(name, Atom):
            name = name.name
        return name in self._index

    def __repr__(self) -> str:
        return f"Vocabulary({list(self.atoms)!r})"

    @property
    def _index(self) -> dict[str, int]:
        # not cached: slots dataclass, and vocabularies are tiny
        return {a: i for i, a in enumerate(self.atoms)}

    def index(self) -> dict[str, int]:
        return self._index

    def union(self, *others: Iterable[str]) -> Vocabulary:
        out = set(self.atoms)
        for o in others:
            out.update(o)
        return Vocabulary(out)

    __or__ = union

    def intersection(self, other: Iterable[str]) -> Vocabulary:
        other = set(other)
        return Vocabulary(a for a in self.atoms if a in other)

    __and__ = intersection

    def difference(self, other: Iterable[str]) -> Vocabulary:
        other = set(other)
        return Vocabulary(a for a in self.atoms if a not in other)

    __sub__ = difference

    def issubset(self, other: Iterable[str]) -> bool:
        return set(self.atoms) <= set(other)

    def mask(self, names: Iterable[str]) -> int:
        """Bit-vector of ``names`` over this vocabulary."""
        idx = self._index
        m = 0
        for n in names:
            m |= 1 << idx[n]
        return m

    def names(self, mask: int) -> tuple[str, ...]:
        return tuple(a for i, a in enumerate(self.atoms) if mask >> i & 1)


# ---------------------------------------------------------------------------
# programs

@dataclass(frozen=True, slots=True)
class Rule:
    """``heads[0] | ... :- pos_body..., not neg_body...``"""

    heads: tuple[str, ...] = ()
    pos_body: tuple[str, ...] = ()
    neg_body: tuple[str, ...] = ()

    def __init__(self, heads: Iterable[str] = (), pos_body: Iterable[str] = (),
                 neg_body: Iterable[str] = ()):
        for name, seq in (("heads", heads), ("pos_body", pos_body), ("neg_body", neg_body)):
            seq = tuple(a.name if isinstance(a, Atom) else a for a in seq)
            for a in seq:
                if not ATOM_RE.match(a) or a == "not":
                    raise ValueError(f"invalid atom name {a!r}")
            object.__setattr__(self, name, seq)

    @property
    def is_constraint(self) -> bool:
        return not self.heads

    def __str__(self) -> str:
        return render_rule(self)


@dataclass(frozen=True, slots=True)
class Program:
    rules: tuple[Rule, ...] = ()

    def __init__(self, rules: Iterable[Rule] = ()):
        object.__setattr__(self, "rules", tuple(rules))

    def __len__(self) -> int:
        return len(self.rules)

    def __iter__(self) -> Iterator[Rule]:
        return iter(self.rules)

    def __str__(self) -> str:
        return render_program(self)


Theory = Sequence[Formula]


def vocabulary_of(obj: Union[Formula, Iterable[Formula], Rule, Program]) -> Vocabulary:
    """Atoms occurring in a formula, theory, rule or program."""
    names: set[str] = set()
    _collect(obj, names)
    return Vocabulary(names)


def _collect(obj, out: set[str]) -> None:
    if isinstance(obj, Atom):
        out.add(obj.name)
    elif isinstance(obj, (And, Or, Implies)):
        _collect(obj.left, out)
        _collect(obj.right, out)
    elif isinstance(obj, Not):
        _collect(obj.body, out)
    elif isinstance(obj, (Falsum, Verum)):
        pass
    elif isinstance(obj, Rule):
        out.update(obj.heads, obj.pos_body, obj.neg_body)
    elif isinstance(obj, Program):
        for r in obj.rules:
            _collect(r, out)
    elif isinstance(obj, Vocabulary):
        out.update(obj.atoms)
    else:
        for item in obj:
            _collect(item, out)


# ---------------------------------------------------------------------------
# lexer

_TOKEN_RE = re.compile(r"""
    (?P<ws>[ \t\r]+)
  | (?P<nl>\n)
  | (?P<comment>%[^\n]*)
  | (?P<falsum>_\|_)
  | (?P<verum>\#t)
  | (?P<arrow>->)
  | (?P<if>:-)
  | (?P<neg>-)
  | (?P<and>&)
  | (?P<or>\|)
  | (?P<lpar>\()
  | (?P<rpar>\))
  | (?P<comma>,)
  | (?P<dot>\.)
  | (?P<ident>[a-zA-Z][a-zA-Z0-9_]*)
""", re.VERBOSE)


@dataclass(slots=True)
class _Token:
    kind: str
    text: str
    line: int
    col: int


def _tokenize(text: str, comments: bool) -> list[_Token]:
    tokens = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        col = pos - line_start + 1
        if m is None:
            raise ParseError(f"unknown token {text[pos]!r}", line, col)
        kind = m.lastgroup
        if kind == "nl":
            line += 1
            line_start = m.end()
        elif kind == "comment":
            if not comments:
                raise ParseError("unknown token '%'", line, col)
        elif kind != "ws":
            tokens.append(_Token(kind, m.group(), line, col))
        pos = m.end()
    tokens.append(_Token("eof", "", line, pos - line_start + 1))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.pos = 0

    @property
    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def take(self, kind: str | None = None) -> _Token:
        tok = self.tokens[self.pos]
        if kind is not None and tok.kind != kind:
            self.fail(f"expected {kind}")
        self.pos += 1
        return tok

    def fail(self, expected: str):
        tok = self.peek
        found = "end of input" if tok.kind == "eof" else repr(tok.text)
        raise ParseError(f"{expected}, found {found}", tok.line, tok.col)

    # formula grammar
    def form(self) -> Formula:
        left = self.disj()
        if self.peek.kind == "arrow":
            self.take()
            return Implies(left, self.form())
        return left

    def disj(self) -> Formula:
        f = self.conj()
        while self.peek.kind == "or":
            self.take()
            f = Or(f, self.conj())
        return f

    def conj(self) -> Formula:
        f = self.neg()
        while self.peek.kind == "and":
            self.take()
            f = And(f, self.neg())
        return f

    def neg(self) -> Formula:
        tok = self.peek
        if tok.kind == "neg":
            self.take()
            return Not(self.neg())
        if tok.kind == "ident":
            self.take()
            return Atom(tok.text)
        if tok.kind == "falsum":
            self.take()
            return BOT
        if tok.kind == "verum":
            self.take()
            return TOP
        if tok.kind == "lpar":
            self.take()
            f = self.form()
            self.take("rpar")
            return f
        self.fail("expected formula")

    # program grammar
    def program(self) -> Program:
        rules = []
        while self.peek.kind != "eof":
            rules.append(self.rule())
        return Program(rules)

    def atom_name(self) -> str:
        tok = self.peek
        if tok.kind != "ident" or tok.text == "not":
            self.fail("expected atom")
        self.take()
        return tok.text

    def rule(self) -> Rule:
        heads, pos, neg = [], [], []
        if self.peek.kind not in ("if", "dot"):
            heads.append(self.atom_name())
            while self.peek.kind == "or":
                self.take()
                heads.append(self.atom_name())
        if self.peek.kind == "if":
            self.take()
            if self.peek.kind != "dot":
                self.literal(pos, neg)
                while self.peek.kind == "comma":
                    self.take()
                    self.literal(pos, neg)
        self.take("dot")
        return Rule(heads, pos, neg)

    def literal(self, pos: list, neg: list) -> None:
        tok = self.peek
        if tok.kind == "ident" and tok.text == "not":
            self.take()
            neg.append(self.atom_name())
        else:
            pos.append(self.atom_name())


def parse_formula(text: str) -> Formula:
    p = _Parser(_tokenize(text, comments=False))
    f = p.form()
    if p.peek.kind != "eof":
        p.fail("expected end of input")
    return f


def parse_theory(text: str) -> tuple[Formula, ...]:
    """One formula per non-blank line; ``%`` comments allowed."""
    out = []
    for line in text.splitlines():
        line = line.split("%", 1)[0]
        if line.strip():
            out.append(parse_formula(line))
    return tuple(out)


def parse_program(text: str) -> Program:
    return _Parser(_tokenize(text, comments=True)).program()


# ---------------------------------------------------------------------------
# printing

_LEVEL = {Implies: 1, Or: 2, And: 3, Not: 4}


def _level(f: Formula) -> int:
    return _LEVEL.get(type(f), 5)


def render_formula(f: Formula) -> str:
    """Print with the minimum parentheses that still parse back to ``f``."""
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, Falsum):
        return "_|_"
    if isinstance(f, Verum):
        return "#t"
    if isinstance(f, Not):
        return "-" + _wrap(f.body, 4)
    if isinstance(f, Implies):
        return f"{_wrap(f.left, 2)} -> {_wrap(f.right, 1)}"
    if isinstance(f, Or):
        return f"{_wrap(f.left, 2)} | {_wrap(f.right, 3)}"
    if isinstance(f, And):
        return f"{_wrap(f.left, 3)} & {_wrap(f.right, 4)}"
    raise TypeError(f"not a formula: {f!r}")


def _wrap(f: Formula, min_level: int) -> str:
    s = render_formula(f)
    return s if _level(f) >= min_level else f"({s})"


def render_rule(r: Rule) -> str:
    head = " | ".join(r.heads)
    body = ", ".join([*r.pos_body, *(f"not {a}" for a in r.neg_body)])
    if not body:
        return f"{head}." if head else ":- ."
    return f"{head} :- {body}." if head else f":- {body}."


def render_program(p: Program) -> str:
    return "".join(render_rule(r) + "\n" for r in p.rules)
