"""Hot loops of HT model enumeration, with backend selection at import.

The Cython extension ``_ckernel`` is used when it has been built; otherwise
the pure-Python ``_pykernel`` is loaded.  Setting ``EQLOG_PURE_PYTHON=1``
forces the fallback.  Both expose the same functions over postfix code
produced by :func:`compile_formula`.
"""
from __future__ import annotations

import os
from typing import Iterable

from ..syntax import And, Atom, Falsum, Formula, Implies, Not, Or, Verum, Vocabulary
from . import _pykernel
from ._pykernel import AND, BOT, IMP, NOT, OR, TOP

if os.environ.get("EQLOG_PURE_PYTHON"):
    _backend = _pykernel
    BACKEND = "python"
else:
    try:
        from . import _ckernel as _backend
        BACKEND = "cython"
    except ImportError:
        _backend = _pykernel
        BACKEND = "python"

value = _backend.value
ht_models = _backend.ht_models
equilibria = _backend.equilibria
countermodel = _backend.countermodel
expansions_satisfy = _backend.expansions_satisfy
prepare = _backend.prepare


def available_backends() -> dict:
    """Name -> module for every backend importable in this environment."""
    out = {"python": _pykernel}
    try:
        from . import _ckernel
        out["cython"] = _ckernel
    except ImportError:
        pass
    return out


def compile_formula(f: Formula, vocab: Vocabulary, out: list | None = None) -> list[int]:
    """Postfix code for ``f``; atoms become their bit index in ``vocab``."""
    index = vocab.index()
    code = [] if out is None else out
    stack = [(f, False)]
    # iterative post-order walk, formulas can be deep
    while stack:
        node, done = stack.pop()
        if isinstance(node, Atom):
            try:
                code.append(index[node.name])
            except KeyError:
                from ..errors import VocabularyError
                raise VocabularyError(f"atom {node.name!r} not in {vocab!r}") from None
        elif isinstance(node, Falsum):
            code.append(BOT)
        elif isinstance(node, Verum):
            code.append(TOP)
        elif done:
            code.append(_OPS[type(node)])
        elif isinstance(node, Not):
            stack.append((node, True))
            stack.append((node.body, False))
        else:
            stack.append((node, True))
            stack.append((node.right, False))
            stack.append((node.left, False))
    return code


_OPS = {And: AND, Or: OR, Implies: IMP, Not: NOT}


def compile_theory(formulas: Iterable[Formula], vocab: Vocabulary) -> list[int]:
    """Code for the conjunction of ``formulas`` (``#t`` when empty)."""
    code: list[int] = []
    first = True
    for f in formulas:
        compile_formula(f, vocab, code)
        if not first:
            code.append(AND)
        first = False
    if first:
        code.append(TOP)
    return code
