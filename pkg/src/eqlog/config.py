"""Enumeration cap: 3**n interpretations are scanned for an n-atom vocabulary."""
from __future__ import annotations

import os
from contextlib import contextmanager

from .errors import VocabularyTooLarge

DEFAULT_MAX_ATOMS = 16
HARD_LIMIT = 62  # bit-vectors are 64-bit in the compiled kernel

_override: int | None = None


def max_atoms() -> int:
    if _override is not None:
        return _override
    env = os.environ.get("EQLOG_MAX_ATOMS")
    return int(env) if env else DEFAULT_MAX_ATOMS


def set_max_atoms(n: int | None) -> None:
    global _override
    if n is not None and not 0 <= n <= HARD_LIMIT:
        raise ValueError(f"max atoms must be in 0..{HARD_LIMIT}")
    _override = n


@contextmanager
def atom_cap(n: int):
    global _override
    old = _override
    set_max_atoms(n)
    try:
        yield
    finally:
        _override = old


def check_size(n: int) -> None:
    cap = max_atoms()
    if n > cap or n > HARD_LIMIT:
        raise VocabularyTooLarge(f"vocabulary has {n} atoms, cap is {cap} (use --max-atoms)")
