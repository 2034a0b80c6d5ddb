"""Exhaustive-enumeration SAT oracle for tests and soundness checks.

Enumerates all 2^n assignments, 64 at a time: each uint64 word packs the
64 assignments of variables 1..6, and the word's index in the array fixes
variables 7..n.  That keeps a full scan at n = 25 under half a second while
remaining a genuinely exhaustive, solver-independent check.

Capped at 25 variables; anything larger raises TooLarge.
"""

from __future__ import annotations

import numpy as np

MAX_ORACLE_VARS = 25

_PACK_BITS = 6  # variables 1..6 live inside each 64-bit word

# _INNER[v-1]: bit i of the pattern is set iff variable v is true in the
# low-6-bit assignment i.
_INNER = np.array([
    0xAAAAAAAAAAAAAAAA,
    0xCCCCCCCCCCCCCCCC,
    0xF0F0F0F0F0F0F0F0,
    0xFF00FF00FF00FF00,
    0xFFFF0000FFFF0000,
    0xFFFFFFFF00000000,
], dtype=np.uint64)

_FULL = np.uint64(0xFFFFFFFFFFFFFFFF)
_ZERO = np.uint64(0)


class TooLarge(Exception):
    """Instance exceeds the exhaustive-enumeration variable cap."""


def _first_model(words, base, num_vars):
    """Decode the lowest satisfying assignment from a block of live words."""
    idx = int(np.flatnonzero(words)[0])
    word = int(words[idx])
    bit = (word & -word).bit_length() - 1
    assignment = ((base + idx) << _PACK_BITS) | bit
    return [v if (assignment >> (v - 1)) & 1 else -v for v in range(1, num_vars + 1)]


def satisfiable(num_vars, clauses, chunk_words=1 << 15):
    """Return a satisfying model (list of signed literals) or None.

    ``clauses`` is any iterable of literal sequences.  Exhaustive over all
    2^num_vars assignments.
    """
    if num_vars > MAX_ORACLE_VARS:
        raise TooLarge(f"{num_vars} variables exceeds oracle cap {MAX_ORACLE_VARS}")
    clauses = [tuple(c) for c in clauses]
    if any(len(c) == 0 for c in clauses):
        return None
    num_vars = max(1, num_vars)

    n_outer = 1 << max(0, num_vars - _PACK_BITS)
    if num_vars >= _PACK_BITS:
        init = _FULL
    else:
        init = np.uint64((1 << (1 << num_vars)) - 1)

    for base in range(0, n_outer, chunk_words):
        count = min(chunk_words, n_outer - base)
        outer = np.arange(base, base + count, dtype=np.uint64)
        alive = np.full(count, init, dtype=np.uint64)
        for clause in clauses:
            mask = np.zeros(count, dtype=np.uint64)
            for lit in clause:
                v = abs(lit)
                if v <= _PACK_BITS:
                    pat = _INNER[v - 1] if lit > 0 else ~_INNER[v - 1]
                    mask |= pat
                else:
                    on = (outer >> np.uint64(v - 1 - _PACK_BITS)) & np.uint64(1)
                    if lit > 0:
                        mask |= np.where(on == 1, _FULL, _ZERO)
                    else:
                        mask |= np.where(on == 1, _ZERO, _FULL)
            alive &= mask
            if not alive.any():
                break
        else:
            return _first_model(alive, base, num_vars)
    return None


def brute_force(formula):
    """Exhaustively solve a Formula: returns ("SAT", model) or ("UNSAT", None)."""
    if formula.num_vars > MAX_ORACLE_VARS:
        raise TooLarge(f"{formula.num_vars} variables exceeds oracle cap {MAX_ORACLE_VARS}")
    if formula.contains_empty:
        return "UNSAT", None
    model = satisfiable(formula.num_vars, formula.clauses)
    if model is None:
        return "UNSAT", None
    return "SAT", model


def implied(num_vars, clauses, target):
    """True iff the clause set entails ``target``: conjoin the negation of
    every target literal as a unit and check unsatisfiability."""
    augmented = list(clauses) + [(-l,) for l in target]
    return satisfiable(num_vars, augmented) is None
