"""Clause vivification: strengthen a clause by assuming its literals false.

At decision level 0, the negation of each literal is assumed in clause order
and propagated.  Three things can happen:

* a conflict: the first-UIP clause derived over the assumption levels
  replaces the original (kept only when strictly shorter);
* some literal of the clause turns out true under the assumptions: the
  clause shrinks to the processed prefix plus that literal;
* a literal is already false without having been assumed: it is dropped.

The probe leaves the engine exactly as it found it: the clause is detached
while probing so it cannot propagate against itself, heuristic bumps are
suppressed, phases are not saved, and every watch move is rolled back.
Only the propagation counters survive.
"""

from __future__ import annotations

from dataclasses import dataclass

UNCHANGED = "unchanged"
SHORTENED = "shortened"
CONFLICT_REPLACED = "conflict_replaced"
SATISFIED = "satisfied"


@dataclass(frozen=True)
class VivifyOutcome:
    kind: str
    new_lits: tuple | None = None
    propagations_used: int = 0
    new_lbd: int | None = None

    @property
    def success(self):
        return self.kind in (SHORTENED, CONFLICT_REPLACED)


@dataclass(frozen=True)
class CandidatePolicy:
    """Which learned clauses are worth vivifying: the lowest-LBD half of the
    database, capped at max_lbd, each clause tried at most once."""
    max_lbd: int = 5
    require_not_attempted: bool = True


def select_candidates(db, policy, exclude_imported=True):
    """Rank the learned database by (LBD ascending, activity descending),
    keep the lowest half, then filter by the policy caps."""
    live = [c for c in db if c.learned and not c.removed]
    live.sort(key=lambda c: (c.lbd, -c.activity))
    out = []
    for c in live[:len(live) // 2]:
        if c.lbd > policy.max_lbd:
            continue
        if policy.require_not_attempted and c.vivify_attempted:
            continue
        if exclude_imported and c.imported:
            continue
        out.append(c)
    return out


def satisfied_at_root(engine, clause):
    """True iff some literal of the clause is true at decision level 0."""
    return any(engine.value(l) == 1 for l in clause.lits)


def vivify_clause(engine, clause):
    """Probe one clause at decision level 0 and report the outcome.

    Preconditions: no pending propagation, clause attached and not satisfied
    at level 0.  Marks the clause as attempted regardless of the result and
    aborts as Unchanged when the propagation budget runs out.  The database
    is not modified here; pair with `apply_outcome`.
    """
    assert engine.decision_level == 0, "vivification runs at decision level 0 only"
    assert engine.qhead == len(engine.trail), "pending propagation before vivify"
    engine.stats.vivify_attempts += 1
    clause.vivify_attempted = True

    engine._detach(clause)
    engine._in_vivify = True
    engine._vivify_props = 0
    budget = engine.cfg.vivify_budget

    lits = list(clause.lits)
    prefix = []
    result = None
    for l in lits:
        val = engine.value(l)
        if val == 1:
            # propagated true: everything not yet processed is redundant
            kept = prefix + [l]
            if len(kept) < len(lits):
                result = (SHORTENED, kept, None)
            else:
                result = (UNCHANGED, None, None)
            break
        if val == -1:
            # non-decisionally false (we never assumed this literal): drop it
            continue
        engine.assume(-l)
        confl = engine.propagate()
        if engine._vivify_props > budget:
            result = (UNCHANGED, None, None)
            break
        if confl is not None:
            learnt, _blevel, lbd = engine.analyze_conflict(confl, bump=False)
            if len(learnt) < len(lits):
                result = (CONFLICT_REPLACED, learnt, lbd)
            else:
                result = (UNCHANGED, None, None)
            break
        prefix.append(l)

    engine.backtrack(0)
    engine._in_vivify = False
    engine.undo_probe_moves()
    engine._attach(clause)
    props = engine._vivify_props

    if result is None:
        if len(prefix) < len(lits):
            result = (SHORTENED, prefix, None)
        else:
            result = (UNCHANGED, None, None)
    kind, new, lbd = result
    new_lits = tuple(new) if new is not None else None
    if new_lits is not None:
        assert len(new_lits) < len(lits), "vivification must strictly shorten"
    return VivifyOutcome(kind, new_lits, props, lbd)


def apply_outcome(engine, clause, outcome, recorder=None):
    """Fold a vivification outcome back into the database.

    Returns the surviving clause (the original for Unchanged, the
    replacement for a success) or None when the clause dissolved: removed as
    satisfied, shrunk to a level-0 unit, or refuted (engine goes UNSAT).
    The replacement's LBD is recomputed conservatively, capped at the old
    value (its literals are unassigned at level 0, so the conflict-analysis
    LBD or the new length is the best available bound).
    """
    if outcome.kind == SATISFIED:
        engine.remove_clause(clause)
        return None
    if outcome.kind == UNCHANGED:
        return clause
    engine.stats.vivify_successes += 1
    engine.stats.literals_removed += len(clause.lits) - len(outcome.new_lits)
    if recorder is not None:
        recorder.on_replace(engine.worker_id, tuple(clause.lits), outcome.new_lits)
    new_lbd = min(clause.lbd, len(outcome.new_lits))
    if outcome.kind == CONFLICT_REPLACED and outcome.new_lbd is not None:
        new_lbd = min(new_lbd, outcome.new_lbd)
    return engine.replace_clause(clause, list(outcome.new_lits), max(1, new_lbd))
