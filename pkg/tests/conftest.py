import itertools

import pytest

from vivipar.formula import Formula, normalize_clause


def mk_formula(num_vars, clauses):
    """Formula from raw literal lists (normalized)."""
    normed = []
    for c in clauses:
        n = normalize_clause(c)
        if n is not None and n != ():
            normed.append(n)
    return Formula(num_vars=num_vars, clauses=tuple(normed))


def php(pigeons, holes):
    """Pigeonhole formula PHP(p, h): UNSAT iff p > h.

    Variable (i, j) -> pigeon i sits in hole j, numbered i*holes + j + 1.
    """
    def v(i, j):
        return i * holes + j + 1

    clauses = [[v(i, j) for j in range(holes)] for i in range(pigeons)]
    for j in range(holes):
        for i1, i2 in itertools.combinations(range(pigeons), 2):
            clauses.append([-v(i1, j), -v(i2, j)])
    return mk_formula(pigeons * holes, clauses)


class EventLog:
    """Duck-typed recorder collecting strategy/exchange/engine events in order."""

    def __init__(self):
        self.events = []

    def on_learn(self, worker, clause):
        self.events.append(("learn", worker, clause.cid, clause.lbd,
                            tuple(clause.lits)))

    def on_withhold(self, worker, clause):
        self.events.append(("withhold", worker, clause.cid))

    def on_export(self, worker, clause, lits, lbd):
        self.events.append(("export", worker, clause.cid, tuple(lits), lbd,
                            clause.vivify_attempted))

    def on_vivify(self, worker, clause, outcome):
        self.events.append(("vivify", worker, clause.cid, outcome.kind))

    def on_replace(self, worker, old_lits, new_lits):
        self.events.append(("replace", worker, tuple(old_lits), tuple(new_lits)))

    def on_reduce_remove(self, worker, clause):
        self.events.append(("reduce_remove", worker, clause.cid, clause.protected))

    def on_publish(self, worker, lits):
        self.events.append(("publish", worker, tuple(lits)))

    def on_adopt(self, worker, old_lits, new_lits):
        self.events.append(("adopt", worker, tuple(old_lits), tuple(new_lits)))

    def of_kind(self, kind):
        return [e for e in self.events if e[0] == kind]


@pytest.fixture
def event_log():
    return EventLog()
