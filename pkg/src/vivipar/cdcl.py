"""Sequential CDCL engine: one instance per portfolio worker.

Two-watched-literal propagation, first-UIP conflict analysis with recursive
minimization, VSIDS branching with phase saving, dynamic-LBD or Luby
restarts, and activity/LBD-based database reduction with protection flags.

Watched literals live in clause positions 0 and 1.  A clause that propagates
always has the implied literal at position 0, so ``reason[v].lits[0]`` is the
literal the clause forced.  Imported clauses with a weak LBD are kept on a
single watch (lazy standby): they can still raise conflicts but never
propagate, which is sound because they are implied by the input formula.
"""

from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass

from .formula import Clause, check_meta
from .stats import Stats

SAT = "SAT"
UNSAT = "UNSAT"
UNKNOWN = "UNKNOWN"

# Imported clauses at least this strong are two-watched immediately;
# weaker ones go on the one-watch standby.
IMPORT_TWO_WATCH_LBD = 4


def luby(i):
    """i-th element (1-indexed) of the Luby sequence 1,1,2,1,1,2,4,..."""
    assert i >= 1
    while True:
        k = i.bit_length()
        if i == (1 << k) - 1:
            return 1 << (k - 1)
        i -= (1 << (k - 1)) - 1


@dataclass
class RestartPolicy:
    kind: str = "dynamic"  # "dynamic" or "luby"
    window: int = 50
    k: float = 0.8
    luby_unit: int = 100


def should_restart(policy, recent_lbds, global_lbd_mean, conflicts_since_restart,
                   restart_index):
    """Restart decision.

    Dynamic mode fires when the sliding window is full and its mean LBD
    exceeds ``k`` times the global mean.  Luby mode fires when the conflicts
    since the last restart reach ``luby_unit * luby(restart_index)``.
    """
    if policy.kind == "luby":
        return conflicts_since_restart >= policy.luby_unit * luby(restart_index)
    if len(recent_lbds) < policy.window:
        return False
    window_mean = sum(recent_lbds) / len(recent_lbds)
    return window_mean > policy.k * global_lbd_mean


@dataclass
class EngineConfig:
    restart_kind: str = "dynamic"
    restart_window: int = 50
    restart_k: float = 0.8
    luby_unit: int = 100
    var_decay: float = 0.95
    clause_decay: float = 0.999
    phase_init: bool = False
    reduce_first: int = 2000
    reduce_inc: int = 300
    vivify_budget: int = 1_000_000
    seed: int = 0
    debug_checks: bool = False


class Engine:
    """A single CDCL solver over an immutable Formula.

    Owned by exactly one worker; all cross-worker traffic goes through the
    ``pool`` (see the exchange module).  ``hooks`` is the strategy object
    driving vivification and exports; without hooks the engine behaves as a
    plain baseline solver.
    """

    def __init__(self, formula, config=None, stats=None, pool=None, worker_id=0,
                 recorder=None):
        self.formula = formula
        self.cfg = config or EngineConfig()
        self.stats = stats if stats is not None else Stats()
        self.pool = pool
        self.worker_id = worker_id
        self.recorder = recorder
        self.hooks = None
        self.trace = None  # optional list of ("d",lit)/("c",lbd)/("r",) events

        n = formula.num_vars
        self.num_vars = n
        # litval is indexed by lit+n: 1 true, -1 false, 0 unassigned
        self.litval = [0] * (2 * n + 1)
        self.level = [0] * (n + 1)
        self.reason = [None] * (n + 1)
        self.trail = []
        self.trail_lim = []
        self.qhead = 0
        self.decision_level = 0
        self.seen = bytearray(n + 1)

        self.activity = [0.0] * (n + 1)
        self.var_inc = 1.0
        self.cla_inc = 1.0
        self.saved_phase = [self.cfg.phase_init] * (n + 1)
        self.decisions = 0

        self.restart_policy = RestartPolicy(
            kind=self.cfg.restart_kind, window=self.cfg.restart_window,
            k=self.cfg.restart_k, luby_unit=self.cfg.luby_unit)
        self.lbd_window = deque(maxlen=self.cfg.restart_window)
        self._lbd_sum = 0
        self._since_restart = 0

        self.next_reduce = self.cfg.reduce_first
        self._reduces_done = 0

        self.watches = [[] for _ in range(2 * n + 1)]
        self.watches_one = [[] for _ in range(2 * n + 1)]
        self.originals = []
        self.learned_db = []
        self._cid = 0
        self._terminal = None
        self._attach_conflict = None

        self._in_vivify = False
        self._vivify_props = 0
        self._probe_moves = []

        if formula.contains_empty:
            self._terminal = UNSAT
        for lits in formula.clauses:
            if len(lits) == 1:
                l = lits[0]
                if not self._enqueue(l, None):
                    # contradictory input units surface as a level-0 conflict
                    self._attach_conflict = Clause([l], lbd=1)
            else:
                self._cid += 1
                c = Clause(lits, lbd=1, cid=self._cid)
                self.originals.append(c)
                self._attach(c)

    # ------------------------------------------------------------------
    # assignment and watches

    def value(self, lit):
        return self.litval[lit + self.num_vars]

    def _enqueue(self, lit, reason_clause):
        n = self.num_vars
        val = self.litval[lit + n]
        if val != 0:
            return val == 1
        v = lit if lit > 0 else -lit
        self.litval[lit + n] = 1
        self.litval[-lit + n] = -1
        self.level[v] = self.decision_level
        self.reason[v] = reason_clause
        self.trail.append(lit)
        return True

    def assume(self, lit):
        """Open a new decision level and assign ``lit`` as a decision."""
        self.trail_lim.append(len(self.trail))
        self.decision_level += 1
        ok = self._enqueue(lit, None)
        assert ok, "assumed an already-falsified literal"

    def backtrack(self, blevel):
        """Undo all assignments above ``blevel``."""
        if self.decision_level <= blevel:
            return
        n = self.num_vars
        litval = self.litval
        trail = self.trail
        mark = self.trail_lim[blevel]
        save_phase = not self._in_vivify
        for i in range(len(trail) - 1, mark - 1, -1):
            lit = trail[i]
            v = lit if lit > 0 else -lit
            litval[lit + n] = 0
            litval[-lit + n] = 0
            self.reason[v] = None
            if save_phase:
                self.saved_phase[v] = lit > 0
        del trail[mark:]
        del self.trail_lim[blevel:]
        self.qhead = mark
        self.decision_level = blevel

    def _attach(self, c):
        n = self.num_vars
        self.watches[c.lits[0] + n].append(c)
        self.watches[c.lits[1] + n].append(c)

    def _attach_one(self, c, wlit):
        c.one_watched = True
        self.watches_one[wlit + self.num_vars].append(c)

    def _detach(self, c):
        n = self.num_vars
        if c.one_watched:
            for l in c.lits:
                wl = self.watches_one[l + n]
                if c in wl:
                    wl.remove(c)
                    return
            raise AssertionError("one-watched clause not found in any watch list")
        self.watches[c.lits[0] + n].remove(c)
        self.watches[c.lits[1] + n].remove(c)

    def undo_probe_moves(self):
        """Roll back every watch move made during a vivification probe.

        Replayed in reverse, so each clause's literal swaps unwind in order.
        Net effect: the set of clauses watching each literal and every
        clause's watched positions are exactly as before the probe (order
        within a watch list may differ, which carries no meaning).
        """
        watches = self.watches
        watches_one = self.watches_one
        n = self.num_vars
        for entry in reversed(self._probe_moves):
            tag = entry[0]
            if tag == "m":
                _, c, k, src = entry
                watches[c.lits[1] + n].remove(c)
                c.lits[1], c.lits[k] = c.lits[k], c.lits[1]
                watches[src].append(c)
            elif tag == "n":
                c = entry[1]
                c.lits[0], c.lits[1] = c.lits[1], c.lits[0]
            else:  # "o": one-watch relocation
                _, c, src, tgt = entry
                watches_one[tgt].remove(c)
                watches_one[src].append(c)
        self._probe_moves.clear()

    # ------------------------------------------------------------------
    # propagation

    def propagate(self):
        """Boolean constraint propagation to fixpoint.

        Returns the conflicting clause, or None.  Every processed trail
        literal counts as one propagation, attributed to vivification when
        running inside a vivification probe.
        """
        if self._attach_conflict is not None:
            c = self._attach_conflict
            return c
        n = self.num_vars
        litval = self.litval
        watches = self.watches
        watches_one = self.watches_one
        trail = self.trail
        level = self.level
        reason = self.reason
        dl = self.decision_level
        moves = self._probe_moves if self._in_vivify else None
        confl = None
        nprops = 0
        qhead = self.qhead
        while qhead < len(trail):
            p = trail[qhead]
            qhead += 1
            nprops += 1
            fidx = n - p  # index of the falsified literal -p
            wl = watches[fidx]
            i = j = 0
            end = len(wl)
            while i < end:
                c = wl[i]
                i += 1
                lits = c.lits
                if lits[0] == -p:
                    lits[0] = lits[1]
                    lits[1] = -p
                    if moves is not None:
                        moves.append(("n", c))
                first = lits[0]
                if litval[first + n] == 1:
                    wl[j] = c
                    j += 1
                    continue
                swapped = False
                for k in range(2, len(lits)):
                    lk = lits[k]
                    if litval[lk + n] != -1:
                        lits[1] = lk
                        lits[k] = -p
                        watches[lk + n].append(c)
                        if moves is not None:
                            moves.append(("m", c, k, fidx))
                        swapped = True
                        break
                if swapped:
                    continue
                wl[j] = c
                j += 1
                if litval[first + n] == -1:
                    while i < end:
                        wl[j] = wl[i]
                        j += 1
                        i += 1
                    confl = c
                    break
                # unit: lits[0] is implied
                litval[first + n] = 1
                litval[n - first] = -1
                v = first if first > 0 else -first
                level[v] = dl
                reason[v] = c
                trail.append(first)
            del wl[j:]
            if confl is not None:
                break
            # one-watch standby list: moves watches, detects full conflicts,
            # never propagates
            ol = watches_one[fidx]
            if ol:
                i = j = 0
                end = len(ol)
                while i < end:
                    c = ol[i]
                    i += 1
                    moved = False
                    for lk in c.lits:
                        if lk != -p and litval[lk + n] != -1:
                            watches_one[lk + n].append(c)
                            if moves is not None:
                                moves.append(("o", c, fidx, lk + n))
                            moved = True
                            break
                    if moved:
                        continue
                    ol[j] = c
                    j += 1
                    if confl is None:
                        confl = c
                while i < end:
                    ol[j] = ol[i]
                    j += 1
                    i += 1
                del ol[j:]
                if confl is not None:
                    break
        self.qhead = qhead
        self.stats.propagations_total += nprops
        if self._in_vivify:
            self.stats.propagations_vivify += nprops
            self._vivify_props += nprops
        return confl

    # ------------------------------------------------------------------
    # conflict analysis

    def compute_lbd(self, lits):
        """Number of distinct decision levels among the (assigned) literals."""
        level = self.level
        return max(1, len({level[l if l > 0 else -l] for l in lits}))

    def analyze_conflict(self, confl, bump=True):
        """First-UIP analysis with recursive minimization.

        Returns (learned literals, backtrack level, lbd).  The asserting
        literal is at position 0 and the highest remaining level at position
        1.  ``bump=False`` suppresses all heuristic updates so vivification
        probes leave VSIDS and clause activities untouched.
        """
        n = self.num_vars
        seen = self.seen
        trail = self.trail
        level = self.level
        reason = self.reason
        cur = self.decision_level
        learnt = [0]
        to_clear = []
        pathc = 0
        p = 0
        idx = len(trail) - 1
        c = confl
        while True:
            if bump and c.learned:
                self._bump_clause(c)
                if c.lbd > 2:
                    tightened = self.compute_lbd(c.lits)
                    if tightened < c.lbd:
                        c.lbd = tightened
            for qi in range(0 if p == 0 else 1, len(c.lits)):
                q = c.lits[qi]
                v = q if q > 0 else -q
                if not seen[v] and level[v] > 0:
                    seen[v] = 1
                    to_clear.append(v)
                    if bump:
                        self._bump_var(v)
                    if level[v] >= cur:
                        pathc += 1
                    else:
                        learnt.append(q)
            while True:
                p = trail[idx]
                idx -= 1
                pv = p if p > 0 else -p
                if seen[pv]:
                    break
            pathc -= 1
            if pathc <= 0:
                break
            c = reason[pv]
            seen[pv] = 0
        learnt[0] = -p
        for v in to_clear:
            seen[v] = 0

        learnt = self.minimize_learned(learnt)
        if self.cfg.debug_checks:
            assert all(self.value(l) == -1 for l in learnt), \
                "learned clause not falsified at the conflict level"

        if len(learnt) == 1:
            blevel = 0
        else:
            mi = 1
            for i in range(2, len(learnt)):
                if level[abs(learnt[i])] > level[abs(learnt[mi])]:
                    mi = i
            learnt[1], learnt[mi] = learnt[mi], learnt[1]
            blevel = level[abs(learnt[1])]
        lbd = self.compute_lbd(learnt)
        return learnt, blevel, lbd

    def minimize_learned(self, lits):
        """Remove literals made redundant by the implication graph.

        ``lits[0]`` (the asserting literal) is always retained; any removed
        literal is implied false by the negation of the remaining clause.
        """
        if len(lits) <= 1:
            return lits
        seen = self.seen
        reason = self.reason
        level = self.level
        to_clear = []
        for q in lits:
            v = abs(q)
            seen[v] = 1
            to_clear.append(v)
        clause_levels = {level[abs(q)] for q in lits[1:]}
        kept = [lits[0]]
        for q in lits[1:]:
            if reason[abs(q)] is None or not self._lit_redundant(q, clause_levels, to_clear):
                kept.append(q)
        for v in to_clear:
            seen[v] = 0
        return kept

    def _lit_redundant(self, lit, clause_levels, to_clear):
        seen = self.seen
        reason = self.reason
        level = self.level
        stack = [lit]
        top = len(to_clear)
        while stack:
            c = reason[abs(stack.pop())]
            for l in c.lits[1:]:
                v = abs(l)
                if not seen[v] and level[v] > 0:
                    if reason[v] is not None and level[v] in clause_levels:
                        seen[v] = 1
                        to_clear.append(v)
                        stack.append(l)
                    else:
                        for w in to_clear[top:]:
                            seen[w] = 0
                        del to_clear[top:]
                        return False
        return True

    # ------------------------------------------------------------------
    # heuristics

    def _bump_var(self, v):
        act = self.activity
        act[v] += self.var_inc
        if act[v] > 1e100:
            for i in range(1, self.num_vars + 1):
                act[i] *= 1e-100
            self.var_inc *= 1e-100

    def _bump_clause(self, c):
        c.activity += self.cla_inc
        if c.activity > 1e20:
            for cl in self.learned_db:
                cl.activity *= 1e-20
            self.cla_inc *= 1e-20

    def _decay(self):
        self.var_inc /= self.cfg.var_decay
        self.cla_inc /= self.cfg.clause_decay

    def decide(self):
        """Pick the unassigned variable of maximal activity (ties: lowest
        index) with its saved phase; None when all variables are assigned."""
        n = self.num_vars
        if len(self.trail) == n:
            return None
        litval = self.litval
        act = self.activity
        best = 0
        best_a = -1.0
        for v in range(1, n + 1):
            if litval[v + n] == 0 and act[v] > best_a:
                best = v
                best_a = act[v]
        self.decisions += 1
        return best if self.saved_phase[best] else -best

    # ------------------------------------------------------------------
    # clause lifecycle

    def _learn(self, lits, lbd):
        self.stats.clauses_learned += 1
        self._cid += 1
        c = Clause(lits, lbd=lbd, learned=True, cid=self._cid)
        c.activity = self.cla_inc
        if len(lits) >= 2:
            # unit lemmas are enqueued at level 0 and never stored
            self.learned_db.append(c)
            self._attach(c)
        if self.cfg.debug_checks:
            assert all(self.value(l) == -1 for l in lits[1:]), "learned clause not asserting"
            assert self.value(lits[0]) == 0, "asserting literal already assigned"
            check_meta(c)
        self._enqueue(lits[0], c if len(lits) >= 2 else None)
        return c

    def locked(self, c):
        """True iff the clause is the reason of its implied literal."""
        l0 = c.lits[0]
        return self.litval[l0 + self.num_vars] == 1 and self.reason[abs(l0)] is c

    def reduce_db(self):
        """Glucose-style halving of the removable learned clauses.

        Reasons on the trail, binary clauses, and protected clauses always
        survive.  The removable rest is sorted worst-first (high LBD, then
        low activity) and the worst half is dropped.
        """
        removable = [c for c in self.learned_db
                     if len(c.lits) > 2 and not c.protected
                     and not c.removed and not self.locked(c)]
        removable.sort(key=lambda c: (-c.lbd, c.activity))
        ndel = len(removable) // 2
        for c in removable[:ndel]:
            self._detach(c)
            c.removed = True
            if self.recorder is not None:
                self.recorder.on_reduce_remove(self.worker_id, c)
        self.learned_db = [c for c in self.learned_db if not c.removed]
        self.stats.reductions += 1
        self._reduces_done += 1
        self.next_reduce = (self.stats.conflicts + self.cfg.reduce_first
                            + self.cfg.reduce_inc * self._reduces_done)
        return ndel

    def replace_clause(self, old, new_lits, new_lbd):
        """Swap ``old`` for a strictly stronger clause, at decision level 0.

        Returns the new attached Clause, or None when the replacement
        dissolved (satisfied at level 0, enqueued as a unit, or derived a
        level-0 conflict, which marks the engine UNSAT).
        """
        assert self.decision_level == 0
        n = self.num_vars
        litval = self.litval
        self._detach(old)
        old.removed = True
        v0 = abs(old.lits[0])
        if self.reason[v0] is old:  # level-0 reasons may dangle otherwise
            self.reason[v0] = None
        if any(litval[l + n] == 1 for l in new_lits):
            return None
        nonfalse = [l for l in new_lits if litval[l + n] == 0]
        if not nonfalse:
            self._terminal = UNSAT
            return None
        if len(nonfalse) == 1:
            if not self._enqueue(nonfalse[0], None) or self.propagate() is not None:
                self._terminal = UNSAT
            return None
        ordered = list(new_lits)
        i0 = ordered.index(nonfalse[0])
        ordered[0], ordered[i0] = ordered[i0], ordered[0]
        i1 = ordered.index(nonfalse[1])
        ordered[1], ordered[i1] = ordered[i1], ordered[1]
        self._cid += 1
        c = Clause(ordered, lbd=max(1, min(new_lbd, len(ordered))),
                   learned=old.learned, imported=old.imported, cid=self._cid)
        c.activity = old.activity
        c.vivify_attempted = old.vivify_attempted
        c.protected = old.protected
        self.learned_db.append(c)
        self._attach(c)
        if self.cfg.debug_checks:
            check_meta(c)
        return c

    def remove_clause(self, c):
        """Detach and drop a clause (e.g. satisfied at level 0)."""
        self._detach(c)
        c.removed = True
        v0 = abs(c.lits[0])
        if self.reason[v0] is c:
            self.reason[v0] = None

    # ------------------------------------------------------------------
    # clause import

    def _integrate_imports(self):
        """Drain the inbound share buffer at decision level 0.

        Satisfied records are dropped; units are enqueued; the rest are
        watched according to the lazy-import policy.  Returns the number of
        records integrated (level-0 conflicts mark the engine UNSAT).
        """
        records = self.pool.drain(self.worker_id)
        if not records:
            return 0
        n = self.num_vars
        litval = self.litval
        count = 0
        for rec in records:
            lits = list(rec.lits)
            if any(litval[l + n] == 1 for l in lits):
                continue
            nonfalse = [l for l in lits if litval[l + n] == 0]
            if not nonfalse:
                self._terminal = UNSAT
                return count
            self.stats.clauses_imported += 1
            count += 1
            if len(nonfalse) == 1:
                if not self._enqueue(nonfalse[0], None) or self.propagate() is not None:
                    self._terminal = UNSAT
                    return count
                continue
            self._cid += 1
            lbd = max(1, min(rec.lbd, len(lits)))
            c = Clause(lits, lbd=lbd, learned=True, imported=True, cid=self._cid)
            c.link = rec.link
            self.learned_db.append(c)
            # the watch policy keys on the exporter's claimed LBD
            if rec.lbd < IMPORT_TWO_WATCH_LBD:
                i0 = lits.index(nonfalse[0])
                lits[0], lits[i0] = lits[i0], lits[0]
                i1 = lits.index(nonfalse[1])
                lits[1], lits[i1] = lits[i1], lits[1]
                self._attach(c)
            else:
                self._attach_one(c, nonfalse[0])
        return count

    # ------------------------------------------------------------------
    # search

    def _restart_due(self):
        conflicts = self.stats.conflicts
        if conflicts == 0 or self._since_restart == 0:
            return False
        mean = self._lbd_sum / conflicts
        return should_restart(self.restart_policy, self.lbd_window, mean,
                              self._since_restart, self.stats.restarts + 1)

    def step(self, pause_after=None, stop=None, deadline=None, conflict_limit=None):
        """Run the search loop.

        Returns SAT/UNSAT on a definitive answer, UNKNOWN when the stop
        signal, deadline, or conflict limit fires, and None when
        ``pause_after`` conflicts elapsed in this step (resumable).
        """
        if self._terminal is not None:
            return self._terminal
        stats = self.stats
        start_conflicts = stats.conflicts
        while True:
            confl = self.propagate()
            if confl is not None:
                if self.decision_level == 0:
                    self._terminal = UNSAT
                    return UNSAT
                stats.conflicts += 1
                self._since_restart += 1
                lits, blevel, lbd = self.analyze_conflict(confl)
                self.backtrack(blevel)
                c = self._learn(lits, lbd)
                self.lbd_window.append(lbd)
                self._lbd_sum += lbd
                self._decay()
                if self.trace is not None:
                    self.trace.append(("c", lbd))
                if self.hooks is not None:
                    self.hooks.on_learn(c)
                continue
            if self._terminal is not None:
                return self._terminal
            if self.decision_level == 0:
                if self.pool is not None and self._integrate_imports():
                    if self._terminal is not None:
                        return self._terminal
                    continue
                if self._terminal is not None:
                    return self._terminal
                if self.hooks is not None:
                    self.hooks.on_level_zero()
                    if self._terminal is not None:
                        return self._terminal
                    if self.qhead < len(self.trail):
                        continue
            if self._restart_due():
                stats.restarts += 1
                self._since_restart = 0
                self.lbd_window.clear()
                self.backtrack(0)
                if self.trace is not None:
                    self.trace.append(("r",))
                if self.hooks is not None:
                    self.hooks.on_restart()
                    if self._terminal is not None:
                        return self._terminal
                continue
            if stats.conflicts >= self.next_reduce and not (
                    self.hooks is not None and self.hooks.reduce_pending):
                if self.hooks is not None:
                    self.hooks.before_reduce()
                    if self._terminal is not None:
                        return self._terminal
                else:
                    self.reduce_db()
                continue
            if stop is not None and stop.is_set():
                return UNKNOWN
            if conflict_limit is not None and stats.conflicts >= conflict_limit:
                return UNKNOWN
            if deadline is not None and time.monotonic() >= deadline:
                return UNKNOWN
            if pause_after is not None and stats.conflicts - start_conflicts >= pause_after:
                return None
            lit = self.decide()
            if lit is None:
                self._terminal = SAT
                return SAT
            if self.trace is not None:
                self.trace.append(("d", lit))
            self.assume(lit)

    def solve(self, stop=None, deadline=None, conflict_limit=None):
        """Run to completion or budget; returns SAT/UNSAT/UNKNOWN."""
        return self.step(pause_after=None, stop=stop, deadline=deadline,
                         conflict_limit=conflict_limit)

    def model(self):
        """The satisfying assignment as signed literals, one per variable."""
        n = self.num_vars
        litval = self.litval
        return [v if litval[v + n] == 1 else -v for v in range(1, n + 1)]

    # ------------------------------------------------------------------
    # debug helpers

    def check_watches(self):
        """Assert the watched-literal invariants (slow; debug only)."""
        n = self.num_vars
        live = [c for c in self.originals + self.learned_db
                if not c.removed and len(c.lits) >= 2]
        for c in live:
            if c.one_watched:
                hits = sum(1 for l in c.lits if c in self.watches_one[l + n])
                assert hits == 1, f"one-watched {c!r} on {hits} lists"
            else:
                assert c in self.watches[c.lits[0] + n], f"{c!r} missing watch 0"
                assert c in self.watches[c.lits[1] + n], f"{c!r} missing watch 1"
                if self.qhead == len(self.trail):
                    v0, v1 = self.value(c.lits[0]), self.value(c.lits[1])
                    assert not (v0 == -1 and v1 == -1), f"{c!r} has two false watches"
                    if v1 == -1:
                        assert v0 == 1, f"{c!r} false watch without satisfied partner"
        for idx, wl in enumerate(self.watches):
            for c in wl:
                lit = idx - n
                assert lit in (c.lits[0], c.lits[1]), f"stale watch entry for {c!r}"
                assert not c.removed, f"removed clause {c!r} still watched"
        return True
