"""When vivification runs and how improvements flow: none, PCM, LPCM, ECM.

* none: baseline — learned clauses are exported through the filter, the
  database is reduced on schedule, nothing is vivified.
* PCM: before each database reduction (deferred to decision level 0) the
  most promising own clauses are vivified; improvements stay private.
* LPCM: PCM, plus exported clauses carry link cells; successful
  vivifications are published through them and importers poll the links
  during their own reductions, swapping in improvements.
* ECM: freshly learned clauses with LBD <= ecm_max_lbd are withheld from
  export and protected from reduction; at the next restart they are
  vivified, exported in final form, and unprotected.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from . import exchange
from .vivify import (CandidatePolicy, apply_outcome, satisfied_at_root,
                     select_candidates, vivify_clause)


@dataclass(frozen=True)
class LcmMode:
    kind: str  # "none" | "pcm" | "lpcm" | "ecm"
    ecm_max_lbd: int = 3

    @property
    def label(self):
        if self.kind == "ecm":
            return f"ecm{self.ecm_max_lbd}"
        return self.kind


NONE = LcmMode("none")
PCM = LcmMode("pcm")
LPCM = LcmMode("lpcm")


def ecm(max_lbd=3):
    if max_lbd < 1:
        raise ValueError("ecm_max_lbd must be >= 1")
    return LcmMode("ecm", ecm_max_lbd=max_lbd)


def mode_from_label(label):
    """Inverse of LcmMode.label, e.g. "ecm4" -> LcmMode("ecm", 4)."""
    if label.startswith("ecm") and label != "ecm":
        return ecm(int(label[3:]))
    if label in ("none", "pcm", "lpcm"):
        return LcmMode(label)
    if label == "ecm":
        return ecm()
    raise ValueError(f"unknown lcm mode {label!r}")


class Strategy:
    """Per-worker minimization workflow, installed as the engine's hooks."""

    def __init__(self, mode, engine, pool=None, export_filter=None,
                 policy=None, recorder=None):
        self.mode = mode
        self.engine = engine
        self.pool = pool
        self.filter = export_filter or exchange.ExportFilter()
        self.policy = policy or CandidatePolicy()
        self.recorder = recorder
        self.reduce_pending = False
        self.ecm_withheld = deque()
        engine.hooks = self

    # -- engine hooks --------------------------------------------------

    def on_learn(self, clause):
        """Export the fresh clause, or withhold it under ECM."""
        if len(clause.lits) == 1:
            # a unit cannot shrink; treat it as vacuously vivified so it is
            # shareable immediately even under ECM
            clause.vivify_attempted = True
        if self.recorder is not None:
            self.recorder.on_learn(self.engine.worker_id, clause)
        mode = self.mode
        if (mode.kind == "ecm" and not clause.vivify_attempted
                and clause.lbd <= mode.ecm_max_lbd):
            clause.protected = True
            self.ecm_withheld.append(clause)
            if self.recorder is not None:
                self.recorder.on_withhold(self.engine.worker_id, clause)
            return
        self._export(clause)

    def on_restart(self):
        """The engine just backtracked to level 0 for a restart."""
        if self.mode.kind == "ecm":
            self._flush_withheld()
        elif self.mode.kind in ("pcm", "lpcm") and self.reduce_pending:
            self._vivify_and_reduce()

    def before_reduce(self):
        """The reduction schedule fired."""
        if self.mode.kind in ("pcm", "lpcm"):
            if self.engine.decision_level > 0:
                # vivification needs level 0: defer; deferred firings coalesce
                self.reduce_pending = True
            else:
                self._vivify_and_reduce()
        else:
            self.engine.reduce_db()

    def on_level_zero(self):
        """Quiescent at level 0 (restart or natural backjump)."""
        if self.reduce_pending and self.mode.kind in ("pcm", "lpcm"):
            self._vivify_and_reduce()

    # -- internals -----------------------------------------------------

    def _export(self, clause, lits=None, lbd=None):
        if self.pool is None:
            return False
        return exchange.export(self.pool, self.engine.worker_id, clause,
                               self.filter, self.mode, lits=lits, lbd=lbd,
                               stats=self.engine.stats, recorder=self.recorder)

    def _flush_withheld(self):
        """Vivify every withheld clause, export its final form, unprotect."""
        eng = self.engine
        while self.ecm_withheld:
            c = self.ecm_withheld.popleft()
            c.protected = False
            if c.removed:
                continue
            if satisfied_at_root(eng, c):
                eng.remove_clause(c)
                continue
            out = vivify_clause(eng, c)
            if self.recorder is not None:
                self.recorder.on_vivify(eng.worker_id, c, out)
            if out.success:
                final_lits, final_lbd = out.new_lits, min(c.lbd, len(out.new_lits))
                if out.new_lbd is not None:
                    final_lbd = min(final_lbd, out.new_lbd)
            else:
                final_lits, final_lbd = tuple(c.lits), c.lbd
            apply_outcome(eng, c, out, recorder=self.recorder)
            self._export(c, lits=final_lits, lbd=max(1, final_lbd))
            if eng._terminal is not None:
                return

    def _vivify_and_reduce(self):
        """PCM/LPCM: vivify the candidate set, then reduce the database."""
        self.reduce_pending = False
        eng = self.engine
        candidates = select_candidates(eng.learned_db, self.policy,
                                       exclude_imported=True)
        for c in candidates:
            if c.removed:
                continue
            if satisfied_at_root(eng, c):
                eng.remove_clause(c)
                continue
            link = c.link
            out = vivify_clause(eng, c)
            if self.recorder is not None:
                self.recorder.on_vivify(eng.worker_id, c, out)
            apply_outcome(eng, c, out, recorder=self.recorder)
            if (self.mode.kind == "lpcm" and out.success and link is not None):
                exchange.publish_improvement(link, out.new_lits)
                eng.stats.improvements_published += 1
                if self.recorder is not None:
                    self.recorder.on_publish(eng.worker_id, out.new_lits)
            if eng._terminal is not None:
                return
        if self.mode.kind == "lpcm":
            self._adopt_improvements()
            if eng._terminal is not None:
                return
        eng.reduce_db()

    def _adopt_improvements(self):
        """Poll the links of imported clauses and swap in published
        improvements before reduction scoring."""
        eng = self.engine
        for c in list(eng.learned_db):
            if c.removed or not c.imported or c.link is None:
                continue
            lits = c.link.poll()
            if lits is None:
                continue
            c.link = None  # publications are at-most-once; nothing more comes
            if set(lits) == set(c.lits):
                continue
            eng.stats.improvements_adopted += 1
            if self.recorder is not None:
                self.recorder.on_adopt(eng.worker_id, tuple(c.lits), lits)
            eng.replace_clause(c, list(lits), min(c.lbd, len(lits)))
            if eng._terminal is not None:
                return
