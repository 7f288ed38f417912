"""Checking a law on a model by exhaustive or seeded random assignment search.

Base sorts of the law are instantiated by model objects (fixed model
relations pin the sorts they mention). Each variable ranges over a
:class:`~relcat.spaces.Space` restricted by the one-variable predicates
among the hypotheses; the remaining hypotheses are evaluated as soon as
their variables are bound, so whole subtrees are skipped at once. This is
equivalent to enumerate-then-filter, only faster.
"""
from __future__ import annotations

import itertools
import math
import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .. import relcore as rc
from ..spaces import PREDICATES as REL_PREDICATES
from ..spaces import Space, full_count
from ..structures import Model
from .evaluate import Compiler
from .syntax import UNIT, Base, Conn, Law, NePow, Pow, Pred, Prod, Var, free_vars, sort_bases, term_sorts
from .typecheck import typecheck_law

DEFAULT_CAP = 10 ** 6


class ExhaustionCapExceeded(RuntimeError):
    pass


def default_cap() -> int:
    env = os.environ.get("RELCAT_CAP")
    if env:
        cap = int(env)
        if cap <= 0:
            raise ValueError("RELCAT_CAP must be positive")
        return cap
    return DEFAULT_CAP


@dataclass(frozen=True)
class Exhaustive:
    cap: int | None = None

    def __str__(self):
        return "exhaustive"


@dataclass(frozen=True)
class Random:
    n: int = 500
    seed: int = 0

    def __str__(self):
        return f"random({self.n}, {self.seed})"


@dataclass
class Violation:
    key: tuple
    instance: dict
    rels: dict = field(repr=False)

    @property
    def binding(self) -> dict:
        return {k: r.names() for k, r in self.rels.items()}

    def to_dict(self) -> dict:
        return {"instance": dict(self.instance), "binding": self.binding}


@dataclass
class CheckReport:
    law: str
    model: str
    strategy: str
    kind: str
    status: str = "PASS"
    assignments: int = 0
    satisfying: int = 0
    violation_count: int = 0
    violations: list = field(default_factory=list)
    space: int = 0
    instances: int = 0
    fixture: str | None = None
    notes: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def vacuous(self) -> bool:
        return self.satisfying == 0

    @property
    def ok(self) -> bool:
        return self.status not in ("FAIL", "EXPECTED-FAIL-MISSING")

    def to_dict(self, timing: bool = True) -> dict:
        d = {
            "law": self.law, "model": self.model, "strategy": self.strategy, "kind": self.kind,
            "status": self.status, "assignments": self.assignments, "satisfying": self.satisfying,
            "vacuous": self.vacuous, "violation_count": self.violation_count,
            "violations": [v.to_dict() for v in self.violations],
            "space": self.space, "instances": self.instances, "fixture": self.fixture,
            "notes": list(self.notes),
        }
        if timing:
            d["seconds"] = round(self.seconds, 4)
        return d

    def line(self) -> str:
        s = f"{self.status:<24} {self.law:<18} {self.assignments} assignments, {self.satisfying} satisfying"
        if self.violation_count:
            s += f", {self.violation_count} violation(s)"
        return s


# -- sort instantiation --------------------------------------------------------------

def law_sorts(law: Law) -> list[str]:
    if law.sorts:
        return list(law.sorts)
    out = []
    items = [s for _, a, b in law.variables for s in (a, b)]
    for _, t in law.defs:
        items += term_sorts(t)
    for f in law.hypotheses + [law.conclusion]:
        items += term_sorts(f)
    for s in items:
        for n in sort_bases(s):
            if n not in out:
                out.append(n)
    return out


def _unify(sort, o: rc.Obj, bind: dict) -> bool:
    if sort == UNIT:
        return bool(o.parts) and o.parts[0] == "unit"
    if isinstance(sort, Base):
        old = bind.get(sort.name)
        if old is not None:
            return old == o
        bind[sort.name] = o
        return True
    parts = o.parts or ()
    if isinstance(sort, Prod):
        return bool(parts) and parts[0] == "prod" and _unify(sort.left, parts[1], bind) and _unify(sort.right, parts[2], bind)
    if isinstance(sort, Pow):
        return bool(parts) and parts[0] == "pow" and _unify(sort.base, parts[1], bind)
    if isinstance(sort, NePow):
        return bool(parts) and parts[0] == "nepow" and _unify(sort.base, parts[1], bind)
    return False


def instances(law: Law, model: Model, sorts: dict | None = None):
    """Sort instances and the fixed variables of ``law`` on ``model``.

    Returns ``(list of dict sort -> Obj, dict var -> Rel, notes)``.
    """
    notes = []
    bind: dict = {}
    fixed = {}
    for name, src, tgt in law.variables:
        if name in model.fixed and name in model.relations:
            rel = model.relations[name]
            trial = dict(bind)
            if _unify(src, rel.src, trial) and _unify(tgt, rel.tgt, trial):
                bind = trial
                fixed[name] = rel
            else:
                notes.append(f"model relation {name} does not fit the law's sort; left free")
    names = law_sorts(law)
    overrides = dict(getattr(model, "sort_bindings", None) or {})
    overrides.update(sorts or {})
    choices = []
    base_objs = list(model.objects.values())
    for n in names:
        if n in bind:
            choices.append([bind[n]])
        elif n in overrides:
            choices.append([o if isinstance(o, rc.Obj) else model.obj(o) for o in overrides[n]])
        else:
            choices.append(base_objs)
    out = [dict(zip(names, combo)) for combo in itertools.product(*choices)]
    return out, fixed, notes


# -- per-instance plan -----------------------------------------------------------------

def _atomic_preds(formulas):
    for f in formulas:
        if isinstance(f, Conn) and f.op == "and":
            yield from _atomic_preds(f.parts)
        elif isinstance(f, Pred) and f.name in REL_PREDICATES and len(f.args) == 1 and isinstance(f.args[0], Var):
            yield f.name, f.args[0].name


class Plan:
    """Compiled law for one sort instance: variable spaces and staged hypotheses."""

    def __init__(self, law: Law, typed, model: Model, inst: dict, fixed: dict):
        self.law = law
        self.inst = inst
        comp = Compiler(model, inst)
        deps = {v: {v} for v in law.var_names()}
        for name, tt in typed.defs:
            comp.define(name, tt)
            deps[name] = set().union(*(deps[v] for v in free_vars(tt.node))) if free_vars(tt.node) else set()
        self.vars = law.var_names()
        order = {v: i for i, v in enumerate(self.vars)}
        preds: dict[str, set] = {v: set() for v in self.vars}
        for name, v in _atomic_preds(law.hypotheses):
            if v in preds:
                preds[v].add(name)
        self.spaces = []
        for name, src, tgt in law.variables:
            if name in fixed:
                self.spaces.append([fixed[name]])
            else:
                self.spaces.append(Space(comp.obj(src), comp.obj(tgt), model.alg, preds[name], crisp=law.crisp))
        self.raw_space = math.prod(
            1 if isinstance(s, list) else full_count(s.src, s.tgt, s.alg, law.crisp) for s in self.spaces)
        # hypotheses are tested right after their last variable is bound
        self.stages = [[] for _ in range(len(self.vars) + 1)]
        for h_ast, h in zip(law.hypotheses, typed.hypotheses):
            used = set()
            for v in free_vars(h_ast):
                used |= deps.get(v, set())
            level = max((order[v] + 1 for v in used), default=0)
            self.stages[level].append(comp.formula(h))
        self.conclusion = comp.formula(typed.conclusion)

    def pools(self, cap: int):
        out = []
        for s in self.spaces:
            if isinstance(s, list):
                out.append(s)
                continue
            if s.size > cap:
                raise ExhaustionCapExceeded(
                    f"{self.law.id}: a single variable space has {s.size} candidates (cap {cap})")
            out.append(s.pool())
        return out


def _run_exhaustive(plan: Plan, pools, inst_idx: int, first_range, result, stop_at_first, max_keep):
    env = {}
    n = len(pools)
    stages = plan.stages
    concl = plan.conclusion
    vars_ = plan.vars
    idx = [0] * n

    for f in stages[0]:
        if not f(env):
            return

    def rec(level):
        if level == n:
            result["satisfying"] += 1
            if not concl(env):
                result["violation_count"] += 1
                if len(result["violations"]) < max_keep:
                    result["violations"].append(((inst_idx,) + tuple(idx), dict(env)))
                if stop_at_first:
                    return True
            return False
        pool = pools[level]
        rng = first_range if level == 0 else range(len(pool))
        name = vars_[level]
        checks = stages[level + 1]
        for i in rng:
            env[name] = pool[i]
            idx[level] = i
            if all(f(env) for f in checks):
                if rec(level + 1):
                    return True
        return False

    if n == 0:
        result["satisfying"] += 1
        if not concl(env):
            result["violation_count"] += 1
            result["violations"].append(((inst_idx,), {}))
        return
    rec(0)


def _new_result():
    return {"assignments": 0, "satisfying": 0, "violation_count": 0, "violations": []}


def _worker(args):
    law, model, sorts, strategy, units, stop_at_first, max_keep, cap = args
    return _execute(law, model, sorts, strategy, units, stop_at_first, max_keep, cap)


def _execute(law, model, sorts, strategy, units, stop_at_first, max_keep, cap, plans=None):
    typed = typecheck_law(law)
    insts, fixed, _ = instances(law, model, sorts)
    plans = {} if plans is None else plans
    result = _new_result()

    def plan_for(i):
        if i not in plans:
            plans[i] = Plan(law, typed, model, insts[i], fixed)
        return plans[i]

    if isinstance(strategy, Exhaustive):
        pools_cache = {}
        for inst_idx, lo, hi in units:
            plan = plan_for(inst_idx)
            if inst_idx not in pools_cache:
                pools_cache[inst_idx] = plan.pools(cap)
            pools = pools_cache[inst_idx]
            rest = math.prod(len(p) for p in pools[1:])
            result["assignments"] += (hi - lo) * rest if pools else 1
            _run_exhaustive(plan, pools, inst_idx, range(lo, hi), result, stop_at_first, max_keep)
            if stop_at_first and result["violation_count"]:
                break
    else:
        for i in units:
            rng = random.Random(f"{strategy.seed}:{law.id}:{i}")
            inst_idx = rng.randrange(len(insts))
            plan = plan_for(inst_idx)
            result["assignments"] += 1
            env = {}
            ok = True
            for level, (name, space) in enumerate(zip(plan.vars, plan.spaces)):
                if not all(f(env) for f in plan.stages[level]):
                    ok = False
                    break
                val = space[0] if isinstance(space, list) else space.sample(rng)
                if val is None:
                    ok = False
                    break
                env[name] = val
            if ok and not all(f(env) for f in plan.stages[len(plan.vars)]):
                ok = False
            if not ok:
                continue
            result["satisfying"] += 1
            if not plan.conclusion(env):
                result["violation_count"] += 1
                if len(result["violations"]) < max_keep:
                    result["violations"].append(((i, inst_idx), dict(env)))
                if stop_at_first:
                    break
    return result


def _merge(parts, max_keep):
    out = _new_result()
    for p in parts:
        out["assignments"] += p["assignments"]
        out["satisfying"] += p["satisfying"]
        out["violation_count"] += p["violation_count"]
        out["violations"].extend(p["violations"])
    out["violations"].sort(key=lambda kv: kv[0])
    out["violations"] = out["violations"][:max_keep]
    return out


def check_law(law: Law, model: Model, strategy=None, *, workers: int = 1, sorts: dict | None = None,
              stop_at_first: bool = False, max_violations: int = 10) -> CheckReport:
    """Check ``law`` on ``model``; see the module docstring for the search."""
    strategy = strategy or Exhaustive()
    started = time.perf_counter()
    typecheck_law(law)
    insts, fixed, notes = instances(law, model, sorts)
    cap = (strategy.cap if isinstance(strategy, Exhaustive) else None) or default_cap()
    report = CheckReport(law.id, model.name, str(strategy), law.kind, fixture=law.fixture,
                         instances=len(insts), notes=notes)
    if fixed:
        report.notes.append("fixed: " + ", ".join(sorted(fixed)))
    plans = {}
    if isinstance(strategy, Exhaustive):
        typed = typecheck_law(law)
        units = []
        total = 0
        for i, inst in enumerate(insts):
            plan = plans[i] = Plan(law, typed, model, inst, fixed)
            pools = plan.pools(cap)
            count = math.prod(len(p) for p in pools)
            total += count
            report.space += plan.raw_space
            if total > cap:
                raise ExhaustionCapExceeded(
                    f"{law.id}: {total}+ assignments exceed the cap of {cap}; "
                    f"use --strategy random or raise RELCAT_CAP")
            if pools and count:
                first = len(pools[0])
                step = max(1, math.ceil(first / max(1, workers)))
                units += [(i, lo, min(first, lo + step)) for lo in range(0, first, step)]
            elif not pools:
                units.append((i, 0, 0))
    else:
        units = list(range(strategy.n))
    args = (law, model, sorts, strategy)
    if workers > 1 and len(units) > 1 and not stop_at_first:
        chunks = _split(units, workers)
        with ProcessPoolExecutor(max_workers=workers) as ex:
            parts = list(ex.map(_worker, [args + (c, False, max_violations, cap) for c in chunks]))
    else:
        parts = [_execute(law, model, sorts, strategy, units, stop_at_first, max_violations, cap, plans)]
    res = _merge(parts, max_violations)
    report.assignments = res["assignments"]
    report.satisfying = res["satisfying"]
    report.violation_count = res["violation_count"]
    report.violations = [Violation(k, {s: o.name for s, o in insts[k[0] if isinstance(strategy, Exhaustive) else k[1]].items()}, env)
                         for k, env in res["violations"]]
    report.status = _status(law, model, report)
    report.seconds = time.perf_counter() - started
    return report


def _split(units, workers):
    k = max(1, math.ceil(len(units) / workers))
    return [units[i:i + k] for i in range(0, len(units), k)]


def _status(law: Law, model: Model, r: CheckReport) -> str:
    if law.kind == "expected-fail":
        if r.violation_count:
            return "EXPECTED-FAIL-CONFIRMED"
        return "EXPECTED-FAIL-MISSING" if model.name == law.fixture else "NOT-REFUTED"
    if law.kind == "axiom":
        if r.violation_count:
            return "FAILS"
        return "VACUOUS" if r.satisfying == 0 else "HOLDS"
    if r.violation_count:
        return "FAIL"
    return "VACUOUS" if r.satisfying == 0 else "PASS"


def replay(law: Law, model: Model, violation: Violation) -> tuple[bool, bool]:
    """Re-evaluate a reported violation: (hypotheses hold, conclusion holds)."""
    typed = typecheck_law(law)
    inst = {s: model.obj(n) if n in model.objects else None for s, n in violation.instance.items()}
    comp = Compiler(model, inst)
    for name, tt in typed.defs:
        comp.define(name, tt)
    env = dict(violation.rels)
    hyps = all(comp.formula(h)(env) for h in typed.hypotheses)
    return hyps, comp.formula(typed.conclusion)(env)
