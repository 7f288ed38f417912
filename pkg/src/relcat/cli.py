"""Command-line driver: ``relcat check|eval|search|paper-example|laws|init-examples``.

Exit codes: 0 success, 1 violation or regression, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import itertools
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import __version__
from . import modelio as mio
from . import relcore as rc
from .lattice import LatticeError, parse_lattice
from .lawlang.catalog import select as select_laws
from .lawlang.check import ExhaustionCapExceeded, Exhaustive, Random, check_law, default_cap, law_sorts
from .lawlang.evaluate import evaluate
from .lawlang.parser import ParseError
from .lawlang.typecheck import SortMismatch
from .structures import StructureError

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT = 0, 1, 2
DEFAULT_LATTICES = "bool,chain:3"

# failures of these kinds are input problems, reported with exit code 2
INPUT_ERRORS = (ParseError, SortMismatch, mio.ModelError, LatticeError, StructureError, rc.RelError,
                KeyError, ValueError, OSError)


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    models: list = field(default_factory=list)
    laws: str = "all"
    strategy: str = "exhaustive"
    samples: int = 500
    seed: int | None = None
    max_carrier: int = 2
    lattices: str = DEFAULT_LATTICES
    format: str = "text"
    workers: int = 1

    def __post_init__(self):
        if self.strategy not in ("exhaustive", "random"):
            raise UsageError(f"unknown strategy {self.strategy!r}")
        if self.strategy == "random" and self.seed is None:
            raise UsageError("--strategy random needs --seed")
        for name in ("samples", "max_carrier", "workers"):
            if getattr(self, name) < 1:
                raise UsageError(f"--{name.replace('_', '-')} must be positive")

    def make_strategy(self):
        if self.strategy == "random":
            return Random(self.samples, self.seed)
        return Exhaustive()

    def header(self) -> dict:
        return {"tool": "relcat", "version": __version__, "command": self.command,
                "strategy": str(self.make_strategy()), "seed": self.seed, "cap": default_cap()}


def one_line(r: rc.Rel) -> str:
    return " ".join(rc.format_rel(r).splitlines())


def _emit(cfg: RunConfig, payload: dict, timing: dict | None = None):
    if cfg.format == "json":
        out = dict(cfg.header())
        out.update(payload)
        out["timing"] = timing or {}
        print(json.dumps(out, indent=2, sort_keys=False))


# -- check ------------------------------------------------------------------------------

def cmd_check(cfg: RunConfig) -> int:
    laws = select_laws(cfg.laws)
    models = [mio.load_model(p) for p in (cfg.models or ["paper3chain"])]
    strategy = cfg.make_strategy()
    reports, errors, timing = [], [], {}
    code = EXIT_OK
    for model in models:
        for law in laws:
            key = f"{model.name}:{law.id}"
            try:
                r = check_law(law, model, strategy, workers=cfg.workers)
            except ExhaustionCapExceeded as e:
                errors.append({"model": model.name, "law": law.id, "error": str(e)})
                code = max(code, EXIT_INPUT)
                if cfg.format == "text":
                    print(f"{'ERROR':<24} {law.id:<18} {e}")
                continue
            reports.append(r)
            timing[key] = round(r.seconds, 4)
            if not r.ok:
                code = max(code, EXIT_VIOLATION)
            if cfg.format == "text":
                print(f"[{model.name}] {r.line()}")
                for v in r.violations[:1]:
                    print("    witness: " + ", ".join(f"{k} = {one_line(x)}" for k, x in v.rels.items()))
    if cfg.format == "json":
        _emit(cfg, {"reports": [r.to_dict(timing=False) for r in reports], "errors": errors,
                    "exit_code": code}, timing)
    return code


# -- eval ---------------------------------------------------------------------------------

def cmd_eval(cfg: RunConfig, term: str) -> int:
    model = mio.load_model(cfg.models[0] if cfg.models else "paper3chain")
    r = evaluate(term, None, model)
    if cfg.format == "json":
        _emit(cfg, {"model": model.name, "term": term, "source": r.src.name, "target": r.tgt.name,
                    "matrix": r.names()})
    else:
        print(rc.format_rel(r))
    return EXIT_OK


# -- worked example --------------------------------------------------------------------------

def paper_example() -> list[dict]:
    model = mio.model_from_dict(mio.PAPER_MODEL)
    rows = []
    for label, term, golden in mio.PAPER_GOLDEN:
        got = evaluate(term, None, model)
        rows.append({"label": label, "term": term, "value": got.names(), "expected": golden,
                     "match": got.names() == golden})
    return rows


def cmd_paper_example(cfg: RunConfig) -> int:
    rows = paper_example()
    ok = all(r["match"] for r in rows)
    if cfg.format == "json":
        _emit(cfg, {"rows": rows, "match": ok})
    else:
        for r in rows:
            got = " ".join("(" + " ".join(row) + ")" for row in r["value"])
            mark = "ok" if r["match"] else "MISMATCH expected " + " ".join(
                "(" + " ".join(row) + ")" for row in r["expected"])
            print(f"{r['label']:<24} = {got:<8} {mark}")
        print("all six values match" if ok else "REGRESSION: worked example differs from golden values")
    return EXIT_OK if ok else EXIT_VIOLATION


# -- search ----------------------------------------------------------------------------------

def split_list(text: str) -> list[str]:
    out, depth, cur = [], 0, ""
    for ch in text:
        if ch == "," and depth == 0:
            out.append(cur.strip())
            cur = ""
            continue
        depth += ch == "("
        depth -= ch == ")"
        cur += ch
    if cur.strip():
        out.append(cur.strip())
    return out


def search_configs(law, lattices, max_carrier):
    """Generated (lattice, sort sizes) pairs in deterministic order."""
    sorts = law_sorts(law)
    for spec in lattices:
        alg = parse_lattice(spec)
        for sizes in itertools.product(range(1, max_carrier + 1), repeat=len(sorts)):
            yield alg, dict(zip(sorts, sizes))


def _search_one(args):
    law, alg, sizes, strategy = args
    model = mio.generated_model(alg, sizes)
    try:
        return check_law(law, model, strategy, max_violations=1), None
    except ExhaustionCapExceeded as e:
        return None, str(e)


def cmd_search(cfg: RunConfig, find_all: bool = False) -> int:
    laws = select_laws(cfg.laws)
    lattices = split_list(cfg.lattices)
    strategy = cfg.make_strategy()
    code = EXIT_OK
    results, timing = [], {}
    for law in laws:
        started = time.perf_counter()
        jobs = [(law, alg, sizes, strategy) for alg, sizes in search_configs(law, lattices, cfg.max_carrier)]
        if cfg.workers > 1:
            with ProcessPoolExecutor(max_workers=cfg.workers) as ex:
                outcomes = list(ex.map(_search_one, jobs))
        else:
            outcomes = []
            for job in jobs:
                outcomes.append(_search_one(job))
                rep, err = outcomes[-1]
                if err or (rep and rep.violation_count and not find_all):
                    break
        tried, hits, error = 0, [], None
        for rep, err in outcomes:
            if err:
                error = err
                break
            tried += 1
            if rep.violation_count:
                hits.append(rep)
                if not find_all:
                    break
        entry = {"law": law.id, "kind": law.kind, "models_tried": tried,
                 "violations": [{"model": h.model, "status": h.status,
                                 "witness": h.violations[0].to_dict()} for h in hits]}
        timing[law.id] = round(time.perf_counter() - started, 4)
        if error:
            entry["error"] = error
            code = EXIT_INPUT
        elif hits and law.kind == "theorem":
            code = max(code, EXIT_VIOLATION)
        results.append(entry)
        if cfg.format == "text":
            if error:
                print(f"{law.id}: ERROR {error}")
            elif not hits:
                print(f"{law.id}: no violation in {tried} model(s)")
            for h in hits:
                w = h.violations[0]
                print(f"{law.id}: violation in {h.model} ({h.status})")
                print("    witness: " + ", ".join(f"{k} = {one_line(x)}" for k, x in w.rels.items()))
    if cfg.format == "json":
        _emit(cfg, {"lattices": lattices, "max_carrier": cfg.max_carrier, "results": results,
                    "exit_code": code}, timing)
    return code


# -- laws / init-examples ------------------------------------------------------------------------

def cmd_laws(cfg: RunConfig) -> int:
    laws = select_laws(cfg.laws)
    if cfg.format == "json":
        _emit(cfg, {"laws": [{"id": l.id, "kind": l.kind, "anchor": l.anchor, "fixture": l.fixture,
                              "crisp": l.crisp, "notes": l.notes} for l in laws]})
    else:
        for l in laws:
            extra = f" [expect fail on {l.fixture}]" if l.kind == "expected-fail" else (
                " [axiom]" if l.kind == "axiom" else "")
            print(f"{l.id:<18} {l.anchor}{extra}")
    return EXIT_OK


def cmd_init_examples(directory: str) -> int:
    for p in mio.write_examples(directory):
        print(p)
    return EXIT_OK


# -- argument parsing --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--model", nargs="+", default=None, metavar="PATH",
                        help="model JSON file(s) or the embedded name paper3chain")
    common.add_argument("--laws", "--law", dest="laws", default="all", help="comma list of law ids, or all")
    common.add_argument("--strategy", choices=("exhaustive", "random"), default="exhaustive")
    common.add_argument("--samples", type=int, default=500)
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--max-carrier", type=int, default=2)
    common.add_argument("--lattices", default=DEFAULT_LATTICES)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--workers", type=int, default=1)

    p = argparse.ArgumentParser(prog="relcat", description="Finite-model workbench for lattice-valued relations.")
    p.add_argument("--version", action="version", version=f"relcat {__version__}")
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("check", parents=[common], help="check catalog laws on models")
    e = sub.add_parser("eval", parents=[common], help="evaluate a term on a model")
    e.add_argument("term")
    s = sub.add_parser("search", parents=[common], help="search generated models for violations")
    s.add_argument("--all", action="store_true", help="report every violating model, not only the first")
    sub.add_parser("paper-example", parents=[common], help="reproduce the three-chain worked example")
    sub.add_parser("laws", parents=[common], help="list the catalog")
    i = sub.add_parser("init-examples", help="write example model files")
    i.add_argument("directory", nargs="?", default=".")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "init-examples":
        try:
            return cmd_init_examples(args.directory)
        except OSError as e:
            print(f"error: {e}", file=sys.stderr)
            return EXIT_INPUT
    try:
        cfg = RunConfig(args.command, args.model or [], args.laws, args.strategy, args.samples, args.seed,
                        args.max_carrier, args.lattices, args.format, args.workers)
        if args.command == "check":
            return cmd_check(cfg)
        if args.command == "eval":
            return cmd_eval(cfg, args.term)
        if args.command == "search":
            return cmd_search(cfg, find_all=args.all)
        if args.command == "paper-example":
            return cmd_paper_example(cfg)
        if args.command == "laws":
            return cmd_laws(cfg)
    except UsageError as e:
        parser.print_usage(sys.stderr)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except ExhaustionCapExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except INPUT_ERRORS as e:
        msg = e.args[0] if isinstance(e, (KeyError, SyntaxError)) and e.args else e
        print(f"error: {msg}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
