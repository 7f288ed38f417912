"""Relation-term language: parsing, typing, evaluation and law checking."""
from __future__ import annotations

from .catalog import catalog, get_law, select
from .check import (CheckReport, ExhaustionCapExceeded, Exhaustive, Random, Violation,
                    check_law, replay)
from .evaluate import Compiler, evaluate, evaluate_formula
from .parser import ParseError, UnknownIdentifier, parse, parse_formula, parse_law, parse_laws, parse_term
from .syntax import Law, formula_str, law_str, term_str
from .typecheck import SortMismatch, typecheck, typecheck_law

__all__ = [
    "CheckReport", "Compiler", "ExhaustionCapExceeded", "Exhaustive", "Law", "ParseError", "Random",
    "SortMismatch", "UnknownIdentifier", "Violation", "catalog", "check_law", "evaluate",
    "evaluate_formula", "formula_str", "get_law", "law_str", "parse", "parse_formula", "parse_law",
    "parse_laws", "parse_term", "replay", "select", "term_str", "typecheck", "typecheck_law",
]
