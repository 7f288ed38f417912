"""Recursive-descent parser for terms, formulas and law files.

Law files are a sequence of clauses; each law starts with ``law <id>``.
Newlines are insignificant and ``;`` may separate clauses on one line, so
``law x ; var X : A -> B ; conclude X <= X`` is a complete law.
"""
from __future__ import annotations

import re

from .syntax import (BINARY, CONSTS, INFIX, KINDS, UNARY, UNIT, Base, Cmp, Conn, Const, Law, NePow,
                     Op, Pow, Pred, Prod, Var, free_vars, sort_bases, term_sorts)


class ParseError(SyntaxError):
    def __init__(self, msg, line=0, col=0, text=""):
        where = f" (line {line}, column {col})" if line else ""
        super().__init__(f"{msg}{where}", ("<law>", line, col, text))
        self.msg_only = msg
        self.line = line
        self.col = col


class UnknownIdentifier(ParseError):
    pass


CLAUSES = {"law", "anchor", "note", "sort", "var", "def", "assume", "conclude", "kind", "expect", "crisp"}
KEYWORDS = CLAUSES | {"and", "fail"}

# predicate vocabulary usable in hypotheses and conclusions
PREDICATES = {
    "univalent": 1, "total": 1, "injective": 1, "surjective": 1, "map": 1, "bijection": 1, "point": 1,
    "transitive": 1, "dense": 1, "asymmetric": 1, "strict_order": 1, "linear_strict_order": 1,
    "reflexive": 1, "antisymmetric": 1, "symmetric": 1, "ordering": 1, "per": 1,
    "partial_identity": 1, "regular": 1, "crisp": 1, "complemented": 2,
    "abelian_group": 3, "rno": 3, "power": 1, "nepower": 1,
}

_TOKEN = re.compile(r"""
    (?P<ws>[ \t\r]+) | (?P<nl>\n) | (?P<comment>\#[^\n]*)
  | (?P<str>"(?:[^"\\]|\\.)*")
  | (?P<id>[A-Za-z_][A-Za-z0-9_']*) | (?P<num>[0-9]+)
  | (?P<sym><=>|<=|=>|->|[;&|=()\[\],:*])
""", re.VERBOSE)


class Tok:
    __slots__ = ("kind", "val", "line", "col")

    def __init__(self, kind, val, line, col):
        self.kind, self.val, self.line, self.col = kind, val, line, col

    def __repr__(self):
        return f"Tok({self.kind},{self.val!r})"


def tokenize(text: str) -> list[Tok]:
    out = []
    line, start = 1, 0
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - start + 1)
        kind = m.lastgroup
        val = m.group()
        col = pos - start + 1
        if kind == "nl":
            line += 1
            start = m.end()
        elif kind == "id":
            out.append(Tok("kw" if val in KEYWORDS else "id", val, line, col))
        elif kind == "str":
            out.append(Tok("str", re.sub(r"\\(.)", r"\1", val[1:-1]), line, col))
        elif kind in ("num", "sym"):
            out.append(Tok(kind, val, line, col))
        pos = m.end()
    out.append(Tok("eof", "", line, pos - start + 1))
    return out


class Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0

    # -- helpers ---------------------------------------------------------------

    @property
    def tok(self) -> Tok:
        return self.toks[self.i]

    def peek(self, k=1) -> Tok:
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def error(self, msg, tok=None, cls=ParseError):
        tok = tok or self.tok
        return cls(msg, tok.line, tok.col, self.text)

    def at(self, val) -> bool:
        return self.tok.kind in ("sym", "kw") and self.tok.val == val

    def eat(self, val) -> Tok:
        if not self.at(val):
            got = self.tok.val or "end of input"
            raise self.error(f"expected {val!r}, got {got!r}")
        t = self.tok
        self.i += 1
        return t

    def ident(self) -> str:
        if self.tok.kind != "id":
            raise self.error(f"expected identifier, got {self.tok.val or 'end of input'!r}")
        v = self.tok.val
        self.i += 1
        return v

    def expect_end(self):
        if self.tok.kind != "eof":
            raise self.error(f"unexpected {self.tok.val!r}")

    # -- sorts ---------------------------------------------------------------------

    def sort(self):
        s = self.sort_factor()
        while self.at("*"):
            self.i += 1
            s = Prod(s, self.sort_factor())
        return s

    def sort_factor(self):
        t = self.tok
        if t.kind == "num":
            if t.val != "1":
                raise self.error(f"only the unit sort 1 may be numeric, got {t.val}")
            self.i += 1
            return UNIT
        if self.at("("):
            self.i += 1
            s = self.sort()
            self.eat(")")
            return s
        name = self.ident()
        if name in ("P", "N") and self.at("("):
            self.i += 1
            inner = self.sort()
            self.eat(")")
            return Pow(inner) if name == "P" else NePow(inner)
        return Base(name)

    # -- terms -----------------------------------------------------------------------

    def term(self):
        left = self.join_term()
        if self.at("->"):
            self.i += 1
            return Op("impl", (left, self.term()))
        return left

    def join_term(self):
        t = self.meet_term()
        while self.at("|"):
            self.i += 1
            t = Op("join", (t, self.meet_term()))
        return t

    def meet_term(self):
        t = self.comp_term()
        while self.at("&"):
            self.i += 1
            t = Op("meet", (t, self.comp_term()))
        return t

    def comp_term(self):
        t = self.primary()
        # a ';' followed by a clause keyword separates clauses instead
        while self.at(";") and self.peek().kind != "kw":
            self.i += 1
            t = Op("comp", (t, self.primary()))
        return t

    def primary(self):
        t = self.tok
        if self.at("("):
            self.i += 1
            inner = self.term()
            self.eat(")")
            return inner
        if t.kind != "id":
            raise self.error(f"expected a term, got {t.val or 'end of input'!r}")
        name = t.val
        nxt = self.peek()
        if name in CONSTS and nxt.val == "[":
            self.i += 2
            sorts = [self.sort()]
            while self.at(","):
                self.i += 1
                sorts.append(self.sort())
            self.eat("]")
            if len(sorts) != CONSTS[name]:
                raise self.error(f"{name} takes {CONSTS[name]} sort(s), got {len(sorts)}", t)
            return Const(name, tuple(sorts))
        if nxt.val == "(" and nxt.kind == "sym":
            if name not in UNARY and name not in BINARY:
                raise self.error(f"unknown function {name!r}", t, UnknownIdentifier)
            self.i += 2
            args = [self.term()]
            while self.at(","):
                self.i += 1
                args.append(self.term())
            self.eat(")")
            want = 1 if name in UNARY else 2
            if len(args) != want:
                raise self.error(f"{name} takes {want} argument(s), got {len(args)}", t)
            return Op(name, tuple(args))
        self.i += 1
        return Var(name)

    # -- formulas --------------------------------------------------------------------

    def formula(self):
        parts = [self.implication()]
        while self.at("<=>"):
            self.i += 1
            parts.append(self.implication())
        return parts[0] if len(parts) == 1 else Conn("<=>", tuple(parts))

    def implication(self):
        left = self.conjunction()
        if self.at("=>"):
            self.i += 1
            return Conn("=>", (left, self.implication()))
        return left

    def conjunction(self):
        parts = [self.atom()]
        while self.at("and"):
            self.i += 1
            parts.append(self.atom())
        return parts[0] if len(parts) == 1 else Conn("and", tuple(parts))

    def atom(self):
        t = self.tok
        if t.kind == "id" and t.val in PREDICATES and self.peek().val == "(":
            self.i += 2
            args = [self.term()]
            while self.at(","):
                self.i += 1
                args.append(self.term())
            self.eat(")")
            if len(args) != PREDICATES[t.val]:
                raise self.error(f"{t.val} takes {PREDICATES[t.val]} argument(s)", t)
            return Pred(t.val, tuple(args))
        if self.at("("):
            # either a parenthesised term starting a comparison or a nested formula
            save = self.i
            try:
                return self.comparison()
            except ParseError:
                self.i = save
            self.i += 1
            f = self.formula()
            self.eat(")")
            return f
        return self.comparison()

    def comparison(self):
        lhs = self.term()
        if self.at("<="):
            rel = "<="
        elif self.at("="):
            rel = "="
        else:
            raise self.error(f"expected '<=' or '=', got {self.tok.val or 'end of input'!r}")
        self.i += 1
        return Cmp(rel, lhs, self.term())

    # -- laws ----------------------------------------------------------------------

    def laws(self) -> list[Law]:
        out = []
        while self.at(";"):
            self.i += 1
        while self.tok.kind != "eof":
            out.append(self.law())
        return out

    def law(self) -> Law:
        start = self.eat("law")
        law = Law(id=self.ident())
        seen_vars = set()
        while True:
            while self.at(";"):
                self.i += 1
            t = self.tok
            if t.kind == "eof" or (t.kind == "kw" and t.val == "law"):
                break
            if t.kind != "kw" or t.val not in CLAUSES:
                raise self.error(f"expected a clause keyword, got {t.val!r}")
            self.i += 1
            kw = t.val
            if kw in ("anchor", "note"):
                if self.tok.kind != "str":
                    raise self.error(f"{kw} needs a quoted string")
                setattr(law, "anchor" if kw == "anchor" else "notes", self.tok.val)
                self.i += 1
            elif kw == "sort":
                law.sorts.append(self.ident())
                while self.at(","):
                    self.i += 1
                    law.sorts.append(self.ident())
            elif kw == "var":
                names = [self.ident()]
                while self.at(","):
                    self.i += 1
                    names.append(self.ident())
                self.eat(":")
                src = self.sort()
                self.eat("->")
                tgt = self.sort()
                for n in names:
                    if n in seen_vars:
                        raise self.error(f"variable {n!r} declared twice", t)
                    seen_vars.add(n)
                    law.variables.append((n, src, tgt))
            elif kw == "def":
                name = self.ident()
                if name in seen_vars:
                    raise self.error(f"{name!r} is already declared", t)
                self.eat("=")
                law.defs.append((name, self.term()))
                seen_vars.add(name)
            elif kw == "assume":
                law.hypotheses.append(self.formula())
            elif kw == "conclude":
                if law.conclusion is not None:
                    raise self.error("a law has exactly one conclusion", t)
                law.conclusion = self.formula()
            elif kw == "kind":
                k = self.ident()
                if k not in KINDS or k == "expected-fail":
                    raise self.error(f"unknown law kind {k!r}", t)
                law.kind = k
            elif kw == "expect":
                self.eat("fail")
                law.kind = "expected-fail"
                law.fixture = self.ident()
            elif kw == "crisp":
                law.crisp = True
        if law.conclusion is None:
            raise self.error(f"law {law.id!r} has no conclusion", start)
        check_scope(law, self, start)
        return law


def check_scope(law: Law, parser: Parser | None = None, tok=None):
    """Raise UnknownIdentifier for undeclared variables or sorts."""
    def fail(msg):
        if parser is not None:
            raise parser.error(msg, tok, UnknownIdentifier)
        raise UnknownIdentifier(msg)

    declared = set(law.sorts)
    var_sorts = [s for _, a, b in law.variables for s in (a, b)]
    if not declared:
        declared = {n for s in var_sorts for n in sort_bases(s)}
    for s in var_sorts:
        for n in sort_bases(s):
            if n not in declared:
                fail(f"law {law.id}: sort {n!r} is not declared")
    scope = set(law.var_names())
    for name, t in law.defs:
        _check_term(t, scope, declared, fail, law.id)
        scope.add(name)
    for f in law.hypotheses + [law.conclusion]:
        _check_term(f, scope, declared, fail, law.id)


def _check_term(t, scope, sorts, fail, where):
    for v in free_vars(t):
        if v not in scope:
            fail(f"{where}: unknown identifier {v!r}")
    for s in term_sorts(t):
        for n in sort_bases(s):
            if n not in sorts:
                fail(f"{where}: unknown sort {n!r}")


def parse_term(text: str, variables=None, sorts=None):
    p = Parser(text)
    t = p.term()
    p.expect_end()
    if variables is not None or sorts is not None:
        def fail(msg):
            raise UnknownIdentifier(msg)
        _check_term(t, set(variables or ()), set(sorts or ()), fail, "term")
    return t


def parse_formula(text: str):
    p = Parser(text)
    f = p.formula()
    p.expect_end()
    return f


def parse_sort(text: str):
    p = Parser(text)
    s = p.sort()
    p.expect_end()
    return s


def parse_laws(text: str) -> list[Law]:
    return Parser(text).laws()


def parse_law(text: str) -> Law:
    laws = parse_laws(text)
    if len(laws) != 1:
        raise ParseError(f"expected exactly one law, found {len(laws)}")
    return laws[0]


def parse(text: str):
    """Law text if it starts with ``law``, else a formula if it has a comparison, else a term."""
    p = Parser(text)
    if p.at("law"):
        return parse_law(text)
    try:
        return parse_term(text)
    except ParseError:
        return parse_formula(text)
