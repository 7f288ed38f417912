"""AST for sorts, relation terms, formulas and laws, plus the canonical printer."""
from __future__ import annotations

from dataclasses import dataclass, field


# -- sorts ---------------------------------------------------------------------

@dataclass(frozen=True)
class Base:
    name: str


@dataclass(frozen=True)
class Prod:
    left: object
    right: object


@dataclass(frozen=True)
class Pow:
    base: object


@dataclass(frozen=True)
class NePow:
    base: object


UNIT = Base("1")


def sort_str(s) -> str:
    if isinstance(s, Base):
        return s.name
    if isinstance(s, Prod):
        wrap = lambda x: f"({sort_str(x)})" if isinstance(x, Prod) else sort_str(x)
        return f"{wrap(s.left)}*{wrap(s.right)}"
    if isinstance(s, Pow):
        return f"P({sort_str(s.base)})"
    if isinstance(s, NePow):
        return f"N({sort_str(s.base)})"
    raise TypeError(f"not a sort: {s!r}")


def sort_bases(s) -> list[str]:
    """Base sort names occurring in ``s`` (excluding the unit), in order."""
    if isinstance(s, Base):
        return [] if s == UNIT else [s.name]
    if isinstance(s, Prod):
        return sort_bases(s.left) + sort_bases(s.right)
    return sort_bases(s.base)


# -- terms -----------------------------------------------------------------------

# constant kind -> number of sort parameters
CONSTS = {"I": 1, "bot": 2, "top": 2, "pi": 2, "rho": 2, "eps": 1, "neps": 1, "assoc": 3, "swap": 2}

INFIX = {"comp": ";", "meet": "&", "join": "|", "impl": "->"}
# binding strength; higher binds tighter
PREC = {"impl": 1, "join": 2, "meet": 3, "comp": 4}
UNARY = ("conv", "star", "dom")
BINARY = ("lres", "rres", "syq", "ubd", "lbd", "lub", "glb", "fork", "pair", "tensor")


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Const:
    kind: str
    sorts: tuple


@dataclass(frozen=True)
class Op:
    op: str
    args: tuple


def term_str(t) -> str:
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Const):
        return f"{t.kind}[{','.join(sort_str(s) for s in t.sorts)}]"
    if t.op in INFIX:
        p = PREC[t.op]
        left, right = t.args

        def side(x, is_right):
            s = term_str(x)
            if isinstance(x, Op) and x.op in INFIX:
                q = PREC[x.op]
                # left-associative except the right-associative implication
                tight = q > p or (q == p and (is_right if t.op == "impl" else not is_right))
                if not tight:
                    return f"({s})"
            return s
        return f"{side(left, False)} {INFIX[t.op]} {side(right, True)}"
    return f"{t.op}({', '.join(term_str(a) for a in t.args)})"


def free_vars(t, acc=None) -> list[str]:
    acc = [] if acc is None else acc
    if isinstance(t, Var):
        if t.name not in acc:
            acc.append(t.name)
    elif isinstance(t, Op):
        for a in t.args:
            free_vars(a, acc)
    elif isinstance(t, (Cmp, Pred, Conn)):
        for a in formula_children(t):
            free_vars(a, acc)
    return acc


def term_sorts(t, acc=None) -> list:
    """Sorts mentioned by constants inside a term or formula."""
    acc = [] if acc is None else acc
    if isinstance(t, Const):
        acc.extend(t.sorts)
    elif isinstance(t, Op):
        for a in t.args:
            term_sorts(a, acc)
    elif isinstance(t, (Cmp, Pred, Conn)):
        for a in formula_children(t):
            term_sorts(a, acc)
    return acc


# -- formulas --------------------------------------------------------------------

@dataclass(frozen=True)
class Cmp:
    rel: str  # "<=" or "="
    lhs: object
    rhs: object


@dataclass(frozen=True)
class Pred:
    name: str
    args: tuple


@dataclass(frozen=True)
class Conn:
    op: str  # "and", "=>", "<=>"
    parts: tuple


FPREC = {"<=>": 1, "=>": 2, "and": 3}


def formula_children(f):
    if isinstance(f, Cmp):
        return (f.lhs, f.rhs)
    if isinstance(f, Pred):
        return f.args
    return f.parts


def formula_str(f) -> str:
    if isinstance(f, Cmp):
        return f"{term_str(f.lhs)} {f.rel} {term_str(f.rhs)}"
    if isinstance(f, Pred):
        return f"{f.name}({', '.join(term_str(a) for a in f.args)})"
    p = FPREC[f.op]
    out = []
    for i, part in enumerate(f.parts):
        s = formula_str(part)
        if isinstance(part, Conn):
            q = FPREC[part.op]
            # "=>" is right-associative; "and"/"<=>" are n-ary
            if q < p or (q == p and (f.op != "=>" or i == 0)):
                s = f"({s})"
        out.append(s)
    return f" {f.op} ".join(out)


# -- laws ------------------------------------------------------------------------

KINDS = ("theorem", "axiom", "expected-fail")


@dataclass
class Law:
    id: str
    variables: list = field(default_factory=list)   # (name, src sort, tgt sort)
    hypotheses: list = field(default_factory=list)  # formulas
    conclusion: object = None
    sorts: list = field(default_factory=list)       # declared base sort names
    defs: list = field(default_factory=list)        # (name, term)
    kind: str = "theorem"
    fixture: str | None = None
    crisp: bool = False
    anchor: str = ""
    notes: str = ""

    def var_names(self) -> list[str]:
        return [v[0] for v in self.variables]


def law_str(law: Law) -> str:
    lines = [f"law {law.id}"]
    if law.anchor:
        lines.append(f"  anchor {_quote(law.anchor)}")
    if law.notes:
        lines.append(f"  note {_quote(law.notes)}")
    if law.sorts:
        lines.append(f"  sort {', '.join(law.sorts)}")
    for name, src, tgt in law.variables:
        lines.append(f"  var {name} : {sort_str(src)} -> {sort_str(tgt)}")
    for name, t in law.defs:
        lines.append(f"  def {name} = {term_str(t)}")
    for h in law.hypotheses:
        lines.append(f"  assume {formula_str(h)}")
    lines.append(f"  conclude {formula_str(law.conclusion)}")
    if law.kind == "axiom":
        lines.append("  kind axiom")
    if law.kind == "expected-fail":
        lines.append(f"  expect fail {law.fixture}")
    if law.crisp:
        lines.append("  crisp")
    return "\n".join(lines) + "\n"


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'
