"""Symbolic sort checking of terms and formulas."""
from __future__ import annotations

from dataclasses import dataclass

from .parser import PREDICATES, UnknownIdentifier
from .syntax import (UNIT, Cmp, Conn, Const, Law, NePow, Op, Pow, Pred, Prod, Var, formula_str,
                     sort_str, term_str)
from ..spaces import SQUARE_PREDICATES


class SortMismatch(TypeError):
    def __init__(self, msg, left=None, right=None):
        super().__init__(msg)
        self.left, self.right = left, right


@dataclass(frozen=True)
class Typed:
    """A term node annotated with its sort; ``args`` are typed children."""
    node: object
    src: object
    tgt: object
    args: tuple = ()


def _mismatch(what, a, b, node):
    return SortMismatch(f"{what} in {term_str(node)}: {sort_str(a)} vs {sort_str(b)}", a, b)


def const_sort(c: Const):
    s = c.sorts
    k = c.kind
    if k == "I":
        return s[0], s[0]
    if k in ("bot", "top"):
        return s[0], s[1]
    if k == "pi":
        return Prod(s[0], s[1]), s[0]
    if k == "rho":
        return Prod(s[0], s[1]), s[1]
    if k == "eps":
        return s[0], Pow(s[0])
    if k == "neps":
        return s[0], NePow(s[0])
    if k == "assoc":
        return Prod(s[0], Prod(s[1], s[2])), Prod(Prod(s[0], s[1]), s[2])
    if k == "swap":
        return Prod(s[0], s[1]), Prod(s[1], s[0])
    raise UnknownIdentifier(f"unknown constant {k!r}")


def typecheck(t, ctx: dict) -> Typed:
    """``ctx`` maps variable (and definition) names to (src, tgt) sorts."""
    if isinstance(t, Var):
        if t.name not in ctx:
            raise UnknownIdentifier(f"unknown identifier {t.name!r}")
        src, tgt = ctx[t.name]
        return Typed(t, src, tgt)
    if isinstance(t, Const):
        src, tgt = const_sort(t)
        return Typed(t, src, tgt)
    args = tuple(typecheck(a, ctx) for a in t.args)
    op = t.op
    if op in ("meet", "join", "impl"):
        a, b = args
        if (a.src, a.tgt) != (b.src, b.tgt):
            raise _mismatch("operands differ", Prod(a.src, a.tgt), Prod(b.src, b.tgt), t)
        return Typed(t, a.src, a.tgt, args)
    if op == "comp":
        a, b = args
        if a.tgt != b.src:
            raise _mismatch("composition target/source", a.tgt, b.src, t)
        return Typed(t, a.src, b.tgt, args)
    if op == "conv":
        return Typed(t, args[0].tgt, args[0].src, args)
    if op == "star":
        return Typed(t, args[0].src, args[0].tgt, args)
    if op == "dom":
        return Typed(t, args[0].src, args[0].src, args)
    a, b = args
    if op in ("lres", "syq"):
        if a.src != b.src:
            raise _mismatch("sources differ", a.src, b.src, t)
        return Typed(t, a.tgt, b.tgt, args)
    if op == "rres":
        if a.tgt != b.tgt:
            raise _mismatch("targets differ", a.tgt, b.tgt, t)
        return Typed(t, a.src, b.src, args)
    if op in ("ubd", "lbd", "lub", "glb"):
        if a.src != a.tgt:
            raise _mismatch("ordering must be square", a.src, a.tgt, t)
        if b.tgt != a.src:
            raise _mismatch("bounded relation target", b.tgt, a.src, t)
        return Typed(t, b.src, a.src, args)
    if op == "fork":
        if a.src != b.src:
            raise _mismatch("sources differ", a.src, b.src, t)
        return Typed(t, a.src, Prod(a.tgt, b.tgt), args)
    if op == "pair":
        if a.tgt != b.tgt:
            raise _mismatch("targets differ", a.tgt, b.tgt, t)
        return Typed(t, Prod(a.src, b.src), a.tgt, args)
    if op == "tensor":
        return Typed(t, Prod(a.src, b.src), Prod(a.tgt, b.tgt), args)
    raise UnknownIdentifier(f"unknown operation {op!r}")


def typecheck_formula(f, ctx: dict):
    """Returns the formula with every term replaced by its Typed tree."""
    if isinstance(f, Cmp):
        a, b = typecheck(f.lhs, ctx), typecheck(f.rhs, ctx)
        if (a.src, a.tgt) != (b.src, b.tgt):
            raise SortMismatch(
                f"sides of {formula_str(f)} differ: {sort_str(a.src)} -> {sort_str(a.tgt)} vs "
                f"{sort_str(b.src)} -> {sort_str(b.tgt)}", (a.src, a.tgt), (b.src, b.tgt))
        return Cmp(f.rel, a, b)
    if isinstance(f, Pred):
        if f.name not in PREDICATES:
            raise UnknownIdentifier(f"unknown predicate {f.name!r}")
        args = tuple(typecheck(a, ctx) for a in f.args)
        _check_pred(f, args)
        return Pred(f.name, args)
    return Conn(f.op, tuple(typecheck_formula(p, ctx) for p in f.parts))


def _check_pred(f: Pred, args):
    name = f.name
    if name in SQUARE_PREDICATES and args[0].src != args[0].tgt:
        raise SortMismatch(f"{name} needs a square relation: {formula_str(f)}", args[0].src, args[0].tgt)
    if name == "point" and args[0].src != UNIT:
        raise SortMismatch(f"a point has source 1: {formula_str(f)}", args[0].src, UNIT)
    if name == "complemented" and (args[0].src, args[0].tgt) != (args[1].src, args[1].tgt):
        raise SortMismatch(f"complemented needs equal sorts: {formula_str(f)}")
    if name in ("abelian_group", "rno"):
        a = args[0].tgt
        if name == "abelian_group":
            e, fop, n = args
            want = [(e, UNIT, a), (fop, Prod(a, a), a), (n, a, a)]
        else:
            i, c, add = args
            want = [(i, UNIT, a), (c, a, a), (add, Prod(a, a), a)]
        for x, s, t in want:
            if (x.src, x.tgt) != (s, t):
                raise SortMismatch(f"{name}: {term_str(x.node)} should be {sort_str(s)} -> {sort_str(t)}")
    if name == "power" and not isinstance(args[0].tgt, Pow):
        raise SortMismatch(f"power expects a membership relation into P(...): {formula_str(f)}")
    if name == "nepower" and not isinstance(args[0].tgt, NePow):
        raise SortMismatch(f"nepower expects a membership relation into N(...): {formula_str(f)}")


@dataclass
class TypedLaw:
    law: Law
    ctx: dict
    defs: list          # (name, Typed)
    hypotheses: list    # typed formulas
    conclusion: object


def typecheck_law(law: Law) -> TypedLaw:
    ctx = {n: (s, t) for n, s, t in law.variables}
    defs = []
    for name, term in law.defs:
        tt = typecheck(term, ctx)
        ctx[name] = (tt.src, tt.tgt)
        defs.append((name, tt))
    hyps = [typecheck_formula(h, ctx) for h in law.hypotheses]
    concl = typecheck_formula(law.conclusion, ctx)
    return TypedLaw(law, ctx, defs, hyps, concl)
