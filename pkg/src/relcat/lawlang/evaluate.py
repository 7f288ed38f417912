"""Compile typed terms to closures over a concrete model and sort instance.

Each compiled node caches its value: nodes with one free variable memoise
per value (pools are small), others remember only the last binding, which
pays off because enumeration varies the innermost variable fastest.
"""
from __future__ import annotations

from .. import relcore as rc
from .. import structures as st
from ..spaces import PREDICATES as REL_PREDICATES
from .parser import UnknownIdentifier
from .syntax import UNIT, Base, Cmp, Conn, Const, NePow, Op, Pow, Pred, Prod, Var, sort_str
from .typecheck import Typed, typecheck, typecheck_formula

_MEMO_LIMIT = 4096

_BINARY = {
    "comp": rc.compose, "meet": rc.meet, "join": rc.join, "impl": rc.impl_rel,
    "lres": rc.lres, "rres": rc.rres, "syq": rc.syq,
    "ubd": rc.ubd, "lbd": rc.lbd, "lub": rc.lub, "glb": rc.glb,
}
_UNARY = {"conv": rc.converse, "star": rc.star, "dom": rc.dom}


class Node:
    __slots__ = ("fn", "fv")

    def __init__(self, fn, fv):
        self.fn = fn
        self.fv = fv


def _cached(fn, fv):
    if len(fv) == 1:
        (v,) = fv
        memo = {}

        def run(env):
            x = env[v]
            r = memo.get(x)
            if r is None:
                if len(memo) >= _MEMO_LIMIT:
                    memo.clear()
                r = memo[x] = fn(env)
            return r
        return run
    last_key = [None]
    last_val = [None]

    def run(env):
        key = [env[v] for v in fv]
        old = last_key[0]
        if old is not None and all(a is b for a, b in zip(key, old)):
            return last_val[0]
        val = fn(env)
        last_key[0] = key
        last_val[0] = val
        return val
    return run


class Compiler:
    """Resolves sorts against ``instance`` (base sort name -> Obj) in ``model``."""

    def __init__(self, model: st.Model, instance: dict):
        self.model = model
        self.instance = dict(instance)
        self.defs: dict[str, Node] = {}
        self._consts: dict = {}

    def obj(self, s):
        m = self.model
        if s == UNIT:
            return m.unit
        if isinstance(s, Base):
            try:
                return self.instance[s.name]
            except KeyError:
                raise UnknownIdentifier(f"sort {s.name!r} is not bound to an object") from None
        if isinstance(s, Prod):
            return m.product(self.obj(s.left), self.obj(s.right)).obj
        if isinstance(s, Pow):
            return m.power(self.obj(s.base)).obj
        if isinstance(s, NePow):
            return m.nepower(self.obj(s.base)).obj
        raise TypeError(f"not a sort: {s!r}")

    def constant(self, c: Const) -> rc.Rel:
        key = c
        if key in self._consts:
            return self._consts[key]
        m, alg = self.model, self.model.alg
        objs = [self.obj(s) for s in c.sorts]
        k = c.kind
        if k == "I":
            v = rc.identity(objs[0], alg)
        elif k == "bot":
            v = rc.bottom(objs[0], objs[1], alg)
        elif k == "top":
            v = rc.top_rel(objs[0], objs[1], alg)
        elif k == "pi":
            v = m.product(objs[0], objs[1]).pi
        elif k == "rho":
            v = m.product(objs[0], objs[1]).rho
        elif k == "eps":
            v = m.power(objs[0]).eps
        elif k == "neps":
            v = m.nepower(objs[0]).eps
        elif k == "assoc":
            v = st.assoc_map(objs[0], objs[1], objs[2], m)
        elif k == "swap":
            v = st.swap_map(objs[0], objs[1], m)
        else:
            raise UnknownIdentifier(f"unknown constant {k!r}")
        self._consts[key] = v
        return v

    def define(self, name: str, typed: Typed):
        self.defs[name] = self.term(typed)

    def term(self, t: Typed) -> Node:
        node = t.node
        if isinstance(node, Var):
            if node.name in self.defs:
                return self.defs[node.name]
            name = node.name
            return Node(lambda env: env[name], (name,))
        if isinstance(node, Const):
            val = self.constant(node)
            return Node(lambda env: val, ())
        kids = [self.term(a) for a in t.args]
        fv = tuple(sorted({v for k in kids for v in k.fv}))
        op = node.op
        if op in _UNARY:
            f = _UNARY[op]
            a = kids[0].fn
            raw = lambda env: f(a(env))
        elif op in _BINARY:
            f = _BINARY[op]
            a, b = kids[0].fn, kids[1].fn
            raw = lambda env: f(a(env), b(env))
        elif op in ("fork", "pair", "tensor"):
            f = getattr(st, op)
            a, b = kids[0].fn, kids[1].fn
            m = self.model
            raw = lambda env: f(a(env), b(env), m)
        else:
            raise UnknownIdentifier(f"unknown operation {op!r}")
        if not fv:
            val = raw({})
            return Node(lambda env: val, ())
        return Node(_cached(raw, fv), fv)

    def formula(self, f):
        """Compile a typed formula to ``env -> bool``."""
        if isinstance(f, Cmp):
            a, b = self.term(f.lhs).fn, self.term(f.rhs).fn
            if f.rel == "<=":
                return lambda env: rc.included(a(env), b(env))
            return lambda env: a(env) == b(env)
        if isinstance(f, Pred):
            args = [self.term(x).fn for x in f.args]
            test = self.predicate(f.name)
            if len(args) == 1:
                (a,) = args
                return lambda env: test(a(env))
            return lambda env: test(*[x(env) for x in args])
        parts = [self.formula(p) for p in f.parts]
        if f.op == "and":
            return lambda env: all(p(env) for p in parts)
        if f.op == "=>":
            lhs, rhs = parts
            return lambda env: (not lhs(env)) or rhs(env)
        return lambda env: len({p(env) for p in parts}) == 1

    def predicate(self, name: str):
        m = self.model
        if name in REL_PREDICATES:
            return REL_PREDICATES[name]
        if name == "complemented":
            return rc.is_complemented_pair
        if name == "abelian_group":
            return lambda e, f, n: st.group_axioms(st.GroupCandidate(e.tgt, e, f, n), m).passed
        if name == "rno":
            return lambda i, c, add: all(st.rno_axioms(st.RnoCandidate(i.tgt, i, c, add), m).values())

        def witness(kind):
            def test(eps):
                w = m.witness_for_eps(eps)
                if kind == "power":
                    return isinstance(w, st.PowerWitness) and w.verified
                return isinstance(w, st.NePowerWitness) and w.ok
            return test
        if name in ("power", "nepower"):
            return witness(name)
        raise UnknownIdentifier(f"unknown predicate {name!r}")


def obj_sort(o: rc.Obj):
    """Symbolic sort of a concrete object, following its construction."""
    parts = o.parts
    if parts:
        if parts[0] == "unit":
            return UNIT
        if parts[0] == "prod":
            return Prod(obj_sort(parts[1]), obj_sort(parts[2]))
        if parts[0] == "pow":
            return Pow(obj_sort(parts[1]))
        if parts[0] == "nepow":
            return NePow(obj_sort(parts[1]))
    return Base(o.name)


def _collect_bases(o, out):
    parts = o.parts
    if parts and parts[0] in ("prod", "pow", "nepow"):
        for p in parts[1:]:
            _collect_bases(p, out)
    elif not (parts and parts[0] == "unit"):
        out[o.name] = o


def model_scope(model: st.Model, binding: dict | None = None):
    """Variables, contexts and instance for evaluating against a model."""
    from .parser import parse_term
    env = dict(model.relations)
    env.update(binding or {})
    instance = dict(model.objects)
    for r in env.values():
        _collect_bases(r.src, instance)
        _collect_bases(r.tgt, instance)
    ctx = {n: (obj_sort(r.src), obj_sort(r.tgt)) for n, r in env.items()}
    comp = Compiler(model, instance)
    for name, text in model.defs.items():
        if binding and name in binding:
            continue
        tt = typecheck(parse_term(text) if isinstance(text, str) else text, ctx)
        ctx[name] = (tt.src, tt.tgt)
        comp.define(name, tt)
    return env, ctx, comp


def evaluate(term, binding: dict | None, model: st.Model) -> rc.Rel:
    """Evaluate a term (text or AST) under ``binding`` plus the model's own relations/defs."""
    from .parser import parse_term
    if isinstance(term, str):
        term = parse_term(term)
    env, ctx, comp = model_scope(model, binding)
    return comp.term(typecheck(term, ctx)).fn(env)


def evaluate_formula(formula, binding: dict | None, model: st.Model) -> bool:
    from .parser import parse_formula
    if isinstance(formula, str):
        formula = parse_formula(formula)
    env, ctx, comp = model_scope(model, binding)
    return comp.formula(typecheck_formula(formula, ctx))(env)


def describe_sort(t: Typed) -> str:
    return f"{sort_str(t.src)} -> {sort_str(t.tgt)}"
