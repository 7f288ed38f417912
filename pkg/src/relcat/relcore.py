"""L-valued relations between finite carriers, stored as matrices.

A :class:`Rel` holds element indices of its algebra. Comparisons are exact;
there are no tolerances anywhere in this package.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .lattice import HeytingAlgebra, UnknownElement


class RelError(Exception):
    pass


class TypeMismatch(RelError):
    pass


class AlgebraMismatch(RelError):
    pass


class EmptyCarrier(RelError):
    pass


@dataclass(frozen=True)
class Obj:
    name: str
    carrier: tuple
    # structural origin, e.g. ("prod", A, B); metadata only
    parts: tuple | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        carrier = tuple(str(c) for c in self.carrier)
        object.__setattr__(self, "carrier", carrier)
        if not carrier:
            raise EmptyCarrier(f"object {self.name!r} has an empty carrier")
        if len(set(carrier)) != len(carrier):
            raise RelError(f"object {self.name!r} has repeated carrier entries")

    def __len__(self):
        return len(self.carrier)

    def __str__(self):
        return self.name


def obj(name: str, carrier) -> Obj:
    """Convenience: an int carrier means elements x0..x{n-1}."""
    if isinstance(carrier, int):
        carrier = [f"x{i}" for i in range(carrier)]
    return Obj(name, tuple(carrier))


class Rel:
    __slots__ = ("src", "tgt", "alg", "m", "_hash")

    def __init__(self, src: Obj, tgt: Obj, alg: HeytingAlgebra, m):
        self.src = src
        self.tgt = tgt
        self.alg = alg
        self.m = m
        self._hash = None

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Rel):
            return NotImplemented
        return (self.m == other.m and _same_obj(self.src, other.src)
                and _same_obj(self.tgt, other.tgt) and _same_alg(self.alg, other.alg))

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.src, self.tgt, self.m))
        return self._hash

    def __le__(self, other):
        return included(self, other)

    def __ge__(self, other):
        return included(other, self)

    def __and__(self, other):
        return meet(self, other)

    def __or__(self, other):
        return join(self, other)

    @property
    def T(self):
        return converse(self)

    @property
    def shape(self):
        return len(self.src), len(self.tgt)

    def names(self) -> list[list[str]]:
        el = self.alg.elements
        return [[el[x] for x in row] for row in self.m]

    def entry(self, a: str, b: str) -> str:
        i = self.src.carrier.index(str(a))
        j = self.tgt.carrier.index(str(b))
        return self.alg.elements[self.m[i][j]]

    def is_crisp(self) -> bool:
        ok = (self.alg.bot, self.alg.top)
        return all(x in ok for row in self.m for x in row)

    def __repr__(self):
        return f"Rel({self.src.name}->{self.tgt.name}, {format_rel(self)!r})"

    def __str__(self):
        return format_rel(self)


def _same_obj(a, b):
    return a is b or a == b


def _same_alg(a, b):
    return a is b or a == b


def make_rel(src: Obj, tgt: Obj, alg: HeytingAlgebra, matrix: Sequence[Sequence]) -> Rel:
    """Validated constructor from element names (or indices)."""
    if len(matrix) != len(src):
        raise TypeMismatch(f"expected {len(src)} rows for {src.name}, got {len(matrix)}")
    rows = []
    for row in matrix:
        if len(row) != len(tgt):
            raise TypeMismatch(f"expected {len(tgt)} columns for {tgt.name}, got {len(row)}")
        out = []
        for x in row:
            if isinstance(x, int) and not isinstance(x, bool):
                if not 0 <= x < len(alg):
                    raise UnknownElement(f"index {x} out of range")
                out.append(x)
            else:
                out.append(alg.idx(str(x)))
        rows.append(tuple(out))
    return Rel(src, tgt, alg, tuple(rows))


def format_rel(r: Rel) -> str:
    """Rows in parentheses, single-space separated, one row per line."""
    return "\n".join("(" + " ".join(row) + ")" for row in r.names())


def _same_sort(q: Rel, r: Rel, what: str):
    if not _same_alg(q.alg, r.alg):
        raise AlgebraMismatch(f"{what}: relations over different algebras")
    if not (_same_obj(q.src, r.src) and _same_obj(q.tgt, r.tgt)):
        raise TypeMismatch(
            f"{what}: {q.src.name}->{q.tgt.name} vs {r.src.name}->{r.tgt.name}")


def _need(cond: bool, q: Rel, r: Rel, what: str):
    if not _same_alg(q.alg, r.alg):
        raise AlgebraMismatch(f"{what}: relations over different algebras")
    if not cond:
        raise TypeMismatch(
            f"{what}: {q.src.name}->{q.tgt.name} vs {r.src.name}->{r.tgt.name}")


# -- constants ---------------------------------------------------------------

def identity(a: Obj, alg: HeytingAlgebra) -> Rel:
    n = len(a)
    m = tuple(tuple(alg.top if i == j else alg.bot for j in range(n)) for i in range(n))
    return Rel(a, a, alg, m)


def bottom(a: Obj, b: Obj, alg: HeytingAlgebra) -> Rel:
    row = (alg.bot,) * len(b)
    return Rel(a, b, alg, (row,) * len(a))


def top_rel(a: Obj, b: Obj, alg: HeytingAlgebra) -> Rel:
    row = (alg.top,) * len(b)
    return Rel(a, b, alg, (row,) * len(a))


# -- pointwise Heyting operations ------------------------------------------

def meet(q: Rel, r: Rel) -> Rel:
    _same_sort(q, r, "meet")
    alg = q.alg
    if alg.is_chain:
        m = tuple(tuple(map(min, a, b)) for a, b in zip(q.m, r.m))
    else:
        t = alg.meet
        m = tuple(tuple(t[x][y] for x, y in zip(a, b)) for a, b in zip(q.m, r.m))
    return Rel(q.src, q.tgt, alg, m)


def join(q: Rel, r: Rel) -> Rel:
    _same_sort(q, r, "join")
    alg = q.alg
    if alg.is_chain:
        m = tuple(tuple(map(max, a, b)) for a, b in zip(q.m, r.m))
    else:
        t = alg.join
        m = tuple(tuple(t[x][y] for x, y in zip(a, b)) for a, b in zip(q.m, r.m))
    return Rel(q.src, q.tgt, alg, m)


def impl_rel(q: Rel, r: Rel) -> Rel:
    _same_sort(q, r, "impl")
    t = q.alg.impl
    m = tuple(tuple(t[x][y] for x, y in zip(a, b)) for a, b in zip(q.m, r.m))
    return Rel(q.src, q.tgt, q.alg, m)


def star(q: Rel) -> Rel:
    """Pseudo-complement Q -> bottom."""
    t = q.alg.impl
    bot = q.alg.bot
    m = tuple(tuple(t[x][bot] for x in row) for row in q.m)
    return Rel(q.src, q.tgt, q.alg, m)


def converse(q: Rel) -> Rel:
    return Rel(q.tgt, q.src, q.alg, tuple(zip(*q.m)))


def included(q: Rel, r: Rel) -> bool:
    _same_sort(q, r, "inclusion")
    alg = q.alg
    if alg.is_chain:
        return all(x <= y for a, b in zip(q.m, r.m) for x, y in zip(a, b))
    leq = alg.leq
    return all(leq[x][y] for a, b in zip(q.m, r.m) for x, y in zip(a, b))


# -- composition and residuals ----------------------------------------------

def compose(q: Rel, r: Rel) -> Rel:
    """(Q;R)(a,c) = sup_b Q(a,b) meet R(b,c)."""
    _need(_same_obj(q.tgt, r.src), q, r, "composition")
    alg = q.alg
    cols = tuple(zip(*r.m))
    if alg.is_chain:
        m = tuple(tuple(max(map(min, row, col)) for col in cols) for row in q.m)
    else:
        mt, jt, bot = alg.meet, alg.join, alg.bot
        out = []
        for row in q.m:
            orow = []
            for col in cols:
                acc = bot
                for x, y in zip(row, col):
                    acc = jt[acc][mt[x][y]]
                orow.append(acc)
            out.append(tuple(orow))
        m = tuple(out)
    return Rel(q.src, r.tgt, alg, m)


def _inf_impl(alg, us, vs):
    """Matrix whose (i,j) entry is inf_k us[i][k] -> vs[j][k]."""
    it = alg.impl
    if alg.is_chain:
        top = alg.top
        return tuple(tuple(min([top if x <= y else y for x, y in zip(u, v)]) for v in vs) for u in us)
    mt, top = alg.meet, alg.top
    out = []
    for u in us:
        orow = []
        for v in vs:
            acc = top
            for x, y in zip(u, v):
                acc = mt[acc][it[x][y]]
            orow.append(acc)
        out.append(tuple(orow))
    return tuple(out)


def lres(q: Rel, r: Rel) -> Rel:
    """Left residual Q\\R: (b,c) = inf_a Q(a,b) -> R(a,c)."""
    _need(_same_obj(q.src, r.src), q, r, "left residual")
    m = _inf_impl(q.alg, tuple(zip(*q.m)), tuple(zip(*r.m)))
    return Rel(q.tgt, r.tgt, q.alg, m)


def rres(s: Rel, r: Rel) -> Rel:
    """Right residual S/R: (a,b) = inf_c R(b,c) -> S(a,c)."""
    _need(_same_obj(s.tgt, r.tgt), s, r, "right residual")
    alg = s.alg
    # (a,b) entry: inf over c of R[b][c] -> S[a][c]; transpose of _inf_impl(R rows, S rows)
    m = tuple(zip(*_inf_impl(alg, r.m, s.m)))
    return Rel(s.src, r.src, alg, m)


def syq(q: Rel, r: Rel) -> Rel:
    """Symmetric quotient (Q\\R) meet (Q^T / R^T)."""
    _need(_same_obj(q.src, r.src), q, r, "symmetric quotient")
    return meet(lres(q, r), rres(converse(q), converse(r)))


def dom(r: Rel) -> Rel:
    """I meet R;R^T, computed on the diagonal (the off-diagonal part is bottom)."""
    alg = r.alg
    n = len(r.src)
    if alg.is_chain:
        diag = [max(row) for row in r.m]
    else:
        jt = alg.join
        diag = []
        for row in r.m:
            acc = alg.bot
            for x in row:
                acc = jt[acc][x]
            diag.append(acc)
    bot = alg.bot
    m = tuple(tuple(diag[i] if i == j else bot for j in range(n)) for i in range(n))
    return Rel(r.src, r.src, alg, m)


# -- bounds -------------------------------------------------------------------

def _check_bounds(e: Rel, x: Rel, what: str):
    _need(_same_obj(e.src, e.tgt), e, e, what + " (ordering must be square)")
    _need(_same_obj(x.tgt, e.src), x, e, what)


def ubd(e: Rel, x: Rel) -> Rel:
    _check_bounds(e, x, "ubd")
    return lres(converse(x), e)


def lbd(e: Rel, x: Rel) -> Rel:
    _check_bounds(e, x, "lbd")
    return lres(converse(x), converse(e))


def lub(e: Rel, x: Rel) -> Rel:
    u = ubd(e, x)
    return meet(u, lbd(e, u))


def glb(e: Rel, x: Rel) -> Rel:
    lo = lbd(e, x)
    return meet(lo, ubd(e, lo))


# -- predicates ---------------------------------------------------------------

def _square(q: Rel, what: str):
    if not _same_obj(q.src, q.tgt):
        raise TypeMismatch(f"{what} needs a square relation, got {q.src.name}->{q.tgt.name}")


def is_univalent(q: Rel) -> bool:
    return included(compose(converse(q), q), identity(q.tgt, q.alg))


def is_total(q: Rel) -> bool:
    return included(identity(q.src, q.alg), compose(q, converse(q)))


def is_injective(q: Rel) -> bool:
    return is_univalent(converse(q))


def is_surjective(q: Rel) -> bool:
    return is_total(converse(q))


def is_map(q: Rel) -> bool:
    return is_total(q) and is_univalent(q)


def is_bijection(q: Rel) -> bool:
    return is_map(q) and is_injective(q) and is_surjective(q)


def is_transitive(c: Rel) -> bool:
    _square(c, "transitive")
    return included(compose(c, c), c)


def is_dense(c: Rel) -> bool:
    _square(c, "dense")
    return included(c, compose(c, c))


def is_asymmetric(c: Rel) -> bool:
    _square(c, "asymmetric")
    return meet(c, converse(c)) == bottom(c.src, c.tgt, c.alg)


def is_strict_order(c: Rel) -> bool:
    return is_transitive(c) and is_asymmetric(c)


def is_linear_strict_order(c: Rel) -> bool:
    if not is_strict_order(c):
        return False
    full = join(join(identity(c.src, c.alg), c), converse(c))
    return full == top_rel(c.src, c.tgt, c.alg)


def is_reflexive(e: Rel) -> bool:
    _square(e, "reflexive")
    return included(identity(e.src, e.alg), e)


def is_antisymmetric(e: Rel) -> bool:
    _square(e, "antisymmetric")
    return included(meet(e, converse(e)), identity(e.src, e.alg))


def is_symmetric(e: Rel) -> bool:
    _square(e, "symmetric")
    return converse(e) == e


def is_ordering(e: Rel) -> bool:
    return is_reflexive(e) and is_transitive(e) and is_antisymmetric(e)


def is_per(e: Rel) -> bool:
    return is_symmetric(e) and is_transitive(e)


def is_partial_identity(i: Rel) -> bool:
    _square(i, "partial identity")
    return included(i, identity(i.src, i.alg))


def is_regular(q: Rel) -> bool:
    return star(star(q)) == q


def is_complemented_pair(q: Rel, r: Rel) -> bool:
    _same_sort(q, r, "complement")
    return (meet(q, r) == bottom(q.src, q.tgt, q.alg)
            and join(q, r) == top_rel(q.src, q.tgt, q.alg))


def is_crisp(q: Rel) -> bool:
    return q.is_crisp()


def ordering_of(c: Rel) -> Rel:
    """Associated ordering I join C of a strict order."""
    _square(c, "ordering_of")
    return join(identity(c.src, c.alg), c)
