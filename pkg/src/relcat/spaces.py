"""Enumeration and sampling of all relations of a sort.

A :class:`Space` is the set of matrices ``src -> tgt`` satisfying a set of
unary predicates. Candidates are generated from a structured superset
(row-wise for functional predicates, diagonal/pair-wise for order-like
predicates) and then filtered by the exact predicates, so the result is
always exactly ``{R | all preds hold}``; the structure only prunes.
"""
from __future__ import annotations

import itertools
import math
import random
from typing import Iterator

from . import relcore as rc
from .lattice import HeytingAlgebra
from .relcore import Obj, Rel

PREDICATES = {
    "univalent": rc.is_univalent,
    "total": rc.is_total,
    "injective": rc.is_injective,
    "surjective": rc.is_surjective,
    "map": rc.is_map,
    "bijection": rc.is_bijection,
    "point": lambda q: len(q.src) == 1 and rc.is_map(q),
    "transitive": rc.is_transitive,
    "dense": rc.is_dense,
    "asymmetric": rc.is_asymmetric,
    "strict_order": rc.is_strict_order,
    "linear_strict_order": rc.is_linear_strict_order,
    "reflexive": rc.is_reflexive,
    "antisymmetric": rc.is_antisymmetric,
    "symmetric": rc.is_symmetric,
    "ordering": rc.is_ordering,
    "per": rc.is_per,
    "partial_identity": rc.is_partial_identity,
    "regular": rc.is_regular,
    "crisp": rc.is_crisp,
}

SQUARE_PREDICATES = frozenset({
    "transitive", "dense", "asymmetric", "strict_order", "linear_strict_order",
    "reflexive", "antisymmetric", "symmetric", "ordering", "per", "partial_identity",
})

_ROW = {"total", "univalent", "map", "point", "bijection"}
_COL = {"surjective", "injective"}
_DIAG_TOP = {"reflexive", "ordering"}
_DIAG_BOT = {"asymmetric", "strict_order", "linear_strict_order"}
# row/column structuring is skipped when a single line has too many candidates
_LINE_LIMIT = 1 << 16
_PAIR_DISJOINT = {"asymmetric", "strict_order", "linear_strict_order", "antisymmetric", "ordering"}


def full_count(src: Obj, tgt: Obj, alg: HeytingAlgebra, crisp: bool = False) -> int:
    base = 2 if crisp else len(alg)
    return base ** (len(src) * len(tgt))


class Space:
    def __init__(self, src: Obj, tgt: Obj, alg: HeytingAlgebra, preds=(), crisp: bool = False):
        self.src, self.tgt, self.alg = src, tgt, alg
        self.preds = tuple(sorted(set(preds)))
        self.crisp = crisp
        unknown = [p for p in self.preds if p not in PREDICATES]
        if unknown:
            raise KeyError(f"unknown predicate(s) {unknown}")
        self._checks = [PREDICATES[p] for p in self.preds]
        if crisp:
            self._checks.append(rc.is_crisp)
        self._domain = (alg.bot, alg.top) if crisp else tuple(range(len(alg)))
        self._pool = None
        self._setup()

    # -- structure ---------------------------------------------------------

    def _setup(self):
        p = set(self.preds)
        m, n = len(self.src), len(self.tgt)
        square = self.src == self.tgt
        if square and p & SQUARE_PREDICATES:
            self.mode = "pairs"
            diag = self._domain
            if p & _DIAG_TOP:
                diag = tuple(x for x in diag if x == self.alg.top)
            if p & _DIAG_BOT:
                diag = tuple(x for x in diag if x == self.alg.bot)
            pairs = list(itertools.product(self._domain, repeat=2))
            mt, jt = self.alg.meet, self.alg.join
            if "partial_identity" in p:
                pairs = [(x, y) for x, y in pairs if x == y == self.alg.bot]
            if p & _PAIR_DISJOINT:
                pairs = [(x, y) for x, y in pairs if mt[x][y] == self.alg.bot]
            if "linear_strict_order" in p:
                pairs = [(x, y) for x, y in pairs if jt[x][y] == self.alg.top]
            if p & {"symmetric", "per"}:
                pairs = [(x, y) for x, y in pairs if x == y]
            self._offdiag = [(i, j) for i in range(m) for j in range(i + 1, m)]
            self.slots = [diag] * m + [tuple(pairs)] * len(self._offdiag)
        elif p & _ROW and len(self._domain) ** n <= _LINE_LIMIT:
            self.mode = "rows"
            self.slots = [self._lines(n, total=bool(p & {"total", "map", "point", "bijection"}),
                                      disjoint=bool(p & {"univalent", "map", "point", "bijection"}))] * m
        elif p & _COL and len(self._domain) ** m <= _LINE_LIMIT:
            self.mode = "cols"
            self.slots = [self._lines(m, total="surjective" in p, disjoint="injective" in p)] * n
        else:
            self.mode = "entries"
            self.slots = [self._domain] * (m * n)
        self.size = math.prod(len(s) for s in self.slots)

    def _lines(self, k, total, disjoint):
        alg = self.alg
        out = []
        for line in itertools.product(self._domain, repeat=k):
            if total:
                acc = alg.bot
                for x in line:
                    acc = alg.join[acc][x]
                if acc != alg.top:
                    continue
            if disjoint and any(alg.meet[x][y] != alg.bot for x, y in itertools.combinations(line, 2)):
                continue
            out.append(line)
        return tuple(out)

    def _build(self, choice) -> Rel:
        m, n = len(self.src), len(self.tgt)
        if self.mode == "entries":
            mat = tuple(tuple(choice[i * n:(i + 1) * n]) for i in range(m))
        elif self.mode == "rows":
            mat = tuple(choice)
        elif self.mode == "cols":
            mat = tuple(zip(*choice))
        else:
            grid = [[0] * m for _ in range(m)]
            for i in range(m):
                grid[i][i] = choice[i]
            for (i, j), (x, y) in zip(self._offdiag, choice[m:]):
                grid[i][j] = x
                grid[j][i] = y
            mat = tuple(tuple(r) for r in grid)
        return Rel(self.src, self.tgt, self.alg, mat)

    def _ok(self, r: Rel) -> bool:
        return all(c(r) for c in self._checks)

    # -- access --------------------------------------------------------------

    def pool(self) -> list[Rel]:
        """All members, in lexicographic order of their row-major entries."""
        if self._pool is None:
            out = [r for r in map(self._build, itertools.product(*self.slots)) if self._ok(r)]
            out.sort(key=lambda r: r.m)
            self._pool = out
        return self._pool

    def __iter__(self) -> Iterator[Rel]:
        return iter(self.pool())

    def __len__(self):
        return len(self.pool())

    def sample(self, rng: random.Random, tries: int = 200) -> Rel | None:
        """Uniform over the structured superset, rejected until the predicates hold."""
        if any(len(s) == 0 for s in self.slots):
            return None
        for _ in range(tries):
            r = self._build([rng.choice(s) for s in self.slots])
            if self._ok(r):
                return r
        return None


def all_rels(src: Obj, tgt: Obj, alg: HeytingAlgebra, crisp: bool = False) -> Iterator[Rel]:
    dom = (alg.bot, alg.top) if crisp else tuple(range(len(alg)))
    n = len(tgt)
    for flat in itertools.product(dom, repeat=len(src) * n):
        yield Rel(src, tgt, alg, tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(len(src))))


def random_rel(src: Obj, tgt: Obj, alg: HeytingAlgebra, rng: random.Random, crisp: bool = False) -> Rel:
    dom = (alg.bot, alg.top) if crisp else tuple(range(len(alg)))
    return Rel(src, tgt, alg, tuple(tuple(rng.choice(dom) for _ in tgt.carrier) for _ in src.carrier))


def quantify(src: Obj, tgt: Obj, alg: HeytingAlgebra, limit: int = 4096, samples: int = 500, seed: int = 0):
    """All relations if there are at most ``limit``, else a seeded sample.

    Returns ``(iterable, regime)`` with regime ``"exhaustive"`` or ``"random(n, seed)"``.
    """
    if full_count(src, tgt, alg) <= limit:
        return all_rels(src, tgt, alg), "exhaustive"
    rng = random.Random(seed)
    return [random_rel(src, tgt, alg, rng) for _ in range(samples)], f"random({samples}, {seed})"
