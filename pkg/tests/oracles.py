"""Independent brute-force oracles.

Everything here works from the order table ``leq`` alone and from nested
lists; none of it calls the package's meet/join/impl tables or relation
operations, so agreement is meaningful.
"""
from __future__ import annotations

import itertools


def inf(alg, xs):
    n = len(alg.elements)
    lower = [z for z in range(n) if all(alg.leq[z][x] for x in xs)]
    return next(z for z in lower if all(alg.leq[w][z] for w in lower))


def sup(alg, xs):
    n = len(alg.elements)
    upper = [z for z in range(n) if all(alg.leq[x][z] for x in xs)]
    return next(z for z in upper if all(alg.leq[z][w] for w in upper))


def impl(alg, x, y):
    """Greatest z with inf(x, z) <= y, by scanning every z."""
    cands = [z for z in range(len(alg.elements)) if alg.leq[inf(alg, [x, z])][y]]
    return sup(alg, cands)


def mat(r):
    return [list(row) for row in r.m]


def compose(alg, q, r):
    return [[sup(alg, [inf(alg, [q[i][k], r[k][j]]) for k in range(len(r))]) for j in range(len(r[0]))]
            for i in range(len(q))]


def conv(q):
    return [list(c) for c in zip(*q)]


def leq_m(alg, q, r):
    return all(alg.leq[a][b] for qa, ra in zip(q, r) for a, b in zip(qa, ra))


def meet_m(alg, q, r):
    return [[inf(alg, [a, b]) for a, b in zip(x, y)] for x, y in zip(q, r)]


def join_all(alg, mats, rows, cols):
    return [[sup(alg, [m[i][j] for m in mats]) for j in range(cols)] for i in range(rows)]


def all_mats(alg, rows, cols):
    for flat in itertools.product(range(len(alg.elements)), repeat=rows * cols):
        yield [list(flat[i * cols:(i + 1) * cols]) for i in range(rows)]


def greatest(alg, rows, cols, ok):
    """The greatest matrix satisfying ``ok``; asserts that the join of all solutions is one."""
    sols = [x for x in all_mats(alg, rows, cols) if ok(x)]
    best = join_all(alg, sols, rows, cols)
    assert ok(best), "solutions have no greatest element"
    return best


def lres(alg, q, r):
    """Greatest X with Q;X <= R."""
    return greatest(alg, len(q[0]), len(r[0]), lambda x: leq_m(alg, compose(alg, q, x), r))


def rres(alg, s, r):
    """Greatest X with X;R <= S."""
    return greatest(alg, len(s), len(r), lambda x: leq_m(alg, compose(alg, x, r), s))


def syq(alg, q, r):
    """Greatest X with Q;X <= R and R;X^T <= Q."""
    return greatest(alg, len(q[0]), len(r[0]),
                    lambda x: leq_m(alg, compose(alg, q, x), r) and leq_m(alg, compose(alg, r, conv(x)), q))


def lub(alg, e, x):
    """ubd = greatest Y with X^T;Y <= E; lbd(ubd) = greatest Z with ubd^T;Z <= E^T; lub = their meet."""
    u = greatest(alg, len(x), len(e), lambda y: leq_m(alg, compose(alg, conv(x), y), e))
    lo = greatest(alg, len(x), len(e), lambda z: leq_m(alg, compose(alg, conv(u), z), conv(e)))
    return meet_m(alg, u, lo)


def classical_lub(order, subset):
    """Least upper bound of ``subset`` in a finite poset given as a boolean matrix, or None."""
    n = len(order)
    ub = [b for b in range(n) if all(order[a][b] for a in subset)]
    least = [b for b in ub if all(order[b][c] for c in ub)]
    return least[0] if least else None
