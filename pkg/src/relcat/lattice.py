"""Finite Heyting algebras used as truth-value carriers for relations.

Elements are opaque string identifiers. Internally every element is an
index into ``elements`` and all operations are precomputed tables, so the
relation layer only ever does list lookups.
"""
from __future__ import annotations

import itertools
import json
import re
from typing import Iterable, Sequence


class LatticeError(ValueError):
    pass


class NotALattice(LatticeError):
    pass


class NotDistributive(LatticeError):
    pass


class DuplicateElement(LatticeError):
    pass


class UnknownElement(LatticeError):
    pass


class InvalidSize(LatticeError):
    pass


class HeytingAlgebra:
    """A finite Heyting algebra given by its partial order.

    meet/join/impl are computed by exhaustive scan over the order, so the
    residuation law holds by construction; it is still re-validated.
    """

    __slots__ = (
        "name", "elements", "index", "leq", "meet", "join", "impl",
        "bot", "top", "is_chain", "_key",
    )

    def __init__(self, elements: Sequence[str], leq: Sequence[Sequence[bool]], name: str | None = None):
        elements = tuple(str(e) for e in elements)
        if not elements:
            raise InvalidSize("a Heyting algebra needs at least one element")
        seen = set()
        for e in elements:
            if e in seen:
                raise DuplicateElement(f"duplicate element {e!r}")
            seen.add(e)
        n = len(elements)
        leq = tuple(tuple(bool(leq[i][j]) for j in range(n)) for i in range(n))
        _check_partial_order(elements, leq)

        self.name = name or "L" + str(n)
        self.elements = elements
        self.index = {e: i for i, e in enumerate(elements)}
        self.leq = leq
        self.meet = _bound_table(elements, leq, lower=True)
        self.join = _bound_table(elements, leq, lower=False)
        bots = [i for i in range(n) if all(leq[i][j] for j in range(n))]
        tops = [i for i in range(n) if all(leq[j][i] for j in range(n))]
        # a finite lattice always has both; asserted for clarity
        assert bots and tops
        self.bot, self.top = bots[0], tops[0]
        _check_distributive(elements, self.meet, self.join)
        self.impl = self._residuals()
        self.is_chain = all(leq[i][j] == (i <= j) for i in range(n) for j in range(n))
        self._key = (elements, leq)
        self.validate()

    def _residuals(self):
        n = len(self.elements)
        meet, join, leq = self.meet, self.join, self.leq
        table = []
        for x in range(n):
            row = []
            for y in range(n):
                acc = self.bot
                for z in range(n):
                    if leq[meet[z][x]][y]:
                        acc = join[acc][z]
                row.append(acc)
            table.append(tuple(row))
        return tuple(table)

    def validate(self):
        n = len(self.elements)
        leq, meet, impl = self.leq, self.meet, self.impl
        for x, y, z in itertools.product(range(n), repeat=3):
            if leq[meet[x][z]][y] != leq[z][impl[x][y]]:
                raise NotALattice(
                    f"residuation fails at {self.elements[x]}, {self.elements[y]}, {self.elements[z]}")

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, HeytingAlgebra):
            return NotImplemented
        return self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"HeytingAlgebra({self.name}, {list(self.elements)})"

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def idx(self, name: str) -> int:
        try:
            return self.index[str(name)]
        except KeyError:
            raise UnknownElement(f"{name!r} is not an element of {self.name}") from None

    def le(self, x: str, y: str) -> bool:
        return self.leq[self.idx(x)][self.idx(y)]

    def op(self, table: str, x: str, y: str) -> str:
        """Named-element access to ``meet``, ``join`` or ``impl``."""
        t = getattr(self, table)
        return self.elements[t[self.idx(x)][self.idx(y)]]

    def neg(self, i: int) -> int:
        return self.impl[i][self.bot]

    def complemented(self) -> list[int]:
        """Indices of elements that have a lattice complement."""
        out = []
        for x in range(len(self.elements)):
            if any(self.meet[x][y] == self.bot and self.join[x][y] == self.top
                   for y in range(len(self.elements))):
                out.append(x)
        return out

    @property
    def is_boolean(self) -> bool:
        return len(self.complemented()) == len(self.elements)

    def to_dict(self) -> dict:
        return {"elements": list(self.elements), "cover": [list(p) for p in self.cover_pairs()]}

    def cover_pairs(self) -> list[tuple[str, str]]:
        n = len(self.elements)
        out = []
        for i, j in itertools.product(range(n), repeat=2):
            if i != j and self.leq[i][j]:
                if not any(k not in (i, j) and self.leq[i][k] and self.leq[k][j] for k in range(n)):
                    out.append((self.elements[i], self.elements[j]))
        return out


def _check_partial_order(elements, leq):
    n = len(elements)
    for i in range(n):
        if not leq[i][i]:
            raise NotALattice(f"order is not reflexive at {elements[i]!r}")
    for i, j in itertools.product(range(n), repeat=2):
        if i != j and leq[i][j] and leq[j][i]:
            raise NotALattice(f"order is not antisymmetric: {elements[i]!r}, {elements[j]!r}")
    for i, j, k in itertools.product(range(n), repeat=3):
        if leq[i][j] and leq[j][k] and not leq[i][k]:
            raise NotALattice("order is not transitive")


def _bound_table(elements, leq, lower):
    n = len(elements)
    rel = (lambda a, b: leq[a][b]) if lower else (lambda a, b: leq[b][a])
    table = []
    for x in range(n):
        row = []
        for y in range(n):
            cands = [z for z in range(n) if rel(z, x) and rel(z, y)]
            best = [z for z in cands if all(rel(w, z) for w in cands)]
            if not best:
                kind = "infimum" if lower else "supremum"
                raise NotALattice(f"{elements[x]!r} and {elements[y]!r} have no {kind}")
            row.append(best[0])
        table.append(tuple(row))
    return tuple(table)


def _check_distributive(elements, meet, join):
    n = len(elements)
    for x, y, z in itertools.product(range(n), repeat=3):
        if meet[x][join[y][z]] != join[meet[x][y]][meet[x][z]]:
            raise NotDistributive(
                f"distributivity fails at {elements[x]!r}, {elements[y]!r}, {elements[z]!r}")


def from_order(elements: Sequence[str], cover_pairs: Iterable[Sequence[str]], name: str | None = None) -> HeytingAlgebra:
    """Build an algebra from covering pairs (x, y) meaning x <= y."""
    elements = [str(e) for e in elements]
    if not elements:
        raise InvalidSize("elements must be non-empty")
    index = {}
    for e in elements:
        if e in index:
            raise DuplicateElement(f"duplicate element {e!r}")
        index[e] = len(index)
    n = len(elements)
    leq = [[i == j for j in range(n)] for i in range(n)]
    for pair in cover_pairs:
        x, y = (str(p) for p in pair)
        for e in (x, y):
            if e not in index:
                raise UnknownElement(f"covering pair mentions unknown element {e!r}")
        leq[index[x]][index[y]] = True
    for k in range(n):
        for i in range(n):
            if leq[i][k]:
                for j in range(n):
                    if leq[k][j]:
                        leq[i][j] = True
    return HeytingAlgebra(elements, leq, name=name)


def chain(n: int, labels: Sequence[str] | None = None) -> HeytingAlgebra:
    if n < 1:
        raise InvalidSize(f"chain size must be positive, got {n}")
    labels = [str(i) for i in range(n)] if labels is None else [str(x) for x in labels]
    if len(labels) != n:
        raise InvalidSize("need one label per chain element")
    name = "bool" if n == 2 and labels == ["0", "1"] else f"chain:{n}"
    return from_order(labels, zip(labels, labels[1:]), name=name)


def boolean() -> HeytingAlgebra:
    return chain(2)


def paper_chain() -> HeytingAlgebra:
    """The three-element chain 0 < u < 1."""
    return from_order(["0", "u", "1"], [("0", "u"), ("u", "1")], name="chain:0u1")


def product_algebra(a: HeytingAlgebra, b: HeytingAlgebra) -> HeytingAlgebra:
    short = all(len(e) == 1 for e in a.elements + b.elements)
    names = [x + y if short else f"({x},{y})" for x in a.elements for y in b.elements]
    pairs = [(i, j) for i in range(len(a)) for j in range(len(b))]
    leq = [[a.leq[p[0]][q[0]] and b.leq[p[1]][q[1]] for q in pairs] for p in pairs]
    return HeytingAlgebra(names, leq, name=f"prod({a.name},{b.name})")


_PROD_RE = re.compile(r"^prod\((.*)\)$")


def parse_lattice(spec) -> HeytingAlgebra:
    """Accept a builder string (``chain:n``, ``bool``, ``bool2``, ``prod(a,b)``)
    or an inline ``{"elements": [...], "cover": [...]}`` mapping."""
    if isinstance(spec, HeytingAlgebra):
        return spec
    if isinstance(spec, dict):
        return from_order(spec["elements"], spec.get("cover", []), name=spec.get("name"))
    s = str(spec).strip()
    if s in ("bool", "boolean", "chain:2"):
        return boolean()
    if s in ("bool2", "boolsq"):
        return product_algebra(boolean(), boolean())
    if s == "chain:0u1":
        return paper_chain()
    if s.startswith("chain:"):
        try:
            n = int(s[len("chain:"):])
        except ValueError:
            raise LatticeError(f"bad chain builder {s!r}") from None
        return chain(n)
    m = _PROD_RE.match(s)
    if m:
        left, right = _split_top_comma(m.group(1))
        return product_algebra(parse_lattice(left), parse_lattice(right))
    if s.startswith("{"):
        return parse_lattice(json.loads(s))
    raise LatticeError(f"unknown lattice builder {s!r}")


def _split_top_comma(s):
    depth = 0
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            return s[:i].strip(), s[i + 1:].strip()
    raise LatticeError(f"prod(...) needs two arguments: {s!r}")


def lattice_spec(alg: HeytingAlgebra):
    """Inverse of :func:`parse_lattice` for serialisation."""
    if alg.name.startswith("chain:") and alg.name[6:].isdigit():
        return alg.name
    if alg.name in ("bool",):
        return alg.name
    if alg.name == "prod(bool,bool)":
        return "bool2"
    d = alg.to_dict()
    d["name"] = alg.name
    return d
