from __future__ import annotations

import itertools
import pickle

import pytest
from hypothesis import given
from hypothesis import strategies as hst

from relcat import lattice as L

import oracles


def every_algebra():
    return [L.boolean(), L.paper_chain(), L.chain(1), L.chain(4), L.parse_lattice("bool2"),
            L.product_algebra(L.chain(2), L.chain(3))]


@pytest.mark.parametrize("alg", every_algebra(), ids=lambda a: a.name)
def test_invariants_exhaustive(alg):
    n = len(alg)
    r = range(n)
    for x, y, z in itertools.product(r, repeat=3):
        assert alg.leq[alg.meet[x][z]][y] == alg.leq[z][alg.impl[x][y]]
        assert alg.meet[x][alg.join[y][z]] == alg.join[alg.meet[x][y]][alg.meet[x][z]]
    for x, y in itertools.product(r, repeat=2):
        assert alg.meet[x][y] == oracles.inf(alg, [x, y])
        assert alg.join[x][y] == oracles.sup(alg, [x, y])
        assert alg.impl[x][y] == oracles.impl(alg, x, y)
        assert alg.leq[alg.meet[x][alg.impl[x][y]]][y]
        assert alg.leq[alg.bot][x] and alg.leq[x][alg.top]
    for x in r:
        assert alg.impl[x][x] == alg.top
        assert alg.impl[alg.top][x] == x


def test_paper_chain_implications():
    a = L.from_order(["0", "u", "1"], [("0", "u"), ("u", "1")])
    assert a.op("impl", "u", "0") == "0"
    assert a.op("impl", "0", "u") == "1"
    assert a.op("impl", "u", "1") == "1"
    assert a.is_chain and not a.is_boolean


def test_boolean_is_classical():
    b = L.from_order(["0", "1"], [("0", "1")])
    table = {(x, y): b.op("impl", x, y) for x in "01" for y in "01"}
    assert table == {("0", "0"): "1", ("0", "1"): "1", ("1", "0"): "0", ("1", "1"): "1"}
    assert b == L.boolean() and b.is_boolean


def test_chain_builder():
    assert L.chain(2) == L.boolean()
    assert L.chain(3).elements == ("0", "1", "2")
    assert L.chain(4).op("impl", "2", "1") == "1"
    for n in range(1, 6):
        c = L.chain(n)
        for x, y in itertools.product(range(n), repeat=2):
            assert c.impl[x][y] == (c.top if x <= y else y)
    with pytest.raises(L.InvalidSize):
        L.chain(0)


def test_from_order_matches_chain():
    for n in range(1, 6):
        labels = [str(i) for i in range(n)]
        assert L.from_order(labels, zip(labels, labels[1:])) == L.chain(n)


def test_nondistributive_rejected():
    five = ["0", "a", "b", "c", "1"]
    with pytest.raises(L.NotDistributive):
        L.from_order(five, [("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")])
    with pytest.raises(L.NotDistributive):
        L.from_order(five, [("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")])


def test_construction_errors():
    with pytest.raises(L.NotALattice):
        L.from_order(["a", "b"], [])
    with pytest.raises(L.NotALattice):
        # two maximal elements above a bottom
        L.from_order(["0", "a", "b"], [("0", "a"), ("0", "b")])
    with pytest.raises(L.DuplicateElement):
        L.from_order(["0", "0"], [])
    with pytest.raises(L.UnknownElement):
        L.from_order(["0", "1"], [("0", "2")])
    with pytest.raises(L.InvalidSize):
        L.from_order([], [])


def test_product_algebra():
    sq = L.product_algebra(L.boolean(), L.boolean())
    assert len(sq) == 4 and sq.is_boolean
    for x, y in itertools.product(range(4), repeat=2):
        # componentwise implication on the two bits of each element name
        ex, ey = sq.elements[x], sq.elements[y]
        want = "".join(L.boolean().op("impl", a, b) for a, b in zip(ex, ey))
        assert sq.elements[sq.impl[x][y]] == want
    six = L.product_algebra(L.chain(2), L.chain(3))
    assert len(six) == 6 and not six.is_chain
    one = L.product_algebra(L.chain(1), L.paper_chain())
    assert [one.leq[i] for i in range(3)] == [L.paper_chain().leq[i] for i in range(3)]


def test_parse_lattice_and_spec_roundtrip():
    for spec in ["bool", "chain:3", "chain:5", "bool2", "prod(bool,chain:3)", "chain:0u1"]:
        alg = L.parse_lattice(spec)
        assert L.parse_lattice(L.lattice_spec(alg)) == alg
    inline = L.parse_lattice({"elements": ["0", "u", "1"], "cover": [["0", "u"], ["u", "1"]]})
    assert inline == L.paper_chain()
    with pytest.raises(L.LatticeError):
        L.parse_lattice("pentagon")


def test_algebra_pickles():
    a = L.paper_chain()
    assert pickle.loads(pickle.dumps(a)) == a


@given(hst.sampled_from(every_algebra()), hst.data())
def test_heyting_identities(alg, data):
    x, y, z = (data.draw(hst.integers(0, len(alg) - 1)) for _ in range(3))
    m, j, i = alg.meet, alg.join, alg.impl
    assert i[j[x][y]][z] == m[i[x][z]][i[y][z]]
    assert i[x][m[y][z]] == m[i[x][y]][i[x][z]]
    assert alg.neg(alg.neg(alg.neg(x))) == alg.neg(x)
    assert alg.leq[x][alg.neg(alg.neg(x))]
