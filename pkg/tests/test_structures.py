from __future__ import annotations

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as hst

from relcat import lattice as L
from relcat import relcore as rc
from relcat import structures as st
from relcat.spaces import Space, all_rels

from conftest import ALGEBRAS, rels


def model(alg=None):
    return st.Model(alg or L.boolean(), "m")


def test_unit():
    alg = L.paper_chain()
    u = st.unit()
    assert len(u) == 1
    a = rc.obj("A", 2)
    assert st.is_unit(u, alg, [a])
    assert not st.is_unit(a, alg)
    assert rc.is_total(rc.top_rel(a, u, alg))


@pytest.mark.parametrize("alg", [L.boolean(), L.paper_chain()], ids=lambda a: a.name)
def test_product_witness(alg):
    a, b = rc.obj("A", ["a1", "a2"]), rc.obj("B", ["b1", "b2"])
    w = st.product_object(a, b, alg)
    assert w.obj.carrier == ("(a1,b1)", "(a1,b2)", "(a2,b1)", "(a2,b2)")
    assert st.product_axioms(w, alg) == []
    assert w.pi.is_crisp() and w.rho.is_crisp()
    one = st.product_object(rc.obj("P", ["p"]), b, alg)
    assert rc.is_bijection(one.rho)
    nested = st.product_object(w.obj, a, alg)
    assert nested.obj.name == "(A*B)*A"


def test_tensor_identity_and_missing_product():
    m = model()
    a = m.add_object("A", 2)
    b = m.add_object("B", 3)
    i = st.tensor(rc.identity(a, m.alg), rc.identity(b, m.alg), m)
    assert i == rc.identity(m.product(a, b).obj, m.alg)
    closed = st.Model(L.boolean(), "closed", auto=False)
    c = closed.add_object("A", 1)
    with pytest.raises(st.MissingProduct):
        st.fork(rc.identity(c, closed.alg), rc.identity(c, closed.alg), closed)
    closed.register_product(c, c)
    assert rc.is_map(st.fork(rc.identity(c, closed.alg), rc.identity(c, closed.alg), closed))


def test_swap_and_assoc_are_bijections():
    m = model(L.paper_chain())
    a, b, c = m.add_object("A", 2), m.add_object("B", 3), m.add_object("C", 2)
    s = st.swap_map(a, b, m)
    assert rc.is_bijection(s)
    assert rc.converse(s) == st.swap_map(b, a, m)
    ab = m.product(a, b).obj
    # (a_i, b_j) goes to (b_j, a_i)
    for k, label in enumerate(ab.carrier):
        x, y = label.strip("()").split(",")
        j = s.m[k].index(m.alg.top)
        assert m.product(b, a).obj.carrier[j] == f"({y},{x})"
    t = st.assoc_map(a, b, c, m)
    assert rc.is_bijection(t)


@given(hst.sampled_from(["bool", "chain0u1"]), hst.data())
def test_fork_projections(name, data):
    alg = ALGEBRAS[name]
    m = model(alg)
    d, a, b = (m.add_object(n, data.draw(hst.integers(1, 2))) for n in "DAB")
    q = data.draw(rels(alg, d, a))
    r = data.draw(rels(alg, d, b))
    w = m.product(a, b)
    fk = st.fork(q, r, m)
    if rc.is_total(r):
        assert rc.compose(fk, w.pi) == q
    assert rc.converse(fk) == st.pair(rc.converse(q), rc.converse(r), m)


def test_fork_pair_composition_exhaustive():
    alg = L.boolean()
    m = model(alg)
    o = m.add_object("O", 2)
    p = m.add_object("P", 1)
    for q, r in itertools.product(all_rels(p, o, alg), repeat=2):
        for t, u in itertools.product(all_rels(o, p, alg), repeat=2):
            assert rc.compose(st.fork(q, r, m), st.pair(t, u, m)) == rc.meet(rc.compose(q, t), rc.compose(r, u))


# -- powers ------------------------------------------------------------------------

@pytest.mark.parametrize("n", [1, 2, 3])
def test_boolean_power(n):
    a = rc.obj("A", n)
    w = st.power(a, L.boolean())
    assert len(w.obj) == 2 ** n
    assert w.verified and w.regime == "exhaustive"
    assert rc.syq(w.eps, w.eps) == rc.identity(w.obj, L.boolean())


def test_power_of_singleton_boolean():
    w = st.power(rc.obj("A", 1), L.boolean())
    assert w.eps.names() == [["0", "1"]]
    assert rc.syq(w.eps, w.eps) == rc.identity(w.obj, L.boolean())


def test_power_existential_image_is_map():
    alg = L.boolean()
    b = rc.obj("B", 2)
    w = st.power(b, alg)
    for r in all_rels(rc.obj("A", 2), b, alg):
        img = rc.syq(rc.converse(r), w.eps)
        assert rc.is_map(img)
        assert rc.compose(img, rc.converse(w.eps)) == r


def test_three_chain_power_fails_extensionality():
    # eps = (0 u 1); (u -> 1) meet (1 -> u) = u, so syq(eps, eps) has an off-diagonal u
    w = st.power(rc.obj("A", 1), L.paper_chain())
    assert w.eps.names() == [["0", "u", "1"]]
    assert w.checks == {"syq_identity": False, "syq_total": True}
    assert w.failures["syq_identity"].names() == [["1", "0", "0"], ["0", "1", "u"], ["0", "u", "1"]]
    assert not w.verified


def test_power_too_large():
    with pytest.raises(st.PowerTooLarge):
        st.power(rc.obj("A", 9), L.boolean())


@pytest.mark.parametrize("n,size", [(1, 1), (2, 3), (3, 7)])
def test_boolean_nonempty_power(n, size):
    w = st.non_empty_power(rc.obj("A", n), L.boolean())
    assert len(w.obj) == size
    assert w.verified == {"syq_identity": True, "dom_condition": True, "split_route": True}
    if n == 2:
        assert sorted(w.obj.carrier) == ["01", "10", "11"]
    if n == 1:
        assert w.eps.names() == [["1"]]


def test_nonempty_power_golden_outcomes_three_chain():
    alg = L.paper_chain()
    one = st.non_empty_power(rc.obj("A", 1), alg)
    assert one.obj.carrier == ("1",)
    assert one.verified == {"syq_identity": True, "dom_condition": True}
    two = st.non_empty_power(rc.obj("A", 2), alg)
    assert len(two.obj) == 5
    assert two.verified == {"syq_identity": False, "dom_condition": True}


@pytest.mark.parametrize("n", [1, 2])
def test_split_route_witness(n):
    w = st.theorem3_witness(rc.obj("A", n), L.boolean())
    assert w.ok
    assert len(w.obj) == 2 ** n - 1


# -- splitting ---------------------------------------------------------------------

def test_split_equivalence():
    alg = L.boolean()
    a = rc.obj("A", ["a", "b", "c"])
    x = rc.make_rel(a, a, alg, [["1", "1", "0"], ["1", "1", "0"], ["0", "0", "1"]])
    b, r = st.split(x)
    assert b.carrier == ("{a,b}", "{c}")
    assert r.names() == [["1", "1", "0"], ["0", "0", "1"]]
    assert rc.compose(r, rc.converse(r)) == rc.identity(b, alg)
    assert rc.compose(rc.converse(r), r) == x
    b2, r2 = st.split(rc.identity(a, alg))
    assert r2.m == rc.identity(a, alg).m


def test_split_refusals():
    alg = L.paper_chain()
    p = rc.obj("P", 1)
    fuzzy = rc.make_rel(p, p, alg, [["u"]])
    with pytest.raises(st.NotCrisp):
        st.split(fuzzy)
    assert st.search_splittings(fuzzy, max_size=2) == []
    a = rc.obj("A", 2)
    with pytest.raises(st.NotPER):
        st.split(rc.make_rel(a, a, alg, [["0", "1"], ["0", "0"]]))


def test_search_splittings_agrees_with_split():
    alg = L.boolean()
    a = rc.obj("A", 2)
    for x in Space(a, a, alg, ("per",)).pool():
        if x == rc.bottom(a, a, alg):
            continue
        b, r = st.split(x)
        found = st.search_splittings(x, max_size=2)
        assert found and all(len(fb) == len(b) for fb, _ in found)


# -- groups ----------------------------------------------------------------------------

@pytest.mark.parametrize("order", [1, 2, 3, 4])
def test_cyclic_groups_pass(order):
    m = model()
    g = st.cyclic_group(order, m)
    rep = st.group_check(g, m)
    assert rep.passed, rep.failed()
    assert rep.results["inverse_unique"] is (True if order <= 3 else None)


def test_z2_explicit_matrices():
    m = model()
    g = st.cyclic_group(2, m)
    assert g.e.names() == [["1", "0"]]
    assert g.f.names() == [["1", "0"], ["0", "1"], ["0", "1"], ["1", "0"]]
    assert g.n == rc.identity(g.A, m.alg)


def test_wrong_inverse_fails():
    m = model()
    g = st.cyclic_group(3, m)
    bad = st.GroupCandidate(g.A, g.e, g.f, rc.identity(g.A, m.alg))
    rep = st.group_check(bad, m)
    assert rep.results["inverse"] is False
    assert rep.results["associative"] and rep.results["neutral"] and rep.results["commutative"]
    assert "inverse" in rep.witnesses


def test_group_component_sorts():
    m = model()
    g = st.cyclic_group(2, m)
    with pytest.raises(rc.TypeMismatch):
        st.group_axioms(st.GroupCandidate(g.A, g.n, g.f, g.n), m)


def test_big_group_skips_map_pairs():
    m = model()
    rep = st.group_check(st.cyclic_group(4, m), m)
    assert rep.results["inverse_unique"] is None and rep.passed


# -- real number object candidates ---------------------------------------------------------

def saturating(size):
    m = model()
    r = m.add_object("R", [str(k) for k in range(size)])
    rr = m.product(r, r).obj
    top = size - 1
    add = st.crisp_map(rr, r, m.alg, lambda k: min(k // size + k % size, top))
    c = rc.Rel(r, r, m.alg, tuple(tuple(int(a < b) for b in range(size)) for a in range(size)))
    i = st.crisp_map(m.unit, r, m.alg, lambda _: min(1, top))
    return m, st.RnoCandidate(r, i, c, add)


def test_rno_two_chain():
    m, c = saturating(2)
    ax = st.rno_axioms(c, m)
    assert ax["axiom1"] and ax["axiom2"]
    assert not ax["axiom3"]
    assert not ax["axiom6"]
    assert [k for k, v in ax.items() if not v] == ["axiom3", "axiom6", "axiom9"]


def test_rno_singleton():
    m, c = saturating(1)
    assert c.C == rc.bottom(c.R, c.R, m.alg)
    ax = st.rno_axioms(c, m)
    assert [k for k, v in ax.items() if not v] == ["axiom9"]


def test_rno_report_derived():
    m, c = saturating(2)
    rep = st.rno_check(c, m)
    assert rep.failed()[:3] == ["axiom3", "axiom6", "axiom9"]
    assert any("Z := top[R,1];0" in n for n in rep.notes)
    # 0 + 0 = 0 and 1 + 1 = 1 (saturated), so both elements pass the zero test
    assert rep.derived["zero"].names() == [["1", "1"]]
    assert rep.derived["Z"].names() == [["1", "1"], ["1", "1"]]
    assert rep.theorems["addGroup"] is False
    assert set(rep.theorems) >= {"addGroup", "cLinearDense", "lup", "lupEq", "props4"}
    assert rep.theorems["cLinearDense"] is False
    assert rep.to_dict()["passed"] is False


def test_rno_sort_errors():
    m, c = saturating(2)
    with pytest.raises(rc.TypeMismatch):
        st.rno_axioms(st.RnoCandidate(c.R, c.C, c.C, c.add), m)


def test_model_registry():
    m = st.Model(L.boolean(), "reg")
    m.add_object("A", 1)
    with pytest.raises(st.StructureError):
        m.add_object("A", 2)
    with pytest.raises(st.StructureError):
        m.add_object("1", 1)
    with pytest.raises(st.MissingStructure):
        m.obj("Z")
    assert m.obj("1") is m.unit
    gen = st.Model.generated(L.boolean(), (1, 2))
    assert [len(o) for o in gen.objects.values()] == [1, 2]
