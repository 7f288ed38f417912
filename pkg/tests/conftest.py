from __future__ import annotations

import sys
from pathlib import Path

import pytest
from hypothesis import settings
from hypothesis import strategies as hst

from relcat import lattice as L
from relcat import relcore as rc

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

ALGEBRAS = {
    "bool": L.boolean(),
    "chain0u1": L.paper_chain(),
    "chain4": L.chain(4),
    "bool2": L.parse_lattice("bool2"),
    "bool_x_chain3": L.product_algebra(L.boolean(), L.chain(3)),
}


@pytest.fixture
def chain0u1():
    return L.paper_chain()


def objs(max_size=3):
    return hst.integers(1, max_size)


@hst.composite
def rels(draw, alg, src, tgt):
    n = len(alg)
    m = tuple(tuple(draw(hst.integers(0, n - 1)) for _ in tgt.carrier) for _ in src.carrier)
    return rc.Rel(src, tgt, alg, m)


@hst.composite
def rel_setup(draw, shapes, algebras=tuple(ALGEBRAS)):
    """An algebra plus one relation per (src, tgt) index pair in ``shapes``."""
    alg = ALGEBRAS[draw(hst.sampled_from(algebras))]
    k = 1 + max(max(s) for s in shapes)
    sizes = [draw(hst.integers(1, 3)) for _ in range(k)]
    os_ = [rc.obj(f"O{i}", sizes[i]) for i in range(k)]
    return alg, [draw(rels(alg, os_[a], os_[b])) for a, b in shapes]
