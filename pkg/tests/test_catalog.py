"""Catalog resolution, Psi structure and cascades."""

import pytest

from hermpos.catalog import (check_psi_closure, complementary_roots, resolve,
                             strongly_orthogonal_cascade,
                             symmetric_space_rank)
from hermpos.errors import ConfigError
from hermpos.roots import vadd, vsub

DIMENSIONS = [
    ("gr:1,1", 1), ("gr:2,2", 4), ("gr:2,3", 6), ("gr:3,4", 12),
    ("quadric:3", 3), ("quadric:4", 4), ("quadric:5", 5), ("quadric:8", 8),
    ("lagr:2", 3), ("lagr:4", 10), ("spinor:3", 3), ("spinor:6", 15),
    ("e6", 16), ("e7", 27),
]


@pytest.mark.parametrize("sid,v", DIMENSIONS)
def test_complex_dimension(sid, v):
    assert resolve(sid).v == v


def test_ambient_families():
    assert resolve("gr:2,3").rs.family == "A"
    assert resolve("quadric:5").rs.family == "B"
    assert resolve("quadric:6").rs.family == "D"
    assert resolve("lagr:3").rs.family == "C"
    assert resolve("spinor:5").rs.family == "D"
    assert resolve("e6").rs.family == "E6"
    assert resolve("e7").rs.family == "E7"


def test_cominuscule_nodes():
    assert resolve("gr:2,3").cominuscule_node == 2
    assert resolve("quadric:7").cominuscule_node == 1
    assert resolve("lagr:4").cominuscule_node == 4
    assert resolve("spinor:5").cominuscule_node == 5
    assert resolve("e6").cominuscule_node == 1
    assert resolve("e7").cominuscule_node == 7


def test_every_psi_root_has_coefficient_one():
    for sid in ("gr:2,3", "lagr:3", "spinor:4", "e6"):
        sp = resolve(sid)
        j = sp.cominuscule_node - 1
        for r in complementary_roots(sp):
            assert sp.rs.simple_coordinates(r)[j] == 1
        rest = set(sp.rs.positive_roots) - sp.psi_set
        for r in rest:
            assert sp.rs.simple_coordinates(r)[j] == 0


@pytest.mark.parametrize("sid", [s for s, _ in DIMENSIONS])
def test_psi_closure(sid):
    sp = resolve(sid)
    rep = check_psi_closure(sp)
    assert rep.ok
    assert rep.pairs_checked == sp.v * sp.v


@pytest.mark.parametrize("sid", [s for s, _ in DIMENSIONS])
def test_cascade_is_strongly_orthogonal_and_maximal_rank(sid):
    sp = resolve(sid)
    casc = strongly_orthogonal_cascade(sp)
    rs = sp.rs
    for i, a in enumerate(casc):
        for b in casc[i + 1:]:
            assert vadd(a, b) not in rs.roots
            assert vsub(a, b) not in rs.roots
    assert len(casc) == symmetric_space_rank(sp)


def test_rejected_identifiers():
    for bad in ("quadric:2", "quadric:1", "lagr:1", "spinor:2", "gr:0,3",
                "gr:3", "sphere:4", "e8", "lagr:-2", "gr:2,2,2"):
        with pytest.raises(ConfigError):
            resolve(bad)


def test_resolution_is_cached():
    assert resolve("gr:2,2") is resolve("gr:2,2")
