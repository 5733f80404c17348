"""Structure constants, brackets and the Killing form."""

import random
from fractions import Fraction as Q

import pytest

from hermpos.chevalley import (bracket, killing_e_pair, killing_form,
                               killing_h_matrix, structure_constants)
from hermpos.roots import build_root_system, vadd, vneg, vscale, vsub

# Dual Coxeter numbers; the Killing pairing of e_a with e_{-a} on a long
# root equals twice this value in the long-root-2 normalization.
DUAL_COXETER = {
    ("A", 2): 3, ("A", 3): 4, ("A", 5): 6,
    ("B", 3): 5, ("C", 2): 3, ("C", 3): 4,
    ("D", 4): 6, ("E6", 6): 12, ("E7", 7): 18,
}


def _table(family, rank):
    return structure_constants(build_root_system(family, rank))


def _jacobi_defect(t, a, b, c):
    x, y, z = t.e_element(a), t.e_element(b), t.e_element(c)
    lhs = bracket(t, x, bracket(t, y, z))
    mid = bracket(t, y, bracket(t, x, z))
    rhs = bracket(t, bracket(t, x, y), z)
    e = {}
    for term, s in ((lhs, 1), (mid, -1), (rhs, -1)):
        for r, cc in term.e.items():
            e[r] = e.get(r, Q(0)) + s * cc
    h = [l - m - r for l, m, r in zip(lhs.h, mid.h, rhs.h)]
    return any(v != 0 for v in e.values()) or any(v != 0 for v in h)


@pytest.mark.parametrize("family,rank", [("A", 2), ("B", 2), ("C", 3), ("D", 3)])
def test_jacobi_exhaustive(family, rank):
    t = _table(family, rank)
    roots = sorted(t.rs.roots)
    assert not any(
        _jacobi_defect(t, a, b, c) for a in roots for b in roots for c in roots
    )


@pytest.mark.parametrize("family,rank", [("E6", 6), ("A", 5)])
def test_jacobi_sampled(family, rank):
    t = _table(family, rank)
    roots = sorted(t.rs.roots)
    rng = random.Random(2024)
    for _ in range(400):
        a, b, c = (rng.choice(roots) for _ in range(3))
        assert not _jacobi_defect(t, a, b, c)


@pytest.mark.parametrize("family,rank", [("A", 3), ("B", 3), ("C", 3)])
def test_antisymmetry_and_negation(family, rank):
    t = _table(family, rank)
    roots = sorted(t.rs.roots)
    for a in roots:
        for b in roots:
            if vadd(a, b) in t.rs.roots:
                assert t.n(a, b) == -t.n(b, a)
                assert t.n(a, b) == -t.n(vneg(a), vneg(b))


@pytest.mark.parametrize("family,rank", [("A", 3), ("B", 3), ("C", 3), ("D", 4)])
def test_magnitude_equals_string_length(family, rank):
    t = _table(family, rank)
    rs = t.rs
    for a in rs.roots:
        for b in rs.roots:
            if vadd(a, b) not in rs.roots or b in (a, vneg(a)):
                continue
            p, _q = rs.root_string(a, b)
            assert abs(t.n(a, b)) == p + 1


def test_extraspecial_pairs_positive():
    t = _table("B", 3)
    rs = t.rs
    for gamma in rs.positive_roots:
        pairs = [
            (xi, vsub(gamma, xi))
            for xi in rs.positive_roots
            if vsub(gamma, xi) in rs.roots
            and rs.is_positive(vsub(gamma, xi))
            and rs.pos_index(xi) < rs.pos_index(vsub(gamma, xi))
        ]
        if pairs:
            first = min(pairs, key=lambda p: rs.pos_index(p[0]))
            assert t.n(*first) > 0


def test_cartan_bracket_gives_coroot():
    t = _table("C", 2)
    rs = t.rs
    for a in rs.positive_roots:
        h = bracket(t, t.e_element(a), t.e_element(vneg(a)))
        assert not h.e
        # pairing of a with its own coroot is 2
        acc = sum(
            c * t.cartan_pairing(a, j) for j, c in enumerate(h.h)
        )
        assert acc == 2


def test_h_bracket_scales_by_cartan_integer():
    t = _table("B", 2)
    rs = t.rs
    for j in range(rs.rank):
        coeffs = [Q(0)] * rs.rank
        coeffs[j] = Q(1)
        h = t.h_element(coeffs)
        for b in rs.roots:
            out = bracket(t, h, t.e_element(b))
            assert not any(out.h)
            assert out.e == {b: Q(t.cartan_pairing(b, j))} or (
                t.cartan_pairing(b, j) == 0 and not out.e
            )


@pytest.mark.parametrize("key", sorted(DUAL_COXETER))
def test_killing_long_root_value(key):
    t = _table(*key)
    rs = t.rs
    highest = rs.positive_roots[-1]
    assert rs.inner(highest, highest) == 2
    assert killing_e_pair(t, highest) == 2 * DUAL_COXETER[key]


@pytest.mark.parametrize("family,rank", [("B", 3), ("C", 3)])
def test_killing_scales_inversely_with_length(family, rank):
    t = _table(family, rank)
    rs = t.rs
    k0 = killing_e_pair(t, rs.positive_roots[-1])
    for a in rs.positive_roots:
        assert killing_e_pair(t, a) * rs.inner(a, a) == 2 * k0


def test_killing_orthogonality():
    t = _table("A", 2)
    rs = t.rs
    a, b = rs.positive_roots[0], rs.positive_roots[1]
    assert killing_form(t, t.e_element(a), t.e_element(b)) == 0
    assert killing_form(t, t.e_element(a), t.h_element([1, 0])) == 0
    kh = killing_h_matrix(t)
    assert kh[0][1] == kh[1][0]
    assert kh[0][0] > 0


def test_invariance_of_killing_form():
    t = _table("C", 2)
    rs = t.rs
    rng = random.Random(9)
    roots = sorted(rs.roots)
    for _ in range(40):
        x = t.e_element(rng.choice(roots), rng.randint(1, 3))
        y = t.e_element(rng.choice(roots), rng.randint(-3, 3))
        z = t.h_element([rng.randint(-2, 2) for _ in range(rs.rank)])
        lhs = killing_form(t, bracket(t, x, y), z)
        rhs = killing_form(t, x, bracket(t, y, z))
        assert lhs == rhs
