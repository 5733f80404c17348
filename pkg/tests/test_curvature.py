"""Curvature components, the form H_X, null spaces and the oracle."""

import random
from fractions import Fraction as Q

import pytest

from hermpos.catalog import resolve, strongly_orthogonal_cascade
from hermpos.curvature import (TangentVector, bracket_curvature_oracle,
                               complex_positivity, curvature_component,
                               ell_of_line, grassmann_rank, hermitian_form,
                               maximal_cone_subspace, nullity,
                               oracle_agreement, orbit_positivity_values,
                               psi_prime)
from hermpos.linalg import sym_psd_profile


def _gr_root(p, q, i, j):
    """The root e_i - e_{p+j} of gr:p,q, with 1-based i, j."""
    dim = p + q
    return tuple(
        Q(1) if k == i - 1 else (Q(-1) if k == p + j - 1 else Q(0))
        for k in range(dim)
    )


def test_component_three_cases():
    sp = resolve("gr:2,2")
    b = _gr_root(2, 2, 1, 1)
    d = _gr_root(2, 2, 1, 2)
    assert curvature_component(sp, b, d, d, b) == 1
    assert curvature_component(sp, b, b, b, b) == 2
    # beta + alpha != gamma + delta
    a2 = _gr_root(2, 2, 2, 2)
    assert curvature_component(sp, b, d, a2, a2) == 0
    # off-diagonal N-product case
    g = _gr_root(2, 2, 1, 2)
    de = _gr_root(2, 2, 2, 1)
    al = _gr_root(2, 2, 2, 2)
    assert curvature_component(sp, b, de, al, g) in (1, -1)
    with pytest.raises(ValueError):
        curvature_component(sp, (Q(1), Q(-1), Q(0), Q(0)), b, b, b)


def test_single_root_form_is_diagonal_of_pairings():
    sp = resolve("gr:2,2")
    x = TangentVector(sp, {_gr_root(2, 2, 1, 1): Q(1)})
    form = hermitian_form(x)
    rs = sp.rs
    for g in sp.psi:
        for d in sp.psi:
            expect = rs.inner(_gr_root(2, 2, 1, 1), g) if g == d else 0
            assert form.entry(g, d) == expect
    assert sorted(form.matrix[i][i] for i in range(4)) == [0, 1, 1, 2]
    assert nullity(x) == 1
    assert ell_of_line(x).ell_line == 3


def test_strongly_orthogonal_pair_form():
    sp = resolve("gr:2,2")
    x = TangentVector(
        sp, {_gr_root(2, 2, 1, 1): Q(1), _gr_root(2, 2, 2, 2): Q(1)}
    )
    m = hermitian_form(x).matrix
    assert all(m[i][i] == 2 for i in range(4))
    assert all(m[i][j] == 0 for i in range(4) for j in range(4) if i != j)
    assert nullity(x) == 0
    assert ell_of_line(x).ell_line == 4


def test_rank_one_combination_has_null_direction():
    sp = resolve("gr:2,2")
    x = TangentVector(
        sp, {_gr_root(2, 2, 1, 1): Q(1), _gr_root(2, 2, 1, 2): Q(1)}
    )
    assert grassmann_rank(2, 2, x) == 1
    assert nullity(x) == 1


def test_grassmann_nullity_formula_rank_two_in_gr33():
    sp = resolve("gr:3,3")
    coeffs = {
        _gr_root(3, 3, 1, 1): Q(1),
        _gr_root(3, 3, 2, 2): Q(2),
    }
    x = TangentVector(sp, coeffs)
    assert grassmann_rank(3, 3, x) == 2
    assert nullity(x) == 1


def test_grassmann_rank_requires_matching_space():
    sp = resolve("lagr:2")
    x = TangentVector(sp, {sp.psi[0]: Q(1)})
    with pytest.raises(ValueError):
        grassmann_rank(2, 2, x)


def test_vector_validation():
    sp = resolve("gr:2,2")
    with pytest.raises(ValueError):
        TangentVector(sp, {(Q(1), Q(-1), Q(0), Q(0)): Q(1)})
    x = TangentVector(sp, {_gr_root(2, 2, 1, 1): Q(0)})
    assert x.is_zero()
    with pytest.raises(ValueError):
        hermitian_form(x)
    with pytest.raises(ValueError):
        nullity(x)


ELL_TABLE = [
    ("gr:2,2", 3), ("gr:2,3", 4), ("gr:3,4", 6), ("quadric:5", 4),
    ("quadric:6", 5), ("lagr:2", 2), ("lagr:4", 4), ("spinor:5", 7),
    ("e6", 11), ("e7", 17),
]


@pytest.mark.parametrize("sid,ell", ELL_TABLE)
def test_complex_positivity_values(sid, ell):
    assert complex_positivity(resolve(sid)) == ell


def test_orbit_value_structure():
    # one orbit value when all roots share a length, two otherwise
    assert orbit_positivity_values(resolve("gr:2,3")) == (4,)
    assert orbit_positivity_values(resolve("quadric:6")) == (5,)
    assert orbit_positivity_values(resolve("e6")) == (11,)
    lagr = orbit_positivity_values(resolve("lagr:3"))
    assert len(lagr) == 2 and lagr[0] == 3
    quad = orbit_positivity_values(resolve("quadric:5"))
    assert len(quad) == 2 and quad[0] == 4


def test_basis_vector_positivity_matches_psi_prime():
    for sid in ("gr:2,3", "lagr:3", "quadric:5", "spinor:4"):
        sp = resolve(sid)
        for a in sp.psi:
            line = ell_of_line(TangentVector(sp, {a: Q(1)}))
            assert line.ell_line == len(psi_prime(sp, a))
            assert maximal_cone_subspace(sp, a) == psi_prime(sp, a)


def _random_vector(sp, rng):
    while True:
        k = rng.randint(1, sp.v)
        keep = rng.sample(list(sp.psi), k)
        coeffs = {g: Q(rng.randint(-3, 3)) for g in keep}
        if any(c != 0 for c in coeffs.values()):
            return TangentVector(sp, coeffs)


@pytest.mark.parametrize("sid", ["gr:2,2", "gr:2,3", "lagr:3", "quadric:5",
                                 "quadric:6", "spinor:4"])
def test_form_semidefinite_on_random_vectors(sid):
    sp = resolve(sid)
    rng = random.Random(f"psd:{sid}")
    for _ in range(40):
        ok, nul = sym_psd_profile(hermitian_form(_random_vector(sp, rng)).matrix)
        assert ok
        assert nul is not None


@pytest.mark.parametrize("sid", ["gr:2,2", "lagr:2", "lagr:3", "quadric:5",
                                 "spinor:4"])
def test_oracle_matches_formula(sid):
    sp = resolve(sid)
    rng = random.Random(f"oracle:{sid}")
    ratios = set()
    for _ in range(6):
        _kdim, ratio = oracle_agreement(_random_vector(sp, rng))
        ratios.add(ratio)
    assert len(ratios) == 1
    assert ratios.pop() > 0


def test_oracle_value_against_form_value():
    sp = resolve("quadric:5")
    rng = random.Random(77)
    x = _random_vector(sp, rng)
    m = hermitian_form(x).matrix
    _kdim, ratio = oracle_agreement(x)
    for _ in range(20):
        w = _random_vector(sp, rng)
        b = [w.coeffs.get(g, Q(0)) for g in sp.psi]
        quad = sum(
            b[i] * m[i][j] * b[j]
            for i in range(sp.v)
            for j in range(sp.v)
        )
        assert bracket_curvature_oracle(x, w) == ratio * quad


def test_oracle_space_mismatch():
    x = TangentVector(resolve("gr:2,2"), {_gr_root(2, 2, 1, 1): Q(1)})
    sp2 = resolve("lagr:2")
    w = TangentVector(sp2, {sp2.psi[0]: Q(1)})
    with pytest.raises(ValueError):
        bracket_curvature_oracle(x, w)


def test_line_positivity_monotone_on_cascade_subsets():
    for sid in ("gr:3,3", "lagr:3", "spinor:4"):
        sp = resolve(sid)
        casc = strongly_orthogonal_cascade(sp)
        singles = {
            a: ell_of_line(TangentVector(sp, {a: Q(1)})).ell_line for a in casc
        }
        rng = random.Random(f"mono:{sid}")
        for _ in range(20):
            k = rng.randint(1, len(casc))
            sub = rng.sample(list(casc), k)
            x = TangentVector(sp, {a: Q(rng.randint(1, 3)) for a in sub})
            assert ell_of_line(x).ell_line >= max(singles[a] for a in sub)
