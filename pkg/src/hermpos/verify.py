"""Runtime verification battery behind the ``verify`` CLI command.

Every check is deterministic: randomized sweeps draw from a generator
seeded with ``"{seed}:{space_id}"``, so a fixed seed and input produce an
identical report.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction as Q
from typing import Dict, List, Optional, Tuple

from .catalog import (HermitianSpace, check_psi_closure, resolve,
                      strongly_orthogonal_cascade, symmetric_space_rank)
from .chevalley import bracket
from .connectivity import connectivity, index_bound, closed_form_check
from .curvature import (TangentVector, complex_positivity, ell_of_line,
                        hermitian_form, nullity, oracle_agreement,
                        orbit_positivity_values, psi_prime)
from .errors import ConsistencyError
from .linalg import sym_psd_profile
from .roots import vadd, vneg

DEFAULT_SPACES = (
    "gr:2,2", "gr:2,3", "quadric:5", "quadric:6", "lagr:3", "spinor:4",
)

ROOT_COUNTS = {
    "A": lambda n: n * (n + 1),
    "B": lambda n: 2 * n * n,
    "C": lambda n: 2 * n * n,
    "D": lambda n: 2 * n * (n - 1),
    "E6": lambda n: 72,
    "E7": lambda n: 126,
}

ELL_CLOSED_FORM = {
    "gr": lambda p, q: p + q - 1,
    "quadric": lambda p: p - 1,
    "lagr": lambda r: r,
    "spinor": lambda r: 2 * r - 3,
    "e6": lambda: 11,
    "e7": lambda: 17,
}


@dataclass
class Check:
    name: str
    status: str  # "pass" or "fail"
    detail: str

    @property
    def passed(self) -> bool:
        return self.status == "pass"


def _check(name: str, ok: bool, detail: str) -> Check:
    return Check(name, "pass" if ok else "fail", detail)


def _random_vector(space: HermitianSpace, rng: random.Random) -> TangentVector:
    while True:
        mode = rng.randrange(3)
        if mode == 0:
            coeffs = {g: Q(rng.randint(-3, 3)) for g in space.psi}
        elif mode == 1:
            casc = strongly_orthogonal_cascade(space)
            k = rng.randint(1, len(casc))
            coeffs = {g: Q(rng.randint(-3, 3)) for g in casc[:k]}
        else:
            k = rng.randint(1, max(1, space.v // 2))
            keep = rng.sample(list(space.psi), k)
            coeffs = {g: Q(rng.randint(-3, 3)) for g in keep}
        if any(c != 0 for c in coeffs.values()):
            return TangentVector(space, coeffs)


def _check_root_counts(space: HermitianSpace) -> Check:
    rs = space.rs
    expect = ROOT_COUNTS[rs.family](rs.rank)
    ok = len(rs.roots) == expect and 2 * len(rs.positive_roots) == expect
    return _check("root_count", ok, f"{len(rs.roots)} roots, expected {expect}")


def _check_constants(space: HermitianSpace, rng: random.Random,
                     samples: int) -> List[Check]:
    rs = space.rs
    t = space.table
    roots = sorted(rs.roots)
    bad_anti = bad_jacobi = 0
    tried = 0
    for _ in range(min(samples, 400)):
        a, b, c = (rng.choice(roots) for _ in range(3))
        if vadd(a, b) in rs.roots:
            if t.n(a, b) != -t.n(b, a) or t.n(a, b) != -t.n(vneg(a), vneg(b)):
                bad_anti += 1
        x, y, z = t.e_element(a), t.e_element(b), t.e_element(c)
        lhs = bracket(t, x, bracket(t, y, z))
        mid = bracket(t, y, bracket(t, x, z))
        rhs = bracket(t, bracket(t, x, y), z)
        total_e: Dict = {}
        for term, sign in ((lhs, 1), (mid, -1), (rhs, -1)):
            for r, cc in term.e.items():
                total_e[r] = total_e.get(r, Q(0)) + sign * cc
        total_h = [
            l - m - r for l, m, r in zip(lhs.h, mid.h, rhs.h)
        ]
        if any(v != 0 for v in total_e.values()) or any(v != 0 for v in total_h):
            bad_jacobi += 1
        tried += 1
    casc = strongly_orthogonal_cascade(space)
    bad_cascade = sum(
        1
        for i, a in enumerate(casc)
        for b in casc[i + 1:]
        if t.n(a, vneg(b)) != 0 or t.n(a, b) != 0
    )
    return [
        _check("constant_antisymmetry", bad_anti == 0,
               f"{bad_anti} violations in {tried} sampled triples"),
        _check("jacobi_identity", bad_jacobi == 0,
               f"{bad_jacobi} violations in {tried} sampled triples"),
        _check("cascade_constants_vanish", bad_cascade == 0,
               f"{bad_cascade} nonzero constants on the cascade"),
    ]


def _check_catalog(space: HermitianSpace) -> List[Check]:
    rep = check_psi_closure(space)
    casc = strongly_orthogonal_cascade(space)
    rank = symmetric_space_rank(space)
    return [
        _check("psi_closure", rep.ok,
               f"{rep.pairs_checked} pairs, {len(rep.violations)} violations"),
        _check("cascade_length", len(casc) == rank,
               f"cascade {len(casc)}, symmetric-space rank {rank}"),
    ]


def _check_positivity(space: HermitianSpace) -> List[Check]:
    ell = complex_positivity(space)
    expect = ELL_CLOSED_FORM[space.family](*space.params)
    orbit = orbit_positivity_values(space)
    mixed = space.family == "lagr" or (
        space.family == "quadric" and space.params[0] % 2 == 1
    )
    orbit_ok = len(orbit) == (2 if mixed else 1) and orbit[0] == ell
    checks = [
        _check("ell_closed_form", ell == expect, f"ell {ell}, expected {expect}"),
        _check("orbit_value_count", orbit_ok,
               f"distinct |Psi'| values {list(orbit)}"),
    ]
    bad = sum(
        1
        for a in space.psi
        if ell_of_line(TangentVector(space, {a: Q(1)})).ell_line
        != len(psi_prime(space, a))
    )
    checks.append(
        _check("basis_vector_ell", bad == 0,
               f"{bad} of {space.v} basis vectors disagree with |Psi'|")
    )
    return checks


def _check_forms(space: HermitianSpace, rng: random.Random,
                 samples: int) -> Tuple[List[Check], Optional[Q]]:
    bad_psd = 0
    n_psd = min(samples, 200)
    for _ in range(n_psd):
        x = _random_vector(space, rng)
        ok, _null = sym_psd_profile(hermitian_form(x).matrix)
        if not ok:
            bad_psd += 1
    ratio: Optional[Q] = None
    bad_oracle = 0
    n_oracle = min(max(samples // 50, 3), 12)
    for _ in range(n_oracle):
        x = _random_vector(space, rng)
        try:
            _kdim, r = oracle_agreement(x)
        except ConsistencyError:
            bad_oracle += 1
            continue
        if ratio is None:
            ratio = r
        elif r is not None and r != ratio:
            bad_oracle += 1
    bad_mono = 0
    casc = strongly_orthogonal_cascade(space)
    singles = {
        a: ell_of_line(TangentVector(space, {a: Q(1)})).ell_line for a in casc
    }
    for _ in range(min(samples, 50)):
        k = rng.randint(1, len(casc))
        sub = rng.sample(list(casc), k)
        coeffs = {a: Q(rng.randint(1, 3)) for a in sub}
        combined = ell_of_line(TangentVector(space, coeffs)).ell_line
        if combined < max(singles[a] for a in sub):
            bad_mono += 1
    checks = [
        _check("form_psd", bad_psd == 0,
               f"{bad_psd} of {n_psd} random forms not semidefinite"),
        _check("oracle_agreement", bad_oracle == 0 and ratio is not None,
               f"ratio {ratio}, {bad_oracle} of {n_oracle} vectors failed"),
        _check("line_monotonicity", bad_mono == 0,
               f"{bad_mono} cascade subsets below their max single line"),
    ]
    return checks, ratio


def _check_connectivity(space: HermitianSpace) -> List[Check]:
    v = space.v
    ell = complex_positivity(space)
    step = max(1, v // 4)
    bad = 0
    for m in range(0, v + 1, step):
        for n in range(0, v + 1, step):
            if not closed_form_check(space.family, space.params, m, n):
                bad += 1
            rep = connectivity(space, m, n, ell_override=ell)
            if rep != connectivity(space, m, n):
                bad += 1
            if (index_bound(m, n, v, ell, "nonnegative") + (v - ell)
                    != index_bound(m, n, v, ell, "positive")):
                bad += 1
    return [
        _check("connectivity_closed_form", bad == 0,
               f"{bad} grid points disagree")
    ]


def verify_space(space_id: str, seed: int, samples: int) -> Tuple[List[Check], Dict]:
    """All checks for one space plus a small results payload."""
    space = resolve(space_id)
    rng = random.Random(f"{seed}:{space_id}")
    checks: List[Check] = [_check_root_counts(space)]
    checks += _check_constants(space, rng, samples)
    checks += _check_catalog(space)
    checks += _check_positivity(space)
    form_checks, ratio = _check_forms(space, rng, samples)
    checks += form_checks
    checks += _check_connectivity(space)
    results = {
        "v": space.v,
        "ell": complex_positivity(space),
        "oracle_ratio": None if ratio is None else str(ratio),
    }
    return checks, results


def run_verify(space_id: Optional[str], seed: int,
               samples: int) -> Tuple[bool, Dict]:
    """Run the battery over one space or the default sweep.

    Returns (all_passed, report_payload); the payload is JSON-ready with
    rationals rendered as strings.
    """
    spaces = [space_id] if space_id else list(DEFAULT_SPACES)
    all_checks = []
    results = {}
    for sid in spaces:
        checks, payload = verify_space(sid, seed, samples)
        results[sid] = payload
        for c in checks:
            all_checks.append(
                {"name": f"{sid}:{c.name}", "status": c.status, "detail": c.detail}
            )
    ok = all(c["status"] == "pass" for c in all_checks)
    payload = {
        "results": results,
        "checks": all_checks,
    }
    return ok, payload
