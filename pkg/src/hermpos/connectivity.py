"""Connectivity ranges and index bounds derived from (v, ell, m, n).

m and n are the complex dimensions of two compact complex submanifolds of
an ambient space with complex dimension v and complex positivity ell; all
bounds are plain integer arithmetic on top of those four numbers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .catalog import HermitianSpace, resolve
from .curvature import complex_positivity


@dataclass
class ConnectivityReport:
    space_id: str
    v: int
    ell: int
    m: int
    n: int
    lambda0: int
    iso_max: int
    surj_at: int
    pi_vanish_max: int
    pair_vanish_max: int
    vacuous: bool


def _check_dims(m: int, n: int, v: int) -> None:
    if not (0 <= m <= v and 0 <= n <= v):
        raise ValueError(f"dimensions must satisfy 0 <= m, n <= v = {v}")


def index_bound(m: int, n: int, v: int, ell: int, curvature_mode: str) -> int:
    """Lower bound on the Morse index of a connecting geodesic.

    curvature_mode "positive" assumes strictly positive bisectional
    curvature; "nonnegative" subtracts the positivity defect (v - ell).
    The value may be negative, in which case the bound is vacuous.
    """
    _check_dims(m, n, v)
    if not 0 <= ell <= v:
        raise ValueError(f"ell must satisfy 0 <= ell <= v = {v}")
    if curvature_mode == "positive":
        return m + n - (v - 1)
    if curvature_mode == "nonnegative":
        return m + n - (v - 1) - (v - ell)
    raise ValueError(f"unknown curvature_mode {curvature_mode!r}")


def connectivity(space: HermitianSpace, m: int, n: int,
                 ell_override: Optional[int] = None) -> ConnectivityReport:
    """Homotopy connectivity ranges for submanifold dimensions m and n.

    ell_override substitutes a larger positivity value established by
    extra geometric information; it may only strengthen the bounds.
    """
    v = space.v
    _check_dims(m, n, v)
    ell = complex_positivity(space)
    if ell_override is not None:
        if not ell <= ell_override <= v:
            raise ValueError(
                f"ell_override must lie in [{ell}, {v}], got {ell_override}"
            )
        ell = ell_override
    defect = v - ell
    lambda0 = n + m - v - defect
    pi_vanish = 2 * m - v - defect + 1
    return ConnectivityReport(
        space_id=space.id,
        v=v,
        ell=ell,
        m=m,
        n=n,
        lambda0=lambda0,
        iso_max=lambda0,
        surj_at=lambda0 + 1,
        pi_vanish_max=pi_vanish,
        pair_vanish_max=min(pi_vanish, lambda0),
        vacuous=lambda0 < 0,
    )


def _closed_form_lambda0(family: str, params, m: int, n: int) -> int:
    """Per-family closed form for the isomorphism range."""
    if family == "gr":
        p, q = params
        return n + m - 2 * p * q + p + q - 1
    if family == "quadric":
        (p,) = params
        return n + m - p - 1
    if family == "lagr":
        (r,) = params
        return n + m - r * r
    if family == "spinor":
        (r,) = params
        return n + m - r * r + 3 * r - 3
    if family == "e6":
        return n + m - 21
    if family == "e7":
        return n + m - 37
    raise ValueError(f"unknown family {family!r}")


def closed_form_check(family: str, params, m: int, n: int) -> bool:
    """Compare the first-principles range against the closed form."""
    if family in ("e6", "e7"):
        sid = family
    elif family == "gr":
        sid = f"gr:{params[0]},{params[1]}"
    else:
        sid = f"{family}:{params[0]}"
    rep = connectivity(resolve(sid), m, n)
    return rep.lambda0 == _closed_form_lambda0(family, tuple(params), m, n)


def grassmann_rank_refinement(p: int, q: int, r: int) -> int:
    """Positivity guaranteed when every normal (1,0)-vector has rank >= r.

    Returns pq - (p - r)(q - r).  The improvement over the r = 1 base
    value p + q - 1 dominates r - 1 whenever min(p, q) > 2.
    """
    if not 1 <= r <= min(p, q):
        raise ValueError(f"rank class must satisfy 1 <= r <= {min(p, q)}")
    return p * q - (p - r) * (q - r)
