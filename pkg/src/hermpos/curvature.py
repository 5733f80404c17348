"""Bisectional curvature forms, null spaces and the complex positivity.

Two independent evaluation routes are provided: the closed three-case
curvature component formula assembled into a symmetric matrix over Psi,
and a direct bracket-plus-Killing-trace computation on the compact real
form.  They must agree in kernel, with a constant positive value ratio
per space; the verify battery enforces this at runtime.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from typing import Dict, List, Optional, Tuple

from .catalog import HermitianSpace
from .chevalley import StructureTable, killing_e_pair, killing_h_matrix
from .errors import ConsistencyError
from .linalg import kernel_dim, mat_rank, sym_psd_profile
from .roots import Root, vadd, vneg, vsub

ZERO = Q(0)


@dataclass
class TangentVector:
    """Real tangent vector with rational coefficients over the Psi basis."""

    space: HermitianSpace
    coeffs: Dict[Root, Q]

    def __post_init__(self):
        bad = set(self.coeffs) - self.space.psi_set
        if bad:
            raise ValueError(f"coefficient on root outside Psi: {sorted(bad)[0]}")
        self.coeffs = {r: Q(c) for r, c in self.coeffs.items() if c != 0}

    def is_zero(self) -> bool:
        return not self.coeffs


@dataclass
class HermitianForm:
    space: HermitianSpace
    psi: Tuple[Root, ...]
    matrix: Tuple[Tuple[Q, ...], ...]

    def entry(self, g: Root, d: Root) -> Q:
        i = self.psi.index(g)
        j = self.psi.index(d)
        return self.matrix[i][j]


@dataclass
class ConeLine:
    space: HermitianSpace
    base_vector: TangentVector
    ell_line: int


def curvature_component(space: HermitianSpace, beta: Root, delta: Root,
                        alpha: Root, gamma: Root) -> Q:
    """Component R^gamma_{beta delta-bar alpha} of the curvature tensor.

    Inner products and structure-constant products are weighted by inverse
    squared root lengths so that rescaling the root-vector basis acts by a
    positive diagonal congruence on the assembled form; the weights are 1
    whenever all roots share one length.
    """
    rs = space.rs
    for r in (beta, delta, alpha, gamma):
        if r not in space.psi_set:
            raise ValueError(f"{r} is not a complementary root of {space.id}")
    if vadd(beta, alpha) != vadd(gamma, delta):
        return ZERO
    if beta == gamma:  # then also alpha == delta
        return 4 * rs.inner(beta, delta) / (rs.inner(beta, beta) * rs.inner(delta, delta))
    nu = vsub(alpha, delta)
    if nu not in rs.roots:
        return ZERO
    t = space.table
    return Q(2 * t.n(alpha, vneg(delta)) * t.n(beta, vneg(gamma))) / rs.inner(nu, nu)


def hermitian_form(x: TangentVector) -> HermitianForm:
    """Assemble the bisectional curvature form H_X over the Psi basis.

    Diagonal entries pair coroot-normalized roots; cross terms carry the
    weight 2/(mu,mu) for the connecting root mu = delta - gamma.  Both
    weights collapse to 1 in a simply-laced ambient algebra, and they make
    the matrix positive semidefinite for every space, which the bracket
    oracle checks independently.
    """
    if x.is_zero():
        raise ValueError("hermitian_form requires a nonzero tangent vector")
    space = x.space
    rs = space.rs
    psi = space.psi
    v = space.v
    idx = {r: i for i, r in enumerate(psi)}
    m = [[ZERO] * v for _ in range(v)]
    for i, g in enumerate(psi):
        gg = rs.inner(g, g)
        m[i][i] = sum(
            (c * c * 4 * rs.inner(a, g) / (rs.inner(a, a) * gg)
             for a, c in x.coeffs.items()),
            ZERO,
        )
    t = space.table
    supp = list(x.coeffs.items())
    for a, ca in supp:
        for b, cb in supp:
            if a == b:
                continue
            mu = vsub(a, b)
            if mu not in rs.roots:
                continue
            w = ca * cb * 2 * t.n(a, vneg(b)) / rs.inner(mu, mu)
            for g in psi:
                d = vadd(g, mu)  # delta - gamma = alpha - beta
                if d not in space.psi_set:
                    continue
                m[idx[g]][idx[d]] += w * t.n(g, vneg(d))
    return HermitianForm(space, psi, tuple(tuple(row) for row in m))


def nullity(x: TangentVector) -> int:
    """Kernel dimension of H_X, by exact fraction-free elimination."""
    form = hermitian_form(x)
    return kernel_dim(form.matrix)


def ell_of_line(x: TangentVector) -> ConeLine:
    """Complex positivity of the single line spanned by x."""
    return ConeLine(x.space, x, x.space.v - nullity(x))


def grassmann_rank(p: int, q: int, x: TangentVector) -> int:
    """Rank of the p x q coefficient matrix of a Grassmannian tangent vector."""
    space = x.space
    if space.family != "gr" or space.params != (p, q):
        raise ValueError(f"{space.id} is not gr:{p},{q}")
    rows = []
    for i in range(p):
        row = []
        for j in range(q):
            root = tuple(
                Q(1) if k == i else (Q(-1) if k == p + j else Q(0))
                for k in range(p + q)
            )
            row.append(x.coeffs.get(root, ZERO))
        rows.append(row)
    return mat_rank(rows)


def psi_prime(space: HermitianSpace, alpha: Root) -> Tuple[Root, ...]:
    """Roots of Psi pairing nontrivially with alpha."""
    if alpha not in space.psi_set:
        raise ValueError(f"{alpha} is not a complementary root of {space.id}")
    rs = space.rs
    return tuple(g for g in space.psi if rs.inner(alpha, g) != 0)


def maximal_cone_subspace(space: HermitianSpace, alpha: Root) -> Tuple[Root, ...]:
    """Index set of a maximal subspace of the positivity cone of X_alpha."""
    return psi_prime(space, alpha)


_ELL_CACHE: Dict[str, int] = {}


def complex_positivity(space: HermitianSpace) -> int:
    """Minimum of |Psi'_alpha| over Psi, cross-checked against the kernel."""
    if space.id in _ELL_CACHE:
        return _ELL_CACHE[space.id]
    sizes = {a: len(psi_prime(space, a)) for a in space.psi}
    best = min(space.psi, key=lambda a: (sizes[a], a))
    ell = sizes[best]
    line = ell_of_line(TangentVector(space, {best: Q(1)}))
    if line.ell_line != ell:
        raise ConsistencyError(
            f"{space.id}: |Psi'| = {ell} but kernel gives {line.ell_line}"
        )
    _ELL_CACHE[space.id] = ell
    return ell


def orbit_positivity_values(space: HermitianSpace) -> Tuple[int, ...]:
    """Sorted distinct values of |Psi'_alpha| over alpha in Psi."""
    return tuple(sorted({len(psi_prime(space, a)) for a in space.psi}))


# -- bracket oracle on the compact real form -----------------------------
#
# Compact basis: t_j = i h_j over the simple coroots, and for each positive
# root a the pair x_a = e_a - e_{-a}, y_a = i(e_a + e_{-a}).  All brackets
# and Killing pairings below are rational in this basis.

CKey = Tuple[str, object]
CElem = Dict[CKey, Q]


def _cadd(out: CElem, key: CKey, c: Q) -> None:
    if c == 0:
        return
    out[key] = out.get(key, ZERO) + c


def _xhat(rs, out: CElem, g: Root, c: Q) -> None:
    if rs.is_positive(g):
        _cadd(out, ("x", g), c)
    else:
        _cadd(out, ("x", vneg(g)), -c)


def _yhat(rs, out: CElem, g: Root, c: Q) -> None:
    _cadd(out, ("y", g if rs.is_positive(g) else vneg(g)), c)


def _cbracket_basis(t: StructureTable, ka: CKey, kb: CKey, c: Q, out: CElem) -> None:
    rs = t.rs
    ta, tb = ka[0], kb[0]
    if ta == "t" and tb == "t":
        return
    if ta == "t":
        j, b = ka[1], kb[1]
        pair = t.cartan_pairing(b, j)
        if tb == "x":
            _cadd(out, ("y", b), c * pair)
        else:
            _cadd(out, ("x", b), -c * pair)
        return
    if tb == "t":
        _cbracket_basis(t, kb, ka, -c, out)
        return
    a, b = ka[1], kb[1]
    if ta == "x" and tb == "x":
        if a == b:
            return
        s, d = vadd(a, b), vsub(a, b)
        if s in rs.roots:
            _xhat(rs, out, s, c * t.n(a, b))
        if d in rs.roots:
            _xhat(rs, out, d, -c * t.n(a, vneg(b)))
        return
    if ta == "y" and tb == "y":
        if a == b:
            return
        s, d = vadd(a, b), vsub(a, b)
        if s in rs.roots:
            _xhat(rs, out, s, -c * t.n(a, b))
        if d in rs.roots:
            _xhat(rs, out, d, -c * t.n(a, vneg(b)))
        return
    if ta == "y":  # [y_a, x_b] = -[x_b, y_a]
        _cbracket_basis(t, kb, ka, -c, out)
        return
    # [x_a, y_b]
    if a == b:
        for j, dj in enumerate(t.coroot(a)):
            _cadd(out, ("t", j), 2 * c * dj)
        return
    s, d = vadd(a, b), vsub(a, b)
    if s in rs.roots:
        _yhat(rs, out, s, c * t.n(a, b))
    if d in rs.roots:
        _yhat(rs, out, d, c * t.n(a, vneg(b)))


def _cbracket(t: StructureTable, u: CElem, v: CElem) -> CElem:
    out: CElem = {}
    for ka, ca in u.items():
        for kb, cb in v.items():
            c = ca * cb
            if c != 0:
                _cbracket_basis(t, ka, kb, c, out)
    return {k: c for k, c in out.items() if c != 0}


def _ckilling(t: StructureTable, u: CElem, v: CElem) -> Q:
    kh = killing_h_matrix(t)
    s = ZERO
    for k, cu in u.items():
        if k[0] == "t":
            for k2, cv in v.items():
                if k2[0] == "t":
                    s -= kh[k[1]][k2[1]] * cu * cv
        else:
            cv = v.get(k)
            if cv:
                s -= 2 * killing_e_pair(t, k[1]) * cu * cv
    return s


def _cj(space: HermitianSpace, u: CElem) -> CElem:
    """Complex structure: ad of i times the cominuscule fundamental coweight."""
    out: CElem = {}
    for k, c in u.items():
        kind, a = k
        coef = space.rs.simple_coordinates(a)[space.cominuscule_node - 1] if kind != "t" else 0
        if kind == "x":
            _cadd(out, ("y", a), c * coef)
        elif kind == "y":
            _cadd(out, ("x", a), -c * coef)
    return {k: c for k, c in out.items() if c != 0}


def _tangent_celem(x: TangentVector) -> CElem:
    return {("y", a): Q(c) for a, c in x.coeffs.items()}


def bracket_curvature_oracle(x: TangentVector, w: TangentVector) -> Q:
    """<R(X,JX)W,JW> computed by brackets and the Killing trace form.

    Sign fixed so the resulting quadratic form in w is positive
    semidefinite.
    """
    if x.space is not w.space and x.space.id != w.space.id:
        raise ValueError("tangent vectors live on different spaces")
    space = x.space
    t = space.table
    u = _tangent_celem(x)
    a = _cbracket(t, _cj(space, u), u)  # [JX, X], lands in k
    wv = _tangent_celem(w)
    return _ckilling(t, _cbracket(t, a, wv), _cj(space, wv))


def oracle_form_matrix(x: TangentVector) -> List[List[Q]]:
    """The oracle as a quadratic form on the full 2v-dimensional real p."""
    space = x.space
    t = space.table
    u = _tangent_celem(x)
    a = _cbracket(t, _cj(space, u), u)
    basis: List[CElem] = [{("y", g): Q(1)} for g in space.psi]
    basis += [{("x", g): Q(1)} for g in space.psi]
    rw = [_cbracket(t, a, b) for b in basis]
    jb = [_cj(space, b) for b in basis]
    n = len(basis)
    raw = [[_ckilling(t, rw[i], jb[j]) for j in range(n)] for i in range(n)]
    return [
        [(raw[i][j] + raw[j][i]) / 2 for j in range(n)] for i in range(n)
    ]


def oracle_agreement(x: TangentVector) -> Tuple[int, Optional[Q]]:
    """(kernel dimension of the 2v oracle form, value ratio oracle/formula).

    The ratio is None when the formula matrix vanishes identically.
    Raises ConsistencyError if the two routes disagree.
    """
    space = x.space
    m = hermitian_form(x).matrix
    s = oracle_form_matrix(x)
    v = space.v
    ratio: Optional[Q] = None
    for i in range(v):
        for j in range(v):
            if m[i][j] != 0:
                ratio = s[i][j] / m[i][j]
                break
        if ratio is not None:
            break
    if ratio is not None and ratio <= 0:
        raise ConsistencyError(f"{space.id}: nonpositive oracle ratio {ratio}")
    for i in range(v):
        for j in range(v):
            expect = (ratio or ZERO) * m[i][j]
            if s[i][j] != expect or s[v + i][v + j] != expect:
                raise ConsistencyError(
                    f"{space.id}: oracle/formula mismatch at ({i},{j})"
                )
            if s[i][v + j] != 0:
                raise ConsistencyError(
                    f"{space.id}: oracle form mixes the two real blocks"
                )
    ok, null2 = sym_psd_profile(s)
    if not ok:
        raise ConsistencyError(f"{space.id}: oracle form not PSD")
    null1 = kernel_dim(m)
    if null2 != 2 * null1:
        raise ConsistencyError(
            f"{space.id}: oracle kernel {null2} != 2 x formula kernel {null1}"
        )
    return null2, ratio
