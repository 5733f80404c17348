"""Chevalley structure constants, brackets on g_C and the Killing trace form.

Signs follow the extraspecial-pair convention with respect to the canonical
(height, lex) order on positive roots; every other constant is recovered
from the standard three- and four-root identities.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction as Q
from typing import Dict, List, Optional, Tuple

from .errors import ConsistencyError
from .linalg import solve
from .roots import Root, RootSystem, vadd, vneg, vscale, vsub

ZERO = Q(0)


@dataclass
class AlgebraElement:
    """Sparse element of g_C: root-vector part plus a Cartan part.

    h holds coordinates in the simple-coroot basis.
    """

    e: Dict[Root, Q] = field(default_factory=dict)
    h: Tuple[Q, ...] = ()

    def is_zero(self) -> bool:
        return not self.e and all(c == 0 for c in self.h)


class StructureTable:
    """Chevalley constants N_{a,b} plus bracket/Killing machinery."""

    def __init__(self, rs: RootSystem):
        self.rs = rs
        self.cartan_dim = rs.rank
        self._special: Dict[Tuple[Root, Root], int] = {}
        self._memo: Dict[Tuple[Root, Root], int] = {}
        self._coroot: Dict[Root, Tuple[Q, ...]] = {}
        self._killing_e: Dict[Root, Q] = {}
        self._killing_h: Optional[List[List[Q]]] = None
        self._build()

    # -- construction ----------------------------------------------------

    def _down_string(self, a: Root, b: Root) -> int:
        p = 0
        while vsub(b, vscale(p + 1, a)) in self.rs.roots:
            p += 1
        return p

    def _build(self) -> None:
        rs = self.rs
        pos = rs.positive_roots
        pos_set = set(pos)
        idx = rs.pos_index
        for gamma in pos:
            pairs = []
            for xi in pos:
                eta = vsub(gamma, xi)
                if eta in pos_set and idx(xi) < idx(eta):
                    pairs.append((xi, eta))
            if not pairs:
                continue
            pairs.sort(key=lambda p: idx(p[0]))
            al, be = pairs[0]
            self._special[(al, be)] = self._down_string(al, be) + 1
            n_ab = self._special[(al, be)]
            gg = rs.inner(gamma, gamma)
            for xi, eta in pairs[1:]:
                t = ZERO
                d1 = vsub(al, xi)
                if d1 in rs.roots:
                    t += Q(self.n(al, vneg(xi)) * self.n(be, vneg(eta))) / rs.inner(d1, d1)
                d2 = vsub(be, xi)
                if d2 in rs.roots:
                    t += Q(self.n(vneg(xi), be) * self.n(al, vneg(eta))) / rs.inner(d2, d2)
                val = -gg * t / n_ab
                if val.denominator != 1:
                    raise ConsistencyError(f"non-integral constant for {xi}, {eta}")
                expected = self._down_string(xi, eta) + 1
                if abs(int(val)) != expected:
                    raise ConsistencyError(
                        f"|N| mismatch for {xi}, {eta}: {val} vs {expected}"
                    )
                self._special[(xi, eta)] = int(val)

    # -- constants -------------------------------------------------------

    def n(self, a: Root, b: Root) -> int:
        """Chevalley constant with [e_a, e_b] = N_{a,b} e_{a+b}.

        Zero when a + b is not a root (the a + b = 0 case is handled by
        bracket(), not here).
        """
        s = vadd(a, b)
        if s not in self.rs.roots:
            return 0
        key = (a, b)
        if key in self._memo:
            return self._memo[key]
        rs = self.rs
        ap, bp = rs.is_positive(a), rs.is_positive(b)
        if ap and bp:
            if rs.pos_index(a) < rs.pos_index(b):
                val = self._special[(a, b)]
            else:
                val = -self._special[(b, a)]
        elif not ap and not bp:
            val = -self.n(vneg(a), vneg(b))
        elif not ap:
            val = -self.n(b, a)
        elif rs.is_positive(s):
            # three-root identity: reduce to the positive pair (-b, a+b)
            r = rs.inner(s, s) / rs.inner(a, a)
            q = -r * self.n(vneg(b), s)
            assert q.denominator == 1
            val = int(q)
        else:
            val = -self.n(vneg(a), vneg(b))
        self._memo[key] = val
        return val

    @property
    def n_consts(self) -> Dict[Tuple[Root, Root], int]:
        """Materialized table over every pair with a + b a root."""
        roots = sorted(self.rs.roots)
        return {
            (a, b): self.n(a, b)
            for a in roots
            for b in roots
            if vadd(a, b) in self.rs.roots
        }

    # -- basis elements --------------------------------------------------

    def coroot(self, a: Root) -> Tuple[Q, ...]:
        """Coordinates of a-check in the simple-coroot basis."""
        if a not in self._coroot:
            rs = self.rs
            cols = [
                vscale(Q(2) / rs.inner(s, s), s) for s in rs.simple_roots
            ]
            target = vscale(Q(2) / rs.inner(a, a), a)
            sol = solve(list(zip(*cols)), target)
            assert sol is not None
            self._coroot[a] = tuple(sol)
        return self._coroot[a]

    def cartan_pairing(self, b: Root, j: int) -> int:
        """<b, alpha_j-check> for the j-th simple root."""
        rs = self.rs
        s = rs.simple_roots[j]
        val = 2 * rs.inner(b, s) / rs.inner(s, s)
        assert val.denominator == 1
        return int(val)

    def e_element(self, a: Root, c=1) -> AlgebraElement:
        return AlgebraElement(e={a: Q(c)}, h=tuple(ZERO for _ in range(self.cartan_dim)))

    def h_element(self, coeffs) -> AlgebraElement:
        return AlgebraElement(e={}, h=tuple(Q(c) for c in coeffs))


def structure_constants(rs: RootSystem) -> StructureTable:
    return StructureTable(rs)


def bracket(t: StructureTable, x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    """Lie bracket of two sparse elements over the same table."""
    rank = t.cartan_dim
    e: Dict[Root, Q] = {}
    h = [ZERO] * rank
    for a, ca in x.e.items():
        for b, cb in y.e.items():
            c = ca * cb
            if c == 0:
                continue
            if b == vneg(a):
                for j, d in enumerate(t.coroot(a)):
                    h[j] += c * d
            else:
                s = vadd(a, b)
                if s in t.rs.roots:
                    e[s] = e.get(s, ZERO) + c * t.n(a, b)
    for j, cj in enumerate(y.h):
        if cj:
            for a, ca in x.e.items():
                e[a] = e.get(a, ZERO) - ca * cj * t.cartan_pairing(a, j)
    for j, cj in enumerate(x.h):
        if cj:
            for b, cb in y.e.items():
                e[b] = e.get(b, ZERO) + cj * cb * t.cartan_pairing(b, j)
    return AlgebraElement(
        e={a: c for a, c in e.items() if c != 0}, h=tuple(h)
    )


def killing_form(t: StructureTable, x: AlgebraElement, y: AlgebraElement) -> Q:
    """Exact trace of ad(x) ad(y) over the Chevalley basis."""
    total = ZERO
    for a in t.rs.roots:
        z = t.e_element(a)
        w = bracket(t, x, bracket(t, y, z))
        total += w.e.get(a, ZERO)
    for j in range(t.cartan_dim):
        coeffs = [ZERO] * t.cartan_dim
        coeffs[j] = Q(1)
        z = t.h_element(coeffs)
        w = bracket(t, x, bracket(t, y, z))
        total += w.h[j]
    return total


def killing_e_pair(t: StructureTable, a: Root) -> Q:
    """Cached kappa(e_a, e_{-a})."""
    if a not in t._killing_e:
        t._killing_e[a] = killing_form(t, t.e_element(a), t.e_element(vneg(a)))
    return t._killing_e[a]


def killing_h_matrix(t: StructureTable) -> List[List[Q]]:
    """Cached kappa on the simple-coroot basis of the Cartan subalgebra."""
    if t._killing_h is None:
        rank = t.cartan_dim
        basis = []
        for j in range(rank):
            coeffs = [ZERO] * rank
            coeffs[j] = Q(1)
            basis.append(t.h_element(coeffs))
        t._killing_h = [
            [killing_form(t, basis[i], basis[j]) for j in range(rank)]
            for i in range(rank)
        ]
    return t._killing_h
