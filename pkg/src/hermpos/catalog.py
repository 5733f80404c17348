"""The six families of compact irreducible hermitian symmetric spaces.

Space identifiers follow the grammar
``gr:p,q | quadric:p | lagr:r | spinor:r | e6 | e7``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import List, Optional, Tuple

from .chevalley import StructureTable, structure_constants
from .errors import ConfigError, ConsistencyError
from .roots import Root, RootSystem, build_root_system, vadd, vsub, vneg

_GR = re.compile(r"^gr:(\d+),(\d+)$")
_ONEPARAM = re.compile(r"^(quadric|lagr|spinor):(\d+)$")


@dataclass
class PsiClosureReport:
    space_id: str
    pairs_checked: int
    violations: List[Tuple[Root, Root, str]]

    @property
    def ok(self) -> bool:
        return not self.violations


class HermitianSpace:
    """One catalog space with its root datum and complementary roots."""

    def __init__(self, space_id: str, family: str, params: Tuple[int, ...],
                 rs: RootSystem, node: int):
        self.id = space_id
        self.family = family
        self.params = params
        self.rs = rs
        self.cominuscule_node = node  # 1-based Bourbaki index
        j = node - 1
        psi = [r for r in rs.positive_roots if rs.simple_coordinates(r)[j] == 1]
        self.psi: Tuple[Root, ...] = tuple(psi)
        self.psi_set = frozenset(psi)
        self.v = len(psi)
        self._table: Optional[StructureTable] = None
        self._validate()

    @property
    def table(self) -> StructureTable:
        if self._table is None:
            self._table = structure_constants(self.rs)
        return self._table

    def _validate(self) -> None:
        expect = {
            "gr": lambda p, q: p * q,
            "quadric": lambda p: p,
            "lagr": lambda r: r * (r + 1) // 2,
            "spinor": lambda r: r * (r - 1) // 2,
            "e6": lambda: 16,
            "e7": lambda: 27,
        }[self.family](*self.params)
        if self.v != expect:
            raise ConsistencyError(
                f"{self.id}: |Psi| = {self.v}, closed form gives {expect}"
            )
        rep = check_psi_closure(self)
        if not rep.ok:
            a, b, why = rep.violations[0]
            raise ConsistencyError(f"{self.id}: Psi closure fails at {a}, {b}: {why}")

    def __repr__(self) -> str:
        return f"HermitianSpace({self.id}, v={self.v})"


def _cominuscule_nodes(rs: RootSystem) -> List[int]:
    highest = rs.positive_roots[-1]
    return [
        j + 1 for j, c in enumerate(rs.simple_coordinates(highest)) if c == 1
    ]


@lru_cache(maxsize=None)
def resolve(space_id: str) -> HermitianSpace:
    """Parse a space id and construct the space, validating all invariants."""
    sid = space_id.strip()
    m = _GR.match(sid)
    if m:
        p, q = int(m.group(1)), int(m.group(2))
        if p < 1 or q < 1:
            raise ConfigError(f"gr requires p, q >= 1, got {sid!r}")
        rs = build_root_system("A", p + q - 1)
        return HermitianSpace(sid, "gr", (p, q), rs, p)
    m = _ONEPARAM.match(sid)
    if m:
        fam, k = m.group(1), int(m.group(2))
        if fam == "quadric":
            if k == 2:
                raise ConfigError("quadric:2 rejected: ambient SO(4) is not simple")
            if k < 3:
                raise ConfigError(f"quadric requires p >= 3, got {k}")
            if k % 2:
                rs = build_root_system("B", (k + 1) // 2)
            else:
                rs = build_root_system("D", (k + 2) // 2)
            return HermitianSpace(sid, "quadric", (k,), rs, 1)
        if fam == "lagr":
            if k < 2:
                raise ConfigError(f"lagr requires r >= 2, got {k}")
            rs = build_root_system("C", k)
            return HermitianSpace(sid, "lagr", (k,), rs, k)
        if fam == "spinor":
            if k < 3:
                raise ConfigError(f"spinor requires r >= 3, got {k}")
            rs = build_root_system("D", k)
            return HermitianSpace(sid, "spinor", (k,), rs, k)
    if sid == "e6":
        rs = build_root_system("E6", 6)
        nodes = _cominuscule_nodes(rs)
        sizes = {
            n: sum(1 for r in rs.positive_roots if rs.simple_coordinates(r)[n - 1] == 1)
            for n in nodes
        }
        node = min(nodes, key=lambda n: (sizes[n], n))
        return HermitianSpace(sid, "e6", (), rs, node)
    if sid == "e7":
        rs = build_root_system("E7", 7)
        nodes = _cominuscule_nodes(rs)
        return HermitianSpace(sid, "e7", (), rs, nodes[0])
    raise ConfigError(f"unrecognized space id {space_id!r}")


def complementary_roots(space: HermitianSpace) -> Tuple[Root, ...]:
    """Positive roots with coefficient 1 on the cominuscule node."""
    return space.psi


def check_psi_closure(space: HermitianSpace) -> PsiClosureReport:
    """Verify that no two elements of Psi sum to a root and all pairings >= 0."""
    rs = space.rs
    violations = []
    pairs = 0
    for a in space.psi:
        for b in space.psi:
            pairs += 1
            if vadd(a, b) in rs.roots:
                violations.append((a, b, "sum is a root"))
            if rs.inner(a, b) < 0:
                violations.append((a, b, "negative pairing"))
    return PsiClosureReport(space.id, pairs, violations)


def strongly_orthogonal_cascade(space: HermitianSpace) -> Tuple[Root, ...]:
    """Greedy maximal set of pairwise strongly orthogonal roots in Psi.

    Takes the highest remaining root, discards everything not strongly
    orthogonal to it, and repeats; the length equals the symmetric-space
    rank of the family.
    """
    rs = space.rs
    remaining = list(space.psi)
    out: List[Root] = []
    while remaining:
        top = max(remaining, key=lambda r: (rs.height(r), r))
        out.append(top)
        remaining = [
            g
            for g in remaining
            if g != top
            and vsub(g, top) not in rs.roots
            and vadd(g, top) not in rs.roots
        ]
    return tuple(out)


def symmetric_space_rank(space: HermitianSpace) -> int:
    """Closed-form rank used to cross-check the cascade length."""
    return {
        "gr": lambda p, q: min(p, q),
        "quadric": lambda p: 2,
        "lagr": lambda r: r,
        "spinor": lambda r: r // 2,
        "e6": lambda: 2,
        "e7": lambda: 3,
    }[space.family](*space.params)
