"""Root systems of types A, B, C, D, E6 and E7 over exact rationals.

Coordinate models follow Bourbaki: A_n in the sum-zero hyperplane of an
(n+1)-coordinate space, B/C/D in n coordinates, and the E types inside the
8-coordinate E8 model restricted to the span of the first 7 (resp. 6)
simple roots.  Simple roots carry Bourbaki numbering throughout.
"""

from __future__ import annotations

from functools import lru_cache
from fractions import Fraction as Q
from itertools import combinations, product
from typing import Dict, FrozenSet, List, Optional, Tuple

from .errors import ConfigError
from .linalg import solve

Root = Tuple[Q, ...]

FAMILIES = ("A", "B", "C", "D", "E6", "E7")


def vadd(a: Root, b: Root) -> Root:
    return tuple(x + y for x, y in zip(a, b))


def vsub(a: Root, b: Root) -> Root:
    return tuple(x - y for x, y in zip(a, b))


def vneg(a: Root) -> Root:
    return tuple(-x for x in a)


def vscale(k, a: Root) -> Root:
    return tuple(Q(k) * x for x in a)


def dot(a: Root, b: Root) -> Q:
    return sum((x * y for x, y in zip(a, b)), Q(0))


def _unit(dim: int, i: int) -> Root:
    return tuple(Q(1) if j == i else Q(0) for j in range(dim))


def _classical_roots(family: str, n: int) -> Tuple[List[Root], List[Root]]:
    """(all roots, simple roots) for the classical coordinate models."""
    if family == "A":
        dim = n + 1
        roots = [
            vsub(_unit(dim, i), _unit(dim, j))
            for i in range(dim)
            for j in range(dim)
            if i != j
        ]
        simple = [vsub(_unit(dim, i), _unit(dim, i + 1)) for i in range(n)]
        return roots, simple
    roots = []
    for i, j in combinations(range(n), 2):
        for si, sj in product((1, -1), repeat=2):
            roots.append(vadd(vscale(si, _unit(n, i)), vscale(sj, _unit(n, j))))
    simple = [vsub(_unit(n, i), _unit(n, i + 1)) for i in range(n - 1)]
    if family == "B":
        roots += [vscale(s, _unit(n, i)) for i in range(n) for s in (1, -1)]
        simple.append(_unit(n, n - 1))
    elif family == "C":
        roots += [vscale(2 * s, _unit(n, i)) for i in range(n) for s in (1, -1)]
        simple.append(vscale(2, _unit(n, n - 1)))
    elif family == "D":
        simple.append(vadd(_unit(n, n - 2), _unit(n, n - 1)))
    return roots, simple


def _e8_roots() -> List[Root]:
    roots: List[Root] = []
    for i, j in combinations(range(8), 2):
        for si, sj in product((1, -1), repeat=2):
            roots.append(vadd(vscale(si, _unit(8, i)), vscale(sj, _unit(8, j))))
    for signs in product((Q(1, 2), Q(-1, 2)), repeat=8):
        if sum(1 for s in signs if s < 0) % 2 == 0:
            roots.append(tuple(signs))
    return roots


def _e8_simple() -> List[Root]:
    a1 = tuple(
        Q(1, 2) if i in (0, 7) else Q(-1, 2) for i in range(8)
    )
    simple = [a1, vadd(_unit(8, 0), _unit(8, 1))]
    simple += [vsub(_unit(8, i + 1), _unit(8, i)) for i in range(6)]
    return simple


def _e_subsystem(k: int) -> Tuple[List[Root], List[Root]]:
    """Roots of E8 lying in the span of the first k Bourbaki simple roots."""
    simple = _e8_simple()[:k]
    cols = list(zip(*simple))  # 8 x k matrix, columns are simple roots
    roots = [r for r in _e8_roots() if solve(cols, r) is not None]
    return roots, simple


class RootSystem:
    """Immutable root system with exact rational coordinates."""

    def __init__(self, family: str, rank: int):
        if family not in FAMILIES:
            raise ConfigError(f"unsupported family {family!r}")
        lo = {"A": 1, "B": 2, "C": 2, "D": 3, "E6": 6, "E7": 7}[family]
        if family in ("E6", "E7"):
            if rank != lo:
                raise ConfigError(f"family {family} has fixed rank {lo}, got {rank}")
            roots, simple = _e_subsystem(lo if lo == 6 else 7)
        else:
            if rank < lo:
                raise ConfigError(f"family {family} requires rank >= {lo}, got {rank}")
            roots, simple = _classical_roots(family, rank)
        self.family = family
        self.rank = rank
        self.dim = len(simple[0])
        self.simple_roots: Tuple[Root, ...] = tuple(simple)
        self.roots: FrozenSet[Root] = frozenset(roots)
        # Long roots are normalized to squared length 2.
        self._scale = Q(1, 2) if family == "C" else Q(1)
        cols = list(zip(*simple))
        coords: Dict[Root, Tuple[int, ...]] = {}
        for r in self.roots:
            c = solve(cols, r)
            if c is None:
                raise ConfigError(f"root {r} outside the simple-root span")
            coords[r] = tuple(int(x) for x in c)
        self._simple_coords = coords
        pos = [r for r in self.roots if all(c >= 0 for c in coords[r])]
        pos.sort(key=lambda r: (sum(coords[r]), r))
        self.positive_roots: Tuple[Root, ...] = tuple(pos)
        self._pos_set = frozenset(pos)
        self._pos_index = {r: i for i, r in enumerate(pos)}

    # -- queries ---------------------------------------------------------

    def is_root(self, v: Root) -> bool:
        if len(v) != self.dim:
            raise ValueError(
                f"coordinate dimension {len(v)} does not match ambient {self.dim}"
            )
        return tuple(Q(x) for x in v) in self.roots

    def is_positive(self, a: Root) -> bool:
        return a in self._pos_set

    def simple_coordinates(self, a: Root) -> Tuple[int, ...]:
        return self._simple_coords[a]

    def height(self, a: Root) -> int:
        return sum(self._simple_coords[a])

    def pos_index(self, a: Root) -> int:
        """Position in the canonical (height, lex) order on positive roots."""
        return self._pos_index[a]

    def inner(self, a: Root, b: Root) -> Q:
        """Invariant inner product, long roots of squared length 2."""
        if len(a) != self.dim or len(b) != self.dim:
            raise ValueError("coordinate dimension mismatch")
        return self._scale * dot(a, b)

    def cartan_int(self, a: Root, b: Root) -> int:
        """2(a,b)/(a,a) as an exact integer."""
        val = 2 * self.inner(a, b) / self.inner(a, a)
        assert val.denominator == 1
        return int(val)

    def reflect(self, a: Root, b: Root) -> Root:
        """Weyl reflection of b through the hyperplane orthogonal to a."""
        return vsub(b, vscale(self.cartan_int(a, b), a))

    def root_string(self, a: Root, b: Root) -> Tuple[int, int]:
        """(p, q): b - p*a ... b + q*a is the a-string through b."""
        if not (self.is_root(a) and self.is_root(b)):
            raise ValueError("root_string arguments must be roots")
        if b == a or b == vneg(a):
            raise ValueError("root_string undefined for b = ±a")
        p = 0
        while vsub(b, vscale(p + 1, a)) in self.roots:
            p += 1
        q = 0
        while vadd(b, vscale(q + 1, a)) in self.roots:
            q += 1
        return p, q

    def __repr__(self) -> str:
        return f"RootSystem({self.family}, {self.rank}, {len(self.roots)} roots)"


@lru_cache(maxsize=None)
def build_root_system(family: str, rank: int) -> RootSystem:
    """Construct (and cache) the root system of the given family and rank."""
    return RootSystem(family, rank)
