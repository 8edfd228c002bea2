"""
Cartan data, roots and weights for the finite types A-G.

Weights carry coordinates in the fundamental-weight basis, roots carry
coordinates in the simple-root basis. The invariant form is normalized so
that ``<alpha_i, alpha_i> = 2 d_i``; it is integer-valued whenever one
argument lies in the root lattice. The conventional normalization (long
roots of squared length 2) is available as ``pairing(..., scaled=True)``.

>>> rs = build_root_system("A", 2)
>>> [r.coords for r in rs.positive_roots]
[(1, 0), (0, 1), (1, 1)]
>>> rs.pairing(rs.fundamental_weight(1), rs.fundamental_weight(1))
Fraction(2, 3)
"""

from __future__ import annotations

__all__ = [
    "InvalidInput", "SizeCapExceeded",
    "CartanDatum", "Weight", "Root", "RootSystem",
    "build_root_system", "group_order", "VALID_TYPES",
]

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache, reduce
from math import factorial, gcd
from typing import Union


class InvalidInput(ValueError):
    """Rejected input (bad type, index, weight or parabolic subset)."""


class SizeCapExceeded(RuntimeError):
    """A configured enumeration cap would be exceeded."""


VALID_TYPES = "A n>=1, B n>=2, C n>=2, D n>=4, E 6-8, F 4, G 2"


def _check_type(family: str, rank: int) -> None:
    ok = (
        (family == "A" and rank >= 1)
        or (family in "BC" and len(family) == 1 and rank >= 2)
        or (family == "D" and rank >= 4)
        or (family == "E" and 6 <= rank <= 8)
        or (family == "F" and rank == 4)
        or (family == "G" and rank == 2)
    )
    if not ok:
        raise InvalidInput(f"invalid Cartan type ({family!r}, {rank!r}); valid: {VALID_TYPES}")


def group_order(family: str, rank: int) -> int:
    """Closed-form order of the Weyl group, used to refuse oversized requests early."""
    _check_type(family, rank)
    n = rank
    if family == "A":
        return factorial(n + 1)
    if family in "BC":
        return 2**n * factorial(n)
    if family == "D":
        return 2 ** (n - 1) * factorial(n)
    return {("E", 6): 51840, ("E", 7): 2903040, ("E", 8): 696729600,
            ("F", 4): 1152, ("G", 2): 12}[family, n]


def _dynkin(family: str, n: int) -> tuple[list[tuple[int, int]], list[int]]:
    """Bourbaki-numbered edges (0-based) and relative squared root lengths."""
    chain = [(i, i + 1) for i in range(n - 1)]
    if family == "A":
        return chain, [1] * n
    if family == "B":
        return chain, [2] * (n - 1) + [1]
    if family == "C":
        return chain, [1] * (n - 1) + [2]
    if family == "D":
        return [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)], [1] * n
    if family == "E":
        edges = [(0, 2), (2, 3), (3, 4), (1, 3)] + [(i, i + 1) for i in range(4, n - 1)]
        return edges, [1] * n
    if family == "F":
        return chain, [2, 2, 1, 1]
    return chain, [1, 3]  # G2: alpha_1 short


def _symmetrizer(cartan: tuple[tuple[int, ...], ...]) -> tuple[int, ...]:
    """Minimal positive integers d_i with (d_i c_ij) symmetric (connected diagram)."""
    n = len(cartan)
    d: list[Fraction | None] = [None] * n
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if j != i and cartan[i][j] != 0 and d[j] is None:
                # d_i c_ij = d_j c_ji
                d[j] = d[i] * cartan[i][j] / cartan[j][i]
                stack.append(j)
    assert all(x is not None for x in d)
    denom = reduce(lambda a, b: a * b // gcd(a, b), (x.denominator for x in d), 1)
    ints = [int(x * denom) for x in d]
    g = reduce(gcd, ints)
    return tuple(x // g for x in ints)


@dataclass(frozen=True)
class CartanDatum:
    family: str
    rank: int
    cartan_matrix: tuple[tuple[int, ...], ...]
    symmetrizers: tuple[int, ...]

    def __post_init__(self):
        c, n = self.cartan_matrix, self.rank
        if len(c) != n or any(len(row) != n for row in c):
            raise InvalidInput("Cartan matrix has wrong shape")
        for i in range(n):
            if c[i][i] != 2:
                raise InvalidInput(f"c_{i + 1}{i + 1} != 2")
            for j in range(n):
                if i != j and (c[i][j] > 0 or (c[i][j] == 0) != (c[j][i] == 0)):
                    raise InvalidInput(f"bad off-diagonal entry c_{i + 1}{j + 1}")
                if self.symmetrizers[i] * c[i][j] != self.symmetrizers[j] * c[j][i]:
                    raise InvalidInput("(d_i c_ij) is not symmetric")
        if self.symmetrizers != _symmetrizer(c):
            raise InvalidInput("symmetrizers are not the minimal choice")

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "rank": self.rank,
            "cartan": [list(row) for row in self.cartan_matrix],
            "d": list(self.symmetrizers),
        }


@dataclass(frozen=True)
class Weight:
    """A weight in fundamental-weight coordinates; ``coords[i] = <lambda, alpha_i^vee>``."""
    coords: tuple[int, ...]
    system: str = field(default="", compare=True)

    def _same(self, other: Weight) -> None:
        if not isinstance(other, Weight) or other.system != self.system:
            raise InvalidInput(f"weights from different root systems: {self.system} vs {getattr(other, 'system', other)}")

    def __add__(self, other: Weight) -> Weight:
        self._same(other)
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)), self.system)

    def __sub__(self, other: Weight) -> Weight:
        self._same(other)
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)), self.system)

    def __neg__(self) -> Weight:
        return Weight(tuple(-a for a in self.coords), self.system)

    def __rmul__(self, k: int) -> Weight:
        return Weight(tuple(k * a for a in self.coords), self.system)

    def is_dominant(self) -> bool:
        return all(a >= 0 for a in self.coords)

    def support(self) -> frozenset[int]:
        """1-based nodes with a nonzero coordinate."""
        return frozenset(i + 1 for i, a in enumerate(self.coords) if a)

    def in_Q_I(self, I) -> bool:
        return self.support().isdisjoint(I)

    def in_Q_I_plus(self, I) -> bool:
        return self.in_Q_I(I) and self.is_dominant()

    def in_Q_I_plus_plus(self, I) -> bool:
        return self.in_Q_I_plus(I) and all(
            self.coords[i] > 0 for i in range(len(self.coords)) if i + 1 not in I
        )


@dataclass(frozen=True)
class Root:
    """An element of the root lattice in simple-root coordinates."""
    coords: tuple[int, ...]
    system: str = ""

    @property
    def is_positive(self) -> bool:
        return any(a > 0 for a in self.coords) and all(a >= 0 for a in self.coords)

    @property
    def height(self) -> int:
        return sum(self.coords)

    def __neg__(self) -> Root:
        return Root(tuple(-a for a in self.coords), self.system)

    def __add__(self, other: Root) -> Root:
        if not isinstance(other, Root) or other.system != self.system:
            raise InvalidInput("roots from different root systems")
        return Root(tuple(a + b for a, b in zip(self.coords, other.coords)), self.system)

    def __sub__(self, other: Root) -> Root:
        return self + (-other)

    def __rmul__(self, k: int) -> Root:
        return Root(tuple(k * a for a in self.coords), self.system)


Vector = Union[Weight, Root]


class RootSystem:
    """Cartan datum plus its positive roots and the invariant form.

    Immutable after construction. Positive roots are ordered by height, then
    lexicographically by reversed coordinates; the simple roots come first.
    """

    def __init__(self, datum: CartanDatum):
        self.datum = datum
        self.name = datum.name
        self.rank = datum.rank
        n = self.rank
        c = datum.cartan_matrix
        self._cartan = c
        self.positive_roots: tuple[Root, ...] = tuple(
            Root(coords, self.name) for coords in self._root_closure()
        )
        self.n_pos = len(self.positive_roots)
        # all roots: positive ones at 0..N-1, their negatives at N..2N-1
        self.roots: tuple[Root, ...] = self.positive_roots + tuple(-r for r in self.positive_roots)
        self.root_index: dict[tuple[int, ...], int] = {r.coords: k for k, r in enumerate(self.roots)}
        # inverse Cartan matrix: weight coords -> root coords is x = C^{-1} lambda
        self._cinv = _invert(c)
        self._reflection_on_roots = tuple(
            tuple(self.root_index[self._reflect_root(i, r.coords)] for r in self.roots)
            for i in range(n)
        )

    def __repr__(self):
        return f"RootSystem({self.name})"

    def __reduce__(self):
        return build_root_system, (self.datum.family, self.rank)

    # -- construction helpers

    def _reflect_root(self, i: int, beta: tuple[int, ...]) -> tuple[int, ...]:
        pair = sum(b * self._cartan[i][j] for j, b in enumerate(beta))
        out = list(beta)
        out[i] -= pair
        return tuple(out)

    def _root_closure(self) -> list[tuple[int, ...]]:
        n = self.rank
        simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        found = set(simple)
        frontier = list(simple)
        while frontier:
            new = []
            for beta in frontier:
                for i in range(n):
                    gamma = self._reflect_root(i, beta)
                    if all(a >= 0 for a in gamma) and gamma not in found:
                        found.add(gamma)
                        new.append(gamma)
            frontier = new
        return sorted(found, key=lambda r: (sum(r), tuple(reversed(r))))

    # -- basis vectors

    def simple_root(self, i: int) -> Root:
        self._check_node(i)
        return self.positive_roots[i - 1]

    def fundamental_weight(self, i: int) -> Weight:
        self._check_node(i)
        return Weight(tuple(int(j == i - 1) for j in range(self.rank)), self.name)

    def weight(self, *coords: int) -> Weight:
        if len(coords) == 1 and not isinstance(coords[0], int):
            coords = tuple(coords[0])
        if len(coords) != self.rank:
            raise InvalidInput(f"weight needs {self.rank} coordinates, got {len(coords)}")
        return Weight(tuple(int(a) for a in coords), self.name)

    def root(self, *coords: int) -> Root:
        if len(coords) == 1 and not isinstance(coords[0], int):
            coords = tuple(coords[0])
        if len(coords) != self.rank:
            raise InvalidInput(f"root lattice element needs {self.rank} coordinates")
        return Root(tuple(int(a) for a in coords), self.name)

    def zero_weight(self) -> Weight:
        return Weight((0,) * self.rank, self.name)

    def _check_node(self, i: int) -> None:
        if not 1 <= i <= self.rank:
            raise InvalidInput(f"node {i} out of range 1..{self.rank}")

    # -- conversions

    def weight_of(self, x: Vector) -> Weight:
        """Express a root-lattice element in fundamental-weight coordinates."""
        self._check(x)
        if isinstance(x, Weight):
            return x
        n = self.rank
        return Weight(tuple(sum(self._cartan[i][j] * x.coords[j] for j in range(n)) for i in range(n)), self.name)

    def root_coords(self, x: Vector) -> tuple[Fraction, ...]:
        """Coordinates in the simple-root basis (rational for general weights)."""
        self._check(x)
        if isinstance(x, Root):
            return tuple(Fraction(a) for a in x.coords)
        n = self.rank
        return tuple(sum((self._cinv[i][j] * x.coords[j] for j in range(n)), Fraction(0)) for i in range(n))

    def in_root_lattice(self, x: Vector) -> bool:
        return all(a.denominator == 1 for a in self.root_coords(x))

    def as_root(self, x: Vector) -> Root:
        coords = self.root_coords(x)
        if any(a.denominator != 1 for a in coords):
            raise InvalidInput("weight is not in the root lattice")
        return Root(tuple(int(a) for a in coords), self.name)

    def _check(self, x) -> None:
        if not isinstance(x, (Weight, Root)):
            raise InvalidInput(f"expected Weight or Root, got {type(x).__name__}")
        if x.system != self.name:
            raise InvalidInput(f"{x!r} does not belong to {self.name}")

    # -- the form

    def pairing(self, x: Vector, y: Vector, scaled: bool = False) -> Fraction:
        """Symmetric invariant form, ``<alpha_i, alpha_j> = d_i c_ij`` internally.

        With ``scaled=True`` the value is divided by ``max d_i`` so that long
        roots have squared length 2.
        """
        self._check(x)
        self._check(y)
        d = self.datum.symmetrizers
        if isinstance(x, Weight) and isinstance(y, Root):
            x, y = y, x
        # <beta, mu> with beta = sum b_j alpha_j:  sum b_j d_j <mu, alpha_j^vee>
        xr = self.root_coords(x)
        yw = self.weight_of(y).coords
        value = sum((xr[j] * d[j] * yw[j] for j in range(self.rank)), Fraction(0))
        if scaled:
            value /= max(d)
        return value

    def coroot_pairing(self, x: Vector, i: int) -> int:
        """``<x, alpha_i^vee>`` for a 1-based node ``i``."""
        self._check_node(i)
        return self.weight_of(x).coords[i - 1]

    def dominance_leq(self, mu: Weight, lam: Weight) -> bool:
        """True iff ``lam - mu`` is a nonnegative integer combination of simple roots."""
        self._check(mu)
        self._check(lam)
        diff = self.root_coords(lam - mu)
        return all(a.denominator == 1 and a >= 0 for a in diff)

    def to_json(self) -> dict:
        out = self.datum.to_json()
        out["positive_roots"] = [list(r.coords) for r in self.positive_roots]
        return out


def _invert(m: tuple[tuple[int, ...], ...]) -> list[list[Fraction]]:
    """Exact Gauss-Jordan inverse."""
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


@lru_cache(maxsize=None)
def build_root_system(family: str, rank: int) -> RootSystem:
    """Root system of type ``family``/``rank`` with Bourbaki node numbering.

    Cached, so equal arguments return the identical object.
    """
    if not isinstance(family, str) or not isinstance(rank, int) or isinstance(rank, bool):
        raise InvalidInput(f"invalid Cartan type ({family!r}, {rank!r}); valid: {VALID_TYPES}")
    family = family.upper()
    _check_type(family, rank)
    edges, lengths = _dynkin(family, rank)
    # symmetric form B_ij = <alpha_i, alpha_j>; c_ij = B_ij / d_i
    b = [[0] * rank for _ in range(rank)]
    for i in range(rank):
        b[i][i] = 2 * lengths[i]
    for i, j in edges:
        b[i][j] = b[j][i] = -max(lengths[i], lengths[j])
    cartan = tuple(tuple(b[i][j] // lengths[i] for j in range(rank)) for i in range(rank))
    datum = CartanDatum(family, rank, cartan, _symmetrizer(cartan))
    return RootSystem(datum)
