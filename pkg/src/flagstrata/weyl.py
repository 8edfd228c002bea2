"""
Weyl group elements as signed permutations of the positive roots.

An element ``w`` is stored as the tuple ``perm`` with ``perm[j]`` the index
(into ``RootSystem.roots``) of ``w(beta_j)``. Indices ``>= N`` denote negative
roots, so the length of ``w`` is the number of entries ``>= N``. Generator
indices in the public API are 1-based (Bourbaki numbering).

>>> W = weyl_group("A", 2)
>>> W.from_word([1, 2, 1]) == W.from_word([2, 1, 2])
True
>>> W.longest_element().reduced_word()
(1, 2, 1)
"""

from __future__ import annotations

__all__ = ["WeylElement", "WeylGroup", "weyl_group", "DEFAULT_MAX_ORDER"]

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .root_system import (
    InvalidInput, Root, RootSystem, SizeCapExceeded, Weight,
    build_root_system, group_order,
)

DEFAULT_MAX_ORDER = 10**6


@dataclass(frozen=True, eq=False)
class WeylElement:
    perm: tuple[int, ...]
    group: WeylGroup = field(repr=False)

    def __eq__(self, other):
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self.perm == other.perm and self.group is other.group

    def __hash__(self):
        return hash(self.perm)

    def __repr__(self):
        word = self.reduced_word()
        return f"WeylElement({self.group.name}, {list(word) if word else 'e'})"

    def __mul__(self, other: WeylElement) -> WeylElement:
        return self.group.multiply(self, other)

    @property
    def length(self) -> int:
        n = self.group.n_pos
        return sum(1 for k in self.perm if k >= n)

    def inverse(self) -> WeylElement:
        return self.group.inverse(self)

    def reduced_word(self) -> tuple[int, ...]:
        return self.group.reduced_word(self)

    def is_identity(self) -> bool:
        return self.perm == self.group.identity.perm

    def act(self, x):
        """Apply to a Weight or Root."""
        if isinstance(x, Weight):
            return self.group.act_on_weight(self, x)
        return self.group.act_on_root(self, x)

    def label(self) -> str:
        word = self.reduced_word()
        return ",".join(map(str, word)) if word else "e"


class WeylGroup:
    """The Weyl group of a root system, with lazily cached enumeration."""

    def __init__(self, system: RootSystem):
        self.system = system
        self.name = system.name
        self.rank = system.rank
        self.n_pos = system.n_pos
        N = self.n_pos
        self._refl = system._reflection_on_roots
        self.identity = WeylElement(tuple(range(N)), self)
        self.generators: tuple[WeylElement, ...] = tuple(
            WeylElement(self._refl[i][:N], self) for i in range(self.rank)
        )
        self._elements: list[WeylElement] | None = None
        self._index: dict[tuple[int, ...], int] | None = None
        self._words: dict[tuple[int, ...], tuple[int, ...]] = {self.identity.perm: ()}

    def __repr__(self):
        return f"WeylGroup({self.name})"

    def __reduce__(self):
        return weyl_group, (self.system.datum.family, self.rank)

    @property
    def order(self) -> int:
        return group_order(self.system.datum.family, self.rank)

    # -- basic operations

    def _own(self, *elems: WeylElement) -> None:
        for e in elems:
            if not isinstance(e, WeylElement) or e.group is not self:
                raise InvalidInput(f"element does not belong to W({self.name})")

    def _apply(self, perm: Sequence[int], k: int) -> int:
        """Image of root index ``k`` (positive or negative) under ``perm``."""
        N = self.n_pos
        if k < N:
            return perm[k]
        img = perm[k - N]
        return img + N if img < N else img - N

    def multiply(self, a: WeylElement, b: WeylElement) -> WeylElement:
        self._own(a, b)
        pa = a.perm
        N = self.n_pos
        out = []
        for k in b.perm:
            if k < N:
                out.append(pa[k])
            else:
                img = pa[k - N]
                out.append(img + N if img < N else img - N)
        return WeylElement(tuple(out), self)

    def inverse(self, a: WeylElement) -> WeylElement:
        self._own(a)
        N = self.n_pos
        out = [0] * N
        for j, k in enumerate(a.perm):
            if k < N:
                out[k] = j
            else:
                out[k - N] = j + N
        return WeylElement(tuple(out), self)

    def right_mul_generator(self, w: WeylElement, i: int) -> WeylElement:
        """``w s_i`` for a 0-based generator index."""
        si = self._refl[i]
        p = w.perm
        N = self.n_pos
        return WeylElement(tuple(self._apply(p, si[j]) for j in range(N)), self)

    def left_mul_generator(self, w: WeylElement, i: int) -> WeylElement:
        """``s_i w`` for a 0-based generator index."""
        si = self._refl[i]
        return WeylElement(tuple(si[k] for k in w.perm), self)

    def _check_letter(self, i: int) -> None:
        if isinstance(i, bool) or not isinstance(i, int) or not 1 <= i <= self.rank:
            raise InvalidInput(f"generator index {i!r} out of range 1..{self.rank}")

    def from_word(self, word: Iterable[int]) -> WeylElement:
        """Product ``s_{i_1} ... s_{i_k}``; the word need not be reduced."""
        w = self.identity
        for i in word:
            self._check_letter(i)
            w = self.right_mul_generator(w, i - 1)
        return w

    def s(self, i: int) -> WeylElement:
        self._check_letter(i)
        return self.generators[i - 1]

    # -- descents, length, words

    def is_right_descent(self, w: WeylElement, i: int) -> bool:
        """``l(w s_i) < l(w)`` (0-based ``i``), i.e. ``w(alpha_i) < 0``."""
        return w.perm[i] >= self.n_pos

    def is_left_descent(self, w: WeylElement, i: int) -> bool:
        """``l(s_i w) < l(w)`` (0-based ``i``), i.e. ``w^{-1}(alpha_i) < 0``."""
        N = self.n_pos
        for j, k in enumerate(w.perm):
            if k == i:
                return False
            if k == i + N:
                return True
        raise AssertionError("alpha_i missing from the image of w")

    def left_descents(self, w: WeylElement) -> list[int]:
        """0-based left descents, ascending."""
        N = self.n_pos
        r = self.rank
        return sorted(k - N for k in w.perm if N <= k < N + r)

    def right_descents(self, w: WeylElement) -> list[int]:
        N = self.n_pos
        return [i for i in range(self.rank) if w.perm[i] >= N]

    def length(self, w: WeylElement) -> int:
        self._own(w)
        return w.length

    def reduced_word(self, w: WeylElement) -> tuple[int, ...]:
        """Lexicographically smallest reduced word (1-based letters).

        Built by repeatedly stripping the smallest left descent.
        """
        self._own(w)
        cached = self._words.get(w.perm)
        if cached is not None:
            return cached
        letters = []
        u = w
        while u.perm not in self._words:
            i = self.left_descents(u)[0]
            letters.append(i + 1)
            u = self.left_mul_generator(u, i)
        word = tuple(letters) + self._words[u.perm]
        self._words[w.perm] = word
        return word

    # -- actions

    def act_on_weight(self, w: WeylElement, lam: Weight) -> Weight:
        self._own(w)
        self.system._check(lam)
        coords = list(lam.coords)
        c = self.system._cartan
        for i in reversed(self.reduced_word(w)):
            a = coords[i - 1]
            if a:
                # s_i lambda = lambda - <lambda, alpha_i^vee> alpha_i
                for j in range(self.rank):
                    coords[j] -= a * c[j][i - 1]
        return Weight(tuple(coords), self.name)

    def act_on_root(self, w: WeylElement, beta: Root) -> Root:
        self._own(w)
        self.system._check(beta)
        k = self.system.root_index.get(beta.coords)
        if k is not None:
            return self.system.roots[self._apply(w.perm, k)]
        # general root-lattice element: linear extension through the simple roots
        out = [0] * self.rank
        for i, b in enumerate(beta.coords):
            if b:
                img = self.system.roots[self._apply(w.perm, i)].coords
                for j in range(self.rank):
                    out[j] += b * img[j]
        return Root(tuple(out), self.name)

    def inversion_set(self, w: WeylElement) -> frozenset[Root]:
        """Positive roots ``beta`` with ``w^{-1} beta`` negative."""
        return self.negated_by(self.inverse(w))

    def negated_by(self, x: WeylElement) -> frozenset[Root]:
        """Positive roots sent to negative roots by ``x``."""
        self._own(x)
        N = self.n_pos
        return frozenset(self.system.positive_roots[j] for j in range(N) if x.perm[j] >= N)

    # -- enumeration

    def enumerate(self, max_order: int = DEFAULT_MAX_ORDER) -> list[WeylElement]:
        """All elements, breadth-first by length, each layer in order of reduced word.

        Raises ``SizeCapExceeded`` before any work if ``|W| > max_order``.
        """
        if self.order > max_order:
            raise SizeCapExceeded(
                f"|W({self.name})| = {self.order} exceeds the group-order cap {max_order}"
            )
        if self._elements is None:
            self._elements = self._bfs()
            self._index = {w.perm: k for k, w in enumerate(self._elements)}
        return self._elements

    def _bfs(self) -> list[WeylElement]:
        # Parents are visited in lex order of their words and letters ascending,
        # so the first discovery of a child carries its lex-smallest word.
        seen = {self.identity.perm}
        layer = [self.identity]
        out = [self.identity]
        words = self._words
        while layer:
            nxt = []
            for u in layer:
                wu = words[u.perm]
                for i in range(self.rank):
                    if self.is_right_descent(u, i):
                        continue
                    v = self.right_mul_generator(u, i)
                    if v.perm not in seen:
                        seen.add(v.perm)
                        words[v.perm] = wu + (i + 1,)
                        nxt.append(v)
            out.extend(nxt)
            layer = nxt
        return out

    def __iter__(self) -> Iterator[WeylElement]:
        return iter(self.enumerate())

    def __len__(self) -> int:
        return self.order

    def index(self, w: WeylElement) -> int:
        """Position of ``w`` in the enumeration order."""
        self.enumerate()
        return self._index[w.perm]

    def element_at(self, k: int) -> WeylElement:
        return self.enumerate()[k]

    def longest_element(self) -> WeylElement:
        """The unique element sending every positive root to a negative one."""
        N = self.n_pos
        w = self.identity
        while True:
            asc = [i for i in range(self.rank) if not self.is_right_descent(w, i)]
            if not asc:
                return w
            w = self.right_mul_generator(w, asc[0])
            assert w.length <= N


@lru_cache(maxsize=None)
def weyl_group(family: str, rank: int) -> WeylGroup:
    return WeylGroup(build_root_system(family.upper(), rank))
