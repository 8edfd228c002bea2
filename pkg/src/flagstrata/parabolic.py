"""
Parabolic subgroups ``W_I`` and minimal left coset representatives ``W^I``.

Every ``w`` factors uniquely as ``w = w^I w_I`` with ``w^I`` in ``W^I``,
``w_I`` in ``W_I`` and lengths adding.
"""

from __future__ import annotations

__all__ = [
    "ParabolicSubset", "parse_nodes", "parabolic_subgroup",
    "minimal_coset_reps", "parabolic_decompose", "is_minimal_rep",
]

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .root_system import InvalidInput
from .weyl import WeylElement, WeylGroup


@dataclass(frozen=True)
class ParabolicSubset:
    """A subset I of the 1-based Dynkin nodes."""
    rank: int
    nodes: frozenset[int]

    def __post_init__(self):
        bad = sorted(i for i in self.nodes if not 1 <= i <= self.rank)
        if bad:
            raise InvalidInput(f"parabolic nodes {bad} out of range 1..{self.rank}")

    @classmethod
    def of(cls, rank: int, nodes: Iterable[int] = ()) -> ParabolicSubset:
        return cls(rank, frozenset(nodes))

    @property
    def complement(self) -> frozenset[int]:
        return frozenset(range(1, self.rank + 1)) - self.nodes

    def sorted(self) -> list[int]:
        return sorted(self.nodes)

    def __iter__(self):
        return iter(self.sorted())

    def __contains__(self, i) -> bool:
        return i in self.nodes

    def __len__(self):
        return len(self.nodes)

    def __str__(self):
        return ",".join(map(str, self.sorted()))

    @staticmethod
    def all_subsets(rank: int) -> list[ParabolicSubset]:
        return [ParabolicSubset.of(rank, c)
                for k in range(rank + 1)
                for c in combinations(range(1, rank + 1), k)]


def parse_nodes(text: str, rank: int) -> ParabolicSubset:
    """Parse ``"1,3"`` (empty string means the empty set)."""
    text = text.strip()
    if not text:
        return ParabolicSubset.of(rank)
    try:
        nodes = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise InvalidInput(f"cannot parse node list {text!r}") from None
    return ParabolicSubset.of(rank, nodes)


def _as_subset(group: WeylGroup, I) -> ParabolicSubset:
    if isinstance(I, ParabolicSubset):
        if I.rank != group.rank:
            raise InvalidInput(f"parabolic subset of rank {I.rank} used with W({group.name})")
        return I
    return ParabolicSubset.of(group.rank, I)


def parabolic_subgroup(group: WeylGroup, I) -> list[WeylElement]:
    """Closure of ``{s_i : i in I}``, in enumeration order."""
    I = _as_subset(group, I)
    gens = [i - 1 for i in I]
    seen = {group.identity.perm}
    layer = [group.identity]
    out = [group.identity]
    while layer:
        nxt = []
        for u in layer:
            for i in gens:
                v = group.right_mul_generator(u, i)
                if v.perm not in seen:
                    seen.add(v.perm)
                    nxt.append(v)
        out.extend(nxt)
        layer = nxt
    return sorted(out, key=lambda w: (w.length, w.reduced_word()))


def is_minimal_rep(w: WeylElement, I) -> bool:
    """No right descent in I."""
    I = _as_subset(w.group, I)
    return not any(w.group.is_right_descent(w, i - 1) for i in I)


def minimal_coset_reps(group: WeylGroup, I, max_order: int | None = None) -> list[WeylElement]:
    """``W^I`` ordered by (length, canonical word)."""
    I = _as_subset(group, I)
    els = group.enumerate() if max_order is None else group.enumerate(max_order)
    return [w for w in els if is_minimal_rep(w, I)]


def parabolic_decompose(w: WeylElement, I) -> tuple[WeylElement, WeylElement]:
    """Return ``(w_up, w_down)`` with ``w = w_up * w_down``."""
    group = w.group
    I = _as_subset(group, I)
    up = w
    down = group.identity
    while True:
        d = next((i - 1 for i in I if group.is_right_descent(up, i - 1)), None)
        if d is None:
            return up, down
        up = group.right_mul_generator(up, d)
        down = group.left_mul_generator(down, d)
