"""
Bruhat order on a Weyl group.

``bruhat_leq`` uses the left-descent recursion: if ``s w < w`` then
``v <= w`` iff ``s v <= s w`` (when ``s v < v``) or ``v <= s w`` (when
``s v > v``). Lower intervals are materialized as integer bitsets indexed
by the group enumeration order, from ``[e, w] = [e, sw] u s[e, sw]``.
"""

from __future__ import annotations

__all__ = ["BruhatInterval", "BruhatOrder", "bruhat_leq", "lower_interval", "covers"]

from dataclasses import dataclass
from typing import Iterator

from .root_system import InvalidInput
from .weyl import WeylElement, WeylGroup


@dataclass(frozen=True)
class BruhatInterval:
    top: WeylElement
    bits: int  # bit k set iff the k-th enumerated element lies below top

    @property
    def group(self) -> WeylGroup:
        return self.top.group

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, v: WeylElement) -> bool:
        return bool(self.bits >> self.group.index(v) & 1)

    def __iter__(self) -> Iterator[WeylElement]:
        els = self.group.enumerate()
        bits, k = self.bits, 0
        while bits:
            if bits & 1:
                yield els[k]
            bits >>= 1
            k += 1

    @property
    def members(self) -> list[WeylElement]:
        return list(self)


class BruhatOrder:
    """Per-group memo tables for the Bruhat order."""

    def __init__(self, group: WeylGroup):
        self.group = group
        self._leq: dict[tuple[tuple[int, ...], tuple[int, ...]], bool] = {}
        self._down: dict[int, int] = {}

    def leq(self, v: WeylElement, w: WeylElement) -> bool:
        self.group._own(v, w)
        return self._leq_rec(v, w)

    def _leq_rec(self, v: WeylElement, w: WeylElement) -> bool:
        lv, lw = v.length, w.length
        if lv > lw:
            return False
        if lv == lw:
            return v.perm == w.perm
        if lv == 0:
            return True
        key = (v.perm, w.perm)
        hit = self._leq.get(key)
        if hit is not None:
            return hit
        G = self.group
        i = G.left_descents(w)[0]
        sw = G.left_mul_generator(w, i)
        sv = G.left_mul_generator(v, i)
        if sv.length < lv:
            result = self._leq_rec(sv, sw)
        else:
            result = self._leq_rec(v, sw)
        self._leq[key] = result
        return result

    def down_bits(self, k: int) -> int:
        """Bitset of ``[e, w]`` for the element at enumeration index ``k``."""
        hit = self._down.get(k)
        if hit is not None:
            return hit
        G = self.group
        els = G.enumerate()
        # iterative in length order so deep towers never recurse
        stack = [k]
        while stack:
            top = stack[-1]
            w = els[top]
            if w.length == 0:
                self._down[top] = 1
                stack.pop()
                continue
            i = G.left_descents(w)[0]
            u = G.index(G.left_mul_generator(w, i))
            if u not in self._down:
                stack.append(u)
                continue
            base = self._down[u]
            bits = base
            b, j = base, 0
            while b:
                if b & 1:
                    bits |= 1 << G.index(G.left_mul_generator(els[j], i))
                b >>= 1
                j += 1
            self._down[top] = bits
            stack.pop()
        return self._down[k]

    def interval(self, w: WeylElement) -> BruhatInterval:
        self.group._own(w)
        return BruhatInterval(w, self.down_bits(self.group.index(w)))

    def covers(self, w: WeylElement) -> list[WeylElement]:
        """Elements covered by ``w``, in enumeration order."""
        self.group._own(w)
        target = w.length - 1
        if target < 0:
            return []
        return [v for v in self.interval(w) if v.length == target]


_orders: dict[int, BruhatOrder] = {}


def order_for(group: WeylGroup) -> BruhatOrder:
    # keyed by id; groups are cached singletons so this never aliases
    bo = _orders.get(id(group))
    if bo is None or bo.group is not group:
        bo = _orders[id(group)] = BruhatOrder(group)
    return bo


def bruhat_leq(v: WeylElement, w: WeylElement) -> bool:
    if not isinstance(v, WeylElement) or not isinstance(w, WeylElement):
        raise InvalidInput("bruhat_leq expects Weyl group elements")
    if v.group is not w.group:
        raise InvalidInput(f"elements from different groups: {v.group.name} vs {w.group.name}")
    return order_for(w.group).leq(v, w)


def lower_interval(w: WeylElement) -> BruhatInterval:
    return order_for(w.group).interval(w)


def covers(w: WeylElement) -> list[WeylElement]:
    return order_for(w.group).covers(w)
