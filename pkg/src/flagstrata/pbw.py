"""
Roots attached to reduced words and weight-graded dimensions of the
quantum Schubert cell algebras.

For a reduced word ``(i_1, ..., i_k)`` the roots are
``beta_j = s_{i_1} ... s_{i_{j-1}} alpha_{i_j}``; as a set they are the
positive roots sent to negative roots by ``w^{-1}``, whatever word is
chosen. PBW monomials are indexed by exponent vectors ``(n_1, ..., n_k)``;
the monomial has weight ``sum n_j beta_j``.
"""

from __future__ import annotations

__all__ = [
    "BetaSequence", "beta_roots", "all_reduced_words", "WordIndependenceReport",
    "check_word_independence", "graded_dimension", "DEFAULT_MAX_WORD_LENGTH",
]

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .root_system import InvalidInput, Root, SizeCapExceeded
from .weyl import WeylElement, WeylGroup

DEFAULT_MAX_WORD_LENGTH = 16


@dataclass(frozen=True)
class BetaSequence:
    word: tuple[int, ...]
    roots: tuple[Root, ...]

    def __len__(self):
        return len(self.roots)


def beta_roots(group: WeylGroup, word: Sequence[int]) -> BetaSequence:
    word = tuple(word)
    w = group.from_word(word)
    if w.length != len(word):
        raise InvalidInput(f"word {list(word)} is not reduced in W({group.name})")
    roots = []
    prefix = group.identity
    for i in word:
        roots.append(group.act_on_root(prefix, group.system.simple_root(i)))
        prefix = group.right_mul_generator(prefix, i - 1)
    return BetaSequence(word, tuple(roots))


def all_reduced_words(w: WeylElement, max_length: int = DEFAULT_MAX_WORD_LENGTH) -> list[tuple[int, ...]]:
    """Every reduced word of ``w`` once, in lexicographic order."""
    if w.length > max_length:
        raise SizeCapExceeded(
            f"length {w.length} exceeds the reduced-word length cap {max_length}")
    group = w.group

    @lru_cache(maxsize=None)
    def words(perm: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
        u = WeylElement(perm, group)
        if u.length == 0:
            return ((),)
        out = []
        for i in group.left_descents(u):
            rest = words(group.left_mul_generator(u, i).perm)
            out.extend((i + 1,) + r for r in rest)
        return tuple(out)

    return list(words(w.perm))


@dataclass
class WordIndependenceReport:
    element: WeylElement
    words_checked: int = 0
    passed: bool = True
    mismatches: list[tuple[int, ...]] = field(default_factory=list)

    def summary(self) -> str:
        status = "pass" if self.passed else "FAIL"
        return f"pbw-invariance {self.element.label()}: {status} ({self.words_checked} words)"


def check_word_independence(w: WeylElement, max_length: int = DEFAULT_MAX_WORD_LENGTH) -> WordIndependenceReport:
    """The set of beta roots is the same for every reduced word of ``w``
    and equals the set of positive roots made negative by ``w^{-1}``."""
    group = w.group
    expected = group.negated_by(w.inverse())
    report = WordIndependenceReport(w)
    for word in all_reduced_words(w, max_length):
        report.words_checked += 1
        seq = beta_roots(group, word)
        if len(set(seq.roots)) != len(seq.roots) or set(seq.roots) != expected:
            report.passed = False
            report.mismatches.append(word)
    return report


def graded_dimension(w: WeylElement, mu: Root, word: Sequence[int] | None = None) -> int:
    """Number of PBW monomials of weight ``mu``.

    Uses the canonical reduced word unless ``word`` is given.
    """
    group = w.group
    if not isinstance(mu, Root):
        mu = group.system.as_root(mu)
    group.system._check(mu)
    if word is None:
        word = w.reduced_word()
    elif group.from_word(word) != w:
        raise InvalidInput(f"word {list(word)} does not represent {w!r}")
    betas = [b.coords for b in beta_roots(group, word).roots]
    if any(a < 0 for a in mu.coords):
        return 0

    @lru_cache(maxsize=None)
    def count(j: int, rest: tuple[int, ...]) -> int:
        if j == len(betas):
            return int(not any(rest))
        total = 0
        b = betas[j]
        cur = rest
        while all(a >= 0 for a in cur):
            total += count(j + 1, cur)
            cur = tuple(x - y for x, y in zip(cur, b))
        return total

    return count(0, mu.coords)
