"""
Weight sets of the irreducible modules V(lambda), the pairing inequality
for pairs of their weights, and the q-commutation exponent

    <lambda_1, lambda_2> - <mu_1, mu_2>

of two highest-weight matrix coefficients. Multiplicities are not computed.
"""

from __future__ import annotations

__all__ = [
    "WeightSystem", "weight_system", "dominant_weights_below",
    "EqualityCase", "Lemma1Report", "verify_lemma1", "commutation_exponent",
]

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .parabolic import ParabolicSubset, _as_subset, minimal_coset_reps
from .root_system import InvalidInput, RootSystem, Weight
from .weyl import WeylElement, WeylGroup


@dataclass(frozen=True)
class WeightSystem:
    highest: Weight
    weights: frozenset[Weight]

    def __contains__(self, mu: Weight) -> bool:
        return mu in self.weights

    def __len__(self) -> int:
        return len(self.weights)

    def sorted(self) -> list[Weight]:
        return sorted(self.weights, key=lambda m: tuple(-a for a in m.coords))


@lru_cache(maxsize=4096)
def _saturate(system: RootSystem, highest: Weight) -> frozenset[Weight]:
    # close {lambda} under alpha_i-strings: mu, mu - alpha_i, ..., s_i mu
    c = system._cartan
    n = system.rank
    found = {highest.coords}
    todo = [highest.coords]
    while todo:
        mu = todo.pop()
        for i in range(n):
            m = mu[i]
            if m <= 0:
                continue
            cur = list(mu)
            for _ in range(m):
                for j in range(n):
                    cur[j] -= c[j][i]
                t = tuple(cur)
                if t not in found:
                    found.add(t)
                    todo.append(t)
    return frozenset(Weight(t, system.name) for t in found)


def weight_system(system: RootSystem, lam: Weight) -> WeightSystem:
    """The set of weights of V(lambda)."""
    system._check(lam)
    if not lam.is_dominant():
        raise InvalidInput(f"highest weight {list(lam.coords)} is not dominant")
    return WeightSystem(lam, _saturate(system, lam))


def dominant_weights_below(system: RootSystem, lam: Weight) -> list[Weight]:
    """Dominant ``mu`` with ``lam - mu`` in the nonnegative root cone."""
    system._check(lam)
    top = system.root_coords(lam)
    n = system.rank
    bounds = [int(x) for x in top]  # floor; dominant mu has nonnegative root coords
    out = []

    def rec(i: int, acc: list[int]):
        if i == n:
            mu = system.weight_of(system.root(acc))
            cand = lam - mu
            if cand.is_dominant():
                out.append(cand)
            return
        for k in range(bounds[i] + 1):
            acc.append(k)
            rec(i + 1, acc)
            acc.pop()

    rec(0, [])
    return out


@dataclass(frozen=True)
class EqualityCase:
    mu1: Weight
    mu2: Weight
    # minimal coset reps w with mu1 = w lambda1 (and mu2 = w lambda2 when
    # lambda1 is also regular on the complement of I)
    witnesses: tuple[WeylElement, ...]


@dataclass
class Lemma1Report:
    lambda1: Weight
    lambda2: Weight
    I: ParabolicSubset
    pairs_checked: int = 0
    inequality_holds: bool = True
    clause_b_checked: bool = False
    clause_b_holds: bool = True
    clause_c_checked: bool = False
    clause_c_holds: bool = True
    equality_cases: list[EqualityCase] = field(default_factory=list)
    violations: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.inequality_holds and self.clause_b_holds and self.clause_c_holds

    def summary(self) -> str:
        status = "pass" if self.passed else "FAIL"
        return (f"lemma1 {list(self.lambda1.coords)} {list(self.lambda2.coords)} I={{{self.I}}}: "
                f"{status} ({self.pairs_checked} pairs, {len(self.equality_cases)} equality cases)")


def verify_lemma1(group: WeylGroup, lambda1: Weight, lambda2: Weight, I) -> Lemma1Report:
    """Exhaustively check ``<mu1, mu2> <= <lambda1, lambda2>`` over weight pairs.

    When ``lambda2`` is strictly positive off I, every equality case must have
    ``mu1 = w lambda1`` for some ``w`` in ``W^I``; when ``lambda1`` is too, the
    same ``w`` must also give ``mu2 = w lambda2``.
    """
    system = group.system
    I = _as_subset(group, I)
    for name, lam in (("lambda1", lambda1), ("lambda2", lambda2)):
        system._check(lam)
        if not lam.in_Q_I_plus(I):
            raise InvalidInput(f"{name} = {list(lam.coords)} is not dominant with support off I={{{I}}}")
    report = Lemma1Report(lambda1, lambda2, I)
    report.clause_b_checked = lambda2.in_Q_I_plus_plus(I)
    report.clause_c_checked = report.clause_b_checked and lambda1.in_Q_I_plus_plus(I)
    reps = minimal_coset_reps(group, I)
    orbit1 = [(w, group.act_on_weight(w, lambda1)) for w in reps]
    orbit2 = {w.perm: group.act_on_weight(w, lambda2) for w in reps}
    top = system.pairing(lambda1, lambda2)
    ws1 = weight_system(system, lambda1).sorted()
    ws2 = weight_system(system, lambda2).sorted()
    for mu1 in ws1:
        for mu2 in ws2:
            report.pairs_checked += 1
            value = system.pairing(mu1, mu2)
            if value > top:
                report.inequality_holds = False
                report.violations.append(
                    f"<{list(mu1.coords)}, {list(mu2.coords)}> = {value} > {top}")
                continue
            if value != top:
                continue
            wit = [w for w, img in orbit1 if img == mu1]
            if report.clause_b_checked and not wit:
                report.clause_b_holds = False
                report.violations.append(
                    f"equality at ({list(mu1.coords)}, {list(mu2.coords)}): mu1 is not w lambda1 for w in W^I")
            if report.clause_c_checked:
                wit = [w for w in wit if orbit2[w.perm] == mu2]
                if not wit:
                    report.clause_c_holds = False
                    report.violations.append(
                        f"equality at ({list(mu1.coords)}, {list(mu2.coords)}): no common W^I witness")
            report.equality_cases.append(EqualityCase(mu1, mu2, tuple(wit)))
    return report


def commutation_exponent(system: RootSystem, lambda1: Weight, mu1: Weight,
                         lambda2: Weight, mu2: Weight) -> Fraction:
    """``<lambda1, lambda2> - <mu1, mu2>`` in the integer normalization."""
    for lam, mu in ((lambda1, mu1), (lambda2, mu2)):
        if mu not in weight_system(system, lam):
            raise InvalidInput(f"{list(mu.coords)} is not a weight of V({list(lam.coords)})")
    return system.pairing(lambda1, lambda2) - system.pairing(mu1, mu2)
