"""
The index set ``S = {(w, v) : w in W^I, v <= w}`` of torus-invariant primes
(equivalently Lusztig strata of G/P_I), its fibers over ``W^I`` and the
conjectured containment order

    (w', v') <= (w, v)  iff  there is z in W_I with  w >= w'z  and  v <= v'z,

read as "stratum (w', v') lies in the closure of stratum (w, v)", i.e. the
ideal of (w, v) is contained in the ideal of (w', v'). Nothing here assumes
the relation is a partial order; ``verify_poset_axioms`` checks it.

>>> from flagstrata.weyl import weyl_group
>>> P = enumerate_strata(weyl_group("A", 2), [2])
>>> len(P)
7
"""

from __future__ import annotations

__all__ = [
    "StratumIndex", "StrataPoset", "AxiomReport", "PosetAxiomFailure",
    "enumerate_strata", "closure_leq", "build_relation", "verify_poset_axioms",
    "fibers_by_w", "hasse", "catalog", "export", "verify_same_w", "DEFAULT_MAX_STRATA",
]

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Iterable

from .bruhat import BruhatInterval, bruhat_leq, order_for
from .parabolic import ParabolicSubset, _as_subset, is_minimal_rep, minimal_coset_reps, parabolic_subgroup
from .root_system import InvalidInput, SizeCapExceeded
from .weyl import DEFAULT_MAX_ORDER, WeylElement, WeylGroup

DEFAULT_MAX_STRATA = 20000


class PosetAxiomFailure(RuntimeError):
    """The conjectured relation is not a partial order for this (type, I)."""

    def __init__(self, report: AxiomReport):
        super().__init__(report.summary())
        self.report = report


@dataclass(frozen=True)
class StratumIndex:
    w: WeylElement
    v: WeylElement

    def label(self) -> str:
        return f"{self.w.label()}|{self.v.label()}"

    def to_json(self) -> dict:
        return {"w": list(self.w.reduced_word()), "v": list(self.v.reduced_word())}


@dataclass
class AxiomReport:
    reflexive: bool = True
    antisymmetric: bool = True
    transitive: bool = True
    # (a,) / (a, b) / (a, b, c) index tuples into StrataPoset.elements
    reflexivity_failures: list[tuple[int]] = field(default_factory=list)
    antisymmetry_failures: list[tuple[int, int]] = field(default_factory=list)
    transitivity_failures: list[tuple[int, int, int]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.reflexive and self.antisymmetric and self.transitive

    def to_json(self) -> dict:
        return {"reflexive": self.reflexive, "antisymmetric": self.antisymmetric,
                "transitive": self.transitive}

    def summary(self) -> str:
        parts = [f"{k}={'ok' if v else 'FAIL'}" for k, v in self.to_json().items()]
        bad = (len(self.reflexivity_failures) + len(self.antisymmetry_failures)
               + len(self.transitivity_failures))
        return " ".join(parts) + (f" ({bad} counterexamples)" if bad else "")


@dataclass
class StrataPoset:
    group: WeylGroup
    I: ParabolicSubset
    elements: list[StratumIndex]
    reps: list[WeylElement]
    # relation[a] has bit b set iff elements[a] <= elements[b]
    relation: list[int] | None = None
    axioms: AxiomReport | None = None
    hasse_edges: list[tuple[int, int]] | None = None
    _pos: dict | None = field(default=None, init=False, repr=False)

    def __len__(self):
        return len(self.elements)

    def index(self, s: StratumIndex) -> int:
        if self._pos is None:
            self._pos = {(e.w.perm, e.v.perm): k for k, e in enumerate(self.elements)}
        return self._pos[s.w.perm, s.v.perm]

    def leq(self, a: int, b: int) -> bool:
        if self.relation is None:
            build_relation(self)
        return bool(self.relation[a] >> b & 1)

    def pairs(self) -> Iterable[tuple[int, int]]:
        """All related pairs ``(a, b)`` with ``a <= b``, row-major."""
        if self.relation is None:
            build_relation(self)
        for a, row in enumerate(self.relation):
            b = 0
            while row:
                if row & 1:
                    yield a, b
                row >>= 1
                b += 1


def enumerate_strata(group: WeylGroup, I, max_strata: int = DEFAULT_MAX_STRATA,
                     max_order: int = DEFAULT_MAX_ORDER) -> StrataPoset:
    """All ``(w, v)`` with ``w`` in ``W^I`` and ``v <= w``; ``w`` then ``v`` by (length, word)."""
    I = _as_subset(group, I)
    reps = minimal_coset_reps(group, I, max_order)
    bo = order_for(group)
    total = sum(bo.down_bits(group.index(w)).bit_count() for w in reps)
    if total > max_strata:
        raise SizeCapExceeded(f"|S| = {total} exceeds the strata cap {max_strata}")
    elements = [StratumIndex(w, v) for w in reps for v in bo.interval(w)]
    return StrataPoset(group, I, elements, reps)


def closure_leq(a: StratumIndex, b: StratumIndex, I) -> bool:
    """``a = (w', v') <= b = (w, v)`` iff some ``z`` in ``W_I`` has ``w >= w'z`` and ``v <= v'z``."""
    group = a.w.group
    I = _as_subset(group, I)
    for s in (a, b):
        if not is_minimal_rep(s.w, I) or not bruhat_leq(s.v, s.w):
            raise InvalidInput(f"({s.label()}) is not a valid index for I={{{I}}}")
    for z in parabolic_subgroup(group, I):
        if bruhat_leq(a.w * z, b.w) and bruhat_leq(b.v, a.v * z):
            return True
    return False


def build_relation(poset: StrataPoset) -> list[int]:
    """Fill the relation matrix (one bitset row per element)."""
    if poset.relation is not None:
        return poset.relation
    group = poset.group
    bo = order_for(group)
    zs = parabolic_subgroup(group, poset.I)
    els = poset.elements
    w_idx = [group.index(e.w) for e in els]
    v_idx = [group.index(e.v) for e in els]
    down_w = [bo.down_bits(k) for k in w_idx]
    # fibers are contiguous; group them so each (a, z) tests w once per fiber
    fibers: list[tuple[int, int, int]] = []  # (w index, start, stop)
    start = 0
    for k in range(1, len(els) + 1):
        if k == len(els) or w_idx[k] != w_idx[start]:
            fibers.append((w_idx[start], start, k))
            start = k
    rows = []
    for a, e in enumerate(els):
        row = 0
        for z in zs:
            p = group.index(e.w * z)
            q_down = bo.down_bits(group.index(e.v * z))
            for wk, lo, hi in fibers:
                if not down_w[lo] >> p & 1:
                    continue
                for b in range(lo, hi):
                    if q_down >> v_idx[b] & 1:
                        row |= 1 << b
        rows.append(row)
    poset.relation = rows
    return rows


def verify_poset_axioms(poset: StrataPoset, max_counterexamples: int = 100) -> AxiomReport:
    """Check reflexivity, antisymmetry and transitivity exhaustively."""
    rel = build_relation(poset)
    n = len(rel)
    rep = AxiomReport()
    for a in range(n):
        if not rel[a] >> a & 1:
            rep.reflexive = False
            rep.reflexivity_failures.append((a,))
    for a in range(n):
        row = rel[a] & ~(1 << a)
        b = 0
        while row:
            if row & 1 and rel[b] >> a & 1:
                rep.antisymmetric = False
                if a < b and len(rep.antisymmetry_failures) < max_counterexamples:
                    rep.antisymmetry_failures.append((a, b))
            row >>= 1
            b += 1
    for a in range(n):
        row, b = rel[a], 0
        r = row
        while r:
            if r & 1:
                missing = rel[b] & ~row
                c = 0
                while missing:
                    if missing & 1:
                        rep.transitive = False
                        if len(rep.transitivity_failures) < max_counterexamples:
                            rep.transitivity_failures.append((a, b, c))
                    missing >>= 1
                    c += 1
            r >>= 1
            b += 1
    poset.axioms = rep
    return rep


def fibers_by_w(poset: StrataPoset) -> dict[WeylElement, BruhatInterval]:
    bo = order_for(poset.group)
    return {w: bo.interval(w) for w in poset.reps}


def hasse(poset: StrataPoset) -> list[tuple[int, int]]:
    """Cover relations ``(a, b)`` with ``a < b``; refuses unless the axioms hold."""
    rep = poset.axioms or verify_poset_axioms(poset)
    if not rep.passed:
        raise PosetAxiomFailure(rep)
    rel = poset.relation
    n = len(rel)
    up = [rel[a] & ~(1 << a) for a in range(n)]
    down = [0] * n
    for a in range(n):
        r, b = up[a], 0
        while r:
            if r & 1:
                down[b] |= 1 << a
            r >>= 1
            b += 1
    edges = []
    for a in range(n):
        r, b = up[a], 0
        while r:
            if r & 1 and not up[a] & down[b]:
                edges.append((a, b))
            r >>= 1
            b += 1
    poset.hasse_edges = edges
    return edges


def catalog(poset: StrataPoset) -> dict:
    """JSON-ready catalog; requires a passing axiom check."""
    edges = poset.hasse_edges if poset.hasse_edges is not None else hasse(poset)
    datum = poset.group.system.datum
    bo = order_for(poset.group)
    return {
        "family": datum.family,
        "rank": datum.rank,
        "I": poset.I.sorted(),
        "count": len(poset),
        "elements": [e.to_json() for e in poset.elements],
        "fibers": {w.label(): len(bo.interval(w)) for w in poset.reps},
        "hasse": [list(e) for e in edges],
        "axioms": poset.axioms.to_json(),
    }


def _dot_from_catalog(cat: dict) -> str:
    def word(ws):
        return ",".join(map(str, ws)) if ws else "e"

    name = f"S_{cat['family']}{cat['rank']}_I{'_'.join(map(str, cat['I'])) or 'empty'}"
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for k, e in enumerate(cat["elements"]):
        lines.append(f'  n{k} [label="{word(e["w"])}|{word(e["v"])}"];')
    for a, b in cat["hasse"]:
        lines.append(f"  n{a} -> n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _text_from_catalog(cat: dict) -> str:
    def word(ws):
        return ",".join(map(str, ws)) if ws else "e"

    I = ",".join(map(str, cat["I"]))
    lines = [f"type {cat['family']}{cat['rank']}  I={{{I}}}  strata {cat['count']}"]
    for k, e in enumerate(cat["elements"]):
        lines.append(f"{k:5d}  {word(e['w'])}|{word(e['v'])}")
    lines.append(f"hasse edges {len(cat['hasse'])}")
    for a, b in cat["hasse"]:
        lines.append(f"  {a} < {b}")
    ax = cat["axioms"]
    lines.append("axioms " + " ".join(f"{k}={'ok' if v else 'FAIL'}" for k, v in ax.items()))
    return "\n".join(lines) + "\n"


def _csv_relation(poset: StrataPoset) -> str:
    buf = io.StringIO()
    out = csv.writer(buf, lineterminator="\n")
    out.writerow(["lower", "upper", "lower_label", "upper_label"])
    labels = [e.label() for e in poset.elements]
    for a, b in poset.pairs():
        out.writerow([a, b, labels[a], labels[b]])
    return buf.getvalue()


def render_catalog(cat: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(cat, indent=1) + "\n"
    if fmt == "dot":
        return _dot_from_catalog(cat)
    if fmt == "text":
        return _text_from_catalog(cat)
    raise InvalidInput(f"catalog format {fmt!r} not one of json, dot, text")


def export(poset: StrataPoset, fmt: str = "json") -> str:
    """Serialize as ``json`` (catalog), ``dot`` (Hasse diagram), ``csv`` (relation pairs) or ``text``."""
    if fmt == "csv":
        rep = poset.axioms or verify_poset_axioms(poset)
        if not rep.passed:
            raise PosetAxiomFailure(rep)
        return _csv_relation(poset)
    return render_catalog(catalog(poset), fmt)


def verify_same_w(poset: StrataPoset) -> list[tuple[int, int]]:
    """Pairs in a common fiber where the relation disagrees with
    ``(w, v') <= (w, v)  iff  v <= v'``. Empty means the check passed."""
    build_relation(poset)
    bad = []
    els = poset.elements
    start = 0
    for k in range(1, len(els) + 1):
        if k < len(els) and els[k].w == els[start].w:
            continue
        for a in range(start, k):
            for b in range(start, k):
                if poset.leq(a, b) != bruhat_leq(els[b].v, els[a].v):
                    bad.append((a, b))
        start = k
    return bad
