"""
Command-line front end.

Nodes and generator indices are 1-based in Bourbaki numbering:

  A_n  chain 1-2-...-n
  B_n  chain, node n short          C_n  chain, node n long
  D_n  chain 1-...-(n-1), node n attached to n-2
  E_n  1-3-4-5-...-n with node 2 attached to 4
  F_4  1-2 long, 3-4 short          G_2  node 1 short, node 2 long

``--I ""`` is the empty subset (full flag variety). In the strata order,
``a <= b`` means stratum ``a`` lies in the closure of stratum ``b``; DOT
edges point from the smaller to the larger stratum.

Exit codes: 0 success, 2 invalid input, 3 size cap exceeded,
4 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from itertools import product
from pathlib import Path

from . import cache
from .bruhat import bruhat_leq, covers, lower_interval
from .parabolic import ParabolicSubset, minimal_coset_reps, parse_nodes
from .pbw import DEFAULT_MAX_WORD_LENGTH, check_word_independence
from .root_system import InvalidInput, SizeCapExceeded, build_root_system, group_order
from .strata import (
    DEFAULT_MAX_STRATA, PosetAxiomFailure, enumerate_strata, export, fibers_by_w,
    render_catalog, verify_poset_axioms, verify_same_w,
)
from .weights import verify_lemma1
from .weyl import DEFAULT_MAX_ORDER, weyl_group

EXIT_OK, EXIT_INPUT, EXIT_CAP, EXIT_VERIFY = 0, 2, 3, 4


@dataclass
class RunConfig:
    command: str
    action: str | None
    family: str
    rank: int
    I: ParabolicSubset | None
    fmt: str
    output: Path | None
    cache_dir: Path | None
    max_group_order: int
    max_strata: int
    max_word_length: int
    max_coord: int

    @classmethod
    def from_args(cls, ns: argparse.Namespace) -> RunConfig:
        family = ns.family.upper()
        system = build_root_system(family, ns.rank)
        for name in ("max_group_order", "max_strata", "max_word_length"):
            if getattr(ns, name) <= 0:
                raise InvalidInput(f"--{name.replace('_', '-')} must be positive")
        if ns.max_coord < 0:
            raise InvalidInput("--max-coord must be nonnegative")
        I = parse_nodes(ns.I, system.rank) if ns.I is not None else None
        cache_dir = None if ns.no_cache else (Path(ns.cache_dir) if ns.cache_dir else cache.default_cache_dir())
        return cls(ns.command, getattr(ns, "action", None), family, ns.rank, I, ns.format,
                   Path(ns.output) if ns.output else None, cache_dir,
                   ns.max_group_order, ns.max_strata, ns.max_word_length, ns.max_coord)

    def group(self):
        order = group_order(self.family, self.rank)
        if order > self.max_group_order:
            raise SizeCapExceeded(
                f"|W({self.family}{self.rank})| = {order} exceeds --max-group-order {self.max_group_order}")
        return weyl_group(self.family, self.rank)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        _fail(EXIT_INPUT, "invalid-input", message)


def _fail(code: int, kind: str, message: str):
    print(f"error[{kind}]: {' '.join(str(message).split())}", file=sys.stderr)
    sys.exit(code)


def _word(text: str) -> list[int]:
    text = text.strip()
    if text in ("", "e"):
        return []
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise InvalidInput(f"cannot parse word {text!r}") from None


def _label(word) -> str:
    return ",".join(map(str, word)) if word else "e"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--family", required=True, help="Cartan type letter A-G")
    common.add_argument("--rank", required=True, type=int)
    common.add_argument("--I", dest="I", default=None,
                        help='parabolic nodes, comma separated; "" for the empty set')
    common.add_argument("--format", default="text", choices=["json", "dot", "csv", "text"])
    common.add_argument("--output", "-o", default=None, help="write to file instead of stdout")
    common.add_argument("--cache-dir", default=None, help=f"overrides ${cache.ENV_VAR}")
    common.add_argument("--no-cache", action="store_true")
    common.add_argument("--max-group-order", type=int, default=DEFAULT_MAX_ORDER)
    common.add_argument("--max-strata", type=int, default=DEFAULT_MAX_STRATA)
    common.add_argument("--max-word-length", type=int, default=DEFAULT_MAX_WORD_LENGTH)
    common.add_argument("--max-coord", type=int, default=2,
                        help="largest fundamental coordinate of highest weights in lemma1 checks")

    p = _Parser(prog="flagstrata", description=__doc__,
                formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sub.add_parser("roots", parents=[common], help="Cartan datum and positive roots")

    w = sub.add_parser("weyl", parents=[common], help="Weyl group enumeration")
    w.add_argument("action", choices=["count", "list", "longest"])

    b = sub.add_parser("bruhat", parents=[common], help="Bruhat order queries")
    b.add_argument("action", choices=["leq", "interval", "covers"])
    b.add_argument("--v", default="", help="word of v, e.g. 1,2")
    b.add_argument("--w", default="", help="word of w")

    sub.add_parser("cosets", parents=[common], help="minimal coset representatives W^I")

    s = sub.add_parser("strata", parents=[common], help="the index set S_{W,I} and its order")
    s.add_argument("action", choices=["count", "list", "hasse", "fibers"])

    v = sub.add_parser("verify", parents=[common], help="exhaustive verification suites")
    v.add_argument("action", choices=["poset", "same-w", "lemma1", "pbw-invariance", "all"])
    return p


# -- commands


def cmd_roots(cfg: RunConfig) -> str:
    rs = build_root_system(cfg.family, cfg.rank)
    if cfg.fmt == "json":
        return json.dumps(rs.to_json()) + "\n"
    d = rs.datum
    lines = [f"type {d.name}", "cartan:"]
    lines += ["  " + " ".join(f"{x:2d}" for x in row) for row in d.cartan_matrix]
    lines.append("d: " + " ".join(map(str, d.symmetrizers)))
    lines.append(f"positive roots ({rs.n_pos}):")
    lines += ["  " + " ".join(map(str, r.coords)) for r in rs.positive_roots]
    return "\n".join(lines) + "\n"


def cmd_weyl(cfg: RunConfig) -> str:
    W = cfg.group()
    if cfg.action == "count":
        n = len(W.enumerate(cfg.max_group_order))
        return json.dumps({"order": n}) + "\n" if cfg.fmt == "json" else f"{n}\n"
    if cfg.action == "longest":
        w0 = W.longest_element()
        word = list(w0.reduced_word())
        if cfg.fmt == "json":
            return json.dumps({"word": word, "length": w0.length}) + "\n"
        return f"{_label(word)}\n"
    els = W.enumerate(cfg.max_group_order)
    if cfg.fmt == "json":
        return json.dumps([list(w.reduced_word()) for w in els]) + "\n"
    return "".join(f"{w.length}\t{w.label()}\n" for w in els)


def cmd_bruhat(cfg: RunConfig, ns: argparse.Namespace) -> str:
    W = cfg.group()
    w = W.from_word(_word(ns.w))
    if cfg.action == "leq":
        res = bruhat_leq(W.from_word(_word(ns.v)), w)
        return json.dumps(res) + "\n" if cfg.fmt == "json" else f"{str(res).lower()}\n"
    W.enumerate(cfg.max_group_order)
    members = list(lower_interval(w)) if cfg.action == "interval" else covers(w)
    words = [list(u.reduced_word()) for u in members]
    if cfg.fmt == "json":
        return json.dumps({"w": list(w.reduced_word()), "size": len(words), "elements": words}) + "\n"
    return f"{len(words)}\n" + "".join(f"{_label(x)}\n" for x in words)


def cmd_cosets(cfg: RunConfig) -> str:
    W = cfg.group()
    I = cfg.I or ParabolicSubset.of(cfg.rank)
    reps = minimal_coset_reps(W, I, cfg.max_group_order)
    if cfg.fmt == "json":
        return json.dumps({"I": I.sorted(), "count": len(reps),
                           "elements": [list(w.reduced_word()) for w in reps]}) + "\n"
    return f"{len(reps)}\n" + "".join(f"{w.label()}\n" for w in reps)


def cmd_strata(cfg: RunConfig) -> str:
    W = cfg.group()
    I = cfg.I or ParabolicSubset.of(cfg.rank)
    if cfg.action == "count":
        poset = enumerate_strata(W, I, cfg.max_strata, cfg.max_group_order)
        return json.dumps({"count": len(poset)}) + "\n" if cfg.fmt == "json" else f"{len(poset)}\n"
    if cfg.action == "list":
        poset = enumerate_strata(W, I, cfg.max_strata, cfg.max_group_order)
        if cfg.fmt == "json":
            return json.dumps([e.to_json() for e in poset.elements]) + "\n"
        return "".join(f"{e.label()}\n" for e in poset.elements)
    if cfg.action == "fibers":
        poset = enumerate_strata(W, I, cfg.max_strata, cfg.max_group_order)
        fib = fibers_by_w(poset)
        if cfg.fmt == "json":
            return json.dumps({w.label(): len(iv) for w, iv in fib.items()}) + "\n"
        return "".join(f"{w.label()}\t{len(iv)}\n" for w, iv in fib.items())
    # hasse
    if cfg.fmt == "csv":
        poset = enumerate_strata(W, I, cfg.max_strata, cfg.max_group_order)
        return export(poset, "csv")
    cat = cache.load_or_build_catalog(W, I, cfg.cache_dir, cfg.max_strata, cfg.max_group_order)
    return render_catalog(cat, cfg.fmt)


def _subsets(cfg: RunConfig) -> list[ParabolicSubset]:
    return [cfg.I] if cfg.I is not None else ParabolicSubset.all_subsets(cfg.rank)


def _check_poset(cfg, W, I):
    if cfg.cache_dir is not None:
        hit = cache.load(cache.cache_path(cfg.cache_dir, cfg.family, cfg.rank, I))
        if hit is not None:
            ok = all(hit["axioms"].values())
            return ok, f"|S|={hit['count']} (cached) " + " ".join(
                f"{k}={'ok' if v else 'FAIL'}" for k, v in hit["axioms"].items())
    poset = enumerate_strata(W, I, cfg.max_strata, cfg.max_group_order)
    rep = verify_poset_axioms(poset)
    detail = f"|S|={len(poset)} {rep.summary()}"
    labels = [e.label() for e in poset.elements]
    for a, b in rep.antisymmetry_failures:
        detail += f"; antisymmetry {labels[a]} <-> {labels[b]}"
    for a, b, c in rep.transitivity_failures:
        detail += f"; transitivity {labels[a]} <= {labels[b]} <= {labels[c]}"
    if rep.passed and cfg.cache_dir is not None:
        try:
            cache.load_or_build_catalog(W, I, cfg.cache_dir, cfg.max_strata, cfg.max_group_order)
        except OSError:
            pass
    return rep.passed, detail


def _check_same_w(cfg, W, I):
    poset = enumerate_strata(W, I, cfg.max_strata, cfg.max_group_order)
    bad = verify_same_w(poset)
    labels = [e.label() for e in poset.elements]
    detail = f"{len(poset.reps)} fibers"
    for a, b in bad[:20]:
        detail += f"; mismatch {labels[a]} vs {labels[b]}"
    return not bad, detail


def _check_lemma1(cfg, W, I):
    rs = W.system
    free = sorted(I.complement)
    n_checked = n_eq = 0
    failures = []
    ranges = [range(cfg.max_coord + 1)] * len(free)
    lams = []
    for coords in product(*ranges):
        c = [0] * cfg.rank
        for node, a in zip(free, coords):
            c[node - 1] = a
        lams.append(rs.weight(c))
    for l1 in lams:
        for l2 in lams:
            rep = verify_lemma1(W, l1, l2, I)
            n_checked += rep.pairs_checked
            n_eq += len(rep.equality_cases)
            if not rep.passed:
                failures.append(rep.summary() + ": " + "; ".join(rep.violations[:5]))
    detail = f"{len(lams) ** 2} highest-weight pairs, {n_checked} weight pairs, {n_eq} equality cases"
    if failures:
        detail += "; " + " | ".join(failures[:5])
    return not failures, detail


def _check_pbw(cfg, W, I):
    checked = skipped = words = 0
    bad = []
    for w in W.enumerate(cfg.max_group_order):
        if w.length > cfg.max_word_length:
            skipped += 1
            continue
        rep = check_word_independence(w, cfg.max_word_length)
        checked += 1
        words += rep.words_checked
        if not rep.passed:
            bad.append(w.label())
    detail = f"{checked} elements, {words} reduced words"
    if skipped:
        detail += f", {skipped} skipped over length cap {cfg.max_word_length}"
    if bad:
        detail += "; failing " + " ".join(bad[:20])
    return not bad, detail


_CHECKS = {
    "poset": (_check_poset, True),
    "same-w": (_check_same_w, True),
    "lemma1": (_check_lemma1, True),
    "pbw-invariance": (_check_pbw, False),
}


def cmd_verify(cfg: RunConfig) -> tuple[str, bool]:
    W = cfg.group()
    W.enumerate(cfg.max_group_order)
    names = list(_CHECKS) if cfg.action == "all" else [cfg.action]
    rows = []
    for name in names:
        fn, per_subset = _CHECKS[name]
        for I in (_subsets(cfg) if per_subset else [None]):
            ok, detail = fn(cfg, W, I)
            rows.append({"check": name, "I": I.sorted() if I is not None else None,
                         "passed": ok, "detail": detail})
    all_ok = all(r["passed"] for r in rows)
    if cfg.fmt == "json":
        out = json.dumps({"family": cfg.family, "rank": cfg.rank, "passed": all_ok,
                          "checks": rows}, indent=1) + "\n"
    else:
        lines = [f"verify {cfg.family}{cfg.rank}"]
        for r in rows:
            I = "-" if r["I"] is None else "{" + ",".join(map(str, r["I"])) + "}"
            lines.append(f"{'PASS' if r['passed'] else 'FAIL'}  {r['check']:<15} I={I:<10} {r['detail']}")
        passed = sum(r["passed"] for r in rows)
        lines.append(f"{passed}/{len(rows)} checks passed")
        out = "\n".join(lines) + "\n"
    return out, all_ok


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        cfg = RunConfig.from_args(ns)
        ok = True
        if cfg.command == "roots":
            out = cmd_roots(cfg)
        elif cfg.command == "weyl":
            out = cmd_weyl(cfg)
        elif cfg.command == "bruhat":
            out = cmd_bruhat(cfg, ns)
        elif cfg.command == "cosets":
            out = cmd_cosets(cfg)
        elif cfg.command == "strata":
            out = cmd_strata(cfg)
        else:
            out, ok = cmd_verify(cfg)
    except InvalidInput as exc:
        _fail(EXIT_INPUT, "invalid-input", str(exc))
    except SizeCapExceeded as exc:
        _fail(EXIT_CAP, "size-cap", str(exc))
    except PosetAxiomFailure as exc:
        _fail(EXIT_VERIFY, "verification", f"relation is not a partial order: {exc}")
    if cfg.output is not None:
        cfg.output.write_text(out)
    else:
        sys.stdout.write(out)
    if not ok:
        print("error[verification]: at least one check failed", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
