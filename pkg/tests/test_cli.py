import json
import subprocess
import sys

import pytest

from flagstrata import cache
from flagstrata.cli import run


@pytest.fixture
def cli(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("STRATA_CACHE_DIR", str(tmp_path / "cache"))

    def invoke(*argv):
        with pytest.raises(SystemExit) as exc:
            sys.exit(run(list(argv)))
        out, err = capsys.readouterr()
        return exc.value.code, out, err

    return invoke


def test_roots_json(cli):
    code, out, _ = cli("roots", "--family", "A", "--rank", "2", "--format", "json")
    assert code == 0
    assert json.loads(out)["positive_roots"] == [[1, 0], [0, 1], [1, 1]]


def test_weyl_count(cli):
    assert cli("weyl", "count", "--family", "F", "--rank", "4")[:2] == (0, "1152\n")


def test_weyl_longest_and_list(cli):
    assert cli("weyl", "longest", "--family", "A", "--rank", "2")[1] == "1,2,1\n"
    code, out, _ = cli("weyl", "list", "--family", "B", "--rank", "2", "--format", "json")
    assert len(json.loads(out)) == 8


def test_bruhat(cli):
    assert cli("bruhat", "leq", "--family", "A", "--rank", "2", "--v", "1", "--w", "2,1")[1] == "true\n"
    assert cli("bruhat", "leq", "--family", "A", "--rank", "2", "--v", "1", "--w", "2")[1] == "false\n"
    code, out, _ = cli("bruhat", "interval", "--family", "A", "--rank", "2", "--w", "1,2", "--format", "json")
    assert json.loads(out)["size"] == 4
    code, out, _ = cli("bruhat", "covers", "--family", "A", "--rank", "2", "--w", "1,2,1")
    assert out.splitlines() == ["2", "1,2", "2,1"]


def test_cosets(cli):
    code, out, _ = cli("cosets", "--family", "A", "--rank", "3", "--I", "1,3", "--format", "json")
    assert json.loads(out)["count"] == 6


def test_strata_counts(cli):
    assert cli("strata", "count", "--family", "A", "--rank", "2", "--I", "2")[1] == "7\n"
    assert cli("strata", "count", "--family", "A", "--rank", "3", "--I", "1,3")[1] == "33\n"
    assert cli("strata", "count", "--family", "A", "--rank", "2", "--I", "")[1] == "19\n"


def test_strata_hasse_dot(cli):
    code, out, _ = cli("strata", "hasse", "--family", "A", "--rank", "1", "--I", "", "--format", "dot")
    assert code == 0
    assert out.count("[label=") == 3 and out.startswith("digraph")


def test_strata_list_fibers_csv(cli):
    code, out, _ = cli("strata", "fibers", "--family", "A", "--rank", "2", "--I", "2", "--format", "json")
    assert json.loads(out) == {"e": 1, "1": 2, "2,1": 4}
    code, out, _ = cli("strata", "list", "--family", "A", "--rank", "1", "--I", "")
    assert out.splitlines() == ["e|e", "1|e", "1|1"]
    code, out, _ = cli("strata", "hasse", "--family", "A", "--rank", "1", "--I", "", "--format", "csv")
    assert out.splitlines()[0] == "lower,upper,lower_label,upper_label"


def test_hasse_cache_roundtrip(cli, tmp_path):
    args = ("strata", "hasse", "--family", "A", "--rank", "2", "--I", "2", "--format", "json")
    first = cli(*args)[1]
    path = tmp_path / "cache" / "A2_I2.json"
    assert path.exists()
    assert json.loads(path.read_text())["version"] == cache.CACHE_VERSION
    assert cli(*args)[1] == first
    assert cli(*args, "--no-cache")[1] == first


def test_stale_cache_ignored(cli, tmp_path):
    path = tmp_path / "cache" / "A2_I2.json"
    path.parent.mkdir(parents=True)
    path.write_text(json.dumps({"version": -1, "count": 999}))
    out = cli("strata", "hasse", "--family", "A", "--rank", "2", "--I", "2", "--format", "json")[1]
    assert json.loads(out)["count"] == 7
    assert json.loads(path.read_text())["version"] == cache.CACHE_VERSION


def test_verify_all_a2(cli):
    code, out, _ = cli("verify", "all", "--family", "A", "--rank", "2")
    assert code == 0
    assert "FAIL" not in out and out.strip().endswith("13/13 checks passed")


def test_verify_single(cli):
    code, out, _ = cli("verify", "poset", "--family", "G", "--rank", "2", "--I", "1")
    assert code == 0 and "reflexive=ok antisymmetric=ok transitive=ok" in out
    code, out, _ = cli("verify", "same-w", "--family", "B", "--rank", "2", "--I", "2", "--format", "json")
    rep = json.loads(out)
    assert code == 0 and rep["passed"] and rep["checks"][0]["check"] == "same-w"


def test_verify_failure_exit_code(cli, monkeypatch):
    from flagstrata import cli as cli_mod
    monkeypatch.setitem(cli_mod._CHECKS, "same-w", (lambda cfg, W, I: (False, "planted"), True))
    code, out, err = cli("verify", "same-w", "--family", "A", "--rank", "1", "--I", "")
    assert code == 4 and "FAIL" in out and err.startswith("error[verification]")


@pytest.mark.parametrize("argv,code,kind", [
    (("roots", "--family", "D", "--rank", "3"), 2, "invalid-input"),
    (("strata", "count", "--family", "A", "--rank", "2", "--I", "5"), 2, "invalid-input"),
    (("bruhat", "leq", "--family", "A", "--rank", "2", "--v", "x", "--w", "1"), 2, "invalid-input"),
    (("weyl", "count", "--family", "E", "--rank", "8"), 3, "size-cap"),
    (("weyl", "count", "--family", "A", "--rank", "4", "--max-group-order", "100"), 3, "size-cap"),
    (("strata", "count", "--family", "A", "--rank", "3", "--I", "", "--max-strata", "5"), 3, "size-cap"),
    (("strata", "count", "--family", "A", "--rank", "2", "--max-strata", "0"), 2, "invalid-input"),
    (("nonsense",), 2, "invalid-input"),
])
def test_errors_single_line(cli, argv, code, kind):
    got, out, err = cli(*argv)
    assert got == code
    assert out == ""
    assert len(err.splitlines()) == 1 and err.startswith(f"error[{kind}]")


def test_output_file(cli, tmp_path):
    target = tmp_path / "out.json"
    code, out, _ = cli("strata", "hasse", "--family", "A", "--rank", "2", "--I", "2",
                       "--format", "json", "--output", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["count"] == 7


def test_module_entry_point(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "flagstrata", "strata", "count", "--family", "A", "--rank", "2", "--I", "2"],
        capture_output=True, text=True, env={"STRATA_CACHE_DIR": str(tmp_path), "PATH": ""},
    )
    assert proc.returncode == 0 and proc.stdout == "7\n"
