import importlib
import json
import re

import jsonschema
import mpmath as mp
import pytest

from hilbgen.asym import bernoulli
from hilbgen.asym.taylor import clear_caches
from hilbgen.cli import load_schema, main, parse_range
from hilbgen.cli.config import RunConfig

bernoulli_mod = importlib.import_module("hilbgen.asym.bernoulli")


def run_cli(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run_cli(capsys, *argv, "--format", "json")
    assert code == 0, err
    doc = json.loads(out)
    jsonschema.validate(doc, load_schema())
    return doc


def rows_by_key(doc):
    return {(int(r["n"]), int(r["m"])): r for r in doc["rows"]}


# --- exact -----------------------------------------------------------------------

def test_exact_values(capsys):
    rows = rows_by_key(run_json(capsys, "exact", "--n", "0..3", "--m", "-5..5"))
    assert rows[(0, 0)]["exact_value"] == "1"
    assert rows[(1, 0)]["exact_value"] == "20"
    assert rows[(1, 1)]["exact_value"] == rows[(1, -1)]["exact_value"] == "2"
    assert all(r["exact_value"] == "0" for (n, m), r in rows.items() if abs(m) > n)
    assert all(r["sum_rule"] == "ok" for r in rows.values())


def test_exact_csv_integers_plain(capsys):
    code, out, _ = run_cli(capsys, "exact", "--n", "200", "--m", "0")
    assert code == 0
    header, line = out.strip().splitlines()
    value = dict(zip(header.split(","), line.split(",")))["exact_value"]
    assert re.fullmatch(r"\d+", value) and len(value) > 30


def test_negative_range_argument(capsys):
    rows = rows_by_key(run_json(capsys, "exact", "--n", "2", "--m", "-3..3"))
    assert sorted(m for _, m in rows) == list(range(-3, 4))


def test_output_file(capsys, tmp_path):
    path = tmp_path / "out.csv"
    code, out, _ = run_cli(capsys, "exact", "--n", "1", "--out", str(path))
    assert code == 0 and out == ""
    assert path.read_text().startswith("n,m,exact_value")


def test_deterministic_output(capsys):
    first = run_cli(capsys, "asym", "--n", "30", "--m", "0..2")[1]
    second = run_cli(capsys, "asym", "--n", "30", "--m", "0..2")[1]
    assert first == second


# --- asym ------------------------------------------------------------------------

def test_asym_even_in_m(capsys):
    rows = rows_by_key(run_json(capsys, "asym", "--n", "40..41", "--m", "-2..2"))
    for n in (40, 41):
        for m in (1, 2):
            assert rows[(n, m)]["ratio"] == rows[(n, -m)]["ratio"]
            assert rows[(n, m)]["pair_ratio"] == rows[(n, -m)]["pair_ratio"]
        assert rows[(n, 0)]["pair_ref"] is None


def test_asym_single_m_has_no_pair(capsys):
    rows = run_json(capsys, "asym", "--n", "20", "--m", "3")["rows"]
    assert rows[0]["pair_ref"] is None and rows[0]["pair_ratio"] is None


def test_asym_ratio_trend(capsys):
    devs = []
    for n in (50, 100, 200, 400):
        row = run_json(capsys, "asym", "--n", str(n), "--m", "0")["rows"][0]
        devs.append(abs(mp.mpf(row["ratio"]) - 1))
        assert abs(mp.mpf(row["relative_error"]) - (mp.mpf(row["ratio"]) - 1)) < 1e-15
    assert all(d2 < d1 for d1, d2 in zip(devs, devs[1:]))


def test_asym_rejects_n_zero(capsys):
    assert run_cli(capsys, "asym", "--n", "0..3")[0] == 2


# --- profile ---------------------------------------------------------------------

def test_profile_rows(capsys):
    doc = run_json(capsys, "profile", "--n", "200")
    rows = rows_by_key(doc)
    centre = rows[(200, 0)]
    assert abs(mp.mpf(centre["profile_value"]) - mp.mpf(centre["beta_k"]) / 6) < 1e-15
    assert centre["in_window"] == "true"
    for m in (1,):
        assert rows[(200, m)]["deviation"] == rows[(200, -m)]["deviation"]
    ratio = mp.mpf(centre["ratio"])
    assert abs(ratio * mp.mpf(centre["exact_ratio"]) / mp.mpf(centre["profile_value"]) - 1) < 1e-12


def test_profile_summary_shrinks(capsys):
    worst = []
    for n in (200, 800):
        doc = run_json(capsys, "profile", "--n", str(n))
        worst.append(mp.mpf(doc["summary"][0]["max_window_deviation"]))
    assert worst[1] < worst[0]


def test_profile_csv_summary_lines(capsys):
    code, out, _ = run_cli(capsys, "profile", "--n", "60..61")
    assert code == 0
    summary = [line for line in out.splitlines() if line.startswith("# ")]
    assert [line.split()[1] for line in summary] == ["n=60", "n=61"]


# --- oracle ----------------------------------------------------------------------

def test_oracle_small_values(capsys):
    rows = rows_by_key(run_json(capsys, "oracle", "--n", "0..1", "--m", "-1..1", "--samples", "32"))
    assert float(rows[(0, 0)]["abs_diff"]) < 1e-3
    assert float(rows[(1, 1)]["abs_diff"]) < 1e-3
    assert rows[(0, 0)]["samples"] == "64"


def test_oracle_n5_m1(capsys):
    row = run_json(capsys, "oracle", "--n", "5", "--m", "1", "--samples", "64")["rows"][0]
    assert float(row["rel_diff"]) < 1e-3


def test_oracle_doubling_halves_error(capsys):
    diffs = []
    for s in (4, 8, 16):  # the command evaluates at 2S
        row = run_json(capsys, "oracle", "--n", "5", "--m", "1", "--samples", str(s))["rows"][0]
        diffs.append(float(row["abs_diff"]))
    assert all(d2 <= d1 / 2 for d1, d2 in zip(diffs, diffs[1:]))


def test_oracle_budget(capsys):
    code, _, err = run_cli(capsys, "oracle", "--n", "41")
    assert code == 3 and "budget" in err
    assert run_cli(capsys, "exact", "--n", "1001")[0] == 3


# --- verify ----------------------------------------------------------------------

def test_verify_passes(capsys):
    doc = run_json(capsys, "verify")
    assert doc["passed"] is True
    assert len(doc["checks"]) == 9


def test_verify_skip(capsys):
    doc = run_json(capsys, "verify", "--skip", "oracle")
    assert "oracle equivalence" not in {c["name"] for c in doc["checks"]}
    assert doc["passed"] is True


def test_verify_detects_corrupted_bernoulli(capsys, monkeypatch):
    bernoulli(8)
    corrupted = list(bernoulli_mod._TABLE)
    corrupted[4] *= 2
    monkeypatch.setattr(bernoulli_mod, "_TABLE", corrupted)
    clear_caches()
    try:
        code, out, err = run_cli(capsys, "verify", "--skip", "oracle")
    finally:
        monkeypatch.undo()
        clear_caches()
    assert code == 1
    assert "d_coeff closed form" in err
    assert re.search(r"d_coeff closed form,false", out)


# --- configuration -----------------------------------------------------------------

@pytest.mark.parametrize("argv", [
    ("bogus",),
    ("exact", "--n", "5..2"),
    ("exact", "--n", "x"),
    ("exact", "--k", "0"),
    ("asym", "--terms", "0", "--n", "5"),
    ("oracle", "--n", "3", "--samples", "100"),
    ("verify", "--skip", "nonsense"),
    ("exact", "--precision", "10"),
])
def test_config_errors(capsys, argv):
    assert run_cli(capsys, *argv)[0] == 2


def test_precision_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("HILBGEN_PRECISION", "128")
    assert run_json(capsys, "exact", "--n", "1")["precision_bits"] == 128
    monkeypatch.setenv("HILBGEN_PRECISION", "lots")
    assert run_cli(capsys, "exact", "--n", "1")[0] == 2


def test_parse_range():
    assert parse_range("7") == (7, 7)
    assert parse_range("-3..3") == (-3, 3)
    assert RunConfig("exact", n_range=(2, 4)).n_values == range(2, 5)
