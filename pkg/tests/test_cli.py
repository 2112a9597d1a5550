import json
import math
import os

import pytest

from zetadiv.cli import main
from zetadiv.zeta import zeta_em


def run(capsys, *argv):
    rc = main(list(argv))
    out = capsys.readouterr()
    return rc, out.out, out.err


def test_exppair_report_golden(capsys):
    rc, out, _ = run(capsys, "exppair-report", "--kappa", "11/30", "--lambda", "16/30")
    assert rc == 0
    assert "theta_div = 27/82" in out
    assert "beats_one_third = True" in out


def test_exppair_report_hypothetical_gate(capsys):
    rc, _, err = run(capsys, "exppair-report", "--kappa", "0", "--lambda", "1/2")
    assert rc == 2
    assert "--hypothetical" in err
    rc, out, _ = run(capsys, "exppair-report", "--kappa", "0", "--lambda", "1/2",
                     "--hypothetical")
    assert rc == 0
    assert "theta_div = 1/4" in out


def test_delta_scan_empty_range_usage_error(capsys, tmp_path):
    rc, _, err = run(capsys, "--cache-dir", str(tmp_path), "delta-scan", "--max", "0")
    assert rc == 2
    assert "max" in err


def test_delta_scan_deterministic_with_manifest(capsys, tmp_path):
    cache = str(tmp_path / "cache")
    out1 = str(tmp_path / "a.csv")
    out2 = str(tmp_path / "b.csv")
    rc, _, _ = run(capsys, "--cache-dir", cache, "delta-scan", "--max", "2000",
                   "--count", "50", "--log-spaced", "--out", out1)
    assert rc == 0
    rc, _, _ = run(capsys, "--cache-dir", cache, "delta-scan", "--max", "2000",
                   "--count", "50", "--log-spaced", "--out", out2)
    assert rc == 0
    with open(out1, "rb") as f1, open(out2, "rb") as f2:
        assert f1.read() == f2.read()
    mani = json.load(open(out1 + ".manifest.json"))
    assert mani["command"] == "delta-scan"
    assert mani["config"]["max"] == 2000.0
    import hashlib
    assert mani["outputs"][out1] == hashlib.sha256(open(out1, "rb").read()).hexdigest()
    assert "version" in mani and "wall_time_s" in mani


def test_zeta_eval_matches_oracle(capsys):
    rc, out, _ = run(capsys, "zeta-eval", "--t", "100")
    assert rc == 0
    printed = float(out.split("|zeta(1/2+it)|=")[1].split()[0])
    oracle = abs(zeta_em(0.5 + 100j, terms=400, correction_order=20))
    assert abs(printed - oracle) <= 1e-6 * oracle


def test_zeta_eval_small_t_routes_to_em(capsys):
    rc, out, _ = run(capsys, "zeta-eval", "--t", "2")
    assert rc == 0
    assert "Euler-Maclaurin route" in out


def test_cache_build_hit_and_corruption(capsys, tmp_path):
    cache = str(tmp_path)
    rc, out, _ = run(capsys, "--cache-dir", cache, "cache-table", "--limit", "5000")
    assert rc == 0 and "built" in out
    rc, out, _ = run(capsys, "--cache-dir", cache, "cache-table", "--limit", "5000")
    assert rc == 0 and "hit" in out
    # smaller request still hits (cache is sliced)
    rc, out, _ = run(capsys, "--cache-dir", cache, "cache-table", "--limit", "100")
    assert rc == 0 and "hit" in out
    # bigger request forces a rebuild
    rc, out, err = run(capsys, "--cache-dir", cache, "cache-table", "--limit", "6000")
    assert rc == 0 and "rebuilt" in out and "rebuilding" in err
    # corrupt one byte: checksum rejects, rebuild happens
    path = os.path.join(cache, "divisor_table.bin")
    raw = bytearray(open(path, "rb").read())
    raw[100] ^= 0x01
    open(path, "wb").write(bytes(raw))
    rc, out, err = run(capsys, "--cache-dir", cache, "cache-table", "--limit", "6000")
    assert rc == 0 and "rebuilt" in out and "checksum" in err


def test_cache_dir_env_var(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("ZETADIV_CACHE_DIR", str(tmp_path / "envcache"))
    rc, out, _ = run(capsys, "cache-table", "--limit", "300")
    assert rc == 0 and "built" in out
    assert os.path.exists(tmp_path / "envcache" / "divisor_table.bin")


def test_balasu_resource_cap(capsys):
    rc, _, err = run(capsys, "balasu", "--T", "1e12")
    assert rc == 3
    assert "cap" in err


def test_e_scan_precision_exit(capsys, tmp_path):
    rc, _, err = run(capsys, "e-scan", "--tmax", "5", "--tol", "0")
    assert rc == 4
    assert "precision" in err.lower() or "tol" in err


@pytest.mark.filterwarnings("ignore::zetadiv.errors.PrecisionWarning")
def test_estar_scan_csv_contract(capsys, tmp_path):
    cache = str(tmp_path / "cache")
    out = str(tmp_path / "scan.csv")
    rc, _, _ = run(capsys, "--cache-dir", cache, "estar-scan", "--tmax", "50",
                   "--step", "0.25", "--out", out)
    assert rc == 0
    lines = open(out).read().splitlines()
    assert lines[0] == "t,E,delta_star,E_star"
    assert len(lines) == 202  # 201 samples + header
    row = lines[10].split(",")
    assert math.isclose(float(row[3]), float(row[1]) - float(row[2]), rel_tol=0, abs_tol=0)
    assert os.path.exists(out + ".summary.json")
    assert os.path.exists(out + ".manifest.json")


def test_moments_cli(capsys, tmp_path):
    cache = str(tmp_path / "cache")
    rc, out, _ = run(capsys, "--cache-dir", cache, "moments", "--tmax", "300",
                     "--k", "2")
    assert rc == 0
    assert out.splitlines()[0] == "T,integral,normalizer,ratio"


def test_voronoi_cli(capsys, tmp_path):
    cache = str(tmp_path / "cache")
    rc, out, _ = run(capsys, "--cache-dir", cache, "voronoi", "--x", "500",
                     "--n", "100", "--compare")
    assert rc == 0
    assert "residual=" in out
    rc, out, _ = run(capsys, "--cache-dir", cache, "voronoi", "--x", "500",
                     "--n", "100", "--star")
    assert rc == 0


def test_atkinson_and_short_interval_cli(capsys, tmp_path):
    cache = str(tmp_path / "cache")
    rc, out, _ = run(capsys, "--cache-dir", cache, "atkinson", "--T", "400")
    assert rc == 0 and "sigma1=" in out
    rc, out, _ = run(capsys, "short-interval", "--T", "1000", "--G", "10")
    assert rc == 0 and "value/(G*logT)=" in out


def test_exppair_search_cli(capsys, tmp_path):
    out = str(tmp_path / "front.csv")
    rc, text, _ = run(capsys, "exppair-search", "--depth", "6", "--out", out)
    assert rc == 0
    assert "best theta_div" in text
    lines = open(out).read().splitlines()
    assert lines[0] == "kappa,lambda,word,theta_div,theta_zeta"
    assert os.path.exists(out + ".manifest.json")
