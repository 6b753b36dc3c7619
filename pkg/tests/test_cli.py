"""End-to-end command-line behavior: exit codes, round trips, determinism."""

import json

import pytest

from fatpoints.cli import main
from fatpoints.serialize import points_from_json_dict, points_to_json_dict
from fatpoints.configs import general, type9
from fatpoints.svgplot import render_svg


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_generate_round_trip(tmp_path, capsys):
    out = tmp_path / "pts.json"
    code, _, _ = run(capsys, "generate", "--family", "general", "--r", "5",
                     "--seed", "3", "--out", str(out))
    assert code == 0
    data = json.loads(out.read_text())
    assert data["schema"] == "fatpoints/1"
    assert points_from_json_dict(data) == general(5, seed=3)


def test_alphaseq_conic(capsys):
    code, out, _ = run(capsys, "alphaseq", "--family", "on_conic", "--r", "6",
                       "--kmax", "5")
    assert code == 0
    assert json.loads(out)["alphas"] == [2, 4, 6, 8, 10]


def test_alphaseq_csv_export(tmp_path, capsys):
    out = tmp_path / "table.csv"
    code, _, _ = run(capsys, "alphaseq", "--family", "on_conic", "--r", "6",
                     "--kmax", "3", "--out", str(out))
    assert code == 0
    assert out.read_text().splitlines() == ["k,alpha,diff", "1,2,", "2,4,2", "3,6,2"]


def test_alpha_three_general_double_points(tmp_path, capsys):
    pts = tmp_path / "pts.json"
    run(capsys, "generate", "--family", "general", "--r", "3", "--seed", "11",
        "--height", "12", "--out", str(pts))
    code, out, _ = run(capsys, "alpha", "--points", str(pts), "--mults", "2,2,2")
    assert code == 0
    assert json.loads(out)["value"] == 3


def test_alpha_modular_strategy_warns_exit_2(capsys):
    code, out, _ = run(capsys, "alpha", "--family", "on_conic", "--r", "6",
                       "--mults", "2", "--strategy", "prime")
    assert code == 2
    assert json.loads(out)["warnings"]


def test_dim_command(capsys):
    code, out, _ = run(capsys, "dim", "--family", "general", "--r", "6",
                       "--seed", "42", "--d", "4", "--mults", "2")
    assert code == 0
    data = json.loads(out)
    assert data["actual_dim"] == 0 and data["expected_dim"] == -3


def test_kernel_command(capsys):
    code, out, _ = run(capsys, "kernel", "--family", "on_conic", "--r", "5",
                       "--d", "2")
    assert code == 0
    data = json.loads(out)
    assert data["dimension"] == 1
    assert data["basis"][0]["degree"] == 2


def test_check_exception_status(capsys):
    code, out, _ = run(capsys, "check", "--family", "type9", "--theorem",
                       "uniform-step-two", "--k", "4")
    assert code == 0
    assert json.loads(out)["status"] == "CONSISTENT_EXCEPTION"


def test_repro_single_row(capsys):
    code, out, _ = run(capsys, "repro", "--id", "ex-type9")
    assert code == 0
    assert "PASS" in out and "FAIL" not in out


def test_repro_unknown_id(capsys):
    code, _, err = run(capsys, "repro", "--id", "ex-nonsense")
    assert code == 1 and "unknown example id" in err


def test_repro_literature_dual_hesse_row_fails(capsys):
    code, out, _ = run(capsys, "repro", "--id", "ex-dualhesse-p31")
    assert code == 1
    assert "FAIL" in out and "alpha(3Z)" in out


def test_search_usage_error(capsys):
    code, _, err = run(capsys, "search", "--trials", "0")
    assert code == 1 and "error" in err


def test_search_artifact_reproducible(tmp_path, capsys):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    for path in (a, b):
        code, _, _ = run(capsys, "search", "--trials", "4", "--seed", "9",
                         "--out", str(path))
        assert code == 0
    assert a.read_bytes() == b.read_bytes()


def test_missing_input_is_an_error(capsys):
    code, _, err = run(capsys, "alpha")
    assert code == 1 and "required" in err


def test_points_and_family_conflict(tmp_path, capsys):
    pts = tmp_path / "p.json"
    run(capsys, "generate", "--family", "collinear", "--r", "3", "--out", str(pts))
    code, _, err = run(capsys, "alpha", "--points", str(pts), "--family", "collinear",
                       "--r", "3")
    assert code == 1 and "not both" in err


def test_plot_deterministic_bytes(tmp_path, capsys):
    a = tmp_path / "a.svg"
    b = tmp_path / "b.svg"
    for path in (a, b):
        code, _, _ = run(capsys, "plot", "--family", "type9", "--out", str(path))
        assert code == 0
    blob = a.read_bytes()
    assert blob == b.read_bytes()
    text = blob.decode()
    assert text.count("<circle") == 6
    assert text.count("<line") == 3


def test_plot_star_draws_lines(tmp_path, capsys):
    out = tmp_path / "s.svg"
    code, _, _ = run(capsys, "plot", "--family", "star", "--p", "4", "--seed", "1",
                     "--out", str(out))
    assert code == 0
    assert out.read_text().count("<line") == 4


def test_render_svg_empty_canvas():
    svg = render_svg(())
    assert svg.startswith("<svg") and svg.rstrip().endswith("</svg>")
    assert "<circle" not in svg


def test_render_svg_point_at_infinity():
    from fatpoints.algebra import QQ, point

    svg = render_svg((point(QQ, 1, 2, 0), point(QQ, 0, 0, 1)))
    assert "(inf)" in svg


def test_field_reduction_flag(capsys):
    # the conic example runs natively mod 31 with the same alpha table
    code, out, _ = run(capsys, "alphaseq", "--family", "on_conic", "--r", "6",
                       "--kmax", "4", "--field", "prime:31")
    assert code in (0, 2)
    data = json.loads(out)
    assert data["alphas"] == [2, 4, 6, 8]
    assert all(e["certification"] == "SINGLE_PRIME" for e in data["entries"])


def test_field_reduction_rejected_from_prime_field(capsys):
    code, _, err = run(capsys, "alpha", "--family", "dual_hesse", "--prime", "31",
                       "--field", "rational")
    assert code == 1 and "stay in their field" in err


def test_search_over_prime_field(capsys):
    code, out, _ = run(capsys, "search", "--trials", "5", "--seed", "3",
                       "--field", "prime:101")
    assert code == 0
    data = json.loads(out)
    assert data["inconsistent"] == []


def test_cache_coherence(tmp_path, capsys):
    cache = tmp_path / "cache"
    args = ("alphaseq", "--family", "on_conic", "--r", "5", "--kmax", "3")
    _, cold, _ = run(capsys, *args, "--cache", str(cache))
    assert list(cache.glob("*.json"))
    _, warm, _ = run(capsys, *args, "--cache", str(cache))
    _, plain, _ = run(capsys, *args)
    assert cold == warm == plain
    # verify mode recomputes and compares against the stored entries
    code, verified, _ = run(capsys, *args, "--cache", str(cache), "--verify-cache")
    assert code == 0 and verified == cold


def test_cache_env_var(tmp_path, capsys, monkeypatch):
    cache = tmp_path / "envcache"
    monkeypatch.setenv("FATPOINTS_CACHE", str(cache))
    code, out, _ = run(capsys, "dim", "--family", "collinear", "--r", "4", "--d", "3")
    assert code == 0
    assert list(cache.glob("*.json"))


def test_cache_verify_detects_corruption(tmp_path, capsys):
    cache = tmp_path / "cache"
    args = ("dim", "--family", "collinear", "--r", "3", "--d", "2")
    run(capsys, *args, "--cache", str(cache))
    victim = next(cache.glob("*.json"))
    data = json.loads(victim.read_text())
    data["actual_dim"] += 1
    victim.write_text(json.dumps(data, sort_keys=True, separators=(",", ":")) + "\n")
    code, _, err = run(capsys, *args, "--cache", str(cache), "--verify-cache")
    assert code == 1 and "disagrees" in err
