import json
import math

import pytest

from screwgeo.cli import main
from screwgeo.geodesic import TRAJECTORY_COLUMNS

FLAT_CLSPEC = [{"ell": 2 * math.pi, "theta": 0.0},
               {"ell": 2 * math.pi, "theta": math.pi}]


@pytest.fixture
def clspec_file(tmp_path):
    path = tmp_path / "cl.json"
    path.write_text(json.dumps(FLAT_CLSPEC))
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# model-spectrum

def test_model_spectrum_writes_csv_with_metadata(capsys):
    code, out, _ = run(capsys, "model-spectrum", "-k", "0", "--lambda", "1.0",
                       "--cutoff", "20")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0].startswith("# ")
    header = next(l for l in lines if not l.startswith("#"))
    assert header.split(",")[0] == "length"
    rows = [l for l in lines if not l.startswith("#")][1:]
    assert len(rows) == 5
    assert all(r.split(",")[1] == "circle" for r in rows)


def test_model_spectrum_negative_curvature_flag_parses(capsys):
    code, out, _ = run(capsys, "model-spectrum", "-k", "-1", "--lambda", "0.5",
                       "--cutoff", "12")
    assert code == 0
    assert "circle" in out


def test_model_spectrum_resonant_pitch_is_a_usage_error(capsys):
    code, _, err = run(capsys, "model-spectrum", "-k", "1", "--lambda", "-1.0",
                       "--cutoff", "9")
    assert code == 2
    assert err.strip()


# ---------------------------------------------------------------------------
# spectrum

def test_spectrum_output_is_byte_deterministic(capsys, clspec_file):
    outs = []
    for _ in range(2):
        code, out, _ = run(capsys, "spectrum", "-k", "0", "--lambda", "1.0",
                           "--cutoff", "12", clspec_file)
        assert code == 0
        outs.append(out)
    assert outs[0] == outs[1]


def test_spectrum_ignores_input_row_order(capsys, tmp_path, clspec_file):
    permuted = tmp_path / "cl_permuted.json"
    permuted.write_text(json.dumps(FLAT_CLSPEC[::-1] + FLAT_CLSPEC[:1]))
    _, out_a, _ = run(capsys, "spectrum", "-k", "0", "--lambda", "1.0",
                      "--cutoff", "12", clspec_file)
    _, out_b, _ = run(capsys, "spectrum", "-k", "0", "--lambda", "1.0",
                      "--cutoff", "12", str(permuted))
    assert out_a == out_b


def test_spectrum_out_flag_writes_file(capsys, tmp_path, clspec_file):
    target = tmp_path / "spec.csv"
    code, out, _ = run(capsys, "spectrum", "-k", "0", "--lambda", "1.0",
                       "--cutoff", "12", "--out", str(target), clspec_file)
    assert code == 0
    assert out == ""
    assert target.read_text().startswith("# ")


def test_spectrum_json_format(capsys, clspec_file):
    code, out, _ = run(capsys, "spectrum", "-k", "0", "--lambda", "1.0",
                       "--cutoff", "12", "--format", "json", clspec_file)
    assert code == 0
    payload = json.loads(out)
    assert payload["metadata"]["k"] == 0
    assert payload["entries"]
    assert {e["source"] for e in payload["entries"]} <= {
        "circle", "geodesic_fiber", "helix_type"}


def test_spectrum_spherical_is_out_of_scope(capsys, clspec_file):
    code, out, err = run(capsys, "spectrum", "-k", "1", "--lambda", "0.0",
                         "--cutoff", "12", clspec_file)
    assert code == 2
    assert out == ""
    assert "k = 1" in err


def test_spectrum_rejects_malformed_input(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps([{"ell": 2.0, "theta": 7.0}]))  # theta >= 2*pi
    code, _, err = run(capsys, "spectrum", "-k", "0", "--lambda", "1.0",
                       "--cutoff", "12", str(bad))
    assert code == 2
    assert err.strip()


def test_spectrum_missing_file_is_a_usage_error(capsys, tmp_path):
    code, _, err = run(capsys, "spectrum", "-k", "0", "--lambda", "1.0",
                       "--cutoff", "12", str(tmp_path / "nope.json"))
    assert code == 2
    assert err.strip()


# ---------------------------------------------------------------------------
# geodesic

def test_geodesic_geometric_form_csv(capsys):
    code, out, _ = run(capsys, "geodesic", "-k", "0", "--lambda", "1.0",
                       "--kappa", "1.0", "--tau", "0.5",
                       "--t0", "0", "--tmax", "1", "--dt", "0.5")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == ",".join(TRAJECTORY_COLUMNS)
    assert len(lines) == 1 + 3
    assert len(lines[1].split(",")) == 14


def test_geodesic_lie_form_with_verify(capsys):
    code, out, err = run(capsys, "geodesic", "-k", "-1", "--lambda", "0.5",
                         "--lie", "--x", "1,0,0", "--y", "0.3,0,0.9",
                         "--tmax", "5", "--dt", "0.5", "--verify")
    assert code == 0
    assert "horizontality" in err and "pass" in err
    assert out.startswith("t,")


def test_geodesic_form_flags_are_exclusive(capsys):
    code, _, err = run(capsys, "geodesic", "-k", "0", "--lambda", "1.0",
                       "--kappa", "1.0", "--tau", "0.0",
                       "--lie", "--x", "1,0,0", "--y", "0,0,0")
    assert code == 2
    assert err.strip()


def test_geodesic_requires_one_form(capsys):
    code, _, err = run(capsys, "geodesic", "-k", "0", "--lambda", "1.0")
    assert code == 2
    assert err.strip()


def test_geodesic_rejects_bad_step(capsys):
    code, _, err = run(capsys, "geodesic", "-k", "0", "--lambda", "1.0",
                       "--kappa", "1.0", "--tau", "0.0", "--dt", "0")
    assert code == 2
    assert err.strip()


def test_geodesic_json_output(capsys, tmp_path):
    target = tmp_path / "traj.json"
    code, _, _ = run(capsys, "geodesic", "-k", "1", "--lambda", "0.0",
                     "--kappa", "0.5", "--tau", "0.2", "--tmax", "1",
                     "--dt", "0.5", "--format", "json", "--out", str(target))
    assert code == 0
    payload = json.loads(target.read_text())
    assert len(payload["samples"]) == 3
    assert len(payload["samples"][0]["matrix"]) == 16


# ---------------------------------------------------------------------------
# verify

def test_verify_all_suites_pass(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "all")
    assert code == 0
    assert "all suites passed" in out
    assert "FAIL" not in out


def test_verify_single_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "equivalence")
    assert code == 0
    assert "equivalence" in out


def test_verify_tolerance_override_can_force_failure(capsys, monkeypatch):
    monkeypatch.setenv("SCREWGEO_VERIFY_TOL", "1e-30")
    code, out, _ = run(capsys, "verify", "--suite", "equivalence")
    assert code == 1
    assert "FAIL" in out


# ---------------------------------------------------------------------------
# compare

def write_spectrum(capsys, tmp_path, name, lam, fmt="csv"):
    clspec = tmp_path / f"{name}_cl.json"
    clspec.write_text(json.dumps(FLAT_CLSPEC))
    target = tmp_path / f"{name}.{fmt}"
    code, _, _ = run(capsys, "spectrum", "-k", "0", "--lambda", str(lam),
                     "--cutoff", "12", "--format", fmt, "--out", str(target),
                     str(clspec))
    assert code == 0
    return str(target)


def test_compare_equal_spectra_exits_zero(capsys, tmp_path):
    a = write_spectrum(capsys, tmp_path, "a", 1.0)
    b = write_spectrum(capsys, tmp_path, "b", 1.0)
    code, out, _ = run(capsys, "compare", a, b)
    assert code == 0
    assert "agree" in out


def test_compare_across_formats(capsys, tmp_path):
    a = write_spectrum(capsys, tmp_path, "a", 1.0, fmt="csv")
    b = write_spectrum(capsys, tmp_path, "b", 1.0, fmt="json")
    code, out, _ = run(capsys, "compare", a, b)
    assert code == 0


def test_compare_different_spectra_exits_one(capsys, tmp_path):
    a = write_spectrum(capsys, tmp_path, "a", 2.0)
    b = write_spectrum(capsys, tmp_path, "b", 3.0)
    code, out, _ = run(capsys, "compare", a, b)
    assert code == 1
    assert "only on side" in out


def test_compare_missing_file_exits_two(capsys, tmp_path):
    a = write_spectrum(capsys, tmp_path, "a", 1.0)
    code, _, err = run(capsys, "compare", a, str(tmp_path / "missing.csv"))
    assert code == 2
    assert err.strip()


def test_compare_malformed_file_exits_two(capsys, tmp_path):
    a = write_spectrum(capsys, tmp_path, "a", 1.0)
    bad = tmp_path / "bad.csv"
    bad.write_text("not,a,spectrum\n1,2,3\n")
    code, _, err = run(capsys, "compare", a, str(bad))
    assert code == 2
    assert err.strip()


# ---------------------------------------------------------------------------
# top level

def test_no_arguments_is_a_usage_error(capsys):
    code, _, err = run(capsys, )
    assert code == 2
    assert err.strip()


def test_unknown_subcommand_is_a_usage_error(capsys):
    code, _, err = run(capsys, "frobnicate")
    assert code == 2
