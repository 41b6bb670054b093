"""Command line behavior: output shapes, determinism, exit codes."""

import json
import math

import pytest

from helixlift import cli
from helixlift.verify import TheoremResult, VerificationReport


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_classify_fixture(capsys):
    code, out, _ = run(capsys, "classify", "--spec", "paper_cubic")
    assert code == 0
    doc = json.loads(out)
    assert doc["general_helix"] is True
    assert doc["circular_helix"] is False
    assert doc["slant_helix"] is True
    assert abs(doc["theta"] - math.pi / 4) < 1e-9
    assert len(doc["axis"]) == 3
    assert doc["stats"]["ratio"]["rel_dev"] < 1e-10


def test_classify_reads_a_spec_file(tmp_path, capsys):
    spec = tmp_path / "helix.json"
    spec.write_text(
        json.dumps(
            {"kind": "circular_helix", "radius": 1.0, "pitch": 1.0,
             "domain": [0.0, 2 * math.pi]}
        )
    )
    code, out, _ = run(capsys, "classify", "--spec", str(spec))
    assert code == 0
    doc = json.loads(out)
    assert doc["circular_helix"] is True


def test_classify_output_is_byte_identical(tmp_path, capsys):
    out1 = tmp_path / "a.json"
    out2 = tmp_path / "b.json"
    assert cli.main(["classify", "--spec", "paper_cubic", "--out", str(out1)]) == 0
    assert cli.main(["classify", "--spec", "paper_cubic", "--out", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()


def test_frenet_values(capsys):
    code, out, _ = run(capsys, "frenet", "--spec", "circular_helix:1,1", "--at", "0")
    assert code == 0
    doc = json.loads(out)
    assert abs(doc["kappa"] - 0.5) < 1e-12
    assert abs(doc["tau"] - 0.5) < 1e-12
    assert abs(doc["speed"] - math.sqrt(2)) < 1e-12


def test_frenet_out_of_domain_is_invalid_input(capsys):
    code, _, err = run(capsys, "frenet", "--spec", "paper_cubic", "--at", "99")
    assert code == 1
    assert "error" in err


def test_unknown_fixture_is_invalid_input(capsys):
    code, _, err = run(capsys, "classify", "--spec", "no_such_curve")
    assert code == 1
    assert "no_such_curve" in err


def test_malformed_spec_file_is_invalid_input(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{oops")
    code, _, _ = run(capsys, "classify", "--spec", str(bad))
    assert code == 1


def test_degenerate_geometry_exit(capsys):
    # a planar circle has no Lancret ratio
    code, _, err = run(capsys, "classify", "--spec", "circle:1")
    assert code == 2
    assert "degenerate" in err


def test_usage_error_exits_one(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["classify"])  # --spec is required
    assert exc.value.code == 1


def test_unknown_subcommand_exits_one(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["polish"])
    assert exc.value.code == 1


def test_lift_auto_theta_reparameterizes(tmp_path, capsys):
    emitted = tmp_path / "lifted.json"
    code, out, err = run(
        capsys, "lift", "--spec", "circular_helix:1,1", "--emit", str(emitted)
    )
    assert code == 0
    assert "reparameterized" in err
    doc = json.loads(out)
    assert abs(doc["theta"] - math.pi / 4) < 1e-9
    assert doc["base_reparameterized"] is True
    emitted_doc = json.loads(emitted.read_text())
    assert emitted_doc["kind"] == "lifted"
    assert emitted_doc["base"]["kind"] == "arclength_reparam"


def test_emitted_lift_spec_loads_back(tmp_path, capsys):
    emitted = tmp_path / "lifted.json"
    assert cli.main(["lift", "--spec", "circular_helix:1,1", "--emit", str(emitted)]) == 0
    capsys.readouterr()
    code, out, _ = run(capsys, "classify", "--spec", str(emitted))
    assert code == 0
    assert json.loads(out)["general_helix"] is True


def test_lift_rejects_bad_theta(capsys):
    code, _, err = run(
        capsys, "lift", "--spec", "circular_helix:1,1", "--theta", "soon"
    )
    assert code == 1
    assert "theta" in err


def test_lift_theta_mismatch_is_degenerate_geometry(capsys):
    code, _, _ = run(
        capsys, "lift", "--spec", "circular_helix:1,1", "--theta", "1.2"
    )
    assert code == 2


def test_sample_plain_csv(tmp_path, capsys):
    csv = tmp_path / "pts.csv"
    code, _, _ = run(
        capsys, "sample", "--spec", "paper_cubic", "--n", "5", "--csv", str(csv)
    )
    assert code == 0
    lines = csv.read_text().splitlines()
    assert lines[0] == "t,x,y,z"
    assert len(lines) == 6
    # 17 significant digit round trip: parsing the text recovers the floats
    t, x, y, z = (float(v) for v in lines[1].split(","))
    assert t == -3.0 and x == -18.0 and y == 27.0 and z == -27.0


def test_sample_frames_csv(capsys):
    code, out, _ = run(
        capsys, "sample", "--spec", "circular_helix:2,1", "--n", "4", "--frames"
    )
    assert code == 0
    lines = out.splitlines()
    header = lines[0].split(",")
    assert header == [
        "t", "x", "y", "z", "Tx", "Ty", "Tz", "Nx", "Ny", "Nz",
        "Bx", "By", "Bz", "kappa", "tau", "degenerate",
    ]
    for row in lines[1:]:
        fields = row.split(",")
        assert len(fields) == 16
        assert fields[-1] == "0"
        assert abs(float(fields[13]) - 0.4) < 1e-12


def test_sample_marks_degenerate_rows(tmp_path, capsys):
    spec = tmp_path / "line.json"
    spec.write_text(
        json.dumps(
            {
                "kind": "polynomial",
                "coeffs": [[0.0, 1.0], [0.0, 2.0], [0.0, -1.0]],
                "domain": [0.0, 1.0],
            }
        )
    )
    code, out, _ = run(capsys, "sample", "--spec", str(spec), "--n", "3", "--frames")
    assert code == 0
    for row in out.splitlines()[1:]:
        fields = row.split(",")
        assert fields[-1] == "1"
        assert fields[4] == ""  # frame columns stay empty


def test_sample_rejects_tiny_n(capsys):
    code, _, _ = run(capsys, "sample", "--spec", "paper_cubic", "--n", "1")
    assert code == 1


def test_verify_paper_passes(tmp_path, capsys):
    report_path = tmp_path / "report.json"
    code, out, _ = run(capsys, "verify-paper", "--out", str(report_path))
    assert code == 0
    assert "theorem1: PASS" in out
    assert "theorem2: PASS" in out
    assert "theorem3: PASS" in out
    assert "errata example.kappa: DISAGREES" in out
    doc = json.loads(report_path.read_text())
    ids = [e["claim_id"] for e in doc["example_checks"]]
    assert "closed_form.lambda_mu" in ids


def test_verify_paper_report_is_deterministic(tmp_path, capsys):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    assert cli.main(["verify-paper", "--out", str(a)]) == 0
    assert cli.main(["verify-paper", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_verify_paper_exit_three_on_theorem_failure(monkeypatch, capsys):
    def broken_suite(tol=None, grid_size=256):
        return VerificationReport(
            theorem1=TheoremResult(passed=False, residual=1.0, value=0.0, note="forced"),
            theorem2=TheoremResult(passed=True, residual=0.0),
            theorem3=TheoremResult(passed=True, residual=0.0),
        )

    monkeypatch.setattr(cli, "run_paper_suite", broken_suite)
    code, out, _ = run(capsys, "verify-paper")
    assert code == 3
    assert "theorem1: FAIL" in out
