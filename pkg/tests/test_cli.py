import json

import numpy as np
import pytest

from hilbertgeo.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run_cli(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


def test_cr(capsys):
    data = run_json(capsys, "cr", "0", "1", "2", "3")
    assert data["cr"] == pytest.approx(4.0)


def test_dist(capsys):
    data = run_json(capsys, "dist", "--domain", '{"type":"quadrant"}',
                    "--from", "1,1", "--to", "%.17g,%.17g" % (np.e, np.e))
    assert data["distance"] == pytest.approx(1.0, rel=1e-12)
    assert data["normalization"] == "full"


def test_density(capsys):
    data = run_json(capsys, "density", "--domain", '{"type":"quadrant"}',
                    "--point", "2,3", "--samples", "256")
    assert data["density"] == pytest.approx(1 / 6, rel=1e-3)


def test_area_rect(capsys):
    region = json.dumps({"type": "rect", "x": [1.0, np.e], "y": [1.0, np.e]})
    data = run_json(capsys, "area", "--domain", '{"type":"quadrant"}',
                    "--region", region, "--tol", "1e-7")
    assert data["area"] == pytest.approx(1.0, abs=1e-6)


def test_area_monte_carlo(capsys):
    region = json.dumps({"type": "triangle",
                         "vertices": [[0.1, 0.1], [0.4, 0.1], [0.1, 0.4]]})
    data = run_json(capsys, "area", "--domain", '{"type":"ellipse",'
                    '"center":[0,0],"shape":[[1,0],[0,1]]}',
                    "--region", region, "--mc", "20000", "--seed", "3")
    quad = run_json(capsys, "area", "--domain", '{"type":"ellipse",'
                    '"center":[0,0],"shape":[[1,0],[0,1]]}',
                    "--region", region, "--tol", "1e-8")
    assert abs(data["area"] - quad["area"]) < 4 * data["error_estimate"]


def test_hex_subcommands(capsys):
    assert run_json(capsys, "hex", "norm", "1,0")["norm"] == pytest.approx(1.0)
    d = run_json(capsys, "hex", "dist", "--", "0,0", "-0.5,%.17g" % (np.sqrt(3) / 2))
    assert d["distance"] == pytest.approx(1.0, rel=1e-12)
    c = run_json(capsys, "hex", "circle", "2.0")
    assert c["circumference"] == pytest.approx(12.0, abs=1e-9)
    assert c["p_area"] == pytest.approx(12.0, abs=1e-9)


def test_shape(capsys):
    verts = json.dumps([[0.0, 1.0], [1.0, 0.0], [1.0, 3.0, 0.0]])
    data = run_json(capsys, "shape", "--domain", '{"type":"quadrant"}',
                    "--vertices", verts)
    assert data["t_raw"] == pytest.approx(3.0, rel=1e-10)
    assert data["t"] == pytest.approx(3.0, rel=1e-10)
    assert data["tau"] == pytest.approx(np.log(3.0), rel=1e-10)


def test_triangle_area(capsys):
    data = run_json(capsys, "triangle-area", "--t", "1", "--norm", "announced")
    assert data["area"] == pytest.approx(np.pi**2 / 8, rel=1e-12)
    num = run_json(capsys, "triangle-area", "--t", "2", "--numeric",
                   "--tol", "1e-8")
    assert num["area"] == pytest.approx((np.pi**2 + np.log(2.0) ** 2) / 2,
                                        abs=1e-6)


def test_surface_bound(capsys):
    data = run_json(capsys, "surface-bound", "--genus", "2", "--tau", "0,0,0,0")
    assert data["alpha"] == pytest.approx(np.pi**2 / 2, rel=1e-12)
    assert data["coarse"] == pytest.approx(np.pi**2 / 2, rel=1e-12)
    assert data["triangle_count"] == 4


def test_surface_bound_tau_file(capsys, tmp_path):
    path = tmp_path / "tau.json"
    path.write_text("[1.0, 0.0, 0.0, 0.0]")
    data = run_json(capsys, "surface-bound", "--genus", "2", "--tau",
                    "@" + str(path))
    assert data["alpha"] == pytest.approx(np.pi**2 / 2 + 1.0 / 8.0, rel=1e-12)


def test_orbifold_bound(capsys):
    # negative values need the = form (argparse would read a bare
    # "-1/42" token as an option)
    data = run_json(capsys, "orbifold-bound", "--chi-orb=-1/42")
    assert data["bound"] == pytest.approx(np.pi**2 / 168, rel=1e-12)


def test_plot_foliation_deterministic(capsys, tmp_path):
    out1 = tmp_path / "a.svg"
    out2 = tmp_path / "b.svg"
    assert run_cli(capsys, "plot-foliation", "--t", "100", "--out", str(out1))[0] == 0
    assert run_cli(capsys, "plot-foliation", "--t", "100", "--out", str(out2))[0] == 0
    b1, b2 = out1.read_bytes(), out2.read_bytes()
    assert b1 == b2
    assert b1.startswith(b"<?xml")
    assert b1.count(b"<line") > 10


def test_plot_foliation_bad_path(capsys, tmp_path):
    code, _, err = run_cli(capsys, "plot-foliation", "--t", "1", "--out",
                           str(tmp_path / "missing" / "x.svg"))
    assert code == 4


def test_usage_error_exit_2(capsys):
    assert run_cli(capsys, "no-such-command")[0] == 2
    assert run_cli(capsys, "triangle-area")[0] == 2  # missing --t
    assert run_cli(capsys, "triangle-area", "--t", "-3")[0] == 2


def test_geometry_error_exit_4(capsys):
    code, _, err = run_cli(capsys, "dist", "--domain", '{"type":"quadrant"}',
                           "--from=-1,1", "--to", "1,1")
    assert code == 4


def test_degenerate_cr_exit_4(capsys):
    assert run_cli(capsys, "cr", "1", "1", "2", "2")[0] == 4


def test_csv_format(capsys):
    code, out, _ = run_cli(capsys, "--format", "csv", "triangle-area",
                           "--t", "1", "--norm", "announced")
    assert code == 0
    header, row = out.strip().splitlines()
    assert header.split(",")[0] == "area"
    assert float(row.split(",")[0]) == pytest.approx(np.pi**2 / 8, rel=1e-12)


def test_json_17_digits_round_trip(capsys):
    data = run_json(capsys, "triangle-area", "--t", "3", "--norm", "full")
    assert data["area"] == (np.pi**2 + np.log(3.0) ** 2) / 2


def test_verify_subcommand_smoke(capsys, monkeypatch):
    # run the real dispatcher against a stubbed catalog to keep this fast;
    # the full catalog runs in test_acceptance.py
    import hilbertgeo.verify as v

    monkeypatch.setattr(v, "ALL_CHECKS", [v.check_hex_circle,
                                          v.check_surface_bounds])
    code, out, _ = run_cli(capsys, "verify")
    assert code == 0
    assert out.count("PASS") == 2
