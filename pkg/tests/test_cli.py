"""
Tests for the command-line interface.
"""

import json

import pytest

from src.weierstrass_landen.cli import build_parser, join_numeric_options, main
from src.weierstrass_landen.conformal import ConformalMap, curve_from_gamma, params_from_record
from src.weierstrass_landen.functions import LatticeFunctions
from src.weierstrass_landen.core.types import Invariants, Tolerances
from src.weierstrass_landen.utils.config import get_config_manager
from src.weierstrass_landen.utils.formatting import complex_from_record, format_complex, parse_complex
from tests.reference_data import OMEGA, Z, reference_point, rel_err

CURVE = ["--g2", "3+1i", "--g3", "2"]

QMAP_PARAMS = {
    "D": {"re": 0.0, "im": 1.0},
    "zplus": {"re": 0.0, "im": 1.0},
    "zminus": {"re": 0.0, "im": 0.5},
    "hplus": 1.0,
    "hminus": 0.5,
    "g2": 1,
    "g3": 0,
}


def _json(capsys):
    return json.loads(capsys.readouterr().out)


@pytest.fixture
def params_file(tmp_path):
    path = tmp_path / "params.json"
    path.write_text(json.dumps(QMAP_PARAMS), encoding="utf-8")
    return str(path)


@pytest.fixture
def low_max_iter(monkeypatch):
    """Settings with a Landen iteration budget too small for (3+i, 2)."""
    monkeypatch.setenv("WEIERSTRASS_MAX_ITER", "2")
    get_config_manager().reload_settings()
    yield
    monkeypatch.delenv("WEIERSTRASS_MAX_ITER")
    get_config_manager().reload_settings()


class TestCurveCommands:
    def test_roots_text(self, capsys):
        assert main(["roots", *CURVE]) == 0
        out = capsys.readouterr().out
        assert "e1 = " in out
        assert "delta = -90+26i" in out

    def test_roots_json(self, capsys):
        assert main(["roots", *CURVE, "--json"]) == 0
        payload = _json(capsys)
        assert payload["delta"] == {"re": -90.0, "im": 26.0}
        assert payload["rank"] == "rank2"

    def test_chain_json(self, capsys):
        assert main(["chain", *CURVE, "--json"]) == 0
        rows = _json(capsys)
        assert [row["n"] for row in rows] == list(range(len(rows)))
        assert len(rows) - 1 == 4
        assert rows[-1]["gap_ratio"] <= 2.0 ** -52

    def test_chain_text(self, capsys):
        assert main(["chain", *CURVE, "--digits", "6"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0].split("\t") == ["n", "g2", "g3", "delta", "gap_ratio"]
        assert lines[1].startswith("0\t3+1i\t2+0i\t-90+26i")

    def test_chain_rank0(self, capsys):
        assert main(["chain", "--g2", "0", "--g3", "0"]) == 0
        captured = capsys.readouterr()
        assert "rank0 subgroup" in captured.err
        assert len(captured.out.splitlines()) == 2

    def test_periods_json(self, capsys):
        assert main(["periods", *CURVE, "--json"]) == 0
        payload = _json(capsys)
        assert rel_err(complex_from_record(payload["omega1"]), OMEGA) <= 1e-13
        assert payload["legendre_residual"] <= 1e-12

    def test_periods_rank1(self, capsys):
        g2 = format_complex(4 * 3.141592653589793 ** 4 / 3)
        g3 = format_complex(8 * 3.141592653589793 ** 6 / 27)
        assert main(["periods", "--g2", g2, "--g3", g3, "--json"]) == 0
        payload = _json(capsys)
        assert payload["rank"] == "rank1"
        assert complex_from_record(payload["omega"]) == pytest.approx(1, abs=1e-13)

    def test_abel(self, capsys):
        pt = reference_point()
        argv = ["abel", *CURVE, "--x", format_complex(pt.x), "--y", format_complex(pt.y), "--json"]
        assert main(argv) == 0
        assert rel_err(complex_from_record(_json(capsys)["z"]), Z) <= 1e-12

    def test_eval_subset(self, capsys):
        z = format_complex(Z)
        assert main(["eval", *CURVE, "--z", z, "--functions", "p,sigma", "--json"]) == 0
        payload = _json(capsys)
        assert set(payload) == {"p", "sigma"}
        assert abs(complex_from_record(payload["p"]) - 1) <= 1e-12

    @pytest.mark.parametrize("z", ["-0.3+0.2i", "-0.3-0.2i", "-1i"])
    def test_eval_negative_argument(self, capsys, z):
        """Values starting with '-' are taken as the option's argument."""
        assert main(["eval", *CURVE, "--z", z, "--json"]) == 0
        payload = _json(capsys)
        expected = LatticeFunctions(Invariants(3 + 1j, 2)).reduced_values(parse_complex(z))
        for name in ("p", "dp", "zeta", "sigma"):
            assert rel_err(complex_from_record(payload[name]), getattr(expected, name)) <= 1e-12

    def test_negative_invariant(self, capsys):
        assert main(["roots", "--g2", "-4", "--g3", "0", "--json"]) == 0
        assert _json(capsys)["delta"] == {"re": -64.0, "im": 0.0}


class TestJoinNumericOptions:
    def test_joins_negative_values(self):
        argv = ["eval", "--g2", "-1", "--g3", "2", "--z", "-0.3+0.2i", "--json"]
        assert join_numeric_options(argv) == ["eval", "--g2=-1", "--g3=2", "--z=-0.3+0.2i", "--json"]

    def test_leaves_other_options(self):
        argv = ["qmap", "--params", "p.json", "--trace", "t.json", "--digits", "5"]
        assert join_numeric_options(argv) == argv

    def test_already_joined_and_trailing(self):
        assert join_numeric_options(["--z=-1", "--z"]) == ["--z=-1", "--z"]


class TestExitCodes:
    def test_parse_error(self, capsys):
        assert main(["roots", "--g2", "three", "--g3", "2"]) == 2
        assert "error:" in capsys.readouterr().err

    def test_parse_error_json(self, capsys):
        assert main(["roots", "--g2", "three", "--g3", "2", "--json"]) == 2
        payload = _json(capsys)
        assert payload["success"] is False
        assert payload["error_code"] == "PARSE_ERROR"
        assert payload["exit_code"] == 2

    def test_non_finite(self):
        assert main(["roots", "--g2", "nan", "--g3", "2"]) == 3

    def test_no_convergence(self, low_max_iter):
        assert main(["periods", *CURVE]) == 4

    def test_pole(self):
        assert main(["eval", *CURVE, "--z", "0"]) == 5

    def test_rank0_periods(self):
        assert main(["periods", "--g2", "0", "--g3", "0"]) == 5

    def test_off_curve(self):
        assert main(["abel", *CURVE, "--x", "1", "--y", "1"]) == 5

    def test_version(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            build_parser().parse_args(["--version"])
        assert excinfo.value.code == 0


class TestQmapCommand:
    def test_point(self, capsys, params_file):
        assert main(["qmap", "--gamma", "0.05", "--params", params_file, "--z", "-0.3+0.2i", "--json"]) == 0
        q = complex_from_record(_json(capsys)["Q"])
        roots = curve_from_gamma(0.05)
        expected = ConformalMap(params_from_record(QMAP_PARAMS), Tolerances(), roots=roots)(-0.3 + 0.2j)
        assert abs(q - expected) <= 1e-12

    def test_negative_gamma(self, capsys, params_file):
        assert main(["qmap", "--gamma", "-0.05", "--params", params_file, "--z", "-0.3+0.2i", "--json"]) == 0
        q = complex_from_record(_json(capsys)["Q"])
        roots = curve_from_gamma(-0.05)
        expected = ConformalMap(params_from_record(QMAP_PARAMS), Tolerances(), roots=roots)(-0.3 + 0.2j)
        assert abs(q - expected) <= 1e-12

    def test_trace(self, capsys, tmp_path, params_file):
        path = tmp_path / "trace.json"
        path.write_text(json.dumps([{"re": -0.3, "im": 0.2}, "-0.3+0.25i", {"re": -0.3, "im": 0.3}]), encoding="utf-8")
        assert main(["qmap", "--params", params_file, "--trace", str(path), "--json"]) == 0
        rows = _json(capsys)
        assert len(rows) == 3
        assert rows[1]["z"] == {"re": -0.3, "im": 0.25}

    def test_log_singularity(self, params_file):
        assert main(["qmap", "--gamma", "0.05", "--params", params_file, "--z", "1i"]) == 5

    def test_gamma_out_of_range(self, params_file):
        assert main(["qmap", "--gamma", "0.2", "--params", params_file, "--z", "0.1i"]) == 5

    def test_unreadable_params(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json", encoding="utf-8")
        assert main(["qmap", "--params", str(path), "--z", "0.1i"]) == 2
