import csv
import io
import json
import math

import pytest

from bergman_hyper.cli import main, parse_args
from bergman_hyper.inequalities import REPORT_KEYS
from bergman_hyper.series import BinomialPower

# one command per subcommand, with the expected exit code
GOLDEN = [
    ("norm --f poly:1,0.5i --p 2 --alpha 2", 0),
    ("check-hyper --f poly:1,0.1 --p 2 --q 4 --alpha 2 --r auto", 0),
    ("check-kulikov --f binom:1,0.3,2 --p 2 --q 4 --alpha 2", 0),
    ("check-embedding --f poly:0,1 --q 1 --alpha 2 --beta 4", 1),
    ("check-pointwise --alpha 2 --beta 4", 0),
    ("convexity --f poly:0,1 --q 1 --y-grid 0.1:0.9:5", 0),
    ("laplacian --f exp:1,1 --p 3 --z 0.2+0.1i", 0),
    ("check-logsobolev --f poly:0,1 --p 2 --alpha 2", 0),
    ("critical-radius --f poly:0,1 --p 2 --q 4 --alpha 2", 0),
    ("sharpness-scan --p 2 --q 4 --alpha 2 --epsilons 0.4,0.1", 0),
    ("worst-case --p 2 --q 4 --alpha 2 --degree 1 --restarts 1 --maxfev 20 --radial-nodes 20 --angular-nodes 32", 0),
    ("monomial-margin --p 1 --q 2 --alpha 2", 0),
]


def run_cli(cmd, capsys):
    code = main(cmd.split())
    return code, capsys.readouterr().out


def test_golden_covers_every_subcommand():
    from bergman_hyper.cli import SUBCOMMANDS

    assert sorted(c.split()[0] for c, _ in GOLDEN) == sorted(SUBCOMMANDS)


@pytest.mark.parametrize("cmd,expected", GOLDEN)
def test_golden_exit_codes(cmd, expected, capsys):
    code, out = run_cli(cmd, capsys)
    assert code == expected
    assert out.strip()


def test_r_auto_resolution():
    cfg = parse_args("check-hyper --f poly:1,0.1 --p 2 --q 4 --alpha 2 --r auto".split())
    assert cfg.r == pytest.approx(math.sqrt(0.5), abs=1e-15)
    cfg = parse_args("check-hyper --f poly:1,0.1 --p 1 --q 1.5 --alpha 3 --r auto".split())
    assert cfg.r == pytest.approx(math.sqrt(max(0.5, 2 / 3.5)), abs=1e-15)


def test_binomial_literal_parses():
    cfg = parse_args("norm --f binom:1,0.3,2 --p 2 --alpha 2".split())
    assert cfg.radial_nodes == 60 and cfg.angular_nodes == 256 and cfg.format == "human"
    from bergman_hyper.series import parse_function

    assert parse_function(cfg.function_literal) == BinomialPower(1, 0.3, 2)


@pytest.mark.parametrize(
    "cmd,message",
    [
        ("norm --f poly:1 --p 2 --alpha 1", "alpha must exceed 1"),
        ("check-hyper --f poly:1 --p 4 --q 2 --alpha 2", "p must be less than q"),
        ("check-hyper --f poly:1,x --p 2 --q 4 --alpha 2", "malformed complex literal"),
        ("norm --f poly:1 --p 2 --alpha 2 --bogus 1", "unrecognized"),
        ("check-hyper --f poly:1 --q 4 --alpha 2", "--p"),
    ],
)
def test_usage_errors_exit_2(cmd, message, capsys):
    with pytest.raises(SystemExit) as exc:
        main(cmd.split())
    assert exc.value.code == 2
    assert message in capsys.readouterr().err


def test_constant_function_margin_zero(capsys):
    code, out = run_cli("check-hyper --f poly:2-1i --p 1 --q 3 --alpha 2 --format json", capsys)
    report = json.loads(out)
    assert code == 0 and report["margin"] == 0 and report["pass"] is True


def test_embedding_counterexample_values(capsys):
    code, out = run_cli("check-embedding --f poly:0,1 --q 1 --alpha 2 --beta 4 --format json", capsys)
    report = json.loads(out)
    # int |r z| dA_2 = r Gamma(3/2) Gamma(2) / Gamma(5/2), int |z| dA_4 = Gamma(3/2) Gamma(4) / Gamma(9/2)
    r = math.sqrt(0.5)
    lhs = r * math.gamma(1.5) * math.gamma(2) / math.gamma(2.5)
    rhs = math.gamma(1.5) * math.gamma(4) / math.gamma(4.5)
    assert code == 1 and report["pass"] is False
    assert report["lhs"] == pytest.approx(lhs, rel=1e-10)
    assert report["rhs"] == pytest.approx(rhs, rel=1e-10)


@pytest.mark.parametrize(
    "cmd",
    [
        "check-hyper --f poly:1,0.1 --p 2 --q 4 --alpha 2 --r auto",
        "check-kulikov --f binom:1,0.3,2 --p 1 --q 3 --alpha 1.5",
        "check-embedding --f poly:0,1 --q 1 --alpha 2 --beta 4",
        "check-pointwise --alpha 2 --beta 4",
        "check-logsobolev --f poly:0,1 --p 2 --alpha 2",
    ],
)
def test_json_report_keys(cmd, capsys):
    _, out = run_cli(cmd + " --format json", capsys)
    assert set(json.loads(out)) == set(REPORT_KEYS)


def _argv_from_report(report, subcommand):
    argv = [subcommand]
    for key, flag in [("function_literal", "--f"), ("p", "--p"), ("q", "--q"), ("alpha", "--alpha"), ("r", "--r")]:
        if report[key] is not None:
            argv += [flag, repr(report[key]) if isinstance(report[key], float) else str(report[key])]
    argv += ["--radial-nodes", str(report["radial_nodes"]), "--angular-nodes", str(report["angular_nodes"])]
    argv += ["--tol", repr(report["tol"]), "--format", "json"]
    return argv


@pytest.mark.parametrize(
    "literal", ["poly:1,0.1", "poly:0.3-0.2i,1,0.25i,-0.4", "binom:1.5,0.2+0.1i,1.7", "exp:0.5,0.3-0.8i"]
)
def test_json_round_trip(literal, capsys):
    main(f"check-hyper --f {literal} --p 1.3 --q 2.7 --alpha 2.4 --r auto --format json".split())
    first = json.loads(capsys.readouterr().out)
    main(_argv_from_report(first, "check-hyper"))
    second = json.loads(capsys.readouterr().out)
    for key in ("lhs", "rhs"):
        assert second[key] == pytest.approx(first[key], rel=1e-12)


def test_sharpness_scan_csv(capsys):
    code, out = run_cli("sharpness-scan --p 2 --q 4 --alpha 2 --epsilons 0.4,0.05,0.2 --format csv", capsys)
    assert code == 0
    assert "\r" not in out
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["epsilon", "r_crit", "capped"]
    eps = [float(r[0]) for r in rows[1:]]
    assert eps == sorted(eps) == [0.05, 0.2, 0.4]
    for r in rows[1:]:
        assert len(r[1].replace(".", "").lstrip("0")) <= 12


def test_worst_case_csv_header(capsys):
    cmd = "worst-case --p 2 --q 4 --alpha 2 --degree 1 --restarts 2 --maxfev 20 --radial-nodes 20 --angular-nodes 32"
    _, out = run_cli(cmd + " --format csv", capsys)
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["restart", "best_r_crit", "evaluations"]
    assert [int(r[0]) for r in rows[1:]] == [0, 1]


def test_out_path(tmp_path, capsys):
    path = tmp_path / "report.json"
    code = main(f"check-pointwise --alpha 2 --beta 4 --format json --out {path}".split())
    assert code == 0 and capsys.readouterr().out == ""
    assert json.loads(path.read_text(encoding="utf-8"))["kind"] == "pointwise"


def test_env_overrides_radial_default(monkeypatch):
    monkeypatch.setenv("BH_DEFAULT_NODES", "24")
    assert parse_args("norm --f poly:1 --p 2 --alpha 2".split()).radial_nodes == 24
    assert parse_args("norm --f poly:1 --p 2 --alpha 2 --radial-nodes 30".split()).radial_nodes == 30


def test_divergence_exit_3(capsys):
    code = main("check-hyper --f exp:1,900 --p 1 --q 2 --alpha 2".split())
    assert code == 3
    assert "divergence" in capsys.readouterr().err


def test_singular_laplacian_point_exit_2(capsys):
    assert main("laplacian --f poly:0,1 --p 1.5 --z 0.2".split()) == 2
