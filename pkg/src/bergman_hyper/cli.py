"""Command-line front end.

Usage examples::

    bergman-hyper norm --f poly:1,0.5i --p 2 --alpha 2
    bergman-hyper check-hyper --f poly:1,0.1 --p 2 --q 4 --alpha 2 --r auto
    bergman-hyper check-embedding --f poly:0,1 --q 1 --alpha 2 --beta 4 --format json
    bergman-hyper sharpness-scan --p 2 --q 4 --alpha 2 --epsilons 0.4,0.2,0.1 --format csv

Exit codes: 0 pass or informational, 1 failed check, 2 usage error,
3 divergent integral.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass, field

import numpy as np

from . import inequalities as ineq
from .quadrature import (
    DEFAULT_ANGULAR_NODES,
    DEFAULT_RADIAL_NODES,
    DivergenceError,
    bergman_integral,
    disk_quadrature,
)
from .search import critical_radius, sharpness_scan, worst_case_search
from .series import parse_complex, parse_function

__all__ = ["RunConfig", "parse_args", "run", "main", "SUBCOMMANDS"]

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DIVERGENCE = 0, 1, 2, 3

SUBCOMMANDS = (
    "norm", "check-hyper", "check-kulikov", "check-embedding", "check-pointwise",
    "convexity", "laplacian", "check-logsobolev", "critical-radius",
    "sharpness-scan", "worst-case", "monomial-margin",
)

# parameters each subcommand needs; anything else is rejected by argparse
_NEEDS = {
    "norm": ("f", "p", "alpha"),
    "check-hyper": ("f", "p", "q", "alpha", "r"),
    "check-kulikov": ("f", "p", "q", "alpha"),
    "check-embedding": ("f", "q", "alpha", "beta"),
    "check-pointwise": ("alpha", "beta", "n_samples"),
    "convexity": ("f", "q", "y_grid", "h"),
    "laplacian": ("f", "p", "z", "h"),
    "check-logsobolev": ("f", "p", "alpha"),
    "critical-radius": ("f", "p", "q", "alpha", "tol_r"),
    "sharpness-scan": ("p", "q", "alpha", "epsilons", "tol_r"),
    "worst-case": ("p", "q", "alpha", "degree", "restarts", "seed", "tol_r", "maxfev"),
    "monomial-margin": ("p", "q", "alpha"),
}

_QUAD_FREE = {"check-pointwise", "laplacian", "monomial-margin"}


@dataclass
class RunConfig:
    subcommand: str
    function_literal: str | None = None
    p: float | None = None
    q: float | None = None
    alpha: float | None = None
    beta: float | None = None
    r: float | None = None
    radial_nodes: int = DEFAULT_RADIAL_NODES
    angular_nodes: int = DEFAULT_ANGULAR_NODES
    degree: int = 4
    restarts: int = 20
    seed: int = 0
    out_path: str | None = None
    format: str = "human"
    threads: int = 1
    tol: float = ineq.DEFAULT_TOL
    tol_r: float = 1e-6
    maxfev: int = 400
    epsilons: list[float] = field(default_factory=lambda: [0.4, 0.2, 0.1, 0.05])
    n_samples: int = 10001
    h: float | None = None
    z: complex = 0.2 + 0.1j
    y_grid: list[float] = field(default_factory=list)


def _default_radial_nodes() -> int:
    env = os.environ.get("BH_DEFAULT_NODES")
    if env is None:
        return DEFAULT_RADIAL_NODES
    try:
        value = int(env)
    except ValueError:
        raise SystemExit(f"BH_DEFAULT_NODES must be an integer, got {env!r}") from None
    return value


def _function_literal(text: str) -> str:
    try:
        parse_function(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    return text


def _complex(text: str) -> complex:
    try:
        return parse_complex(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _float_list(text: str) -> list[float]:
    try:
        return [float(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated reals, got {text!r}") from None


def _y_grid(text: str) -> list[float]:
    parts = text.split(":")
    try:
        if len(parts) == 3:
            return list(np.linspace(float(parts[0]), float(parts[1]), int(parts[2])))
        return _float_list(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected start:stop:count or a list, got {text!r}") from None


def _radius(text: str) -> float | None:
    if text == "auto":
        return None
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"--r must be a real or 'auto', got {text!r}") from None


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bergman-hyper",
        description="Hypercontractivity checks for weighted Bergman spaces on the unit disk.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)
    radial_default = _default_radial_nodes()
    for name in SUBCOMMANDS:
        sp = sub.add_parser(name)
        needs = _NEEDS[name]
        if "f" in needs:
            sp.add_argument("--f", dest="function_literal", type=_function_literal, required=True,
                            help="poly:a0,a1,..., binom:C,a,s or exp:c,b")
        for key in ("p", "q", "alpha", "beta"):
            if key in needs:
                sp.add_argument(f"--{key}", type=float, required=True)
        if "r" in needs:
            sp.add_argument("--r", type=_radius, default=None, help="radius in [0,1] or 'auto'")
        if "n_samples" in needs:
            sp.add_argument("--n-samples", type=int, default=10001)
        if "y_grid" in needs:
            sp.add_argument("--y-grid", type=_y_grid, default=_y_grid("0.05:0.95:19"),
                            help="start:stop:count or comma-separated values")
        if "h" in needs:
            sp.add_argument("--h", type=float, default=None)
        if "z" in needs:
            sp.add_argument("--z", type=_complex, default=0.2 + 0.1j)
        if "epsilons" in needs:
            sp.add_argument("--epsilons", type=_float_list, default=[0.4, 0.2, 0.1, 0.05])
        if "tol_r" in needs:
            sp.add_argument("--tol-r", type=float, default=1e-6)
        if "degree" in needs:
            sp.add_argument("--degree", type=int, default=4)
            sp.add_argument("--restarts", type=int, default=20)
            sp.add_argument("--seed", type=int, default=0)
            sp.add_argument("--maxfev", type=int, default=400)
        if name not in _QUAD_FREE:
            sp.add_argument("--radial-nodes", type=int, default=radial_default)
            sp.add_argument("--angular-nodes", type=int, default=DEFAULT_ANGULAR_NODES)
        if name.startswith("check") or name == "monomial-margin":
            sp.add_argument("--tol", type=float, default=ineq.DEFAULT_TOL)
        sp.add_argument("--format", choices=("json", "csv", "human"), default="human")
        sp.add_argument("--out", dest="out_path", default=None)
        sp.add_argument("--threads", type=int, default=1, help="worker processes, 0 = auto")
    return parser


def _validate(cfg: RunConfig, error) -> None:
    if cfg.alpha is not None and not cfg.alpha > 1:
        error("alpha must exceed 1")
    if cfg.p is not None and not cfg.p > 0:
        error("p must be positive")
    if cfg.q is not None and not cfg.q > 0:
        error("q must be positive")
    if cfg.p is not None and cfg.q is not None and not cfg.p < cfg.q:
        error("p must be less than q")
    if cfg.beta is not None and cfg.alpha is not None and not cfg.beta > cfg.alpha:
        error("beta must exceed alpha")
    if cfg.subcommand == "check-logsobolev" and cfg.p < 2:
        error("p must be at least 2 for the log-Sobolev check")
    if cfg.subcommand == "laplacian" and cfg.p <= 0:
        error("p must be positive")
    if cfg.r is not None and not 0 <= cfg.r <= 1:
        error("r must lie in [0, 1]")
    if cfg.radial_nodes < 1:
        error("radial-nodes must be at least 1")
    if cfg.angular_nodes < 4:
        error("angular-nodes must be at least 4")
    if cfg.subcommand == "sharpness-scan" and any(not 0 < e <= 1 for e in cfg.epsilons):
        error("epsilons must lie in (0, 1]")
    if cfg.subcommand == "worst-case" and (cfg.degree < 1 or cfg.restarts < 1):
        error("degree and restarts must be at least 1")
    if cfg.tol_r <= 0:
        error("tol-r must be positive")
    if cfg.threads < 0:
        error("threads must be non-negative")


def parse_args(argv: list[str]) -> RunConfig:
    parser = _build_parser()
    ns = parser.parse_args(argv)
    cfg = RunConfig(**{k: v for k, v in vars(ns).items() if v is not None or k == "r"})
    _validate(cfg, parser.error)
    if cfg.subcommand == "check-hyper" and cfg.r is None:
        cfg.r = ineq.theorem_radius(cfg.p, cfg.q, cfg.alpha)
    if cfg.h is None:
        cfg.h = 1e-3 if cfg.subcommand == "convexity" else 1e-4
    if cfg.subcommand == "convexity":
        y = np.asarray(cfg.y_grid)
        if y.size == 0 or np.any(y - cfg.h <= 0) or np.any(y + cfg.h >= 1):
            parser.error("y-grid must lie inside (h, 1 - h)")
    return cfg


# Output -------------------------------------------------------------------

def _sig(x):
    """Round computed reals to 12 significant digits."""
    if isinstance(x, float) and math.isfinite(x):
        return float(f"{x:.12g}")
    return x


def _report_dict(report: ineq.CheckReport) -> dict:
    d = report.to_dict()
    d["lhs"], d["rhs"] = _sig(d["lhs"]), _sig(d["rhs"])
    # margin of the reported sides, so equal sides print as exactly 0
    d["margin"] = _sig(d["rhs"] - d["lhs"])
    return d


def _csv_cell(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return f"{v:.12g}"
    if v is None:
        return ""
    return str(v)


def _render(rows: list[dict], fmt: str, columns: list[str] | None = None) -> str:
    columns = columns or list(rows[0])
    if fmt == "json":
        payload = rows[0] if len(rows) == 1 else rows
        return json.dumps(payload, allow_nan=True) + "\n"
    if fmt == "csv":
        lines = [",".join(columns)]
        lines += [",".join(_csv_cell(row.get(c)) for c in columns) for row in rows]
        return "\n".join(lines) + "\n"
    if len(rows) == 1:
        width = max(len(c) for c in columns)
        return "\n".join(f"{c:<{width}}  {_csv_cell(rows[0].get(c))}" for c in columns) + "\n"
    header = "  ".join(f"{c:>16}" for c in columns)
    body = ["  ".join(f"{_csv_cell(row.get(c)):>16}" for c in columns) for row in rows]
    return "\n".join([header, *body]) + "\n"


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# Dispatch -----------------------------------------------------------------

def _execute(cfg: RunConfig) -> tuple[list[dict], list[str] | None, int]:
    cmd = cfg.subcommand
    f = parse_function(cfg.function_literal) if cfg.function_literal else None
    quad = None
    if cmd not in _QUAD_FREE:
        quad = disk_quadrature(cfg.alpha or 2.0, cfg.radial_nodes, cfg.angular_nodes)

    def check(report):
        return [_report_dict(report)], list(ineq.REPORT_KEYS), EXIT_OK if report.passed else EXIT_FAIL

    if cmd == "norm":
        integral = bergman_integral(f, cfg.p, cfg.alpha, quad)
        row = {
            "kind": "norm", "p": cfg.p, "alpha": cfg.alpha,
            "integral": _sig(integral), "norm": _sig(integral ** (1 / cfg.p)),
            "radial_nodes": cfg.radial_nodes, "angular_nodes": cfg.angular_nodes,
            "function_literal": cfg.function_literal,
        }
        return [row], None, EXIT_OK
    if cmd == "check-hyper":
        case = ineq.HyperCase(f, cfg.p, cfg.q, cfg.alpha, cfg.r)
        return check(ineq.check_hypercontractivity(case, quad, quad, cfg.tol))
    if cmd == "check-kulikov":
        return check(ineq.check_kulikov(f, cfg.p, cfg.q, cfg.alpha, quad, None, cfg.tol))
    if cmd == "check-embedding":
        return check(ineq.check_dilation_embedding(f, cfg.q, cfg.alpha, cfg.beta, quad, None, cfg.tol))
    if cmd == "check-pointwise":
        return check(ineq.check_pointwise_bound(cfg.alpha, cfg.beta, cfg.n_samples, cfg.tol))
    if cmd == "check-logsobolev":
        return check(ineq.check_log_sobolev(f, cfg.p, cfg.alpha, quad, cfg.tol))
    if cmd == "monomial-margin":
        lhs, rhs = ineq.monomial_hyper_margin(cfg.p, cfg.q, cfg.alpha)
        report = ineq.CheckReport(
            ineq.CheckKind.MONOMIAL, lhs, rhs, cfg.tol, p=cfg.p, q=cfg.q,
            alpha=cfg.alpha, r=math.sqrt(cfg.p / cfg.q), function_literal="poly:0.0,1.0",
        )
        return check(report)
    if cmd == "convexity":
        prof = ineq.convexity_profile(f, cfg.q, cfg.y_grid, cfg.h, cfg.angular_nodes)
        rows = [{"y": float(y), "second_difference": _sig(float(d))} for y, d in prof]
        return rows, ["y", "second_difference"], EXIT_OK
    if cmd == "laplacian":
        try:
            fd, closed = ineq.laplacian_sides(f, cfg.p, cfg.z, cfg.h)
        except ineq.SingularPointError as exc:
            raise _UsageError(str(exc)) from None
        row = {
            "kind": "laplacian", "p": cfg.p, "z": str(cfg.z), "h": cfg.h,
            "fd_laplacian": _sig(fd), "closed_form": _sig(closed),
            "residual": _sig(abs(fd - closed) / (1 + abs(closed))),
            "function_literal": cfg.function_literal,
        }
        return [row], None, EXIT_OK
    if cmd == "critical-radius":
        res = critical_radius(f, cfg.p, cfg.q, cfg.alpha, quad, quad, cfg.tol_r)
        row = {
            "kind": "critical_radius", "p": cfg.p, "q": cfg.q, "alpha": cfg.alpha,
            "r_crit": res.r_crit, "iterations": res.iterations,
            "bracket_width": res.bracket_width, "capped": res.capped,
            "theorem_radius": ineq.theorem_radius(cfg.p, cfg.q, cfg.alpha),
            "radial_nodes": cfg.radial_nodes, "angular_nodes": cfg.angular_nodes,
            "function_literal": cfg.function_literal,
        }
        return [row], None, EXIT_OK
    if cmd == "sharpness-scan":
        table = sharpness_scan(cfg.p, cfg.q, cfg.alpha, cfg.epsilons, quad, cfg.tol_r)
        rows = [{"epsilon": e, "r_crit": res.r_crit, "capped": res.capped} for e, res in table]
        return rows, ["epsilon", "r_crit", "capped"], EXIT_OK
    if cmd == "worst-case":
        workers = cfg.threads or os.cpu_count() or 1
        res = worst_case_search(
            cfg.p, cfg.q, cfg.alpha, cfg.degree, cfg.restarts, cfg.seed, quad,
            cfg.tol_r, cfg.maxfev, workers,
        )
        rows = [
            {"restart": rec.restart, "best_r_crit": rec.best_r_crit, "evaluations": rec.evaluations}
            for rec in res.history
        ]
        return rows, ["restart", "best_r_crit", "evaluations"], EXIT_OK
    raise _UsageError(f"unknown subcommand {cmd!r}")


class _UsageError(Exception):
    pass


def run(config: RunConfig) -> int:
    try:
        rows, columns, code = _execute(config)
    except DivergenceError as exc:
        print(f"bergman-hyper: divergence: {exc}", file=sys.stderr)
        return EXIT_DIVERGENCE
    except (_UsageError, ValueError) as exc:
        print(f"bergman-hyper: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit(_render(rows, config.format, columns), config.out_path)
    return code


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    return run(parse_args(argv))


if __name__ == "__main__":
    sys.exit(main())
