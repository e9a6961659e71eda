"""Numerical checks of the hypercontractive inequality and its proof chain.

Every check returns a ``CheckReport`` whose ``margin`` is ``rhs - lhs``; a
check passes when ``margin >= -tol``. Tolerances are absolute, so inputs are
expected to have norms of order one (all checks here are homogeneous in
``f``, so rescaling never changes a verdict).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .quadrature import (
    DiskQuadrature,
    DivergenceError,
    bergman_integral,
    circle_mean,
    circle_points,
    disk_quadrature,
    gauss_jacobi_rule,
    monomial_moment,
    split_origin_zero,
)
from .series import AnalyticFunction

__all__ = [
    "CheckKind",
    "HyperCase",
    "CheckReport",
    "SingularPointError",
    "DEFAULT_TOL",
    "REPORT_KEYS",
    "theorem_radius",
    "check_hypercontractivity",
    "check_kulikov",
    "check_dilation_embedding",
    "check_pointwise_bound",
    "convexity_profile",
    "laplacian_sides",
    "laplacian_identity_residual",
    "log_sobolev_terms",
    "check_log_sobolev",
    "monomial_hyper_margin",
]

DEFAULT_TOL = 1e-8

REPORT_KEYS = (
    "kind", "p", "q", "alpha", "beta", "r", "lhs", "rhs", "margin", "pass",
    "tol", "radial_nodes", "angular_nodes", "function_literal",
)


class CheckKind(str, enum.Enum):
    MAIN = "main"
    KULIKOV = "kulikov"
    EMBEDDING = "embedding"
    POINTWISE = "pointwise"
    LOG_SOBOLEV = "logsobolev"
    MONOMIAL = "monomial"


class SingularPointError(ValueError):
    """The Laplacian identity was requested where ``f`` or ``f'`` (nearly) vanishes."""


@dataclass(frozen=True)
class HyperCase:
    f: AnalyticFunction
    p: float
    q: float
    alpha: float
    r: float
    kind: CheckKind = CheckKind.MAIN

    def __post_init__(self):
        if not 0 < self.p < self.q:
            raise ValueError(f"need 0 < p < q, got p={self.p}, q={self.q}")
        if not self.alpha > 1:
            raise ValueError(f"alpha must exceed 1, got {self.alpha}")
        if not 0 <= self.r <= 1:
            raise ValueError(f"r must lie in [0, 1], got {self.r}")

    @property
    def beta(self) -> float:
        return self.q * self.alpha / self.p


@dataclass(frozen=True)
class CheckReport:
    kind: CheckKind
    lhs: float
    rhs: float
    tol: float = DEFAULT_TOL
    p: float | None = None
    q: float | None = None
    alpha: float | None = None
    beta: float | None = None
    r: float | None = None
    radial_nodes: int | None = None
    angular_nodes: int | None = None
    function_literal: str | None = None
    lhs_alpha: float | None = None
    rhs_alpha: float | None = None
    extra: dict = field(default_factory=dict, compare=False)

    @property
    def margin(self) -> float:
        return self.rhs - self.lhs

    @property
    def passed(self) -> bool:
        return self.margin >= -self.tol

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "p": self.p,
            "q": self.q,
            "alpha": self.alpha,
            "beta": self.beta,
            "r": self.r,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "margin": self.margin,
            "pass": self.passed,
            "tol": self.tol,
            "radial_nodes": self.radial_nodes,
            "angular_nodes": self.angular_nodes,
            "function_literal": self.function_literal,
        }


def theorem_radius(p: float, q: float, alpha: float) -> float:
    """Dilation radius for which the inequality is guaranteed for every analytic ``f``.

    ``sqrt(p/q)`` when ``q >= 2``; otherwise the square root of
    ``max(p/2, p(alpha-1)/(q alpha - p))``.
    """
    if q >= 2:
        return math.sqrt(p / q)
    return math.sqrt(max(p / 2, p * (alpha - 1) / (q * alpha - p)))


def _finite(value: float, what: str) -> float:
    if not math.isfinite(value):
        raise DivergenceError(f"{what} is not finite")
    return value


def check_hypercontractivity(
    case: HyperCase,
    quad_p: DiskQuadrature | None = None,
    quad_q: DiskQuadrature | None = None,
    tol: float = DEFAULT_TOL,
) -> CheckReport:
    """``||f(r .)||_{q, alpha} <= ||f||_{p, alpha}``."""
    quad_p = quad_p or disk_quadrature(case.alpha)
    quad_q = quad_q or disk_quadrature(case.alpha)
    rhs = bergman_integral(case.f, case.p, case.alpha, quad_p) ** (1 / case.p)
    lhs = bergman_integral(case.f.dilate(case.r), case.q, case.alpha, quad_q) ** (1 / case.q)
    return CheckReport(
        CheckKind.MAIN, lhs, rhs, tol,
        p=case.p, q=case.q, alpha=case.alpha, beta=None, r=case.r,
        radial_nodes=quad_p.radial.n, angular_nodes=quad_p.angular_count,
        function_literal=case.f.literal, lhs_alpha=case.alpha, rhs_alpha=case.alpha,
    )


def check_kulikov(
    f: AnalyticFunction,
    p: float,
    q: float,
    alpha: float,
    quad_alpha: DiskQuadrature | None = None,
    quad_beta: DiskQuadrature | None = None,
    tol: float = DEFAULT_TOL,
) -> CheckReport:
    """``||f||_{q, beta} <= ||f||_{p, alpha}`` with ``beta = q alpha / p``."""
    if not 0 < p < q:
        raise ValueError(f"need 0 < p < q, got p={p}, q={q}")
    beta = q * alpha / p
    quad_alpha = quad_alpha or disk_quadrature(alpha)
    quad_beta = quad_beta or disk_quadrature(beta, quad_alpha.radial.n, quad_alpha.angular_count)
    rhs = bergman_integral(f, p, alpha, quad_alpha) ** (1 / p)
    lhs = bergman_integral(f, q, beta, quad_beta) ** (1 / q)
    return CheckReport(
        CheckKind.KULIKOV, lhs, rhs, tol,
        p=p, q=q, alpha=alpha, beta=beta, r=None,
        radial_nodes=quad_alpha.radial.n, angular_nodes=quad_alpha.angular_count,
        function_literal=f.literal, lhs_alpha=beta, rhs_alpha=alpha,
    )


def check_dilation_embedding(
    f: AnalyticFunction,
    q: float,
    alpha: float,
    beta: float,
    quad_alpha: DiskQuadrature | None = None,
    quad_beta: DiskQuadrature | None = None,
    tol: float = DEFAULT_TOL,
) -> CheckReport:
    """``int |f(r z)|^q dA_alpha <= int |f|^q dA_beta`` at ``r = sqrt(alpha/beta)``.

    Holds when ``q >= 2`` (or ``f`` zero-free); ``f(z) = z`` with ``q < 2`` is
    a counterexample.
    """
    if not beta > alpha > 1:
        raise ValueError(f"need beta > alpha > 1, got alpha={alpha}, beta={beta}")
    r = math.sqrt(alpha / beta)
    quad_alpha = quad_alpha or disk_quadrature(alpha)
    quad_beta = quad_beta or disk_quadrature(beta, quad_alpha.radial.n, quad_alpha.angular_count)
    lhs = bergman_integral(f.dilate(r), q, alpha, quad_alpha)
    rhs = bergman_integral(f, q, beta, quad_beta)
    return CheckReport(
        CheckKind.EMBEDDING, lhs, rhs, tol,
        p=None, q=q, alpha=alpha, beta=beta, r=r,
        radial_nodes=quad_alpha.radial.n, angular_nodes=quad_alpha.angular_count,
        function_literal=f.literal, lhs_alpha=alpha, rhs_alpha=beta,
    )


def check_pointwise_bound(
    alpha: float, beta: float, n_samples: int = 10001, tol: float = DEFAULT_TOL
) -> CheckReport:
    """Max of ``(1 - y/r^2)^alpha - (1 - y)^beta`` over a uniform grid on ``[0, alpha/beta]``."""
    if not beta > alpha > 1:
        raise ValueError(f"need beta > alpha > 1, got alpha={alpha}, beta={beta}")
    if n_samples < 2:
        raise ValueError("n_samples must be at least 2")
    r2 = alpha / beta
    y = np.linspace(0.0, r2, n_samples)
    diff = np.clip(1 - y / r2, 0, None) ** alpha - (1 - y) ** beta
    worst = int(np.argmax(diff))
    return CheckReport(
        CheckKind.POINTWISE, float(diff[worst]), 0.0, tol,
        alpha=alpha, beta=beta, r=math.sqrt(r2),
        lhs_alpha=alpha, rhs_alpha=beta,
        extra={"worst_y": float(y[worst]), "n_samples": n_samples},
    )


def convexity_profile(
    f: AnalyticFunction, q: float, y_grid, h: float = 1e-3, n_theta: int = 256
) -> np.ndarray:
    """Rows ``(y, second difference)`` of the circle mean ``M(y)`` of ``|f|^q``."""
    y = np.asarray(y_grid, dtype=float)
    if h <= 0 or np.any(y - h <= 0) or np.any(y + h >= 1):
        raise ValueError("y_grid must lie inside (h, 1 - h)")
    m = lambda t: circle_mean(f, t, q, n_theta)  # noqa: E731
    second = (m(y - h) - 2 * m(y) + m(y + h)) / h**2
    return np.column_stack([y, second])


def _density(f: AnalyticFunction, p: float, z):
    return np.abs(f.eval(z)) ** (p - 2) * np.abs(f.deriv_eval(z, 1)) ** 2


def laplacian_sides(f: AnalyticFunction, p: float, z: complex, h: float = 1e-4) -> tuple[float, float]:
    """Finite-difference Laplacian of ``|f|^(p-2) |f'|^2`` and its closed form.

    The closed form is ``|f|^(p-4) |(p-2) f'^2 + 2 f f''|^2``, i.e. ``4 |F'|^2``
    with ``F = f^((p-2)/2) f'``; it is nonnegative, so the density is subharmonic.
    """
    z = complex(z)
    if abs(z) > 0.9:
        raise SingularPointError(f"|z| must be at most 0.9, got {abs(z)}")
    if p < 2 and not f.zero_free:
        raise SingularPointError("p < 2 requires a zero-free function")
    stencil = z + h * np.array([0, 1, -1, 1j, -1j])
    fz = f.eval(stencil)
    if np.min(np.abs(fz)) <= 1e-6 or abs(f.deriv_eval(z, 1)) <= 1e-6:
        raise SingularPointError(f"f or f' is too small near z={z}")
    g = _density(f, p, stencil)
    fd = float((g[1] + g[2] + g[3] + g[4] - 4 * g[0]) / h**2)
    f0, f1, f2 = fz[0], f.deriv_eval(z, 1), f.deriv_eval(z, 2)
    closed = float(abs(f0) ** (p - 4) * abs((p - 2) * f1**2 + 2 * f0 * f2) ** 2)
    return fd, closed


def laplacian_identity_residual(f: AnalyticFunction, p: float, z: complex, h: float = 1e-4) -> float:
    fd, closed = laplacian_sides(f, p, z, h)
    return abs(fd - closed) / (1 + abs(closed))


def _log_y_integral(g: AnalyticFunction, p: float, alpha: float, n: int, n_theta: int, b: float) -> float:
    """``int y^b log(y) M(y) (alpha-1)(1-y)^(alpha-2) dy`` with ``M`` the circle mean of ``|g|^p``.

    Computed as the ``b``-derivative of the Jacobi-weighted integral, by a
    Richardson-extrapolated central difference.
    """
    def moment(bb):
        rule = gauss_jacobi_rule(n, alpha, bb)
        return float(rule.weights @ circle_mean(g, rule.nodes, p, n_theta))

    h = min(0.005, b / 2)
    d1 = (moment(b + h) - moment(b - h)) / (2 * h)
    d2 = (moment(b + h / 2) - moment(b - h / 2)) / h
    return (4 * d2 - d1) / 3


def log_sobolev_terms(
    f: AnalyticFunction, p: float, alpha: float, quad: DiskQuadrature | None = None
) -> dict[str, float]:
    """Entropy ``E``, energy ``D`` and mass ``N`` integrals against ``dA_alpha``.

    ``E = int |f|^p log|f|``, ``D = 1/2 Re int |f|^(p-2) conj(f) z f'`` and
    ``N = int |f|^p``.
    """
    quad = quad or disk_quadrature(alpha)
    if not math.isclose(quad.alpha, alpha, rel_tol=0, abs_tol=1e-14):
        raise ValueError(f"quadrature was built for alpha={quad.alpha}, not {alpha}")
    k, g = split_origin_zero(f)
    if g is None:
        raise ValueError("the log-Sobolev inequality needs a function that is not identically zero")
    n, n_theta = quad.radial.n, quad.angular_count
    b = k * p / 2
    rule = quad.radial if k == 0 else gauss_jacobi_rule(n, alpha, b)
    z = circle_points(rule.nodes, n_theta)
    gv = g.eval(z)
    mod = np.abs(gv)
    with np.errstate(divide="ignore", invalid="ignore"):
        # t^p log t -> 0 as t -> 0
        ent = np.where(mod < 1e-300, 0.0, mod**p * np.log(mod))
        energy = mod ** (p - 2) * np.real(np.conj(gv) * (k * gv + z * g.deriv_eval(z, 1)))
    w = rule.weights
    mass = float(w @ (mod**p).mean(axis=1))
    entropy = float(w @ ent.mean(axis=1))
    if k:
        # log|f| = (k/2) log y + log|g|
        entropy += k / 2 * _log_y_integral(g, p, alpha, n, n_theta, b)
    dirichlet = 0.5 * float(w @ energy.mean(axis=1))
    for name, value in (("E", entropy), ("D", dirichlet), ("N", mass)):
        _finite(value, f"log-Sobolev integral {name}")
    return {"E": entropy, "D": dirichlet, "N": mass}


def check_log_sobolev(
    f: AnalyticFunction,
    p: float,
    alpha: float,
    quad: DiskQuadrature | None = None,
    tol: float = DEFAULT_TOL,
) -> CheckReport:
    """``E <= D + (1/p) N log N`` for ``p >= 2``."""
    if p < 2:
        raise ValueError(f"the log-Sobolev check requires p >= 2, got {p}")
    quad = quad or disk_quadrature(alpha)
    t = log_sobolev_terms(f, p, alpha, quad)
    rhs = t["D"] + t["N"] * math.log(t["N"]) / p
    return CheckReport(
        CheckKind.LOG_SOBOLEV, t["E"], rhs, tol,
        p=p, alpha=alpha,
        radial_nodes=quad.radial.n, angular_nodes=quad.angular_count,
        function_literal=f.literal, lhs_alpha=alpha, rhs_alpha=alpha,
        extra=dict(t),
    )


def monomial_hyper_margin(p: float, q: float, alpha: float) -> tuple[float, float]:
    """Closed-form sides of the main inequality for ``f(z) = z`` at ``r = sqrt(p/q)``."""
    if not 0 < p < q:
        raise ValueError(f"need 0 < p < q, got p={p}, q={q}")
    lhs = math.sqrt(p / q) * monomial_moment(q / 2, alpha) ** (1 / q)
    rhs = monomial_moment(p / 2, alpha) ** (1 / p)
    return lhs, rhs
