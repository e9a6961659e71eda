"""Critical dilation radii and numerical probes of sharpness."""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import minimize

from .quadrature import DiskQuadrature, bergman_integral, disk_quadrature
from .series import AnalyticFunction, PowerSeries

__all__ = [
    "CriticalRadiusResult",
    "SearchResult",
    "RestartRecord",
    "BISECTION_SLACK",
    "critical_radius",
    "sharpness_scan",
    "squash_coefficients",
    "worst_case_search",
]

# relative roundoff allowance when deciding whether the inequality holds
BISECTION_SLACK = 1e-13


@dataclass(frozen=True)
class CriticalRadiusResult:
    r_crit: float
    iterations: int
    bracket_width: float
    capped: bool


@dataclass(frozen=True)
class RestartRecord:
    restart: int
    best_r_crit: float
    evaluations: int
    coeffs: tuple[complex, ...]


@dataclass(frozen=True)
class SearchResult:
    best_function: PowerSeries
    best_r_crit: float
    restarts_used: int
    evaluations: int
    history: tuple[RestartRecord, ...] = field(default=(), compare=False)


def critical_radius(
    f: AnalyticFunction,
    p: float,
    q: float,
    alpha: float,
    quad_p: DiskQuadrature | None = None,
    quad_q: DiskQuadrature | None = None,
    tol_r: float = 1e-6,
) -> CriticalRadiusResult:
    """Largest ``r`` in ``[0, 1]`` with ``||f(r .)||_{q,alpha} <= ||f||_{p,alpha}``, by bisection.

    Relies on ``r -> ||f(r .)||_q`` being nondecreasing. The returned radius
    is the lower end of the final bracket, so the inequality holds there.
    """
    if tol_r <= 0:
        raise ValueError("tol_r must be positive")
    quad_p = quad_p or disk_quadrature(alpha)
    quad_q = quad_q or disk_quadrature(alpha, quad_p.radial.n, quad_p.angular_count)
    rhs = bergman_integral(f, p, alpha, quad_p) ** (1 / p)
    if not rhs > 0:
        raise ValueError("the p-norm of f must be positive")
    slack = BISECTION_SLACK * rhs

    def holds(r):
        return bergman_integral(f.dilate(r), q, alpha, quad_q) ** (1 / q) <= rhs + slack

    if holds(1.0):
        return CriticalRadiusResult(1.0, 0, 0.0, True)
    lo, hi, it = 0.0, 1.0, 0
    while hi - lo > tol_r:
        mid = 0.5 * (lo + hi)
        if holds(mid):
            lo = mid
        else:
            hi = mid
        it += 1
    return CriticalRadiusResult(lo, it, hi - lo, False)


def sharpness_scan(
    p: float,
    q: float,
    alpha: float,
    epsilons,
    quad: DiskQuadrature | None = None,
    tol_r: float = 1e-6,
) -> list[tuple[float, CriticalRadiusResult]]:
    """Critical radii of ``1 + eps z``, sorted by ``eps``."""
    rows = []
    for eps in sorted(float(e) for e in epsilons):
        if not 0 < eps <= 1:
            raise ValueError(f"epsilon must lie in (0, 1], got {eps}")
        f = PowerSeries((1.0, eps))
        rows.append((eps, critical_radius(f, p, q, alpha, quad, quad, tol_r)))
    return rows


def squash_coefficients(u: np.ndarray, bound: float = 2.0) -> np.ndarray:
    """Map ``R^(2d)`` onto complex coefficients with ``|a_n| <= bound``, smoothly."""
    u = np.asarray(u, dtype=float)
    d = len(u) // 2
    w = u[:d] + 1j * u[d:]
    m = np.abs(w)
    ratio = np.ones_like(m)
    nz = m > 1e-12
    ratio[nz] = np.tanh(m[nz]) / m[nz]
    return bound * ratio * w


def _run_restart(args) -> RestartRecord:
    p, q, alpha, degree, restart, seed, n, n_theta, tol_r, maxfev = args
    quad = disk_quadrature(alpha, n, n_theta)
    rng = np.random.default_rng([seed, restart])
    u0 = rng.normal(0.0, 0.2, 2 * degree)
    count = 0

    def objective(u):
        nonlocal count
        count += 1
        f = PowerSeries((1.0,) + tuple(squash_coefficients(u)))
        return critical_radius(f, p, q, alpha, quad, quad, tol_r).r_crit

    res = minimize(
        objective, u0, method="Nelder-Mead",
        options={"maxfev": maxfev, "xatol": 1e-5, "fatol": tol_r / 10, "adaptive": True},
    )
    coeffs = (1.0 + 0j,) + tuple(complex(c) for c in squash_coefficients(res.x))
    return RestartRecord(restart, float(res.fun), count, coeffs)


def worst_case_search(
    p: float,
    q: float,
    alpha: float,
    degree: int,
    restarts: int,
    seed: int = 0,
    quad: DiskQuadrature | None = None,
    tol_r: float = 1e-6,
    maxfev: int = 400,
    workers: int = 1,
) -> SearchResult:
    """Minimize the critical radius over polynomials ``1 + a_1 z + ... + a_d z^d``.

    Nelder-Mead on the real and imaginary parts of the squashed coefficients,
    restarted from ``restarts`` random points seeded by ``(seed, restart)``.
    """
    if degree < 1:
        raise ValueError("degree must be at least 1")
    if restarts < 1:
        raise ValueError("restarts must be at least 1")
    quad = quad or disk_quadrature(alpha)
    if not math.isclose(quad.alpha, alpha, rel_tol=0, abs_tol=1e-14):
        raise ValueError(f"quadrature was built for alpha={quad.alpha}, not {alpha}")
    jobs = [
        (p, q, alpha, degree, k, seed, quad.radial.n, quad.angular_count, tol_r, maxfev)
        for k in range(restarts)
    ]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            history = list(pool.map(_run_restart, jobs))
    else:
        history = [_run_restart(job) for job in jobs]
    best = min(history, key=lambda rec: (rec.best_r_crit, rec.restart))
    return SearchResult(
        best_function=PowerSeries(best.coeffs),
        best_r_crit=best.best_r_crit,
        restarts_used=restarts,
        evaluations=sum(rec.evaluations for rec in history),
        history=tuple(history),
    )
