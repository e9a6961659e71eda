"""Integration against the probability measure

    dA_alpha(z) = (alpha - 1)/pi * (1 - |z|^2)^(alpha - 2) dA(z)

on the unit disk. In polar form with ``y = |z|^2`` this is
``(alpha - 1) (1 - y)^(alpha - 2) dy`` times the normalized angular mean, so
the radial part is a Gauss-Jacobi rule that absorbs the endpoint singularity
and the angular part is the uniform trapezoid rule.

When ``f`` vanishes to order ``k`` at the origin, ``|f|^p = y^(kp/2) |g|^p``
with ``g = f / z^k``; the factor ``y^(kp/2)`` is moved into the Jacobi weight
so that non-integer powers of ``y`` are integrated exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.special import digamma, gammaln

from .series import AnalyticFunction, PowerSeries

__all__ = [
    "DivergenceError",
    "RadialRule",
    "DiskQuadrature",
    "gauss_jacobi_rule",
    "disk_quadrature",
    "monomial_moment",
    "log_monomial_moment",
    "circle_mean",
    "bergman_integral",
    "bergman_norm",
    "coefficient_norm2",
    "split_origin_zero",
    "circle_points",
    "DEFAULT_RADIAL_NODES",
    "DEFAULT_ANGULAR_NODES",
]

DEFAULT_RADIAL_NODES = 60
DEFAULT_ANGULAR_NODES = 256


class DivergenceError(ArithmeticError):
    """A weighted norm or integral evaluated to a non-finite value."""


@dataclass(frozen=True, eq=False)
class RadialRule:
    """Nodes and weights on ``y in (0, 1)`` for ``(alpha-1) y^ypower (1-y)^(alpha-2) dy``.

    With ``ypower == 0`` the weights sum to one.
    """

    alpha: float
    nodes: np.ndarray
    weights: np.ndarray
    ypower: float = 0.0

    @property
    def n(self) -> int:
        return len(self.nodes)


@dataclass(frozen=True, eq=False)
class DiskQuadrature:
    radial: RadialRule
    angular_count: int = DEFAULT_ANGULAR_NODES

    def __post_init__(self):
        if self.angular_count < 4:
            raise ValueError("angular_count must be at least 4")

    @property
    def alpha(self) -> float:
        return self.radial.alpha


def monomial_moment(halfpower: float, alpha: float) -> float:
    """``int_D |z|^(2t) dA_alpha = Gamma(t+1) Gamma(alpha) / Gamma(t+alpha)``."""
    if halfpower < 0:
        raise ValueError("halfpower must be non-negative")
    _check_alpha(alpha)
    t = halfpower
    return math.exp(math.lgamma(t + 1) + math.lgamma(alpha) - math.lgamma(t + alpha))


def log_monomial_moment(halfpower: float, alpha: float) -> float:
    """``int_D |z|^(2t) log|z|^2 dA_alpha``, the ``t``-derivative of ``monomial_moment``."""
    t = halfpower
    return monomial_moment(t, alpha) * float(digamma(t + 1) - digamma(t + alpha))


def _check_alpha(alpha: float) -> None:
    if not alpha > 1:
        raise ValueError(f"alpha must exceed 1, got {alpha}")


@lru_cache(maxsize=256)
def gauss_jacobi_rule(n: int, alpha: float, ypower: float = 0.0) -> RadialRule:
    """Golub-Welsch rule with ``n`` nodes for ``(alpha-1) y^ypower (1-y)^(alpha-2)`` on [0, 1].

    Exact for polynomials in ``y`` of degree ``<= 2n - 1``.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    _check_alpha(alpha)
    if ypower < 0:
        raise ValueError("ypower must be non-negative")
    # Jacobi weight (1-x)^a (1+x)^b on [-1, 1] with y = (1+x)/2
    a, b = alpha - 2.0, float(ypower)
    k = np.arange(1, n, dtype=float)
    s = 2 * k + a + b
    diag = np.empty(n)
    diag[0] = (b - a) / (a + b + 2)
    diag[1:] = (b * b - a * a) / (s * (s + 2))
    off = np.sqrt(4 * k * (k + a) * (k + b) * (k + a + b) / (s * s * (s + 1) * (s - 1)))
    jacobi = np.diag(diag) + np.diag(off, 1) + np.diag(off, -1)
    x, vecs = np.linalg.eigh(jacobi)
    nodes = (x + 1) / 2
    weights = monomial_moment(b, alpha) * vecs[0] ** 2
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return RadialRule(alpha=float(alpha), nodes=nodes, weights=weights, ypower=b)


def disk_quadrature(
    alpha: float,
    radial_nodes: int = DEFAULT_RADIAL_NODES,
    angular_nodes: int = DEFAULT_ANGULAR_NODES,
) -> DiskQuadrature:
    return DiskQuadrature(gauss_jacobi_rule(radial_nodes, float(alpha)), angular_nodes)


def circle_points(ys, n_theta: int) -> np.ndarray:
    """Grid ``sqrt(y) exp(2 pi i j / n_theta)`` with shape ``(len(ys), n_theta)``."""
    theta = 2 * np.pi * np.arange(n_theta) / n_theta
    return np.sqrt(np.asarray(ys, dtype=float))[..., None] * np.exp(1j * theta)


def circle_mean(f: AnalyticFunction, y: float, q: float, n_theta: int = DEFAULT_ANGULAR_NODES):
    """Normalized mean of ``|f|^q`` over the circle of radius ``sqrt(y)``.

    ``y`` may be an array, in which case one mean per entry is returned.
    """
    if n_theta < 4:
        raise ValueError("n_theta must be at least 4")
    # overflow surfaces as a non-finite integral and is reported there
    with np.errstate(over="ignore", invalid="ignore"):
        values = np.abs(f.eval(circle_points(y, n_theta))) ** q
        out = values.mean(axis=-1)
    return out if np.ndim(out) else float(out)


def split_origin_zero(f: AnalyticFunction) -> tuple[int, AnalyticFunction | None]:
    """Return ``(k, g)`` with ``f = z^k g``; ``g`` is None if ``f`` is identically zero."""
    if isinstance(f, PowerSeries):
        k = f.origin_order()
        if k > f.degree:
            return 0, None
        return k, f.shift_out(k) if k else f
    return 0, f


def _matching_quad(quad: DiskQuadrature, alpha: float) -> None:
    if not math.isclose(quad.alpha, alpha, rel_tol=0, abs_tol=1e-14):
        raise ValueError(
            f"quadrature was built for alpha={quad.alpha} but alpha={alpha} was requested"
        )


def bergman_integral(f: AnalyticFunction, p: float, alpha: float, quad: DiskQuadrature) -> float:
    """``int_D |f|^p dA_alpha``."""
    if not p > 0:
        raise ValueError("p must be positive")
    _matching_quad(quad, alpha)
    k, g = split_origin_zero(f)
    if g is None:
        return 0.0
    rule = quad.radial if k == 0 else gauss_jacobi_rule(quad.radial.n, quad.alpha, k * p / 2)
    means = circle_mean(g, rule.nodes, p, quad.angular_count)
    total = float(rule.weights @ means)
    if not math.isfinite(total):
        raise DivergenceError(f"integral of |f|^{p} against dA_{alpha} is not finite")
    return total


def bergman_norm(f: AnalyticFunction, p: float, alpha: float, quad: DiskQuadrature) -> float:
    return bergman_integral(f, p, alpha, quad) ** (1 / p)


def coefficient_norm2(f: AnalyticFunction, alpha: float, degree: int = 200) -> float:
    """``sum |a_n|^2 n! Gamma(alpha) / Gamma(n + alpha)`` over the Taylor coefficients."""
    coeffs = np.asarray(f.truncate_to_series(degree).coeffs)
    n = np.arange(len(coeffs))
    moments = np.exp(gammaln(n + 1) + gammaln(alpha) - gammaln(n + alpha))
    return float(np.sum(np.abs(coeffs) ** 2 * moments))
