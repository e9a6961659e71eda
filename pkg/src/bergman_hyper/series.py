"""Closed-form analytic functions on the unit disk.

Three representations are supported, each with exact first and second
derivatives:

- ``PowerSeries``: a polynomial ``sum a_n z^n``.
- ``BinomialPower``: ``C (1 - a z)^(-s)`` with ``|a| < 1``.
- ``ExpLinear``: ``c exp(b z)``.

All values are immutable and every method is vectorized over numpy arrays
of evaluation points.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np

__all__ = [
    "AnalyticFunction",
    "PowerSeries",
    "BinomialPower",
    "ExpLinear",
    "random_polynomial",
    "random_binomial_power",
    "random_exp_linear",
    "parse_function",
    "format_complex",
    "parse_complex",
]


class AnalyticFunction:
    """Common interface of the closed-form variants."""

    def eval(self, z):
        raise NotImplementedError

    def deriv_eval(self, z, order: int):
        raise NotImplementedError

    def dilate(self, r: float) -> "AnalyticFunction":
        raise NotImplementedError

    def rotate(self, phi: float) -> "AnalyticFunction":
        """Return ``z -> f(exp(i phi) z)``."""
        raise NotImplementedError

    def scale(self, c: complex) -> "AnalyticFunction":
        """Return ``z -> c f(z)``."""
        raise NotImplementedError

    def truncate_to_series(self, degree: int) -> "PowerSeries":
        raise NotImplementedError

    @property
    def literal(self) -> str:
        raise NotImplementedError

    @property
    def zero_free(self) -> bool:
        """True when the function has no zeros in the closed disk by construction."""
        return False

    def __call__(self, z):
        return self.eval(z)


def _check_radius(r: float) -> float:
    r = float(r)
    if not 0.0 <= r <= 1.0:
        raise ValueError(f"dilation radius must lie in [0, 1], got {r}")
    return r


@dataclass(frozen=True)
class PowerSeries(AnalyticFunction):
    coeffs: tuple[complex, ...]

    def __post_init__(self):
        coeffs = tuple(complex(c) for c in self.coeffs)
        if not coeffs:
            raise ValueError("a power series needs at least one coefficient")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def eval(self, z):
        z = np.asarray(z, dtype=complex)
        out = np.full(z.shape, self.coeffs[-1], dtype=complex)
        for c in reversed(self.coeffs[:-1]):
            out = out * z + c
        return out if out.ndim else complex(out)

    def deriv_eval(self, z, order: int):
        if order not in (1, 2):
            raise ValueError("order must be 1 or 2")
        return self._derivative(order).eval(z)

    def _derivative(self, order: int) -> "PowerSeries":
        coeffs = list(self.coeffs)
        for _ in range(order):
            coeffs = [n * c for n, c in enumerate(coeffs)][1:] or [0j]
        return PowerSeries(tuple(coeffs))

    def dilate(self, r: float) -> "PowerSeries":
        r = _check_radius(r)
        return PowerSeries(tuple(c * r**n for n, c in enumerate(self.coeffs)))

    def rotate(self, phi: float) -> "PowerSeries":
        return PowerSeries(
            tuple(c * cmath.exp(1j * n * phi) for n, c in enumerate(self.coeffs))
        )

    def scale(self, c: complex) -> "PowerSeries":
        return PowerSeries(tuple(c * a for a in self.coeffs))

    def truncate_to_series(self, degree: int) -> "PowerSeries":
        if degree < 0:
            raise ValueError("degree must be non-negative")
        coeffs = self.coeffs[: degree + 1]
        return PowerSeries(coeffs + (0j,) * (degree + 1 - len(coeffs)))

    def origin_order(self) -> int:
        """Order of the zero at the origin (``degree + 1`` if identically zero)."""
        for n, c in enumerate(self.coeffs):
            if c != 0:
                return n
        return len(self.coeffs)

    def shift_out(self, k: int) -> "PowerSeries":
        """Return ``f(z) / z^k``; the first ``k`` coefficients must vanish."""
        if any(c != 0 for c in self.coeffs[:k]):
            raise ValueError(f"series does not vanish to order {k} at 0")
        return PowerSeries(self.coeffs[k:] or (0j,))

    @property
    def literal(self) -> str:
        return "poly:" + ",".join(format_complex(c) for c in self.coeffs)


@dataclass(frozen=True)
class BinomialPower(AnalyticFunction):
    """``C (1 - a z)^(-s)``; zero-free on the closed disk when ``C != 0``."""

    C: complex
    a: complex
    s: float

    def __post_init__(self):
        object.__setattr__(self, "C", complex(self.C))
        object.__setattr__(self, "a", complex(self.a))
        object.__setattr__(self, "s", float(self.s))
        if not abs(self.a) < 1:
            raise ValueError(f"pole parameter must satisfy |a| < 1, got {self.a}")
        if not self.s > 0:
            raise ValueError(f"exponent must be positive, got {self.s}")

    def eval(self, z):
        z = np.asarray(z, dtype=complex)
        out = self.C * (1 - self.a * z) ** (-self.s)
        return out if out.ndim else complex(out)

    def deriv_eval(self, z, order: int):
        if order not in (1, 2):
            raise ValueError("order must be 1 or 2")
        z = np.asarray(z, dtype=complex)
        s, a = self.s, self.a
        if order == 1:
            out = self.C * s * a * (1 - a * z) ** (-s - 1)
        else:
            out = self.C * s * (s + 1) * a * a * (1 - a * z) ** (-s - 2)
        return out if out.ndim else complex(out)

    def dilate(self, r: float) -> "BinomialPower":
        r = _check_radius(r)
        return BinomialPower(self.C, self.a * r, self.s)

    def rotate(self, phi: float) -> "BinomialPower":
        return BinomialPower(self.C, self.a * cmath.exp(1j * phi), self.s)

    def scale(self, c: complex) -> "BinomialPower":
        return BinomialPower(c * self.C, self.a, self.s)

    def truncate_to_series(self, degree: int) -> PowerSeries:
        if degree < 0:
            raise ValueError("degree must be non-negative")
        coeffs = [self.C]
        for n in range(1, degree + 1):
            # rising factorial recurrence (s)_n / n!
            coeffs.append(coeffs[-1] * (self.s + n - 1) / n * self.a)
        return PowerSeries(tuple(coeffs))

    @property
    def zero_free(self) -> bool:
        return self.C != 0

    @property
    def literal(self) -> str:
        return f"binom:{format_complex(self.C)},{format_complex(self.a)},{self.s!r}"


@dataclass(frozen=True)
class ExpLinear(AnalyticFunction):
    """``c exp(b z)``."""

    c: complex
    b: complex

    def __post_init__(self):
        object.__setattr__(self, "c", complex(self.c))
        object.__setattr__(self, "b", complex(self.b))

    def eval(self, z):
        z = np.asarray(z, dtype=complex)
        out = self.c * np.exp(self.b * z)
        return out if out.ndim else complex(out)

    def deriv_eval(self, z, order: int):
        if order not in (1, 2):
            raise ValueError("order must be 1 or 2")
        return self.b**order * self.eval(z)

    def dilate(self, r: float) -> "ExpLinear":
        r = _check_radius(r)
        return ExpLinear(self.c, self.b * r)

    def rotate(self, phi: float) -> "ExpLinear":
        return ExpLinear(self.c, self.b * cmath.exp(1j * phi))

    def scale(self, c: complex) -> "ExpLinear":
        return ExpLinear(c * self.c, self.b)

    def truncate_to_series(self, degree: int) -> PowerSeries:
        if degree < 0:
            raise ValueError("degree must be non-negative")
        coeffs = [self.c]
        for n in range(1, degree + 1):
            coeffs.append(coeffs[-1] * self.b / n)
        return PowerSeries(tuple(coeffs))

    @property
    def zero_free(self) -> bool:
        return self.c != 0

    @property
    def literal(self) -> str:
        return f"exp:{format_complex(self.c)},{format_complex(self.b)}"


def random_polynomial(degree: int, seed: int, scale: float = 0.9) -> PowerSeries:
    """Polynomial with ``a_0 = 1`` and ``|a_n| <= scale``, deterministic in ``seed``."""
    if degree < 0:
        raise ValueError("degree must be non-negative")
    if scale <= 0:
        raise ValueError("scale must be positive")
    rng = np.random.default_rng(seed)
    moduli = scale * rng.uniform(0.0, 1.0, degree)
    phases = rng.uniform(0.0, 2 * np.pi, degree)
    return PowerSeries((1 + 0j,) + tuple(moduli * np.exp(1j * phases)))


def random_binomial_power(seed: int, max_pole: float = 0.8, max_exponent: float = 3.0) -> BinomialPower:
    """Zero-free ``C (1 - a z)^(-s)`` with ``|C|`` in [0.5, 2), ``|a| < max_pole``."""
    rng = np.random.default_rng(seed)
    C = rng.uniform(0.5, 2.0) * np.exp(2j * np.pi * rng.uniform())
    a = max_pole * rng.uniform() * np.exp(2j * np.pi * rng.uniform())
    return BinomialPower(C, a, rng.uniform(0.2, max_exponent))


def random_exp_linear(seed: int, max_rate: float = 2.0) -> ExpLinear:
    """Zero-free ``c exp(b z)`` with ``|c|`` in [0.5, 2), ``|b| < max_rate``."""
    rng = np.random.default_rng(seed)
    c = rng.uniform(0.5, 2.0) * np.exp(2j * np.pi * rng.uniform())
    b = max_rate * rng.uniform() * np.exp(2j * np.pi * rng.uniform())
    return ExpLinear(c, b)


# Function literals -------------------------------------------------------

def parse_complex(text: str) -> complex:
    """Parse ``1``, ``-0.25``, ``0.5i``, ``1+2i`` or ``-1e-3-2j``."""
    try:
        value = complex(text.strip().replace(" ", "").replace("i", "j"))
    except ValueError:
        raise ValueError(f"malformed complex literal {text!r}") from None
    if not cmath.isfinite(value):
        raise ValueError(f"complex literal {text!r} is not finite")
    return value


def format_complex(c: complex) -> str:
    c = complex(c)
    if c.imag == 0:
        return repr(c.real)
    if c.real == 0:
        return f"{c.imag!r}i"
    sign = "+" if c.imag >= 0 else ""
    return f"{c.real!r}{sign}{c.imag!r}i"


def parse_function(text: str) -> AnalyticFunction:
    """Parse ``poly:a0,a1,...``, ``binom:C,a,s`` or ``exp:c,b``."""
    kind, sep, body = text.partition(":")
    if not sep or not body:
        raise ValueError(f"function literal {text!r} must look like kind:args")
    parts = [p.strip() for p in body.split(",")]
    kind = kind.strip().lower()
    if kind == "poly":
        return PowerSeries(tuple(parse_complex(p) for p in parts))
    if kind == "binom":
        if len(parts) != 3:
            raise ValueError("binom literal needs exactly C,a,s")
        s = parse_complex(parts[2])
        if s.imag != 0:
            raise ValueError("binom exponent s must be real")
        return BinomialPower(parse_complex(parts[0]), parse_complex(parts[1]), s.real)
    if kind == "exp":
        if len(parts) != 2:
            raise ValueError("exp literal needs exactly c,b")
        return ExpLinear(parse_complex(parts[0]), parse_complex(parts[1]))
    raise ValueError(f"unknown function kind {kind!r}; expected poly, binom or exp")
