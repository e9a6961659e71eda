"""Seeded test-function corpora shared by the test suite and scripts."""

from .series import random_binomial_power, random_exp_linear, random_polynomial


def polynomial_corpus(n: int = 200, scale: float = 0.9, max_degree: int = 8):
    """``n`` polynomials with ``a_0 = 1``, degrees cycling through ``1..max_degree``."""
    return [random_polynomial(1 + seed % max_degree, seed, scale) for seed in range(n)]


def zero_free_corpus(n: int = 50):
    """``n`` binomial powers followed by ``n`` exponentials."""
    return [random_binomial_power(s) for s in range(n)] + [random_exp_linear(s) for s in range(n)]
