"""Shared draw helpers for the test suite.

Dyadic draws produce coefficients of the form (a + b*i) / 8 with small
integers a, b.  Sums and products of such numbers are exact in double
precision, so algebraic laws (multiplicativity, linearity) can be asserted
with literal equality instead of a tolerance.
"""

import numpy as np

from quiveralg import (
    CorrespondenceElement,
    PathPolynomial,
    Quiver,
    TwoDimRep,
    enumerate_paths,
)


def random_quiver(rng, max_n=3, max_entry=2, min_n=1):
    n = int(rng.integers(min_n, max_n + 1))
    c = rng.integers(0, max_entry + 1, size=(n, n))
    return Quiver(c.tolist())


def random_element(q, rng, scale=1.0):
    return CorrespondenceElement.random(q, rng, scale=scale)


def random_polynomial(q, rng, max_degree=2, terms=4, scale=1.0):
    paths = enumerate_paths(q, max_degree)
    k = min(terms, len(paths))
    picks = rng.choice(len(paths), size=k, replace=False)
    poly = PathPolynomial.zero(q)
    for idx in picks:
        coeff = scale * complex(rng.standard_normal(), rng.standard_normal())
        poly = poly + PathPolynomial.monomial(q, paths[int(idx)], coeff)
    return poly


def dyadic_scalar(rng, denom=8, span=8):
    re = int(rng.integers(-span, span + 1))
    im = int(rng.integers(-span, span + 1))
    return complex(re, im) / denom


def dyadic_polynomial(q, rng, max_degree=2, terms=4):
    paths = enumerate_paths(q, max_degree)
    k = min(terms, len(paths))
    picks = rng.choice(len(paths), size=k, replace=False)
    poly = PathPolynomial.zero(q)
    for idx in picks:
        poly = poly + PathPolynomial.monomial(q, paths[int(idx)], dyadic_scalar(rng))
    return poly


def dyadic_ball_vector(rng, dim, strict=False, denom=8, span=4):
    """Dyadic entries with exactly representable squared norm <= 1 (or < 1)."""
    if dim == 0:
        return np.zeros(0, dtype=complex)
    for _ in range(10000):
        v = np.array([dyadic_scalar(rng, denom, span) for _ in range(dim)])
        sq = float(np.sum(v.real**2 + v.imag**2))
        if (sq < 1.0) if strict else (sq <= 1.0):
            return v
    raise AssertionError("rejection sampling failed to land in the ball")


def two_block_quiver(d_ii, d_ij, d_jj):
    """n = 2 quiver with d_ii loops at 0, d_ij arrows 1 -> 0, d_jj loops at 1."""
    return Quiver([[d_ii, d_ij], [0, d_jj]])


def random_unit_vector(rng, dim):
    if dim == 0:
        return np.zeros(0, dtype=complex)
    v = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return v / np.linalg.norm(v)


def random_contractive_params(rng, d_i, d_g, d_j, boundary=False):
    """Draw (lam_i, lam_j, gamma) with ||gamma||^2 <= 1 - ||lam_i||^2.

    With boundary=True the inequality is saturated (up to rounding).
    """
    lam_i = random_unit_vector(rng, d_i) * (rng.uniform(0.0, 0.95) if d_i else 0.0)
    lam_j = random_unit_vector(rng, d_j) * (rng.uniform(0.0, 0.95) if d_j else 0.0)
    t_max = np.sqrt(max(1.0 - float(np.linalg.norm(lam_i)) ** 2, 0.0))
    radius = t_max if boundary else rng.uniform(0.0, 1.0) * t_max
    gamma = random_unit_vector(rng, d_g) * (radius if d_g else 0.0)
    return lam_i, lam_j, gamma


def random_rep(rng, d_i=2, d_g=2, d_j=2, boundary=False):
    q = two_block_quiver(d_i, d_g, d_j)
    lam_i, lam_j, gamma = random_contractive_params(rng, d_i, d_g, d_j, boundary)
    return TwoDimRep(q, 0, 1, lam_i, lam_j, gamma)
