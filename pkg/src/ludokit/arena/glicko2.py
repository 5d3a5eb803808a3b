"""Glicko-2 rating updates over rating periods.

Implements the published recipe: convert to the internal scale, compute
the estimated variance v and improvement delta, solve for the new
volatility with the Illinois variant of regula falsi, inflate the
deviation, then update. Scores are 1 for a win, 0.5 for a draw, 0 for a
loss. An empty period only inflates RD.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

SCALE = 173.7178
DEFAULT_RATING = 1500.0
DEFAULT_RD = 350.0
DEFAULT_VOLATILITY = 0.06
DEFAULT_TAU = 0.5
_EPSILON = 1e-6
_MAX_STEPS = 100


@dataclass(frozen=True)
class Rating:
    rating: float = DEFAULT_RATING
    rd: float = DEFAULT_RD
    volatility: float = DEFAULT_VOLATILITY


def g(phi: float) -> float:
    return 1.0 / math.sqrt(1.0 + 3.0 * phi * phi / (math.pi * math.pi))


def expected(mu: float, mu_j: float, phi_j: float) -> float:
    return 1.0 / (1.0 + math.exp(-g(phi_j) * (mu - mu_j)))


def glicko2_update(rating: Rating, results: Sequence[tuple[Rating, float]],
                   tau: float = DEFAULT_TAU) -> Rating:
    """One rating-period update against (opponent, score) pairs."""
    if tau <= 0:
        raise ValueError("tau must be positive")
    mu = (rating.rating - DEFAULT_RATING) / SCALE
    phi = rating.rd / SCALE
    sigma = rating.volatility

    if not results:
        phi_star = math.sqrt(phi * phi + sigma * sigma)
        return Rating(rating.rating, phi_star * SCALE, sigma)

    v_inv = 0.0
    delta_sum = 0.0
    for opponent, score in results:
        mu_j = (opponent.rating - DEFAULT_RATING) / SCALE
        phi_j = opponent.rd / SCALE
        gj = g(phi_j)
        e = expected(mu, mu_j, phi_j)
        v_inv += gj * gj * e * (1.0 - e)
        delta_sum += gj * (score - e)
    v = 1.0 / v_inv
    delta = v * delta_sum

    sigma_new = _solve_volatility(delta, phi, v, sigma, tau)
    phi_star = math.sqrt(phi * phi + sigma_new * sigma_new)
    phi_new = 1.0 / math.sqrt(1.0 / (phi_star * phi_star) + 1.0 / v)
    mu_new = mu + phi_new * phi_new * delta_sum
    return Rating(mu_new * SCALE + DEFAULT_RATING, phi_new * SCALE, sigma_new)


def _solve_volatility(delta: float, phi: float, v: float, sigma: float,
                      tau: float) -> float:
    a = math.log(sigma * sigma)
    delta2 = delta * delta
    phi2v = phi * phi + v

    def f(x: float) -> float:
        ex = math.exp(x)
        num = ex * (delta2 - phi2v - ex)
        den = 2.0 * (phi2v + ex) ** 2
        return num / den - (x - a) / (tau * tau)

    big_a = a
    if delta2 > phi2v:
        big_b = math.log(delta2 - phi2v)
    else:
        k = 1
        while f(a - k * tau) < 0:
            k += 1
            if k > _MAX_STEPS:
                raise RuntimeError("volatility bracket search failed to converge")
        big_b = a - k * tau

    fa, fb = f(big_a), f(big_b)
    steps = 0
    while abs(big_b - big_a) > _EPSILON:
        steps += 1
        if steps > _MAX_STEPS:
            raise RuntimeError("volatility iteration failed to converge")
        big_c = big_a + (big_a - big_b) * fa / (fb - fa)
        fc = f(big_c)
        if fc * fb <= 0:
            big_a, fa = big_b, fb
        else:
            fa /= 2.0
        big_b, fb = big_c, fc
    return math.exp(big_a / 2.0)
