"""Coefficient ladders for the large-parameter expansions.

Each ladder exists in two forms wherever a closed form is known: the printed
low-order polynomial in the parameters, and the generic series-engine route
that extends it to arbitrary order.  The tests cross-validate the two.

Notation used throughout: ``m`` is the polynomial degree, ``alpha`` the large
parameter, ``kappa`` the power of the polynomial in the integrand, ``mu``
and ``lam`` the weight parameters of the Laguerre-type integrals, ``sigma``
the shift in the extended (mu = alpha + sigma) family, and ``a, b, c, d``
the exponent parameters of the Gegenbauer-type integrals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any

from .closedforms import HyperTerm, hyper_terminating
from .series import DEFAULT_ORDER, Series, saddle_series, series_pow


@dataclass(frozen=True)
class CoeffLadder:
    """A k-indexed coefficient list with its parameter snapshot."""

    family: str
    values: tuple[float, ...]
    alpha_dependent: bool
    params: dict[str, Any] = field(default_factory=dict)


def _poch_float(a: float, n: int) -> float:
    out = 1.0
    for k in range(n):
        out *= a + k
    return out


def _falling(m: int, n: int) -> float:
    """m! / (m-n)! as a float; zero when n > m."""
    if n > m:
        return 0.0
    out = 1.0
    for k in range(n):
        out *= m - k
    return out


# ---------------------------------------------------------------------------
# Laguerre Taylor coefficients f_n(m; alpha) and the degree-ordered g_n
# ---------------------------------------------------------------------------

def f_sequence(m: int, alpha: float, n_max: int) -> list[float]:
    """f_n(m; alpha) = L_n^(alpha+m-n)(alpha) via the three-term recurrence
    (n+1) f_{n+1} = (m-n) f_n - alpha f_{n-1}, seeded f_0 = 1, f_1 = m."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    f = [1.0]
    if n_max >= 1:
        f.append(float(m))
    for n in range(1, n_max):
        f.append(((m - n) * f[n] - alpha * f[n - 1]) / (n + 1.0))
    return f


def f_value_kummer(n: int, m: int, alpha: float) -> float:
    """f_n(m; alpha) from the Kummer representation: a cross-check route."""
    binom = _poch_float(alpha + m - n + 1.0, n) / math.factorial(n)
    f1 = hyper_terminating(HyperTerm(
        upper=(-float(n),),
        lower=(alpha + m + 1.0 - n,),
        argument=alpha,
    ))
    return binom * f1.to_float()


def g_coeffs(m: int, t: float) -> list[float]:
    """First three coefficients of the degree-ordered rearrangement of
    L_m^(alpha)(alpha t) about its leading term alpha^m (1-t)^m / m!."""
    if t == 1.0:
        raise ValueError("g_coeffs is singular at t = 1")
    if m == 0:
        return [1.0, 0.0, 0.0]
    one_mt = 1.0 - t
    g1 = m * (m + 1.0 - 2.0 * m * t) / (2.0 * one_mt ** 2)
    g2 = (m * (m - 1.0)
          * (3.0 * m * m * (1.0 - 2.0 * t) ** 2
             - m * (12.0 * t * t + 8.0 * t - 5.0)
             + 16.0 * t + 2.0)
          / (24.0 * one_mt ** 4))
    return [1.0, g1, g2]


# ---------------------------------------------------------------------------
# Watson's-lemma ladder for the plain Laguerre integral
# ---------------------------------------------------------------------------

def lag_A_coeffs(kappa: float, m: int, alpha: float, j_max: int) -> list[float]:
    """A_j: coefficients of the kappa-th power of the bracketed Taylor series
    of L_m^(alpha)(alpha t), expanded in 1/(alpha (1-t))."""
    if kappa <= 0:
        raise ValueError("kappa must be positive")
    f = f_sequence(m, alpha, min(m, j_max))
    base = [(_falling(m, n) * f[n]) if n <= m else 0.0 for n in range(j_max + 1)]
    return list(series_pow(Series.from_coeffs(base, j_max), kappa).coeffs)


def lag_B(j: int, n: int, mu: float, lam: float, kappa: float, m: int) -> float:
    """Watson's-lemma moment coefficient (mu)_n (j - kappa m)_n / (n! lam^n)."""
    if lam <= 0 or mu <= 0:
        raise ValueError("lag_B requires mu > 0 and lam > 0")
    return (_poch_float(mu, n) * _poch_float(j - kappa * m, n)
            / (math.factorial(n) * lam ** n))


def lag_C_ladder(mu: float, lam: float, kappa: float, m: int, alpha: float,
                 k_max: int) -> CoeffLadder:
    """C_k(alpha) = sum_{j<=k} A_j B_{j,k-j}; alpha-dependent ladder."""
    A = lag_A_coeffs(kappa, m, alpha, k_max)
    values = tuple(
        math.fsum(A[j] * lag_B(j, k - j, mu, lam, kappa, m) for j in range(k + 1))
        for k in range(k_max + 1))
    return CoeffLadder("lag_renyi", values, alpha_dependent=True,
                       params={"m": m, "kappa": kappa, "mu": mu, "lam": lam,
                               "alpha": alpha})


def lag_D(k: int, mu: float, lam: float, kappa: float, m: int) -> float:
    """Printed closed forms of the alpha-free ladder, available for k <= 2."""
    if k < 0 or k > 2:
        raise ValueError("closed forms are printed for k <= 2 only; use the "
                         "numeric C-ladder route for higher order")
    if k == 0:
        return 1.0
    if k == 1:
        return kappa * m * (-2.0 * mu + m * lam + lam) / (2.0 * lam)
    ka, kb = _lag_D2_split(mu, lam, m)
    return kappa * m * (kappa * ka + kb) / (24.0 * lam ** 2)


def _lag_D2_split(mu: float, lam: float, m: int) -> tuple[float, float]:
    """D_2 = kappa m (kappa * ka + kb) / (24 lam^2), split by kappa power."""
    ka = (-12.0 * mu * lam * m * m - 12.0 * mu * lam * m
          + 3.0 * m ** 3 * lam ** 2 + 12.0 * mu ** 2 * m + 12.0 * mu * m
          + 6.0 * lam ** 2 * m * m + 3.0 * lam ** 2 * m)
    kb = (24.0 * mu * lam - 4.0 * m * m * lam ** 2 - 6.0 * m * lam ** 2
          - 12.0 * mu ** 2 - 12.0 * mu - 2.0 * lam ** 2)
    return ka, kb


def lag_D_kappa_derivative(k: int, mu: float, lam: float, kappa: float,
                           m: int) -> float:
    """Analytic d/d(kappa) of the printed lag_D ladder, k <= 2."""
    if k < 0 or k > 2:
        raise ValueError("analytic kappa-derivatives available for k <= 2 only")
    if k == 0:
        return 0.0
    if k == 1:
        return m * (-2.0 * mu + m * lam + lam) / (2.0 * lam)
    ka, kb = _lag_D2_split(mu, lam, m)
    return m * (2.0 * kappa * ka + kb) / (24.0 * lam ** 2)


# ---------------------------------------------------------------------------
# Gegenbauer ladders (asymmetric saddle, c != d)
# ---------------------------------------------------------------------------

def geg_f_sequence(m: int, alpha: float, n_max: int) -> list[float]:
    """The O(1) coefficients of the inverse-square reordering of the explicit
    Gegenbauer sum: f_n = (-1)^n alpha^n m! (alpha)_{m-n} /
    (4^n n! (m-2n)! (alpha)_m); zero once 2n exceeds m."""
    out = []
    for n in range(n_max + 1):
        if 2 * n > m:
            out.append(0.0)
            continue
        ratio = 1.0
        for k in range(m - n, m):
            ratio *= alpha + k
        val = ((-1.0) ** n * alpha ** n * math.factorial(m)
               / (4.0 ** n * math.factorial(n) * math.factorial(m - 2 * n))
               / ratio)
        out.append(val)
    return out


def geg_A_coeffs(kappa: float, m: int, alpha: float, j_max: int) -> list[float]:
    """A_j for the Gegenbauer integrand power: the kappa-th power of the
    inverse-square series, expanded in 1/(alpha x^2)."""
    if kappa <= 0:
        raise ValueError("kappa must be positive")
    base = Series.from_coeffs(geg_f_sequence(m, alpha, j_max), j_max)
    return list(series_pow(base, kappa).coeffs)


def geg_saddle_x(c: float, d: float, order: int = DEFAULT_ORDER):
    """Saddle location x_m = (d-c)/(d+c) and the series s(y) = x(y) - x_m
    solving the quadratic normalisation of the exponent phase."""
    if c <= 0 or d <= 0:
        raise ValueError("c and d must be positive")
    x_m = (d - c) / (d + c)
    beta = (c + d) / (2.0 * c)
    gamma = (c + d) / (2.0 * d)
    phi = Series.from_coeffs(
        [0.0, 0.0] + [(c * beta ** k + d * (-gamma) ** k) / k
                      for k in range(2, order + 3)])
    return x_m, saddle_series(phi)


def geg_laplace_c(j: int, a: float, b: float, c: float, d: float,
                  kappa: float, m: int, order: int = DEFAULT_ORDER) -> Series:
    """Amplitude series (1-x)^a (1+x)^b x^(kappa m - 2j) dx/dy in powers of y,
    about the interior saddle; requires 0 < c < d."""
    if not (0.0 < c < d):
        raise ValueError("geg_laplace_c requires 0 < c < d; the c > d case "
                         "follows from swapping (a, c) with (b, d)")
    x_m, s = geg_saddle_x(c, d, order + 1)
    w = s.order
    w1 = (Series.constant(1.0 - x_m, w) - s) * (1.0 / (1.0 - x_m))
    w2 = (Series.constant(1.0 + x_m, w) + s) * (1.0 / (1.0 + x_m))
    wx = (Series.constant(x_m, w) + s) * (1.0 / x_m)
    amp = (series_pow(w1, a) * series_pow(w2, b)
           * series_pow(wx, kappa * m - 2.0 * j) * s.deriv())
    const = ((1.0 - x_m) ** a * (1.0 + x_m) ** b
             * x_m ** (kappa * m - 2.0 * j))
    return (amp * const).truncate(order)


def _double_factorial_odd(k: int) -> float:
    out = 1.0
    for v in range(1, 2 * k, 2):
        out *= v
    return out


def geg_C_ladder(a: float, b: float, c: float, d: float, kappa: float, m: int,
                 alpha: float, k_max: int) -> CoeffLadder:
    """C_k(alpha): Gaussian-moment assembly of the per-j amplitudes weighted
    by the A_j ladder."""
    A = geg_A_coeffs(kappa, m, alpha, k_max)
    amps = [geg_laplace_c(j, a, b, c, d, kappa, m, order=2 * (k_max - j))
            for j in range(k_max + 1)]
    values = []
    for k in range(k_max + 1):
        values.append(math.fsum(
            A[j] * amps[j].coeffs[2 * (k - j)] * _double_factorial_odd(k - j)
            for j in range(k + 1)))
    return CoeffLadder("geg_asym", tuple(values), alpha_dependent=True,
                       params={"m": m, "kappa": kappa, "a": a, "b": b,
                               "c": c, "d": d, "alpha": alpha})


def geg_D0(a: float, b: float, c: float, d: float, kappa: float, m: int) -> float:
    """Leading alpha-free coefficient of the asymmetric Gegenbauer expansion."""
    if not (0.0 < c < d):
        raise ValueError("geg_D0 requires 0 < c < d")
    a1 = 2.0 * math.sqrt(c * d / (c + d) ** 3)
    return (a1 * (2.0 * c / (c + d)) ** a * (2.0 * d / (c + d)) ** b
            * ((d - c) / (c + d)) ** (kappa * m))


def geg_sym_D1(a: float, b: float, m: int) -> float:
    """First correction of the symmetric (c = d = 1, kappa = 2) expansion."""
    return (2.0 * (2 * m + 1) * ((a - b) ** 2 - (a + b))
            + 2.0 * m * m - 14.0 * m - 3.0) / 8.0


# ---------------------------------------------------------------------------
# Hermite-type expansion coefficients
# ---------------------------------------------------------------------------

def geg_hermite_coeffs(m: int, x: float) -> tuple[list[float], list[float]]:
    """(p_k, q_k) for k = 0..1 of the Hermite-form representation of
    C_m^(alpha)(x / sqrt(alpha)); coefficients are alpha-free."""
    p0 = 1.0
    q0 = x * (2.0 * x * x + 2.0 * m - 1.0) / 4.0
    p1 = m * (m - 2.0 * x * x - 2.0) / 8.0
    q1 = x * (3.0 + 24.0 * m - 42.0 * m * m + 12.0 * m ** 3
              + (400.0 * m - 48.0 * m * m - 640.0) * x * x
              + (1280.0 - 384.0 * m) * x ** 4) / 192.0
    return [p0, p1], [q0, q1]


def lag_hermite_coeffs(m: int, alpha: float, x: float) -> tuple[list[float], list[float]]:
    """(c_k, d_k) for k = 0..1 of the Hermite-form representation of
    L_m^(alpha)(alpha x); these retain alpha dependence."""
    c0 = 1.0
    d0 = 1.0
    c1 = m * (alpha * (x - 1.0) - 1.0)
    d1 = (3.0 + 7.0 * alpha - 3.0 * m - 9.0 * alpha * x
          + 3.0 * alpha ** 2 * (x - 1.0) ** 2 - 4.0 * alpha * m
          + 6.0 * alpha * x * m) / 3.0
    return [c0, c1], [d0, d1]


# ---------------------------------------------------------------------------
# Extended Laguerre (mu = alpha + sigma) ladder, lambda != 1
# ---------------------------------------------------------------------------

def ext_saddle_x(lam: float, order: int = DEFAULT_ORDER):
    """Saddle x_0 = 1/lam of lam*x - log x - 1 and the series x(y) - x_0."""
    if lam <= 0:
        raise ValueError("lam must be positive")
    phi = Series.from_coeffs(
        [0.0, 0.0] + [((-1.0) ** k) * lam ** k / k for k in range(2, order + 3)])
    return 1.0 / lam, saddle_series(phi)


def ext_lag_amplitude(sigma: float, lam: float, kappa: float, m: int,
                      alpha: float, order: int = DEFAULT_ORDER) -> Series:
    """Normalised Laplace amplitude of the extended Laguerre integral.

    The full amplitude is x^sigma y/(lam x - 1) |L|^kappa; this routine
    strips the constant prefactor x_0^sigma |1-x_0|^(kappa m)
    alpha^(kappa m)/(m!)^kappa so that the returned constant term is the
    alpha-dependent C_0(alpha) = 1 + O(1/alpha).
    """
    if lam <= 0:
        raise ValueError("lam must be positive")
    if lam == 1.0:
        raise ValueError("lambda = 1 is the symmetric branch; no Laplace "
                         "amplitude of this form exists there")
    x0, s = ext_saddle_x(lam, order + 1)
    w = s.order
    x_ratio = (Series.constant(x0, w) + s) * (1.0 / x0)
    wser = (Series.constant(1.0 - x0, w) - s) * (1.0 / (1.0 - x0))
    dxdy = s.deriv()
    f = f_sequence(m, alpha, m)
    inv = series_pow(wser, -1.0) * (1.0 / (alpha * (1.0 - x0)))
    t = Series.constant(1.0, w)
    inv_n = Series.constant(1.0, w)
    for n in range(1, m + 1):
        inv_n = inv_n * inv
        t = t + inv_n * (_falling(m, n) * f[n])
    if t.coeffs[0] <= 0.0:
        raise ValueError(f"alpha = {alpha} is too small for the lambda != 1 "
                         f"expansion at m={m} (bracket series not positive)")
    amp = (series_pow(x_ratio, sigma - 1.0) * series_pow(wser, kappa * m)
           * series_pow(t, kappa) * dxdy) * (1.0 / x0)
    return amp.truncate(order)


def ext_lag_D(k: int, sigma: float, lam: float, kappa: float, m: int) -> float:
    """Closed forms of the extended-Laguerre ladder, k <= 1.

    The first correction, grouped by powers of kappa*m, is

        D_1 = [ (6 sigma^2 - 6 sigma + 1)(lam-1)^2
                + kappa m (6 lam^2 - 12 sigma lam + 12 sigma - 6)
                + 6 (kappa m)^2 + 6 kappa m^2 lam (lam - 2) ] / (12 (lam-1)^2).

    At kappa=2, sigma=1 this reduces to the hypergeometric special case
    (24 m^2 + lam^2 - 2 lam + 1 + 12 m^2 lam^2 - 24 m^2 lam + 12 m lam^2
    - 24 m lam + 12 m) / (12 (lam-1)^2), and it agrees with the numeric
    Laplace pipeline for general parameters.
    """
    if lam == 1.0:
        raise ValueError("the lambda = 1 case has no ladder of this form")
    if k < 0 or k > 1:
        raise ValueError("closed forms are available for k <= 1 only")
    if k == 0:
        return 1.0
    km = kappa * m
    num = ((6.0 * sigma ** 2 - 6.0 * sigma + 1.0) * (lam - 1.0) ** 2
           + km * (6.0 * lam ** 2 - 12.0 * sigma * lam + 12.0 * sigma - 6.0)
           + 6.0 * km ** 2
           + 6.0 * kappa * m * m * lam * (lam - 2.0))
    return num / (12.0 * (lam - 1.0) ** 2)


def ext_lag_D_kappa_derivative(k: int, sigma: float, lam: float, kappa: float,
                               m: int) -> float:
    """Analytic d/d(kappa) of the extended-Laguerre ladder, k <= 1."""
    if lam == 1.0:
        raise ValueError("the lambda = 1 case has no ladder of this form")
    if k < 0 or k > 1:
        raise ValueError("analytic kappa-derivatives available for k <= 1 only")
    if k == 0:
        return 0.0
    num = (m * (6.0 * lam ** 2 - 12.0 * sigma * lam + 12.0 * sigma - 6.0)
           + 12.0 * kappa * m * m
           + 6.0 * m * m * lam * (lam - 2.0))
    return num / (12.0 * (lam - 1.0) ** 2)
