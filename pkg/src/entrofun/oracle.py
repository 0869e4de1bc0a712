"""High-accuracy direct evaluation of the integral functionals.

This is the ground truth the asymptotic expansions are tested against.
Each integral is split into segments delimited by the zeros of the
polynomial (where |p|^kappa has integrable kinks and p^2 log p^2 has
removable singularities) and integrated per segment with a tanh-sinh
(double-exponential) rule under progressive step halving.

All floating-point work happens after dividing the integrand by a log-space
scale close to its peak, so magnitudes stay near unity even where the true
values overflow doubles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .functional import Functional, Kind
from .logvalue import LogValue
from .orthopoly import (gegenbauer_value, hermite_value, hermite_zeros,
                        laguerre_value, polynomial_zeros)

TOL_MIN, TOL_MAX = 1e-13, 1e-6
_T_MAX = 6.1
_H0 = 0.5
_MAX_LEVEL = 11


class QuadratureError(RuntimeError):
    """Raised when the quadrature cannot certify the requested tolerance."""


@dataclass(frozen=True)
class QuadResult:
    value: LogValue
    abs_err_log: float
    n_evals: int
    segments: tuple[tuple[float, float], ...]


# ---------------------------------------------------------------------------
# tanh-sinh machinery
# ---------------------------------------------------------------------------

def _ts_level_nodes(level: int):
    """Abscissas for one refinement level on (-1, 1).

    Returns (u, one_minus_u, one_plus_u, w); level 0 holds the full coarse
    grid, higher levels only the new points at odd multiples of the step.
    """
    h = _H0 / 2 ** level
    if level == 0:
        ks = np.arange(-int(_T_MAX / h), int(_T_MAX / h) + 1)
        t = ks * h
    else:
        n = int(_T_MAX / h)
        ks = np.arange(-n, n + 1)
        t = ks * h
        t = t[np.abs(ks) % 2 == 1]
    v = 0.5 * math.pi * np.sinh(t)
    u = np.tanh(v)
    w = h * 0.5 * math.pi * np.cosh(t) / np.cosh(v) ** 2
    e = np.exp(-2.0 * np.abs(v))
    small = 2.0 * e / (1.0 + e)          # 1 - |u|
    one_minus = np.where(v >= 0, small, 2.0 - small)
    one_plus = np.where(v >= 0, 2.0 - small, small)
    keep = (w > 0.0) & (one_minus > 0.0) & (one_plus > 0.0)
    return u[keep], one_minus[keep], one_plus[keep], w[keep]


_NODE_CACHE: dict[int, tuple] = {}


def _nodes(level: int):
    if level not in _NODE_CACHE:
        _NODE_CACHE[level] = _ts_level_nodes(level)
    return _NODE_CACHE[level]


def _integrate_segment(f, lo: float, hi: float, tol_abs: float,
                       min_level: int = 3):
    """Tanh-sinh integration of f over [lo, hi] to absolute tolerance.

    ``f(x, dist_lo, dist_hi)`` receives node positions plus their exact
    distances to the segment endpoints and returns scaled integrand values.
    Returns (value, err_estimate, n_evals, converged).
    """
    half = 0.5 * (hi - lo)
    if half <= 0.0:
        return 0.0, 0.0, 0, True
    total = 0.0
    n_evals = 0
    prev = None
    err = math.inf
    for level in range(_MAX_LEVEL + 1):
        u, one_m, one_p, w = _nodes(level)
        dist_lo = half * one_p
        dist_hi = half * one_m
        x = lo + dist_lo
        vals = f(x, dist_lo, dist_hi)
        n_evals += x.size
        contrib = half * float(np.dot(w, vals))
        total = contrib if level == 0 else 0.5 * total + contrib
        if level >= 1 and prev is not None:
            err = abs(total - prev)
            if level >= min_level and err <= tol_abs:
                return total, err, n_evals, True
        prev = total
    return total, err, n_evals, False


def _refine_segments(seg_funcs, tol_rel: float):
    """Drive all segments to a collective relative tolerance."""
    n_seg = len(seg_funcs)
    ests = []
    n_evals = 0
    for f, lo, hi in seg_funcs:
        v, e, n, _ = _integrate_segment(f, lo, hi, tol_abs=math.inf, min_level=3)
        ests.append([v, e])
        n_evals += n
    scale = max(max(abs(v) for v, _ in ests), 1e-290)
    for round_ in range(4):
        total = math.fsum(v for v, _ in ests)
        target = 0.5 * tol_rel * max(abs(total), scale * 1e-4) / n_seg
        done = True
        for i, (f, lo, hi) in enumerate(seg_funcs):
            if ests[i][1] > target:
                v, e, n, ok = _integrate_segment(f, lo, hi, tol_abs=target,
                                                 min_level=4)
                ests[i] = [v, e]
                n_evals += n
                done = done and ok
        if done and all(e <= target for _, e in ests):
            break
    total = math.fsum(v for v, _ in ests)
    err = math.fsum(e for _, e in ests)
    return total, err, n_evals


# ---------------------------------------------------------------------------
# family-specific scaled integrands
# ---------------------------------------------------------------------------

def _log_abs_poly(p):
    out = np.full(p.shape, -np.inf)
    nz = p != 0.0
    out[nz] = np.log(np.abs(p[nz]))
    return out


def _laguerre_coeff_bound_log(m: int, alpha: float) -> float:
    """log of the sum of absolute Taylor coefficients of L_m^(alpha)."""
    terms = [math.lgamma(alpha + m + 1.0) - math.lgamma(alpha + k + 1.0)
             - math.lgamma(m - k + 1.0) - math.lgamma(k + 1.0)
             for k in range(m + 1)]
    top = max(terms)
    return top + math.log(math.fsum(math.exp(t - top) for t in terms))


def _lag_segments_and_scale(F: Functional):
    """Segments, log scale, and scaled integrand factory for the plain
    Laguerre families (weight x^(mu-1) e^(-lam x))."""
    m, alpha, mu, lam, kappa = F.m, F.alpha, F.mu, F.lam, F.kappa
    log_pref = (kappa * m * math.log(alpha) + math.lgamma(mu)
                - mu * math.log(lam) - kappa * math.lgamma(m + 1.0))
    b_log = _laguerre_coeff_bound_log(m, alpha)
    s_exp = mu + kappa * m
    x_hi = max(2.0 * (s_exp + 4.0) / lam, 10.0 / lam)
    log_target = math.log(TOL_MIN) + log_pref - 8.0

    def tail_log(x):
        extra = 0.0
        if F.kind.is_shannon:
            extra = math.log(2.0 * (b_log + m * math.log(max(x, 2.0))) + 10.0)
        return (kappa * b_log + math.log(2.0) + (s_exp - 1.0) * math.log(lam * x)
                - lam * x - s_exp * math.log(lam) + extra)

    while tail_log(x_hi) > log_target:
        x_hi *= 1.4
    zeros = []
    if m >= 1:
        zeros = [z for z in polynomial_zeros("laguerre", m, alpha).roots
                 if z < x_hi]
    bounds = [0.0] + zeros + [x_hi]

    def integrand(x, dist_lo, dist_hi):
        p = laguerre_value(m, alpha, x)
        logp = _log_abs_poly(p)
        core = (mu - 1.0) * np.log(x) - lam * x + kappa * logp - log_pref
        if F.kind.is_shannon:
            vals = np.exp(np.where(np.isfinite(core), core, -np.inf))
            return vals * np.where(np.isfinite(logp), 2.0 * logp, 0.0)
        return np.exp(core)

    return bounds, log_pref, integrand, math.exp(min(tail_log(x_hi) - log_pref, 0.0))


def _geg_segments_and_scale(F: Functional):
    m, alpha, a, b, c, d, kappa = F.m, F.alpha, F.a, F.b, F.c, F.d, F.kappa
    if c * alpha + a <= -1.0 or d * alpha + b <= -1.0:
        raise ValueError("Gegenbauer weight exponents must exceed -1 for an "
                         "integrable weight")
    zeros = []
    if m >= 1:
        zeros = list(polynomial_zeros("gegenbauer", m, alpha).roots)
    bounds = [-1.0] + zeros + [1.0]

    def log_core(x, one_minus_x, one_plus_x):
        p = gegenbauer_value(m, alpha, x)
        logp = _log_abs_poly(p)
        return ((c * alpha + a) * np.log(one_minus_x)
                + (d * alpha + b) * np.log(one_plus_x)
                + kappa * logp), logp

    # probe for the scale in log space
    probe_scale = -math.inf
    for lo, hi in zip(bounds[:-1], bounds[1:]):
        xs = np.linspace(lo, hi, 17)[1:-1]
        core, _ = log_core(xs, 1.0 - xs, 1.0 + xs)
        probe_scale = max(probe_scale, float(np.max(core)))
    log_pref = probe_scale

    def make_integrand(lo, hi):
        gap_hi = 1.0 - hi   # exact distance from segment top to +1
        gap_lo = 1.0 + lo   # exact distance from segment bottom to -1

        def integrand(x, dist_lo, dist_hi):
            one_minus_x = gap_hi + dist_hi
            one_plus_x = gap_lo + dist_lo
            core, logp = log_core(x, one_minus_x, one_plus_x)
            core = core - log_pref
            if F.kind.is_shannon:
                vals = np.exp(np.where(np.isfinite(core), core, -np.inf))
                return vals * np.where(np.isfinite(logp), 2.0 * logp, 0.0)
            return np.exp(core)
        return integrand

    return bounds, log_pref, make_integrand, 0.0


def _ext_segments_and_scale(F: Functional):
    """Extended family in the substituted variable u = x / alpha."""
    m, alpha, sigma, lam, kappa = F.m, F.alpha, F.sigma, F.lam, F.kappa
    u0 = 1.0 / lam
    b_log = _laguerre_coeff_bound_log(m, alpha)
    log_front = (alpha + sigma) * math.log(alpha) - alpha * (1.0 + math.log(lam))

    def s_phase(u):
        delta = u - u0
        return lam * delta - np.log1p(lam * delta)

    if lam == 1.0:
        poly_scale = kappa * (0.5 * m * math.log(alpha / 2.0)
                              - math.lgamma(m + 1.0))
    else:
        poly_scale = kappa * (m * math.log(alpha) + m * math.log(abs(1.0 - u0))
                              - math.lgamma(m + 1.0))
    log_pref = log_front + (sigma - 1.0) * math.log(u0) + poly_scale

    def bound_log(u):
        return (log_front - alpha * float(s_phase(np.array([u]))[0])
                + (sigma - 1.0) * math.log(u)
                + kappa * (b_log + m * math.log(max(alpha * u, 1.0)))
                - log_pref)

    u_hi = 2.0 * (u0 + 1.0)
    log_target = math.log(TOL_MIN) - 8.0
    while bound_log(u_hi) > log_target:
        u_hi *= 1.3
    zeros = []
    if m >= 1:
        zeros = [z / alpha for z in polynomial_zeros("laguerre", m, alpha).roots
                 if z / alpha < u_hi]
    bounds = [0.0] + zeros + [u_hi]

    def integrand(u, dist_lo, dist_hi):
        safe_u = np.where(u > 0.0, u, 1.0)
        p = laguerre_value(m, alpha, alpha * safe_u)
        logp = _log_abs_poly(p)
        with np.errstate(divide="ignore", invalid="ignore"):
            core = (log_front - alpha * s_phase(safe_u)
                    + (sigma - 1.0) * np.log(safe_u) + kappa * logp - log_pref)
        core = np.where(u > 0.0, core, -np.inf)
        core = np.where(np.isnan(core), -np.inf, core)
        if F.kind.is_shannon:
            vals = np.exp(np.where(np.isfinite(core), core, -np.inf))
            return vals * np.where(np.isfinite(logp), 2.0 * logp, 0.0)
        return np.exp(core)

    tail = math.exp(min(bound_log(u_hi), 0.0))
    return bounds, log_pref, integrand, tail


# ---------------------------------------------------------------------------
# public operations
# ---------------------------------------------------------------------------

def integrate_functional(F: Functional, tol_rel: float = 1e-10) -> QuadResult:
    """Evaluate the integral described by ``F`` to relative tolerance."""
    if not (TOL_MIN <= tol_rel <= TOL_MAX):
        raise ValueError(f"tol_rel must lie in [{TOL_MIN}, {TOL_MAX}]")
    if F.kind.is_gegenbauer:
        bounds, log_pref, make_integrand, tail = _geg_segments_and_scale(F)
        seg_funcs = [(make_integrand(lo, hi), lo, hi)
                     for lo, hi in zip(bounds[:-1], bounds[1:])]
    elif F.kind in (Kind.LAG_RENYI, Kind.LAG_SHANNON):
        bounds, log_pref, integrand, tail = _lag_segments_and_scale(F)
        seg_funcs = [(integrand, lo, hi)
                     for lo, hi in zip(bounds[:-1], bounds[1:])]
    else:
        bounds, log_pref, integrand, tail = _ext_segments_and_scale(F)
        seg_funcs = [(integrand, lo, hi)
                     for lo, hi in zip(bounds[:-1], bounds[1:])]

    total, err, n_evals = _refine_segments(seg_funcs, tol_rel)
    err += tail
    segments = tuple(zip(bounds[:-1], bounds[1:]))

    if total == 0.0:
        if F.kind.is_shannon and F.m == 0:
            return QuadResult(LogValue.zero(), -math.inf, n_evals, segments)
        raise QuadratureError(f"integral estimate vanished for {F}")
    if err > tol_rel * abs(total):
        raise QuadratureError(
            f"could not certify tolerance {tol_rel}: estimate {total} with "
            f"error {err} after {n_evals} evaluations")
    if not F.kind.is_shannon and total < 0.0:
        raise QuadratureError("negative estimate for a nonnegative integrand")
    value = LogValue(1 if total > 0 else -1, math.log(abs(total)) + log_pref)
    abs_err_log = (math.log(err) + log_pref) if err > 0.0 else -math.inf
    return QuadResult(value, abs_err_log, n_evals, segments)


def hermite_power_integral(m: int, kappa: float, alpha_scale: float,
                           tol_rel: float = 1e-11) -> QuadResult:
    """integral of exp(-alpha y^2 / 2) |H_m(y sqrt(alpha/2))|^kappa over R,
    computed in the substituted variable t = y sqrt(alpha/2)."""
    if kappa <= 0:
        raise ValueError("kappa must be positive")
    if alpha_scale <= 0:
        raise ValueError("alpha_scale must be positive")
    coeff_bound = math.log(math.fsum(
        abs(c) for c in np.polynomial.hermite.herm2poly([0.0] * m + [1.0])))
    t_hi = 2.0
    while (-t_hi * t_hi + kappa * (coeff_bound + m * math.log(max(t_hi, 1.0)))
           > math.log(TOL_MIN) - 8.0):
        t_hi *= 1.3
    zeros = list(hermite_zeros(m).roots) if m >= 1 else []
    bounds = [-t_hi] + zeros + [t_hi]

    # scale off the peak of the scaled integrand
    probe = np.linspace(-t_hi, t_hi, 201)
    hp = hermite_value(m, probe)
    with np.errstate(divide="ignore"):
        core = -probe ** 2 + kappa * _log_abs_poly(hp)
    log_pref = float(np.max(core))

    def integrand(t, dist_lo, dist_hi):
        p = hermite_value(m, t)
        logp = _log_abs_poly(p)
        return np.exp(-t * t + kappa * logp - log_pref)

    seg_funcs = [(integrand, lo, hi) for lo, hi in zip(bounds[:-1], bounds[1:])]
    total, err, n_evals = _refine_segments(seg_funcs, tol_rel)
    if total <= 0.0:
        raise QuadratureError("nonpositive estimate for a positive integrand")
    if err > tol_rel * total:
        raise QuadratureError(f"could not certify tolerance {tol_rel} for the "
                              f"Hermite power integral (err {err / total})")
    log_jac = 0.5 * (math.log(2.0) - math.log(alpha_scale))
    value = LogValue(1, math.log(total) + log_pref + log_jac)
    abs_err_log = (math.log(err) + log_pref + log_jac) if err > 0 else -math.inf
    return QuadResult(value, abs_err_log, n_evals,
                      tuple(zip(bounds[:-1], bounds[1:])))


def shannon_integrand_value(F: Functional, x: float) -> float:
    """The p^2 log p^2 factor of a Shannon-type integrand at a point.

    Returns the limit value 0 when x is a zero of the polynomial.
    """
    if not F.kind.is_shannon:
        raise ValueError("shannon_integrand_value applies to Shannon kinds only")
    if F.kind.is_gegenbauer:
        if not -1.0 <= x <= 1.0:
            raise ValueError("x outside [-1, 1]")
        p = gegenbauer_value(F.m, F.alpha, x)
    else:
        if x < 0.0:
            raise ValueError("x outside [0, infinity)")
        p = laguerre_value(F.m, F.alpha, x)
    if p == 0.0:
        return 0.0
    v = 2.0 * math.log(abs(p))
    try:
        return math.exp(v) * v
    except OverflowError:
        return math.inf * v
