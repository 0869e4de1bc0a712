"""Laguerre, Gegenbauer and Hermite polynomials: values, derivatives, zeros.

Evaluation is by upward three-term recurrence in double precision, which is
well conditioned for the modest degrees (m <= 60) and large parameters this
package works in.  The value-only evaluators accept either a float or a
numpy array for the argument.

Zeros are located by bracketing sign changes on a scan of the classical
support and polishing with Newton steps; the scan grids combine a coarse
Chebyshev spread with a cluster at the known large-parameter accumulation
region of the roots.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

MAX_DEGREE = 60


@dataclass(frozen=True)
class PolyEval:
    value: float
    derivative: float


@dataclass(frozen=True)
class ZeroSet:
    roots: tuple[float, ...]
    degree: int


def _check_degree(m: int) -> None:
    if not isinstance(m, int) or m < 0:
        raise ValueError(f"degree must be a nonnegative integer, got {m}")
    if m > MAX_DEGREE:
        raise ValueError(f"degree {m} exceeds supported maximum {MAX_DEGREE}")


# ---------------------------------------------------------------------------
# Value-only evaluators (float or numpy array argument)
# ---------------------------------------------------------------------------

def laguerre_value(m: int, alpha: float, x):
    """L_m^(alpha)(x) by the three-term recurrence."""
    p_prev = x * 0.0 + 1.0
    if m == 0:
        return p_prev
    p = alpha + 1.0 - x
    for n in range(1, m):
        p, p_prev = ((2 * n + 1 + alpha - x) * p - (n + alpha) * p_prev) / (n + 1.0), p
    return p


def gegenbauer_value(m: int, alpha: float, x):
    """C_m^(alpha)(x) by the three-term recurrence."""
    p_prev = x * 0.0 + 1.0
    if m == 0:
        return p_prev
    p = 2.0 * alpha * x
    for n in range(2, m + 1):
        p, p_prev = (2.0 * (n - 1 + alpha) * x * p - (n + 2 * alpha - 2) * p_prev) / n, p
    return p


def hermite_value(m: int, x):
    """H_m(x) by the three-term recurrence."""
    p_prev = x * 0.0 + 1.0
    if m == 0:
        return p_prev
    p = 2.0 * x
    for n in range(1, m):
        p, p_prev = 2.0 * x * p - 2.0 * n * p_prev, p
    return p


def gegenbauer_explicit_sum(m: int, alpha: float, x: float) -> float:
    """C_m^(alpha)(x) from the explicit finite sum over (2x)^(m-2n)."""
    total = 0.0
    for n in range(m // 2 + 1):
        poch = 1.0
        for k in range(m - n):
            poch *= alpha + k
        total += (-1.0) ** n * poch / (math.factorial(n) * math.factorial(m - 2 * n)) \
            * (2.0 * x) ** (m - 2 * n)
    return total


# ---------------------------------------------------------------------------
# value + derivative pairs
# ---------------------------------------------------------------------------

def laguerre_eval(m: int, alpha: float, x: float) -> PolyEval:
    """Laguerre polynomial and its x-derivative, d/dx L_m = -L_{m-1}^(alpha+1)."""
    _check_degree(m)
    if alpha <= -1.0:
        raise ValueError(f"laguerre_eval requires alpha > -1, got {alpha}")
    value = laguerre_value(m, alpha, x)
    deriv = 0.0 if m == 0 else -laguerre_value(m - 1, alpha + 1.0, x)
    return PolyEval(value, deriv)


def gegenbauer_eval(m: int, alpha: float, x: float) -> PolyEval:
    """Gegenbauer polynomial and its x-derivative, d/dx C_m = 2 alpha C_{m-1}^(alpha+1)."""
    _check_degree(m)
    if alpha <= 0.0:
        raise ValueError(f"gegenbauer_eval requires alpha > 0, got {alpha}")
    value = gegenbauer_value(m, alpha, x)
    deriv = 0.0 if m == 0 else 2.0 * alpha * gegenbauer_value(m - 1, alpha + 1.0, x)
    return PolyEval(value, deriv)


def hermite_eval(m: int, x: float) -> PolyEval:
    """Hermite polynomial and its x-derivative, d/dx H_m = 2 m H_{m-1}."""
    _check_degree(m)
    value = hermite_value(m, x)
    deriv = 0.0 if m == 0 else 2.0 * m * hermite_value(m - 1, x)
    return PolyEval(value, deriv)


# ---------------------------------------------------------------------------
# Real zeros
# ---------------------------------------------------------------------------

def _chebyshev_points(lo: float, hi: float, n: int) -> list[float]:
    mid, half = 0.5 * (lo + hi), 0.5 * (hi - lo)
    return [mid - half * math.cos(math.pi * j / (n + 1)) for j in range(1, n + 1)]


def _scan_brackets(f, grid: list[float], need: int) -> list[tuple[float, float]]:
    vals = [f(x) for x in grid]
    brackets = []
    for i in range(len(grid) - 1):
        if vals[i] == 0.0:
            brackets.append((grid[i], grid[i]))
        elif vals[i] * vals[i + 1] < 0.0:
            brackets.append((grid[i], grid[i + 1]))
    if vals[-1] == 0.0:
        brackets.append((grid[-1], grid[-1]))
    return brackets[:need + 1]


def _polish_root(f, fp, lo: float, hi: float) -> float:
    """Bisection-guarded Newton refinement inside a sign-change bracket."""
    if lo == hi:
        return lo
    flo = f(lo)
    x = 0.5 * (lo + hi)
    for it in range(100):
        fx = f(x)
        if fx == 0.0:
            return x
        if (fx < 0) == (flo < 0):
            lo = x
        else:
            hi = x
        d = fp(x)
        step = fx / d if d != 0.0 else math.inf
        x_new = x - step
        if not (lo < x_new < hi):
            x_new = 0.5 * (lo + hi)
        if abs(x_new - x) <= 4e-16 * max(1.0, abs(x_new)):
            return x_new
        x = x_new
    raise RuntimeError(
        f"root polish failed to converge in 100 iterations: bracket "
        f"[{lo}, {hi}], last x={x}, f(x)={f(x)}")


def polynomial_zeros(family: str, m: int, alpha: float) -> ZeroSet:
    """All m real zeros of the degree-m Laguerre or Gegenbauer polynomial."""
    _check_degree(m)
    if m < 1:
        raise ValueError("polynomial_zeros requires m >= 1")
    if family == "laguerre":
        if alpha <= -1.0:
            raise ValueError("laguerre zeros require alpha > -1")
        f = lambda x: laguerre_value(m, alpha, x)
        fp = lambda x: 0.0 if m == 0 else -laguerre_value(m - 1, alpha + 1.0, x)
        a = max(alpha, 0.0)
        x_max = a + 2 * m * math.sqrt(max(a, 1.0)) + 4.0 * m * m + 10.0
        cluster_mid, cluster_scale = a, math.sqrt(2.0 * max(a, 1.0))
        lo_support = 0.0
        hi_support = None
    elif family == "gegenbauer":
        if alpha <= 0.0:
            raise ValueError("gegenbauer zeros require alpha > 0")
        f = lambda x: gegenbauer_value(m, alpha, x)
        fp = lambda x: 2.0 * alpha * gegenbauer_value(m - 1, alpha + 1.0, x)
        x_max = 1.0
        cluster_mid, cluster_scale = 0.0, 1.0 / math.sqrt(alpha + m)
        lo_support = -1.0
        hi_support = 1.0
    else:
        raise ValueError(f"unknown polynomial family {family!r}")

    u_max = math.sqrt(2.0 * m + 1.0) + 2.0
    n_pts = 8 * m + 33
    for attempt in range(24):
        if family == "laguerre":
            grid = _chebyshev_points(lo_support, x_max, n_pts)
        else:
            grid = _chebyshev_points(lo_support, hi_support, n_pts)
        cluster = [cluster_mid + cluster_scale * (-u_max + 2.0 * u_max * j / (n_pts - 1))
                   for j in range(n_pts)]
        lo_edge = lo_support
        hi_edge = x_max if family == "laguerre" else hi_support
        grid = sorted(set(x for x in grid + cluster if lo_edge < x < hi_edge))
        brackets = _scan_brackets(f, grid, m)
        if len(brackets) >= m:
            break
        n_pts *= 2
        if family == "laguerre":
            x_max *= 1.6
    else:
        raise RuntimeError(
            f"failed to bracket {m} zeros of {family} (alpha={alpha}); "
            f"found {len(brackets)} sign changes")

    roots = [_polish_root(f, fp, lo, hi) for lo, hi in brackets[:m]]
    roots.sort()
    for i in range(len(roots) - 1):
        if roots[i + 1] <= roots[i]:
            raise RuntimeError(f"duplicate zeros near {roots[i]} for {family} "
                               f"m={m}, alpha={alpha}")
    return ZeroSet(tuple(roots), m)


def hermite_zeros(m: int) -> ZeroSet:
    """All m real zeros of the Hermite polynomial H_m."""
    _check_degree(m)
    if m < 1:
        raise ValueError("hermite_zeros requires m >= 1")
    f = lambda x: hermite_value(m, x)
    fp = lambda x: 2.0 * m * hermite_value(m - 1, x)
    u_max = math.sqrt(2.0 * m + 1.0) + 1.0
    n_pts = 16 * m + 33
    for attempt in range(8):
        grid = [-u_max + 2.0 * u_max * j / (n_pts - 1) for j in range(n_pts)]
        brackets = _scan_brackets(f, grid, m)
        if len(brackets) >= m:
            break
        n_pts *= 2
    else:
        raise RuntimeError(f"failed to bracket {m} Hermite zeros")
    roots = sorted(_polish_root(f, fp, lo, hi) for lo, hi in brackets[:m])
    return ZeroSet(tuple(roots), m)
