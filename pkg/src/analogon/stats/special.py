"""Distribution tail probabilities built from first principles.

Everything here reduces to the regularized incomplete beta function
(continued-fraction evaluation) and direct quadrature of the studentized
range distribution, so no statistical tables or external libraries are
required at runtime.
"""

from __future__ import annotations

import math

_BETAINC_TOL = 1e-12
_BETAINC_MAX_ITER = 500
_TINY = 1e-300


def log_beta(a: float, b: float) -> float:
    return math.lgamma(a) + math.lgamma(b) - math.lgamma(a + b)


def _betacf(x: float, a: float, b: float) -> float:
    """Continued fraction for the incomplete beta (modified Lentz method)."""
    qab = a + b
    qap = a + 1.0
    qam = a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < _TINY:
        d = _TINY
    d = 1.0 / d
    h = d
    for m in range(1, _BETAINC_MAX_ITER + 1):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < _TINY:
            d = _TINY
        c = 1.0 + aa / c
        if abs(c) < _TINY:
            c = _TINY
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < _TINY:
            d = _TINY
        c = 1.0 + aa / c
        if abs(c) < _TINY:
            c = _TINY
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _BETAINC_TOL:
            return h
    raise ArithmeticError(f"incomplete beta did not converge for x={x}, a={a}, b={b}")


def betainc_regularized(x: float, a: float, b: float) -> float:
    """Regularized incomplete beta I_x(a, b) for x in [0, 1], a, b > 0."""
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"x must be in [0, 1], got {x}")
    if a <= 0.0 or b <= 0.0:
        raise ValueError("a and b must be positive")
    if x == 0.0:
        return 0.0
    if x == 1.0:
        return 1.0
    front = math.exp(a * math.log(x) + b * math.log(1.0 - x) - log_beta(a, b))
    # The continued fraction converges quickly below the pivot; use the
    # symmetry I_x(a,b) = 1 - I_{1-x}(b,a) above it.
    if x < (a + 1.0) / (a + b + 2.0):
        return front * _betacf(x, a, b) / a
    return 1.0 - front * _betacf(1.0 - x, b, a) / b


def f_sf(f: float, df1: float, df2: float) -> float:
    """Upper tail P(F > f) of the F distribution.

    Evaluates through whichever of x and 1-x is small, so neither tail
    loses precision to cancellation.
    """
    if f <= 0.0:
        return 1.0
    if math.isinf(f):
        return 0.0
    x = df2 / (df2 + df1 * f)
    y = df1 * f / (df2 + df1 * f)
    if x <= y:
        return betainc_regularized(x, df2 / 2.0, df1 / 2.0)
    return 1.0 - betainc_regularized(y, df1 / 2.0, df2 / 2.0)


def t_sf_two_sided(t: float, df: float) -> float:
    """Two-sided P(|T| > |t|) of Student's t distribution."""
    if math.isinf(t):
        return 0.0
    t2 = t * t
    x = df / (df + t2)
    y = t2 / (df + t2)
    if x <= y:
        return betainc_regularized(x, df / 2.0, 0.5)
    return 1.0 - betainc_regularized(y, 0.5, df / 2.0)


_SQRT2 = math.sqrt(2.0)
_INV_SQRT_2PI = 1.0 / math.sqrt(2.0 * math.pi)


def normal_cdf(z: float) -> float:
    return 0.5 * (1.0 + math.erf(z / _SQRT2))


def normal_pdf(z: float) -> float:
    return _INV_SQRT_2PI * math.exp(-0.5 * z * z)


def _gauss_legendre(n: int) -> tuple[list[float], list[float]]:
    # numpy supplies the nodes; the alternative is hardcoding the tables.
    import numpy as np

    nodes, weights = np.polynomial.legendre.leggauss(n)
    return nodes.tolist(), weights.tolist()


_INNER_NODES, _INNER_WEIGHTS = _gauss_legendre(64)
_OUTER_NODES, _OUTER_WEIGHTS = _gauss_legendre(48)

_Z_LO, _Z_HI = -8.5, 8.5
_INNER_PANELS = 4


def _range_cdf(x: float, k: int) -> float:
    """P(range of k independent standard normals <= x)."""
    if x <= 0.0:
        return 0.0
    total = 0.0
    panel_width = (_Z_HI - _Z_LO) / _INNER_PANELS
    for panel in range(_INNER_PANELS):
        lo = _Z_LO + panel * panel_width
        half = panel_width / 2.0
        mid = lo + half
        for node, weight in zip(_INNER_NODES, _INNER_WEIGHTS):
            z = mid + half * node
            inner = normal_cdf(z) - normal_cdf(z - x)
            if inner <= 0.0:
                continue
            total += weight * half * normal_pdf(z) * inner ** (k - 1)
    return min(1.0, k * total)


def studentized_range_cdf(q: float, k: int, df: float) -> float:
    """P(Q <= q) for the studentized range with k groups and df error dof.

    Integrates the conditional range CDF against the density of the scale
    factor s = sqrt(chi^2_df / df) with composite Gauss-Legendre quadrature.
    """
    if k < 2:
        raise ValueError("studentized range needs k >= 2")
    if df < 1:
        raise ValueError("df must be >= 1")
    if q <= 0.0:
        return 0.0
    # Scale density: f(s) = df^(df/2) s^(df-1) exp(-df s^2 / 2) / (2^(df/2-1) Gamma(df/2))
    log_norm = (df / 2.0) * math.log(df) - (df / 2.0 - 1.0) * math.log(2.0) \
        - math.lgamma(df / 2.0)
    spread = 9.0 / math.sqrt(2.0 * df)
    s_lo = max(0.0, 1.0 - spread)
    s_hi = 1.0 + max(spread, 9.0 / math.sqrt(df))
    total = 0.0
    panels = 6
    panel_width = (s_hi - s_lo) / panels
    for panel in range(panels):
        lo = s_lo + panel * panel_width
        half = panel_width / 2.0
        mid = lo + half
        for node, weight in zip(_OUTER_NODES, _OUTER_WEIGHTS):
            s = mid + half * node
            if s <= 0.0:
                continue
            log_density = log_norm + (df - 1.0) * math.log(s) - df * s * s / 2.0
            if log_density < -700.0:
                continue
            total += weight * half * math.exp(log_density) * _range_cdf(q * s, k)
    return min(1.0, total)


def studentized_range_crit(alpha: float, k: int, df: float, tol: float = 1e-3) -> float:
    """Upper-alpha critical value of the studentized range, by bisection."""
    if not 0.0 < alpha < 1.0:
        raise ValueError("alpha must be in (0, 1)")
    target = 1.0 - alpha
    lo, hi = 1e-6, 10.0
    while studentized_range_cdf(hi, k, df) < target:
        hi *= 2.0
        if hi > 1e4:
            raise ArithmeticError("studentized range critical value out of range")
    while hi - lo > tol:
        mid = (lo + hi) / 2.0
        if studentized_range_cdf(mid, k, df) < target:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2.0
