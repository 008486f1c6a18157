"""Associated Legendre polynomials and Bessel functions, from scratch.

All evaluators are plain recurrence/series implementations chosen for
stability over the working range (degrees and orders up to a few hundred,
arguments up to ~1e4).  Every function accepts a scalar or an ndarray for
its real argument and is pure; negative orders are resolved by symmetry at
the API boundary so there is a single evaluation path per function.

Sign convention: Abramowitz & Stegun associated Legendre polynomials with
the Condon-Shortley phase, i.e. P_1^1(x) = -sqrt(1 - x^2).
"""

import math

import numpy as np

# Cylindrical Bessel regime split: power series below this argument (and
# below the monotone-term bound 2*sqrt(|m|+1)), Miller downward recurrence
# with normalization otherwise.  12.0 keeps worst-case series cancellation
# near 1e-11 relative.
SERIES_X_MAX = 12.0

# Spherical Bessel functions switch to a truncated Taylor series below this
# argument, avoiding 0/0 in the elementary forms.
SMALL_X = 1e-2

# Factorial ratios are evaluated in double precision; degrees above this
# overflow for large orders.
FACTORIAL_N_CAP = 170

_RESCALE_LIMIT = 1e250
_RESCALE = 1e-250


def _as_array(x, name):
    # Preserves extended-precision float inputs; everything else becomes
    # float64.  The quadrature oracle relies on this to evaluate integrands
    # in np.longdouble on high-cancellation cases.
    arr = np.asarray(x)
    if arr.dtype.kind != "f":
        arr = arr.astype(float)
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} requires finite arguments")
    return arr, arr.ndim == 0


def _maybe_scalar(values, scalar):
    return float(values[()]) if scalar else values


def assoc_legendre(n, m, x):
    """Associated Legendre polynomial P_n^m(x), A&S convention.

    Parameters
    ----------
    n : int
        Degree, n >= 0.
    m : int
        Order, -n <= m <= n.  Negative orders use
        P_n^{-m}(x) = (-1)^m (n-m)!/(n+m)! P_n^m(x).
    x : float or ndarray
        Argument in [-1, 1].

    Returns
    -------
    float or ndarray
        P_n^m(x) including the Condon-Shortley phase.
    """
    if n < 0:
        raise ValueError(f"degree must be non-negative (got n={n})")
    if abs(m) > n:
        raise ValueError(f"order must satisfy |m| <= n (got n={n}, m={m})")
    arr, scalar = _as_array(x, "assoc_legendre")
    if np.any(np.abs(arr) > 1.0):
        raise ValueError("argument must lie in [-1, 1]")
    if m < 0:
        scale = (1.0 if m % 2 == 0 else -1.0) / factorial_ratio(n, m)
        return _maybe_scalar(scale * _legendre_upward(n, -m, arr), scalar)
    return _maybe_scalar(_legendre_upward(n, m, arr), scalar)


def _legendre_upward(n, m, x):
    # Seed P_m^m = (-1)^m (2m-1)!! (1-x^2)^{m/2}, then raise the degree with
    # (n-m) P_n^m = x(2n-1) P_{n-1}^m - (n+m-1) P_{n-2}^m, stable for |x| <= 1.
    somx2 = np.sqrt((1.0 - x) * (1.0 + x))
    pmm = np.ones_like(x)
    fact = 1.0
    for _ in range(m):
        pmm = pmm * (-fact) * somx2
        fact += 2.0
    if n == m:
        return pmm
    pnm = (2.0 * m + 1.0) * x * pmm
    for k in range(m + 2, n + 1):
        pnm, pmm = ((2.0 * k - 1.0) * x * pnm - (k + m - 1.0) * pmm) / (k - m), pnm
    return pnm


def bessel_j(m, x):
    """Cylindrical Bessel function of the first kind, J_m(x), integer m.

    Power series for small arguments, Miller downward recurrence with the
    J_0 + 2 sum J_{2k} = 1 normalization for the rest.  Negative orders use
    J_{-m}(x) = (-1)^m J_m(x).
    """
    arr, scalar = _as_array(x, "bessel_j")
    mm = abs(int(m))
    sign = 1.0 if mm % 2 == 0 else -1.0
    signs = np.where(arr < 0.0, sign, 1.0) * (sign if m < 0 else 1.0)
    ax = np.abs(arr)

    out = np.empty_like(ax)
    series = ax < max(SERIES_X_MAX, 2.0 * math.sqrt(mm + 1.0))
    if series.any():
        out[series] = _bessel_series(mm, ax[series])
    rest = ~series
    if rest.any():
        out[rest] = _bessel_miller(mm, ax[rest])
    return _maybe_scalar(signs * out, scalar)


def _bessel_series(m, x):
    # sum_k (-1)^k (x/2)^{m+2k} / (k! (m+k)!); the argument is below the
    # regime threshold, so cancellation stays within a few digits.
    half = 0.5 * x
    term = np.ones_like(x)
    for i in range(1, m + 1):
        term = term * (half / i)
    total = term.copy()
    q = half * half
    tol = 0.01 * float(np.finfo(x.dtype).eps)
    for k in range(1, 1000):
        term = term * (-q / (k * (m + k)))
        total = total + term
        if np.all(np.abs(term) <= tol * np.abs(total) + 1e-300):
            break
    return total


def _bessel_miller(m, x):
    # Downward recurrence J_{k-1} = (2k/x) J_k - J_{k+1} from a start order
    # far enough above max(m, x) that the seed error has decayed below
    # extended precision, then normalize.
    big = max(m, int(math.ceil(float(np.max(x)))), 1)
    start = big + int(math.ceil(14.0 * big ** (1.0 / 3.0))) + 14
    inv_x = 1.0 / x
    jkp1 = np.zeros_like(x)
    jk = np.full_like(x, 1e-30)
    even_sum = np.zeros_like(x)
    val = np.zeros_like(x)
    for k in range(start, 0, -1):
        jk, jkp1 = 2.0 * k * inv_x * jk - jkp1, jk
        if k - 1 == m:
            val = jk.copy()
        if (k - 1) % 2 == 0 and k > 1:
            even_sum = even_sum + jk
        clip = np.abs(jk) > _RESCALE_LIMIT
        if clip.any():
            f = np.where(clip, _RESCALE, 1.0)
            jk = jk * f
            jkp1 = jkp1 * f
            even_sum = even_sum * f
            val = val * f
    norm = 2.0 * even_sum + jk  # jk holds the scaled J_0
    return val / norm


def spherical_bessel_j(n, x):
    """Spherical Bessel function of the first kind, j_n(x), n >= 0.

    Elementary j_0, j_1 plus upward recurrence when n <= x, downward
    recurrence normalized against j_0/j_1 when n > x, truncated Taylor
    series below ``SMALL_X``.  At x = 0 returns 1 for n = 0, else 0.
    """
    if n < 0:
        raise ValueError(f"order must be non-negative (got n={n})")
    arr, scalar = _as_array(x, "spherical_bessel_j")
    if np.any(arr < 0.0):
        raise ValueError("argument must be non-negative")

    out = np.empty_like(arr)
    small = arr < SMALL_X
    if small.any():
        out[small] = _sph_taylor(n, arr[small])
    up = (~small) & (arr >= n)
    if up.any():
        out[up] = _sph_upward(n, arr[up])
    down = (~small) & (arr < n)
    if down.any():
        out[down] = _sph_downward(n, arr[down])
    return _maybe_scalar(out, scalar)


def _sph_taylor(n, x, p=0):
    # j_n(x)/x^p = x^{n-p}/(2n+1)!! * sum_k (-x^2/2)^k / (k! (2n+3)...(2n+2k+1));
    # five terms reach full precision for x < SMALL_X.
    pref = np.ones_like(x)
    for k in range(1, n + 1):
        pref = pref * (x if k <= n - p else 1.0) / (2.0 * k + 1.0)
    q = 0.5 * x * x
    term = pref.copy()
    total = pref.copy()
    for k in range(1, 6):
        term = term * (-q / (k * (2.0 * n + 2.0 * k + 1.0)))
        total = total + term
    return total


def _sph_upward(n, x):
    j0 = np.sin(x) / x
    if n == 0:
        return j0
    j1 = (j0 - np.cos(x)) / x
    for k in range(1, n):
        j1, j0 = (2.0 * k + 1.0) / x * j1 - j0, j1
    return j1


def _sph_downward(n, x):
    start = n + int(math.ceil(14.0 * max(n, float(np.max(x))) ** (1.0 / 3.0))) + 14
    fkp1 = np.zeros_like(x)
    fk = np.full_like(x, 1e-30)
    val = np.zeros_like(x)
    f1 = np.zeros_like(x)
    for k in range(start, 0, -1):
        fk, fkp1 = (2.0 * k + 1.0) / x * fk - fkp1, fk
        if k - 1 == n:
            val = fk.copy()
        if k - 1 == 1:
            f1 = fk.copy()
        clip = np.abs(fk) > _RESCALE_LIMIT
        if clip.any():
            f = np.where(clip, _RESCALE, 1.0)
            fk = fk * f
            fkp1 = fkp1 * f
            val = val * f
            f1 = f1 * f
    # Normalize against whichever elementary value is larger in magnitude;
    # j_0 and j_1 have no common zeros.
    j0 = np.sin(x) / x
    j1 = (j0 - np.cos(x)) / x
    use0 = np.abs(j0) >= np.abs(j1)
    scale = np.where(use0, j0, j1) / np.where(use0, fk, f1)
    return val * scale


def spherical_bessel_j_prime(n, x):
    """Derivative j_n'(x) via (n j_{n-1} - (n+1) j_{n+1}) / (2n+1).

    The identity is free of divisions by x, so it is exact at x = 0:
    j_0'(0) = 0, j_1'(0) = 1/3, j_n'(0) = 0 for n >= 2.
    """
    if n < 0:
        raise ValueError(f"order must be non-negative (got n={n})")
    if n == 0:
        return -spherical_bessel_j(1, x)
    return (n * spherical_bessel_j(n - 1, x)
            - (n + 1) * spherical_bessel_j(n + 1, x)) / (2.0 * n + 1.0)


def spherical_bessel_ratio(n, p, x):
    """j_n(x) / x^p for 0 <= p <= n, finite at x = 0.

    The limit at zero is 0 for n > p and 1/(2n+1)!! for n = p.  Below
    ``SMALL_X`` the ratio is evaluated by the Taylor series of j_n to avoid
    0/0; elsewhere it is a direct division.
    """
    if n < 0:
        raise ValueError(f"order must be non-negative (got n={n})")
    if p < 0 or p > n:
        raise ValueError(f"power must satisfy 0 <= p <= n (got n={n}, p={p})")
    arr, scalar = _as_array(x, "spherical_bessel_ratio")
    if np.any(arr < 0.0):
        raise ValueError("argument must be non-negative")

    out = np.empty_like(arr)
    small = arr < SMALL_X
    if small.any():
        out[small] = _sph_taylor(n, arr[small], p)
    rest = ~small
    if rest.any():
        xr = arr[rest]
        out[rest] = np.asarray(spherical_bessel_j(n, xr)) / xr ** p
    return _maybe_scalar(out, scalar)


def factorial_ratio(n, m):
    """(n+|m|)! / (n-|m|)! as the running product (n-|m|+1)...(n+|m|).

    Never forms the two full factorials.  Degrees above ``FACTORIAL_N_CAP``
    (or products past the double range) raise OverflowError.
    """
    mm = abs(m)
    if n < 0 or mm > n:
        raise ValueError(f"require 0 <= |m| <= n (got n={n}, m={m})")
    if n > FACTORIAL_N_CAP:
        raise OverflowError(f"degree above cap {FACTORIAL_N_CAP} (got n={n})")
    out = 1.0
    for j in range(n - mm + 1, n + mm + 1):
        out *= j
    if math.isinf(out):
        raise OverflowError(f"factorial ratio overflows for n={n}, m={m}")
    return out
