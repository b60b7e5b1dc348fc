"""Independent reference implementations used to cross-check the package.

Nothing here reuses solver code: roots come from brute-force scanning plus
bisection, counts from sign evaluation, norms from adaptive quadrature, and
the alpha=2 dispersion laws are the textbook square-root formulas.
"""

import math

import numpy as np
from scipy import integrate

_SCAN_CHUNK = 1 << 21


def constraint(g, alpha, s):
    return np.power(np.maximum(g - np.power(s, alpha), 0.0), 1.0 / alpha)


def curve_minus_constraint(g, alpha, parity, s):
    with np.errstate(divide="ignore", invalid="ignore"):
        par = s * np.tan(s) if parity == "even" else -s / np.tan(s)
    return par - constraint(g, alpha, s)


def _scan_brackets(g, alpha, parity, step):
    """Sign-change brackets of the parity/constraint difference on [0, sigma_max]."""
    smax = g ** (1.0 / alpha)
    n = int(math.ceil(smax / step)) + 1
    brackets = []
    prev_s = prev_v = None
    for start in range(0, n, _SCAN_CHUNK):
        idx = np.arange(start, min(start + _SCAN_CHUNK, n))
        s = np.minimum(idx * step, smax)
        v = curve_minus_constraint(g, alpha, parity, s)
        if prev_v is not None:
            s = np.concatenate(([prev_s], s))
            v = np.concatenate(([prev_v], v))
        hits = np.flatnonzero((v[:-1] < 0.0) & (v[1:] >= 0.0))
        brackets.extend((float(s[i]), float(s[i + 1])) for i in hits)
        prev_s, prev_v = float(s[-1]), float(v[-1])
    return brackets


def scan_roots(g, alpha, step=1e-6, refine=1e-12):
    """Dense scan at the given step, then bisection of each bracket.

    Returns [(sigma, parity), ...] sorted by sigma; sigma is localized to
    within ``refine``.
    """
    found = []
    for parity in ("even", "odd"):
        for lo, hi in _scan_brackets(g, alpha, parity, step):
            while hi - lo > refine:
                mid = 0.5 * (lo + hi)
                if float(curve_minus_constraint(g, alpha, parity, np.float64(mid))) < 0.0:
                    lo = mid
                else:
                    hi = mid
            found.append((0.5 * (lo + hi), parity))
    found.sort()
    return found


def scan_count(g, alpha, step=1e-6):
    """Intersection count from the dense scan alone."""
    return sum(len(_scan_brackets(g, alpha, parity, step)) for parity in ("even", "odd"))


def cell_sign_count(g, alpha):
    """Intersection count by sign evaluation at the ends of each half-pi cell.

    The parity curve vanishes at a cell's closed end, so the sign there is
    negative exactly when the constraint curve is still positive; the other
    sign is measured just inside the pole (or at sigma_max when the cell is
    clipped).  Cheap enough for wells with millions of cells, unlike the
    dense scan.
    """
    smax = g ** (1.0 / alpha)
    half_pi = math.pi / 2.0
    j = np.arange(int(math.floor(2.0 * smax / math.pi)) + 2)
    lo = j * half_pi
    keep = lo < smax
    j, lo = j[keep], lo[keep]
    pole = (j + 1) * half_pi
    hi = np.minimum(pole - np.maximum(1e-9, 64.0 * np.spacing(pole)), smax)
    even = (j % 2) == 0
    with np.errstate(divide="ignore", invalid="ignore"):
        t = np.tan(hi)
        par = np.where(even, hi * t, -hi / t)
    f_hi = par - constraint(g, alpha, hi)
    left_negative = constraint(g, alpha, lo) > 0.0
    return int(np.count_nonzero(left_negative & (f_hi > 0.0) & (hi > lo)))


def kappa_textbook(m, depth, e, hbar):
    """alpha = 2 decay rate, sqrt(2m(U - E))/hbar."""
    return math.sqrt(2.0 * m * (depth - e)) / hbar


def k_textbook(m, e, hbar):
    """alpha = 2 wavenumber, sqrt(2mE)/hbar."""
    return math.sqrt(2.0 * m * e) / hbar


def quadrature_norm(fn):
    """Probability integral of an eigenfunction by adaptive quadrature.

    Integrates out to 20a/min(eta, 1), beyond which the tail mass is below
    exp(-38).
    """
    a = fn.a
    x_out = 20.0 * a / min(fn.level.eta, 1.0)
    total = 0.0
    for lo, hi in ((-x_out, -a), (-a, a), (a, x_out)):
        val, _err = integrate.quad(
            lambda x: fn.evaluate(x) ** 2, lo, hi, epsabs=1e-12, epsrel=1e-12, limit=200
        )
        total += val
    return total


def interior_node_count(fn, n_grid=4001):
    """Sign changes of the eigenfunction strictly inside the well."""
    x = np.linspace(-fn.a, fn.a, n_grid)[1:-1]
    v = fn.evaluate(x)
    s = np.sign(v)
    s = s[s != 0.0]
    return int(np.count_nonzero(s[1:] != s[:-1]))
