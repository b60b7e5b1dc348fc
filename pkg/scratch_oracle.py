"""Dev scratch: dense-scan oracle + feasibility checks before freezing test values."""
import math
import time

import numpy as np

import fqwell as fq


def scan_roots(g, alpha, step=1e-6, refine=1e-12):
    smax = g ** (1.0 / alpha)

    def f_even(s):
        par = s * np.tan(s)
        con = np.power(np.maximum(g - np.power(s, alpha), 0.0), 1.0 / alpha)
        return par - con

    def f_odd(s):
        par = -s / np.tan(s)
        con = np.power(np.maximum(g - np.power(s, alpha), 0.0), 1.0 / alpha)
        return par - con

    out = []
    for name, f in (("even", f_even), ("odd", f_odd)):
        n = int(math.ceil(smax / step)) + 1
        chunk = 1 << 21
        prev_val = None
        prev_s = None
        brackets = []
        for start in range(0, n, chunk):
            idx = np.arange(start, min(start + chunk, n))
            s = np.minimum(idx * step, smax)
            with np.errstate(divide="ignore", invalid="ignore"):
                v = f(s)
            if prev_val is not None:
                v2 = np.concatenate(([prev_val], v))
                s2 = np.concatenate(([prev_s], s))
            else:
                v2, s2 = v, s
            hit = np.flatnonzero((v2[:-1] < 0) & (v2[1:] >= 0))
            brackets.extend((s2[i], s2[i + 1]) for i in hit)
            prev_val = float(v[-1])
            prev_s = float(s[-1])
        for lo, hi in brackets:
            while hi - lo > refine:
                mid = 0.5 * (lo + hi)
                if f(np.float64(mid)) < 0:
                    lo = mid
                else:
                    hi = mid
            out.append((0.5 * (lo + hi), name))
    out.sort()
    return out


t0 = time.perf_counter()
roots = scan_roots(16.0, 2.0)
print("scan G=16 a=2: %.2fs" % (time.perf_counter() - t0))
for r, p in roots:
    print(f"  {p:5s} {r:.12f}")

w = fq.DimensionlessWell(g=16.0, alpha=2.0)
spec = fq.solve_spectrum(w)
for lv, (r, p) in zip(spec.levels, roots):
    print("diff vs solver:", lv.sigma - r, lv.parity.value == p)

roots15 = scan_roots(16.0, 1.5)
print("alpha=1.5 G=16 oracle count:", len(roots15))
spec15 = fq.solve_spectrum(fq.DimensionlessWell(g=16.0, alpha=1.5))
print("solver count:", len(spec15.levels), "formula:", fq.count_levels(fq.DimensionlessWell(g=16.0, alpha=1.5)))
for lv, (r, p) in zip(spec15.levels, roots15):
    print(f"  {lv.sigma:.12f} oracle {r:.12f} diff {lv.sigma-r:.2e} {lv.parity.value==p}")
