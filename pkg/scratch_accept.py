"""Dev scratch: feasibility of acceptance criteria 2-5."""
import math
import time

import numpy as np

import fqwell as fq
from fqwell.spectrum import solve_spectrum_raw, count_levels

rng = np.random.default_rng(20250810)
n_wells = 1000
gs = np.exp(rng.uniform(math.log(1e-3), math.log(1e6), n_wells))
alphas = rng.uniform(1.001, 2.0, n_wells)

# --- criterion 2: residual suite timing
t0 = time.perf_counter()
total_levels = 0
worst_r1 = 0.0
worst_r2 = 0.0
for g, alpha in zip(gs, alphas):
    w = fq.DimensionlessWell(g=float(g), alpha=float(alpha))
    sig, eta = solve_spectrum_raw(w)
    total_levels += sig.size
    even = (np.arange(sig.size) % 2) == 0
    with np.errstate(divide="ignore"):
        t = np.tan(sig)
    r1 = np.abs(np.where(even, eta - sig * t, eta + sig / t))
    r2 = np.abs(np.power(eta, alpha) + np.power(sig, alpha) - g)
    worst_r1 = max(worst_r1, r1.max())
    m2 = r2.max() / max(1.0, g)
    worst_r2 = max(worst_r2, m2)
elapsed = time.perf_counter() - t0
print(f"criterion2: {n_wells} wells, {total_levels} levels, {elapsed:.2f}s")
print(f"  worst |parity residual| = {worst_r1:.3e}  (tol 1e-10)")
print(f"  worst |constraint residual|/max(1,G) = {worst_r2:.3e}  (tol 1e-10)")

# --- criterion 3: count law formula vs solver (cell-sample oracle later)
t0 = time.perf_counter()
bad = 0
for g, alpha in zip(gs, alphas):
    w = fq.DimensionlessWell(g=float(g), alpha=float(alpha))
    sig, eta = solve_spectrum_raw(w)
    ref = count_levels(w)
    if sig.size != ref:
        bad += 1
        print("  count mismatch:", g, alpha, sig.size, ref)
print(f"criterion3 count-law: {bad} mismatches, {time.perf_counter()-t0:.2f}s (resolve included)")

# --- criterion 4: infinite well limit
for alpha in (1.5, 2.0):
    w = fq.DimensionlessWell(g=1e8, alpha=alpha)
    sig, eta = solve_spectrum_raw(w)
    devs = [abs(sig[n] - (n + 1) * math.pi / 2) for n in range(10)]
    print(f"criterion4 alpha={alpha}: max dev over n<10 = {max(devs):.4e}; per-n:",
          " ".join(f"{d:.1e}" for d in devs))

# --- criterion 1 timing
w16 = fq.DimensionlessWell(g=16.0, alpha=2.0)
fq.solve_spectrum(w16)  # warm
t0 = time.perf_counter()
for _ in range(50):
    s = fq.solve_spectrum(w16)
print(f"criterion1: solve G=16 in {(time.perf_counter()-t0)/50*1e3:.3f} ms")

# --- criterion 5: spectral oracle at alpha=2
p = fq.WellParameters(a=1.0, depth=16.0, d_alpha=1.0, hbar=1.0, alpha=2.0)
grid = fq.SpectralGrid(box_half_length=8.0, n_points=1024)
t0 = time.perf_counter()
rep = fq.compare(p, grid)
print(f"criterion5: {time.perf_counter()-t0:.2f}s; counts {rep.transcendental_count} vs {rep.oracle_count}; "
      f"max rel gap {rep.max_rel_gap:.3e}")
for c in rep.pairs:
    print(f"  E={c.energy:.8f} oracle={c.oracle_energy:.8f} rel={c.rel_gap:.2e}")

# alpha=1.5 compare
p15 = fq.WellParameters(a=1.0, depth=16.0, d_alpha=1.0, hbar=1.0, alpha=1.5)
rep15 = fq.compare(p15, grid)
print(f"alpha=1.5 compare: counts {rep15.transcendental_count} vs {rep15.oracle_count}; max rel gap {rep15.max_rel_gap}")
