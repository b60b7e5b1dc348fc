"""Dev scratch: Fourier-grid edge-convention study for criterion 5 geometry."""
import numpy as np
import scipy.linalg

import fqwell as fq
from fqwell.spectral import kinetic_matrix, SpectralGrid

p = fq.WellParameters(a=1.0, depth=16.0, d_alpha=1.0, hbar=1.0, alpha=2.0)
exact = [lv.energy for lv in fq.solve_spectrum(p).levels]
print("transcendental:", [f"{e:.8f}" for e in exact])


def run(n, L, edge):
    grid = SpectralGrid(box_half_length=L, n_points=n)
    h = kinetic_matrix(grid, p.d_alpha, p.alpha, p.hbar)
    x = grid.positions()
    v = np.where(np.abs(x) < p.a, 0.0, p.depth)
    on_edge = np.isclose(np.abs(x), p.a, rtol=0, atol=1e-12)
    if edge == "interior":
        v[on_edge] = 0.0
    elif edge == "exterior":
        v[on_edge] = p.depth
    elif edge == "mid":
        v[on_edge] = 0.5 * p.depth
    h[np.diag_indices_from(h)] += v
    h = 0.5 * (h + h.T)
    ev = scipy.linalg.eigh(h, eigvals_only=True)
    bound = ev[ev < p.depth * (1 - 1e-6)]
    gaps = [abs(b - e) / e for b, e in zip(bound, exact)]
    print(f"N={n:5d} L={L} edge={edge:9s} count={bound.size} "
          f"maxrel={max(gaps):.3e} E0={bound[0]:.8f}")
    return max(gaps)


for edge in ("interior", "mid", "exterior"):
    for n in (512, 1024, 2048):
        run(n, 8.0, edge)

# grid not containing a exactly: offset L slightly
print("--- a not on grid (L=8.123):")
for n in (1024, 2048):
    run(n, 8.123, "interior")
