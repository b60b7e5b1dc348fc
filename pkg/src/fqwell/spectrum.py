"""Bound-state roots of the even/odd matching equations under the strength constraint.

A level of parity even/odd solves

    eta = sigma * tan(sigma)        (even)
    eta = -sigma / tan(sigma)       (odd)

together with ``eta**alpha + sigma**alpha = G``.  Between consecutive poles
of tan/cot each parity curve rises monotonically from 0 to +inf while the
constraint curve ``eta = (G - sigma**alpha)**(1/alpha)`` falls monotonically
to 0 at ``sigma_max = G**(1/alpha)``, so every half-pi cell whose lower edge
lies below sigma_max hosts exactly one intersection.  The solver walks those
cells in order and pins each root by bisection; intersections at eta = 0
(E = U, threshold rather than bound) are excluded.

Roots are refined until the bracket endpoints are adjacent floats and the
endpoint with the smaller constraint defect is kept, so the returned
(sigma, eta) pair is the best representable solution of the pair of
equations.  ``eta`` is stored as the parity-curve value at the root, which
makes the parity residual vanish identically.
"""

import math
from dataclasses import dataclass

import numpy as np

from .core import (
    ConvergenceError,
    DimensionlessWell,
    DomainError,
    EnergyLevel,
    Parity,
    WellParameters,
    nondimensionalize,
)

HALF_PI = math.pi / 2.0

# Inset applied at tan/cot poles before bracketing; roots provably sit at a
# distance >= sigma/sigma_max >> inset from the pole, while the float placement
# of the pole itself is only good to ~1 ulp.
_POLE_INSET = 1e-12 * math.pi
_ULP_INSET = 16.0

_MAX_ITER = 200
_CHUNK = 1 << 17


@dataclass(frozen=True)
class Branch:
    """One monotone half-pi cell of a parity curve, clipped at sigma_max.

    Even branch n spans [n*pi, n*pi + pi/2); odd branch n spans
    (n*pi + pi/2, (n+1)*pi].  Each hosts at most one level.
    """

    n: int
    parity: Parity
    lo: float
    hi: float

    @property
    def level_index(self) -> int:
        """Global ordinal of the level hosted by this branch."""
        return 2 * self.n + (0 if self.parity is Parity.EVEN else 1)


@dataclass(frozen=True)
class Spectrum:
    """All bound levels of a well, ordered by increasing sigma."""

    well: DimensionlessWell
    levels: tuple[EnergyLevel, ...]
    sigma_max: float

    def __len__(self) -> int:
        return len(self.levels)

    def sigmas(self) -> np.ndarray:
        return np.array([lv.sigma for lv in self.levels])

    def etas(self) -> np.ndarray:
        return np.array([lv.eta for lv in self.levels])


def parity_curve(parity: Parity, sigma):
    """Evaluate sigma*tan(sigma) (even) or -sigma/tan(sigma) (odd).

    Accepts scalars or arrays; poles yield +/-inf rather than raising.
    """
    sig = np.asarray(sigma, dtype=float)
    with np.errstate(divide="ignore", invalid="ignore"):
        t = np.tan(sig)
        out = sig * t if parity is Parity.EVEN else -sig / t
    return float(out) if np.isscalar(sigma) else out


def constraint_eta(w: DimensionlessWell, sigma):
    """Constraint-curve value eta = (G - sigma**alpha)**(1/alpha).

    Strictly decreasing from G**(1/alpha) at sigma = 0 to 0 at sigma_max.
    Arguments beyond sigma_max are rejected except for round-off slop
    (1e-9 relative), which clamps to eta = 0.
    """
    sig = np.asarray(sigma, dtype=float)
    if np.any(sig < 0.0):
        raise DomainError("sigma must be nonnegative")
    deficit = w.g - np.power(sig, w.alpha)
    slop = 1e-9 * max(1.0, w.g)
    if np.any(deficit < -slop):
        raise DomainError(
            f"sigma exceeds sigma_max={w.sigma_max!r} beyond tolerance"
        )
    eta = np.power(np.maximum(deficit, 0.0), 1.0 / w.alpha)
    return float(eta) if np.isscalar(sigma) else eta


def _parity_values(sig: np.ndarray, even: np.ndarray) -> np.ndarray:
    with np.errstate(divide="ignore", invalid="ignore"):
        t = np.tan(sig)
        return np.where(even, sig * t, -sig / t)


def _constraint_defect(sig, even, g, alpha):
    """Signed defect parity(sigma)**alpha + sigma**alpha - G.

    Same sign as parity(sigma) - constraint_eta(sigma) and strictly
    increasing along a branch; its zero is the level.  Tan noise just above
    the closed endpoint can push the parity value a hair below zero, where
    the true curve is nonnegative, so it is clamped.
    """
    par = np.maximum(_parity_values(sig, even), 0.0)
    return np.power(par, alpha) + np.power(sig, alpha) - g


def _take(v, idx):
    """Index arrays, pass scalars through (g or alpha may be either)."""
    return v[idx] if np.ndim(v) else v


def _bank_defect(even_bank: bool, x, g, alpha):
    """Constraint defect for a single-parity batch (see _constraint_defect)."""
    with np.errstate(divide="ignore", invalid="ignore"):
        t = np.tan(x)
        par = x * t if even_bank else -x / t
    par = np.maximum(par, 0.0)
    return np.power(par, alpha) + np.power(x, alpha) - g


def _refine_bank(even_bank: bool, g, alpha, lo, hi):
    """Bisect one parity bank to adjacent floats; return the best-float roots.

    The inner loop works on preallocated buffers and compacts converged
    entries away, so the cost is one tan and two pow passes per element per
    iteration with no temporaries.
    """
    size = lo.size
    a = lo.copy()
    b = hi.copy()
    pos = np.arange(size)
    res_a = np.empty(size)
    res_b = np.empty(size)
    mid = np.empty(size)
    t = np.empty(size)
    par = np.empty(size)
    tmp = np.empty(size)
    gg, al = g, alpha
    m = size
    with np.errstate(divide="ignore", invalid="ignore"):
        for it in range(_MAX_ITER + 1):
            if m == 0:
                break
            if it == _MAX_ITER:
                raise ConvergenceError("bisection failed to reach adjacent floats")
            am, bm, mm = a[:m], b[:m], mid[:m]
            np.add(am, bm, out=mm)
            mm *= 0.5
            sep = (mm > am) & (mm < bm)
            if not sep.all():
                done = np.flatnonzero(~sep)
                res_a[pos[done]] = am[done]
                res_b[pos[done]] = bm[done]
                keep = np.flatnonzero(sep)
                k = keep.size
                a[:k] = am[keep]
                b[:k] = bm[keep]
                mid[:k] = mm[keep]
                pos[:k] = pos[:m][keep]
                if np.ndim(gg):
                    gg = gg[keep]
                if np.ndim(al):
                    al = al[keep]
                m = k
                if m == 0:
                    break
                am, bm, mm = a[:m], b[:m], mid[:m]
            tm, pm, um = t[:m], par[:m], tmp[:m]
            np.tan(mm, out=tm)
            if even_bank:
                np.multiply(mm, tm, out=pm)
            else:
                np.divide(mm, tm, out=pm)
                np.negative(pm, out=pm)
            np.maximum(pm, 0.0, out=pm)
            np.power(pm, al, out=pm)
            np.power(mm, al, out=um)
            pm += um
            pm -= gg
            neg = pm < 0.0
            np.copyto(am, mm, where=neg)
            np.copyto(bm, mm, where=~neg)
    # res_a/res_b bracket each root with no float strictly between them;
    # keep whichever satisfies the constraint better.
    da = np.abs(_bank_defect(even_bank, res_a, g, alpha))
    db = np.abs(_bank_defect(even_bank, res_b, g, alpha))
    return np.where(db < da, res_b, res_a)


def _solve_cells(g, alpha, lo, hi_eff, even):
    """Vectorized root solve on pre-bracketed monotone cells.

    ``g`` and ``alpha`` may be scalars or per-cell arrays, so cells of many
    wells can run in one pass.  Returns (sigma, eta, ok); entries with ok
    False found no sign change (possible only for threshold-degenerate
    clipped cells).
    """
    lo = np.asarray(lo, dtype=float)
    hi_eff = np.asarray(hi_eff, dtype=float)
    even = np.asarray(even, dtype=bool)

    # The parity curve vanishes at the closed endpoint, so the defect there
    # is lo**alpha - G < 0 by construction; no tan evaluation needed.
    f_lo = np.power(lo, alpha) - g
    f_hi = _constraint_defect(hi_eff, even, g, alpha)
    ok = (f_lo < 0.0) & (f_hi > 0.0) & (hi_eff > lo)

    # Warm bracket: in cell-local coordinates d = sigma - lo both parity
    # curves equal sigma*tan(d), so the root solves d = arctan(eta/sigma)
    # and the monotone endpoint ratios bound it.  Each warm endpoint is
    # verified by sign and dropped back to the structural bracket if float
    # rounding pushed it across the root.
    inv_alpha = 1.0 / np.asarray(alpha, dtype=float)
    eta_lo = np.power(np.maximum(g - np.power(lo, alpha), 0.0), inv_alpha)
    eta_hi = np.power(np.maximum(g - np.power(hi_eff, alpha), 0.0), inv_alpha)
    with np.errstate(divide="ignore", invalid="ignore"):
        wl = lo + np.arctan(eta_hi / hi_eff)
        wh = np.where(lo > 0.0, lo + np.arctan(eta_lo / np.maximum(lo, 1.0)), hi_eff)
    wl = np.clip(wl, lo, hi_eff)
    wh = np.clip(wh, wl, hi_eff)
    a0 = np.where(_constraint_defect(wl, even, g, alpha) < 0.0, wl, lo)
    b0 = np.where(_constraint_defect(wh, even, g, alpha) > 0.0, wh, hi_eff)
    inverted = ~(a0 < b0)
    if inverted.any():
        a0 = np.where(inverted, lo, a0)
        b0 = np.where(inverted, hi_eff, b0)

    sig = np.full(lo.shape, np.nan)
    for bank_even in (True, False):
        bank = np.flatnonzero(ok & (even if bank_even else ~even))
        if bank.size:
            sig[bank] = _refine_bank(
                bank_even, _take(g, bank), _take(alpha, bank), a0[bank], b0[bank]
            )
    eta = np.full(lo.shape, np.nan)
    sel = np.flatnonzero(ok)
    if sel.size:
        eta[sel] = np.maximum(_parity_values(sig[sel], even[sel]), 0.0)
    return sig, eta, ok


def _cell_geometry(j: np.ndarray, sigma_max: float):
    """Bracket [lo, hi_eff] and parity mask for global cell ordinals j."""
    jf = j.astype(float)
    lo = jf * HALF_PI
    pole = (jf + 1.0) * HALF_PI
    inset = np.maximum(_POLE_INSET, _ULP_INSET * np.spacing(pole))
    hi_eff = np.minimum(pole - inset, sigma_max)
    even = (j % 2) == 0
    return lo, hi_eff, even


def count_levels(w: DimensionlessWell) -> int:
    """Number of bound levels: floor(2*sigma_max/pi) + 1, threshold states excluded.

    A cell contributes a level iff its lower edge lies strictly below
    sigma_max; when sigma_max falls exactly on a cell edge the intersection
    there would have eta = 0 (E = U) and is not bound.  The count is kept
    float-consistent with the comparisons used by branch enumeration.
    """
    smax = w.sigma_max
    j = int(math.floor(2.0 * smax / math.pi))
    while j > 0 and j * HALF_PI >= smax:
        j -= 1
    while (j + 1) * HALF_PI < smax:
        j += 1
    return j + 1


def iter_branches(w: DimensionlessWell):
    """Yield the branches hosting levels, in increasing sigma order."""
    smax = w.sigma_max
    j = 0
    while j * HALF_PI < smax:
        parity = Parity.EVEN if j % 2 == 0 else Parity.ODD
        yield Branch(
            n=j // 2,
            parity=parity,
            lo=j * HALF_PI,
            hi=min((j + 1) * HALF_PI, smax),
        )
        j += 1


def enumerate_branches(w: DimensionlessWell) -> list[Branch]:
    """Materialized list of branches; prefer :func:`iter_branches` for huge G."""
    return list(iter_branches(w))


def solve_branch(w: DimensionlessWell, b: Branch) -> EnergyLevel | None:
    """Unique level on one branch, or None if no sign change exists there."""
    j = np.array([b.level_index])
    lo, hi_eff, even = _cell_geometry(j, w.sigma_max)
    sig, eta, ok = _solve_cells(w.g, w.alpha, lo, hi_eff, even)
    if not ok[0]:
        return None
    return EnergyLevel(
        index=b.level_index, parity=b.parity, sigma=float(sig[0]), eta=float(eta[0])
    )


def solve_spectrum_raw(w: DimensionlessWell) -> tuple[np.ndarray, np.ndarray]:
    """All roots of a well as flat (sigma, eta) arrays, ordered by sigma.

    This is the bulk path behind :func:`solve_spectrum`; it materializes no
    per-level objects and handles wells with millions of levels.
    """
    total = count_levels(w)
    sig_out = np.empty(total)
    eta_out = np.empty(total)
    pos = 0
    for start in range(0, total, _CHUNK):
        j = np.arange(start, min(start + _CHUNK, total))
        lo, hi_eff, even = _cell_geometry(j, w.sigma_max)
        sig, eta, ok = _solve_cells(w.g, w.alpha, lo, hi_eff, even)
        if not ok.all():
            sig, eta = sig[ok], eta[ok]
        n = sig.size
        sig_out[pos : pos + n] = sig
        eta_out[pos : pos + n] = eta
        pos += n
    return sig_out[:pos], eta_out[:pos]


def solve_many(wells) -> list[tuple[np.ndarray, np.ndarray]]:
    """Solve a batch of wells in one vectorized pass.

    All cells of all wells are concatenated and refined together, which
    amortizes the per-iteration dispatch cost; useful for sweeps and large
    randomized suites.  Returns one (sigma, eta) array pair per well, in
    input order, bit-identical to per-well :func:`solve_spectrum_raw` calls.
    """
    wells = list(wells)
    counts = np.array([count_levels(w) for w in wells], dtype=np.int64)
    offsets = np.concatenate(([0], np.cumsum(counts)))
    total = int(offsets[-1])
    if total == 0:
        return [(np.empty(0), np.empty(0)) for _ in wells]
    j = np.concatenate([np.arange(c) for c in counts])
    g = np.repeat([w.g for w in wells], counts)
    alpha = np.repeat([w.alpha for w in wells], counts)
    smax = np.repeat([w.sigma_max for w in wells], counts)
    lo, hi_eff, even = _cell_geometry(j, smax)
    sig = np.empty(total)
    eta = np.empty(total)
    ok = np.empty(total, dtype=bool)
    for start in range(0, total, _CHUNK):
        sl = slice(start, min(start + _CHUNK, total))
        sig[sl], eta[sl], ok[sl] = _solve_cells(
            g[sl], alpha[sl], lo[sl], hi_eff[sl], even[sl]
        )
    out = []
    for i in range(len(wells)):
        sl = slice(offsets[i], offsets[i + 1])
        keep = ok[sl]
        out.append((sig[sl][keep], eta[sl][keep]))
    return out


def solve_spectrum(well: DimensionlessWell | WellParameters) -> Spectrum:
    """Solve the full bound spectrum of a well.

    Accepts either a ``DimensionlessWell`` (levels carry no energy) or
    physical ``WellParameters`` (levels carry E = U * sigma**alpha / G, in
    the caller's units).  Levels are ordered by sigma and alternate parity
    starting even.
    """
    if isinstance(well, WellParameters):
        params, w = well, nondimensionalize(well)
    else:
        params, w = None, well
    sig, eta = solve_spectrum_raw(w)
    if params is not None:
        energies = params.depth * np.power(sig, w.alpha) / w.g
    else:
        energies = None
    levels = tuple(
        EnergyLevel(
            index=i,
            parity=Parity.EVEN if i % 2 == 0 else Parity.ODD,
            sigma=float(sig[i]),
            eta=float(eta[i]),
            energy=None if energies is None else float(energies[i]),
        )
        for i in range(sig.size)
    )
    return Spectrum(well=w, levels=levels, sigma_max=w.sigma_max)


def infinite_well_limit(alpha: float, n: int) -> float:
    """Deep-well limit of the n-th root: (n+1)*pi/2, independent of alpha."""
    if n < 0:
        raise DomainError(f"level index must be nonnegative, got {n!r}")
    return (n + 1) * HALF_PI
