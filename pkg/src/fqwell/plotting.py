"""Matplotlib rendering of solver output to image files.

Import is deferred to CLI runs that actually request a figure; everything
here draws from already-computed data and never re-solves.
"""

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np


def save_intersection_figure(plot_data: dict, path: str) -> None:
    """The graphical solution: parity curves, constraint curve, root markers."""
    fig, ax = plt.subplots(figsize=(7, 5))
    smax = plot_data["sigma_max"]
    for i, br in enumerate(plot_data["even_curve"]):
        ax.plot(br["sigma"], br["eta"], "b-", lw=1.2,
                label="sigma*tan(sigma)" if i == 0 else None)
    for i, br in enumerate(plot_data["odd_curve"]):
        ax.plot(br["sigma"], br["eta"], "g--", lw=1.2,
                label="-sigma/tan(sigma)" if i == 0 else None)
    con = plot_data["constraint_curve"]
    ax.plot(con["sigma"], con["eta"], "r-", lw=1.8, label="constraint")
    roots = plot_data["roots"]
    ax.plot([r["sigma"] for r in roots], [r["eta"] for r in roots], "ko",
            ms=6, label="levels")
    ax.set_xlim(0, smax * 1.05)
    ax.set_ylim(0, smax * 1.15)
    ax.set_xlabel(r"$\varsigma$")
    ax.set_ylabel(r"$\eta$")
    ax.set_title(f"g = {plot_data['g']:g}, alpha = {plot_data['alpha']:g}")
    ax.legend(loc="upper right", fontsize=9)
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_wavefunction_figure(xs, values, level_index: int, a: float, path: str) -> None:
    fig, ax = plt.subplots(figsize=(7, 4))
    ax.plot(xs, values, "b-", lw=1.5)
    ax.axvline(-a, color="gray", ls=":", lw=1)
    ax.axvline(a, color="gray", ls=":", lw=1)
    ax.axhline(0.0, color="gray", lw=0.5)
    ax.set_xlabel("x")
    ax.set_ylabel(r"$\phi(x)$")
    ax.set_title(f"level {level_index}")
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_spectrum_figure(levels: list[dict], path: str) -> None:
    """Energy-level diagram in units of the well depth."""
    fig, ax = plt.subplots(figsize=(5, 5))
    for lv in levels:
        color = "tab:blue" if lv["parity"] == "even" else "tab:green"
        ax.hlines(lv["energy_over_depth"], -0.35, 0.35, color=color, lw=2)
        ax.text(0.4, lv["energy_over_depth"], f"n={lv['index']}", fontsize=8,
                va="center")
    ax.hlines(1.0, -0.6, 0.6, color="red", ls="--", lw=1, label="E = U")
    ax.set_xlim(-1, 1)
    ax.set_xticks([])
    ax.set_ylabel("E / U")
    ax.set_title("bound levels (blue even, green odd)")
    ax.legend(loc="lower right", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_sweep_figure(rows: list[dict], var_name: str, path: str) -> None:
    fig, ax = plt.subplots(figsize=(7, 5))
    xs = [r[var_name] for r in rows]
    n_max = max(r["count"] for r in rows)
    for n in range(n_max):
        ys = [
            r["energies_over_depth"][n] if n < r["count"] else np.nan
            for r in rows
        ]
        ax.plot(xs, ys, "o-", ms=3, lw=1, label=f"n={n}" if n < 8 else None)
    ax.set_xlabel(var_name)
    ax.set_ylabel("E / U")
    ax.set_ylim(0, 1.02)
    ax.set_title(f"levels vs {var_name}")
    ax.legend(fontsize=8, ncol=2)
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_comparison_figure(report: dict, path: str) -> None:
    fig, ax = plt.subplots(figsize=(6, 5))
    idx = [lv["index"] for lv in report["levels"]]
    ax.plot(idx, [lv["energy"] for lv in report["levels"]], "bo",
            ms=7, mfc="none", label="matching equations")
    oracle = [lv["oracle_energy"] for lv in report["levels"]]
    if any(e is not None for e in oracle):
        ax.plot(idx, oracle, "rx", ms=7, label="Fourier grid")
    ax.set_xlabel("level")
    ax.set_ylabel("E")
    gap = report["max_rel_gap"]
    title = f"alpha = {report['alpha']:g}"
    if gap is not None:
        title += f", max relative gap = {gap:.3g}"
    ax.set_title(title)
    ax.legend(fontsize=9)
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
