"""The eight figure layouts, driven entirely by a run directory's files.

Rendering is a pure function of the inputs: fixed hash salt, no timestamps,
so re-running on identical CSVs produces byte-identical SVG output.  All
physical annotations (kink constants, critical activity, kink-line slope)
are read from the geometry report, never recomputed here.
"""

from __future__ import annotations

import os

import matplotlib

matplotlib.use("Agg")
matplotlib.rcParams["svg.hashsalt"] = "triqubit-figures"

import matplotlib.pyplot as plt
import numpy as np

from .io import (FigureDataError, read_geometry, read_table,
                 read_values_with_markers, tagged_files)

SECTOR_COLORS = {"S": "#c44e52", "A": "#4c72b0", "none": "#555555"}


def _save(fig, out_path):
    fig.savefig(out_path, format="svg", metadata={"Date": None})
    plt.close(fig)
    return out_path


def _path(run_dir, name):
    return os.path.join(run_dir, name)


def fig1(run_dir, out_path):
    """Symmetry-parameter relaxation: sample trajectories and ensemble mean."""
    means = tagged_files(run_dir, "trajectories_xi_mean_*.csv")
    tags = [tag for tag in means if tag.startswith("xi-")] or list(means)
    if not tags:
        raise FigureDataError("no trajectories_xi_mean_*.csv files in the run")
    fig, axes = plt.subplots(1, len(tags), figsize=(5 * len(tags), 3.4),
                             sharey=True, squeeze=False)
    for ax, tag in zip(axes[0], tags):
        samples = read_table(_path(run_dir, f"trajectories_xi_samples_{tag}.csv"),
                             ("trajectory", "time", "xi"))
        for traj in np.unique(samples["trajectory"]):
            mask = samples["trajectory"] == traj
            ax.plot(samples["time"][mask], samples["xi"][mask], lw=0.7, alpha=0.8)
        mean = read_table(means[tag], ("time", "mean_xi", "stderr"))
        ax.plot(mean["time"], mean["mean_xi"], "k--", lw=1.6, label="ensemble mean")
        ax.plot(mean["time"][-1], mean["mean_xi"][-1], "rx", ms=8)
        ax.set_xlabel("time")
        ax.set_title(tag)
        ax.set_ylim(-0.05, 1.05)
    axes[0][0].set_ylabel(r"$\xi(t)$")
    axes[0][0].legend(loc="upper left", fontsize=8)
    fig.tight_layout()
    return _save(fig, out_path)


def _plot_sector_curve(ax, table, xlabel, ylabel):
    x, y = table["x"], table["mu"]
    sectors = table["sector"]
    for sector in np.unique(sectors):
        mask = sectors == sector
        ax.plot(x[mask], y[mask], ".", ms=2.5,
                color=SECTOR_COLORS.get(str(sector), "#333333"), label=str(sector))
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    ax.legend(fontsize=8)


def fig2(run_dir, out_path):
    """Scaled CGFs (top) and their Legendre-dual rate functions (bottom)."""
    theta = read_table(_path(run_dir, "ldf_theta.csv"), ("x", "mu", "dmu", "sector"))
    zeta = read_table(_path(run_dir, "ldf_zeta.csv"), ("x", "mu", "dmu", "sector"))
    rate_f = read_table(_path(run_dir, "ldf_F.csv"), ("q", "F", "affine"))
    rate_i = read_table(_path(run_dir, "ldf_I.csv"), ("a", "I", "affine"))
    fig, axes = plt.subplots(2, 2, figsize=(9, 7))
    _plot_sector_curve(axes[0, 0], theta, r"$\lambda$", r"$\theta(\lambda)$")
    _plot_sector_curve(axes[0, 1], zeta, r"$\epsilon$", r"$\zeta(\epsilon)$")
    for ax, table, xkey, ykey in ((axes[1, 0], rate_f, "q", "F"),
                                  (axes[1, 1], rate_i, "a", "I")):
        ax.plot(table[xkey], table[ykey], "k-", lw=1.2)
        flagged = table["affine"] > 0.5
        ax.plot(table[xkey][flagged], table[ykey][flagged], "s", ms=3,
                color="#999999", label="affine / coexistence")
        ax.set_xlabel(xkey)
        ax.set_ylabel(f"{ykey}({xkey})")
        ax.legend(fontsize=8)
    fig.tight_layout()
    return _save(fig, out_path)


def _sweep_figure(run_dir, out_path, stem, param_label):
    summary = read_table(_path(run_dir, f"{stem}_summary.csv"),
                         ("param", "abs_qS", "abs_qA", "aS", "aA", "delta",
                          "jump_q", "jump_a", "delta_pred"))
    qcurves = read_table(_path(run_dir, f"{stem}_qlambda.csv"),
                         ("param", "lambda", "value"))
    acurves = read_table(_path(run_dir, f"{stem}_aepsilon.csv"),
                         ("param", "epsilon", "value"))
    fig, axes = plt.subplots(2, 2, figsize=(10, 7))
    for param in np.unique(qcurves["param"]):
        mask = qcurves["param"] == param
        axes[0, 0].plot(qcurves["lambda"][mask], qcurves["value"][mask], lw=1,
                        label=f"{param_label}={param:g}")
    axes[0, 0].set_xlabel(r"$\lambda$")
    axes[0, 0].set_ylabel(r"$q_\lambda$")
    axes[0, 0].legend(fontsize=7)
    axes[0, 1].plot(summary["param"], summary["abs_qS"], "o-", label=r"$|q_S|$")
    axes[0, 1].plot(summary["param"], summary["abs_qA"], "s-", label=r"$|q_A|$")
    axes[0, 1].set_xlabel(param_label)
    axes[0, 1].legend(fontsize=8)
    for param in np.unique(acurves["param"]):
        mask = acurves["param"] == param
        axes[1, 0].plot(acurves["epsilon"][mask], acurves["value"][mask], lw=1)
    axes[1, 0].set_xlabel(r"$\epsilon$")
    axes[1, 0].set_ylabel(r"$a_\epsilon$")
    axes[1, 1].plot(summary["param"], summary["aS"], "o-", label=r"$a_S$")
    axes[1, 1].plot(summary["param"], summary["aA"], "s-", label=r"$a_A$")
    axes[1, 1].set_xlabel(param_label)
    axes[1, 1].legend(fontsize=8, loc="upper left")
    inset = axes[1, 1].inset_axes([0.55, 0.12, 0.4, 0.35])
    inset.plot(summary["param"], summary["delta"], "ko", ms=3)
    inset.plot(summary["param"], summary["delta_pred"], "k--", lw=1)
    inset.set_ylabel(r"$\delta$", fontsize=7)
    inset.tick_params(labelsize=6)
    fig.tight_layout()
    return _save(fig, out_path)


def fig3(run_dir, out_path):
    """Observables versus the bath mean occupation."""
    return _sweep_figure(run_dir, out_path, "sweep-n", "n")


def fig4(run_dir, out_path):
    """Observables versus the magnetic field strength."""
    return _sweep_figure(run_dir, out_path, "sweep-bz", "B_z")


def fig5(run_dir, out_path):
    """Sector lines q_a + u a_a whose crossing sets the kink-line slope."""
    geometry = read_geometry(_path(run_dir, "ldf_geometry.txt"))
    u = np.linspace(geometry["u0"] - 2.0, geometry["u0"] + 2.0, 200)
    line_s = geometry["q_S"] + u * geometry["a_S"]
    line_a = geometry["q_A"] + u * geometry["a_A"]
    fig, ax = plt.subplots(figsize=(6, 4.2))
    ax.plot(u, line_s, color=SECTOR_COLORS["S"], label=r"$M_S(u)$")
    ax.plot(u, line_a, color=SECTOR_COLORS["A"], label=r"$M_A(u)$")
    ax.axvline(geometry["u0"], color="k", ls=":", lw=1)
    ax.annotate(r"$u_0$", (geometry["u0"], ax.get_ylim()[1] * 0.9))
    ax.fill_between(u, line_s, line_a, where=line_a < line_s,
                    color=SECTOR_COLORS["A"], alpha=0.15)
    ax.fill_between(u, line_s, line_a, where=line_s < line_a,
                    color=SECTOR_COLORS["S"], alpha=0.15)
    ax.set_xlabel(r"$u = \epsilon/\lambda$")
    ax.set_ylabel(r"$M_\alpha(u)$")
    ax.legend(fontsize=8)
    fig.tight_layout()
    return _save(fig, out_path)


def fig6(run_dir, out_path):
    """Bias slices with and without dephasing (kink washout)."""
    table = read_table(_path(run_dir, "dephasing_slices.csv"),
                       ("gamma", "axis", "fixed", "x", "mu"))
    gammas = np.unique(table["gamma"])
    fixed_values = np.unique(table["fixed"])
    fig, ax = plt.subplots(figsize=(7, 4.5))
    colors = plt.cm.viridis(np.linspace(0.1, 0.85, fixed_values.size))
    for color, fixed in zip(colors, fixed_values):
        for gamma in gammas:
            mask = (table["fixed"] == fixed) & (table["gamma"] == gamma)
            style = "-" if gamma == gammas.min() else "--"
            label = f"fixed={fixed:g}, gamma={gamma:g}"
            ax.plot(table["x"][mask], table["mu"][mask], style, color=color,
                    lw=1.2, label=label)
    axis_name = str(table["axis"][0])
    ax.set_xlabel(r"$\lambda$" if axis_name == "lambda" else r"$\epsilon$")
    ax.set_ylabel(r"$\mu$")
    ax.legend(fontsize=7)
    fig.tight_layout()
    return _save(fig, out_path)


def fig7(run_dir, out_path):
    """Joint rate surface with infeasible region, isolines, and conditionals."""
    joint = read_table(_path(run_dir, "ldf_G.csv"), ("q", "a", "G_or_INF", "affine"))
    iso = read_table(_path(run_dir, "ldf_isolines.csv"), ("kind", "q", "a"))
    cond_q = read_table(_path(run_dir, "ldf_G_cond_current.csv"),
                        ("q", "a", "GQ_or_INF", "affine"))
    cond_a = read_table(_path(run_dir, "ldf_G_cond_activity.csv"),
                        ("q", "a", "GA_or_INF", "affine"))
    geometry = read_geometry(_path(run_dir, "ldf_geometry.txt"))

    q_grid = np.unique(joint["q"])
    a_grid = np.unique(joint["a"])
    values = read_values_with_markers(joint["G_or_INF"]).reshape(q_grid.size,
                                                                 a_grid.size)
    fig = plt.figure(figsize=(11, 5))
    ax_map = fig.add_subplot(1, 2, 1)
    masked = np.ma.masked_invalid(values)
    cmap = plt.cm.magma.copy()
    cmap.set_bad("#bbbbbb")
    # rasterize the dense mesh inside the vector output
    mesh = ax_map.pcolormesh(q_grid, a_grid, masked.T, cmap=cmap, shading="auto",
                             rasterized=True)
    fig.colorbar(mesh, ax=ax_map, label=r"$G(q,a)$")
    for kind, style in (("lambda0", "-"), ("epsilon0", "--")):
        mask = iso["kind"] == kind
        ax_map.plot(iso["q"][mask], iso["a"][mask], style, color="orange", lw=1.6)
    ax_map.axhline(geometry["a_c"], color="w", lw=0.6, ls=":")
    ax_map.set_xlim(q_grid.min(), q_grid.max())
    ax_map.set_ylim(a_grid.min(), a_grid.max())
    ax_map.set_xlabel("q")
    ax_map.set_ylabel("a")

    ax_top = fig.add_subplot(2, 2, 2)
    cq = read_values_with_markers(cond_q["GQ_or_INF"]).reshape(q_grid.size,
                                                               a_grid.size)
    for frac in (0.25, 0.5, 0.75):
        j = int(frac * (a_grid.size - 1))
        ax_top.plot(q_grid, cq[:, j], lw=1, label=f"a={a_grid[j]:.3f}")
    ax_top.set_xlabel("q")
    ax_top.set_ylabel(r"$G_Q(q|a)$")
    ax_top.legend(fontsize=7)

    ax_bot = fig.add_subplot(2, 2, 4)
    ca = read_values_with_markers(cond_a["GA_or_INF"]).reshape(q_grid.size,
                                                               a_grid.size)
    for frac in (0.35, 0.5, 0.65):
        i = int(frac * (q_grid.size - 1))
        ax_bot.plot(a_grid, ca[i, :], lw=1, label=f"q={q_grid[i]:.3f}")
    ax_bot.set_xlabel("a")
    ax_bot.set_ylabel(r"$G_A(a|q)$")
    ax_bot.legend(fontsize=7)
    fig.tight_layout()
    return _save(fig, out_path)


def fig8(run_dir, out_path):
    """Consecutive-pair order-parameter rasters along example trajectories."""
    files = tagged_files(run_dir, "trajectories_order_params_*.csv")
    tags = [tag for tag in files if tag.startswith("cpm-")] or list(files)
    if not tags:
        raise FigureDataError("no trajectories_order_params_*.csv files in the run")
    fig, axes = plt.subplots(len(tags), 1, figsize=(9, 2.1 * len(tags)),
                             squeeze=False, sharex=False)
    for ax, tag in zip(axes[:, 0], tags):
        # a locked trajectory legitimately produces zero events
        table = read_table(files[tag], ("trajectory", "time", "kind"),
                           allow_empty=True)
        for kind, level, color in (("plus", 1.0, "#777777"), ("minus", -1.0, "#c44e52")):
            mask = table["kind"] == kind
            times = table["time"][mask]
            ax.vlines(times, 0, level, color=color, lw=0.8)
        ax.axhline(0.0, color="k", lw=0.5)
        ax.set_ylim(-1.2, 1.2)
        ax.set_ylabel(r"$C^\pm$")
        ax.set_title(tag, fontsize=9)
    axes[-1, 0].set_xlabel("time")
    fig.tight_layout()
    return _save(fig, out_path)


FIGURES = {
    "fig1": fig1,
    "fig2": fig2,
    "fig3": fig3,
    "fig4": fig4,
    "fig5": fig5,
    "fig6": fig6,
    "fig7": fig7,
    "fig8": fig8,
}


def render(figure_id: str, run_dir: str, out_dir: str | None = None) -> str:
    """Render one figure from a run directory; returns the output path."""
    if figure_id not in FIGURES:
        raise FigureDataError(f"unknown figure id {figure_id!r}; "
                              f"known: {sorted(FIGURES)}")
    out_dir = out_dir or run_dir
    os.makedirs(out_dir, exist_ok=True)
    out_path = os.path.join(out_dir, f"{figure_id}.svg")
    return FIGURES[figure_id](run_dir, out_path)
