"""Synthetic run directory carrying the full CSV contract with toy values."""

import numpy as np
import pytest


def write_csv(path, header, rows):
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(",".join(header) + "\n")
        for row in rows:
            handle.write(",".join(str(x) for x in row) + "\n")


@pytest.fixture(scope="session")
def synthetic_run(tmp_path_factory):
    run = tmp_path_factory.mktemp("synthrun")
    rng = np.random.default_rng(0)

    lam = np.round(np.linspace(-3.0, 1.0, 41), 6)
    theta = 0.02 * lam ** 2
    write_csv(run / "ldf_theta.csv", ["x", "mu", "dmu", "sector"],
              [(x, m, 0.04 * x, "S" if x > -1 else "A")
               for x, m in zip(lam, theta)])
    eps = np.round(np.linspace(-1.0, 2.0, 31), 6)
    write_csv(run / "ldf_zeta.csv", ["x", "mu", "dmu", "sector"],
              [(x, 0.01 * x ** 2, 0.02 * x, "A" if x > 0 else "S")
               for x in eps])
    q = np.round(np.linspace(-0.1, 0.1, 21), 6)
    write_csv(run / "ldf_F.csv", ["q", "F", "affine"],
              [(x, -x ** 2, int(abs(x) < 0.04)) for x in q])
    a = np.round(np.linspace(0.005, 0.1, 20), 6)
    write_csv(run / "ldf_I.csv", ["a", "I", "affine"],
              [(x, -(x - 0.05) ** 2, int(0.02 < x < 0.05)) for x in a])
    write_csv(run / "ldf_mu_surface.csv", ["lambda", "epsilon", "mu", "sector"],
              [(x, e, 0.02 * x ** 2 + 0.01 * e ** 2, "S")
               for x in lam for e in eps])
    joint_rows = []
    for x in q:
        for y in a:
            value = "INF" if abs(x) > y else -x ** 2 - (y - 0.05) ** 2
            joint_rows.append((x, y, value, 0))
    write_csv(run / "ldf_G.csv", ["q", "a", "G_or_INF", "affine"], joint_rows)
    write_csv(run / "ldf_G_cond_current.csv", ["q", "a", "GQ_or_INF", "affine"],
              [(x, y, v if v == "INF" else v, f)
               for (x, y, v, f) in joint_rows])
    write_csv(run / "ldf_G_cond_activity.csv", ["q", "a", "GA_or_INF", "affine"],
              joint_rows)
    write_csv(run / "ldf_isolines.csv", ["kind", "q", "a"],
              [("lambda0", -0.01 * k, 0.01 + 0.004 * k) for k in range(10)]
              + [("epsilon0", 0.005 * (k - 5), 0.02 + 0.003 * k) for k in range(10)])
    with open(run / "ldf_geometry.txt", "w") as handle:
        for key, value in [("b_z", 0.5), ("gamma_bath", 0.1), ("n_bath", 0.1),
                           ("gamma_dephase", 0.0), ("q_S", -0.039), ("q_A", 0.0),
                           ("a_S", 0.051), ("a_A", 0.018), ("a_c", 0.039),
                           ("u0", 1.2), ("kappa", -2.398), ("delta", 2.398)]:
            handle.write(f"{key} = {value}\n")

    times = np.round(np.linspace(0.0, 100.0, 51), 6)
    for tag in ("xi-g0", "xi-g0.01"):
        write_csv(run / f"trajectories_xi_mean_{tag}.csv",
                  ["time", "mean_xi", "stderr"],
                  [(t, 0.5 * np.exp(-0.001 * t), 0.01) for t in times])
        sample_rows = []
        for traj in range(3):
            xi0 = rng.random()
            for t in times:
                sample_rows.append((traj, t, min(1.0, xi0 + 0.001 * t)))
        write_csv(run / f"trajectories_xi_samples_{tag}.csv",
                  ["trajectory", "time", "xi"], sample_rows)
        write_csv(run / f"trajectories_events_{tag}.csv",
                  ["trajectory", "time", "channel"],
                  [(0, t, "plus" if k % 2 else "minus")
                   for k, t in enumerate(np.linspace(1, 99, 20))])
    for tag in ("cpm-sym", "cpm-asym", "cpm-deph"):
        # the locked (cpm-asym) raster is legitimately empty
        events = [] if tag == "cpm-asym" else [
            (0, t, "plus" if k % 3 else "minus")
            for k, t in enumerate(np.linspace(5, 1900, 25))]
        write_csv(run / f"trajectories_order_params_{tag}.csv",
                  ["trajectory", "time", "kind"], events)

    for stem, params in (("sweep-n", [0.1, 0.5, 1.0]), ("sweep-bz", [0.2, 0.5, 1.0])):
        write_csv(run / f"{stem}_summary.csv",
                  ["param", "abs_qS", "abs_qA", "aS", "aA", "delta",
                   "jump_q", "jump_a", "delta_pred"],
                  [(p, 0.04 / (1 + p), 0.0, 0.05 * (1 + p), 0.018 * (1 + p),
                    np.log((p + 1) / p) if stem == "sweep-n" else 2.398,
                    0.04, 0.03, np.log((p + 1) / p) if stem == "sweep-n" else 2.398)
                   for p in params])
        write_csv(run / f"{stem}_qlambda.csv", ["param", "lambda", "value"],
                  [(p, x, -0.04 * np.tanh(x + p)) for p in params for x in lam])
        write_csv(run / f"{stem}_aepsilon.csv", ["param", "epsilon", "value"],
                  [(p, e, 0.05 * np.exp(-e) * (1 + p)) for p in params for e in eps])

    write_csv(run / "dephasing_slices.csv", ["gamma", "axis", "fixed", "x", "mu"],
              [(g, "lambda", f, x, 0.02 * x ** 2 + 0.1 * g)
               for g in (0.0, 0.01) for f in (0.0, 0.5) for x in lam])
    return run
