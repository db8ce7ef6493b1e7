#!/usr/bin/env python3
"""Plot xyqc CSV output.

    xyqc sweep --gamma 0.5 --n 1,2,5 --out sweep.csv
    python3 tools/plot_csv.py sweep sweep.csv -o sweep.png

    xyqc thermal-map --gamma 0 --n 1 --out xx_map.csv
    python3 tools/plot_csv.py map xx_map.csv -o xx_map.png
"""

import argparse

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402
import pandas as pd  # noqa: E402

MEASURES = [("deficit", "one-way deficit"), ("c_l1", "$C_{l_1}$"), ("c_rel", "$C_{re}$")]


def plot_sweep(frame, out):
    fig, axes = plt.subplots(2, 3, figsize=(13, 7), sharex=True)
    for (gamma, temperature, n), series in frame.groupby(["gamma", "temperature", "n"], sort=True):
        series = series.sort_values("lambda")
        lam = series["lambda"].to_numpy()
        label = f"n={n}" if frame["gamma"].nunique() == 1 else f"n={n}, gamma={gamma:g}"
        if frame["temperature"].nunique() > 1:
            label += f", kT={temperature:g}"
        for col, (key, title) in enumerate(MEASURES):
            values = series[key].to_numpy()
            axes[0, col].plot(lam, values, label=label)
            axes[0, col].set_title(title)
            if len(lam) > 1:
                axes[1, col].plot(lam, np.gradient(values, lam), label=label)
    for col in range(3):
        axes[1, col].set_xlabel(r"$\lambda$")
        axes[1, col].set_ylabel(r"$dQ/d\lambda$")
        axes[0, col].axvline(1.0, color="grey", lw=0.5, ls=":")
        axes[1, col].axvline(1.0, color="grey", lw=0.5, ls=":")
    axes[0, 0].legend()
    fig.tight_layout()
    fig.savefig(out, dpi=150)


def plot_map(frame, out):
    fig, axes = plt.subplots(1, 3, figsize=(15, 4.5))
    lambdas = np.sort(frame["lambda"].unique())
    temps = np.sort(frame["temperature"].unique())
    for ax, (key, title) in zip(axes, MEASURES):
        grid = frame.pivot(index="temperature", columns="lambda", values=key).reindex(index=temps, columns=lambdas)
        mesh = ax.pcolormesh(lambdas, temps, grid.to_numpy(), shading="auto", cmap="viridis")
        fig.colorbar(mesh, ax=ax)
        ax.set_title(title)
        ax.set_xlabel(r"$\lambda$")
        ax.set_ylabel("kT")
    gamma = frame["gamma"].iloc[0]
    fig.suptitle(f"gamma = {gamma:g}, n = {frame['n'].iloc[0]}")
    fig.tight_layout()
    fig.savefig(out, dpi=150)


def main():
    parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("kind", choices=["sweep", "map"])
    parser.add_argument("csv")
    parser.add_argument("-o", "--output", default=None, help="image path (default: CSV name with .png)")
    args = parser.parse_args()

    frame = pd.read_csv(args.csv)
    out = args.output or args.csv.rsplit(".", 1)[0] + ".png"
    (plot_sweep if args.kind == "sweep" else plot_map)(frame, out)
    print(out)


if __name__ == "__main__":
    main()
