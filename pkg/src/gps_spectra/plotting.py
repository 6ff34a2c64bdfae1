"""Static figure rendering for the CLI report paths (PNG files, no GUI)."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np


def save_scan_figure(axis_label: str, axis_values, energy_columns, path: str) -> None:
    """Energy levels against a potential parameter, one line per state."""
    fig, ax = plt.subplots(figsize=(7, 5))
    for k, column in enumerate(energy_columns):
        ax.plot(axis_values, column, marker=".", label=f"E{k + 1}")
    ax.set_xlabel(axis_label)
    ax.set_ylabel("E (a.u.)")
    ax.grid(True, alpha=0.4)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_density_figure(r, density, path: str, label: str | None = None) -> None:
    fig, ax = plt.subplots(figsize=(7, 5))
    ax.plot(r, density, label=label)
    ax.set_xlabel("r (a.u.)")
    ax.set_ylabel(r"$|\psi(r)|^2$")
    ax.set_xlim(0.0, min(np.max(r), 4.0 * r[int(np.argmax(density))] + 1.0))
    ax.grid(True, alpha=0.4)
    if label:
        ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_potential_figure(r, v, path: str) -> None:
    fig, ax = plt.subplots(figsize=(7, 5))
    ax.plot(r, v)
    ax.set_xlabel("r (a.u.)")
    ax.set_ylabel("V(r) (a.u.)")
    ax.set_ylim(0.0, float(np.percentile(v, 98)))
    ax.grid(True, alpha=0.4)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_convergence_figure(n_values, energies, path: str) -> None:
    """Deviation of each state's energy from its value at the largest N."""
    energies = np.asarray(energies)
    fig, ax = plt.subplots(figsize=(7, 5))
    for k in range(energies.shape[1]):
        dev = np.abs(energies[:-1, k] - energies[-1, k])
        ax.semilogy(n_values[:-1], np.clip(dev, 1e-16, None), marker="o", label=f"E{k + 1}")
    ax.set_xlabel("grid order N")
    ax.set_ylabel("|E(N) - E(N_max)| (a.u.)")
    ax.grid(True, which="both", alpha=0.4)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
