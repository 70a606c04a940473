#!/usr/bin/env python3
"""Regenerate the NON-PAPER placeholder parameter files.

The site offset of the aggregate is tuned separately by `dqcsim tune` so that
the brightest two-polariton state lands on the requested target.
"""
import json
import math
import sys

N_SITES = 14
N_MODES = 48


def aggregate(offset=0.0):
    # 8 class-A and 6 class-B pigments, A red of B.
    classes = ["A"] * 8 + ["B"] * 6
    energies = [14800 + 1000 * i / (N_SITES - 1) for i in range(N_SITES)]
    order = [0, 2, 4, 6, 8, 1, 3, 5, 7, 9, 10, 11, 12, 13]
    sites = []
    for i in range(N_SITES):
        e = energies[order[i]] + offset
        c = classes[i]
        sites.append({
            "energy_cm1": round(e, 6),
            "mu10": 1.0 if c == "A" else 0.85,
            "kappa": round(1.10 + 0.02 * (i % 5), 3),
            "delta_cm1": -150.0 if c == "A" else -120.0,
            "class": c,
        })
    hop = [[0.0] * N_SITES for _ in range(N_SITES)]
    for m in range(N_SITES):
        for n in range(m + 1, N_SITES):
            d = n - m
            if d == 1:
                v = 90.0 * math.cos(0.7 * m)
            elif d == 2:
                v = -25.0 + 5.0 * (m % 3)
            elif d == 3:
                v = 8.0
            else:
                continue
            hop[m][n] = hop[n][m] = round(v, 3)
    return {
        "name": "placeholder-14",
        "note": "NON-PAPER placeholder aggregate; site energies span 14.8-15.8e3 cm^-1",
        "sites": sites,
        "hopping": hop,
        "bosonic_pair_factor": True,
    }


def phonon():
    modes = []
    for j in range(N_MODES):
        u = 50.0 * (1600.0 / 50.0) ** (j / (N_MODES - 1))
        s = 0.002 + 0.010 * (0.5 + 0.5 * math.sin(1.3 * j))
        modes.append({"upsilon_cm1": round(u, 4), "huang_rhys": round(s, 5), "gamma_cm1": 30.0})
    return {
        "name": "placeholder-48",
        "note": "NON-PAPER placeholder: 48 underdamped modes over 50-1600 cm^-1",
        "lambda0": 37.0,
        "gamma0": 30.0,
        "temperature_K": 300.0,
        "n_matsubara": 20,
        "modes": modes,
    }


if __name__ == "__main__":
    offset = float(sys.argv[1]) if len(sys.argv) > 1 else 0.0
    with open("aggregate_placeholder.json", "w") as f:
        json.dump(aggregate(offset), f, indent=2)
        f.write("\n")
    with open("phonon_placeholder.json", "w") as f:
        json.dump(phonon(), f, indent=2)
        f.write("\n")
