"""Time the numba kernels against the numpy fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]

Each kernel runs once untimed (numba compile / cache load), then the best of
``--repeat`` runs is reported per backend.
"""
from __future__ import annotations

import argparse
import random
import time

import numpy as np

from qclifford import kernels
from qclifford.graphs import build_space, family


def _alternating(n: int, rng: random.Random) -> list[int]:
    rows = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < 0.5:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return rows


def cases():
    rng = random.Random(0)
    ncols = 512
    ns_rows = kernels.pack_rows([rng.getrandbits(ncols) for _ in range(ncols // 2)], ncols)
    yield "nullspace 256x512", lambda impl: impl.nullspace(ns_rows.copy(), ncols)

    n = 256
    F0 = kernels.pack_rows(_alternating(n, rng), n)
    q0 = np.array([rng.getrandbits(1) for _ in range(n)], dtype=np.uint8)
    C0 = kernels.pack_rows([1 << i for i in range(n)], n)
    yield "symplectic dim 256", lambda impl: impl.symplectic(F0.copy(), q0.copy(), C0.copy())

    n = 20
    fmask = np.array(_alternating(n, rng), dtype=np.uint64)
    qdiag = np.array([rng.getrandbits(1) for _ in range(n)], dtype=np.uint8)
    yield "q_table dim 20", lambda impl: impl.q_table(qdiag, fmask)

    space, _ = build_space(family("E:12"))
    fm = np.asarray(space.f_rows, dtype=np.uint64)
    seeds = np.asarray([1 << i for i in range(12)], dtype=np.uint64)
    yield "closure E12", lambda impl: impl.closure(fm, seeds, 12)


def best_of(fn, repeat: int) -> float:
    fn()
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if kernels.numba_impl is None:
        raise SystemExit("numba is not installed; nothing to compare")
    print(f"{'kernel':<20} {'numpy [ms]':>11} {'numba [ms]':>11} {'speedup':>8}")
    for name, run in cases():
        t_np = best_of(lambda: run(kernels.numpy_impl), args.repeat)
        t_nb = best_of(lambda: run(kernels.numba_impl), args.repeat)
        print(f"{name:<20} {t_np * 1e3:>11.2f} {t_nb * 1e3:>11.2f} {t_np / t_nb:>7.1f}x")


if __name__ == "__main__":
    main()
