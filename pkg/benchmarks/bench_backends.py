"""Compare the numba kernels against the pure-numpy fallbacks.

    python benchmarks/bench_backends.py [--m-min 10] [--m-max 22] [--repeat 5]
"""

import argparse
import timeit

import numpy as np

from quadbent import _kernels
from quadbent.family import construct_f


def bench(fn, make, repeat):
    fn(make())  # warm-up, includes JIT compilation
    return min(timeit.repeat(lambda: fn(make()), number=1, repeat=repeat))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--m-min", type=int, default=10)
    ap.add_argument("--m-max", type=int, default=22)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    if not _kernels.HAVE_NUMBA:
        raise SystemExit("numba is not installed; nothing to compare")

    print(f"{'kernel':<14}{'m':>4}{'numba ms':>12}{'numpy ms':>12}{'ratio':>9}")
    for m in range(args.m_min, args.m_max + 1, 2):
        vals = construct_f((2, 3), m).values
        signed = (1 - 2 * vals.astype(np.int32))
        xs = np.arange(1 << m, dtype=np.uint64)
        mask = (1 << m) - 1
        cases = [
            ("fwht", _kernels.fwht_numba, _kernels.fwht_numpy, lambda: signed.copy()),
            ("mobius", _kernels.mobius_numba, _kernels.mobius_numpy, lambda: vals.copy()),
            (
                "parity",
                lambda a: _kernels.masked_parity_numba(a, mask),
                lambda a: _kernels.masked_parity_numpy(a, mask),
                lambda: xs,
            ),
        ]
        for name, nb, npy, make in cases:
            assert np.array_equal(nb(make()), npy(make()))
            t_nb = bench(nb, make, args.repeat) * 1e3
            t_np = bench(npy, make, args.repeat) * 1e3
            print(f"{name:<14}{m:>4}{t_nb:>12.3f}{t_np:>12.3f}{t_np / t_nb:>9.2f}")


if __name__ == "__main__":
    main()
