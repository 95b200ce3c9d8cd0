"""Time the numba and numpy flavours of each kernel side by side.

    python benchmarks/bench_kernels.py [--repeat 5]

The first numba call per signature is excluded (compilation); results of the
two flavours are checked for agreement before timing.
"""
import argparse
import timeit

import numpy as np

from segrecube import _accel, kernels


def _cases(rng):
    for rows, cols in [(8, 8), (32, 32), (64, 128)]:
        m = rng.normal(size=(rows, cols)) + 1j * rng.normal(size=(rows, cols))
        yield f"max_minor_residual {rows}x{cols}", kernels._max_minor_residual_nb, kernels._max_minor_residual_np, (m,)
    for size in [10_000, 1_000_000]:
        a = rng.integers(0, 2**62, size=size, dtype=np.int64).astype(np.uint64)
        b = rng.integers(0, 2**62, size=size, dtype=np.int64).astype(np.uint64)
        yield f"hamming_codes {size}", kernels._hamming_codes_nb, kernels._hamming_codes_np, (a, b)
    for length in [11, 16, 20]:
        yield f"hypercube_edges L={length}", kernels._hypercube_edges_nb, kernels._hypercube_edges_np, (length,)


def _best(fn, args, repeat):
    number = 1
    while timeit.timeit(lambda: fn(*args), number=number) < 0.05:
        number *= 2
    return min(timeit.repeat(lambda: fn(*args), number=number, repeat=repeat)) / number


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args(argv)

    if not _accel.HAVE_NUMBA:
        print("numba is not installed; only the numpy flavour is available")
    print(f"{'kernel':<32}{'numba [ms]':>12}{'numpy [ms]':>12}{'speedup':>10}")
    rng = np.random.default_rng(args.seed)
    for name, nb, np_, call_args in _cases(rng):
        np.testing.assert_allclose(nb(*call_args), np_(*call_args), rtol=1e-12)
        t_nb = _best(nb, call_args, args.repeat)
        t_np = _best(np_, call_args, args.repeat)
        print(f"{name:<32}{t_nb * 1e3:>12.3f}{t_np * 1e3:>12.3f}{t_np / t_nb:>9.1f}x", flush=True)


if __name__ == "__main__":
    main()
