"""Compare the compiled kernels with the pure-Python fallback.

    python benchmarks/bench_kernels.py [--table-n 14] [--conv-n 6] [--repeat 3]
"""
import argparse
import random
import time

from symrep import kernels
from symrep.combinatorics import partitions_of


def best_of(repeat, fn):
    times = []
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - start)
    return min(times), result


def bench_table(n, repeat):
    shapes = partitions_of(n)
    classes = shapes[::-1]
    rows = {}
    for backend in ("python", "cython"):
        rows[backend] = best_of(repeat, lambda: kernels.character_table(n, shapes, classes, backend=backend))
    assert rows["python"][1] == rows["cython"][1]
    return rows


def bench_convolution(n, repeat):
    rng = random.Random(0)
    size = len(kernels.mult_table(n, "python")[1][0])
    a = [rng.randint(-9, 9) for _ in range(size)]
    b = [rng.randint(-9, 9) for _ in range(size)]
    rows = {}
    for backend in ("python", "cython"):
        kernels.mult_table(n, backend)  # build the table outside the timing
        rows[backend] = best_of(repeat, lambda: [int(x) for x in kernels.convolve_integers(n, a, b, backend=backend)])
    assert rows["python"][1] == rows["cython"][1]
    return rows


def report(name, rows):
    py, cy = rows["python"][0], rows["cython"][0]
    print(f"{name:<34} python {py * 1e3:9.2f} ms   cython {cy * 1e3:9.2f} ms   speedup {py / cy:7.1f}x")


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--table-n", type=int, default=14)
    parser.add_argument("--conv-n", type=int, default=6)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    if kernels.compiled_backend is None:
        raise SystemExit("compiled kernels are not built; run `pip install -e . --no-build-isolation`")
    for n in range(max(2, args.table_n - 4), args.table_n + 1, 2):
        report(f"character table S_{n} ({len(partitions_of(n))}^2)", bench_table(n, args.repeat))
    for n in range(3, args.conv_n + 1):
        report(f"group algebra convolution S_{n}", bench_convolution(n, args.repeat))


if __name__ == "__main__":
    main()
