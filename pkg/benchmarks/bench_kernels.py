"""Compare the compiled and pure-Python kernel backends.

Times the hottest workload in the repo: the Theorem 1 check (three interior
predicates plus the inclusion characterization) over a batch of random
tables at (m, n) = (2, 2).

Usage: python3 benchmarks/bench_kernels.py [count]
"""

import random
import sys
import time

from menger import _kernels_py as pyk

try:
    from menger import _kernels_c as ck
except ImportError:
    ck = None


def random_tables(m, n, count, seed=1):
    rng = random.Random(seed)
    size = 1 << (m * n)
    mask = (1 << m) - 1
    out = []
    for _ in range(count):
        bits = rng.getrandbits(m * size)
        out.append(bytes((bits >> (m * k)) & mask for k in range(size)))
    return out


def t1_batch(backend, tables, m, n):
    failures = 0
    for t in tables:
        interior = (
            backend.first_noncontractive(t, m, n) < 0
            and backend.first_nonidempotent(t, m, n) < 0
            and backend.first_nonisotone(t, m, n) is None
        )
        if interior != (backend.first_eq2_violation(t, m, n) is None):
            failures += 1
    return failures


def main():
    count = int(sys.argv[1]) if len(sys.argv) > 1 else 20_000
    m, n = 2, 2
    tables = random_tables(m, n, count)
    results = {}
    for name, backend in [("python", pyk), ("c", ck)]:
        if backend is None:
            print(f"{name:>7}: not available")
            continue
        start = time.perf_counter()
        failures = t1_batch(backend, tables, m, n)
        elapsed = time.perf_counter() - start
        results[name] = elapsed
        print(f"{name:>7}: {count} tables in {elapsed:.3f}s "
              f"({count / elapsed:,.0f}/s), {failures} failures")
    if len(results) == 2:
        print(f"speedup: {results['python'] / results['c']:.1f}x")


if __name__ == "__main__":
    main()
