"""Compare the compiled and pure-Python sparse-matrix kernels.

Builds the full relation suite workload for a moderately sized shape under
each backend and times it, plus a raw matmul microbenchmark."""

import random
import time
from fractions import Fraction

from wrep import Pyramid, build_representation, generic_weight
from wrep.rep import verify_defining_relations
from wrep.sparse import SparseMatrix, use_kernel


def random_matrix(dim, density, rng):
    entries = []
    for i in range(dim):
        for j in range(dim):
            if rng.random() < density:
                entries.append((i, j, Fraction(rng.randint(-9, 9), rng.randint(1, 9))))
    return SparseMatrix.from_entries(dim, entries)


def bench_matmul(backend, dim=120, density=0.08, reps=5, seed=7):
    use_kernel(backend)
    rng = random.Random(seed)
    a = random_matrix(dim, density, rng)
    b = random_matrix(dim, density, rng)
    t0 = time.perf_counter()
    for _ in range(reps):
        c = a * b
    dt = time.perf_counter() - t0
    return dt, c.nnz()


def bench_relations(backend, rows=(1, 2, 2), rmax=5):
    use_kernel(backend)
    pyr = Pyramid(rows=rows)
    rep = build_representation(pyr, generic_weight(pyr))
    t0 = time.perf_counter()
    report = verify_defining_relations(rep, rmax)
    dt = time.perf_counter() - t0
    assert report.ok
    return dt, report.total_instances()


def main():
    for backend in ("python", "cython"):
        try:
            dt, nnz = bench_matmul(backend)
        except ImportError:
            print("%-7s matmul: backend unavailable" % backend)
            continue
        print("%-7s matmul  x5 (dim 120): %6.3fs  (result nnz %d)" % (backend, dt, nnz))
    for backend in ("python", "cython"):
        try:
            dt, count = bench_relations(backend)
        except ImportError:
            continue
        print("%-7s relation suite rows (1,2,2): %6.3fs  (%d instances)"
              % (backend, dt, count))


if __name__ == "__main__":
    main()
