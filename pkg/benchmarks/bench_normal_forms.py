"""Benchmark the compiled integer normal-form kernels against the pure
Python fallback on random matrices and on the package's two real workloads
(the relation matrices of the five-generator group and of its level-3
congruence subgroup).

Usage: python3 benchmarks/bench_normal_forms.py [--quick]
"""

import argparse
import random
import time

from su21.fpgroup import reidemeister_schreier, upsilon_presentation
from su21.matgroup import SubgroupSpec
from su21.weightdenom import relation_matrix
from su21.zlinalg import (
    IntegerMatrix,
    compiled_kernels_available,
    hermite_normal_form,
    smith_normal_form,
)


def time_call(fn, *args, repeats=5):
    best = None
    for _ in range(repeats):
        start = time.perf_counter()
        result = fn(*args)
        elapsed = time.perf_counter() - start
        best = elapsed if best is None else min(best, elapsed)
    return best, result


def bench_pair(form, matrix, label, repeats):
    t_py, out_py = time_call(
        lambda m: form(m, impl="py"), matrix, repeats=repeats
    )
    try:
        t_fast, out_fast = time_call(
            lambda m: form(m, impl="fast"), matrix, repeats=repeats
        )
    except OverflowError:
        # intermediate entries outgrew int64; the automatic path must fall
        # back to the pure kernels and agree with them
        assert form(matrix) == out_py, "auto fallback disagrees on %s" % label
        return "py %8.2f ms  fast: int64 overflow -> auto falls back" % (
            t_py * 1e3
        )
    assert out_py == out_fast, "kernel outputs disagree on %s" % label
    return "py %8.2f ms  fast %8.2f ms  (x%.1f)" % (
        t_py * 1e3,
        t_fast * 1e3,
        t_py / t_fast if t_fast else float("inf"),
    )


def bench_one(label, matrix, repeats=5):
    hnf_line = bench_pair(hermite_normal_form, matrix, label, repeats)
    snf_line = bench_pair(smith_normal_form, matrix, label, repeats)
    print("%-30s HNF %s" % (label, hnf_line))
    print("%-30s SNF %s" % ("", snf_line))


def random_matrix(rng, dim, bound):
    return IntegerMatrix(
        [[rng.randint(-bound, bound) for _ in range(dim)] for _ in range(dim)]
    )


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--quick",
        action="store_true",
        help="skip the level-3 relation matrix (the slowest workload)",
    )
    args = parser.parse_args()

    if not compiled_kernels_available():
        raise SystemExit(
            "compiled kernels are not built; install the package with its "
            "extension module to run this comparison"
        )

    rng = random.Random(1234)
    print("random square matrices (best of 5):")
    for dim, bound in ((8, 50), (16, 50), (32, 50), (48, 20)):
        label = "  random %dx%d, entries <= %d" % (dim, dim, bound)
        bench_one(label, random_matrix(rng, dim, bound))

    print("\nreal workloads:")
    upsilon = upsilon_presentation()
    bench_one("  relation matrix 13x6", relation_matrix(upsilon), repeats=20)

    if not args.quick:
        spec = SubgroupSpec.parse("gamma3")
        print("  (running the 81-coset enumeration once to build the input)")
        sub, _ = reidemeister_schreier(upsilon, spec.membership)
        big = relation_matrix(sub)
        bench_one(
            "  relation matrix %dx%d" % big.shape, big, repeats=3
        )


if __name__ == "__main__":
    main()
