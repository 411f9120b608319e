"""Compare the compiled kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5]
"""
import argparse
import timeit

from ribbonroots import kernels

CASES = [
    ("descent_histogram n=9", "descent_histogram", (9,)),
    ("count_skew_syt (6,6,5,4,3)/(3,2,1)", "count_skew_syt", ((6, 6, 5, 4, 3), (3, 2, 1))),
    ("enumerate_excited (7,7,6,5,4)/(4,3,2,1)", "enumerate_excited", ((7, 7, 6, 5, 4), (4, 3, 2, 1))),
    ("sqci_placements 3x3 block", "sqci_placements",
     ([(i, j) for i in range(1, 4) for j in range(1, 4)],)),
]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    backends = [("python", kernels.python_backend)]
    if kernels.compiled_backend is not None:
        backends.append(("cython", kernels.compiled_backend))
    else:
        print("compiled kernels unavailable; timing the fallback only")
    print(f"{'case':<44}" + "".join(f"{name:>12}" for name, _ in backends) + "     speedup")
    for label, fn, fargs in CASES:
        times = []
        results = []
        for _, mod in backends:
            f = getattr(mod, fn)
            times.append(min(timeit.repeat(lambda: f(*fargs), number=1, repeat=args.repeat)))
            results.append(f(*fargs))
        if len(results) == 2 and results[0] != results[1]:
            raise SystemExit(f"backends disagree on {label}")
        speed = f"{times[0] / times[1]:8.1f}x" if len(times) == 2 else ""
        print(f"{label:<44}" + "".join(f"{t * 1e3:10.2f}ms" for t in times) + f"  {speed}")


if __name__ == "__main__":
    main()
