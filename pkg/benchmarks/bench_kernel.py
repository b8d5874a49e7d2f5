"""Compare the compiled and pure-Python enumeration kernels.

    python benchmarks/bench_kernel.py [--sizes 6 8 10] [--theories 20] [--repeat 3]

For each vocabulary size a fixed set of random theories is compiled once;
each backend then enumerates HT models and equilibrium models of all of
them.  Best-of-``repeat`` wall time is reported together with the speedup.
"""
import argparse
import random
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

from eqlog.kernel import available_backends, compile_theory  # noqa: E402
from eqlog.syntax import Vocabulary  # noqa: E402
from helpers import random_formula  # noqa: E402


def workload(n, count, seed):
    rng = random.Random(seed)
    v = Vocabulary(f"p{i}" for i in range(n))
    return v, [compile_theory([random_formula(rng, v.atoms, depth=4) for _ in range(3)], v)
               for _ in range(count)]


def best_time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[6, 8, 10])
    ap.add_argument("--theories", type=int, default=20)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    backends = available_backends()
    if "cython" not in backends:
        print("compiled kernel not built; only the Python backend is timed", file=sys.stderr)
    print(f"{'n':>3} {'task':<11}" + "".join(f"{name:>12}" for name in backends) + "   speedup")
    for n in args.sizes:
        v, codes = workload(n, args.theories, seed=n)
        for task in ("ht_models", "equilibria"):
            times = {}
            results = {}
            for name, mod in backends.items():
                fn = getattr(mod, task)
                times[name] = best_time(lambda: [fn(c, len(v)) for c in codes], args.repeat)
                results[name] = [fn(c, len(v)) for c in codes]
            if len({repr(r) for r in results.values()}) != 1:
                raise SystemExit(f"backends disagree on {task} at n={n}")
            speed = f"{times['python'] / times['cython']:9.1f}x" if "cython" in times else ""
            print(f"{n:>3} {task:<11}" + "".join(f"{t:11.4f}s" for t in times.values()) + "  " + speed)


if __name__ == "__main__":
    main()
