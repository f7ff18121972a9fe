"""Compare the pure Python and compiled kernel backends.

Run from the repository root:

    python3 benchmarks/bench_backends.py

Two workloads: a full axiom scan over the order-256 pointwise indicator
algebra (cubic in the order), and exhaustive enumeration of all BCK
Cayley tables of orders 4 and 5.  Both backends compute identical
results; only the wall clock should differ.
"""

import argparse
import time

from bckcodes import pointwise_function_algebra
from bckcodes._kernels import pure

try:
    from bckcodes._kernels import _fast
except ImportError:
    _fast = None


def _time(fn, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3, help="best-of runs")
    args = parser.parse_args()

    backends = [("pure", pure)]
    if _fast is not None:
        backends.append(("compiled", _fast))
    else:
        print("compiled backend not built; timing the pure backend only")

    alg = pointwise_function_algebra(8)
    flat = tuple(v for row in alg.table for v in row)
    n = alg.order

    print(f"axiom scan, order {n} (best of {args.repeat}):")
    reference = None
    for name, impl in backends:
        secs, witnesses = _time(lambda: impl.axiom_witnesses(flat, n), args.repeat)
        if reference is None:
            reference = witnesses
        assert witnesses == reference
        print(f"  {name:>8}: {secs * 1000:9.2f} ms")

    for order in (4, 5):
        print(f"enumeration, order {order} (best of {args.repeat}):")
        counts = set()
        for name, impl in backends:
            secs, tables = _time(
                lambda: list(impl.bck_candidates(order)), args.repeat
            )
            counts.add(len(tables))
            print(f"  {name:>8}: {secs * 1000:9.2f} ms  ({len(tables)} tables)")
        assert len(counts) == 1


if __name__ == "__main__":
    main()
