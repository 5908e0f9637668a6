"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 3]

Each row runs the same workload on both backends, checks that the results
agree, and reports the best wall time of ``--repeat`` runs.
"""

from __future__ import annotations

import argparse
import random
import time

from convexcodes import kernels
from convexcodes.code import random_code, simplicial_complex


def _lattice_workload(n: int, count: int, seed: int):
    rng = random.Random(seed)
    tables = []
    for _ in range(count):
        code = random_code(n, rng.getrandbits(32))
        tables.append(kernels.get_backend("python").face_table(n, simplicial_complex(code).facet_masks))

    def run(backend):
        return [(list(backend.minimal_nonfaces(n, t)), backend.helly_bound(n, t)) for t in tables]

    return run


def _line_workload(n: int, t: int):
    def run(backend):
        return backend.realizable_1d_masks(n, t)

    return run


def _best(fn, backend, repeat: int) -> tuple[float, object]:
    best, result = float("inf"), None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn(backend)
        best = min(best, time.perf_counter() - start)
    return best, result


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)

    if "native" not in kernels.BACKENDS:
        print("compiled kernel not built; run `pip install -e . --no-build-isolation` first")
        return 1
    python, native = kernels.get_backend("python"), kernels.get_backend("native")

    rows = [
        ("helly scan n=8 x200", _lattice_workload(8, 200, 1)),
        ("helly scan n=12 x10", _lattice_workload(12, 10, 2)),
        ("line families n=2 t=4", _line_workload(2, 4)),
        ("line families n=3 t=6", _line_workload(3, 6)),
    ]
    print(f"{'workload':<24} {'python s':>10} {'native s':>10} {'speedup':>9}")
    for name, fn in rows:
        tp, rp = _best(fn, python, args.repeat)
        tn, rn = _best(fn, native, args.repeat)
        if rp != rn:
            raise SystemExit(f"backends disagree on {name}")
        print(f"{name:<24} {tp:>10.4f} {tn:>10.4f} {tp / tn:>8.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
