"""Compare the compiled and pure-Python numeric kernels.

    python benchmarks/bench_kernels.py [--repeat 5]

Times the brute-force odd power sums (10**6 terms), single GK21 panels, and
the full quadrature at 1e-12 over every valid (m, n) with m <= 8 plus two
sharper integrands, J(40,2) and J(80,2).
"""

import argparse
import timeit

from tanhint import _kernels_py, numeric
from tanhint.closed_form import valid_specs, validate_spec

try:
    from tanhint import _kernels as _kernels_c
except ImportError:
    _kernels_c = None

SPECS = valid_specs(8) + [validate_spec(40, 2), validate_spec(80, 2)]


def quadrature_sweep(impl):
    saved = numeric.kernels.gk21
    numeric.kernels.gk21 = impl.gk21
    try:
        return [numeric.quadrature(spec, 1e-12) for spec in SPECS]
    finally:
        numeric.kernels.gk21 = saved


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    backends = [("python", _kernels_py)]
    if _kernels_c is None:
        print("compiled extension not built; timing the Python fallback only")
    else:
        backends.append(("cython", _kernels_c))

    cases = {
        "odd_power_sum(3, 1e6)": lambda impl: impl.odd_power_sum(3, 10**6),
        "gk21 panel x1000": lambda impl: [impl.gk21(0.5, 1.0, 7, 5) for _ in range(1000)],
        "quadrature sweep 1e-12": quadrature_sweep,
    }
    print(f"{'case':<26}" + "".join(f"{name:>14}" for name, _ in backends) + f"{'speedup':>10}")
    for label, fn in cases.items():
        best = []
        for _, impl in backends:
            best.append(min(timeit.repeat(lambda: fn(impl), number=1, repeat=args.repeat)))
        speed = f"{best[0] / best[1]:9.1f}x" if len(best) == 2 else ""
        print(f"{label:<26}" + "".join(f"{t * 1e3:>12.2f}ms" for t in best) + speed)


if __name__ == "__main__":
    main()
