"""Time the compiled and numpy quadrature kernels on the packaged Stokes configurations.

    python benchmarks/bench_stokes.py [--repeat 5]
"""
import argparse
import statistics
import time

from polarhom.stokes import QuadratureConfig, kernels, packaged_configs, stokes_check


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    backends = ["numpy"]
    try:
        kernels.load("cython")
        backends.insert(0, "cython")
    except ImportError:
        print("compiled kernels not built; timing numpy only")
    cfg = QuadratureConfig()
    print(f"{'configuration':32} {'backend':8} {'median s':>9} {'cells':>8} {'rel_error':>10}")
    for name, w, v, _ in packaged_configs():
        lhs = {}
        for b in backends:
            times = []
            for _ in range(args.repeat):
                t = time.perf_counter()
                r = stokes_check(w, v, cfg, backend=b)
                times.append(time.perf_counter() - t)
            lhs[b] = r.lhs
            print(f"{name:32} {b:8} {statistics.median(times):9.4f} {r.cells:8d} {r.rel_error:10.2e}")
        if len(lhs) == 2:
            print(f"{'':32} |lhs(cython) - lhs(numpy)| = {abs(lhs['cython'] - lhs['numpy']):.2e}")


if __name__ == "__main__":
    main()
