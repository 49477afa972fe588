"""Compare the pure-Python and compiled gate-evaluation kernels.

Two workloads: the exhaustive 4x4 multiplier sweep (many evaluations of a
small netlist) and a random sweep through the quantized reconfigurable FFT
(fewer evaluations of a large netlist). Run with::

    python3 benchmarks/bench_backends.py [--repeats 3] [--fft-vectors 200]
"""

import argparse
import random
import time

from vedicfft import BitVector, FftConfig, build_reconfigurable_fft, build_vedic4x4
from vedicfft._engine import KERNELS


def multiplier_workload():
    net = build_vedic4x4()
    cases = [
        {"a": BitVector.from_unsigned(a, 4), "b": BitVector.from_unsigned(b, 4)}
        for a in range(16)
        for b in range(16)
    ]

    def run(backend):
        for assignment in cases:
            out = net.evaluate_with(backend, assignment)["p"].uint
            assert out == assignment["a"].uint * assignment["b"].uint

    return f"vedic4x4 exhaustive ({len(cases)} evals, {net.gate_counts().total} gates)", run


def fft_workload(vectors):
    net = build_reconfigurable_fft(FftConfig.make(4, "q3", 4))
    rng = random.Random(1234)
    cases = []
    for _ in range(vectors):
        cases.append(
            {
                name: BitVector.from_unsigned(
                    rng.randrange(1 << net.input_width(name)), net.input_width(name)
                )
                for name in net.inputs
            }
        )

    def run(backend):
        for assignment in cases:
            net.evaluate_with(backend, assignment)

    return f"reconfigurable q3 ({vectors} evals, {net.gate_counts().total} gates)", run


def best_of(fn, backend, repeats):
    times = []
    for _ in range(repeats):
        start = time.perf_counter()
        fn(backend)
        times.append(time.perf_counter() - start)
    return min(times)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeats", type=int, default=3, help="best-of-N timing")
    parser.add_argument(
        "--fft-vectors", type=int, default=200, help="random vectors for the FFT sweep"
    )
    args = parser.parse_args()

    backends = sorted(KERNELS)
    print(f"kernels available: {', '.join(backends)}")
    if "compiled" not in KERNELS:
        print("note: compiled extension not built; timing the Python kernel only")

    for label, run in (multiplier_workload(), fft_workload(args.fft_vectors)):
        print(f"\n{label}")
        timings = {}
        for backend in backends:
            timings[backend] = best_of(run, backend, args.repeats)
            print(f"  {backend:>8}: {timings[backend] * 1e3:8.2f} ms")
        if "python" in timings and "compiled" in timings:
            speedup = timings["python"] / timings["compiled"]
            print(f"  speedup : {speedup:.1f}x (compiled over python)")


if __name__ == "__main__":
    main()
