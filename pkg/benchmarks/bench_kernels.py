"""Compare the jitted kernels against the pure-numpy fallback.

Runs the three hot paths (correlator evaluation, seesaw optimization,
shot sampling) through both backends, checks they agree, and prints a
timing table.  Usage: python benchmarks/bench_kernels.py
"""

import time

import numpy as np

from bell4q.accel import load_backend
from bell4q.bell import reference_expression, reference_settings
from bell4q.sampling import outcome_probabilities
from bell4q.states import named_state


def bench(label, fn, repeats=3):
    fn()  # warm-up: triggers jit compilation on the numba backend
    best = min(timeit(fn) for _ in range(repeats))
    print(f"  {label:<28} {best * 1e3:9.2f} ms")
    return best


def timeit(fn):
    start = time.perf_counter()
    fn()
    return time.perf_counter() - start


def main():
    expr = reference_expression()
    settings = reference_settings()
    coeffs = expr.coeffs_array()
    slots = expr.slots_array()
    bloch = settings.as_array()

    rng = np.random.default_rng(7)
    amps_batch = rng.normal(size=(2000, 16)) + 1j * rng.normal(size=(2000, 16))
    amps_batch /= np.linalg.norm(amps_batch, axis=1, keepdims=True)
    inits = [np.vstack([v / np.linalg.norm(v) for v in rng.normal(size=(8, 3))])
             for _ in range(50)]
    w_amps = named_state("w").amps
    probs = outcome_probabilities(
        named_state("w"),
        [settings.slot(0), settings.slot(2), settings.slot(4), settings.slot(6)],
    )
    cdf = np.cumsum(probs)
    shots = 1_000_000

    results = {}
    for name in ("numpy", "numba"):
        mod = load_backend(name)
        print(f"backend: {name}")
        results[name] = {
            "value": [complex(mod.bell_value(a, bloch, coeffs, slots)) for a in amps_batch[:5]],
            "counts": np.asarray(mod.sample_counts(cdf, shots, np.uint64(123))),
        }
        bench("bell_value x2000", lambda m=mod: [m.bell_value(a, bloch, coeffs, slots)
                                                 for a in amps_batch])
        bench("seesaw x50 restarts", lambda m=mod: [m.seesaw_sweeps(w_amps, i.copy(), coeffs,
                                                                    slots, 200, 1e-12)
                                                    for i in inits])
        bench(f"sample_counts {shots} shots", lambda m=mod: m.sample_counts(cdf, shots,
                                                                            np.uint64(123)))

    values_match = all(abs(a - b) < 1e-12 for a, b in
                       zip(results["numpy"]["value"], results["numba"]["value"]))
    counts_match = np.array_equal(results["numpy"]["counts"], results["numba"]["counts"])
    print(f"backends agree on values: {values_match}")
    print(f"backends agree on counts (bit-identical): {counts_match}")
    if not (values_match and counts_match):
        raise SystemExit(1)


if __name__ == "__main__":
    main()
