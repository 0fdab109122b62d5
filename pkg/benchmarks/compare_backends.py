"""Benchmark the numba kernels against the pure-numpy fallback.

Each backend runs in its own subprocess (the backend is fixed at import
time via THETA_FORGE_BACKEND), exercising the workloads that dominate the
verification harness.  Results are cross-checked between backends before
timings are reported.

    python3 benchmarks/compare_backends.py            # full workloads
    python3 benchmarks/compare_backends.py --quick    # scaled-down sizes
"""

import argparse
import hashlib
import json
import os
import subprocess
import sys
import time


def workloads(quick):
    scale = 4 if quick else 1
    return {
        "square vector (1,1,1,2) to 32020": ("sq_vec", 32020 // scale),
        "triangular vector (1,1,6) to 5000": ("tri_vec", 5000 // scale),
        "point counts N(1,1,8;n), n < 3000": ("points", 3000 // scale),
        "registry run (precision 200, n_max 100)": ("run_all", 100 // scale),
    }


def run_worker(task, size):
    import numpy as np

    from theta_forge.counting import count_N, count_N_vector, count_t_vector
    from theta_forge.registry import run_all

    start = time.perf_counter()
    if task == "sq_vec":
        total = 0
        for _ in range(5):
            vec = count_N_vector((1, 1, 1, 2), size)
            total += int(vec.sum())
        digest = hashlib.sha256(vec.tobytes()).hexdigest()[:16]
    elif task == "tri_vec":
        total = 0
        for _ in range(20):
            vec = count_t_vector((1, 1, 6), size)
            total += int(vec.sum())
        digest = hashlib.sha256(vec.tobytes()).hexdigest()[:16]
    elif task == "points":
        values = [count_N((1, 1, 8), n) for n in range(size)]
        total = sum(values)
        digest = hashlib.sha256(np.asarray(values, np.int64).tobytes()).hexdigest()[:16]
    else:
        reports = run_all(precision=200, n_max=size, param_bound=7, threads=1)
        statuses = ",".join(f"{r.id}={r.status}" for r in reports)
        total = sum(r.checked for r in reports)
        digest = hashlib.sha256(statuses.encode()).hexdigest()[:16]
    elapsed = time.perf_counter() - start
    return {"elapsed": elapsed, "total": total, "digest": digest}


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--quick", action="store_true")
    parser.add_argument("--worker", nargs=2, metavar=("TASK", "SIZE"), default=None)
    args = parser.parse_args()

    if args.worker:
        task, size = args.worker[0], int(args.worker[1])
        # first call may include jit compilation; do one warmup, then measure
        run_worker(task, max(1, size // 10))
        print(json.dumps(run_worker(task, size)))
        return

    results = {}
    for label, (task, size) in workloads(args.quick).items():
        results[label] = {}
        for backend in ("numba", "numpy"):
            env = dict(os.environ, THETA_FORGE_BACKEND=backend)
            proc = subprocess.run(
                [sys.executable, __file__, "--worker", task, str(size)],
                capture_output=True, text=True, env=env, check=True,
            )
            results[label][backend] = json.loads(proc.stdout.strip().splitlines()[-1])

    width = max(len(k) for k in results)
    print(f"{'workload':<{width}}  {'numba':>10}  {'numpy':>10}  {'speedup':>8}")
    for label, by_backend in results.items():
        nb, np_ = by_backend["numba"], by_backend["numpy"]
        if (nb["total"], nb["digest"]) != (np_["total"], np_["digest"]):
            raise SystemExit(f"backend disagreement on {label!r}: {nb} vs {np_}")
        ratio = np_["elapsed"] / nb["elapsed"] if nb["elapsed"] else float("inf")
        print(f"{label:<{width}}  {nb['elapsed']:>9.3f}s  {np_['elapsed']:>9.3f}s"
              f"  {ratio:>7.1f}x")
    print("results identical across backends")


if __name__ == "__main__":
    main()
