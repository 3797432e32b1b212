"""Time the compiled and pure-Python kernels on representative workloads.

    python3 benchmarks/bench_kernels.py [--repeat N]

Each row reports the best-of-N wall time per call and the speed-up of the
compiled backend.  Kernel inputs mirror what the evaluators pass in.
"""
import argparse
import os
import subprocess
import sys
import timeit

from hightrig._backend import available_backends

WORKLOADS = {
    "ts_sum_origin (tau, level 5)": (
        "ts_sum_origin", (0.3, 0.4, 1.3, 0.4, 1.0, -0.75, 0, 4, 1 / 32, 0, 1, 192)),
    "ts_sum_to_one (level 5)": (
        "ts_sum_to_one", (0.9, 5, -0.8, 1 / 32, 0, 1, 192)),
    "dp54_march (|dz| = 1.3)": (
        "dp54_march", (4, 0.07, 0.0, 1.0, 0.0, 1.2, 0.5, 1e-12, 1e-10, 0.01)),
    "taylor_recurrence (N = 400)": (
        "taylor_recurrence", (5, 400)),
}

END_TO_END = ("import hightrig as h, random\n"
              "rng = random.Random(1)\n"
              "pts = [complex(rng.uniform(-3, 3), rng.uniform(-0.5, 0.5)) for _ in range(200)]\n")


def bench_kernels(repeat):
    mods = available_backends()
    rows = []
    for label, (fn, args) in WORKLOADS.items():
        times = {}
        for name, mod in mods.items():
            f = getattr(mod, fn)
            n = 3 if name == "python" else 30
            times[name] = min(timeit.repeat(lambda: f(*args), number=n, repeat=repeat)) / n
        rows.append((label, times))
    return rows


def bench_end_to_end(repeat):
    out = {}
    for name in available_backends():
        env = dict(os.environ, HIGHTRIG_BACKEND=name)
        stmt = "[h.eval_complex(4, z) for z in pts]"
        code = (END_TO_END + "import timeit\n"
                f"print(min(timeit.repeat(lambda: {stmt}, number=1, repeat={repeat})))")
        res = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True,
                             text=True, check=True)
        out[name] = float(res.stdout) / 200
    return out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    rows = bench_kernels(args.repeat)
    rows.append(("eval_complex p=4, per point", bench_end_to_end(args.repeat)))
    print(f"{'workload':<32s} {'python':>12s} {'cython':>12s} {'speed-up':>9s}")
    for label, t in rows:
        py, cy = t.get("python"), t.get("cython")
        cy_s = f"{cy * 1e6:10.1f}us" if cy else f"{'n/a':>12s}"
        sp = f"{py / cy:8.1f}x" if cy else f"{'':>9s}"
        print(f"{label:<32s} {py * 1e6:10.1f}us {cy_s} {sp}")


if __name__ == "__main__":
    main()
