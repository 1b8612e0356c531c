"""Compare the compiled and pure-Python scan kernels on random Gauss codes.

    python benchmarks/bench_kernels.py [--crossings 40] [--bars 6] [--codes 50]
"""

import argparse
import random
import timeit

from twistwarp import _kernels_py
from twistwarp.gauss import random_code

try:
    from twistwarp import _kernels
except ImportError:
    _kernels = None


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--crossings", type=int, default=40)
    ap.add_argument("--bars", type=int, default=6)
    ap.add_argument("--codes", type=int, default=50)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    streams = [random_code(rng, args.crossings, args.bars).streams()
               for _ in range(args.codes)]
    backends = {"python": _kernels_py}
    if _kernels is not None:
        backends["cython"] = _kernels
    else:
        print("compiled extension not built; timing the Python fallback only")

    for name in ("warping_degrees", "arc_bar_parities"):
        results = {}
        for label, mod in backends.items():
            fn = getattr(mod, name)
            if name == "warping_degrees":
                def run(fn=fn):
                    return [fn(k, i, n) for k, i, n in streams]
            else:
                def run(fn=fn):
                    return [fn(k, i) for k, i, _ in streams]
            out = run()
            reps = 3
            secs = min(timeit.repeat(run, number=1, repeat=reps))
            results[label] = (secs, out)
        outs = [o for _, o in results.values()]
        assert all(o == outs[0] for o in outs), f"{name}: backends disagree"
        line = ", ".join(f"{k} {v[0] * 1e3:8.2f} ms" for k, v in results.items())
        if len(results) == 2:
            line += f", speedup x{results['python'][0] / results['cython'][0]:.1f}"
        print(f"{name:17s} {line}")


if __name__ == "__main__":
    main()
