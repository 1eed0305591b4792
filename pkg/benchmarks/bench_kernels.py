"""Compare the compiled and pure-Python polynomial kernels.

Two parts:

* micro: the kernel functions on trace polynomials of random words, both
  backends in the same process;
* end-to-end: trace polynomials plus the matrix oracle for a seeded word
  corpus, run in a subprocess per backend (``TRACERING_PURE=1`` selects the
  fallback).

    python benchmarks/bench_kernels.py [--words 200] [--repeat 5] [--json]
"""

from __future__ import annotations

import argparse
import json
import os
import random
import subprocess
import sys
import timeit

from tracering import _pykernels
from tracering.fgword import random_word
from tracering.trace import trace_poly

try:
    from tracering import _ckernels
except ImportError:
    _ckernels = None

E2E = r"""
import json, random, sys, time
from tracering.fgword import random_word
from tracering.kernels import BACKEND
from tracering.trace import TraceCache, TraceReducer, oracle_check
rng = random.Random({seed})
words = [random_word(rng, 20, 4) for _ in range({words})]
red = TraceReducer(cache=TraceCache())
t = time.perf_counter(); polys = [red.trace(u) for u in words]; t_trace = time.perf_counter() - t
t = time.perf_counter(); ok = all(oracle_check(u, 100, seed=i, poly=p) for i, (u, p) in enumerate(zip(words, polys)))
t_oracle = time.perf_counter() - t
print(json.dumps({{"backend": BACKEND, "trace_s": t_trace, "oracle_s": t_oracle, "ok": ok}}))
"""


def _operands(seed: int, count: int):
    rng = random.Random(seed)
    polys = [trace_poly(random_word(rng, 12, 4))._t for _ in range(count)]
    return [(polys[i], polys[i + 1], polys[i + 2]) for i in range(0, count - 2, 3)]


def micro(repeat: int, seed: int) -> dict:
    ops = _operands(seed, 60)
    results = {}
    backends = {"python": _pykernels}
    if _ckernels is not None:
        backends["compiled"] = _ckernels
    for name, mod in backends.items():
        row = {}
        row["mul"] = min(timeit.repeat(lambda: [mod.mul(a, b) for a, b, _ in ops], number=1, repeat=repeat))
        row["mul_sub"] = min(
            timeit.repeat(lambda: [mod.mul_sub(a, b, c) for a, b, c in ops], number=1, repeat=repeat)
        )
        row["add"] = min(timeit.repeat(lambda: [mod.add(a, b) for a, b, _ in ops], number=20, repeat=repeat))
        row["evaluate"] = min(
            timeit.repeat(lambda: [mod.evaluate(a, 3, -2, 5) for a, _, _ in ops], number=20, repeat=repeat)
        )
        results[name] = row
    return results


def end_to_end(words: int, seed: int) -> dict:
    code = E2E.format(seed=seed, words=words)
    out = {}
    for name, env in (("compiled", {}), ("python", {"TRACERING_PURE": "1"})):
        proc = subprocess.run(
            [sys.executable, "-c", code], env={**os.environ, **env}, capture_output=True, text=True, check=True
        )
        row = json.loads(proc.stdout)
        out[row["backend"] if row["backend"] == name else f"{name} (unavailable, ran {row['backend']})"] = row
    return out


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--words", type=int, default=200)
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args(argv)

    report = {"micro": micro(args.repeat, args.seed), "end_to_end": end_to_end(args.words, args.seed)}
    if args.json:
        print(json.dumps(report, indent=2))
        return 0

    print("kernel micro-benchmark (seconds, best of repeats)")
    names = list(report["micro"])
    print(f"  {'op':<10}" + "".join(f"{n:>12}" for n in names) + ("     speedup" if len(names) == 2 else ""))
    for op in report["micro"]["python"]:
        vals = [report["micro"][n][op] for n in names]
        line = f"  {op:<10}" + "".join(f"{v:12.4f}" for v in vals)
        if len(names) == 2:
            line += f"{vals[0] / vals[1]:11.2f}x"
        print(line)
    print(f"\nend to end, {args.words} words (<= 20 syllables), 100 oracle trials each")
    for name, row in report["end_to_end"].items():
        print(f"  {name:<10} trace {row['trace_s']:7.2f}s   oracle {row['oracle_s']:7.2f}s   ok={row['ok']}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
