#!/usr/bin/env python3
"""Benchmark the compiled enumeration kernel against the pure-Python twin.

Times the two hot paths behind the satisfaction engines and the one-step
rewrite closure:

  check_identity     full substitution enumeration over a multiplication table
  enumerate_matches  backtracking pattern matching with erasing images

Run:  python benchmarks/bench_kernel.py
"""

import time
from array import array

from eqmon import _kernel_py
from eqmon import rees
from eqmon.equational import _encode_pattern, _encode_symbols
from eqmon.families import step1_words
from eqmon.words import W

try:
    from eqmon import _kernel
except ImportError:
    _kernel = None


def time_call(fn, *args, repeat=3):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def bench_check_identity(impl):
    # a 4-letter identity that holds in this 34-element monoid: full n^4 scan
    M = rees.build([W("x z x y t y"), W("x t1 x t2 x")])
    ident_lhs, ident_rhs = W("x z y t x y"), W("x z y t y x")
    letters = sorted(set(ident_lhs.letters) | set(ident_rhs.letters))
    code = {x: i for i, x in enumerate(letters)}
    table = array("i", M.table())
    n, e, k = M.size, M.index(M.identity), len(letters)
    lhs = array("i", [code[x] for x in ident_lhs.letters])
    rhs = array("i", [code[x] for x in ident_rhs.letters])
    elapsed, res = time_call(impl.check_identity, table, n, e, lhs, rhs, k, repeat=1)
    label = "holds" if res == -1 else f"witness@{res}"
    return elapsed, f"n={n} k={k} ({n ** k} subs, {label})"


def bench_matches(impl):
    u, _ = step1_words()
    pcodes, order, _ = _encode_pattern(u)
    tcodes = _encode_symbols(u)
    elapsed, res = time_call(impl.enumerate_matches, pcodes, tcodes, len(order), repeat=1)
    return elapsed, f"pattern len {len(pcodes)} vs itself ({len(res)} matches)"


def main():
    impls = [("python", _kernel_py)] + ([("c", _kernel)] if _kernel else [])
    rows = []
    for name, fn in (("check_identity", bench_check_identity), ("enumerate_matches", bench_matches)):
        timings = {}
        detail = ""
        for impl_name, impl in impls:
            elapsed, detail = fn(impl)
            timings[impl_name] = elapsed
        rows.append((name, detail, timings))
    print(f"{'kernel call':<20} {'python':>10} {'c':>10} {'speedup':>8}   detail")
    for name, detail, timings in rows:
        py = timings["python"]
        if "c" in timings:
            c = timings["c"]
            speedup = f"{py / c:7.1f}x" if c > 0 else "   n/a"
            print(f"{name:<20} {py:9.4f}s {c:9.4f}s {speedup}   {detail}")
        else:
            print(f"{name:<20} {py:9.4f}s {'-':>10} {'-':>8}   {detail} (compiled kernel missing)")


if __name__ == "__main__":
    main()
