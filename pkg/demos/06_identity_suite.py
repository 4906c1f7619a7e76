#!/usr/bin/env python3
"""Run the full dense identity suite in-process and print the score card.

Same machinery as `quadferm verify`, returned as objects instead of CSV.
Every commutation relation, factorization, Gaussian formula, basis property
and the Majorana variant is evaluated against 4^n x 4^n matrices.
"""

import time

from quadferm.verify import run_suite

n, seed = 2, 7
t0 = time.time()
results = run_suite(n=n, seed=seed, draws=20)
elapsed = time.time() - t0

width = max(len(r.name) for r in results)
print(f"identity suite at n={n}, seed={seed}: {len(results)} checks, "
      f"{elapsed:.1f}s\n")
for r in results:
    flag = "pass" if r.passed else "FAIL"
    print(f"  [{flag}] {r.name:<{width}}  {r.value:10.3e} {r.comparison} "
          f"{r.tolerance:.0e}")
print("\nall passed:", all(r.passed for r in results))
