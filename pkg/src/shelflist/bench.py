"""Wall-clock scaling of the polynomial solvers over a grid of sizes."""

from __future__ import annotations

import statistics
import time
from dataclasses import dataclass, replace

from .generate import RandomSpec, gen_random
from .solvers import DEFAULT_EXACT_LIMIT, METHODS

# generator settings that put an instance inside each solver's class
FAMILIES = {
    "rc": dict(rule="rc", direction="mixed"),
    "pa-sc-t1": dict(rule="sc", direction="mixed", tc_size=1),
    "sepa-sat": dict(rule="sat", direction="L", tc_size=1),
    "sepa-sc-t3": dict(rule="sc", direction="L", tc_size=3),
    "exact": dict(rule="sc", direction="mixed", tc_size=3),
}


@dataclass(frozen=True)
class BenchRow:
    n: int
    m: int
    method: str
    t_us: int

    def line(self) -> str:
        return f"n={self.n} m={self.m} method={self.method} t_us={self.t_us}"

    def csv(self) -> str:
        return f"{self.n},{self.m},{self.method},{self.t_us}"


def bench_scaling(methods, ns, ms, reps: int = 3, seed: int = 0, exact_limit: int = DEFAULT_EXACT_LIMIT):
    """Median wall time per (method, n, m); exact runs are capped at the limit."""
    rows = []
    for method in methods:
        solver = METHODS[method]
        for n in ns:
            if method == "exact" and n > exact_limit:
                continue
            for m in ms:
                spec = replace(RandomSpec(n=n, m=m, seed=seed), **FAMILIES[method])
                inst = gen_random(spec)
                times = []
                for _ in range(reps):
                    start = time.perf_counter()
                    solver(inst)
                    times.append(time.perf_counter() - start)
                rows.append(BenchRow(n, m, method, round(statistics.median(times) * 1e6)))
    return rows
