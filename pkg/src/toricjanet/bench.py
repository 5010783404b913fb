"""Janet-divisor search benchmark: Janet tree against a linear scan.

Every query walks at most ``n + d + 1`` tree nodes (one root visit, at
most ``d`` degree steps, at most ``n`` variable steps), so
``mean_visits / (n + d)`` stays below ``VISIT_CONSTANT`` for
``n + d >= 8``.
"""

import csv
import random
import time

from .janet import JanetTree, is_janet_divisor, nm_vars

__all__ = ["VISIT_CONSTANT", "visit_bound", "random_sparse_monomials", "run_bench", "write_csv"]

VISIT_CONSTANT = 1.125
FIELDS = ["n", "d", "set_size", "structure", "mean_visits", "mean_time_ns"]


def visit_bound(n, d):
    return n + d + 1


def random_sparse_monomials(rng, n, d, size, support=3):
    """``size`` distinct monomials in ``n`` variables, total degree in ``[1, d]``,
    each supported on at most ``support`` variables."""
    out = set()
    attempts = 0
    while len(out) < size:
        attempts += 1
        if attempts > 100 * size:
            raise ValueError("cannot draw that many distinct monomials")
        k = rng.randint(1, min(support, n))
        vars_ = rng.sample(range(n), k)
        total = rng.randint(max(1, k), max(k, d))
        e = [0] * n
        for v in vars_:
            e[v] = 1
        for _ in range(total - k):
            e[rng.choice(vars_)] += 1
        out.add(tuple(e))
    return sorted(out)


def _queries(rng, U, n, count):
    qs = []
    for _ in range(count):
        u = list(rng.choice(U))
        for _ in range(rng.randint(0, 2)):
            u[rng.randrange(n)] += 1
        qs.append(tuple(u))
    return qs


def run_bench(ns=(4, 8, 16, 32), ds=(4, 8, 16, 32), size=50, queries=500, seed=0, support=3):
    """Rows of per-configuration means for both search structures."""
    rng = random.Random(seed)
    rows = []
    for n in ns:
        for d in ds:
            U = random_sparse_monomials(rng, n, d, size, support)
            Q = _queries(rng, U, n, queries)
            tree = JanetTree.build(n, U)
            visits = 0
            t0 = time.perf_counter_ns()
            for w in Q:
                tree.find(w)
            elapsed = time.perf_counter_ns() - t0
            for w in Q:
                visits += tree.visit_count(w)
            rows.append(dict(n=n, d=d, set_size=len(U), structure="janet-tree",
                             mean_visits=visits / len(Q), mean_time_ns=elapsed / len(Q)))
            nms = nm_vars(U)
            t0 = time.perf_counter_ns()
            for w in Q:
                for u in U:
                    if is_janet_divisor(u, w, nms[u]):
                        pass
            elapsed = time.perf_counter_ns() - t0
            rows.append(dict(n=n, d=d, set_size=len(U), structure="naive",
                             mean_visits=float(len(U)), mean_time_ns=elapsed / len(Q)))
    return rows


def write_csv(rows, stream):
    writer = csv.DictWriter(stream, fieldnames=FIELDS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: (f"{v:.2f}" if isinstance(v, float) else v) for k, v in row.items()})
