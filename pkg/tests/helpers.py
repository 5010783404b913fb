"""Shared data for the tests: fixed example ideals and random generators."""

import random

from toricjanet.formats import parse_binomial
from toricjanet.monomials import DegRevLex, Lex, binomial_orient

XYZW = ["x", "y", "z", "w"]
X5 = ["x0", "x1", "x2", "x3", "x4"]


def bins(texts, names, order):
    return [parse_binomial(s, names, order) for s in texts]


SMALL_GENS = ["x^7 - y^2*z", "x^4*w - y^3", "x^3*y - z*w"]

SMALL_JANET = [
    "x^7 - y^2*z", "x^6*y - x^3*z*w", "x^6*w - x^2*y^3", "x^5*y - x^2*z*w",
    "x^2*y^4 - x^3*z*w^2", "x^5*w - x*y^3", "x^4*y - x*z*w", "x^2*z*w^2 - x*y^4",
    "x^4*w - y^3", "x^3*y - z*w", "y^4 - x*z*w^2",
]

SMALL_GB = ["x^7 - y^2*z", "x^4*w - y^3", "x^3*y - z*w", "y^4 - x*z*w^2"]

LARGE_GENS = ["x0*x1*x2*x3*x4 - 1", "x2^29*x3^5 - x1^14*x4^20", "x1^39 - x2^25*x3^14"]

LARGE_TOP = [
    "x0*x1^3*x3*x4^281 - x1*x2^280",
    "x0*x2^61*x3^2*x4^221 - x1*x2^279",
    "x0*x1^2*x3*x4^281 - x2^280",
]
LARGE_LAST = "x0*x1*x2*x3*x4 - 1"

LARGE_GB = [
    "x0*x1^2*x3*x4^281 - x2^280", "x2^281 - x1*x4^280",
    "x0*x3^2*x4^221 - x1*x2^218", "x1^2*x2^219 - x3*x4^220",
    "x0*x3^3*x4^161 - x1^4*x2^156", "x1^5*x2^157 - x3^2*x4^160",
    "x0*x3^4*x4^101 - x1^7*x2^94", "x1^8*x2^95 - x3^3*x4^100",
    "x0*x1^4*x4^61 - x2^61", "x2^62*x3 - x1^3*x4^60",
    "x0*x3^5*x4^41 - x1^10*x2^32", "x1^11*x2^33 - x3^4*x4^40",
    "x0*x2^26*x3^15*x4 - x1^38", "x1^39 - x2^25*x3^14",
    "x0*x1^15*x4^21 - x2^28*x3^4", "x2^29*x3^5 - x1^14*x4^20",
    "x0*x3^10*x4^21 - x1^24*x2^3", "x1^25*x2^4 - x3^9*x4^20",
    "x0*x1*x2*x3*x4 - 1",
]

# x^2y, xz, y^2, yz, z^2: a staircase in x, y, z
TRIANGLE = [(2, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2)]


def random_monomial(rng, n, maxdeg):
    e = [0] * n
    for _ in range(rng.randint(0, maxdeg)):
        e[rng.randrange(n)] += 1
    return tuple(e)


def random_ideal(rng, n=None, maxgens=4, maxdeg=5, order=None):
    """A nonempty list of at most ``maxgens`` binomials in at most 4 variables."""
    n = n or rng.randint(1, 4)
    order = order or rng.choice([DegRevLex(), Lex()])
    want = rng.randint(1, maxgens)
    F = []
    while len(F) < want:
        f = binomial_orient(random_monomial(rng, n, maxdeg), random_monomial(rng, n, maxdeg), order)
        if f is not None:
            F.append(f)
    return F, order


def ideal_corpus(count=200, seed=20020, **kw):
    rng = random.Random(seed)
    return [random_ideal(rng, **kw) for _ in range(count)]


def random_matrix(rng, m, n, lo=0, hi=4):
    return [[rng.randint(lo, hi) for _ in range(n)] for _ in range(m)]


def matvec(A, x):
    return tuple(sum(a * b for a, b in zip(row, x)) for row in A)


def enumerate_feasible(A, b):
    """All of ``{x in N^n : A x = b}`` for a matrix with positive entries."""
    import itertools

    n = len(A[0])
    bounds = [min(bi // row[j] for row, bi in zip(A, b)) for j in range(n)]
    return [x for x in itertools.product(*(range(k + 1) for k in bounds)) if matvec(A, x) == tuple(b)]


# (criterion, passed, detail) lines collected by the acceptance tests
ACCEPTANCE = []


def record(criterion, passed, detail):
    line = f"criterion {criterion}: {'PASS' if passed else 'FAIL'}  {detail}"
    ACCEPTANCE.append(line)
    print(line)
    return passed
