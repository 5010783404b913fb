"""Toric ideals of integer matrices and integer programming via Conti-Traverso."""

from dataclasses import dataclass

from .completion import binomial_janet_basis
from .janet import JanetTree
from .monomials import Binomial, Block, DegRevLex, Lex, Weight, binomial_orient

__all__ = [
    "LatticeVector", "ToricInstance", "kernel_lattice", "matrix_rank",
    "vector_to_binomial", "saturate", "toric_generators", "ip_solve",
    "janet_reduce_monomial", "is_homogeneous",
]


@dataclass(frozen=True)
class LatticeVector:
    """Integer vector split as ``u = plus - minus`` with disjoint supports."""

    u: tuple

    def __post_init__(self):
        object.__setattr__(self, "u", tuple(int(a) for a in self.u))

    @property
    def plus(self):
        return tuple(max(a, 0) for a in self.u)

    @property
    def minus(self):
        return tuple(max(-a, 0) for a in self.u)


def _matvec(A, x):
    return tuple(sum(a * b for a, b in zip(row, x)) for row in A)


@dataclass
class ToricInstance:
    """``min c.x  subject to  A x = b, x in N^n``, with a known feasible ``x0``."""

    A: list
    b: tuple
    c: tuple
    x0: tuple

    def __post_init__(self):
        self.A = [tuple(int(a) for a in row) for row in self.A]
        self.b = tuple(int(a) for a in self.b)
        self.c = tuple(int(a) for a in self.c)
        self.x0 = tuple(int(a) for a in self.x0)
        n = len(self.x0)
        if any(len(row) != n for row in self.A) or len(self.c) != n or len(self.b) != len(self.A):
            raise ValueError("dimension mismatch")
        if any(a < 0 for a in self.c):
            raise ValueError("cost vector must be nonnegative")
        if any(a < 0 for a in self.x0):
            raise ValueError("x0 must be nonnegative")
        if _matvec(self.A, self.x0) != self.b:
            raise ValueError("A x0 != b")

    @property
    def nvars(self):
        return len(self.x0)

    def cost(self, x):
        return sum(a * b for a, b in zip(self.c, x))

    def feasible(self, x):
        return all(a >= 0 for a in x) and _matvec(self.A, x) == self.b


def _column_echelon(A):
    """Unimodular column reduction of ``A``; returns (rank, U) with the
    last ``n - rank`` columns of ``U`` spanning the integer kernel."""
    m = len(A)
    n = len(A[0]) if m else 0
    M = [list(row) for row in A]
    U = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap(c1, c2):
        for R in (M, U):
            for row in R:
                row[c1], row[c2] = row[c2], row[c1]

    def axpy(dst, src, q):
        # column dst -= q * column src
        for R in (M, U):
            for row in R:
                row[dst] -= q * row[src]

    piv = 0
    for r in range(m):
        if piv == n:
            break
        while True:
            nz = [c for c in range(piv, n) if M[r][c]]
            if not nz:
                break
            c = min(nz, key=lambda c: abs(M[r][c]))
            if c != piv:
                swap(c, piv)
            rest = [c for c in range(piv + 1, n) if M[r][c]]
            if not rest:
                break
            for c in rest:
                axpy(c, piv, M[r][c] // M[r][piv])
        if any(M[r][c] for c in range(piv, n)):
            piv += 1
    return piv, U


def matrix_rank(A):
    """Rank over the rationals, by fraction-free elimination."""
    M = [list(row) for row in A]
    rank = 0
    cols = len(M[0]) if M else 0
    for c in range(cols):
        p = next((r for r in range(rank, len(M)) if M[r][c]), None)
        if p is None:
            continue
        M[rank], M[p] = M[p], M[rank]
        for r in range(rank + 1, len(M)):
            if M[r][c]:
                M[r] = [M[rank][c] * x - M[r][c] * y for x, y in zip(M[r], M[rank])]
        rank += 1
    return rank


def kernel_lattice(A):
    """A basis of the integer kernel of ``A`` as LatticeVectors."""
    A = [list(map(int, row)) for row in A]
    n = len(A[0])
    rank, U = _column_echelon(A)
    return [LatticeVector(tuple(U[i][j] for i in range(n))) for j in range(rank, n)]


def vector_to_binomial(u, order):
    """``x^{u+} - x^{u-}`` for a nonzero lattice vector."""
    if not isinstance(u, LatticeVector):
        u = LatticeVector(u)
    if not any(u.u):
        raise ValueError("zero lattice vector")
    return binomial_orient(u.plus, u.minus, order)


def saturate(F, order):
    """Generators of ``<F> : (x1 ... xn)^oo``.

    Adjoins ``t`` with ``t*x1*...*xn - 1``, computes a Janet basis for an
    order eliminating ``t`` and keeps the elements free of ``t``.
    """
    F = [f for f in F if f is not None]
    if not F:
        return []
    n = F[0].nvars
    elim = Block(1, Lex(), order)
    lifted = [binomial_orient((0,) + f.lead, (0,) + f.tail, elim) for f in F]
    lifted.append(Binomial((1,) * (n + 1), (0,) * (n + 1)))
    G = binomial_janet_basis(lifted, elim)
    out = [binomial_orient(g.lead[1:], g.tail[1:], order)
           for g in G if g.lead[0] == 0 and g.tail[0] == 0]
    return _minimal([g for g in out if g is not None], order)


def _minimal(G, order):
    from .groebner import autoreduce

    return autoreduce(G, order) if G else []


def toric_generators(A, order):
    """Binomial generators of the toric ideal of ``A``."""
    F = [vector_to_binomial(u, order) for u in kernel_lattice(A)]
    return saturate(F, order)


def is_homogeneous(f, A):
    """``A . lead == A . tail`` for the exponent vectors of ``f``."""
    return _matvec(A, f.lead) == _matvec(A, f.tail)


def janet_reduce_monomial(u, tree, path=None):
    """Janet normal form of a monomial modulo the binomials in ``tree``."""
    while True:
        if path is not None:
            path.append(u)
        g = tree.find(u)
        if g is None:
            return u
        u = tuple(a - b + c for a, b, c in zip(u, g.lead, g.tail))


def ip_solve(inst, gens=None, tiebreak=None, path=None):
    """Optimal point of the integer program ``inst``.

    ``gens`` may supply generators of the toric ideal of ``inst.A`` and
    skips the kernel and saturation steps.  Among several optima the one
    smallest in the tiebreak order (default degrevlex) is returned.
    """
    if not any(inst.c):
        raise ValueError("cost vector is zero")
    order = Weight(inst.c, tiebreak or DegRevLex())
    basis = toric_generators(inst.A, order) if gens is None else list(gens)
    if not basis:
        return inst.x0
    G = binomial_janet_basis(basis, order)
    tree = JanetTree.build(inst.nvars, G, key=lambda g: g.lead)
    return janet_reduce_monomial(inst.x0, tree, path)
