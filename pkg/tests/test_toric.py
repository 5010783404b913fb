import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from toricjanet.completion import binomial_janet_basis
from toricjanet.groebner import autoreduce, buchberger, ideal_equal
from toricjanet.monomials import Binomial, Block, DegRevLex, Lex, Weight, binomial_orient
from toricjanet.toric import (
    LatticeVector, ToricInstance, ip_solve, is_homogeneous, kernel_lattice,
    matrix_rank, saturate, toric_generators, vector_to_binomial,
)

from helpers import enumerate_feasible, matvec, random_matrix

DRL = DegRevLex()


def elimination_oracle(F, order):
    """Saturation by the variables through Buchberger and t*x1*...*xn - 1."""
    n = F[0].nvars
    elim = Block(1, Lex(), order)
    lifted = [binomial_orient((0,) + f.lead, (0,) + f.tail, elim) for f in F]
    lifted.append(Binomial((1,) * (n + 1), (0,) * (n + 1)))
    G = buchberger(lifted, elim)
    kept = [binomial_orient(g.lead[1:], g.tail[1:], order) for g in G if not g.lead[0] and not g.tail[0]]
    return autoreduce(kept, order)


def check_kernel(A):
    K = kernel_lattice(A)
    assert len(K) == len(A[0]) - matrix_rank(A)
    for v in K:
        assert matvec(A, v.u) == (0,) * len(A)
    return K


def test_kernel_examples():
    K = check_kernel([[1, 1, 1]])
    assert len(K) == 2
    assert check_kernel([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == []
    [v] = check_kernel([[1, 2]])
    assert v.u in ((2, -1), (-2, 1))


def test_kernel_is_saturated():
    # any integer kernel vector is an integer combination of the basis
    A = [[2, 4, 6]]
    K = [v.u for v in check_kernel(A)]
    for u in [(1, 1, -1), (2, -1, 0), (3, 0, -1)]:
        found = any(
            tuple(a * p + b * q for p, q in zip(*K)) == u
            for a in range(-6, 7) for b in range(-6, 7)
        )
        assert found


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**32))
def test_kernel_random(seed):
    rng = random.Random(seed)
    m, n = rng.randint(1, 3), rng.randint(1, 5)
    check_kernel(random_matrix(rng, m, n, -3, 3))


def test_rank():
    assert matrix_rank([[1, 2], [2, 4]]) == 1
    assert matrix_rank([[0, 0]]) == 0
    assert matrix_rank([[1, 0, 1], [0, 1, 1], [1, 1, 2]]) == 2


def test_lattice_vector():
    v = LatticeVector((3, -2, 0))
    assert v.plus == (3, 0, 0) and v.minus == (0, 2, 0)


def test_vector_to_binomial():
    assert vector_to_binomial((1, -1, 0), DRL) == Binomial((1, 0, 0), (0, 1, 0))
    assert vector_to_binomial((2, -1), DRL) == Binomial((2, 0), (0, 1))
    f = vector_to_binomial(LatticeVector((3, -2)), DRL)
    assert f == Binomial((3, 0), (0, 2)) and is_homogeneous(f, [[2, 3]])
    with pytest.raises(ValueError):
        vector_to_binomial((0, 0), DRL)


def test_saturate_examples():
    assert saturate([], DRL) == []
    f = Binomial((3, 0), (0, 2))
    assert ideal_equal(saturate([f], DRL), [f], DRL)
    # z*(x - y) saturates to x - y
    assert saturate([Binomial((1, 0, 1), (0, 1, 1))], DRL) == [Binomial((1, 0, 0), (0, 1, 0))]


def test_saturate_matches_oracle_on_even_lattice():
    F = [Binomial((2, 0), (0, 2))]
    assert set(saturate(F, DRL)) == set(elimination_oracle(F, DRL))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32))
def test_saturate_matches_oracle(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 3)
    F = []
    while len(F) < rng.randint(1, 2):
        a = tuple(rng.randint(0, 3) for _ in range(n))
        b = tuple(rng.randint(0, 3) for _ in range(n))
        f = binomial_orient(a, b, DRL)
        if f is not None:
            F.append(f)
    assert set(saturate(F, DRL)) == set(elimination_oracle(F, DRL))


def test_toric_generators_examples():
    assert toric_generators([[1, 1]], DRL) == [Binomial((1, 0), (0, 1))]
    assert toric_generators([[1, 0], [0, 1]], DRL) == []
    assert toric_generators([[2, 3]], DRL) == [Binomial((3, 0), (0, 2))]


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32))
def test_toric_homogeneous(seed):
    rng = random.Random(seed)
    A = random_matrix(rng, rng.randint(1, 2), rng.randint(2, 4), 1, 4)
    gens = toric_generators(A, DRL)
    assert all(is_homogeneous(f, A) for f in gens)
    if gens:
        assert all(is_homogeneous(f, A) for f in binomial_janet_basis(gens, DRL))
        # already saturated
        assert ideal_equal(saturate(gens, DRL), gens, DRL)


def test_instance_validation():
    with pytest.raises(ValueError):
        ToricInstance([[1, 1]], (5,), (1, 2), (0, 4))
    with pytest.raises(ValueError):
        ToricInstance([[1, 1]], (5,), (1, -2), (0, 5))
    with pytest.raises(ValueError):
        ToricInstance([[1, 1]], (5,), (1,), (0, 5))
    with pytest.raises(ValueError):
        ip_solve(ToricInstance([[1, 1]], (5,), (0, 0), (0, 5)))


def test_ip_examples():
    inst = ToricInstance([[1, 1]], (5,), (1, 2), (0, 5))
    x = ip_solve(inst)
    assert x == (5, 0) and inst.cost(x) == 5
    inst = ToricInstance([[1, 2]], (4,), (1, 1), (4, 0))
    x = ip_solve(inst)
    assert x == (0, 2) and inst.cost(x) == 2
    inst = ToricInstance([[1, 2]], (4,), (1, 1), (0, 2))
    assert ip_solve(inst) == (0, 2)
    # trivial kernel: the only feasible point
    inst = ToricInstance([[1, 0], [0, 1]], (2, 3), (1, 1), (2, 3))
    assert ip_solve(inst) == (2, 3)


def test_ip_supplied_generators():
    inst = ToricInstance([[1, 2]], (4,), (1, 1), (4, 0))
    assert ip_solve(inst, gens=[Binomial((2, 0), (0, 1))]) == (0, 2)


def brute_force(inst):
    return min(inst.cost(y) for y in enumerate_feasible(inst.A, inst.b))


def random_instance(rng):
    n = rng.randint(2, 4)
    A = random_matrix(rng, rng.randint(1, 2), n, 1, 4)
    x0 = tuple(rng.randint(0, 3) for _ in range(n))
    c = tuple(rng.randint(0, 5) for _ in range(n))
    if not any(c):
        c = (1,) + c[1:]
    return ToricInstance(A, matvec(A, x0), c, x0)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**32))
def test_ip_optimal(seed):
    rng = random.Random(seed)
    inst = random_instance(rng)
    path = []
    x = ip_solve(inst, path=path)
    assert inst.feasible(x)
    assert inst.cost(x) == brute_force(inst)
    costs = [inst.cost(u) for u in path]
    assert costs == sorted(costs, reverse=True)
    order = Weight(inst.c)
    assert all(order.greater(a, b) for a, b in zip(path, path[1:]))
