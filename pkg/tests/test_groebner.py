import random

from hypothesis import given, settings
from hypothesis import strategies as st

from toricjanet.completion import binomial_janet_basis
from toricjanet.groebner import (
    autoreduce, buchberger, ideal_equal, is_groebner_basis, nf_ordinary,
    reduced_groebner_basis, spoly,
)
from toricjanet.monomials import Binomial, DegRevLex, Lex

from helpers import SMALL_GB, SMALL_GENS, SMALL_JANET, XYZW, bins, random_ideal

DRL = DegRevLex()


def test_spoly():
    f = Binomial((2, 0), (0, 1))
    g = Binomial((0, 2), (1, 0))
    assert spoly(f, f, DRL) is None
    assert spoly(f, g, DRL) == Binomial((3, 0), (0, 3))


def test_spoly_coprime_reduces_to_zero():
    f = Binomial((1, 0), (0, 0))
    g = Binomial((0, 1), (0, 0))
    s = spoly(f, g, DRL)
    assert s == Binomial((1, 0), (0, 1))
    assert nf_ordinary(s, [f, g], DRL) is None


def test_nf_ordinary():
    g = Binomial((2, 0), (0, 2))
    assert nf_ordinary(g, [g], DRL) is None
    assert nf_ordinary(None, [g], DRL) is None
    h = Binomial((1, 0), (0, 1))
    assert nf_ordinary(h, [g], DRL) == h
    GB = bins(SMALL_GB, XYZW, DRL)
    assert nf_ordinary(bins(["x^4*y - x*z*w"], XYZW, DRL)[0], GB, DRL) is None


def test_buchberger_small():
    F = bins(SMALL_GENS, XYZW, DRL)
    G = buchberger(F, DRL)
    assert is_groebner_basis(G, DRL)
    assert set(autoreduce(G, DRL)) == set(bins(SMALL_GB, XYZW, DRL))
    f = F[0]
    assert buchberger([f], DRL) == [f]


def test_autoreduce():
    GB = bins(SMALL_GB, XYZW, DRL)
    assert set(autoreduce(bins(SMALL_JANET, XYZW, DRL), DRL)) == set(GB)
    assert set(autoreduce(GB, DRL)) == set(GB)


def test_ideal_equal():
    F = bins(SMALL_GENS, XYZW, DRL)
    assert ideal_equal(F, bins(SMALL_GB, XYZW, DRL), DRL)
    assert ideal_equal(F, binomial_janet_basis(F, DRL), DRL)
    x_y = Binomial((1, 0, 0), (0, 1, 0))
    x_z = Binomial((1, 0, 0), (0, 0, 1))
    assert not ideal_equal([x_y], [x_z], Lex())


def test_not_a_groebner_basis():
    # the S-binomial y - z is irreducible
    F = [Binomial((1, 0, 0), (0, 1, 0)), Binomial((1, 0, 0), (0, 0, 1))]
    assert not is_groebner_basis(F, Lex())
    # x^3 - y^3 reduces to zero here
    assert is_groebner_basis([Binomial((2, 0), (0, 1)), Binomial((0, 2), (1, 0))], DRL)


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 2**32))
def test_reduced_basis_is_canonical(seed):
    rng = random.Random(seed)
    F, order = random_ideal(rng)
    R = reduced_groebner_basis(F, order)
    rng.shuffle(F)
    assert set(reduced_groebner_basis(F, order)) == set(R)
    assert set(autoreduce(binomial_janet_basis(F, order), order)) == set(R)
    assert is_groebner_basis(R, order)
