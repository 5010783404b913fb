"""Classical Buchberger machinery for binomial ideals.

This is the independent check on the Janet pipeline: it uses plain
divisibility and never touches :mod:`toricjanet.janet`.
"""

from dataclasses import dataclass

from .monomials import Binomial, binomial_orient, mono_div, mono_divides, mono_lcm, mono_mul

__all__ = [
    "CriticalPair", "spoly", "nf_ordinary", "buchberger", "autoreduce",
    "reduced_groebner_basis", "ideal_equal", "is_groebner_basis",
]


@dataclass(frozen=True)
class CriticalPair:
    i: int
    j: int
    lcm: tuple


def spoly(f, g, order):
    """S-binomial of ``f`` and ``g``, or None on cancellation."""
    L = mono_lcm(f.lead, g.lead)
    a = mono_mul(mono_div(L, f.lead), f.tail)
    b = mono_mul(mono_div(L, g.lead), g.tail)
    return binomial_orient(a, b, order)


def _sorted_desc(G, order):
    return sorted(G, key=lambda g: order.key(g.lead), reverse=True)


def _reduce_term(t, G):
    # fully reduce a single monomial; G must be sorted descending
    while True:
        for g in G:
            if mono_divides(g.lead, t):
                t = mono_mul(mono_div(t, g.lead), g.tail)
                break
        else:
            return t


def nf_ordinary(h, G, order, presorted=False):
    """Fully reduced normal form of ``h`` by ordinary division.

    Divisors are tried in order of decreasing leading monomial.
    """
    if h is None:
        return None
    if not presorted:
        G = _sorted_desc(G, order)
    lead, tail = h.lead, h.tail
    while True:
        for g in G:
            if mono_divides(g.lead, lead):
                h = binomial_orient(mono_mul(mono_div(lead, g.lead), g.tail), tail, order)
                break
        else:
            break
        if h is None:
            return None
        lead, tail = h.lead, h.tail
    tail = _reduce_term(tail, G)
    if tail == h.tail:
        return h
    return Binomial(lead, tail)


def nf_monomial(u, G, order):
    """Normal form of a single monomial."""
    return _reduce_term(u, _sorted_desc(G, order))


def buchberger(F, order):
    """A (not necessarily reduced) Groebner basis of the ideal of ``F``.

    Normal selection strategy with Buchberger's product and chain criteria.
    """
    G = []
    for f in F:
        f = binomial_orient(f.lead, f.tail, order) if f is not None else None
        if f is not None and f not in G:
            G.append(f)
    if not G:
        return []
    pairs = {}
    for j in range(len(G)):
        for i in range(j):
            pairs[i, j] = mono_lcm(G[i].lead, G[j].lead)
    done = set()
    while pairs:
        (i, j), L = min(pairs.items(), key=lambda kv: (sum(kv[1]), order.key(kv[1]), kv[0]))
        del pairs[i, j]
        done.add((i, j))
        f, g = G[i], G[j]
        if L == mono_mul(f.lead, g.lead):
            continue
        if _chain_skip(i, j, L, G, pairs):
            continue
        h = nf_ordinary(spoly(f, g, order), G, order)
        if h is None:
            continue
        k = len(G)
        G.append(h)
        for i2 in range(k):
            pairs[i2, k] = mono_lcm(G[i2].lead, h.lead)
    return G


def _chain_skip(i, j, L, G, pairs):
    for k, g in enumerate(G):
        if k == i or k == j or not mono_divides(g.lead, L):
            continue
        if (min(i, k), max(i, k)) not in pairs and (min(j, k), max(j, k)) not in pairs:
            return True
    return False


def autoreduce(G, order):
    """The reduced Groebner basis obtained from the Groebner basis ``G``."""
    G = [binomial_orient(g.lead, g.tail, order) for g in G]
    G = _sorted_desc({g for g in G if g is not None}, order)
    minimal = []
    for g in reversed(G):  # ascending: divisors come first
        if not any(mono_divides(m.lead, g.lead) for m in minimal):
            minimal.append(g)
    out = []
    for g in minimal:
        others = [m for m in minimal if m is not g]
        tail = _reduce_term(g.tail, _sorted_desc(others, order))
        out.append(Binomial(g.lead, tail))
    return _sorted_desc(out, order)


def reduced_groebner_basis(F, order):
    return autoreduce(buchberger(F, order), order)


def is_groebner_basis(G, order):
    G = _sorted_desc(G, order)
    for a in range(len(G)):
        for b in range(a):
            s = spoly(G[a], G[b], order)
            if nf_ordinary(s, G, order, presorted=True) is not None:
                return False
    return True


def ideal_equal(F1, F2, order):
    """Equality of the ideals generated by two binomial lists."""
    F1, F2 = list(F1), list(F2)
    if not F1 or not F2:
        return not F1 and not F2
    return set(reduced_groebner_basis(F1, order)) == set(reduced_groebner_basis(F2, order))
