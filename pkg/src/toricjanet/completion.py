"""Involutive completion of binomial sets to minimal Janet bases."""

import heapq
import itertools
from bisect import bisect_left, insort

from .janet import JanetTree, is_janet_divisor, nm_vars
from .monomials import (
    MAX_EXPONENT, Binomial, ExponentOverflowError, binomial_orient, degree,
    mono_divides, mono_lcm, mono_mul,
)

__all__ = [
    "Triple", "JanetCompletion", "criterion1", "criterion2", "nf_j",
    "janet_normal_form", "janet_reduce", "binomial_janet_basis",
    "is_janet_autoreduced", "is_janet_basis", "sort_basis",
]


class Triple:
    """A binomial with the leading monomial of its ancestor and the
    nonmultiplicative variables already used for its prolongations."""

    __slots__ = ("bin", "anc", "nmp")

    def __init__(self, bin, anc=None, nmp=()):
        self.bin = bin
        self.anc = bin.lead if anc is None else anc
        self.nmp = set(nmp)

    @property
    def lm(self):
        return self.bin.lead

    def __repr__(self):
        return f"Triple({self.bin!r}, anc={self.anc}, nmp={sorted(self.nmp)})"


def _lm(p):
    return p.bin.lead


def criterion1(f, g):
    return mono_divides(mono_mul(f.anc, g.anc), f.bin.lead)


def criterion2(f, g):
    return degree(mono_lcm(f.anc, g.anc)) < degree(f.bin.lead)


def _replace(t, g):
    # t / lm(g) * tail(g); t is a Janet multiple of lm(g)
    m = tuple([a - b + c for a, b, c in zip(t, g.lead, g.tail)])
    if max(m) > MAX_EXPONENT:
        raise ExponentOverflowError("exponent exceeds 2**63 - 1")
    return m


def janet_normal_form(h, tree, order):
    """Janet normal form of the binomial ``h`` modulo the triples stored in ``tree``.

    Every term is reduced until neither has a Janet divisor; returns None
    when ``h`` reduces to zero.
    """
    find = tree.find
    greater = order.greater
    lead, tail = h.lead, h.tail
    changed = False
    while True:
        g = find(lead)
        if g is not None:
            m = _replace(lead, g.bin)
            if m == tail:
                return None
            if greater(m, tail):
                lead = m
            else:
                lead, tail = tail, m
            changed = True
            continue
        g = find(tail)
        if g is None:
            break
        tail = _replace(tail, g.bin)
        changed = True
    return Binomial(lead, tail) if changed else h


def nf_j(f, tree, order, stats=None):
    """Janet normal form of ``bin(f)`` with the involutive criteria applied.

    When the head of a prolongation is Janet reducible by ``g`` and one of
    the criteria holds for ``(f, g)``, the binomial is known to reduce to
    zero and None is returned right away.
    """
    h = f.bin
    if h.lead != f.anc:
        g = tree.find(h.lead)
        if g is not None and (criterion1(f, g) or criterion2(f, g)):
            if stats is not None:
                stats["criteria"] += 1
            return None
    return janet_normal_form(h, tree, order)


def janet_reduce(Q, tree, order, stats=None):
    """Janet-reduce every triple of ``Q`` modulo ``tree``, dropping zeros.

    A triple whose leading monomial changed restarts as its own ancestor.
    """
    out = []
    for p in Q:
        h = nf_j(p, tree, order, stats)
        if h is None:
            continue
        if h.lead != p.bin.lead:
            out.append(Triple(h, h.lead))
        else:
            out.append(Triple(h, p.anc, p.nmp))
    return out


class JanetCompletion:
    """State of one run: the tree-backed set ``T`` and the queue ``Q``.

    ``trace`` is called as ``trace(iteration, len(T), len(Q), event)``.
    With ``audit=True`` binomials discarded by the criteria are kept in
    ``self.discarded``.
    """

    def __init__(self, nvars, order, trace=None, audit=False):
        self.nvars = nvars
        self.order = order
        self.tree = JanetTree(nvars, key=_lm)
        self._keys = []  # sorted (order key, lm) over T
        self._queue = []
        self._seq = itertools.count()
        self.trace = trace
        self.discarded = [] if audit else None
        self.stats = {"criteria": 0, "iterations": 0, "prolongations": 0,
                      "displaced": 0, "zero": 0}

    # queue --------------------------------------------------------------

    def push(self, p):
        heapq.heappush(self._queue, (self.order.key(p.bin.lead), next(self._seq), p))

    def pop(self):
        return heapq.heappop(self._queue)[2]

    @property
    def queue(self):
        return [entry[2] for entry in sorted(self._queue)]

    # T ------------------------------------------------------------------

    def add(self, p):
        affected = self.tree.insert(p)
        insort(self._keys, (self.order.key(p.bin.lead), p.bin.lead))
        return affected

    def discard(self, p):
        _, affected = self.tree.remove(p.bin.lead)
        del self._keys[bisect_left(self._keys, (self.order.key(p.bin.lead),))]
        return affected

    def above(self, u):
        """Triples of T whose leading monomial is greater than ``u``."""
        i = bisect_left(self._keys, (self.order.key(u),))
        return [self.tree.get(lm) for _, lm in self._keys[i:] if lm != u]

    @property
    def basis(self):
        return sort_basis([p.bin for p in self.tree.elements()], self.order)

    # algorithm ----------------------------------------------------------

    def _emit(self, event):
        if self.trace is not None:
            self.trace(self.stats["iterations"], len(self.tree), len(self._queue), event)

    def _nf(self, p):
        fired = self.stats["criteria"]
        h = nf_j(p, self.tree, self.order, self.stats)
        if self.discarded is not None and self.stats["criteria"] > fired:
            self.discarded.append(p.bin)
        return h

    def run(self, F):
        order = self.order
        gens = []
        seen = set()
        for f in F:
            f = binomial_orient(f.lead, f.tail, order) if f is not None else None
            if f is not None and f not in seen:
                seen.add(f)
                gens.append(f)
        if not gens:
            raise ValueError("no nonzero generators")
        gens.sort(key=lambda f: order.key(f.lead))
        first = Triple(gens[0])
        self.add(first)
        for p in janet_reduce([Triple(f) for f in gens[1:]], self.tree, order, self.stats):
            self.push(p)
        dirty = {id(first): first}
        self._prolong(dirty)

        while self._queue:
            self.stats["iterations"] += 1
            p = self.pop()
            h = self._nf(p)
            if h is None:
                self.stats["zero"] += 1
                continue
            if h.lead != p.bin.lead:
                # head moved: requeue as a fresh element at its new place
                self.push(Triple(h, h.lead))
                continue
            p = Triple(h, p.anc, p.nmp)
            dirty = {}
            if p.bin.lead == p.anc:
                for r in self.above(p.bin.lead):
                    for q in self.discard(r):
                        dirty[id(q)] = q
                    self.push(r)
                    self.stats["displaced"] += 1
                h = janet_normal_form(p.bin, self.tree, order)
                if h is None:
                    self._emit("zero")
                    continue
                if h.lead != p.bin.lead:
                    self.push(Triple(h, h.lead))
                    continue
                p.bin = h
            for q in self.add(p):
                dirty[id(q)] = q
            dirty[id(p)] = p
            self._prolong(dirty)
            self._emit("insert")
        return self.basis

    def _prolong(self, dirty):
        tree = self.tree
        for q in dirty.values():
            u = q.bin.lead
            if tree.get(u, None) is not q:
                continue
            nm = tree.nonmultiplicative(u)
            for x in sorted(nm - q.nmp):
                e = [0] * self.nvars
                e[x] = 1
                self.push(Triple(q.bin.mul_monomial(tuple(e)), q.anc))
                self.stats["prolongations"] += 1
            q.nmp = nm


def binomial_janet_basis(F, order, trace=None, stats=None):
    """Minimal Janet basis of the ideal generated by the binomials ``F``.

    Returned sorted by decreasing leading monomial.
    """
    F = list(F)
    if not F:
        raise ValueError("no generators")
    run = JanetCompletion(F[0].nvars, order, trace=trace)
    basis = run.run(F)
    if stats is not None:
        stats.update(run.stats)
    return basis


def sort_basis(G, order):
    return sorted(G, key=lambda f: order.key(f.lead), reverse=True)


def is_janet_autoreduced(G):
    leads = [f.lead for f in G]
    if len(set(leads)) != len(leads):
        return False
    nms = nm_vars(leads)
    for f in G:
        for t in f:
            for g in leads:
                if g != f.lead and is_janet_divisor(g, t, nms[g]):
                    return False
    return True


def is_janet_basis(G, order):
    """Check autoreduction and that every nonmultiplicative prolongation
    has Janet normal form zero."""
    G = [binomial_orient(f.lead, f.tail, order) for f in G]
    if not G or any(f is None for f in G):
        return False
    if not is_janet_autoreduced(G):
        return False
    n = G[0].nvars
    tree = JanetTree.build(n, [Triple(f) for f in G], key=_lm)
    for f in G:
        for x in tree.nonmultiplicative(f.lead):
            e = [0] * n
            e[x] = 1
            if janet_normal_form(f.mul_monomial(tuple(e)), tree, order) is not None:
                return False
    return True
