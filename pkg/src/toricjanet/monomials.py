"""Exponent-vector monomials, binomials and admissible monomial orders.

A monomial over ``n`` variables is a tuple of ``n`` nonnegative ints, so
``x1^2*x3`` in three variables is ``(2, 0, 1)`` and the unit monomial is
``(0, 0, 0)``.  Variable ``i`` (0-based in code) ranks above variable
``i + 1`` in every order that looks at variables positionally.

Binomials carry no coefficients: ``Binomial(lead, tail)`` stands for
``x^lead - x^tail``.  The zero binomial is ``None``.
"""

from operator import add, sub

__all__ = [
    "MAX_EXPONENT", "ExponentOverflowError", "NotDivisibleError",
    "one", "mono_mul", "mono_div", "mono_divides", "mono_lcm", "mono_gcd",
    "degree", "MonomialOrder", "Lex", "DegRevLex", "Weight", "Block",
    "order_cmp", "Binomial", "binomial_orient", "reduce_step",
    "format_monomial", "default_names",
]

MAX_EXPONENT = 2**63 - 1


class ExponentOverflowError(ArithmeticError):
    """An exponent left the signed 64-bit range."""


class NotDivisibleError(ArithmeticError):
    """Monomial division with a non-divisor."""


def one(n):
    return (0,) * n


def _check(w):
    if w and max(w) > MAX_EXPONENT:
        raise ExponentOverflowError("exponent exceeds 2**63 - 1")
    return w


def mono_mul(u, v):
    """Product of two monomials, with checked exponents."""
    return _check(tuple(map(add, u, v)))


def mono_div(u, v):
    """Quotient ``u / v``; raises NotDivisibleError when ``v`` does not divide ``u``."""
    w = tuple(map(sub, u, v))
    if w and min(w) < 0:
        raise NotDivisibleError(f"{v} does not divide {u}")
    return w


def mono_divides(v, u):
    """True iff ``v`` divides ``u``."""
    return all(a <= b for a, b in zip(v, u))


def mono_lcm(u, v):
    return tuple(map(max, u, v))


def mono_gcd(u, v):
    return tuple(map(min, u, v))


def degree(u):
    return sum(u)


class MonomialOrder:
    """Admissible monomial order.

    Subclasses provide ``key(u)``: a tuple whose natural ordering agrees
    with the monomial order for a fixed number of variables.
    """

    def key(self, u):
        raise NotImplementedError

    def greater(self, u, v):
        return self.key(u) > self.key(v)

    def cmp(self, u, v):
        ku, kv = self.key(u), self.key(v)
        return (ku > kv) - (ku < kv)

    def __eq__(self, other):
        return type(self) is type(other) and self.__dict__ == other.__dict__

    def __hash__(self):
        return hash((type(self).__name__, repr(self)))


class Lex(MonomialOrder):
    def key(self, u):
        return u

    def greater(self, u, v):
        return u > v

    def __repr__(self):
        return "Lex()"


class DegRevLex(MonomialOrder):
    """Graded reverse lexicographic order: on equal degree, the smaller
    exponent in the last differing variable wins."""

    def key(self, u):
        return (sum(u),) + tuple(-e for e in reversed(u))

    def greater(self, u, v):
        du, dv = sum(u), sum(v)
        if du != dv:
            return du > dv
        for i in range(len(u) - 1, -1, -1):
            if u[i] != v[i]:
                return u[i] < v[i]
        return False

    def __repr__(self):
        return "DegRevLex()"


class Weight(MonomialOrder):
    """Compare ``c . u`` first and break ties with ``tiebreak``.

    Admissible for nonnegative weights and an admissible tiebreak.
    """

    def __init__(self, c, tiebreak=None):
        c = tuple(int(a) for a in c)
        if any(a < 0 for a in c):
            raise ValueError("weights must be nonnegative")
        self.c = c
        self.tiebreak = DegRevLex() if tiebreak is None else tiebreak

    def weight(self, u):
        return sum(a * e for a, e in zip(self.c, u))

    def key(self, u):
        return (self.weight(u),) + tuple(self.tiebreak.key(u))

    def greater(self, u, v):
        wu, wv = self.weight(u), self.weight(v)
        if wu != wv:
            return wu > wv
        return self.tiebreak.greater(u, v)

    def __repr__(self):
        return f"Weight({self.c}, {self.tiebreak!r})"


class Block(MonomialOrder):
    """Elimination order: the first ``split`` variables are compared with
    ``left``; ties are broken on the remaining variables with ``right``."""

    def __init__(self, split, left=None, right=None):
        self.split = split
        self.left = DegRevLex() if left is None else left
        self.right = DegRevLex() if right is None else right

    def key(self, u):
        s = self.split
        return tuple(self.left.key(u[:s])) + tuple(self.right.key(u[s:]))

    def greater(self, u, v):
        s = self.split
        a, b = u[:s], v[:s]
        if a != b:
            return self.left.greater(a, b)
        return self.right.greater(u[s:], v[s:])

    def __repr__(self):
        return f"Block({self.split}, {self.left!r}, {self.right!r})"


def order_cmp(order, u, v):
    """Return -1, 0 or 1 as ``u`` is less than, equal to or greater than ``v``."""
    if u == v:
        return 0
    return 1 if order.greater(u, v) else -1


def default_names(n):
    return [f"x{i + 1}" for i in range(n)]


def format_monomial(u, names=None):
    names = names or default_names(len(u))
    parts = []
    for name, e in zip(names, u):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return "*".join(parts) or "1"


class Binomial:
    """The binomial ``x^lead - x^tail`` with ``lead`` greater than ``tail``.

    Orientation is the caller's job; build from arbitrary monomials with
    :func:`binomial_orient`.
    """

    __slots__ = ("lead", "tail")

    def __init__(self, lead, tail):
        if lead == tail:
            raise ValueError("equal terms: use None for the zero binomial")
        self.lead = lead
        self.tail = tail

    @property
    def nvars(self):
        return len(self.lead)

    def __eq__(self, other):
        if not isinstance(other, Binomial):
            return NotImplemented
        return self.lead == other.lead and self.tail == other.tail

    def __hash__(self):
        return hash((self.lead, self.tail))

    def __iter__(self):
        yield self.lead
        yield self.tail

    def mul_monomial(self, m):
        # order is multiplicative, so orientation survives
        return Binomial(mono_mul(self.lead, m), mono_mul(self.tail, m))

    def format(self, names=None):
        return f"{format_monomial(self.lead, names)} - {format_monomial(self.tail, names)}"

    def __repr__(self):
        return f"Binomial({self.format()})"


def binomial_orient(a, b, order):
    """Binomial with the larger of ``a``, ``b`` leading, or None if they are equal."""
    if a == b:
        return None
    if order.greater(a, b):
        return Binomial(a, b)
    return Binomial(b, a)


def reduce_step(h, g, t, order):
    """Replace the term ``t`` of ``h`` by ``(t / lm(g)) * tail(g)``.

    The result is again a binomial (re-oriented) or None.
    """
    if t == h.lead:
        other = h.tail
    elif t == h.tail:
        other = h.lead
    else:
        raise ValueError(f"{t} is not a term of {h}")
    q = mono_div(t, g.lead)
    return binomial_orient(mono_mul(q, g.tail), other, order)
