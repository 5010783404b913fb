"""Text formats: ideal files, matrix files and monomial/binomial syntax.

Ideal file::

    vars: x y z w
    order: degrevlex
    x^7 - y^2*z
    x^4*w - y^3

``order`` is ``lex``, ``degrevlex`` or ``weight c1 ... cn`` (weights with
a degrevlex tiebreak).  The declaration order of the variables is their
ranking, ``x`` highest.
"""

import re

from .monomials import MAX_EXPONENT, DegRevLex, Lex, Weight, binomial_orient

__all__ = [
    "ParseError", "parse_monomial", "parse_binomial", "parse_ideal",
    "format_ideal", "parse_matrix", "parse_vector", "order_name",
]

_FACTOR = re.compile(r"^([A-Za-z_][A-Za-z_0-9]*)(?:\^(\d+))?$")


class ParseError(ValueError):
    def __init__(self, message, line=None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def parse_monomial(text, names, line=None):
    text = text.strip()
    index = {name: i for i, name in enumerate(names)}
    exps = [0] * len(names)
    if text == "1":
        return tuple(exps)
    if not text:
        raise ParseError("empty monomial", line)
    for factor in text.split("*"):
        m = _FACTOR.match(factor.strip())
        if m is None:
            raise ParseError(f"malformed monomial {text!r}", line)
        name, k = m.group(1), int(m.group(2) or 1)
        if k > MAX_EXPONENT:
            raise ParseError(f"exponent {k} exceeds 2**63 - 1", line)
        if name not in index:
            raise ParseError(f"unknown variable {name!r}", line)
        exps[index[name]] += k
    return tuple(exps)


def parse_binomial(text, names, order, line=None):
    parts = text.split("-")
    if len(parts) != 2:
        raise ParseError(f"not a binomial: {text!r}", line)
    a = parse_monomial(parts[0], names, line)
    b = parse_monomial(parts[1], names, line)
    f = binomial_orient(a, b, order)
    if f is None:
        err = ParseError(f"zero binomial at line {line}")
        err.line = line
        raise err
    return f


def _parse_order(text, nvars, line):
    words = text.split()
    if words == ["lex"]:
        return Lex()
    if words == ["degrevlex"]:
        return DegRevLex()
    if words and words[0] == "weight":
        try:
            c = [int(w) for w in words[1:]]
        except ValueError:
            raise ParseError(f"bad weight vector {text!r}", line) from None
        if len(c) != nvars or any(a < 0 for a in c):
            raise ParseError(f"weight needs {nvars} nonnegative integers", line)
        return Weight(c)
    raise ParseError(f"unknown order {text!r}", line)


def _header(line, key, lineno):
    prefix = key + ":"
    if not line.startswith(prefix):
        raise ParseError(f"expected '{prefix}'", lineno)
    return line[len(prefix):].strip()


def parse_ideal(text):
    """Parse an ideal file; returns ``(generators, order, names)``."""
    lines = text.splitlines()
    if len(lines) < 2:
        raise ParseError("expected 'vars:' and 'order:' header lines")
    names = _header(lines[0].strip(), "vars", 1).split()
    if not names:
        raise ParseError("no variables", 1)
    if len(set(names)) != len(names):
        raise ParseError("duplicate variable name", 1)
    for name in names:
        if not _FACTOR.match(name) or "^" in name:
            raise ParseError(f"bad variable name {name!r}", 1)
    order = _parse_order(_header(lines[1].strip(), "order", 2), len(names), 2)
    gens = []
    for lineno, raw in enumerate(lines[2:], start=3):
        raw = raw.strip()
        if not raw:
            continue
        gens.append(parse_binomial(raw, names, order, lineno))
    if not gens:
        raise ParseError("no generators")
    return gens, order, names


def order_name(order):
    if isinstance(order, Lex):
        return "lex"
    if isinstance(order, DegRevLex):
        return "degrevlex"
    if isinstance(order, Weight) and isinstance(order.tiebreak, DegRevLex):
        return "weight " + " ".join(map(str, order.c))
    raise ValueError(f"order {order!r} has no file syntax")


def format_ideal(gens, order, names):
    lines = ["vars: " + " ".join(names), "order: " + order_name(order)]
    lines += [f.format(names) for f in gens]
    return "\n".join(lines) + "\n"


def parse_vector(text, line=None):
    try:
        return tuple(int(w) for w in text.replace(",", " ").split())
    except ValueError:
        raise ParseError(f"bad integer vector {text!r}", line) from None


def parse_matrix(text):
    """Matrix file: ``m n`` then ``m`` rows of ``n`` integers.

    Returns ``(A, extra)`` where ``extra`` holds any further nonblank lines
    parsed as integer vectors (used for ``b``, ``c`` and ``x0``).
    """
    lines = [(i, s.strip()) for i, s in enumerate(text.splitlines(), start=1) if s.strip()]
    if not lines:
        raise ParseError("empty matrix file")
    dims = parse_vector(lines[0][1], lines[0][0])
    if len(dims) != 2 or min(dims) < 1:
        raise ParseError("first line must be 'm n'", lines[0][0])
    m, n = dims
    if len(lines) < m + 1:
        raise ParseError(f"expected {m} matrix rows")
    A = []
    for lineno, s in lines[1:m + 1]:
        row = parse_vector(s, lineno)
        if len(row) != n:
            raise ParseError(f"expected {n} entries", lineno)
        A.append(row)
    extra = [parse_vector(s, lineno) for lineno, s in lines[m + 1:]]
    return A, extra
