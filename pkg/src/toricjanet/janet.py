"""Janet division: multiplicative variables, Janet trees and divisor search.

Variables are 0-based positions in the exponent tuple; ``x_1`` of the usual
notation is position 0.  Tree dumps print 1-based indices.

A tree node holds ``(var, dg)``, the next-in-degree link ``ndg``, the
next-in-variable link ``nvr`` and, for leaves, the stored element ``bnm``
together with its leading monomial ``mono``.  ``nvr`` links jump over
variables in which every monomial of the current group has degree zero,
so sparse monomials give short paths.

Canonical shape for a group ``H`` of monomials agreeing on variables
``< v`` (the construction :meth:`JanetTree.build` performs, and the shape
insert/remove keep):

* if every monomial of ``H`` is zero on variables ``>= v`` then ``H`` is a
  single monomial, stored in a *terminal* leaf ``(v, 0)``;
* otherwise let ``s`` be the first variable ``>= v`` nonzero somewhere in
  ``H``.  The chain for ``H`` is one node ``(s, d)`` per degree ``d`` of
  ``x_s`` occurring in ``H``, linked by ``ndg`` in increasing ``d``.  The
  last node is itself a leaf when its subgroup is one monomial with no
  nonzero degree after ``s``; every other node points through ``nvr`` at
  the chain of its subgroup starting from ``s + 1``.

The root is ``(0, 0)``; when the chain of the whole set starts elsewhere a
bare ``(0, 0)`` node is put in front of it.
"""

__all__ = [
    "JanetError", "DuplicateMonomialError", "JanetUniquenessError",
    "JanetNode", "JanetTree", "nm_vars", "is_janet_divisor",
    "j_divisor_naive", "jt_build",
]


class JanetError(Exception):
    pass


class DuplicateMonomialError(JanetError, ValueError):
    pass


class JanetUniquenessError(JanetError):
    """Two Janet divisors were found for one monomial."""


def _identity(u):
    return u


class JanetNode:
    __slots__ = ("var", "dg", "ndg", "nvr", "bnm", "mono")

    def __init__(self, var, dg, ndg=None, nvr=None, bnm=None, mono=None):
        self.var = var
        self.dg = dg
        self.ndg = ndg
        self.nvr = nvr
        self.bnm = bnm
        self.mono = mono

    @property
    def is_leaf(self):
        return self.mono is not None

    def is_terminal(self):
        return self.mono is not None and self.dg == 0

    def __repr__(self):
        tag = f" {self.mono}" if self.mono is not None else ""
        return f"JanetNode({self.var + 1},{self.dg}{tag})"


def _zero_from(u, start):
    return not any(u[start:])


def _empty(node):
    return node.mono is None and node.nvr is None


def _chain_nodes(head):
    nodes = []
    while head is not None:
        nodes.append(head)
        head = head.ndg
    return nodes


def _link(nodes):
    for a, b in zip(nodes, nodes[1:]):
        a.ndg = b
    return nodes[0]


class JanetTree:
    """Binary Janet tree over elements with pairwise distinct leading monomials.

    ``key`` maps a stored element to its leading monomial; by default the
    elements are the monomials themselves.
    """

    def __init__(self, nvars, key=None):
        self.nvars = nvars
        self.key = key or _identity
        self.root = None
        self._head = None
        self.count = 0

    @classmethod
    def build(cls, nvars, elements=(), key=None):
        tree = cls(nvars, key)
        items = [(tree.key(e), e) for e in elements]
        if items:
            tree._head = tree._chain(0, items)
            tree.count = len(items)
        tree._rewrap()
        return tree

    def __len__(self):
        return self.count

    # construction -------------------------------------------------------

    def _chain(self, v, items):
        n = self.nvars
        s = v
        while s < n and all(u[s] == 0 for u, _ in items):
            s += 1
        if s == n:
            if len(items) > 1:
                raise DuplicateMonomialError(f"duplicate monomial {items[0][0]}")
            u, e = items[0]
            return JanetNode(v, 0, bnm=e, mono=u)
        groups = {}
        for u, e in items:
            groups.setdefault(u[s], []).append((u, e))
        lo, hi = min(groups), max(groups)
        nodes = [JanetNode(s, d) for d in range(lo, hi + 1)]
        for node in nodes:
            sub = groups.get(node.dg)
            if sub is None:
                continue
            if node.dg == hi and len(sub) == 1 and _zero_from(sub[0][0], s + 1):
                node.mono, node.bnm = sub[0]
            else:
                node.nvr = self._chain(s + 1, sub)
        return _link(nodes)

    def _single(self, s, u, e):
        # node (s, u[s]) carrying u alone, as the top of its chain
        node = JanetNode(s, u[s])
        if _zero_from(u, s + 1):
            node.mono, node.bnm = u, e
        else:
            node.nvr = self._chain(s + 1, [(u, e)])
        return node

    def _rewrap(self):
        head = self._head
        if head is None or (head.var == 0 and head.dg == 0):
            self.root = head
        elif head.var == 0:
            self.root = _link([JanetNode(0, d) for d in range(head.dg)] + [head])
        else:
            self.root = JanetNode(0, 0, nvr=head)

    # queries ------------------------------------------------------------

    def find(self, w):
        """The stored element whose leading monomial Janet-divides ``w``, or None."""
        node = self.root
        if node is None:
            return None
        while node.dg == 0 or w[node.var] >= node.dg:
            nd = node.ndg
            while nd is not None and w[nd.var] >= nd.dg:
                node = nd
                nd = node.ndg
            if node.nvr is not None:
                node = node.nvr
            elif nd is not None:
                return None
            else:
                return node.bnm
        return None

    def visit_count(self, w):
        """Number of nodes :meth:`find` visits for ``w``."""
        node = self.root
        if node is None:
            return 0
        visits = 1
        while node.dg == 0 or w[node.var] >= node.dg:
            nd = node.ndg
            while nd is not None and w[nd.var] >= nd.dg:
                node = nd
                nd = node.ndg
                visits += 1
            if node.nvr is not None:
                node = node.nvr
                visits += 1
            else:
                break
        return visits

    def _locate(self, u):
        # (path of chain nodes, leaf) for a stored monomial, else KeyError
        node = self._head
        path = []
        while node is not None:
            if node.is_terminal():
                break
            d = u[node.var]
            while node is not None and node.dg < d:
                node = node.ndg
            if node is None or node.dg != d:
                raise KeyError(u)
            path.append(node)
            if node.mono is not None:
                break
            node = node.nvr
        if node is None or node.mono != u:
            raise KeyError(u)
        return path, node

    def __contains__(self, u):
        try:
            self._locate(u)
        except KeyError:
            return False
        return True

    def get(self, u, *default):
        try:
            return self._locate(u)[1].bnm
        except KeyError:
            if default:
                return default[0]
            raise

    def nonmultiplicative(self, u):
        """Janet nonmultiplicative variables of the stored monomial ``u``."""
        path, _ = self._locate(u)
        return {node.var for node in path if node.ndg is not None}

    def elements(self):
        return [leaf.bnm for leaf in self._leaves(self._head)]

    def monomials(self):
        return [leaf.mono for leaf in self._leaves(self._head)]

    def __iter__(self):
        return iter(self.elements())

    @staticmethod
    def _leaves(node):
        out = []
        stack = [node] if node is not None else []
        while stack:
            node = stack.pop()
            if node.mono is not None:
                out.append(node)
                continue
            if node.ndg is not None:
                stack.append(node.ndg)
            if node.nvr is not None:
                stack.append(node.nvr)
        return out

    # mutation -----------------------------------------------------------

    def insert(self, element):
        """Add an element; returns the other stored elements whose
        nonmultiplicative variables may have changed."""
        u = self.key(element)
        affected = []
        if self._head is None:
            self._head = self._chain(0, [(u, element)])
        else:
            self._head = self._insert(self._head, 0, u, element, affected)
        self.count += 1
        self._rewrap()
        return affected

    def _insert(self, node, v, u, e, affected):
        if node.is_terminal():
            if node.mono == u:
                raise DuplicateMonomialError(f"duplicate monomial {u}")
            affected.append(node.bnm)
            return self._chain(v, [(node.mono, node.bnm), (u, e)])
        s = node.var
        for a in range(v, s):
            if u[a]:
                # x_a is zero on the whole group but not on u
                affected.extend(leaf.bnm for leaf in self._leaves(node))
                nodes = [JanetNode(a, d) for d in range(u[a])] + [self._single(a, u, e)]
                nodes[0].nvr = node
                return _link(nodes)
        d = u[s]
        nodes = _chain_nodes(node)
        lo, hi = nodes[0].dg, nodes[-1].dg
        if d < lo:
            first = JanetNode(s, d, nvr=self._chain(s + 1, [(u, e)]))
            return _link([first] + [JanetNode(s, k) for k in range(d + 1, lo)] + nodes)
        if d > hi:
            last = nodes[-1]
            if last.mono is not None:
                last.nvr = JanetNode(s + 1, 0, bnm=last.bnm, mono=last.mono)
                affected.append(last.bnm)
                last.mono = last.bnm = None
            else:
                affected.extend(leaf.bnm for leaf in self._leaves(last.nvr))
            tail = [JanetNode(s, k) for k in range(hi + 1, d)] + [self._single(s, u, e)]
            return _link(nodes + tail)
        cur = nodes[d - lo]
        if cur.mono is not None:
            if cur.mono == u:
                raise DuplicateMonomialError(f"duplicate monomial {u}")
            cur.nvr = self._chain(s + 1, [(cur.mono, cur.bnm), (u, e)])
            affected.append(cur.bnm)
            cur.mono = cur.bnm = None
        elif cur.nvr is None:
            cur.nvr = self._chain(s + 1, [(u, e)])
        else:
            cur.nvr = self._insert(cur.nvr, s + 1, u, e, affected)
        return node

    def remove(self, u):
        """Remove and return the element with leading monomial ``u``.

        Returns ``(element, affected)`` where ``affected`` lists stored
        elements whose nonmultiplicative variables may have changed.
        """
        if self._head is None:
            raise KeyError(u)
        affected = []
        removed = []
        self._head = self._remove(self._head, 0, u, affected, removed)
        self.count -= 1
        self._rewrap()
        return removed[0], affected

    def _remove(self, node, v, u, affected, removed):
        if node.is_terminal():
            if node.mono != u:
                raise KeyError(u)
            removed.append(node.bnm)
            return None
        s = node.var
        if any(u[v:s]):
            raise KeyError(u)
        nodes = _chain_nodes(node)
        lo, hi = nodes[0].dg, nodes[-1].dg
        d = u[s]
        if not lo <= d <= hi:
            raise KeyError(u)
        cur = nodes[d - lo]
        if cur.mono is not None:
            if cur.mono != u:
                raise KeyError(u)
            removed.append(cur.bnm)
            cur.mono = cur.bnm = None
        elif cur.nvr is None:
            raise KeyError(u)
        else:
            sub = self._remove(cur.nvr, s + 1, u, affected, removed)
            cur.nvr = sub
            if sub is not None:
                if cur is nodes[-1] and sub.is_terminal():
                    cur.mono, cur.bnm, cur.nvr = sub.mono, sub.bnm, None
                return node
        # cur is now empty: trim empty nodes off both ends
        was_last = cur is nodes[-1]
        i, j = 0, len(nodes)
        while i < j and _empty(nodes[i]):
            i += 1
        while j > i and _empty(nodes[j - 1]):
            j -= 1
        nodes = nodes[i:j]
        if not nodes:
            return None
        last = nodes[-1]
        last.ndg = None
        if was_last:
            affected.extend(leaf.bnm for leaf in self._leaves(last))
        if len(nodes) == 1 and last.dg == 0:
            # x_s vanished from the group
            sub = last.nvr
            if sub.is_terminal():
                sub.var = v
            return sub
        if was_last and last.nvr is not None and last.nvr.is_terminal():
            leaf = last.nvr
            last.mono, last.bnm, last.nvr = leaf.mono, leaf.bnm, None
        return nodes[0]

    # diagnostics --------------------------------------------------------

    def dump(self, names=None):
        """Indented text rendering in ``(var,deg)`` notation, 1-based variables."""
        from .monomials import format_monomial

        if self.root is None:
            return "(empty)"
        lines = []

        def walk(node, depth, link):
            label = f"{link}({node.var + 1},{node.dg})"
            if node.mono is not None:
                label += " " + format_monomial(node.mono, names)
            lines.append("  " * depth + label)
            if node.ndg is not None:
                walk(node.ndg, depth + 1, "ndg ")
            if node.nvr is not None:
                walk(node.nvr, depth + 1, "nvr ")

        walk(self.root, 0, "")
        return "\n".join(lines)

    def check(self):
        """Assert the internal-node / leaf predicates on every node."""
        seen = 0
        stack = [self.root] if self.root is not None else []
        if self.root is not None:
            assert self.root.var == 0 and self.root.dg == 0
        while stack:
            node = stack.pop()
            leaf = node.nvr is None and node.ndg is None and node.mono is not None
            internal = node.mono is None and (
                (node.nvr is not None and node.var < node.nvr.var)
                or (node.ndg is not None and node.dg < node.ndg.dg)
            )
            assert leaf != internal, f"bad node {node!r}"
            if leaf:
                seen += 1
                m = node.mono
                assert node.dg == (m[node.var] if node.var < self.nvars else 0)
            if node.ndg is not None:
                assert node.ndg.var == node.var and node.ndg.dg == node.dg + 1
                stack.append(node.ndg)
            if node.nvr is not None:
                assert node.nvr.var > node.var
                stack.append(node.nvr)
        assert seen == self.count


def jt_build(elements, nvars, key=None):
    return JanetTree.build(nvars, elements, key)


def nm_vars(U):
    """Nonmultiplicative variables of each monomial of ``U``, straight from the definition.

    Returns a dict monomial -> set of 0-based variable positions.
    """
    U = list(U)
    if len(set(U)) != len(U):
        raise DuplicateMonomialError("duplicate monomials")
    out = {}
    for u in U:
        nm = set()
        for i in range(len(u)):
            group = [g for g in U if g[:i] == u[:i]]
            if u[i] < max(g[i] for g in group):
                nm.add(i)
        out[u] = nm
    return out


def is_janet_divisor(u, w, nm):
    """``u |_J w`` given the nonmultiplicative set ``nm`` of ``u``."""
    for i, (a, b) in enumerate(zip(u, w)):
        if a > b or (a < b and i in nm):
            return False
    return True


def j_divisor_naive(elements, w, key=None):
    """Scan for the Janet divisor of ``w``; JanetUniquenessError on two hits."""
    key = key or _identity
    elements = list(elements)
    nms = nm_vars([key(e) for e in elements])
    hit = None
    for e in elements:
        u = key(e)
        if is_janet_divisor(u, w, nms[u]):
            if hit is not None:
                raise JanetUniquenessError(f"{key(hit)} and {u} both Janet-divide {w}")
            hit = e
    return hit
