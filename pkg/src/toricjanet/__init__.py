"""Janet bases of binomial and toric ideals.

Involutive completion with Janet-tree divisor search, conversion to
reduced Groebner bases, and integer programming by Conti-Traverso.
"""

from .completion import (
    JanetCompletion, Triple, binomial_janet_basis, is_janet_basis, janet_normal_form,
)
from .groebner import autoreduce, buchberger, ideal_equal, nf_ordinary, reduced_groebner_basis
from .janet import JanetTree, j_divisor_naive, jt_build, nm_vars
from .monomials import (
    Binomial, Block, DegRevLex, Lex, Weight, binomial_orient, mono_div, mono_divides,
    mono_lcm, mono_mul, order_cmp,
)
from .toric import ToricInstance, ip_solve, kernel_lattice, saturate, toric_generators

__version__ = "0.1.0"
