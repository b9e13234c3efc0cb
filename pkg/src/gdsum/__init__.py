"""Exact generalized Dedekind sums for pairs of primitive Dirichlet characters.

The double sum attached to a matrix in Gamma0(q1 q2) is evaluated either
directly (time linear in the lower-left entry) or through precomputed sums
on a finite generating alphabet of Gamma1(q1 q2), reached by an
exponent-collecting coset rewriting of the matrix's T/S word (time
logarithmic in the lower-left entry).  All arithmetic is exact, in
cyclotomic fields over the rationals.
"""

from .characters import (
    DirichletCharacter,
    characters_mod,
    find_character,
    parity_product,
    parse_character_spec,
    psi,
)
from .dedekind import (
    Context,
    ParityWarning,
    crossed_hom_check,
    fast_sum,
    load_context,
    naive_sum,
    precompute,
    save_context,
)
from .exactnum import CycElem, Rational, b1, cyclotomic_polynomial, root_of_unity
from .modgroup import Mat2, TSWord, ts_decompose, ts_reconstruct

__all__ = [
    "CycElem",
    "Context",
    "DirichletCharacter",
    "Mat2",
    "ParityWarning",
    "Rational",
    "TSWord",
    "b1",
    "characters_mod",
    "crossed_hom_check",
    "cyclotomic_polynomial",
    "fast_sum",
    "find_character",
    "load_context",
    "naive_sum",
    "parity_product",
    "parse_character_spec",
    "precompute",
    "psi",
    "root_of_unity",
    "save_context",
    "ts_decompose",
    "ts_reconstruct",
]

__version__ = "0.1.0"
