"""Rewriting of Gamma1(N) elements over the Schreier alphabet.

`classic_rewrite` is the letter-by-letter rewriting process (one U-factor
per +-1-exponent letter); it exists as a small-scale oracle, since its
output length equals the input word length.  `modified_rewrite` collects
exponents: one factor per T-power, one per S, and a trailing +-I factor,
so the factor count tracks the word's letter count.  `reduce_word` then
cycles T-exponents into a T^N part plus a remainder so every factor
indexes the finite precomputed alphabet.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cosets import Transversal, u_func
from .modgroup import Mat2, S, T, TSWord, ts_reconstruct

CLASSIC_MAX_LETTERS = 32


@dataclass(frozen=True)
class RewriteFactor:
    """U(member at base_key, gen^exponent); gen "T", "S" or "-I"."""

    base_key: tuple[int, int]
    gen: str
    exponent: int


@dataclass(frozen=True)
class ReducedFactor:
    """multiplicity * U(member at base_key, g) with g indexing the alphabet."""

    base_key: tuple[int, int]
    gen: tuple[str, int]
    multiplicity: int


def classic_rewrite(word, t: Transversal) -> list[tuple[Mat2, int]]:
    """Rewrite a +-1-exponent word over {T, S} as signed U-factors.

    word: sequence of (name, eps) with name in {"T", "S"} and eps = +-1.
    The signed product of the returned matrices equals the word's product,
    which must lie in Gamma1(N).  Capped at CLASSIC_MAX_LETTERS letters.
    """
    word = list(word)
    if len(word) > CLASSIC_MAX_LETTERS:
        raise ValueError(f"classic rewriting capped at {CLASSIC_MAX_LETTERS} letters")
    gens = {"T": T, "S": S}
    h = Mat2.identity()
    for name, eps in word:
        g = gens[name]
        h = h * (g if eps == 1 else g.inv())
    if not h.in_gamma1(t.N):
        raise ValueError(f"word product {h} is not in Gamma1({t.N})")
    out = []
    prefix = Mat2.identity()
    for name, eps in word:
        g = gens[name]
        if eps == 1:
            # base is the rep of the prefix before this letter
            out.append((u_func(t.bar(prefix), g, t), 1))
            prefix = prefix * g
        else:
            # base is the rep of the prefix including this letter
            prefix = prefix * g.inv()
            out.append((u_func(t.bar(prefix), g, t), -1))
    return out


def modified_rewrite(w: TSWord, t: Transversal, product: Mat2 | None = None) -> list[RewriteFactor]:
    """Exponent-collecting rewriting of a TS word with product in Gamma1(N).

    Emits one factor per nonzero T-power, one per S, and a final -I factor
    when the word is negated (+I contributes nothing and is dropped).  The
    exact matrix product of the factors' U-values reconstructs the word.
    `product`, when supplied, must be the word's known reconstruction and
    skips recomputing it.
    """
    g1 = ts_reconstruct(w) if product is None else product
    if not g1.in_gamma1(t.N):
        raise ValueError(f"word product {g1} is not in Gamma1({t.N})")
    factors = []
    prefix = Mat2.identity()
    exps = w.exponents
    for idx, a in enumerate(exps):
        if a != 0:
            factors.append(RewriteFactor(t.key_of(prefix), "T", a))
            prefix = prefix.mul_t_power(a)
        if idx < len(exps) - 1:
            factors.append(RewriteFactor(t.key_of(prefix), "S", 1))
            prefix = prefix.mul_s()
    if w.negate:
        factors.append(RewriteFactor(t.key_of(prefix), "-I", 1))
        assert -prefix == g1
    else:
        assert prefix == g1
    return factors


def expand_factor(f: RewriteFactor, t: Transversal) -> Mat2:
    """The exact U-matrix a rewrite factor stands for."""
    base = t.members[f.base_key]
    if f.gen == "T":
        return u_func(base, Mat2.t_power(f.exponent), t)
    if f.gen == "S":
        return u_func(base, S, t)
    return u_func(base, -Mat2.identity(), t)


def reduce_t_power(a: int, N: int) -> tuple[int, int]:
    """a = q*N + r with 0 <= r < N (floor division, any sign of a)."""
    return a // N, a % N


def reduce_word(factors, N: int) -> list[ReducedFactor]:
    """Map rewrite factors onto alphabet entries, preserving the product.

    T-exponents split as q * (T^N entry) + (T^r entry), dropping q = 0 and
    r = 0 parts; S stays S^1; -I becomes the S^2 entry.
    """
    out = []
    for f in factors:
        if f.gen == "T":
            q, r = reduce_t_power(f.exponent, N)
            if q != 0:
                out.append(ReducedFactor(f.base_key, ("T", N), q))
            if r != 0:
                out.append(ReducedFactor(f.base_key, ("T", r), 1))
        elif f.gen == "S":
            out.append(ReducedFactor(f.base_key, ("S", 1), 1))
        elif f.gen == "-I":
            out.append(ReducedFactor(f.base_key, ("S", 2), 1))
        else:
            raise ValueError(f"unknown factor generator {f.gen!r}")
    return out


def expand_reduced(factors, alphabet) -> Mat2:
    """Exact product of alphabet entries with multiplicities (for checks)."""
    m = Mat2.identity()
    for f in factors:
        u = alphabet[(f.base_key, f.gen)]
        if f.multiplicity < 0:
            u = u.inv()
        for _ in range(abs(f.multiplicity)):
            m = m * u
    return m


def format_factor(f: RewriteFactor) -> str:
    if f.gen == "T":
        return f"U({f.base_key}, T^{f.exponent})"
    if f.gen == "S":
        return f"U({f.base_key}, S)"
    return f"U({f.base_key}, -I)"


def format_reduced(f: ReducedFactor) -> str:
    name, k = f.gen
    gen = f"T^{k}" if name == "T" else f"S^{k}"
    if f.multiplicity == 1:
        return f"U({f.base_key}, {gen})"
    return f"{f.multiplicity} * U({f.base_key}, {gen})"
