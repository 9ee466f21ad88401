"""Multiplicative characters, Jacobi sums, and binomial symbols over F_q.

A character chi_j is indexed by j mod (q-1): chi_j(gen**k) = zeta**(j*k)
with zeta a fixed primitive (q-1)-th root of unity, extended by
chi(0) = 0.  Index 0 is the trivial character eps; index (q-1)/2 the
quadratic character phi.  Character products and inverses are index
arithmetic, which keeps sums over all characters enumerable as plain
ranges.

Two layers live here.  The object layer (:class:`Character`,
:func:`jacobi_sum`, :func:`binomial_symbol`) returns exact
:class:`~hypergf.cyclo.GroupRingElement` values.  The integer-vector
layer (``jacobi_vector``, ``scaled_binomial_vector``, the cached
tables) is what the sweep kernels use: it accumulates raw counts with
no canonicalization inside the loops.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cyclo import GroupRingElement
from .ff import FieldContext, numpy_tables


@dataclass(frozen=True)
class Character:
    """The multiplicative character chi_j over a fixed field."""

    ctx: FieldContext
    j: int

    def __post_init__(self):
        object.__setattr__(self, "j", self.j % (self.ctx.q - 1))

    @property
    def is_trivial(self) -> bool:
        return self.j == 0

    @property
    def is_quadratic(self) -> bool:
        return self.j == (self.ctx.q - 1) // 2

    def __mul__(self, other: Character) -> Character:
        if self.ctx != other.ctx:
            raise ValueError("characters over different fields")
        return Character(self.ctx, self.j + other.j)

    def conjugate(self) -> Character:
        """The inverse character 1/chi."""
        return Character(self.ctx, -self.j)

    def __call__(self, x: int) -> GroupRingElement:
        """chi(x) as an exact group-ring element; chi(0) = 0."""
        n = self.ctx.q - 1
        if x == self.ctx.zero:
            return GroupRingElement.zero(n)
        return GroupRingElement.zeta_power(n, self.j * self.ctx.dlog(x))


def trivial_character(ctx: FieldContext) -> Character:
    return Character(ctx, 0)


def quadratic_character(ctx: FieldContext) -> Character:
    return Character(ctx, (ctx.q - 1) // 2)


def all_characters(ctx: FieldContext) -> list[Character]:
    return [Character(ctx, j) for j in range(ctx.q - 1)]


def delta_point(ctx: FieldContext, x: int) -> int:
    """delta(x): 1 at the zero element, else 0."""
    return 1 if x == ctx.zero else 0


def delta_char(chi: Character) -> int:
    """delta(A): 1 for the trivial character, else 0."""
    return 1 if chi.is_trivial else 0


def char_sign_at_minus_one(ctx: FieldContext, j: int) -> int:
    """chi_j(-1) as +-1.  Uses -1 = gen**((q-1)/2)."""
    n = ctx.q - 1
    return -1 if (j * (n // 2)) % n else 1


def phi_at_minus_one(ctx: FieldContext) -> int:
    """phi(-1); equals +1 exactly when q = 1 mod 4."""
    return char_sign_at_minus_one(ctx, (ctx.q - 1) // 2)


# ---------------------------------------------------------------------------
# integer-vector kernel
# ---------------------------------------------------------------------------

def jacobi_vector(ctx: FieldContext, ja: int, jb: int) -> list[int]:
    """Raw integer vector of J(chi_ja, chi_jb) = sum_x chi_ja(x) chi_jb(1-x).

    Entry m counts the x with chi_ja(x) chi_jb(1-x) = zeta**m; terms where
    either factor vanishes contribute nothing.
    """
    n = ctx.q - 1
    t = numpy_tables(ctx)
    codes = np.arange(ctx.q)
    omx = t.one_minus
    valid = (codes != 0) & (omx != 0)
    idx = (ja * t.log_[codes[valid]] + jb * t.log_[omx[valid]]) % n
    return np.bincount(idx, minlength=n).tolist()


def scaled_binomial_vector(ctx: FieldContext, ja: int, jb: int) -> list[int]:
    """q * (chi_ja choose chi_jb) as an integer vector: the sign chi_jb(-1)
    folded into J(chi_ja, conj(chi_jb))."""
    n = ctx.q - 1
    vec = jacobi_vector(ctx, ja, (-jb) % n)
    if char_sign_at_minus_one(ctx, jb) < 0:
        return [-c for c in vec]
    return vec


def scaled_binomial_table(ctx: FieldContext) -> np.ndarray:
    """Cached (n, n, n) int64 array T with T[ja, jb] = q*(chi_ja choose
    chi_jb) as a vector.  Intended for fields small enough that the whole
    symbol table fits comfortably (the property sweeps, q <= 49)."""
    table = ctx._cache.get("scaled_binomial_table")
    if table is None:
        n = ctx.q - 1
        table = np.empty((n, n, n), dtype=np.int64)
        for ja in range(n):
            for jb in range(n):
                table[ja, jb] = scaled_binomial_vector(ctx, ja, jb)
        table.setflags(write=False)
        ctx._cache["scaled_binomial_table"] = table
    return table


# ---------------------------------------------------------------------------
# exact object layer
# ---------------------------------------------------------------------------

def _same_field(a: Character, b: Character):
    if a.ctx != b.ctx:
        raise ValueError("characters over different fields")


def jacobi_sum(a: Character, b: Character) -> GroupRingElement:
    """J(A, B) = sum over x in F_q of A(x) B(1-x), exact."""
    _same_field(a, b)
    n = a.ctx.q - 1
    return GroupRingElement.from_int_vector(n, jacobi_vector(a.ctx, a.j, b.j))


def binomial_symbol(a: Character, b: Character) -> GroupRingElement:
    """(A choose B) = B(-1)/q * J(A, conj(B)); q times it is a cyclotomic
    integer."""
    _same_field(a, b)
    n = a.ctx.q - 1
    vec = scaled_binomial_vector(a.ctx, a.j, b.j)
    return GroupRingElement.from_int_vector(n, vec, denominator=a.ctx.q)


def eval_char(chi: Character, x: int) -> GroupRingElement:
    """chi(x) with the chi(0) = 0 convention (alias of Character.__call__)."""
    return chi(x)
