"""Finite fields F_q of odd characteristic with full discrete-log tables.

A field context is built once by :func:`make_field` and is immutable
afterwards.  Elements are represented by integer *codes* in ``0..q-1``:
the code of an element with coefficient vector ``(c_0, ..., c_{r-1})``
(``c_i`` multiplying ``t^i`` in F_p[t]/(modulus)) is its rank in the
lexicographic order of coefficient vectors.  For prime fields the code
is simply the residue, so codes read naturally as integers mod p.

Everything downstream keys on this fixed representation:

* the modulus is the lexicographically smallest monic irreducible of
  its degree (compared as the tuple ``(c_0, ..., c_{r-1})``),
* the generator is the smallest element (in code order) of
  multiplicative order q-1,

so discrete logarithms, character values, and every derived table are
reproducible across runs.
"""

from __future__ import annotations

import os
from math import isqrt

import numpy as np

DEFAULT_Q_CAP = 1 << 16
Q_CAP_ENV_VAR = "HYPERGF_Q_CAP"


class FieldError(ValueError):
    """Raised when a field cannot be constructed as requested."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n, ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def odd_prime_powers(limit: int) -> list[tuple[int, int]]:
    """All (p, r) with p an odd prime, p**r <= limit, sorted by q = p**r."""
    out = []
    for p in range(3, limit + 1, 2):
        if not is_prime(p):
            continue
        q, r = p, 1
        while q <= limit:
            out.append((p, r))
            r += 1
            q *= p
    return sorted(out, key=lambda pr: pr[0] ** pr[1])


# ---------------------------------------------------------------------------
# polynomial helpers over F_p (dense, low coefficient first, used only at
# construction time; runtime arithmetic goes through the exp/log tables)
# ---------------------------------------------------------------------------

def _poly_divmod(num: list[int], den: tuple[int, ...], p: int):
    num = list(num)
    d = len(den) - 1
    inv_lead = pow(den[-1], p - 2, p)
    quo = [0] * max(1, len(num) - d)
    for k in range(len(num) - 1, d - 1, -1):
        c = (num[k] * inv_lead) % p
        if c:
            quo[k - d] = c
            for j in range(d + 1):
                num[k - d + j] = (num[k - d + j] - c * den[j]) % p
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return quo, num


def _monic_polys(p: int, deg: int):
    # all monic polynomials of the given degree, lexicographic in (c_0, ..)
    total = p ** deg
    for idx in range(total):
        coeffs = []
        rem = idx
        for i in range(deg):
            power = p ** (deg - 1 - i)
            coeffs.append(rem // power)
            rem %= power
        yield tuple(coeffs) + (1,)


def _is_irreducible(poly: tuple[int, ...], p: int) -> bool:
    # trial division by every monic factor of degree <= deg/2
    deg = len(poly) - 1
    if deg == 1:
        return True
    for d in range(1, deg // 2 + 1):
        for f in _monic_polys(p, d):
            _, rem = _poly_divmod(list(poly), f, p)
            if len(rem) == 1 and rem[0] == 0:
                return False
    return True


def _find_modulus(p: int, r: int) -> tuple[int, ...]:
    if r == 1:
        return (0, 1)  # the polynomial t; degenerate prime-field modulus
    for cand in _monic_polys(p, r):
        if _is_irreducible(cand, p):
            return cand
    raise FieldError(f"no irreducible polynomial of degree {r} over F_{p}")


class FieldContext:
    """A fully materialized finite field F_q, q = p**r, p an odd prime.

    Immutable after construction; all methods are pure reads, so a
    context can be shared freely across workers.
    """

    __slots__ = (
        "p", "r", "q", "modulus", "gen", "exp", "log",
        "_pow_weights", "_cache",
    )

    def __init__(self, p: int, r: int, modulus: tuple[int, ...],
                 gen: int, exp: list[int], log: list[int | None]):
        self.p = p
        self.r = r
        self.q = p ** r
        self.modulus = modulus
        self.gen = gen
        self.exp = exp          # exp[k] = code of gen**k, k in 0..q-2
        self.log = log          # log[code] = dlog, log[0] is None
        self._pow_weights = [p ** (r - 1 - i) for i in range(r)]
        self._cache: dict = {}

    # -- identity / hashing: a field is determined by (p, r) because the
    #    modulus and generator choices are deterministic functions of them.
    def __eq__(self, other):
        return isinstance(other, FieldContext) and (self.p, self.r) == (other.p, other.r)

    def __hash__(self):
        return hash((self.p, self.r))

    def __repr__(self):
        return f"FieldContext(p={self.p}, r={self.r}, q={self.q})"

    # -- element codecs ----------------------------------------------------

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return self._pow_weights[0] if self.r > 1 else 1

    def coeffs(self, x: int) -> tuple[int, ...]:
        """Coefficient vector (c_0, ..., c_{r-1}) of the element code x."""
        out = []
        for w in self._pow_weights:
            out.append(x // w)
            x %= w
        return tuple(out)

    def from_coeffs(self, coeffs) -> int:
        cs = [c % self.p for c in coeffs]
        if len(cs) > self.r and any(cs[self.r:]):
            raise FieldError(f"coefficient vector longer than degree {self.r}")
        cs = (cs + [0] * self.r)[: self.r]
        return sum(c * w for c, w in zip(cs, self._pow_weights))

    def element(self, value) -> int:
        """Coerce an int (reduced mod p, constant element) or coefficient
        iterable into an element code."""
        if isinstance(value, int):
            if self.r == 1:
                return value % self.p
            return self.from_coeffs([value])
        return self.from_coeffs(list(value))

    def elements(self) -> list[int]:
        """All q element codes in canonical (lexicographic) order."""
        return list(range(self.q))

    # -- arithmetic ---------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.r == 1:
            return (a + b) % self.p
        p = self.p
        return sum(((ca + cb) % p) * w for ca, cb, w in
                   zip(self.coeffs(a), self.coeffs(b), self._pow_weights))

    def sub(self, a: int, b: int) -> int:
        if self.r == 1:
            return (a - b) % self.p
        p = self.p
        return sum(((ca - cb) % p) * w for ca, cb, w in
                   zip(self.coeffs(a), self.coeffs(b), self._pow_weights))

    def neg(self, a: int) -> int:
        if self.r == 1:
            return (-a) % self.p
        return sum(((-c) % self.p) * w for c, w in
                   zip(self.coeffs(a), self._pow_weights))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        n = self.q - 1
        return self.exp[(self.log[a] + self.log[b]) % n]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in finite field")
        return self.exp[(-self.log[a]) % (self.q - 1)]

    def pow(self, a: int, e: int) -> int:
        """a**e by square-and-multiply, e >= 0."""
        if e < 0:
            raise ValueError("pow expects a nonnegative exponent")
        acc, base = self.one, a
        while e:
            if e & 1:
                acc = self.mul(acc, base)
            base = self.mul(base, base)
            e >>= 1
        return acc

    def dlog(self, x: int) -> int:
        """Discrete log base gen; defined for nonzero x only."""
        if x == 0:
            raise ValueError("discrete log of zero is undefined")
        return self.log[x]

    def is_square(self, x: int) -> bool:
        """True for 0 and for nonzero squares."""
        return x == 0 or self.log[x] % 2 == 0


def _poly_mul_mod(a, b, modulus, p):
    r = len(modulus) - 1
    out = [0] * (2 * r - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    for k in range(len(out) - 1, r - 1, -1):
        c = out[k]
        if c:
            out[k] = 0
            for j in range(r):
                out[k - r + j] = (out[k - r + j] - c * modulus[j]) % p
    return tuple(out[:r])


def _q_cap(cap: int | None) -> int:
    if cap is not None:
        return cap
    env = os.environ.get(Q_CAP_ENV_VAR)
    if env is not None:
        return int(env)
    return DEFAULT_Q_CAP


def make_field(p: int, r: int = 1, *, cap: int | None = None,
               generator: int | None = None) -> FieldContext:
    """Construct F_{p**r} deterministically.

    The modulus is the lexicographically smallest monic irreducible of
    degree r over F_p and the generator the smallest element of order
    q-1, unless an explicit ``generator`` code is supplied (used to
    confirm that final rational outputs do not depend on the choice).

    Raises :class:`FieldError` when p is even or composite, r < 1, or
    q exceeds the cap (default 2**16, overridable via the ``cap``
    argument or the ``HYPERGF_Q_CAP`` environment variable).
    """
    if r < 1:
        raise FieldError(f"extension degree must be >= 1, got {r}")
    if p % 2 == 0:
        raise FieldError(f"characteristic must be odd, got p={p}")
    if not is_prime(p):
        raise FieldError(f"p={p} is not prime")
    q = p ** r
    limit = _q_cap(cap)
    if q > limit:
        raise FieldError(f"q={q} exceeds the configured cap {limit}")

    modulus = _find_modulus(p, r)
    weights = [p ** (r - 1 - i) for i in range(r)]

    def decode(code):
        out = []
        for w in weights:
            out.append(code // w)
            code %= w
        return tuple(out)

    def encode(coeffs):
        return sum(c * w for c, w in zip(coeffs, weights))

    one = encode((1,) + (0,) * (r - 1))

    def mul_codes(a, b):
        return encode(_poly_mul_mod(decode(a), decode(b), modulus, p))

    def order_is_maximal(g):
        # g has order q-1 iff g**((q-1)/l) != 1 for every prime l | q-1
        for ell in prime_factors(q - 1):
            e = (q - 1) // ell
            acc, base = one, g
            while e:
                if e & 1:
                    acc = mul_codes(acc, base)
                base = mul_codes(base, base)
                e >>= 1
            if acc == one:
                return False
        return True

    if generator is None:
        gen = next(g for g in range(1, q) if order_is_maximal(g))
    else:
        if generator <= 0 or generator >= q or not order_is_maximal(generator):
            raise FieldError(f"{generator} does not generate the multiplicative group")
        gen = generator

    exp = [0] * (q - 1)
    log: list[int | None] = [None] * q
    x = one
    for k in range(q - 1):
        exp[k] = x
        log[x] = k
        x = mul_codes(x, gen)
    if x != one or any(log[c] is None for c in range(1, q)):
        raise FieldError("generator does not enumerate the multiplicative group")

    return FieldContext(p, r, modulus, gen, exp, log)


# ---------------------------------------------------------------------------
# derived numpy tables, built lazily per field and shared by the counting
# and character-sum kernels
# ---------------------------------------------------------------------------

class NumpyTables:
    """Vectorized views of one field: log/exp, negation, squares, the
    number-of-square-roots table, quadratic-character values, and the
    codes of 1-x.  ``log_[0]`` is 0 and must always be masked."""

    __slots__ = ("q", "n", "log_", "exp_", "neg_", "sq", "nsqrt", "phi",
                 "one_minus", "digits", "weights", "p")

    def __init__(self, ctx: FieldContext):
        q, p, r = ctx.q, ctx.p, ctx.r
        self.q, self.p = q, p
        self.n = q - 1
        self.log_ = np.zeros(q, dtype=np.int64)
        for c in range(1, q):
            self.log_[c] = ctx.log[c]
        self.exp_ = np.array(ctx.exp, dtype=np.int64)
        codes = np.arange(q)
        if r == 1:
            self.digits = codes.reshape(q, 1)
            self.weights = np.array([1], dtype=np.int64)
        else:
            digs = np.empty((q, r), dtype=np.int64)
            rem = codes.copy()
            for i, w in enumerate(ctx._pow_weights):
                digs[:, i] = rem // w
                rem = rem % w
            self.digits = digs
            self.weights = np.array(ctx._pow_weights, dtype=np.int64)
        self.neg_ = ((-self.digits) % p) @ self.weights
        self.sq = self.vmul(codes, codes)
        self.nsqrt = np.bincount(self.sq, minlength=q)
        self.phi = np.zeros(q, dtype=np.int64)
        nz = codes[1:]
        self.phi[nz] = np.where(self.log_[nz] % 2 == 0, 1, -1)
        self.one_minus = self.vadd(ctx.one, self.neg_)

    def vadd(self, a, b):
        out = (self.digits[a] + self.digits[b]) % self.p
        return out @ self.weights

    def vsub(self, a, b):
        out = (self.digits[a] - self.digits[b]) % self.p
        return out @ self.weights

    def vmul(self, a, b):
        a = np.asarray(a)
        b = np.asarray(b)
        res = self.exp_[(self.log_[a] + self.log_[b]) % self.n]
        return np.where((a == 0) | (b == 0), 0, res)


def numpy_tables(ctx: FieldContext) -> NumpyTables:
    tables = ctx._cache.get("numpy_tables")
    if tables is None:
        tables = ctx._cache["numpy_tables"] = NumpyTables(ctx)
    return tables
