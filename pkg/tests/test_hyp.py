from fractions import Fraction
from math import isqrt

import pytest

from hypergf import (
    Character,
    HypSpec,
    TwoSquares,
    WeierstrassParams,
    cornacchia,
    count_weierstrass,
    hyp_eval,
    make_field,
    ono_value_minus1,
    quadratic_character,
    trivial_character,
    two_f_one,
)
from hypergf.ff import is_prime, odd_prime_powers


def _phi_phi_eps(ctx, x):
    phi = quadratic_character(ctx)
    eps = trivial_character(ctx)
    return HypSpec(top=(phi, phi), bottom=(eps,), x=x)


def _curve_value(ctx, lam):
    # independent route: the series value from a brute-force point count
    total = count_weierstrass(ctx, WeierstrassParams(ctx.one, lam)).total
    return Fraction(total - ctx.q - 1, ctx.q)


def test_anchor_values(field):
    f5, f7, f13 = field(5), field(7), field(13)
    assert two_f_one(f5, f5.neg(f5.one)) == Fraction(2, 5)
    assert two_f_one(f13, 2) == Fraction(-6, 13)
    assert two_f_one(f13, 4) == Fraction(2, 13)
    assert two_f_one(f7, f7.neg(f7.one)) == 0
    # each anchor agrees with the enumeration oracle
    for ctx, lam in [(f5, 4), (f13, 2), (f13, 4), (f7, 6)]:
        assert two_f_one(ctx, lam) == _curve_value(ctx, lam)


def test_value_at_zero_and_one(field):
    ctx = field(5)
    assert two_f_one(ctx, 0) == 0
    assert hyp_eval(_phi_phi_eps(ctx, 0)) == 0
    # 1 is evaluated like any other argument, not special-cased
    assert two_f_one(ctx, 1) == Fraction(-1, 5)


@pytest.mark.parametrize("p,r", odd_prime_powers(49))
def test_specialized_equals_generic(p, r, field):
    ctx = field(p, r)
    for lam in range(ctx.q):
        assert two_f_one(ctx, lam) == hyp_eval(_phi_phi_eps(ctx, lam))


@pytest.mark.parametrize("p,r", [(5, 1), (7, 1), (3, 2), (11, 1), (13, 1)])
def test_phi_eps_phi_closed_form(p, r, field):
    # the (phi, eps; phi) sum collapses to -phi(-1)(1+phi(x))/q off x in {0, 1}
    ctx = field(p, r)
    phi = quadratic_character(ctx)
    eps = trivial_character(ctx)
    pm1 = 1 if ctx.q % 4 == 1 else -1
    for lam in range(ctx.q):
        if lam in (ctx.zero, ctx.one):
            continue
        got = hyp_eval(HypSpec(top=(phi, eps), bottom=(phi,), x=lam))
        phival = 0 if lam == 0 else (1 if ctx.log[lam] % 2 == 0 else -1)
        assert got == Fraction(-pm1 * (1 + phival), ctx.q)


@pytest.mark.parametrize("p,r", odd_prime_powers(49))
def test_reflection_ratio_inversion(p, r, field):
    ctx = field(p, r)
    one = ctx.one
    pm1 = 1 if ctx.q % 4 == 1 else -1

    def phi_sign(x):
        return 0 if x == 0 else (1 if ctx.log[x] % 2 == 0 else -1)

    for lam in range(ctx.q):
        if lam not in (ctx.zero, one):
            assert two_f_one(ctx, lam) == pm1 * two_f_one(ctx, ctx.sub(one, lam))
        if lam != one:
            arg = ctx.mul(lam, ctx.inv(ctx.sub(lam, one))) if lam else 0
            assert two_f_one(ctx, lam) == \
                phi_sign(ctx.sub(one, lam)) * two_f_one(ctx, arg)
        if lam != ctx.zero:
            assert two_f_one(ctx, ctx.inv(lam)) == phi_sign(lam) * two_f_one(ctx, lam)


@pytest.mark.parametrize("p,r", odd_prime_powers(49))
def test_denominator_bound(p, r, field):
    ctx = field(p, r)
    q = ctx.q
    for lam in range(q):
        scaled = q * (q - 1) * two_f_one(ctx, lam)
        assert scaled.denominator == 1


def test_generator_choice_does_not_change_values(field):
    default = field(13)
    alt = make_field(13, generator=11)
    for lam in range(13):
        assert two_f_one(default, lam) == two_f_one(alt, lam)
    ext = field(3, 2)
    alt_gen = next(g for g in range(ext.q - 1, 0, -1)
                   if ext.log[g] is not None and
                   all(ext.pow(g, (ext.q - 1) // ell) != ext.one
                       for ell in (2,)))
    alt_ext = make_field(3, 2, generator=alt_gen)
    assert alt_ext.gen != ext.gen
    for lam in range(9):
        assert two_f_one(ext, lam) == two_f_one(alt_ext, lam)


def test_hyp_spec_validation(field):
    ctx = field(5)
    phi = quadratic_character(ctx)
    with pytest.raises(ValueError, match="one more top"):
        HypSpec(top=(phi,), bottom=(phi,), x=1)
    with pytest.raises(ValueError, match="one field"):
        HypSpec(top=(phi, quadratic_character(field(7))), bottom=(phi,), x=1)


# ---------------------------------------------------------------------------
# two squares
# ---------------------------------------------------------------------------

def test_cornacchia_anchors():
    assert cornacchia(13) == TwoSquares(x=3, y=2, p=13)
    assert cornacchia(5) == TwoSquares(x=1, y=2, p=5)
    with pytest.raises(ValueError, match="3 mod 4"):
        cornacchia(7)
    with pytest.raises(ValueError, match="prime"):
        cornacchia(2)
    with pytest.raises(ValueError, match="prime"):
        cornacchia(25)


def test_cornacchia_all_primes_to_229():
    for p in range(5, 230):
        if not is_prime(p) or p % 4 != 1:
            continue
        ts = cornacchia(p)
        assert ts.x ** 2 + ts.y ** 2 == p
        assert ts.x % 2 == 1 and ts.y % 2 == 0
        assert ts.x > 0 and ts.y > 0
        # brute-force uniqueness of the normalized representation
        brute = [(x, isqrt(p - x * x)) for x in range(1, isqrt(p) + 1, 2)
                 if isqrt(p - x * x) ** 2 == p - x * x]
        assert (ts.x, ts.y) in brute


def test_two_squares_validation():
    with pytest.raises(ValueError):
        TwoSquares(x=2, y=3, p=13)     # x even
    with pytest.raises(ValueError):
        TwoSquares(x=3, y=3, p=13)     # not a representation


def test_ono_values(field):
    assert ono_value_minus1(5) == Fraction(2, 5)
    assert ono_value_minus1(13) == Fraction(-6, 13)
    assert ono_value_minus1(7) == 0
    assert ono_value_minus1(229) == Fraction(-30, 229)   # 229 = 15^2 + 2^2
    with pytest.raises(ValueError):
        ono_value_minus1(9)
    # spot-check against the series engine
    for p in (17, 29, 19):
        ctx = field(p)
        assert two_f_one(ctx, p - 1) == ono_value_minus1(p)


def test_ono_sign_normalization_invariance():
    # the closed form is invariant under x -> -x and y -> -y
    for p in (5, 13, 17, 29, 37, 229):
        ts = cornacchia(p)
        values = set()
        for sx in (ts.x, -ts.x):
            for sy in (ts.y, -ts.y):
                exponent = (sx + sy + 1) // 2
                values.add(Fraction(2 * sx * (-1) ** (exponent % 2), p))
        assert values == {ono_value_minus1(p)}
