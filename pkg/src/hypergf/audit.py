"""Identity registry and exact audit sweeps.

Every identity relating curve counts and hypergeometric values that this
package knows about lives in one registry, each entry tagged with a
provenance:

* ``printed``   -- the closed forms exactly as printed in the source
  under audit.  Several of these disagree with brute-force counts, so
  FAIL is an expected, first-class outcome; the value of the audit is
  the exact residual trail.
* ``corrected`` -- replacement forms derived from the enumeration
  oracles (never presented as ground truth of the audited source).
* ``greene`` / ``ono`` -- classical transformation and special-value
  results the audited source quotes; expected to PASS.

Both sides of every identity evaluate to exact rationals; a point
passes iff the residual lhs - rhs is exactly zero.  The designated
primary (lhs) side is the enumeration oracle where one is involved,
otherwise the directly-evaluated series side; each description says
which.  Reports are deterministic: records are sorted by (q, params)
and repeated sweeps emit byte-identical output.
"""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

from . import curves, hyp
from .chars import quadratic_character, trivial_character
from .ff import FieldContext, make_field, odd_prime_powers
from .hyp import HypSpec, two_f_one

PROVENANCES = ("printed", "corrected", "greene", "ono")
COUNTEREXAMPLE_CAP = 100


@dataclass(frozen=True)
class Identity:
    key: str
    provenance: str
    description: str
    domain_description: str
    param_names: tuple[str, ...]
    points: Callable[[FieldContext], list[tuple]]
    evaluate: Callable[[FieldContext, tuple], tuple[Fraction, Fraction]]
    prime_only: bool = False
    field_admissible: Callable[[FieldContext], bool] = lambda ctx: True
    counterpart: str | None = None


@dataclass(frozen=True)
class PointRecord:
    identity: str
    q: int
    params: tuple[tuple[str, int], ...]
    lhs: Fraction
    rhs: Fraction
    residual: Fraction
    passed: bool


@dataclass
class IdentityReport:
    identity: str
    provenance: str
    domain: str
    records: list[PointRecord]
    counterexamples: list[PointRecord] = field(default_factory=list)
    truncated: bool = False

    @property
    def status(self) -> str:
        return "PASS" if not self.counterexamples else "FAIL"

    @property
    def passed(self) -> bool:
        return not self.counterexamples


# ---------------------------------------------------------------------------
# shared evaluation helpers
# ---------------------------------------------------------------------------

_FIELD_CACHE: dict[tuple[int, int], FieldContext] = {}


def cached_field(p: int, r: int) -> FieldContext:
    ctx = _FIELD_CACHE.get((p, r))
    if ctx is None:
        ctx = _FIELD_CACHE[(p, r)] = make_field(p, r)
    return ctx


def _phi_sign(ctx: FieldContext, x: int) -> int:
    if x == ctx.zero:
        return 0
    return 1 if ctx.log[x] % 2 == 0 else -1


def _ratio(ctx: FieldContext, num: int, den: int) -> int:
    return ctx.mul(num, ctx.inv(den))


def _points_ab(ctx: FieldContext) -> list[tuple]:
    return [(a, b) for a in range(1, ctx.q) for b in range(1, ctx.q) if b != a]


def _points_huff_ab(ctx: FieldContext) -> list[tuple]:
    return [(a, b) for a in range(1, ctx.q) for b in range(1, ctx.q)
            if ctx.mul(a, a) != ctx.mul(b, b)]


def _points_lambda(exclude_minus_one: bool):
    def points(ctx: FieldContext) -> list[tuple]:
        banned = {ctx.zero, ctx.one}
        if exclude_minus_one:
            banned.add(ctx.neg(ctx.one))
        return [(lam,) for lam in range(ctx.q) if lam not in banned]
    return points


def _points_lambda_not_one(ctx: FieldContext) -> list[tuple]:
    return [(lam,) for lam in range(ctx.q) if lam != ctx.one]


def _points_d(ctx: FieldContext) -> list[tuple]:
    banned = {ctx.zero, ctx.one, ctx.neg(ctx.one)}
    return [(d,) for d in range(ctx.q) if d not in banned]


def _sqrts(ctx: FieldContext, value: int) -> list[int]:
    return [a for a in range(1, ctx.q) if ctx.mul(a, a) == value]


def _points_sqrt_minus_one(ctx: FieldContext) -> list[tuple]:
    return [(a,) for a in _sqrts(ctx, ctx.neg(ctx.one))]


def _points_sqrt_two_or_half(ctx: FieldContext) -> list[tuple]:
    two = ctx.add(ctx.one, ctx.one)
    roots = _sqrts(ctx, two) + _sqrts(ctx, ctx.inv(two))
    return [(a,) for a in sorted(roots)]


def _four(ctx: FieldContext) -> int:
    two = ctx.add(ctx.one, ctx.one)
    return ctx.add(two, two)


def _transform_arg(ctx: FieldContext, a: int) -> int:
    """4a / (1+a)**2."""
    opa = ctx.add(ctx.one, a)
    return ctx.mul(ctx.mul(_four(ctx), a), ctx.inv(ctx.mul(opa, opa)))


def _printed_curve_rhs(ctx: FieldContext, t: int) -> Fraction:
    """q + 2 - 1/(q-1) - (2 + 1/(q-1)) phi(t) + q^2/(q-1) * F(t)."""
    q = ctx.q
    return (Fraction(q + 2) - Fraction(1, q - 1)
            - (2 + Fraction(1, q - 1)) * _phi_sign(ctx, t)
            + Fraction(q * q, q - 1) * two_f_one(ctx, t))


def _cornacchia_term(p: int) -> Fraction:
    ts = hyp.cornacchia(p)
    sign = -1 if ((ts.x + ts.y + 1) // 2) % 2 else 1
    return Fraction(2 * ts.x * sign, p - 1) - Fraction(p + 1, p * (p - 1))


def _series_phi_eps_phi(ctx: FieldContext, lam: int) -> Fraction:
    phi = quadratic_character(ctx)
    eps = trivial_character(ctx)
    return hyp.hyp_eval(HypSpec(top=(phi, eps), bottom=(phi,), x=lam))


# ---------------------------------------------------------------------------
# the registry
# ---------------------------------------------------------------------------

def _build_registry() -> list[Identity]:
    ids: list[Identity] = []

    def add(*args, **kwargs):
        ids.append(Identity(*args, **kwargs))

    # ---- printed forms (audited verbatim; FAIL expected for most) --------

    def t41(ctx, pt):
        a, b = pt
        lhs = curves.count_general_huff(ctx, curves.GeneralHuffParams(a, b)).total
        return Fraction(lhs), _printed_curve_rhs(ctx, _ratio(ctx, b, a))

    add("T4.1", "printed",
        "general Huff count (oracle, lhs) vs the as-printed closed form "
        "q+2-1/(q-1)-(2+1/(q-1))phi(b/a)+q^2/(q-1) F(b/a)",
        "odd prime powers; a, b nonzero, a != b",
        ("a", "b"), _points_ab, t41, counterpart="C2")

    def t41_proof(ctx, pt):
        a, b = pt
        lhs = curves.count_general_huff(ctx, curves.GeneralHuffParams(a, b)).total
        quartic = curves.count_general_huff_quartic(ctx, curves.GeneralHuffParams(a, b))
        return Fraction(lhs), Fraction(quartic.total + 1)

    add("T4.1-proof", "printed",
        "general Huff count (oracle, lhs) vs the as-printed intermediate "
        "count q+4+sum phi(quartic); the residual -1 pins the off-by-one "
        "(the correct constant is q+3)",
        "odd prime powers; a, b nonzero, a != b",
        ("a", "b"), _points_ab, t41_proof, counterpart="C2")

    def c42(ctx, pt):
        a, b = pt
        lhs = curves.count_huff(ctx, curves.HuffParams(a, b)).total
        t = _ratio(ctx, ctx.mul(b, b), ctx.mul(a, a))
        q = ctx.q
        rhs = Fraction(q) - Fraction(2, q - 1) + Fraction(q * q, q - 1) * two_f_one(ctx, t)
        return Fraction(lhs), rhs

    add("C4.2", "printed",
        "Huff count (oracle, lhs) vs the as-printed closed form "
        "q-2/(q-1)+q^2/(q-1) F(b^2/a^2)",
        "odd prime powers; a, b nonzero, a^2 != b^2",
        ("a", "b"), _points_huff_ab, c42, counterpart="C3")

    def c51(ctx, pt):
        a, b = pt
        lhs = curves.count_weierstrass(ctx, curves.WeierstrassParams(a, b)).total
        return Fraction(lhs), _printed_curve_rhs(ctx, _ratio(ctx, b, a))

    add("C5.1", "printed",
        "Weierstrass y^2=x(x+a)(x+b) count (oracle, lhs) vs the same "
        "as-printed closed form as the general Huff model",
        "odd prime powers; a, b nonzero, a != b",
        ("a", "b"), _points_ab, c51, counterpart="C1")

    def _transform_tail(ctx, lam, variant, corrected):
        one = ctx.one
        oml, opl = ctx.sub(one, lam), ctx.add(one, lam)
        if variant == "a":
            ratio = _ratio(ctx, oml, opl)
            return _phi_sign(ctx, ctx.neg(one)) * two_f_one(ctx, ctx.mul(ratio, ratio))
        if variant == "b":
            return two_f_one(ctx, _transform_arg(ctx, lam))
        arg = ctx.mul(ctx.mul(oml, oml), ctx.inv(ctx.neg(ctx.mul(_four(ctx), lam))))
        # the as-printed display carries phi(lam) here; the oracle-derived
        # form needs phi(-lam)
        sign_arg = ctx.neg(lam) if corrected else lam
        return _phi_sign(ctx, sign_arg) * two_f_one(ctx, arg)

    def _t52(variant):
        def ev(ctx, pt):
            (lam,) = pt
            q = ctx.q
            lhs = two_f_one(ctx, ctx.mul(lam, lam))
            tail = _transform_tail(ctx, lam, variant, corrected=False)
            rhs = Fraction(q + 1, q * q) + Fraction(q - 1, q) * tail
            return lhs, rhs
        return ev

    for variant, target in (("a", "phi(-1) F(((1-x)/(1+x))^2)"),
                            ("b", "F(4x/(1+x)^2)"),
                            ("c", "phi(x) F((1-x)^2/(-4x))")):
        add(f"T5.2{variant}", "printed",
            f"series transform as printed: F(x^2) (lhs) vs "
            f"(q+1)/q^2+(q-1)/q * {target}",
            "odd prime powers; x not in {0, 1, -1}",
            ("lambda",), _points_lambda(exclude_minus_one=True), _t52(variant),
            counterpart=f"C4{variant}")

    def t53_printed(ctx, pt):
        (a,) = pt
        lhs = two_f_one(ctx, _transform_arg(ctx, a))
        return lhs, _cornacchia_term(ctx.p)

    add("T5.3a", "printed",
        "F(4a/(1+a)^2) for a^2 = -1 (lhs, series) vs the as-printed "
        "2x(-1)^((x+y+1)/2)/(p-1) - (p+1)/(p(p-1)) with x^2+y^2=p, x odd",
        "primes p = 1 mod 4; a^2 = -1",
        ("a",), _points_sqrt_minus_one, t53_printed,
        prime_only=True, field_admissible=lambda ctx: ctx.p % 4 == 1,
        counterpart="C5.3")

    def t53b(ctx, pt):
        (a,) = pt
        p = ctx.p
        lhs = two_f_one(ctx, _transform_arg(ctx, a))
        return lhs, Fraction(-(p + 1), p * (p - 1))

    add("T5.3b", "printed",
        "F(4a/(1+a)^2) for a^2 in {2, 1/2} (lhs, series) vs the as-printed "
        "-(p+1)/(p(p-1)); the lhs column records the empirical values",
        "primes p = -1 mod 8; a^2 in {2, 1/2}",
        ("a",), _points_sqrt_two_or_half, t53b,
        prime_only=True, field_admissible=lambda ctx: ctx.p % 8 == 7)

    add("T5.3c", "printed",
        "F(4a/(1+a)^2) for a^2 in {2, 1/2} (lhs, series) vs the as-printed "
        "cornacchia form (which repeats the a^2=-1 display); the lhs column "
        "records the empirical values",
        "primes p = 1 mod 8; a^2 in {2, 1/2}",
        ("a",), _points_sqrt_two_or_half, t53_printed,
        prime_only=True, field_admissible=lambda ctx: ctx.p % 8 == 1)

    # ---- corrected forms (oracle-derived; PASS expected) ------------------

    def c1(ctx, pt):
        a, b = pt
        lhs = curves.count_weierstrass(ctx, curves.WeierstrassParams(a, b)).total
        q = ctx.q
        rhs = q + 1 + q * _phi_sign(ctx, a) * two_f_one(ctx, _ratio(ctx, b, a))
        return Fraction(lhs), Fraction(rhs)

    add("C1", "corrected",
        "Weierstrass count (oracle, lhs) = q+1+q phi(a) F(b/a) "
        "(equivalently q+1+q phi(b) F(a/b))",
        "odd prime powers; a, b nonzero, a != b",
        ("a", "b"), _points_ab, c1)

    def c2(ctx, pt):
        a, b = pt
        lhs = curves.count_general_huff(ctx, curves.GeneralHuffParams(a, b)).total
        rhs = curves.count_weierstrass(ctx, curves.WeierstrassParams(a, b)).total
        return Fraction(lhs), Fraction(rhs)

    add("C2", "corrected",
        "general Huff count (oracle, lhs) = Weierstrass count (isomorphic models)",
        "odd prime powers; a, b nonzero, a != b",
        ("a", "b"), _points_ab, c2)

    def c3(ctx, pt):
        a, b = pt
        lhs = curves.count_huff(ctx, curves.HuffParams(a, b)).total
        t = _ratio(ctx, ctx.mul(b, b), ctx.mul(a, a))
        rhs = ctx.q + 1 + ctx.q * two_f_one(ctx, t)
        return Fraction(lhs), Fraction(rhs)

    add("C3", "corrected",
        "Huff count (oracle, lhs) = q+1+q F(b^2/a^2)",
        "odd prime powers; a, b nonzero, a^2 != b^2",
        ("a", "b"), _points_huff_ab, c3)

    def _c4(variant):
        def ev(ctx, pt):
            (lam,) = pt
            lhs = two_f_one(ctx, ctx.mul(lam, lam))
            rhs = _transform_tail(ctx, lam, variant, corrected=True)
            return lhs, Fraction(rhs)
        return ev

    for variant, target in (("a", "phi(-1) F(((1-x)/(1+x))^2)"),
                            ("b", "F(4x/(1+x)^2)"),
                            ("c", "phi(-x) F((1-x)^2/(-4x))")):
        add(f"C4{variant}", "corrected",
            f"series transform, corrected scaling: F(x^2) (lhs) = {target}",
            "odd prime powers; x not in {0, 1, -1}",
            ("lambda",), _points_lambda(exclude_minus_one=True), _c4(variant))

    def c53(ctx, pt):
        (a,) = pt
        lhs = two_f_one(ctx, _transform_arg(ctx, a))
        return lhs, hyp.ono_value_minus1(ctx.p)

    add("C5.3", "corrected",
        "F(4a/(1+a)^2) for a^2 = -1 (lhs, series) = the closed-form value "
        "of F(-1): 2x(-1)^((x+y+1)/2)/p",
        "primes p = 1 mod 4; a^2 = -1",
        ("a",), _points_sqrt_minus_one, c53,
        prime_only=True, field_admissible=lambda ctx: ctx.p % 4 == 1)

    def cedw(ctx, pt):
        a, b = pt
        lhs = curves.count_huff(ctx, curves.HuffParams(a, b)).total
        d = _ratio(ctx, ctx.sub(a, b), ctx.add(a, b))
        affine = curves.count_edwards_affine(ctx, curves.EdwardsParams(ctx.mul(d, d)))
        return Fraction(lhs), Fraction(affine + 4)

    add("C-edw", "corrected",
        "Huff count (oracle, lhs) = Edwards affine count at d=(a-b)/(a+b) "
        "plus 4; the +4 completion is an empirical observation (the affine "
        "count alone differs by exactly that margin), not an asserted "
        "universal convention",
        "odd prime powers; a, b nonzero, a^2 != b^2",
        ("a", "b"), _points_huff_ab, cedw)

    # ---- quoted classical results (PASS expected) --------------------------

    def greflect(ctx, pt):
        (lam,) = pt
        lhs = two_f_one(ctx, lam)
        rhs = _phi_sign(ctx, ctx.neg(ctx.one)) * two_f_one(ctx, ctx.sub(ctx.one, lam))
        return lhs, Fraction(rhs)

    add("G-reflect", "greene",
        "reflection transform: F(x) (lhs) = phi(-1) F(1-x)",
        "odd prime powers; x not in {0, 1}",
        ("lambda",), _points_lambda(exclude_minus_one=False), greflect)

    def gratio(ctx, pt):
        (lam,) = pt
        lhs = two_f_one(ctx, lam)
        arg = ctx.mul(lam, ctx.inv(ctx.sub(lam, ctx.one))) if lam != ctx.zero else ctx.zero
        rhs = _phi_sign(ctx, ctx.sub(ctx.one, lam)) * two_f_one(ctx, arg)
        return lhs, Fraction(rhs)

    add("G-ratio", "greene",
        "ratio transform: F(x) (lhs) = phi(1-x) F(x/(x-1))",
        "odd prime powers; x != 1",
        ("lambda",), _points_lambda_not_one, gratio)

    def g316(ctx, pt):
        (lam,) = pt
        lhs = _series_phi_eps_phi(ctx, lam)
        pm1 = _phi_sign(ctx, ctx.neg(ctx.one))
        rhs = Fraction(-pm1 * (1 + _phi_sign(ctx, lam)), ctx.q)
        return lhs, rhs

    add("G-316", "greene",
        "the (phi, eps; phi) series via the generic evaluator (lhs) = "
        "-phi(-1)(1+phi(x))/q",
        "odd prime powers; x not in {0, 1}",
        ("lambda",), _points_lambda(exclude_minus_one=False), g316)

    def sedw(ctx, pt):
        (d,) = pt
        d2 = ctx.mul(d, d)
        affine = curves.count_edwards_affine(ctx, curves.EdwardsParams(d2))
        q = ctx.q
        rhs = 1 + q + q * _phi_sign(ctx, ctx.neg(ctx.one)) * two_f_one(ctx, d2)
        return Fraction(affine + 4), Fraction(rhs)

    add("S-edw", "greene",
        "Edwards affine count plus the empirical 4-point completion (lhs, "
        "oracle) = 1+q+q phi(-1) F(d^2), the quoted Edwards count formula",
        "odd prime powers; d not in {0, 1, -1}",
        ("lambda",), _points_d, sedw)

    def ominus1(ctx, pt):
        lhs = two_f_one(ctx, ctx.neg(ctx.one))
        return lhs, hyp.ono_value_minus1(ctx.p)

    add("O-minus1", "ono",
        "F(-1) over a prime field (lhs, series) = the two-squares closed "
        "form (0 when p = 3 mod 4)",
        "odd primes",
        (), lambda ctx: [()], ominus1, prime_only=True)

    return ids


_REGISTRY: list[Identity] | None = None


def registry() -> list[Identity]:
    """All known identities, in a fixed audit order."""
    global _REGISTRY
    if _REGISTRY is None:
        _REGISTRY = _build_registry()
    return list(_REGISTRY)


def identity_by_key(key: str) -> Identity:
    for ident in registry():
        if ident.key == key:
            return ident
    raise KeyError(f"unknown identity {key!r}")


# ---------------------------------------------------------------------------
# sweeping
# ---------------------------------------------------------------------------

def _as_prime_power(q: int) -> tuple[int, int]:
    if q < 3 or q % 2 == 0:
        raise ValueError(f"{q} is not an odd prime power")
    p = q
    for d in range(3, q + 1, 2):
        if q % d == 0:
            p = d
            break
    r = 0
    rem = q
    while rem % p == 0 and rem > 1:
        rem //= p
        r += 1
    if rem != 1:
        raise ValueError(f"{q} is not a prime power")
    return p, r


def _records_for(ident: Identity, q: int) -> list[PointRecord]:
    p, r = _as_prime_power(q)
    if ident.prime_only and r != 1:
        return []
    ctx = cached_field(p, r)
    if not ident.field_admissible(ctx):
        return []
    out = []
    for pt in sorted(ident.points(ctx)):
        lhs, rhs = ident.evaluate(ctx, pt)
        residual = lhs - rhs
        out.append(PointRecord(
            identity=ident.key, q=q,
            params=tuple(zip(ident.param_names, pt)),
            lhs=lhs, rhs=rhs, residual=residual, passed=residual == 0))
    return out


def _sweep_task(args: tuple[str, int]) -> tuple[str, int, list[PointRecord]]:
    key, q = args
    return key, q, _records_for(identity_by_key(key), q)


def _assemble(ident: Identity, per_q: dict[int, list[PointRecord]],
              q_order: list[int], cap: int) -> IdentityReport:
    records: list[PointRecord] = []
    for q in q_order:
        records.extend(per_q.get(q, []))
    failures = [rec for rec in records if not rec.passed]
    return IdentityReport(
        identity=ident.key, provenance=ident.provenance,
        domain=f"{ident.domain_description}; q in {q_order}",
        records=records,
        counterexamples=failures[:cap],
        truncated=len(failures) > cap,
    )


def audit_identity(key: str, q_values: Iterable[int], *,
                   cap: int = COUNTEREXAMPLE_CAP) -> IdentityReport:
    """Evaluate one identity exactly at every point of its domain over the
    given prime powers."""
    ident = identity_by_key(key)
    q_order = sorted(set(q_values))
    per_q = {q: _records_for(ident, q) for q in q_order}
    return _assemble(ident, per_q, q_order, cap)


def sweep(q_max: int, include: str | None = None, *, jobs: int = 1,
          cap: int = COUNTEREXAMPLE_CAP) -> list[IdentityReport]:
    """Audit every registry identity (optionally one provenance class)
    over all odd prime powers q <= q_max.  ``jobs`` > 1 fans the
    (identity, q) grid out over processes; output is independent of the
    schedule because records are reassembled in sorted order."""
    if include is not None and include not in PROVENANCES:
        raise ValueError(f"unknown provenance filter {include!r}")
    idents = [i for i in registry() if include is None or i.provenance == include]
    qs = [p ** r for (p, r) in odd_prime_powers(q_max)]
    tasks = [(ident.key, q) for ident in idents for q in qs]
    results: dict[tuple[str, int], list[PointRecord]] = {}
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for key, q, recs in pool.map(_sweep_task, tasks, chunksize=4):
                results[(key, q)] = recs
    else:
        for key, q in tasks:
            results[(key, q)] = _records_for(identity_by_key(key), q)
    return [
        _assemble(ident, {q: results[(ident.key, q)] for q in qs}, qs, cap)
        for ident in idents
    ]


# ---------------------------------------------------------------------------
# emission
# ---------------------------------------------------------------------------

_CSV_COLUMNS = ("identity", "q", "a", "b", "lambda", "lhs", "rhs", "residual", "pass")


def _frac_str(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"


def _point_row(rec: PointRecord) -> dict:
    row: dict = {"identity": rec.identity, "q": rec.q}
    for name, value in rec.params:
        row[name] = value
    row["lhs"] = _frac_str(rec.lhs)
    row["rhs"] = _frac_str(rec.rhs)
    row["residual"] = _frac_str(rec.residual)
    row["pass"] = rec.passed
    return row


def _summary_row(report: IdentityReport) -> dict:
    return {
        "identity": report.identity,
        "summary": True,
        "provenance": report.provenance,
        "status": report.status,
        "points": len(report.records),
        "failures": sum(1 for r in report.records if not r.passed),
        "truncated": report.truncated,
    }


def emit(reports: list[IdentityReport], format: str = "json") -> bytes:
    """Serialize reports: one record per (identity, parameter point) plus
    one summary record per identity.  Rationals render as "num/den"."""
    if format == "json":
        rows = []
        for rep in reports:
            rows.extend(_point_row(rec) for rec in rep.records)
            rows.append(_summary_row(rep))
        return (json.dumps(rows, separators=(",", ":")) + "\n").encode()
    if format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\r\n")
        writer.writerow(_CSV_COLUMNS)
        for rep in reports:
            for rec in rep.records:
                row = _point_row(rec)
                writer.writerow([_csv_cell(row.get(col)) for col in _CSV_COLUMNS])
            writer.writerow([rep.identity, "", "", "", "", "", "", "",
                             "true" if rep.passed else "false"])
        return buf.getvalue().encode()
    raise ValueError(f"unknown format {format!r}")


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)
