import csv
import io
import json
from fractions import Fraction

import pytest

from hypergf import audit_identity, emit, identity_by_key, registry, sweep
from hypergf.audit import PROVENANCES


def _record(report, **params):
    want = tuple(params.items())
    for rec in report.records:
        if rec.q == params.get("q") and \
                tuple(kv for kv in rec.params) == tuple(
                    (k, v) for k, v in want if k != "q"):
            return rec
    raise AssertionError(f"no record with {params} in {report.identity}")


def test_registry_contents():
    idents = registry()
    assert len(idents) >= 15
    keys = [i.key for i in idents]
    assert len(keys) == len(set(keys))
    for want in ("T4.1", "C4.2", "C5.1", "T5.2a", "T5.2b", "T5.2c", "T5.3a",
                 "T5.3b", "C1", "C2", "C3", "C4a", "C4b", "C4c", "C5.3",
                 "G-reflect", "G-ratio", "G-316", "O-minus1"):
        assert want in keys
    assert all(i.provenance in PROVENANCES for i in idents)
    # every printed identity points at its corrected form or carries a note
    for ident in idents:
        if ident.provenance == "printed":
            assert ident.counterpart or "empirical" in ident.description


def test_unknown_identity_rejected():
    with pytest.raises(KeyError, match="unknown"):
        identity_by_key("T9.9")
    with pytest.raises(KeyError):
        audit_identity("nope", [5])


def test_bad_q_rejected():
    with pytest.raises(ValueError, match="prime"):
        audit_identity("C1", [4])
    with pytest.raises(ValueError, match="prime"):
        audit_identity("C1", [15])


def test_t41_residuals_at_q5():
    report = audit_identity("T4.1", [5])
    assert report.status == "FAIL"
    rec = _record(report, q=5, a=1, b=4)
    assert (rec.lhs, rec.rhs, rec.residual) == (Fraction(8), Fraction(7), Fraction(1))
    rec = _record(report, q=5, a=1, b=2)
    assert rec.rhs == Fraction(23, 2)
    assert rec.residual == Fraction(-7, 2)
    assert rec.rhs.denominator != 1     # non-integral count is evidence, not an error


def test_t41_residual_pattern_at_q5():
    # at q=5: on square ratios the printed form misses by 2*phi(a)-1 (so by
    # exactly +1 whenever a is itself a square, e.g. at (1,4)); on nonsquare
    # ratios it produces a non-integral point count
    report = audit_identity("T4.1", [5])
    squares_mod5 = {1, 4}
    for rec in report.records:
        params = dict(rec.params)
        a = params["a"]
        ratio = (params["b"] * pow(a, 3, 5)) % 5
        if ratio in squares_mod5:
            want = 1 if a in squares_mod5 else -3
            assert rec.residual == want, rec
        else:
            assert rec.rhs.denominator > 1, rec


def test_c42_residual_at_q5():
    report = audit_identity("C4.2", [5])
    rec = _record(report, q=5, a=1, b=2)
    assert (rec.lhs, rec.rhs) == (Fraction(8), Fraction(7))
    assert rec.residual == Fraction(1)


def test_t52b_residual_at_q13():
    report = audit_identity("T5.2b", [13])
    rec = next(r for r in report.records
               if r.q == 13 and dict(r.params)["lambda"] == 2)
    assert rec.lhs == Fraction(2, 13)
    assert rec.rhs == Fraction(38, 169)
    assert rec.residual == Fraction(-12, 169)
    corrected = audit_identity("C4b", [13])
    crec = next(r for r in corrected.records
                if r.q == 13 and dict(r.params)["lambda"] == 2)
    assert crec.passed


def test_corrected_pass_small_sweep():
    report = audit_identity("C1", [5, 7, 9, 11, 13])
    assert report.status == "PASS"
    assert all(rec.residual == 0 for rec in report.records)
    assert report.records  # nonempty domain


def test_sweep_statuses_q13():
    by_key = {rep.identity: rep for rep in sweep(13)}
    for key in ("T4.1", "C4.2", "C5.1", "T5.2a", "T5.2b", "T5.2c"):
        assert by_key[key].status == "FAIL"
        assert by_key[key].counterexamples
    for rep in by_key.values():
        if rep.provenance in ("corrected", "greene", "ono"):
            assert rep.status == "PASS", rep.identity
    # pass flag is exactly residual == 0
    for rep in by_key.values():
        for rec in rep.records:
            assert rec.passed == (rec.residual == 0)


def test_provenance_filter():
    assert {r.provenance for r in sweep(7, include="printed")} == {"printed"}
    assert {r.provenance for r in sweep(7, include="greene")} == {"greene"}
    with pytest.raises(ValueError, match="provenance"):
        sweep(7, include="folklore")


def test_counterexample_cap():
    report = audit_identity("T4.1", [5, 7, 9, 11, 13])
    failures = [r for r in report.records if not r.passed]
    assert len(failures) > 100
    assert len(report.counterexamples) == 100
    assert report.truncated
    small = audit_identity("T4.1", [5], cap=3)
    assert len(small.counterexamples) == 3 and small.truncated


def test_emit_json_schema():
    reports = [audit_identity("T4.1", [5])]
    payload = emit(reports, "json")
    rows = json.loads(payload)
    failure_row = next(r for r in rows if r.get("a") == 1 and r.get("b") == 4)
    assert failure_row == {"identity": "T4.1", "q": 5, "a": 1, "b": 4,
                           "lhs": "8/1", "rhs": "7/1", "residual": "1/1",
                           "pass": False}
    summary = rows[-1]
    assert summary["identity"] == "T4.1" and summary["summary"] is True
    assert summary["status"] == "FAIL"
    assert summary["points"] == len(reports[0].records)


def test_emit_csv_schema():
    reports = [audit_identity("G-reflect", [5]), audit_identity("O-minus1", [5, 7])]
    text = emit(reports, "csv").decode()
    lines = text.split("\r\n")
    assert lines[0] == "identity,q,a,b,lambda,lhs,rhs,residual,pass"
    parsed = list(csv.reader(io.StringIO(text)))
    # every data row has exactly the header width
    assert all(len(row) == 9 for row in parsed if row)
    lam_row = parsed[1]
    assert lam_row[0] == "G-reflect" and lam_row[4] != "" and lam_row[2] == ""
    # summary rows carry only the identity and the overall status
    summaries = [row for row in parsed[1:] if row and row[1] == ""]
    assert [row[0] for row in summaries] == ["G-reflect", "O-minus1"]
    assert all(row[8] in ("true", "false") for row in summaries)


def test_emit_empty_and_bad_format():
    assert emit([], "json") == b"[]\n"
    assert emit([], "csv").decode().strip() == "identity,q,a,b,lambda,lhs,rhs,residual,pass"
    with pytest.raises(ValueError, match="format"):
        emit([], "xml")


def test_sweep_deterministic_and_parallel_identical():
    a = emit(sweep(9), "json")
    b = emit(sweep(9), "json")
    assert a == b
    c = emit(sweep(9, jobs=2), "json")
    assert a == c
    assert emit(sweep(9), "csv") == emit(sweep(9, jobs=2), "csv")


def test_prime_only_identities_skip_extensions():
    rep = audit_identity("O-minus1", [9, 25])
    assert rep.records == [] and rep.status == "PASS"
    rep = audit_identity("T5.3a", [13, 17, 25])
    assert {rec.q for rec in rep.records} == {13, 17}


def test_quoted_suites_pass_in_full_ranges():
    from hypergf.ff import is_prime, odd_prime_powers

    qs49 = [p ** r for p, r in odd_prime_powers(49)]
    for key in ("G-reflect", "G-ratio", "G-316", "S-edw"):
        report = audit_identity(key, qs49)
        assert report.status == "PASS", (key, report.counterexamples[:3])
        assert report.records
    primes = [p for p in range(3, 230, 2) if is_prime(p)]
    report = audit_identity("O-minus1", primes)
    assert report.status == "PASS"
    assert len(report.records) == len(primes)
