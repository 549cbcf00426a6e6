import itertools
import json
import random
from pathlib import Path

import pytest
import sympy
from hypothesis import given, strategies as st

from cdverify.claims import (
    evaluate_claim, exit_code, format_machine, format_text, parse_claim, parse_ledger, run_ledger,
)
from cdverify.claims.evaluator import domain_values, evaluate_at
from cdverify.errors import DuplicateId, ParseError, UnboundParameter

LEDGERS = Path(__file__).resolve().parent.parent / "src" / "cdverify" / "ledgers"


def one(text, budget=None):
    return evaluate_claim(parse_claim(text), budget)


# -- parsing -----------------------------------------------------------------


def test_parse_single_claim():
    (c,) = parse_ledger('claim c1 "anchor" forall n in [1..100]: n*(n-1) != 36')
    assert c.id == "c1" and c.anchor == "anchor"
    assert len(c.quantifiers) == 1 and c.quantifiers[0].param == "n"


def test_parse_error_position():
    text = 'claim a "x": 1 = 1\nclaim b "y": 1 @ 2'
    with pytest.raises(ParseError) as info:
        parse_ledger(text)
    assert (info.value.line, info.value.column) == (2, 16)
    assert "line 2, column 16" in str(info.value)


def test_duplicate_id():
    with pytest.raises(DuplicateId) as info:
        parse_ledger('claim a "x":\n  1 < 2\nclaim a "y": 2 > 1')
    assert info.value.line == 3


def test_unbound_parameter():
    with pytest.raises(UnboundParameter) as info:
        parse_ledger('claim a "x" forall n in [1..3]:\n  m > 1')
    assert (info.value.line, info.value.column) == (2, 3)


def test_empty_domain_rejected():
    with pytest.raises(ParseError):
        parse_ledger('claim a "x" forall n in [3..1]: n > 0')


def test_comments_and_axioms():
    claims = parse_ledger('# note\naxiom z "y": "cited fact"\n# tail\n')
    assert claims[0].is_axiom
    assert evaluate_claim(claims[0]).status == "assumed"


def test_empty_ledger():
    assert parse_ledger("") == []
    assert run_ledger([]) == []
    assert exit_code([]) == 0


def test_bundled_ledgers_parse():
    counts = {p.stem: len(parse_ledger(p.read_text())) for p in LEDGERS.glob("*.claims")}
    assert counts["prop2"] >= 10
    assert sum(1 for c in parse_ledger((LEDGERS / "prop5.claims").read_text()) if not c.is_axiom) >= 60


# -- evaluation ----------------------------------------------------------------


def test_spec_examples():
    assert one('claim c "a" forall n in [1..100]: n*(n-1) != 36').status == "verified"
    assert one('claim c "a" forall q in primepowers[7..23]: !subset(pi(ON), pi(G2(q)))').status == "verified"
    r = one('claim c "a" forall n in [5..5]: !subset(pi(A(n)), pi(A(6)))')
    assert r.status == "refuted" and r.witness == (("n", 5),)


def test_functions():
    r = one(
        'claim c "a": phi(12, 2) = 13 and ppart(48, 2) = 16 and l(2, 3) = 7 and factorial(5) = 120'
        " and order(2B2(8)) = 29120 and pexp(G2(9)) = 12 and char(E8(4)) = 2"
        " and unipp(3D4(2)) = 2^7 and lsz(3D4(4)) = 960 and seitz(G2(5)) = 5^8"
        " and d1(M) = 196883 and bmax(Fi24') = 336033532800 and tnum(M11) = 7"
        " and const(d2_3D4_3) = 3942 and witness(sz_deg, 8) = 65 and bA(7) = 35"
        " and kS(10) = 42 and ilog2(1025) = 10 and gcd(12, 18) = 6 and mod(-1, 5) = 4"
    )
    assert r.status == "verified", r.reason


def test_member_of_absent_l_is_false():
    assert one('claim c "a": !member(l(2, 6), pi(M))').status == "verified"


def test_inexact_division_is_skipped_not_verified():
    r = one('claim c "a" forall n in [1..3]: n / 2 >= 0')
    assert r.status == "skipped" and "inexact" in r.reason


def test_not_simple_group_is_skipped():
    r = one('claim c "a" forall q in [2..3]: order(L(2, q)) > 0')
    assert r.status == "skipped" and "NotSimple" in r.reason


def test_simple_guard():
    r = one('claim c "a" forall q in primepowers[2..9]: simple(L(2, q)) implies order(L(2, q)) > 0')
    assert r.status == "verified"


def test_budget_exhaustion_skips():
    r = one('claim c "a" forall n in [1..2000000]: n > 0', budget=0.05)
    assert r.status == "skipped" and r.reason.startswith("budget exhausted")
    assert exit_code([r]) == 3


def test_exit_codes():
    ok = one('claim a "x": 1 = 1')
    bad = one('claim b "x": 1 = 2')
    skip = one('claim c "x": 1 / 0 = 1')
    assert exit_code([ok]) == 0
    assert exit_code([ok, skip]) == 3
    assert exit_code([ok, skip, bad]) == 1


def test_prime_power_domain():
    (c,) = parse_ledger('claim c "a" forall q in primepowers[1..5000]: q > 0')
    values = domain_values(c.quantifiers[0].domain)
    assert list(values) == [q for q in range(1, 5001) if len(sympy.factorint(q)) == 1]
    (c,) = parse_ledger('claim c "a" forall p in primes[10..100]: p > 0')
    assert list(domain_values(c.quantifiers[0].domain)) == list(sympy.primerange(10, 101))
    (c,) = parse_ledger('claim c "a" forall q in powersof(3)[1..4]: q > 0')
    assert list(domain_values(c.quantifiers[0].domain)) == [3, 9, 27, 81]


def test_counterexample_is_lexicographically_first():
    text = 'claim c "a" forall m in [1..20] forall n in [1..20]: m*n != 36 and m + n != 15'
    claim = parse_claim(text)
    r = evaluate_claim(claim)
    first = next(
        (m, n) for m, n in itertools.product(range(1, 21), repeat=2)
        if not evaluate_at(claim, (m, n))
    )
    assert r.witness == (("m", first[0]), ("n", first[1])) == (("m", 1), ("n", 14))


# -- random claims against a direct Python interpretation ------------------------

OPS = ["+", "-", "*"]
RELOPS = ["=", "!=", "<", "<=", ">", ">="]
PY_REL = {"=": "==", "!=": "!=", "<": "<", "<=": "<=", ">": ">", ">=": ">="}


def random_expr(rng, params, depth=0):
    roll = rng.random()
    if depth >= 2 or roll < 0.3:
        if rng.random() < 0.6:
            v = rng.choice(params)
            return v, v
        k = str(rng.randint(0, 12))
        return k, k
    if roll < 0.4:
        base, pbase = random_expr(rng, params, depth + 1)
        e = rng.randint(0, 3)
        return f"({base})^{e}", f"({pbase})**{e}"
    a, pa = random_expr(rng, params, depth + 1)
    b, pb = random_expr(rng, params, depth + 1)
    op = rng.choice(OPS)
    return f"({a} {op} {b})", f"({pa} {op} {pb})"


def random_atom(rng, params):
    a, pa = random_expr(rng, params)
    b, pb = random_expr(rng, params)
    if rng.random() < 0.3:
        neg = rng.random() < 0.5
        text = f"{'!' if neg else ''}divides({a}, {b})"
        py = f"(_div({pa}, {pb}) != {neg})"
        return text, py
    op = rng.choice(RELOPS)
    return f"{a} {op} {b}", f"({pa} {PY_REL[op]} {pb})"


def random_pred(rng, params, depth=0):
    if depth >= 2 or rng.random() < 0.5:
        return random_atom(rng, params)
    a, pa = random_pred(rng, params, depth + 1)
    b, pb = random_pred(rng, params, depth + 1)
    kind = rng.choice(["and", "or", "implies", "not"])
    if kind == "not":
        return f"not ({a})", f"(not {pa})"
    if kind == "implies":
        return f"({a}) implies ({b})", f"((not {pa}) or {pb})"
    return f"({a}) {kind} ({b})", f"({pa} {kind} {pb})"


def _div(d, n):
    return n == 0 if d == 0 else n % d == 0


def oracle(params, ranges, py):
    for point in itertools.product(*ranges):
        env = dict(zip(params, point), _div=_div)
        if not eval(py, env):
            return "refuted", tuple(zip(params, point))
    return "verified", None


def test_random_claims_against_oracle():
    rng = random.Random(1234)
    refuted = 0
    for i in range(200):
        params = ["n", "m"][: rng.randint(1, 2)]
        ranges, quants = [], []
        for p in params:
            lo = rng.randint(1, 50)
            hi = rng.randint(lo, min(50, lo + 15))
            ranges.append(range(lo, hi + 1))
            quants.append(f"forall {p} in [{lo}..{hi}]")
        text, py = random_pred(rng, params)
        claim = parse_claim(f'claim r{i} "random" {" ".join(quants)}: {text}')
        got = evaluate_claim(claim)
        status, witness = oracle(params, ranges, py)
        assert (got.status, got.witness) == (status, witness), text
        refuted += status == "refuted"
    assert 20 < refuted < 180


@given(st.integers(min_value=-50, max_value=50), st.integers(min_value=-50, max_value=50))
def test_arithmetic_single_point(a, b):
    r = one(f'claim c "a": ({a}) * ({b}) - ({a}) = {a * b - a}')
    assert r.status == "verified"


# -- runner ------------------------------------------------------------------------


def test_report_order_is_natural():
    claims = parse_ledger('claim c10 "x": 1 = 1\nclaim c2 "x": 1 = 1\nclaim c1 "x": 1 = 1')
    assert [r.id for r in run_ledger(claims)] == ["c1", "c2", "c10"]


def test_parallel_report_identical():
    claims = parse_ledger((LEDGERS / "prop2.claims").read_text())
    serial = run_ledger(claims, jobs=1)
    parallel = run_ledger(claims, jobs=8)
    assert format_text(serial) == format_text(parallel)
    assert format_machine(serial) == format_machine(parallel)


def test_machine_format_fields():
    results = run_ledger(parse_ledger('claim a "x" forall n in [1..3]: n < 3\naxiom b "y": "z"'))
    records = [json.loads(line) for line in format_machine(results).splitlines()]
    assert list(records[0]) == ["id", "kind", "status", "anchor", "scope", "points", "witness", "reason"]
    assert records[0]["status"] == "refuted" and records[0]["witness"] == {"n": 3}
    assert records[1]["status"] == "assumed"
    timed = json.loads(format_machine(results, timings=True).splitlines()[0])
    assert "elapsed_ms" in timed


def test_text_format():
    results = run_ledger(parse_ledger('claim a "x" "desc" forall n in [1..3]: n < 3'))
    text = format_text(results)
    assert "claim a: refuted" in text
    assert "counterexample: n=3" in text
    assert "scope: bounded, n in [1..3]" in text
    assert text.rstrip().endswith("1 entries: 0 verified, 1 refuted, 0 skipped, 0 assumed")
