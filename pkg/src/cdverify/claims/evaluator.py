"""
Exhaustive evaluation of claims over their finite quantifier domains.
"""
from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from .. import alternating, arith, degrees, groups, zsigmondy
from ..errors import (
    CdVerifyError, EvaluationError, FactorizationTimeout, InvalidParameters, NotSimple,
)
from .ast import (
    And, BinOp, Call, Claim, Compare, Divides, Domain, GroupTpl, Implies,
    LitSet, Member, Name, Neg, NoSolution, Not, Num, Or, Param, PiSet, Simple,
    Statement, Subset,
)

# results of ^ larger than this many bits are refused
MAX_POWER_BITS = 1 << 20
MAX_FACTORIAL = 5000

VERIFIED = "verified"
REFUTED = "refuted"
SKIPPED = "skipped"
ASSUMED = "assumed"


@dataclass
class ClaimResult:
    id: str
    kind: str
    status: str
    anchor: str
    description: str = ""
    scope: str = ""
    witness: Optional[Tuple[Tuple[str, int], ...]] = None
    points: int = 0
    reason: str = ""
    elapsed_ms: float = field(default=0.0, compare=False)

    @property
    def witness_text(self) -> str:
        if self.witness is None:
            return ""
        return ", ".join(f"{k}={v}" for k, v in self.witness)


class _Timeout(Exception):
    pass


@lru_cache(maxsize=256)
def domain_values(domain: Domain) -> Tuple[int, ...]:
    """The finite set a quantifier ranges over, in enumeration order."""
    if domain.kind == "set":
        return domain.items
    if domain.kind == "powersof":
        return tuple(domain.base**e for e in range(domain.lo, domain.hi + 1))
    values = range(domain.lo, domain.hi + 1)
    if domain.kind == "primes":
        return tuple(v for v in values if arith.is_prime(v))
    if domain.kind == "primepowers":
        return tuple(v for v in values if arith.prime_power(v) is not None)
    return tuple(values)


@lru_cache(maxsize=4096)
def _order_value(G: groups.GroupId) -> int:
    return groups.order_value(G)


class Evaluator:
    """Evaluates predicates at a single point, with a shared deadline."""

    def __init__(self, deadline: Optional[float] = None):
        self.deadline = deadline

    def remaining(self) -> Optional[float]:
        if self.deadline is None:
            return None
        left = self.deadline - arith.budget_clock()
        if left <= 0:
            raise _Timeout()
        return left

    # -- groups ----------------------------------------------------------

    def group(self, tpl: GroupTpl, env) -> groups.GroupId:
        if tpl.family == "sporadic":
            return groups.Sporadic(tpl.fixed)
        args = [self.expr(a, env) for a in tpl.args]
        if tpl.family == "Spor":
            (i,) = args
            if not 1 <= i <= len(groups.SPORADIC_NAMES):
                raise EvaluationError(f"Spor({i}) is out of range")
            return groups.Sporadic(groups.SPORADIC_NAMES[i - 1])
        return groups.build_group(tpl.family, args)

    # -- expressions -----------------------------------------------------

    def expr(self, node, env) -> int:
        if isinstance(node, Num):
            return node.value
        if isinstance(node, Param):
            return env[node.name]
        if isinstance(node, BinOp):
            a = self.expr(node.left, env)
            b = self.expr(node.right, env)
            op = node.op
            if op == "+":
                return a + b
            if op == "-":
                return a - b
            if op == "*":
                return a * b
            if op == "/":
                if b == 0 or a % b:
                    raise EvaluationError(f"inexact division {a} / {b}")
                return a // b
            if b < 0:
                raise EvaluationError(f"negative exponent {b}")
            if abs(a) > 1 and b * max(a.bit_length() - 1, 1) > MAX_POWER_BITS:
                raise EvaluationError(f"{a}^{b} is too large")
            return a**b
        if isinstance(node, Neg):
            return -self.expr(node.operand, env)
        if isinstance(node, Call):
            return self.call(node, env)
        raise TypeError(f"not an expression: {node!r}")  # pragma: no cover

    def call(self, node: Call, env) -> int:
        f, args = node.func, node.args
        if f == "const":
            key = args[0].text
            if key not in degrees.CONSTANTS:
                raise EvaluationError(f"unknown constant {key!r}")
            return degrees.CONSTANTS.value(key)
        if f == "witness":
            return degrees.witness_degree(args[0].text, *(self.expr(a, env) for a in args[1:]))
        if isinstance(args[0], GroupTpl):
            G = self.group(args[0], env)
            return self._group_call(f, G)
        vals = [self.expr(a, env) for a in args]
        if f == "phi":
            k, e = vals
            if k < 1 or e < 2:
                raise EvaluationError(f"phi({k}, {e}) needs k >= 1 and e >= 2")
            return arith.cyclotomic_value(k, e)
        if f == "ppart":
            e, p = vals
            if e == 0:
                raise EvaluationError("ppart of 0")
            return arith.p_part(abs(e), p)
        if f == "l":
            q, n = vals
            value = zsigmondy.l(q, n, self.remaining())
            if value is None:
                raise EvaluationError(f"l({q}, {n}) does not exist")
            return value
        if f == "factorial":
            (n,) = vals
            if not 0 <= n <= MAX_FACTORIAL:
                raise EvaluationError(f"factorial({n}) out of range")
            return math.factorial(n)
        if f == "bA":
            return alternating.max_degree_alternating(vals[0])
        if f == "kS":
            return alternating.partition_count(vals[0])
        if f == "ilog2":
            (x,) = vals
            if x < 1:
                raise EvaluationError(f"ilog2({x})")
            return x.bit_length() - 1
        if f == "gcd":
            return math.gcd(*vals)
        if f == "mod":
            a, m = vals
            if m == 0:
                raise EvaluationError("mod by zero")
            return a % m
        raise EvaluationError(f"unknown function {f!r}")  # pragma: no cover

    def _group_call(self, f: str, G: groups.GroupId) -> int:
        if f == "order":
            return _order_value(G)
        if f == "pexp":
            return groups.p_part_order(G)[1]
        if f == "char":
            return groups.characteristic(G)
        if f == "unipp":
            return degrees.unipotent_p_part(G)
        if f == "lsz":
            return degrees.lsz_bound(G)
        if f == "seitz":
            return degrees.seitz_bound(G)
        if not isinstance(G, groups.Sporadic):
            raise EvaluationError(f"{f}() needs a sporadic group, got {G}")
        rec = degrees.sporadic_record(G.name)
        return {"d1": rec.d1, "d2": rec.d2, "d3": rec.d3, "bmax": rec.b, "tnum": rec.t}[f]

    # -- sets ------------------------------------------------------------

    def set_primes(self, node, env) -> frozenset:
        """Explicit members of a set (factors |G| for pi sets)."""
        if isinstance(node, LitSet):
            return frozenset(self.expr(e, env) for e in node.items)
        G = self.group(node.group, env)
        return groups.pi(G, self.remaining())

    def contains(self, node, x: int, env) -> bool:
        if isinstance(node, LitSet):
            return any(self.expr(e, env) == x for e in node.items)
        G = self.group(node.group, env)
        return x > 1 and _order_value(G) % x == 0 and arith.is_prime(x)

    # -- predicates ------------------------------------------------------

    def pred(self, node, env) -> bool:
        if isinstance(node, Compare):
            a = self.expr(node.left, env)
            b = self.expr(node.right, env)
            return {
                "=": a == b, "!=": a != b, "<": a < b,
                "<=": a <= b, ">": a > b, ">=": a >= b,
            }[node.op]
        if isinstance(node, NoSolution):
            return self.expr(node.left, env) != self.expr(node.right, env)
        if isinstance(node, Divides):
            d = self.expr(node.divisor, env)
            n = self.expr(node.dividend, env)
            holds = n == 0 if d == 0 else n % d == 0
            return holds != node.negated
        if isinstance(node, Subset):
            left = self.set_primes(node.left, env)
            holds = all(self.contains(node.right, x, env) for x in sorted(left))
            return holds != node.negated
        if isinstance(node, Member):
            return self.member(node, env) != node.negated
        if isinstance(node, Simple):
            try:
                self.group(node.group, env)
            except (NotSimple, InvalidParameters):
                return False
            return True
        if isinstance(node, Not):
            return not self.pred(node.operand, env)
        if isinstance(node, And):
            return self.pred(node.left, env) and self.pred(node.right, env)
        if isinstance(node, Or):
            return self.pred(node.left, env) or self.pred(node.right, env)
        if isinstance(node, Implies):
            return not self.pred(node.left, env) or self.pred(node.right, env)
        raise TypeError(f"not a predicate: {node!r}")  # pragma: no cover

    def member(self, node: Member, env) -> bool:
        item = node.item
        if isinstance(item, Call) and item.func == "l" and isinstance(node.collection, PiSet):
            # an absent l(q, n) is a member of nothing
            q, n = (self.expr(a, env) for a in item.args)
            G = self.group(node.collection.group, env)
            return zsigmondy.smallest_divides(q, n, _order_value(G), self.remaining())
        return self.contains(node.collection, self.expr(item, env), env)


def _points(claim: Claim):
    names = [q.param for q in claim.quantifiers]
    spaces = [domain_values(q.domain) for q in claim.quantifiers]
    return names, itertools.product(*spaces)


def evaluate_claim(claim: Claim, budget: Optional[float] = None) -> ClaimResult:
    """Check a claim at every point of its domain.

    ``budget`` is in CPU seconds.  The first failing point in lexicographic
    domain order is reported as the witness of a refutation; running out
    of budget or an operation error yields ``skipped``, never ``verified``.
    """
    start = time.monotonic()
    result = ClaimResult(
        claim.id, claim.kind, SKIPPED, claim.anchor, claim.description, claim.scope
    )
    if claim.is_axiom:
        result.status = ASSUMED
        return result
    evaluator = Evaluator(None if budget is None else arith.budget_clock() + budget)
    names, points = _points(claim)
    env: Dict[str, int] = {}
    count = 0
    try:
        for point in points:
            evaluator.remaining()
            env = dict(zip(names, point))
            if not evaluator.pred(claim.predicate, env):
                result.status = REFUTED
                result.witness = tuple(zip(names, point))
                count += 1
                break
            count += 1
        else:
            result.status = VERIFIED
    except (_Timeout, FactorizationTimeout):
        result.reason = f"budget exhausted after {count} point(s)"
    except (CdVerifyError, ValueError, ArithmeticError) as exc:
        where = ", ".join(f"{k}={v}" for k, v in env.items())
        result.reason = f"{type(exc).__name__}: {exc}" + (f" at {where}" if where else "")
    result.points = count
    result.elapsed_ms = (time.monotonic() - start) * 1000
    return result


def evaluate_at(claim: Claim, point: Sequence[int]) -> bool:
    """Truth value of the predicate at one point (no budget)."""
    env = dict(zip((q.param for q in claim.quantifiers), point))
    return Evaluator().pred(claim.predicate, env)
