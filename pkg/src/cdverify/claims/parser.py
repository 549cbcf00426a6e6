"""
Recursive-descent parser for ledger files.

    ledger  = { entry } ;
    entry   = ("claim" | "axiom") id string [ string ] { quant } ":" body ;
    quant   = "forall" param "in" domain ;
    domain  = "[" int ".." int "]" | "primes[" int ".." int "]"
            | "primepowers[" int ".." int "]"
            | "powersof(" int ")[" int ".." int "]" | "{" int { "," int } "}" ;
    body    = pred | string ;                      (* string only for axioms *)
    pred    = disj [ "implies" pred ] ;
    disj    = conj { "or" conj } ;
    conj    = unary { "and" unary } ;
    unary   = "not" unary | "(" pred ")" | atom ;
    atom    = expr relop expr
            | ["!"] "divides(" expr "," expr ")"
            | ["!"] "subset(" set "," set ")"
            | ["!"] "member(" expr "," set ")"
            | "simple(" group ")" | "nosolution(" expr "=" expr ")" ;
    set     = "pi(" group ")" | "{" expr { "," expr } "}" ;

Parameters are single letters; any identifier followed by "(" is a call.
``#`` starts a comment that runs to the end of the line.
"""
from __future__ import annotations

import re
from typing import Callable, List, Optional, Set, Tuple

from .. import arith, groups
from ..errors import DuplicateId, ParseError, UnboundParameter
from .ast import (
    And, BinOp, Call, Claim, Compare, Divides, Domain, GroupTpl, Implies,
    LitSet, Member, Name, Neg, NoSolution, Not, Num, Or, Param, PiSet,
    Quantifier, Simple, Statement, Subset,
)

RELOPS = ("<=", ">=", "!=", "==", "=", "<", ">")
KEYWORDS = {"claim", "axiom", "forall", "in", "and", "or", "not", "implies"}

# name -> argument kinds: "e" expression, "g" group template, "n" bare name,
# "*" any number of further expressions
FUNCTIONS = {
    "phi": "ee",
    "ppart": "ee",
    "l": "ee",
    "factorial": "e",
    "order": "g",
    "pexp": "g",
    "char": "g",
    "unipp": "g",
    "lsz": "g",
    "seitz": "g",
    "d1": "g",
    "d2": "g",
    "d3": "g",
    "bmax": "g",
    "tnum": "g",
    "const": "n",
    "witness": "n*",
    "bA": "e",
    "kS": "e",
    "ilog2": "e",
    "gcd": "ee",
    "mod": "ee",
}

_ID = re.compile(r"[A-Za-z0-9_][A-Za-z0-9_.\-]*")
_WORD = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_INT = re.compile(r"\d+")
_STRING = re.compile(r'"((?:[^"\\\n]|\\.)*)"')


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    # -- low level -------------------------------------------------------

    def error(self, message: str, pos: Optional[int] = None, cls=ParseError):
        return cls(message, self.text, self.pos if pos is None else pos)

    def skip(self) -> None:
        text = self.text
        while self.pos < len(text):
            c = text[self.pos]
            if c in " \t\r\n":
                self.pos += 1
            elif c == "#":
                end = text.find("\n", self.pos)
                self.pos = len(text) if end < 0 else end
            else:
                break

    def at(self, s: str) -> bool:
        self.skip()
        return self.text.startswith(s, self.pos)

    def at_word(self, w: str) -> bool:
        self.skip()
        m = _WORD.match(self.text, self.pos)
        return bool(m) and m.group() == w

    def accept(self, s: str) -> bool:
        if self.at(s):
            self.pos += len(s)
            return True
        return False

    def accept_word(self, w: str) -> bool:
        if self.at_word(w):
            self.pos += len(w)
            return True
        return False

    def expect(self, s: str) -> None:
        if not self.accept(s):
            self.skip()
            found = self.text[self.pos:self.pos + 12] or "end of input"
            raise self.error(f"expected {s!r}, found {found!r}")

    def expect_word(self, w: str) -> None:
        if not self.accept_word(w):
            raise self.error(f"expected {w!r}")

    def regex(self, pattern: re.Pattern, what: str) -> str:
        self.skip()
        m = pattern.match(self.text, self.pos)
        if not m:
            raise self.error(f"expected {what}")
        self.pos = m.end()
        return m.group()

    def integer(self) -> int:
        self.skip()
        sign = -1 if self.accept("-") else 1
        return sign * int(self.regex(_INT, "an integer"))

    def string(self) -> str:
        self.skip()
        m = _STRING.match(self.text, self.pos)
        if not m:
            raise self.error("expected a quoted string")
        self.pos = m.end()
        return m.group(1).replace('\\"', '"').replace("\\\\", "\\")

    def attempt(self, fn: Callable):
        """Run fn; on ParseError rewind and return None."""
        start = self.pos
        try:
            return fn()
        except ParseError:
            self.pos = start
            return None

    # -- entries ---------------------------------------------------------

    def ledger(self) -> List[Claim]:
        claims: List[Claim] = []
        seen = set()
        while True:
            self.skip()
            if self.pos >= len(self.text):
                return claims
            start = self.pos
            claim = self.entry()
            if claim.id in seen:
                raise self.error(f"duplicate claim id {claim.id!r}", start, DuplicateId)
            seen.add(claim.id)
            claims.append(claim)

    def entry(self) -> Claim:
        start = self.pos
        if self.accept_word("claim"):
            kind = "claim"
        elif self.accept_word("axiom"):
            kind = "axiom"
        else:
            raise self.error("expected 'claim' or 'axiom'")
        ident = self.regex(_ID, "a claim id")
        anchor = self.string()
        description = self.string() if self.at('"') else ""
        quants: List[Quantifier] = []
        bound: Set[str] = set()
        while self.at_word("forall"):
            qpos = self.pos
            self.expect_word("forall")
            name = self.param_name()
            if name in bound:
                raise self.error(f"parameter {name!r} bound twice", qpos)
            self.expect_word("in")
            quants.append(Quantifier(name, self.domain()))
            bound.add(name)
        self.expect(":")
        if kind == "axiom" and self.at('"'):
            pred = Statement(self.string())
        else:
            self.bound = bound
            pred = self.pred()
        line = self.text.count("\n", 0, start) + 1
        return Claim(ident, kind, anchor, tuple(quants), pred, description, line)

    def param_name(self) -> str:
        self.skip()
        m = _WORD.match(self.text, self.pos)
        if not m or len(m.group()) != 1:
            raise self.error("parameters are single letters")
        self.pos = m.end()
        return m.group()

    def domain(self) -> Domain:
        if self.accept("{"):
            items = [self.integer()]
            while self.accept(","):
                items.append(self.integer())
            self.expect("}")
            return Domain("set", items=tuple(items))
        kind, base = "range", 0
        for word in ("primepowers", "primes", "powersof"):
            if self.accept_word(word):
                kind = word
                break
        if kind == "powersof":
            self.expect("(")
            base = self.integer()
            self.expect(")")
            if not arith.is_prime(base):
                raise self.error(f"powersof needs a prime, got {base}")
        self.expect("[")
        lo = self.integer()
        self.expect("..")
        hi = self.integer()
        self.expect("]")
        if hi < lo:
            raise self.error(f"empty domain [{lo}..{hi}]")
        if kind == "powersof" and lo < 0:
            raise self.error("powersof exponents must be nonnegative")
        return Domain(kind, lo, hi, base)

    # -- predicates ------------------------------------------------------

    def pred(self):
        left = self.disj()
        if self.accept_word("implies"):
            return Implies(left, self.pred())
        return left

    def disj(self):
        left = self.conj()
        while self.accept_word("or"):
            left = Or(left, self.conj())
        return left

    def conj(self):
        left = self.unary()
        while self.accept_word("and"):
            left = And(left, self.unary())
        return left

    def unary(self):
        if self.accept_word("not"):
            return Not(self.unary())
        if self.at("("):
            nested = self.attempt(self._paren_pred)
            if nested is not None:
                return nested
        return self.atom()

    def _paren_pred(self):
        self.expect("(")
        inner = self.pred()
        self.expect(")")
        # "(a + b) * c > d" starts like a parenthesised predicate but is not
        if any(self.at(op) for op in RELOPS + ("+", "-", "*", "/", "^")):
            raise self.error("not a parenthesised predicate")
        return inner

    def atom(self):
        negated = False
        self.skip()
        start = self.pos
        if self.text.startswith("!", self.pos) and not self.text.startswith("!=", self.pos):
            self.pos += 1
            negated = True
        for word, build in (
            ("divides", self._divides),
            ("subset", self._subset),
            ("member", self._member),
        ):
            if self.at_word(word) and self._followed_by_paren(word):
                self.accept_word(word)
                return build(negated)
        if negated:
            raise self.error("'!' must precede divides, subset or member", start)
        if self.at_word("simple") and self._followed_by_paren("simple"):
            self.accept_word("simple")
            self.expect("(")
            g = self.group()
            self.expect(")")
            return Simple(g)
        if self.at_word("nosolution") and self._followed_by_paren("nosolution"):
            self.accept_word("nosolution")
            self.expect("(")
            left = self.expr()
            self.expect("=")
            right = self.expr()
            self.expect(")")
            return NoSolution(left, right)
        left = self.expr()
        for op in RELOPS:
            if self.accept(op):
                return Compare("=" if op == "==" else op, left, self.expr())
        raise self.error("expected a comparison operator")

    def _followed_by_paren(self, word: str) -> bool:
        return self.text.startswith("(", self.pos + len(word))

    def _divides(self, negated):
        self.expect("(")
        a = self.expr()
        self.expect(",")
        b = self.expr()
        self.expect(")")
        return Divides(negated, a, b)

    def _subset(self, negated):
        self.expect("(")
        a = self.set_expr()
        self.expect(",")
        b = self.set_expr()
        self.expect(")")
        return Subset(negated, a, b)

    def _member(self, negated):
        self.expect("(")
        a = self.expr()
        self.expect(",")
        b = self.set_expr()
        self.expect(")")
        return Member(negated, a, b)

    def set_expr(self):
        if self.accept("{"):
            items = [self.expr()]
            while self.accept(","):
                items.append(self.expr())
            self.expect("}")
            return LitSet(tuple(items))
        if self.at_word("pi"):
            self.accept_word("pi")
            self.expect("(")
            g = self.group()
            self.expect(")")
            return PiSet(g)
        raise self.error("expected pi(...) or a {...} set")

    # -- expressions -----------------------------------------------------

    def expr(self):
        left = self.term()
        while True:
            if self.accept("+"):
                left = BinOp("+", left, self.term())
            elif self.accept("-"):
                left = BinOp("-", left, self.term())
            else:
                return left

    def term(self):
        left = self.factor()
        while True:
            if self.accept("*"):
                left = BinOp("*", left, self.factor())
            elif self.accept("/"):
                left = BinOp("/", left, self.factor())
            else:
                return left

    def factor(self):
        if self.accept("-"):
            return Neg(self.factor())
        base = self.primary()
        if self.accept("^"):
            return BinOp("^", base, self.factor())
        return base

    def primary(self):
        self.skip()
        if self.accept("("):
            e = self.expr()
            self.expect(")")
            return e
        m = _INT.match(self.text, self.pos)
        if m:
            self.pos = m.end()
            return Num(int(m.group()))
        start = self.pos
        m = _WORD.match(self.text, self.pos)
        if not m:
            raise self.error("expected an expression")
        word = m.group()
        self.pos = m.end()
        if self.text.startswith("(", self.pos):
            return self.call(word, start)
        if word in KEYWORDS:
            raise self.error(f"unexpected keyword {word!r}", start)
        if len(word) != 1:
            raise self.error(f"unknown name {word!r}", start)
        if word not in self.bound:
            raise self.error(f"parameter {word!r} is not bound by a quantifier", start, UnboundParameter)
        return Param(word)

    def call(self, func: str, start: int):
        if func not in FUNCTIONS:
            raise self.error(f"unknown function {func!r}", start)
        kinds = FUNCTIONS[func]
        self.expect("(")
        args = []
        for i, kind in enumerate(kinds):
            if kind == "*":
                while self.accept(","):
                    args.append(self.expr())
                break
            if i:
                self.expect(",")
            if kind == "e":
                args.append(self.expr())
            elif kind == "g":
                args.append(self.group())
            else:
                args.append(Name(self.regex(_WORD, "a name")))
        self.expect(")")
        return Call(func, tuple(args))

    # -- group templates -------------------------------------------------

    def group(self) -> GroupTpl:
        self.skip()
        start = self.pos
        if self.text.startswith("Spor(", self.pos):
            self.pos += 4
            return GroupTpl("Spor", self.group_args())
        hit = groups.match_sporadic(self.text, self.pos)
        if hit is not None:
            self.pos = hit[1]
            return GroupTpl("sporadic", fixed=hit[0])
        fam = groups.match_family(self.text, self.pos)
        if fam is None:
            raise self.error("expected a group name", start)
        family, self.pos = fam
        args: List = []
        m = _INT.match(self.text, self.pos)
        if m and (family in groups.CLASSICAL or family == "A"):
            args.append(Num(int(m.group())))
            self.pos = m.end()
            if family == "A" and not self.text.startswith("(", self.pos):
                return GroupTpl("A", tuple(args))
        if not self.text.startswith("(", self.pos):
            raise self.error(f"expected '(' after {family}")
        return GroupTpl(family, tuple(args) + self.group_args())

    def group_args(self) -> Tuple:
        self.expect("(")
        args = [self.expr()]
        while self.accept(","):
            args.append(self.expr())
        self.expect(")")
        return tuple(args)


def parse_ledger(text: str) -> List[Claim]:
    """Parse ledger text into claims, checking ids and parameter bindings."""
    parser = _Parser(text)
    parser.bound = set()
    return parser.ledger()


def parse_claim(text: str) -> Claim:
    claims = parse_ledger(text)
    if len(claims) != 1:
        raise ParseError(f"expected exactly one claim, found {len(claims)}", text, 0)
    return claims[0]
