"""Syntax tree for ledger claims."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Tuple, Union


# -- expressions ------------------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Param:
    name: str


@dataclass(frozen=True)
class BinOp:
    op: str  # one of + - * / ^
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class Name:
    """A bare identifier argument, e.g. a constant or witness name."""

    text: str


@dataclass(frozen=True)
class GroupTpl:
    """Group name with expression arguments, e.g. ``G2(q)`` or ``L(n, 2^a)``.

    ``family`` is a family symbol, ``"sporadic"`` (name in ``fixed``) or
    ``"Spor"`` (index into the sporadic catalogue).
    """

    family: str
    args: Tuple["Expr", ...] = ()
    fixed: Optional[str] = None


@dataclass(frozen=True)
class Call:
    func: str
    args: Tuple[Union["Expr", GroupTpl, Name], ...]


Expr = Union[Num, Param, BinOp, Neg, Call]


# -- sets -------------------------------------------------------------------


@dataclass(frozen=True)
class PiSet:
    group: GroupTpl


@dataclass(frozen=True)
class LitSet:
    items: Tuple[Expr, ...]


SetExpr = Union[PiSet, LitSet]


# -- predicates -------------------------------------------------------------


@dataclass(frozen=True)
class Compare:
    op: str  # = != < <= > >=
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Divides:
    negated: bool
    divisor: Expr
    dividend: Expr


@dataclass(frozen=True)
class Subset:
    negated: bool
    left: SetExpr
    right: SetExpr


@dataclass(frozen=True)
class Member:
    negated: bool
    item: Expr
    collection: SetExpr


@dataclass(frozen=True)
class Simple:
    """True when the template names a valid simple group at this point."""

    group: GroupTpl


@dataclass(frozen=True)
class NoSolution:
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Not:
    operand: "Pred"


@dataclass(frozen=True)
class And:
    left: "Pred"
    right: "Pred"


@dataclass(frozen=True)
class Or:
    left: "Pred"
    right: "Pred"


@dataclass(frozen=True)
class Implies:
    left: "Pred"
    right: "Pred"


@dataclass(frozen=True)
class Statement:
    """Free-text body of an axiom."""

    text: str


Pred = Union[Compare, Divides, Subset, Member, Simple, NoSolution, Not, And, Or, Implies, Statement]


# -- claims -----------------------------------------------------------------


@dataclass(frozen=True)
class Domain:
    kind: str  # range | primes | primepowers | powersof | set
    lo: int = 0
    hi: int = 0
    base: int = 0
    items: Tuple[int, ...] = ()

    def __str__(self):
        if self.kind == "range":
            return f"[{self.lo}..{self.hi}]"
        if self.kind == "powersof":
            return f"powersof({self.base})[{self.lo}..{self.hi}]"
        if self.kind == "set":
            return "{" + ",".join(map(str, self.items)) + "}"
        return f"{self.kind}[{self.lo}..{self.hi}]"


@dataclass(frozen=True)
class Quantifier:
    param: str
    domain: Domain


@dataclass(frozen=True)
class Claim:
    id: str
    kind: str  # claim | axiom
    anchor: str
    quantifiers: Tuple[Quantifier, ...]
    predicate: Pred
    description: str = ""
    line: int = field(default=0, compare=False)

    @property
    def is_axiom(self) -> bool:
        return self.kind == "axiom"

    @property
    def scope(self) -> str:
        return ", ".join(f"{q.param} in {q.domain}" for q in self.quantifiers)
