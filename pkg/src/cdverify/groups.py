"""
Catalogue of finite simple groups: identifiers, name parsing, exact orders,
prime sets and defining-characteristic p-parts.

Twisted groups of types 2B2, 2G2 and 2F4 are identified by m, where the
field size is Q = p^(2m+1); their names carry Q itself, e.g. ``2B2(8)``.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from importlib import resources
from types import MappingProxyType
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

from . import arith
from .arith import Factorization
from .errors import InvalidParameters, NotLieType, NotSimple, ParseError


# ---------------------------------------------------------------------------
# identifiers


class GroupId:
    """Base class of all group identifiers."""

    is_lie_type = True
    is_exceptional = False

    @property
    def name(self) -> str:
        raise NotImplementedError

    def __str__(self):
        return self.name


def _field(q: int) -> Tuple[int, int]:
    pp = arith.prime_power(q)
    if pp is None:
        raise InvalidParameters(f"field size {q} is not a prime power")
    return pp


def _sign(eps: int) -> int:
    if eps not in (1, -1):
        raise InvalidParameters(f"epsilon must be +1 or -1, got {eps}")
    return eps


@dataclass(frozen=True)
class Alternating(GroupId):
    n: int
    is_lie_type = False

    def __post_init__(self):
        if self.n < 5:
            raise NotSimple(f"A{self.n} is not a nonabelian simple group")

    @property
    def name(self):
        return f"A{self.n}"


@dataclass(frozen=True)
class Linear(GroupId):
    """L_n(q) for eps = +1, U_n(q) for eps = -1."""

    n: int
    q: int
    eps: int = 1

    def __post_init__(self):
        _field(self.q)
        _sign(self.eps)
        if self.n < 2:
            raise InvalidParameters("L_n(q) needs n >= 2")
        if self.n == 2 and self.eps == -1:
            raise InvalidParameters("U2(q) is L2(q); construct Linear(2, q)")
        if (self.n, self.q) in ((2, 2), (2, 3)) or (self.n, self.q, self.eps) == (3, 2, -1):
            raise NotSimple(f"{self.name} is not simple")

    @property
    def name(self):
        return f"{'L' if self.eps == 1 else 'U'}{self.n}({self.q})"


@dataclass(frozen=True)
class Symplectic(GroupId):
    """S_{2n}(q)."""

    n: int
    q: int

    def __post_init__(self):
        _field(self.q)
        if self.n < 2:
            raise InvalidParameters("S_2n(q) needs n >= 2 (S2(q) is L2(q))")
        if (self.n, self.q) == (2, 2):
            raise NotSimple("S4(2) is not simple")

    @property
    def name(self):
        return f"S{2 * self.n}({self.q})"


@dataclass(frozen=True)
class OrthOdd(GroupId):
    """O_{2n+1}(q), q odd."""

    n: int
    q: int

    def __post_init__(self):
        p, _ = _field(self.q)
        if p == 2:
            raise InvalidParameters("O_2n+1(q) needs q odd (even q gives S_2n(q))")
        if self.n < 3:
            raise InvalidParameters("O_2n+1(q) needs n >= 3")

    @property
    def name(self):
        return f"O{2 * self.n + 1}({self.q})"


@dataclass(frozen=True)
class OrthEven(GroupId):
    """O^+_{2n}(q) or O^-_{2n}(q)."""

    n: int
    q: int
    eps: int = 1

    def __post_init__(self):
        _field(self.q)
        _sign(self.eps)
        if self.n < 4:
            raise InvalidParameters("O^eps_2n(q) needs n >= 4")

    @property
    def name(self):
        return f"O{'+' if self.eps == 1 else '-'}{2 * self.n}({self.q})"


@dataclass(frozen=True)
class _TwistedM(GroupId):
    m: int
    is_exceptional = True
    prime = 2
    label = ""

    def __post_init__(self):
        if self.m < 1:
            raise NotSimple(f"{self.label}({self.prime ** (2 * self.m + 1)}) is not simple")

    @property
    def Q(self) -> int:
        """Field size p^(2m+1)."""
        return self.prime ** (2 * self.m + 1)

    @property
    def name(self):
        return f"{self.label}({self.Q})"


@dataclass(frozen=True)
class Suzuki(_TwistedM):
    label = "2B2"


@dataclass(frozen=True)
class Ree(_TwistedM):
    prime = 3
    label = "2G2"


@dataclass(frozen=True)
class TwistedF4(_TwistedM):
    label = "2F4"


@dataclass(frozen=True)
class _ExceptionalQ(GroupId):
    q: int
    is_exceptional = True
    label = ""

    def __post_init__(self):
        _field(self.q)

    @property
    def name(self):
        return f"{self.label}({self.q})"


@dataclass(frozen=True)
class TriD4(_ExceptionalQ):
    label = "3D4"


@dataclass(frozen=True)
class G2(_ExceptionalQ):
    label = "G2"

    def __post_init__(self):
        super().__post_init__()
        if self.q == 2:
            raise NotSimple("G2(2) is not simple")


@dataclass(frozen=True)
class F4(_ExceptionalQ):
    label = "F4"


@dataclass(frozen=True)
class E6(GroupId):
    """E6(q) for eps = +1, 2E6(q) for eps = -1."""

    q: int
    eps: int = 1
    is_exceptional = True

    def __post_init__(self):
        _field(self.q)
        _sign(self.eps)

    @property
    def name(self):
        return f"{'E6' if self.eps == 1 else '2E6'}({self.q})"


@dataclass(frozen=True)
class E7(_ExceptionalQ):
    label = "E7"


@dataclass(frozen=True)
class E8(_ExceptionalQ):
    label = "E8"


@dataclass(frozen=True)
class Sporadic(GroupId):
    name_: str
    is_lie_type = False

    def __post_init__(self):
        if self.name_ not in SPORADIC_NAMES:
            raise InvalidParameters(f"unknown sporadic group {self.name_!r}")

    @property
    def name(self):
        return self.name_


SPORADIC_NAMES: Tuple[str, ...] = (
    "M11", "M12", "J1", "M22", "J2", "M23", "HS", "J3", "M24", "McL", "He",
    "Ru", "Suz", "ON", "Co3", "Co2", "Fi22", "HN", "Ly", "Th", "Fi23", "Co1",
    "J4", "Fi24'", "B", "M", "2F4(2)'",
)

# the Tits group is catalogued with the sporadic groups
TITS = "2F4(2)'"

_SPORADIC_ALIASES = {"O'N": "ON", "Fi24": "Fi24'", "Tits": TITS}


# ---------------------------------------------------------------------------
# construction from parts and from text

CLASSICAL = ("L", "U", "S", "O", "O+", "O-")
EXCEPTIONAL = ("2B2", "2G2", "2F4", "3D4", "G2", "F4", "E6", "2E6", "E7", "E8")
FAMILIES = CLASSICAL + EXCEPTIONAL + ("A",)


def _odd_power_exponent(Q: int, p: int, label: str) -> int:
    pp = arith.prime_power(Q)
    if pp is None or pp[0] != p or pp[1] % 2 == 0:
        raise InvalidParameters(f"{label}(Q) needs Q an odd power of {p}, got {Q}")
    return (pp[1] - 1) // 2


def build_group(family: str, args: Sequence[int]) -> GroupId:
    """Construct a group from a family symbol and its integer arguments.

    Classical families take (dimension, q); A takes (n,); exceptional
    families take the field size (for 2B2/2G2/2F4 the full Q = p^(2m+1)).
    Aliases are canonicalised: U2(q), S2(q) -> L2(q).
    """
    args = [int(a) for a in args]
    if family == "A":
        if len(args) != 1:
            raise InvalidParameters("A takes one argument")
        return Alternating(args[0])
    if family in CLASSICAL:
        if len(args) != 2:
            raise InvalidParameters(f"{family} takes (dimension, q)")
        dim, q = args
        if family in ("L", "U"):
            if dim == 2:
                return Linear(2, q, 1)
            return Linear(dim, q, 1 if family == "L" else -1)
        if family == "S":
            if dim % 2:
                raise InvalidParameters(f"symplectic dimension must be even, got {dim}")
            if dim == 2:
                return Linear(2, q, 1)
            return Symplectic(dim // 2, q)
        if family == "O":
            if dim % 2 == 0:
                raise InvalidParameters("O(d, q) needs odd d; use O+ or O- for even d")
            return OrthOdd((dim - 1) // 2, q)
        if dim % 2:
            raise InvalidParameters(f"{family} needs even dimension, got {dim}")
        return OrthEven(dim // 2, q, 1 if family == "O+" else -1)
    if family in EXCEPTIONAL:
        if len(args) != 1:
            raise InvalidParameters(f"{family} takes a single field size")
        (q,) = args
        if family == "2B2":
            if q == 2:
                raise NotSimple("2B2(2) is not simple")
            return Suzuki(_odd_power_exponent(q, 2, family))
        if family == "2G2":
            if q == 3:
                raise NotSimple("2G2(3) is not simple")
            return Ree(_odd_power_exponent(q, 3, family))
        if family == "2F4":
            if q == 2:
                raise NotSimple("2F4(2) is not simple; its derived group is 2F4(2)'")
            return TwistedF4(_odd_power_exponent(q, 2, family))
        return {
            "3D4": TriD4, "G2": G2, "F4": F4, "E7": E7, "E8": E8,
            "E6": lambda q: E6(q, 1), "2E6": lambda q: E6(q, -1),
        }[family](q)
    raise InvalidParameters(f"unknown family {family!r}")


def sporadic(name: str) -> Sporadic:
    return Sporadic(_SPORADIC_ALIASES.get(name, name))


# longest names first so that e.g. "M11" wins over "M" and "2F4(2)'" over "2F4"
_SPORADIC_TOKENS = sorted(set(SPORADIC_NAMES) | set(_SPORADIC_ALIASES), key=len, reverse=True)
_FAMILY_TOKENS = sorted(FAMILIES, key=len, reverse=True)
_INT = re.compile(r"\s*(\d+)")


def match_sporadic(text: str, pos: int) -> Optional[Tuple[str, int]]:
    """Match a sporadic name at ``pos``; returns (canonical name, end)."""
    for tok in _SPORADIC_TOKENS:
        if text.startswith(tok, pos):
            end = pos + len(tok)
            if end < len(text) and (text[end].isalnum() or text[end] in "_'("):
                continue
            return _SPORADIC_ALIASES.get(tok, tok), end
    return None


def match_family(text: str, pos: int) -> Optional[Tuple[str, int]]:
    for tok in _FAMILY_TOKENS:
        if text.startswith(tok, pos):
            return tok, pos + len(tok)
    return None


def parse_group(name: str) -> GroupId:
    """Parse a group name such as ``L3(4)``, ``U(4,3)``, ``2B2(8)``, ``ON``.

    Raises ParseError for malformed text, InvalidParameters for impossible
    parameters and NotSimple for the excluded small cases.
    """
    text = name.strip()
    hit = match_sporadic(text, 0)
    if hit is not None and hit[1] == len(text):
        return Sporadic(hit[0])
    fam = match_family(text, 0)
    if fam is None:
        raise ParseError(f"unknown group name {name!r}", text, 0)
    family, pos = fam
    dim = None
    m = _INT.match(text, pos)
    if m and (family in CLASSICAL or family == "A"):
        dim = int(m.group(1))
        pos = m.end()
    args: List[int] = []
    if family == "A" and dim is not None and pos == len(text):
        return build_group("A", [dim])
    if pos >= len(text) or text[pos] != "(":
        raise ParseError("expected '('", text, pos)
    pos += 1
    while True:
        m = _INT.match(text, pos)
        if not m:
            raise ParseError("expected an integer", text, pos)
        args.append(int(m.group(1)))
        pos = m.end()
        while pos < len(text) and text[pos] == " ":
            pos += 1
        if pos < len(text) and text[pos] == ",":
            pos += 1
            continue
        break
    if pos >= len(text) or text[pos] != ")":
        raise ParseError("expected ')'", text, pos)
    pos += 1
    if pos != len(text):
        raise ParseError("trailing characters", text, pos)
    if dim is not None:
        args = [dim] + args
    return build_group(family, args)


# ---------------------------------------------------------------------------
# orders

# A factor of the order is either ("-", base, i) for base^i - 1 or
# ("+", base, i) for base^i + 1.
_Term = Tuple[str, int, int]


@dataclass(frozen=True)
class OrderShape:
    """|G| = p^k * prod(terms) / divisor, with p the defining characteristic."""

    p: int
    k: int
    terms: Tuple[_Term, ...]
    divisor: int


def _signed(base: int, i: int, eps: int) -> _Term:
    """base^i - eps^i."""
    if eps == 1 or i % 2 == 0:
        return ("-", base, i)
    return ("+", base, i)


def _term_value(t: _Term) -> int:
    kind, base, i = t
    return base**i - 1 if kind == "-" else base**i + 1


def _term_cyclotomics(t: _Term) -> List[int]:
    """Indices d with base^i -/+ 1 = prod Phi_d(base)."""
    kind, _, i = t
    if kind == "-":
        return arith.divisors(i)
    return [d for d in arith.divisors(2 * i) if i % d]


def order_shape(G: GroupId) -> OrderShape:
    if not G.is_lie_type:
        raise NotLieType(f"{G} is not of Lie type")
    if isinstance(G, _TwistedM):
        Q = G.Q
        p, a = G.prime, 2 * G.m + 1
        if isinstance(G, Suzuki):
            return OrderShape(p, 2 * a, (("+", Q, 2), ("-", Q, 1)), 1)
        if isinstance(G, Ree):
            return OrderShape(p, 3 * a, (("+", Q, 3), ("-", Q, 1)), 1)
        return OrderShape(p, 12 * a, (("+", Q, 6), ("-", Q, 4), ("+", Q, 3), ("-", Q, 1)), 1)

    q = G.q
    p, a = _field(q)
    if isinstance(G, Linear):
        n, eps = G.n, G.eps
        terms = tuple(_signed(q, i, eps) for i in range(2, n + 1))
        return OrderShape(p, a * n * (n - 1) // 2, terms, math.gcd(n, q - eps))
    if isinstance(G, (Symplectic, OrthOdd)):
        n = G.n
        terms = tuple(("-", q, 2 * i) for i in range(1, n + 1))
        return OrderShape(p, a * n * n, terms, math.gcd(2, q - 1))
    if isinstance(G, OrthEven):
        n, eps = G.n, G.eps
        top = ("-", q, n) if eps == 1 else ("+", q, n)
        terms = (top,) + tuple(("-", q, 2 * i) for i in range(1, n))
        return OrderShape(p, a * n * (n - 1), terms, math.gcd(4, _term_value(top)))
    if isinstance(G, TriD4):
        # q^8 + q^4 + 1 = (q^12 - 1) / (q^4 - 1)
        return OrderShape(p, 12 * a, (("-", q, 12), ("-", q, 6), ("-", q, 2)), q**4 - 1)
    if isinstance(G, G2):
        return OrderShape(p, 6 * a, (("-", q, 6), ("-", q, 2)), 1)
    if isinstance(G, F4):
        return OrderShape(p, 24 * a, tuple(("-", q, i) for i in (2, 6, 8, 12)), 1)
    if isinstance(G, E6):
        terms = tuple(_signed(q, i, G.eps) for i in (2, 5, 6, 8, 9, 12))
        return OrderShape(p, 36 * a, terms, math.gcd(3, q - G.eps))
    if isinstance(G, E7):
        terms = tuple(("-", q, i) for i in (2, 6, 8, 10, 12, 14, 18))
        return OrderShape(p, 63 * a, terms, math.gcd(2, q - 1))
    if isinstance(G, E8):
        terms = tuple(("-", q, i) for i in (2, 8, 12, 14, 18, 20, 24, 30))
        return OrderShape(p, 120 * a, terms, 1)
    raise NotLieType(f"no order formula for {G!r}")  # pragma: no cover


def _load_sporadic_orders() -> Mapping[str, Factorization]:
    text = resources.files("cdverify").joinpath("data/sporadic_orders.txt").read_text()
    table: Dict[str, Factorization] = {}
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        name, rest = line.split(None, 1)
        exps: Dict[int, int] = {}
        for part in rest.split("*"):
            base, _, e = part.strip().partition("^")
            exps[int(base)] = int(e or 1)
        table[name] = Factorization.from_dict(exps)
    return MappingProxyType(table)


SPORADIC_ORDERS = _load_sporadic_orders()


def order_value(G: GroupId) -> int:
    """|G| as an integer, without factoring anything."""
    if isinstance(G, Sporadic):
        return SPORADIC_ORDERS[G.name].value
    if isinstance(G, Alternating):
        return math.factorial(G.n) // 2
    shape = order_shape(G)
    value = shape.p**shape.k
    for t in shape.terms:
        value *= _term_value(t)
    quotient, rem = divmod(value, shape.divisor)
    assert rem == 0
    return quotient


def _alternating_factorization(n: int) -> Factorization:
    exps = {}
    for p in range(2, n + 1):
        if arith.is_prime(p):
            e, pk = 0, p
            while pk <= n:
                e += n // pk
                pk *= p
            exps[p] = e
    exps[2] -= 1
    return Factorization.from_dict(exps)


def order(G: GroupId, budget: Optional[float] = None) -> Factorization:
    """|G| with its full factorization.

    Lie-type orders are factored one cyclotomic value at a time, which keeps
    every number handed to the factorizer small.
    """
    if isinstance(G, Sporadic):
        return SPORADIC_ORDERS[G.name]
    if isinstance(G, Alternating):
        return _alternating_factorization(G.n)
    shape = order_shape(G)
    exps: Dict[int, int] = {shape.p: shape.k}
    values = []
    for t in shape.terms:
        for d in _term_cyclotomics(t):
            values.append(arith.cyclotomic_value(d, t[1]))
    for p, e in arith.factorize_product(values, budget).entries:
        exps[p] = exps.get(p, 0) + e
    for p, e in arith.factorize(shape.divisor).entries:
        exps[p] -= e
    result = Factorization.from_dict(exps)
    assert result.value == order_value(G)
    return result


def pi(G: GroupId, budget: Optional[float] = None) -> frozenset:
    """Set of primes dividing |G|."""
    return order(G, budget).primes


def characteristic(G: GroupId) -> int:
    return order_shape(G).p


def p_part_order(G: GroupId) -> Tuple[int, int]:
    """(p, k) with p the defining characteristic and |G|_p = p^k."""
    shape = order_shape(G)
    return shape.p, shape.k


# ---------------------------------------------------------------------------
# enumeration


def iter_lie_type(max_q: int = 9, max_rank: int = 8) -> Iterator[GroupId]:
    """Every valid simple group of Lie type with field size <= max_q.

    Classical groups are taken with rank parameter n <= max_rank; twisted
    groups 2B2/2G2/2F4 with Q <= max_q.
    """
    qs = [q for q in range(2, max_q + 1) if arith.prime_power(q) is not None]

    def attempt(ctor, *args):
        try:
            return ctor(*args)
        except (NotSimple, InvalidParameters):
            return None

    for q in qs:
        cands = []
        for n in range(2, max_rank + 1):
            cands.append(attempt(Linear, n, q, 1))
            if n >= 3:
                cands.append(attempt(Linear, n, q, -1))
                cands.append(attempt(OrthOdd, n, q))
            cands.append(attempt(Symplectic, n, q))
            if n >= 4:
                cands.append(attempt(OrthEven, n, q, 1))
                cands.append(attempt(OrthEven, n, q, -1))
        for ctor in (TriD4, G2, F4, E7, E8):
            cands.append(attempt(ctor, q))
        cands.append(attempt(E6, q, 1))
        cands.append(attempt(E6, q, -1))
        yield from (c for c in cands if c is not None)
    for cls in (Suzuki, Ree, TwistedF4):
        m = 1
        while cls.prime ** (2 * m + 1) <= max_q:
            yield cls(m)
            m += 1


def exceptional_groups(max_q: int) -> Iterator[GroupId]:
    return (G for G in iter_lie_type(max_q, 0) if G.is_exceptional)
