"""
Character degree data: lower bounds for the smallest nontrivial degree of
exceptional groups, upper bounds for their largest degree, p-parts of
selected unipotent degrees, explicit witness degrees, and the degree table
of the sporadic groups.
"""
from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from types import MappingProxyType
from typing import Callable, Dict, Mapping, Tuple

from . import arith, groups
from .errors import (
    ExceptionListed,
    InvalidParameters,
    NotExceptional,
    RowMissing,
    UnknownSporadic,
    UnknownWitness,
)
from .groups import (
    E6, E7, E8, F4, G2, GroupId, Linear, OrthEven, OrthOdd, Ree, Suzuki,
    Symplectic, TriD4, TwistedF4,
)

LSZ_EXCEPTIONS = frozenset({"2B2(8)", "G2(3)", "G2(4)", "F4(2)"})


def _require_exceptional(G: GroupId) -> None:
    if not G.is_exceptional:
        raise NotExceptional(f"{G} is not an exceptional group of Lie type")


def lsz_bound(G: GroupId) -> int:
    """Lower bound e(G) for the smallest nontrivial cross-characteristic degree."""
    _require_exceptional(G)
    if G.name in LSZ_EXCEPTIONS:
        raise ExceptionListed(f"{G} is an exception to the bound")
    if isinstance(G, Suzuki):
        # q(q^2-1)/sqrt(2) with q^2 = Q
        return 2**G.m * (G.Q - 1)
    if isinstance(G, Ree):
        return G.Q * (G.Q - 1)
    if isinstance(G, TwistedF4):
        # q^9(q^2-1)/sqrt(2) with q^2 = Q
        return 2 ** (9 * G.m + 4) * (G.Q - 1)
    q = G.q
    if isinstance(G, TriD4):
        return q**3 * (q**2 - 1)
    if isinstance(G, G2):
        return q * (q**2 - 1)
    if isinstance(G, F4):
        if q % 2:
            return q**6 * (q**2 - 1)
        return q**7 * (q**3 - 1) * (q - 1) // 2
    if isinstance(G, E6):
        return q**9 * (q**2 - 1)
    if isinstance(G, E7):
        return q**15 * (q**2 - 1)
    return q**27 * (q**2 - 1)


def seitz_bound(G: GroupId) -> int:
    """Upper bound for the largest character degree b(G)."""
    _require_exceptional(G)
    if isinstance(G, Suzuki):
        return G.Q**3
    if isinstance(G, Ree):
        return G.Q**4
    if isinstance(G, TwistedF4):
        return G.Q**14
    exponent = {TriD4: 17, G2: 8, F4: 28, E6: 42, E7: 70, E8: 128}[type(G)]
    return G.q**exponent


def unipotent_p_part(G: GroupId) -> int:
    """p-part of a designated non-Steinberg unipotent character degree of G."""
    if isinstance(G, TwistedF4):
        return 2 ** (13 * G.m + 6)
    if not G.is_lie_type or isinstance(G, (Suzuki, Ree, G2)):
        raise RowMissing(f"no unipotent row for {G}")
    p, b = arith.prime_power(G.q)
    if isinstance(G, Linear):
        n = G.n
        return p ** (b * (n - 1) * (n - 2) // 2)
    if isinstance(G, Symplectic) and p == 2:
        return 2 ** (b * (G.n - 1) ** 2 - 1)
    if isinstance(G, (Symplectic, OrthOdd)):
        return p ** (b * (G.n - 1) ** 2)
    if isinstance(G, OrthEven):
        n = G.n
        return p ** (b * (n * n - 3 * n + (3 if G.eps == 1 else 2)))
    exponent = {TriD4: 7, F4: 10, E6: 25, E7: 46, E8: 91}[type(G)]
    return p ** (exponent * b)


# ---------------------------------------------------------------------------
# witness degrees


def _phi(r: int, *indices: int) -> int:
    value = 1
    for k in indices:
        value *= arith.cyclotomic_value(k, r)
    return value


def _exact(num: int, den: int) -> int:
    q, rem = divmod(num, den)
    if rem:
        raise InvalidParameters(f"{num} is not divisible by {den}")
    return q


def _eps(eps: int) -> int:
    if eps not in (1, -1):
        raise InvalidParameters(f"epsilon must be +1 or -1, got {eps}")
    return eps


def _unip_A_1n1(r, n, eps):
    eps = _eps(eps)
    if n < 2:
        raise InvalidParameters("needs n >= 2")
    return _exact(r**n - eps ** (n - 1) * r, r - eps)


def _unip_A_2n2(r, n, eps):
    eps = _eps(eps)
    if n < 4:
        raise InvalidParameters("needs n >= 4")
    num = r**2 * (r**n - eps**n) * (r ** (n - 3) - eps ** (n - 3))
    return _exact(num, (r - eps) * (r**2 - 1))


def _unip_B_01n(r, n):
    if n < 2:
        raise InvalidParameters("needs n >= 2")
    return _exact(r * (r**n - 1) * (r ** (n - 1) - 1), 2 * (r + 1))


def _unip_D(r, n, eps):
    eps = _eps(eps)
    if n < 4:
        raise InvalidParameters("needs n >= 4")
    return _exact(r * (r**n - eps) * (r ** (n - 2) + eps), r**2 - 1)


def _sz_deg(Q):
    return Q**2 + 1


def _l3_deg(r, eps):
    return r**3 - _eps(eps)


def _u3_deg(r):
    return r * (r - 1)


def _l3q2_deg(q, eps):
    return q**2 * (q**2 + _eps(eps))


def _s4_eno(r):
    return (r - 1) * (r**2 + 1)


def _s4_sym12(r):
    return _exact(r * (r**2 + 1), 2)


def _b2a_2part(n):
    if n < 0:
        raise InvalidParameters("needs n >= 0")
    return 2**n


_WITNESSES: Dict[str, Tuple[Callable[..., int], int]] = {
    "unip_A_1n1": (_unip_A_1n1, 3),
    "unip_A_2n2": (_unip_A_2n2, 3),
    "unip_B_01n": (_unip_B_01n, 2),
    "unip_D": (_unip_D, 3),
    "sz_deg": (_sz_deg, 1),
    "l3_deg": (_l3_deg, 2),
    "u3_deg": (_u3_deg, 1),
    "l3q2_deg": (_l3q2_deg, 2),
    "s4_eno": (_s4_eno, 1),
    "s4_sym12": (_s4_sym12, 1),
    "phi_7_1": (lambda r: r * _phi(r, 7, 12, 14), 1),
    "phi_27_2": (lambda r: r**2 * _phi(r, 3, 3, 6, 6, 9, 12, 18), 1),
    "phi_9_10": (lambda r: r**10 * _phi(r, 3, 3, 6, 6, 12), 1),
    "phi_9_2": (lambda r: r**2 * _phi(r, 3, 3, 6, 6, 12), 1),
    "phi_1_3p": (lambda r: r * _phi(r, 12), 1),
    "phi_2_4p": (lambda r: r * _phi(r, 8, 12), 1),
    "phi_6_1": (lambda r: r * _phi(r, 8, 9), 1),
    "phi_8_1": (lambda r: r * _phi(r, 4, 4, 8, 12, 20, 24), 1),
    "b2a_2part": (_b2a_2part, 1),
}

WITNESS_NAMES = tuple(sorted(_WITNESSES))


def witness_degree(name: str, *params: int) -> int:
    """Evaluate a named character degree formula.

    The first parameter is the field size r (or Q for ``sz_deg``, n for
    ``b2a_2part``); rank and epsilon follow where the formula needs them.
    """
    try:
        fn, arity = _WITNESSES[name]
    except KeyError:
        raise UnknownWitness(f"unknown witness {name!r}") from None
    if len(params) != arity:
        raise InvalidParameters(f"{name} takes {arity} parameter(s), got {len(params)}")
    if name != "b2a_2part" and params[0] < 2:
        raise InvalidParameters(f"{name}: field size must be at least 2")
    return fn(*params)


# ---------------------------------------------------------------------------
# bundled tables


@dataclass(frozen=True)
class SporadicRecord:
    name: str
    t: int
    d1: int
    d2: int
    d3: int
    b: int

    def __post_init__(self):
        if not (1 < self.d1 < self.d2 < self.d3 <= self.b) or self.t < 4:
            raise ValueError(f"inconsistent degree data for {self.name}")


def _data_lines(filename: str):
    text = resources.files("cdverify").joinpath(f"data/{filename}").read_text()
    for line in text.splitlines():
        if line.strip() and not line.lstrip().startswith("#"):
            yield line


def _load_sporadic_degrees() -> Mapping[str, SporadicRecord]:
    table = {}
    for line in _data_lines("sporadic_degrees.txt"):
        name, *nums = line.split()
        table[name] = SporadicRecord(name, *map(int, nums))
    return MappingProxyType(table)


SPORADIC_DEGREES = _load_sporadic_degrees()


def sporadic_record(name: str) -> SporadicRecord:
    try:
        return SPORADIC_DEGREES[groups.sporadic(name).name]
    except (InvalidParameters, KeyError):
        raise UnknownSporadic(f"unknown sporadic group {name!r}") from None


@dataclass(frozen=True)
class Constant:
    key: str
    value: int
    anchor: str


class BoundConstants(Mapping[str, Constant]):
    """Numeric constants taken as given, each with a short provenance note."""

    def __init__(self, entries):
        self._entries = {c.key: c for c in entries}
        for c in self._entries.values():
            if c.value <= 0 or not c.anchor:
                raise ValueError(f"bad constant {c.key}")

    @classmethod
    def load(cls) -> "BoundConstants":
        entries = []
        for line in _data_lines("bound_constants.txt"):
            key, value, anchor = line.split("\t")
            entries.append(Constant(key, int(value), anchor.strip()))
        return cls(entries)

    def __getitem__(self, key):
        return self._entries[key]

    def __iter__(self):
        return iter(self._entries)

    def __len__(self):
        return len(self._entries)

    def value(self, key: str) -> int:
        return self._entries[key].value


CONSTANTS = BoundConstants.load()


# ---------------------------------------------------------------------------
# plain-text renderings for `cdverify tables dump`

_TABLE1 = """\
S                 d         |S|
2B2(q^2)          1         q^4 (q^4+1)(q^2-1),  q^2 = 2^(2m+1)
2G2(q^2)          1         q^6 (q^6+1)(q^2-1),  q^2 = 3^(2m+1)
2F4(q^2)          1         q^24 (q^12+1)(q^8-1)(q^6+1)(q^2-1),  q^2 = 2^(2m+1)
3D4(q)            1         q^12 (q^8+q^4+1)(q^6-1)(q^2-1)
2E6(q)            (3,q+1)   q^36 prod_{i in 2,5,6,8,9,12} (q^i-(-1)^i) / d
G2(q)             1         q^6 (q^6-1)(q^2-1)
F4(q)             1         q^24 prod_{i in 2,6,8,12} (q^i-1)
E6(q)             (3,q-1)   q^36 prod_{i in 2,5,6,8,9,12} (q^i-1) / d
E7(q)             (2,q-1)   q^63 prod_{i in 2,6,8,10,12,14,18} (q^i-1) / d
E8(q)             1         q^120 prod_{i in 2,8,12,14,18,20,24,30} (q^i-1)
"""

_TABLE2 = """\
S                 e(S)                              exceptions
2B2(q^2)          q(q^2-1)/sqrt(2) = 2^m (Q-1)      2B2(8)
2G2(q^2)          q^2(q^2-1) = Q (Q-1)
2F4(q^2)          q^9(q^2-1)/sqrt(2) = 2^(9m+4) (Q-1)
3D4(q)            q^3(q^2-1)
2E6(q)            q^9(q^2-1)
G2(q)             q(q^2-1)                          G2(3), G2(4)
F4(q), q odd      q^6(q^2-1)
F4(q), q even     q^7(q^3-1)(q-1)/2                 F4(2)
E6(q)             q^9(q^2-1)
E7(q)             q^15(q^2-1)
E8(q)             q^27(q^2-1)
"""

_TABLE3 = """\
S = S(p^b)              p-part of the unipotent degree
L_n^eps(p^b)            p^(b(n-1)(n-2)/2)
S_2n(2^b)               2^(b(n-1)^2-1)
S_2n(p^b), p odd        p^(b(n-1)^2)
O_2n+1(p^b), p odd      p^(b(n-1)^2)
O+_2n(p^b)              p^(b(n^2-3n+3))
O-_2n(p^b)              p^(b(n^2-3n+2))
3D4(p^b)                p^(7b)
F4(p^b)                 p^(10b)
2F4(q^2)                2^(13m+6),  q^2 = 2^(2m+1)
E6(p^b), 2E6(p^b)       p^(25b)
E7(p^b)                 p^(46b)
E8(p^b)                 p^(91b)
"""

_TABLE5 = """\
S         F4(q)   G2(q)   2B2(q^2)   2F4(q^2)   2G2(q^2)
b~(S)     q^28    q^8     q^6        q^28       q^8
S         E6(q)   E7(q)   E8(q)      2E6(q)     3D4(q)
b~(S)     q^42    q^70    q^128      q^42       q^17
"""


def _table4() -> str:
    rows = [f"{'S':<9}{'t':>5}{'d1':>10}{'d2':>11}{'d3':>12}  b"]
    for r in SPORADIC_DEGREES.values():
        rows.append(f"{r.name:<9}{r.t:>5}{r.d1:>10}{r.d2:>11}{r.d3:>12}  {r.b}")
    return "\n".join(rows) + "\n"


def table_text(k: int) -> str:
    """Plain-text rendering of bundled table k (1 to 5)."""
    if k == 4:
        return _table4()
    try:
        return {1: _TABLE1, 2: _TABLE2, 3: _TABLE3, 5: _TABLE5}[k]
    except KeyError:
        raise InvalidParameters(f"no table {k}; choose 1 to 5") from None
