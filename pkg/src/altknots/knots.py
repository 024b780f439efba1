"""Knot atoms, formal sums in the concordance group, and declared knot data."""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Mapping, Union

from .poly import delta_n
from .seifert import SeifertMatrix, realize_polynomial
from .upsilon import NotCoprime, PLFunction

__all__ = [
    "Torus",
    "MatrixKnot",
    "DeltaKnot",
    "Declared",
    "KnotAtom",
    "KnotExpr",
    "Sign",
    "DeclaredKnot",
    "declared",
    "register_declared",
    "UnknownDeclared",
    "delta_matrix",
    "ts_functional_id",
]


@dataclass(frozen=True, order=True)
class Torus:
    p: int
    q: int

    def __post_init__(self):
        if not 2 <= self.p < self.q:
            raise ValueError(f"torus knot needs 2 <= p < q, got T({self.p},{self.q})")
        if gcd(self.p, self.q) != 1:
            raise NotCoprime(f"T({self.p},{self.q}): p and q are not coprime")

    @property
    def genus(self) -> int:
        return (self.p - 1) * (self.q - 1) // 2

    def __str__(self):
        return f"T({self.p},{self.q})"


@dataclass(frozen=True)
class MatrixKnot:
    matrix: SeifertMatrix
    name: str

    def __str__(self):
        return f"M({self.name})"


@dataclass(frozen=True, order=True)
class DeltaKnot:
    """A fixed knot with Alexander polynomial ``delta_n``, realized algebraically."""

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("DeltaKnot index must be >= 1")

    @property
    def matrix(self) -> SeifertMatrix:
        return delta_matrix(self.n)

    def __str__(self):
        return f"K[{self.n}]"


@dataclass(frozen=True, order=True)
class Declared:
    name: str

    @property
    def data(self) -> DeclaredKnot:
        return declared(self.name)

    def __str__(self):
        return f"D({self.name})"


KnotAtom = Union[Torus, MatrixKnot, DeltaKnot, Declared]


def _atom_key(a: KnotAtom):
    if isinstance(a, Torus):
        return (0, a.p, a.q, "")
    if isinstance(a, DeltaKnot):
        return (1, a.n, 0, "")
    if isinstance(a, MatrixKnot):
        return (2, 0, 0, a.name)
    return (3, 0, 0, a.name)


@lru_cache(maxsize=None)
def delta_matrix(n: int) -> SeifertMatrix:
    return realize_polynomial(delta_n(n), name=f"K[{n}]")


class KnotExpr:
    """Formal integer combination ``sum a_i K_i``; a negative coefficient is a mirror."""

    __slots__ = ("terms",)

    def __init__(self, terms: Iterable[tuple[int, KnotAtom]] = ()):
        acc: dict = {}
        for c, a in terms:
            acc[a] = acc.get(a, 0) + int(c)
        self.terms: tuple[tuple[int, KnotAtom], ...] = tuple(
            (c, a) for a, c in sorted(acc.items(), key=lambda kv: _atom_key(kv[0])) if c
        )

    @classmethod
    def of(cls, atom: KnotAtom, coeff: int = 1) -> KnotExpr:
        return cls([(coeff, atom)])

    @property
    def atoms(self) -> list[KnotAtom]:
        return [a for _, a in self.terms]

    def coefficient(self, atom: KnotAtom) -> int:
        return dict((a, c) for c, a in self.terms).get(atom, 0)

    def is_unknot(self) -> bool:
        return not self.terms

    def __add__(self, other: KnotExpr) -> KnotExpr:
        return KnotExpr(self.terms + other.terms)

    def __neg__(self) -> KnotExpr:
        return KnotExpr((-c, a) for c, a in self.terms)

    def __sub__(self, other: KnotExpr) -> KnotExpr:
        return self + (-other)

    def __mul__(self, k: int) -> KnotExpr:
        return KnotExpr((k * c, a) for c, a in self.terms)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, KnotExpr) and self.terms == other.terms

    def __hash__(self):
        return hash(self.terms)

    def uses_declared(self) -> bool:
        return any(isinstance(a, Declared) for a in self.atoms)

    def render(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for i, (c, a) in enumerate(self.terms):
            mag = abs(c)
            body = str(a) if mag == 1 else f"{mag}*{a}"
            if i == 0:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append(f" {'-' if c < 0 else '+'} {body}")
        return "".join(out)

    __str__ = render

    def __repr__(self):
        return f"KnotExpr({self.render()!r})"


# ---------------------------------------------------------------------------
# declared data


class Sign(enum.IntEnum):
    NEGATIVE = -1
    ZERO = 0
    POSITIVE = 1

    def __mul__(self, k):
        v = int(self) * (1 if k > 0 else -1 if k < 0 else 0)
        return Sign(v)

    __rmul__ = __mul__

    def __str__(self):
        return {-1: "negative", 0: "zero", 1: "positive"}[int(self)]


class UnknownDeclared(KeyError):
    pass


@dataclass(frozen=True)
class DeclaredKnot:
    """Invariant values taken from the literature rather than computed.

    ``upsilon_zero_until`` records partial Upsilon data: the function
    vanishes identically on ``[0, upsilon_zero_until]``.  ``facts`` maps a
    functional id to the sign of that functional on this knot.  The
    genus-style constants are in the same sign convention as the computed
    registry (``s/2`` agrees with ``sigma/2`` on alternating knots).
    """

    name: str
    provenance: str
    tau: Fraction | None = None
    sigma: int | None = None
    s: int | None = None
    upsilon: PLFunction | None = None
    upsilon_zero_until: Fraction | None = None
    facts: Mapping[str, Sign] = field(default_factory=dict)

    def __post_init__(self):
        if self.upsilon is not None and self.tau is not None:
            if -self.upsilon.initial_slope != self.tau:
                raise ValueError(f"{self.name}: tau conflicts with the Upsilon slope")
        if self.upsilon_zero_until is not None and self.tau not in (None, 0):
            raise ValueError(f"{self.name}: Upsilon vanishing near 0 forces tau = 0")


def ts_functional_id(n: int) -> str:
    """Id of the functional ``psi_{a_n, b_n}``, ``a_n = 2/(2n-1)``, for the slice family."""
    return f"psi_ts[{n}]"


_TS_RE = re.compile(r"^TS\[(\d+)\]$")
_CATALOG: dict[str, DeclaredKnot] = {}


def register_declared(k: DeclaredKnot) -> DeclaredKnot:
    _CATALOG[k.name] = k
    return k


def _ts_knot(n: int) -> DeclaredKnot:
    # Upsilon vanishes on [0, a_n] and is positive just after a_n, with
    # b_n < a_{n-1}.  With psi_{a,b} = U(a)/a - U(b)/b this gives
    # psi_n(K_n) < 0 and psi_m(K_n) = 0 for every m > n.
    a_n = Fraction(2, 2 * n - 1)
    facts = {ts_functional_id(n): Sign.NEGATIVE}
    return DeclaredKnot(
        name=f"TS[{n}]",
        provenance=(
            f"C_{{{n},{2 * n - 1}}}(Wh+(T(2,3),0)) # -T({n},{2 * n - 1}); "
            f"Upsilon vanishing pattern from Ozsvath-Stipsicz-Szabo's Upsilon construction: "
            f"Upsilon = 0 on [0, {a_n}], Upsilon > 0 just beyond; topologically slice, so sigma = 0"
        ),
        sigma=0,
        upsilon_zero_until=a_n,
        facts=facts,
    )


def declared(name: str) -> DeclaredKnot:
    if name in _CATALOG:
        return _CATALOG[name]
    m = _TS_RE.match(name)
    if m and int(m.group(1)) >= 2:
        return register_declared(_ts_knot(int(m.group(1))))
    raise UnknownDeclared(f"no declared knot named {name!r}")


def declared_names() -> list[str]:
    return sorted(_CATALOG) + ["TS[n] (n >= 2)"]


register_declared(
    DeclaredKnot(
        name="Wh+(T(2,3),0)",
        provenance=(
            "untwisted positive Whitehead double of the trefoil; tau = 1 (Hedden), "
            "sigma = 0 since the Alexander polynomial is 1"
        ),
        tau=Fraction(1),
        sigma=0,
    )
)
register_declared(
    DeclaredKnot(
        name="Wh+(T(2,3),2)",
        provenance=(
            "twice-twisted positive Whitehead double of the trefoil; Hedden-Ording: tau = 0, "
            "s = 2 in the usual sign (stored as s = -2 here), so -tau and s/2 differ by one"
        ),
        tau=Fraction(0),
        s=-2,
    )
)
