"""Exact piecewise-linear Upsilon functions of torus knots (and other L-space knots).

Conventions: ``Upsilon(0) = 0`` and ``Upsilon'(0+) = -tau``, so a positive
torus knot ``T(p, q)`` starts with slope ``-(p-1)(q-1)/2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .poly import IntLaurentPoly, _divmod, _dense, from_dense, symmetric_normalize

__all__ = [
    "PLFunction",
    "Staircase",
    "Semigroup",
    "NotCoprime",
    "NotStaircaseForm",
    "torus_alexander",
    "staircase_from_alexander",
    "upsilon_from_staircase",
    "torus_upsilon",
    "pl_arithmetic",
    "psi",
    "singularities",
    "first_singularity",
]


class NotCoprime(ValueError):
    pass


class NotStaircaseForm(ValueError):
    pass


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class PLFunction:
    """Continuous piecewise-linear function on ``[0, 2]`` with rational breakpoints.

    Collinear interior breakpoints are pruned on construction, so every
    interior breakpoint is a genuine change of slope.
    """

    breakpoints: tuple[Fraction, ...]
    values: tuple[Fraction, ...]

    def __post_init__(self):
        xs = tuple(_frac(x) for x in self.breakpoints)
        ys = tuple(_frac(y) for y in self.values)
        if len(xs) != len(ys) or len(xs) < 2:
            raise ValueError("need matching breakpoints and values, at least two")
        if xs[0] != 0 or xs[-1] != 2:
            raise ValueError("domain must be [0, 2]")
        if any(b <= a for a, b in zip(xs, xs[1:])):
            raise ValueError("breakpoints must increase strictly")
        if ys[0] != 0:
            raise ValueError("value at 0 must be 0")
        keep = [0]
        for i in range(1, len(xs) - 1):
            a = keep[-1]
            s1 = (ys[i] - ys[a]) / (xs[i] - xs[a])
            s2 = (ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i])
            if s1 != s2:
                keep.append(i)
        keep.append(len(xs) - 1)
        object.__setattr__(self, "breakpoints", tuple(xs[i] for i in keep))
        object.__setattr__(self, "values", tuple(ys[i] for i in keep))

    @classmethod
    def zero(cls) -> PLFunction:
        return cls((Fraction(0), Fraction(2)), (Fraction(0), Fraction(0)))

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple]) -> PLFunction:
        pairs = list(pairs)
        return cls(tuple(p[0] for p in pairs), tuple(p[1] for p in pairs))

    def __call__(self, t) -> Fraction:
        t = _frac(t)
        xs, ys = self.breakpoints, self.values
        if not 0 <= t <= 2:
            raise ValueError(f"{t} outside [0, 2]")
        lo, hi = 0, len(xs) - 1
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if xs[mid] <= t:
                lo = mid
            else:
                hi = mid
        x0, x1, y0, y1 = xs[lo], xs[hi], ys[lo], ys[hi]
        return y0 + (y1 - y0) * (t - x0) / (x1 - x0)

    def slopes(self) -> list[Fraction]:
        xs, ys = self.breakpoints, self.values
        return [(ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i]) for i in range(len(xs) - 1)]

    @property
    def initial_slope(self) -> Fraction:
        return self.slopes()[0]

    def over_t(self, t) -> Fraction:
        """``Upsilon(t)/t``; at ``t = 0`` the right-hand limit (the initial slope)."""
        t = _frac(t)
        if t == 0:
            return self.initial_slope
        return self(t) / t

    def pairs(self) -> list[tuple[Fraction, Fraction]]:
        return list(zip(self.breakpoints, self.values))

    def _combine(self, other: PLFunction, op) -> PLFunction:
        xs = sorted(set(self.breakpoints) | set(other.breakpoints))
        return PLFunction(tuple(xs), tuple(op(self(x), other(x)) for x in xs))

    def __add__(self, other: PLFunction) -> PLFunction:
        return self._combine(other, lambda a, b: a + b)

    def __sub__(self, other: PLFunction) -> PLFunction:
        return self._combine(other, lambda a, b: a - b)

    def __neg__(self) -> PLFunction:
        return PLFunction(self.breakpoints, tuple(-y for y in self.values))

    def scale(self, k) -> PLFunction:
        k = _frac(k)
        if k == 0:
            return PLFunction.zero()
        return PLFunction(self.breakpoints, tuple(k * y for y in self.values))

    __mul__ = scale
    __rmul__ = scale

    def to_text(self) -> str:
        """``0:0, 2/3:-4, ...``"""
        return ", ".join(f"{x}:{y}" for x, y in self.pairs())

    @classmethod
    def from_text(cls, text: str) -> PLFunction:
        pairs = []
        for item in text.split(","):
            x, y = item.split(":")
            pairs.append((Fraction(x.strip()), Fraction(y.strip())))
        return cls.from_pairs(pairs)


def pl_arithmetic(f: PLFunction, g: PLFunction | None, op: str, k: int = 1) -> PLFunction:
    if op == "add":
        return f + g
    if op == "neg":
        return -f
    if op == "scale":
        return f.scale(k)
    raise ValueError(f"unknown op {op!r}")


def psi(s, t, f: PLFunction) -> Fraction:
    """``Upsilon(s)/s - Upsilon(t)/t``; ``s = 0`` means the initial slope."""
    s, t = _frac(s), _frac(t)
    if not (0 <= s <= 1 and 0 < t <= 1):
        raise ValueError("need s in [0, 1] and t in (0, 1]")
    return f.over_t(s) - f.over_t(t)


def singularities(f: PLFunction) -> list[Fraction]:
    return list(f.breakpoints[1:-1])


def first_singularity(f: PLFunction) -> Fraction | None:
    s = singularities(f)
    return s[0] if s else None


# ---------------------------------------------------------------------------
# torus knots, semigroups, staircases


@dataclass(frozen=True)
class Semigroup:
    """Numerical semigroup generated by coprime ``p, q >= 2``."""

    p: int
    q: int

    def __post_init__(self):
        if min(self.p, self.q) < 2 or gcd(self.p, self.q) != 1:
            raise NotCoprime(f"({self.p}, {self.q}) does not generate a numerical semigroup")

    @property
    def frobenius(self) -> int:
        return self.p * self.q - self.p - self.q

    def __contains__(self, n: int) -> bool:
        if n < 0:
            return False
        return any((n - k * self.q) % self.p == 0 for k in range(n // self.q + 1))

    def gaps(self) -> list[int]:
        return [n for n in range(self.frobenius + 1) if n not in self]


def torus_alexander(p: int, q: int) -> IntLaurentPoly:
    """``(t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1))``, symmetrically normalized."""
    if not 2 <= p < q:
        raise ValueError(f"need 2 <= p < q, got ({p}, {q})")
    if gcd(p, q) != 1:
        raise NotCoprime(f"gcd({p}, {q}) != 1")
    t = IntLaurentPoly.monomial
    num = (t(p * q) - 1) * (t(1) - 1)
    den = (t(p) - 1) * (t(q) - 1)
    quo, rem = _divmod(_dense(num), _dense(den))
    assert not rem
    return symmetric_normalize(from_dense(quo))


@dataclass(frozen=True)
class Staircase:
    """Generators ``(x_j, y_j)`` of a staircase complex: x increases from 0, y decreases to 0."""

    generators: tuple[tuple[int, int], ...]

    def __post_init__(self):
        gens = tuple((int(x), int(y)) for x, y in self.generators)
        object.__setattr__(self, "generators", gens)
        if not gens:
            raise ValueError("empty staircase")
        if gens[0][0] != 0 or gens[-1][1] != 0:
            raise ValueError("staircase must start at x = 0 and end at y = 0")
        for (x0, y0), (x1, y1) in zip(gens, gens[1:]):
            if not (x1 > x0 and y1 < y0):
                raise ValueError("staircase generators must move right and down")

    @property
    def genus(self) -> int:
        return self.generators[0][1]


def staircase_from_alexander(delta: IntLaurentPoly) -> Staircase:
    """Staircase of an L-space knot from its Alexander polynomial.

    The nonzero coefficients, read from the top exponent down, must be
    ``+1, -1, +1, ..., +1``.  Successive exponent gaps alternate between
    horizontal and vertical steps.
    """
    d = symmetric_normalize(delta)
    exps = sorted((e for e, _ in d.items()), reverse=True)
    for k, e in enumerate(exps):
        if d[e] != (1 if k % 2 == 0 else -1):
            raise NotStaircaseForm(f"{d} is not of the form t^n0 - t^n1 + t^n2 - ...")
    drops = [a - b for a, b in zip(exps, exps[1:])]
    x, y = 0, exps[0]
    gens = [(x, y)]
    for i in range(0, len(drops), 2):
        x += drops[i]
        y -= drops[i + 1]
        gens.append((x, y))
    return Staircase(tuple(gens))


def _line(x: int, y: int) -> tuple[Fraction, Fraction]:
    """``-2((t/2) x + (1 - t/2) y)`` as (slope, intercept)."""
    return Fraction(y - x), Fraction(-2 * y)


def upsilon_from_staircase(S: Staircase) -> PLFunction:
    """Upper envelope over generators of ``t -> -2((t/2) x + (1 - t/2) y)`` on ``[0, 2]``."""
    lines = sorted(set(_line(x, y) for x, y in S.generators))
    cand = {Fraction(0), Fraction(2)}
    for i, (m1, c1) in enumerate(lines):
        for m2, c2 in lines[i + 1:]:
            if m1 != m2:
                t = (c2 - c1) / (m1 - m2)
                if 0 < t < 2:
                    cand.add(t)
    xs = sorted(cand)
    ys = [max(m * t + c for m, c in lines) for t in xs]
    return PLFunction(tuple(xs), tuple(ys))


def torus_upsilon(p: int, q: int) -> PLFunction:
    return upsilon_from_staircase(staircase_from_alexander(torus_alexander(p, q)))


def upsilon_brute(S: Staircase, t) -> Fraction:
    """Pointwise maximum, for cross-checking the envelope."""
    t = _frac(t)
    return max(-2 * (t / 2 * x + (1 - t / 2) * y) for x, y in S.generators)
