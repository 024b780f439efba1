"""Exact integer Laurent polynomials and real-root machinery over Q.

Everything here works with Python integers and ``fractions.Fraction``;
no floating point value is ever produced.  Dense helper routines operate
on ascending coefficient lists (``[a0, a1, ...]``) of Fractions.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

__all__ = [
    "IntLaurentPoly",
    "IsolatingInterval",
    "PolyError",
    "NotSymmetric",
    "ZeroDenominator",
    "ZeroPolynomial",
    "UnsupportedDegree",
    "RootAtPlusMinusOne",
    "laurent_arithmetic",
    "symmetric_normalize",
    "eval_rational",
    "sturm_isolate_real_roots",
    "count_real_roots",
    "refine_interval",
    "irreducible_over_q",
    "chebyshev_reduce",
    "chebyshev_expand",
    "count_unit_circle_root_pairs",
    "delta_n",
]


class PolyError(ValueError):
    pass


class NotSymmetric(PolyError):
    pass


class ZeroDenominator(PolyError, ZeroDivisionError):
    pass


class ZeroPolynomial(PolyError):
    pass


class UnsupportedDegree(PolyError):
    pass


class RootAtPlusMinusOne(PolyError):
    pass


# ---------------------------------------------------------------------------
# Laurent polynomials


class IntLaurentPoly:
    """Integer Laurent polynomial in one variable ``t``.

    Immutable; stored as a mapping exponent -> nonzero coefficient.
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        c = {}
        for e, a in (coeffs or {}).items():
            if a != int(a):
                raise TypeError(f"non-integer coefficient {a!r}")
            a = int(a)
            if a:
                c[int(e)] = a
        self._c = dict(sorted(c.items()))
        self._hash = None

    # construction helpers
    @classmethod
    def from_list(cls, coeffs: Sequence[int], low: int = 0) -> IntLaurentPoly:
        """Coefficients in ascending order starting at exponent ``low``."""
        return cls({low + i: a for i, a in enumerate(coeffs)})

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> IntLaurentPoly:
        return cls({exponent: coeff})

    @classmethod
    def const(cls, a: int) -> IntLaurentPoly:
        return cls({0: a})

    @classmethod
    def parse(cls, text: str) -> IntLaurentPoly:
        return parse_poly(text)

    # basic accessors
    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def items(self):
        return self._c.items()

    def __getitem__(self, e: int) -> int:
        return self._c.get(e, 0)

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    @property
    def high(self) -> int:
        if not self._c:
            raise ZeroPolynomial("zero polynomial has no degree")
        return max(self._c)

    @property
    def low(self) -> int:
        if not self._c:
            raise ZeroPolynomial("zero polynomial has no degree")
        return min(self._c)

    @property
    def breadth(self) -> int:
        return self.high - self.low

    @property
    def leading(self) -> int:
        return self._c[self.high]

    def ascending(self) -> list[int]:
        """Dense coefficient list from ``low`` to ``high``."""
        if not self._c:
            return []
        return [self._c.get(e, 0) for e in range(self.low, self.high + 1)]

    # arithmetic
    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        c = dict(self._c)
        for e, a in other._c.items():
            c[e] = c.get(e, 0) + a
        return IntLaurentPoly(c)

    __radd__ = __add__

    def __neg__(self):
        return IntLaurentPoly({e: -a for e, a in self._c.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        c: dict[int, int] = {}
        for e1, a1 in self._c.items():
            for e2, a2 in other._c.items():
                c[e1 + e2] = c.get(e1 + e2, 0) + a1 * a2
        return IntLaurentPoly(c)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = IntLaurentPoly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def mirror(self) -> IntLaurentPoly:
        """``p(1/t)``."""
        return IntLaurentPoly({-e: a for e, a in self._c.items()})

    def shift(self, k: int) -> IntLaurentPoly:
        """Multiply by ``t**k``."""
        return IntLaurentPoly({e + k: a for e, a in self._c.items()})

    def __call__(self, x):
        return eval_rational(self, x)

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return False
        return self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._c.items()))
        return self._hash

    def __repr__(self):
        return f"IntLaurentPoly({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)


def _coerce(x):
    if isinstance(x, IntLaurentPoly):
        return x
    if isinstance(x, int):
        return IntLaurentPoly.const(x)
    return NotImplemented


def laurent_arithmetic(a: IntLaurentPoly, b: IntLaurentPoly | None, op: str) -> IntLaurentPoly:
    """Dispatch ``add``, ``mul``, ``neg`` or ``mirror``; ``b`` is ignored for unary ops."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "neg":
        return -a
    if op == "mirror":
        return a.mirror()
    raise ValueError(f"unknown op {op!r}")


# ---------------------------------------------------------------------------
# text format

_TERM_RE = re.compile(
    r"\s*([+-])?\s*(?:(\d+)\s*(?:\*\s*)?)?(t(?:\s*\^\s*(-?\d+))?)?\s*"
)


def parse_poly(text: str, var: str = "t") -> IntLaurentPoly:
    """Parse ``c*t^e`` terms joined by ``+``/``-``, e.g. ``t^4 - 3*t^2 + t^-1``."""
    s = text.replace(var, "t").strip()
    if not s:
        raise ValueError("empty polynomial")
    pos = 0
    coeffs: dict[int, int] = {}
    first = True
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        sign, num, tpart, exp = m.groups()
        if m.end() == pos or (num is None and tpart is None):
            raise ValueError(f"cannot parse polynomial at column {pos + 1}: {text!r}")
        if sign is None and not first:
            raise ValueError(f"missing operator at column {pos + 1}: {text!r}")
        c = int(num) if num is not None else 1
        if sign == "-":
            c = -c
        e = 0
        if tpart is not None:
            e = int(exp) if exp is not None else 1
        coeffs[e] = coeffs.get(e, 0) + c
        pos = m.end()
        first = False
    return IntLaurentPoly(coeffs)


def format_poly(p: IntLaurentPoly, var: str = "t") -> str:
    """Inverse of :func:`parse_poly`, highest exponent first."""
    if p.is_zero():
        return "0"
    parts = []
    for e, a in sorted(p.items(), reverse=True):
        sign = "-" if a < 0 else "+"
        mag = abs(a)
        if e == 0:
            body = str(mag)
        else:
            mono = var if e == 1 else f"{var}^{e}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


# ---------------------------------------------------------------------------
# normalization and evaluation


def symmetric_normalize(p: IntLaurentPoly) -> IntLaurentPoly:
    """The representative of ``p`` up to ``±t^k`` with ``q(t) = q(1/t)`` and positive top coefficient."""
    if p.is_zero():
        return p
    total = p.low + p.high
    if total % 2:
        raise NotSymmetric(f"{p} has odd breadth")
    q = p.shift(-total // 2)
    if q != q.mirror():
        raise NotSymmetric(f"{p} is not symmetric up to a unit")
    if q.leading < 0:
        q = -q
    return q


def is_symmetric(p: IntLaurentPoly) -> bool:
    try:
        symmetric_normalize(p)
    except NotSymmetric:
        return False
    return True


def eval_rational(p: IntLaurentPoly, x) -> Fraction:
    x = Fraction(x)
    if p.is_zero():
        return Fraction(0)
    if x == 0:
        if p.low < 0:
            raise ZeroDenominator("evaluating negative powers at 0")
        return Fraction(p[0])
    # Horner over the dense range, then scale by x**low
    acc = Fraction(0)
    for a in reversed(p.ascending()):
        acc = acc * x + a
    return acc * x ** p.low


# ---------------------------------------------------------------------------
# dense polynomials over Q (ascending Fraction lists, no trailing zeros)


def _trim(a: list) -> list:
    while a and a[-1] == 0:
        a.pop()
    return a


def _dense(p: IntLaurentPoly) -> list[Fraction]:
    """Ordinary polynomial: negative exponents cleared by ``t**k``, nonnegative ones kept."""
    if p.is_zero():
        return []
    k = min(p.low, 0)
    return [Fraction(p[e]) for e in range(k, p.high + 1)]


def _to_laurent(a: Sequence[Fraction]) -> IntLaurentPoly:
    den = 1
    for c in a:
        den = den * Fraction(c).denominator // _gcd(den, Fraction(c).denominator)
    return IntLaurentPoly({i: int(c * den) for i, c in enumerate(a)})


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def _deg(a: Sequence) -> int:
    return len(a) - 1


def _eval(a: Sequence[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


def _sub(a, b):
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


def _mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _divmod(a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = [Fraction(c) for c in a]
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lb = b[-1]
    while len(r) >= len(b) and r:
        k = len(r) - len(b)
        c = r[-1] / lb
        q[k] = c
        for i, y in enumerate(b):
            r[i + k] -= c * y
        r.pop()
        _trim(r)
    return _trim(q), r


def _monic(a):
    return [c / a[-1] for c in a] if a else []


def _pgcd(a, b):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _divmod(a, b)[1]
    return _monic(a)


def _deriv(a):
    return _trim([i * a[i] for i in range(1, len(a))])


def _yun(a) -> list[tuple[list[Fraction], int]]:
    """Square-free factorization: pairs (factor, multiplicity), factors monic and coprime."""
    a = _monic(_trim(list(a)))
    if _deg(a) < 1:
        return []
    out = []
    d = _deriv(a)
    g = _pgcd(a, d)
    b = _divmod(a, g)[0]
    c = _divmod(d, g)[0]
    dd = _sub(c, _deriv(b))
    i = 1
    while _deg(b) > 0:
        g = _pgcd(b, dd)
        b = _divmod(b, g)[0]
        c = _divmod(dd, g)[0]
        if _deg(g) > 0:
            out.append((g, i))
        dd = _sub(c, _deriv(b))
        i += 1
    return out


def _squarefree(a):
    a = _trim(list(a))
    return _monic(_divmod(a, _pgcd(a, _deriv(a)))[0])


def _sturm_chain(a) -> list[list[Fraction]]:
    chain = [a, _deriv(a)]
    while chain[-1]:
        r = _divmod(chain[-2], chain[-1])[1]
        if not r:
            break
        chain.append([-c for c in r])
    return [c for c in chain if c]


def _variations(chain, x: Fraction) -> int:
    signs = []
    for f in chain:
        v = _eval(f, x)
        if v:
            signs.append(v > 0)
    return sum(1 for u, v in zip(signs, signs[1:]) if u != v)


def _cauchy_bound(a) -> Fraction:
    lead = abs(a[-1])
    return 1 + max((abs(c) / lead for c in a[:-1]), default=Fraction(0))


# ---------------------------------------------------------------------------
# real roots


@dataclass(frozen=True)
class IsolatingInterval:
    """Open interval ``(lo, hi)`` containing exactly one distinct real root."""

    lo: Fraction
    hi: Fraction
    multiplicity: int = 1

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError("empty isolating interval")
        if self.multiplicity < 1:
            raise ValueError("multiplicity must be positive")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo


class _Sturm:
    """Sturm chain for the square-free part of a dense polynomial."""

    def __init__(self, dense):
        self.sqf = _squarefree(dense)
        self.chain = _sturm_chain(self.sqf)

    def is_root(self, x) -> bool:
        return _eval(self.sqf, Fraction(x)) == 0

    def sign(self, x) -> int:
        v = _eval(self.sqf, Fraction(x))
        return (v > 0) - (v < 0)

    def count_half_open(self, a, b) -> int:
        """Distinct roots in ``(a, b]``."""
        return _variations(self.chain, Fraction(a)) - _variations(self.chain, Fraction(b))

    def count_open(self, a, b) -> int:
        a, b = Fraction(a), Fraction(b)
        if a >= b:
            return 0
        return self.count_half_open(a, b) - (1 if self.is_root(b) else 0)


def _split_point(st: _Sturm, a: Fraction, b: Fraction) -> Fraction:
    m = (a + b) / 2
    k = 3
    while st.is_root(m):
        # finitely many roots, so some nearby dyadic point is not one
        m = a + (b - a) * Fraction(k // 2, k)
        k += 2
    return m


def _isolate(st: _Sturm, a: Fraction, b: Fraction) -> list[tuple[Fraction, Fraction]]:
    """Isolating open intervals for the roots in ``(a, b)``; endpoints must not be roots."""
    out = []
    stack = [(a, b)]
    while stack:
        lo, hi = stack.pop()
        n = st.count_open(lo, hi)
        if n == 0:
            continue
        if n == 1:
            out.append((lo, hi))
            continue
        m = _split_point(st, lo, hi)
        stack.append((m, hi))
        stack.append((lo, m))
    out.sort()
    return out


def _as_dense(p) -> list[Fraction]:
    if isinstance(p, IntLaurentPoly):
        return _dense(p)
    return _trim([Fraction(c) for c in p])


def sturm_isolate_real_roots(p: IntLaurentPoly, lo=None, hi=None) -> list[IsolatingInterval]:
    """All distinct real roots of ``p`` (or those inside ``(lo, hi)``), with multiplicities.

    Laurent input is first multiplied by ``t**k`` to clear negative exponents,
    so ``t = 0`` is reported only for ordinary polynomials vanishing there.
    Given bounds must not themselves be roots.
    """
    a = _as_dense(p)
    if not a:
        raise ZeroPolynomial("zero polynomial has no isolated roots")
    if _deg(a) < 1:
        return []
    st = _Sturm(a)
    bound = _cauchy_bound(st.sqf)
    a_lo = Fraction(lo) if lo is not None else -bound
    a_hi = Fraction(hi) if hi is not None else bound
    for x in (a_lo, a_hi):
        if st.is_root(x):
            raise ValueError(f"interval endpoint {x} is a root")
    intervals = _isolate(st, a_lo, a_hi)
    factors = [(_Sturm(f), m) for f, m in _yun(a)]
    out = []
    for l, h in intervals:
        mult = next(m for fs, m in factors if fs.count_open(l, h) == 1)
        out.append(IsolatingInterval(l, h, mult))
    return out


def count_real_roots(p, a, b) -> int:
    """Number of distinct real roots in the open interval ``(a, b)``."""
    d = _as_dense(p)
    if not d:
        raise ZeroPolynomial("zero polynomial")
    if _deg(d) < 1:
        return 0
    return _Sturm(d).count_open(a, b)


def refine_interval(p, iv: IsolatingInterval, width=None) -> IsolatingInterval:
    """Bisect ``iv`` until narrower than ``width`` (default: 2**-16 of its width)."""
    st = _Sturm(_as_dense(p))
    if width is None:
        width = iv.width / 2**16
    width = Fraction(width)
    lo, hi = iv.lo, iv.hi
    while hi - lo >= width:
        m = (lo + hi) / 2
        if st.is_root(m):
            # exact rational root; any symmetric window inside (lo, hi) isolates it
            r = min(width / 4, (hi - lo) / 4)
            return IsolatingInterval(m - r, m + r, iv.multiplicity)
        if st.count_open(lo, m) == 1:
            hi = m
        else:
            lo = m
    return IsolatingInterval(lo, hi, iv.multiplicity)


# ---------------------------------------------------------------------------
# irreducibility (degree <= 4)


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small = [d for d in range(1, int(n ** 0.5) + 2) if d * d <= n and n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def _int_primitive(p: IntLaurentPoly) -> list[int]:
    c = p.shift(-p.low).ascending()
    g = 0
    for a in c:
        g = _gcd(g, a)
    c = [a // g for a in c]
    if c[-1] < 0:
        c = [-a for a in c]
    return c


def _has_rational_root(c: list[int]) -> bool:
    for num in _divisors(c[0]):
        for den in _divisors(c[-1]):
            for x in (Fraction(num, den), Fraction(-num, den)):
                if _eval(c, x) == 0:
                    return True
    return False


def _divides_int(c: list[int], q: list[int]) -> bool:
    quo, rem = _divmod([Fraction(a) for a in c], [Fraction(a) for a in q])
    return not rem and all(x.denominator == 1 for x in quo)


def irreducible_over_q(p: IntLaurentPoly) -> bool:
    """Irreducibility over Q after discarding unit factors ``±t^k``; degree at most 4.

    Linear factors are ruled out by the rational root test.  A quadratic
    factor ``u t^2 + b t + c`` of a primitive quartic must have ``u | a4``,
    ``c | a0`` and ``u + b + c | p(1)``, which leaves finitely many ``b``.
    """
    if p.is_zero():
        raise ZeroPolynomial("zero polynomial")
    c = _int_primitive(p)
    deg = len(c) - 1
    if deg > 4:
        raise UnsupportedDegree(f"degree {deg} > 4")
    if deg == 0:
        return False
    if deg == 1:
        return True
    if _has_rational_root(c):
        return False
    if deg <= 3:
        return True
    p1 = _eval(c, Fraction(1))
    for u in _divisors(c[-1]):
        for c0 in _divisors(c[0]):
            for cc in (c0, -c0):
                for d1 in _divisors(int(p1)):
                    for v in (d1, -d1):
                        b = v - u - cc
                        if _divides_int(c, [cc, b, u]):
                            return False
    return True


# ---------------------------------------------------------------------------
# t + 1/t reduction and unit circle roots


def chebyshev_reduce(p: IntLaurentPoly) -> IntLaurentPoly:
    """``q`` with ``normalize(p)(t) = q(t + 1/t)``; equivalently ``p = t^g q(t + 1/t)`` in ordinary form."""
    f = symmetric_normalize(p)
    q: dict[int, int] = {}
    x = IntLaurentPoly({1: 1, -1: 1})
    while not f.is_zero():
        d = f.high
        c = f.leading
        q[d] = c
        f = f - c * x ** d
    return IntLaurentPoly(q)


def chebyshev_expand(q: IntLaurentPoly) -> IntLaurentPoly:
    """Substitute ``x = t + 1/t``."""
    x = IntLaurentPoly({1: 1, -1: 1})
    out = IntLaurentPoly()
    for d, c in q.items():
        out = out + c * x ** d
    return out


def count_unit_circle_root_pairs(p: IntLaurentPoly) -> int:
    """Distinct conjugate root pairs on the unit circle (away from ``±1``)."""
    if eval_rational(p, 1) == 0 or eval_rational(p, -1) == 0:
        raise RootAtPlusMinusOne(f"{p} vanishes at +1 or -1")
    q = chebyshev_reduce(p)
    return count_real_roots(q, -2, 2)


def delta_n(n: int) -> IntLaurentPoly:
    """``t^4 + n t^3 - (2n+1) t^2 + n t + 1``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return IntLaurentPoly.from_list([1, n, -(2 * n + 1), n, 1])


def from_dense(a: Iterable) -> IntLaurentPoly:
    """Integer polynomial proportional to the rational dense list ``a``."""
    return _to_laurent(list(a))
