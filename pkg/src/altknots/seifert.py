"""Seifert matrices, Alexander polynomials and Levine-Tristram signatures.

Sign convention: the right-handed trefoil, with Seifert matrix
``[[-1, 1], [0, -1]]``, has signature -2.  Signatures are computed by exact
Hermitian congruence over Gaussian rationals.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, isqrt
from pathlib import Path
from typing import Sequence

from .poly import (
    IntLaurentPoly,
    IsolatingInterval,
    PolyError,
    _dense,
    _eval,
    _squarefree,
    _Sturm,
    chebyshev_reduce,
    eval_rational,
    from_dense,
    sturm_isolate_real_roots,
    symmetric_normalize,
)

__all__ = [
    "SeifertError",
    "InvalidSeifertMatrix",
    "AtAlexanderRoot",
    "NotIsolated",
    "NotRealizable",
    "SeifertMatrix",
    "CirclePoint",
    "CircleRoot",
    "MurasugiVerdict",
    "alexander",
    "signature_at",
    "hermitian_signature",
    "circle_roots",
    "jump_at",
    "murasugi_alternating_test",
    "realize_polynomial",
    "torus_signature",
    "torus_jump_list",
    "torus_two_matrix",
    "load_matrix",
]


class SeifertError(ValueError):
    pass


class InvalidSeifertMatrix(SeifertError):
    pass


class AtAlexanderRoot(SeifertError):
    pass


class NotIsolated(SeifertError):
    pass


class NotRealizable(SeifertError):
    pass


# ---------------------------------------------------------------------------
# exact integer linear algebra


def int_det(m: Sequence[Sequence[int]]) -> int:
    """Bareiss fraction-free determinant."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _transpose(m):
    return [list(col) for col in zip(*m)] if m else []


@dataclass(frozen=True)
class SeifertMatrix:
    """Square integer matrix ``V`` of even size with ``det(V - V^T) = 1``."""

    entries: tuple[tuple[int, ...], ...]
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.entries)
        object.__setattr__(self, "entries", rows)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise InvalidSeifertMatrix("matrix is not square")
        if n % 2:
            raise InvalidSeifertMatrix(f"size {n} is odd")
        d = int_det(self.skew())
        if d != 1:
            raise InvalidSeifertMatrix(f"det(V - V^T) = {d}, expected 1")

    @classmethod
    def of(cls, rows, name=None) -> SeifertMatrix:
        return cls(tuple(tuple(r) for r in rows), name)

    @property
    def size(self) -> int:
        return len(self.entries)

    @property
    def genus(self) -> int:
        return self.size // 2

    def transpose(self) -> list[list[int]]:
        return _transpose(self.entries)

    def skew(self) -> list[list[int]]:
        vt = self.transpose()
        return [[self.entries[i][j] - vt[i][j] for j in range(self.size)] for i in range(self.size)]

    def mirror(self) -> SeifertMatrix:
        """Seifert matrix ``-V^T`` of the concordance inverse."""
        return SeifertMatrix.of([[-x for x in row] for row in self.transpose()], self.name)

    def __add__(self, other: SeifertMatrix) -> SeifertMatrix:
        """Block sum (connected sum)."""
        n, m = self.size, other.size
        rows = [list(r) + [0] * m for r in self.entries]
        rows += [[0] * n + list(r) for r in other.entries]
        return SeifertMatrix.of(rows)

    def __mul__(self, k: int) -> SeifertMatrix:
        """``k``-fold connected sum; negative ``k`` uses the mirror."""
        base = self if k >= 0 else self.mirror()
        out = SeifertMatrix.of([])
        for _ in range(abs(k)):
            out = out + base
        return out

    __rmul__ = __mul__

    def to_text(self) -> str:
        lines = [str(self.size)]
        lines += [" ".join(str(x) for x in row) for row in self.entries]
        return "\n".join(lines) + "\n"


def parse_matrix(text: str, name: str | None = None) -> SeifertMatrix:
    """Plain text: first line the size ``2g``, then ``2g`` rows of integers."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise InvalidSeifertMatrix("empty matrix file")
    try:
        n = int(lines[0])
        rows = [[int(x) for x in ln.split()] for ln in lines[1:]]
    except ValueError as exc:
        raise InvalidSeifertMatrix(f"non-integer entry: {exc}") from None
    if len(rows) != n:
        raise InvalidSeifertMatrix(f"expected {n} rows, found {len(rows)}")
    return SeifertMatrix.of(rows, name)


def load_matrix(path) -> SeifertMatrix:
    path = Path(path)
    return parse_matrix(path.read_text(), name=path.stem)


# ---------------------------------------------------------------------------
# Alexander polynomial


def _lagrange(xs: list[int], ys: list[int]) -> list[Fraction]:
    n = len(xs)
    coeffs = [Fraction(0)] * n
    for i in range(n):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j in range(n):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for k in range(len(basis) - 1):
                basis[k] -= xs[j] * basis[k + 1]
            denom *= xs[i] - xs[j]
        for k in range(n):
            coeffs[k] += ys[i] * basis[k] / denom
    return coeffs


def alexander_raw(V: SeifertMatrix) -> IntLaurentPoly:
    """``det(V - t V^T)`` without normalization, via interpolation at ``t = 0..2g``."""
    n = V.size
    if n == 0:
        return IntLaurentPoly.const(1)
    vt = V.transpose()
    xs = list(range(n + 1))
    ys = [int_det([[V.entries[i][j] - x * vt[i][j] for j in range(n)] for i in range(n)]) for x in xs]
    coeffs = _lagrange(xs, ys)
    assert all(c.denominator == 1 for c in coeffs)
    return IntLaurentPoly({i: int(c) for i, c in enumerate(coeffs)})


def alexander(V: SeifertMatrix) -> IntLaurentPoly:
    return symmetric_normalize(alexander_raw(V))


# ---------------------------------------------------------------------------
# Gaussian rationals and Hermitian signature


@dataclass(frozen=True)
class GaussQ:
    re: Fraction
    im: Fraction = Fraction(0)

    def __add__(self, o):
        return GaussQ(self.re + o.re, self.im + o.im)

    def __sub__(self, o):
        return GaussQ(self.re - o.re, self.im - o.im)

    def __neg__(self):
        return GaussQ(-self.re, -self.im)

    def __mul__(self, o):
        if not isinstance(o, GaussQ):
            return GaussQ(self.re * o, self.im * o)
        return GaussQ(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def conj(self):
        return GaussQ(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __truediv__(self, o):
        if not isinstance(o, GaussQ):
            return GaussQ(self.re / o, self.im / o)
        n = o.norm()
        p = self * o.conj()
        return GaussQ(p.re / n, p.im / n)

    def __bool__(self):
        return bool(self.re) or bool(self.im)


_ZERO = GaussQ(Fraction(0))


def hermitian_signature(H: list[list[GaussQ]]) -> tuple[int, int]:
    """``(signature, nullity)`` of a Hermitian matrix by symmetric Gaussian elimination.

    A nonzero diagonal entry is used as a 1x1 pivot.  If every remaining
    diagonal entry vanishes but some ``H[i][j]`` does not, the 2x2 block
    ``[[0, h], [conj(h), 0]]`` is hyperbolic (one positive, one negative
    eigenvalue) and is used as the pivot.
    """
    a = [list(row) for row in H]
    sig = 0
    null = 0
    while a:
        n = len(a)
        k = next((i for i in range(n) if a[i][i]), None)
        if k is not None:
            piv = a[k][k].re
            sig += 1 if piv > 0 else -1
            rest = [i for i in range(n) if i != k]
            a = [[a[i][j] - a[i][k] * a[k][j] / piv for j in rest] for i in rest]
            continue
        pair = next(((i, j) for i in range(n) for j in range(i + 1, n) if a[i][j]), None)
        if pair is None:
            null += n
            break
        i, j = pair
        h = a[i][j]
        # inverse of [[0, h], [conj h, 0]] is [[0, 1/conj h], [1/h, 0]]
        one = GaussQ(Fraction(1))
        hinv, hcinv = one / h, one / h.conj()
        rest = [r for r in range(n) if r not in (i, j)]
        new = []
        for r in rest:
            row = []
            for c in rest:
                # a[r][{i,j}] P^{-1} a[{i,j}][c]
                corr = a[r][i] * hcinv * a[j][c] + a[r][j] * hinv * a[i][c]
                row.append(a[r][c] - corr)
            new.append(row)
        a = new
    return sig, null


@dataclass(frozen=True)
class CirclePoint:
    """Point on the unit circle with rational coordinates.

    ``s`` parametrizes ``omega = ((1 - s^2) + 2 i s) / (1 + s^2)``; the
    argument of ``omega`` is ``2 arctan(s)``.  ``s = None`` stands for -1.
    ``s = 0`` would be ``omega = 1`` and is excluded.
    """

    s: Fraction | None = None

    def __post_init__(self):
        if self.s is not None:
            s = Fraction(self.s)
            if s == 0:
                raise ValueError("omega = 1 is not a valid circle point")
            object.__setattr__(self, "s", s)

    @classmethod
    def minus_one(cls) -> CirclePoint:
        return cls(None)

    @property
    def omega(self) -> GaussQ:
        if self.s is None:
            return GaussQ(Fraction(-1))
        s = self.s
        d = 1 + s * s
        return GaussQ((1 - s * s) / d, 2 * s / d)

    @property
    def x(self) -> Fraction:
        """``2 cos(arg omega) = omega + 1/omega``."""
        return 2 * self.omega.re

    def conjugate(self) -> CirclePoint:
        return self if self.s is None else CirclePoint(-self.s)


def _hermitian_form(V: SeifertMatrix, w: CirclePoint) -> list[list[GaussQ]]:
    n = V.size
    om = w.omega
    a = GaussQ(Fraction(1)) - om
    b = a.conj()
    E = V.entries
    return [[a * Fraction(E[i][j]) + b * Fraction(E[j][i]) for j in range(n)] for i in range(n)]


def signature_at(V: SeifertMatrix, w: CirclePoint) -> int:
    """Levine-Tristram signature of ``(1 - w) V + (1 - conj w) V^T``."""
    sig, null = hermitian_signature(_hermitian_form(V, w))
    if null:
        raise AtAlexanderRoot(f"Alexander polynomial vanishes at s = {w.s}")
    return sig


def circle_point_between(xa, xb) -> CirclePoint:
    """A rational upper-arc point with ``xa < 2 cos(theta) < xb``, ``-2 <= xa < xb <= 2``."""
    xa, xb = Fraction(xa), Fraction(xb)
    if not (-2 <= xa < xb <= 2):
        raise ValueError("need -2 <= xa < xb <= 2")
    # x(s) = 2(1 - s^2)/(1 + s^2) decreases in s > 0; s^2 = (2 - x)/(2 + x)
    lo_sq = (2 - xb) / (2 + xb)
    hi_sq = (2 - xa) / (2 + xa) if xa > -2 else None
    den = 1
    while True:
        den *= 2
        m = isqrt(int(lo_sq * den * den)) + 1
        s = Fraction(m, den)
        if s > 0 and s * s > lo_sq and (hi_sq is None or s * s < hi_sq):
            return CirclePoint(s)


# ---------------------------------------------------------------------------
# circle roots and jumps


@dataclass(frozen=True)
class CircleRoot:
    """A root ``eta`` on the open upper arc, located by ``x = eta + 1/eta`` in ``(-2, 2)``."""

    poly: IntLaurentPoly
    interval: IsolatingInterval
    multiplicity: int = 1

    @property
    def reduced(self) -> IntLaurentPoly:
        return chebyshev_reduce(self.poly)


def circle_roots(p: IntLaurentPoly) -> list[CircleRoot]:
    """Upper-arc roots of a symmetric polynomial, in counterclockwise order."""
    if eval_rational(p, 1) == 0 or eval_rational(p, -1) == 0:
        raise PolyError("roots at +1 or -1 are not supported")
    q = chebyshev_reduce(p)
    ivs = sturm_isolate_real_roots(q, -2, 2)
    roots = [CircleRoot(symmetric_normalize(p), iv, iv.multiplicity) for iv in ivs]
    roots.sort(key=lambda r: -r.interval.lo)
    return roots


def _flanking_points(eta: CircleRoot, other: IntLaurentPoly, max_steps: int = 400) -> tuple[CirclePoint, CirclePoint]:
    """Rational circle points just before and after ``eta`` with no root of ``other`` in between.

    Returns (before, after) where "after" has the larger argument, i.e.
    the smaller ``x``.
    """
    qe = _squarefree(_dense(eta.reduced))
    combo = from_dense(qe)
    other_red = chebyshev_reduce(other) if not other.is_zero() and other.breadth else IntLaurentPoly.const(1)
    both = _Sturm(_dense(combo * other_red))
    eta_st = _Sturm(qe)
    lo, hi = eta.interval.lo, eta.interval.hi
    exact = None
    for _ in range(max_steps):
        if not both.is_root(lo) and not both.is_root(hi) and both.count_open(lo, hi) == 1:
            break
        m = (lo + hi) / 2
        if eta_st.is_root(m):
            exact = m
            lo, hi = m - (hi - lo) / 4, m + (hi - lo) / 4
            while both.is_root(lo) or both.is_root(hi) or both.count_open(lo, hi) != 1:
                lo, hi = (lo + m) / 2, (hi + m) / 2
            break
        if eta_st.count_open(lo, m) == 1:
            hi = m
        else:
            lo = m
    else:
        raise NotIsolated("could not separate the root from the other circle roots")

    if exact is not None:
        after = circle_point_between(lo, exact)
        before = circle_point_between(exact, hi)
        return before, after
    sign_lo = both.sign(lo)
    w = (hi - lo) / 2
    for _ in range(max_steps):
        after = circle_point_between(lo, lo + w)
        before = circle_point_between(hi - w, hi)
        if both.sign(after.x) == sign_lo and both.sign(before.x) == -sign_lo:
            return before, after
        w /= 2
    raise NotIsolated("could not place flanking points")


def jump_at(V: SeifertMatrix, eta: CircleRoot) -> int:
    """``sigma(after) - sigma(before)`` across ``eta``, counterclockwise."""
    before, after = _flanking_points(eta, alexander(V))
    return signature_at(V, after) - signature_at(V, before)


# ---------------------------------------------------------------------------
# Murasugi obstruction


@dataclass(frozen=True)
class MurasugiVerdict:
    compatible: bool
    reason: str | None = None

    def __bool__(self):
        return self.compatible


def murasugi_alternating_test(delta: IntLaurentPoly) -> MurasugiVerdict:
    """Alternating knots have coefficients that alternate strictly in sign with no gaps."""
    d = symmetric_normalize(delta)
    coeffs = d.ascending()
    for k, c in enumerate(coeffs):
        if c == 0:
            return MurasugiVerdict(False, f"zero coefficient at t^{d.low + k}")
        if k and (c > 0) == (coeffs[k - 1] > 0):
            reason = f"coefficients of t^{d.low + k - 1} and t^{d.low + k} have the same sign"
            neg = [iv for iv in sturm_isolate_real_roots(d) if iv.hi <= 0]
            if neg:
                reason += f"; {len(neg)} negative real root(s)"
            return MurasugiVerdict(False, reason)
    return MurasugiVerdict(True)


# ---------------------------------------------------------------------------
# realization


def _companion(f: list[int]) -> list[list[int]]:
    """Companion matrix of monic ``x^g + f[g-1] x^(g-1) + ... + f[0]``."""
    g = len(f)
    C = [[0] * g for _ in range(g)]
    for i in range(1, g):
        C[i][i - 1] = 1
    for i in range(g):
        C[i][g - 1] = -f[i]
    return C


def _matmul(A, B):
    return [[sum(A[i][k] * B[k][j] for k in range(len(B))) for j in range(len(B[0]))] for i in range(len(A))]


def _int_inverse_unimodular(H: list[list[int]]) -> list[list[int]]:
    n = len(H)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(H)]
    for c in range(n):
        r = next(r for r in range(c, n) if a[r][c])
        a[c], a[r] = a[r], a[c]
        p = a[c][c]
        a[c] = [x / p for x in a[c]]
        for r in range(n):
            if r != c and a[r][c]:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    inv = [row[n:] for row in a]
    if any(x.denominator != 1 for row in inv for x in row):
        raise NotRealizable("pairing matrix is not unimodular")
    return [[int(x) for x in row] for row in inv]


def realize_polynomial(delta: IntLaurentPoly, name: str | None = None) -> SeifertMatrix:
    """A Seifert matrix whose Alexander polynomial is ``delta``.

    With ``y = t + 1/t - 2`` a normalized ``delta`` with ``delta(1) = 1``
    is a polynomial ``r(y)`` with ``r(0) = 1``.  The block matrix
    ``V = [[A, I], [0, B]]`` with ``A``, ``B`` symmetric has
    ``det(V - t V^T) = t^g det(I + y A B)``, so it suffices to write a
    matrix ``C`` with ``det(I + y C) = r(y)`` as ``A B``.  ``C`` is the
    companion matrix of the reversed polynomial; ``H C`` is symmetric for
    the unimodular Hankel matrix ``H[i][j] = [x^(g-1)] x^(i+j) mod f``.
    """
    try:
        d = symmetric_normalize(delta)
    except PolyError as exc:
        raise NotRealizable(str(exc)) from None
    v1 = eval_rational(d, 1)
    if v1 not in (1, -1):
        raise NotRealizable(f"Delta(1) = {v1}, expected +-1")
    if v1 == -1:
        d = -d
    g = d.high
    if g == 0:
        return SeifertMatrix.of([], name)
    q = chebyshev_reduce(d) if d.leading > 0 else -chebyshev_reduce(-d)
    # r(y) = q(y + 2)
    r = [Fraction(0)] * (g + 1)
    for k, c in q.items():
        # (y + 2)^k
        binom = 1
        for i in range(k + 1):
            r[i] += c * binom * 2 ** (k - i)
            binom = binom * (k - i) // (i + 1)
    assert r[0] == 1
    r = [int(x) for x in r]
    # det(I + yC) = sum e_k(C) y^k, so e_k(C) = r_k; char poly x^g - e1 x^(g-1) + e2 ...
    f = [(-1) ** (g - i) * r[g - i] for i in range(g)]
    C = _companion(f)
    # powers of x modulo f, to read off the Hankel form
    mono = [[0] * g for _ in range(2 * g - 1)]
    cur = [1] + [0] * (g - 1)
    for k in range(2 * g - 1):
        mono[k] = cur
        top = cur[-1]
        cur = [0] + cur[:-1]
        cur = [cur[i] - top * f[i] for i in range(g)]
    H = [[mono[i + j][g - 1] for j in range(g)] for i in range(g)]
    A = _int_inverse_unimodular(H)
    B = _matmul(H, C)
    rows = [A[i] + [int(i == j) for j in range(g)] for i in range(g)]
    rows += [[0] * g + B[i] for i in range(g)]
    V = SeifertMatrix.of(rows, name)
    if alexander(V) != symmetric_normalize(delta):
        raise NotRealizable("construction did not reproduce the polynomial")
    return V


# ---------------------------------------------------------------------------
# torus knots


def _check_torus(p: int, q: int):
    if not (2 <= p < q):
        raise ValueError(f"torus knot needs 2 <= p < q, got ({p}, {q})")
    if gcd(p, q) != 1:
        raise ValueError(f"torus knot needs coprime p, q, got ({p}, {q})")


def _lattice_values(p: int, q: int) -> list[Fraction]:
    return sorted(Fraction(i, p) + Fraction(j, q) for i in range(1, p) for j in range(1, q))


def torus_signature(p: int, q: int, lam) -> int:
    """Signature of ``T(p, q)`` at ``exp(2 pi i lam)`` by the lattice count."""
    _check_torus(p, q)
    lam = Fraction(lam)
    if not 0 < lam < 1:
        raise ValueError("lambda must lie in (0, 1)")
    count = 0
    for v in _lattice_values(p, q):
        if v == lam or v == lam + 1:
            raise AtAlexanderRoot(f"exp(2 pi i {lam}) is a root of the Alexander polynomial")
        if lam < v < lam + 1:
            count += 1
    return (p - 1) * (q - 1) - 2 * count


def torus_jump_list(p: int, q: int) -> list[tuple[Fraction, int]]:
    """Signature jumps of ``T(p, q)`` at ``lam`` in ``(0, 1/2]``."""
    _check_torus(p, q)
    jumps: dict[Fraction, int] = {}
    half = Fraction(1, 2)
    for v in _lattice_values(p, q):
        if 0 < v <= half:
            jumps[v] = jumps.get(v, 0) + 2  # v leaves the window
        if 0 < v - 1 <= half:
            jumps[v - 1] = jumps.get(v - 1, 0) - 2  # v enters the window
    return sorted((lam, j) for lam, j in jumps.items() if j)


def torus_two_matrix(q: int) -> SeifertMatrix:
    """Standard ``(q-1) x (q-1)`` Seifert matrix of ``T(2, q)``: -1 on the diagonal, 1 above it."""
    _check_torus(2, q)
    n = q - 1
    return SeifertMatrix.of(
        [[-1 if i == j else (1 if j == i + 1 else 0) for j in range(n)] for i in range(n)],
        f"T(2,{q})",
    )
