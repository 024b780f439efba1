"""Concordance homomorphisms, obstruction bounds and independence certificates.

A functional here is an additive map on formal knot sums, described by a
:class:`HomDescriptor` together with the facts the bounds rely on:

* ``vanishes_on_Ca`` -- zero on every alternating knot, so a nonzero value
  certifies that a knot is not concordant to an alternating one;
* ``genus_constant`` ``c`` -- ``|nu(K)| <= c * g4(K)``, giving
  ``A_g(K) >= |nu(K)| / c`` whenever ``nu`` vanishes on alternating knots;
* ``agrees_with_sigma_half`` -- equal to ``sigma/2`` on alternating knots,
  so differences of two such maps vanish on alternating knots;
* ``crossing_lemma_ok`` -- the one-sided crossing-change hypotheses hold
  (witnessed by the value -1 on ``T(2,3)``), which makes differences
  usable for the double-point bound ``A_s(K) >= |nu1(K) - nu2(K)|``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Sequence, Union

from .knots import (
    Declared,
    DeclaredKnot,
    DeltaKnot,
    KnotAtom,
    KnotExpr,
    MatrixKnot,
    Sign,
    Torus,
    delta_matrix,
    ts_functional_id,
)
from .poly import (
    IsolatingInterval,
    _dense,
    _pgcd,
    count_unit_circle_root_pairs,
    delta_n,
    eval_rational,
    irreducible_over_q,
    sturm_isolate_real_roots,
)
from .seifert import (
    CirclePoint,
    CircleRoot,
    MurasugiVerdict,
    SeifertMatrix,
    circle_roots,
    jump_at,
    murasugi_alternating_test,
    signature_at,
    torus_signature,
    torus_two_matrix,
)
from .upsilon import PLFunction, singularities, torus_alexander, torus_upsilon

__all__ = [
    "MissingInvariantData",
    "HomDescriptor",
    "Value",
    "SIGMA_HALF",
    "NEG_TAU",
    "S_HALF",
    "UPSILON_SMALL",
    "AGREEING",
    "upsilon_over_t",
    "jump_functional",
    "difference",
    "upsilon_psi",
    "ts_functional",
    "torus_psi",
    "get_functional",
    "evaluate_hom",
    "Witness",
    "BoundReport",
    "ag_lower_bound",
    "as_lower_bound",
    "singular_inequality_check",
    "jump_bound_theorem",
    "IndependenceCertificate",
    "independence_certificate",
    "DeltaReport",
    "deltan_report",
    "ObstructionReport",
    "alternating_obstruction",
    "DECLARED_WATERMARK",
]

Value = Union[Fraction, Sign]

DECLARED_WATERMARK = "relies on declared (unverified) invariants"


class MissingInvariantData(LookupError):
    def __init__(self, atom, hom_id: str, detail: str = ""):
        self.atom = atom
        self.hom_id = hom_id
        msg = f"{hom_id} is not available for {atom}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)

    def __str__(self):
        return self.args[0]


@dataclass(frozen=True)
class HomDescriptor:
    id: str
    label: str
    atom_value: Callable[[KnotAtom], Value] = field(compare=False, repr=False)
    vanishes_on_Ca: bool = False
    agrees_with_sigma_half: bool = False
    genus_constant: int = 1
    crossing_lemma_ok: bool = False
    note: str = ""

    def __call__(self, K: KnotExpr | KnotAtom) -> Value:
        return evaluate_hom(self, K)


def _combine(h: HomDescriptor, K: KnotExpr) -> Value:
    exact = Fraction(0)
    signed: list[Sign] = []
    for c, atom in K.terms:
        v = h.atom_value(atom)
        if isinstance(v, Sign):
            if v == Sign.ZERO:
                continue
            signed.append(v * c)
        else:
            exact += c * v
    if not signed:
        return exact
    signs = set(signed)
    if exact:
        signs.add(Sign.POSITIVE if exact > 0 else Sign.NEGATIVE)
    if len(signs) == 1:
        return signs.pop()
    raise MissingInvariantData(K, h.id, "sign of the sum is not determined by the declared data")


def evaluate_hom(h: HomDescriptor, K: KnotExpr | KnotAtom) -> Value:
    """``sum a_i h(K_i)``; symbolic when only sign data is known."""
    if not isinstance(K, KnotExpr):
        K = KnotExpr.of(K)
    return _combine(h, K)


# ---------------------------------------------------------------------------
# atom-level invariants


@lru_cache(maxsize=None)
def _torus_ups(p: int, q: int) -> PLFunction:
    return torus_upsilon(p, q)


def _matrix_of(atom: KnotAtom) -> SeifertMatrix | None:
    if isinstance(atom, DeltaKnot):
        return delta_matrix(atom.n)
    if isinstance(atom, MatrixKnot):
        return atom.matrix
    if isinstance(atom, Torus) and atom.p == 2:
        return torus_two_matrix(atom.q)
    return None


@lru_cache(maxsize=None)
def _sigma_matrix(V: SeifertMatrix) -> int:
    return signature_at(V, CirclePoint.minus_one())


def _sigma_half(atom: KnotAtom) -> Value:
    if isinstance(atom, Torus):
        return Fraction(torus_signature(atom.p, atom.q, Fraction(1, 2)), 2)
    if isinstance(atom, Declared):
        d = atom.data
        if d.sigma is None:
            raise MissingInvariantData(atom, "sigma_half")
        return Fraction(d.sigma, 2)
    return Fraction(_sigma_matrix(_matrix_of(atom)), 2)


def _neg_tau(atom: KnotAtom) -> Value:
    if isinstance(atom, Torus):
        tau = Fraction(atom.genus)
        if -_torus_ups(atom.p, atom.q).initial_slope != tau:
            raise AssertionError(f"tau({atom}) disagrees with the Upsilon slope")
        return -tau
    if isinstance(atom, Declared):
        d = atom.data
        if d.tau is not None:
            return -Fraction(d.tau)
        if d.upsilon is not None:
            return d.upsilon.initial_slope
        if d.upsilon_zero_until is not None:
            return Fraction(0)
    raise MissingInvariantData(atom, "neg_tau")


def _s_half(atom: KnotAtom) -> Value:
    if isinstance(atom, Torus):
        # s(T(p,q)) = -(p-1)(q-1) in the convention where s/2 = sigma/2 on alternating knots
        return -Fraction(atom.genus)
    if isinstance(atom, Declared) and atom.data.s is not None:
        return Fraction(atom.data.s, 2)
    raise MissingInvariantData(atom, "s_half")


def _ups_over_t(atom: KnotAtom, t: Fraction, hid: str) -> Value:
    if isinstance(atom, Torus):
        return _torus_ups(atom.p, atom.q).over_t(t)
    if isinstance(atom, Declared):
        d = atom.data
        if d.upsilon is not None:
            return d.upsilon.over_t(t)
        if d.upsilon_zero_until is not None and t <= d.upsilon_zero_until:
            return Fraction(0)
    raise MissingInvariantData(atom, hid)


def atom_upsilon(atom: KnotAtom) -> PLFunction:
    if isinstance(atom, Torus):
        return _torus_ups(atom.p, atom.q)
    if isinstance(atom, Declared) and atom.data.upsilon is not None:
        return atom.data.upsilon
    raise MissingInvariantData(atom, "upsilon")


def expr_upsilon(K: KnotExpr) -> PLFunction:
    """``Upsilon_K`` as an exact PL function (additive over the formal sum)."""
    f = PLFunction.zero()
    for c, a in K.terms:
        f = f + atom_upsilon(a).scale(c)
    return f


# ---------------------------------------------------------------------------
# the registry

SIGMA_HALF = HomDescriptor(
    "sigma_half", "sigma/2", _sigma_half,
    agrees_with_sigma_half=True, crossing_lemma_ok=True,
)
NEG_TAU = HomDescriptor(
    "neg_tau", "-tau", _neg_tau,
    agrees_with_sigma_half=True, crossing_lemma_ok=True,
    note="tau(T(p,q)) = (p-1)(q-1)/2, cross-checked against -Upsilon'(0+)",
)
S_HALF = HomDescriptor(
    "s_half", "s/2", _s_half,
    agrees_with_sigma_half=True, crossing_lemma_ok=True,
    note="sign convention chosen so that s/2 = sigma/2 on alternating knots; s(T(p,q)) = -(p-1)(q-1)",
)


@lru_cache(maxsize=None)
def upsilon_over_t(t) -> HomDescriptor:
    """``Upsilon(t)/t`` for ``t`` in ``[0, 1]``; ``t = 0`` is the initial slope."""
    t = Fraction(t)
    if not 0 <= t <= 1:
        raise ValueError("t must lie in [0, 1]")
    hid = f"ups[{t}]"
    return HomDescriptor(
        hid, f"Upsilon({t})/{t}" if t else "Upsilon'(0)",
        lambda a: _ups_over_t(a, t, hid),
        agrees_with_sigma_half=True, crossing_lemma_ok=True,
    )


UPSILON_SMALL = HomDescriptor(
    "upsilon_small", "upsilon = Upsilon(1)",
    lambda a: _ups_over_t(a, Fraction(1), "upsilon_small"),
    agrees_with_sigma_half=True, crossing_lemma_ok=True,
)

AGREEING = (SIGMA_HALF, NEG_TAU, S_HALF, UPSILON_SMALL)


@lru_cache(maxsize=None)
def omega_root(n: int) -> CircleRoot:
    """The unique upper-arc root of ``delta_n``."""
    roots = circle_roots(delta_n(n))
    if len(roots) != 1:
        raise AssertionError(f"delta_{n} has {len(roots)} upper-arc roots")
    return roots[0]


@lru_cache(maxsize=None)
def _jump_matrix(V: SeifertMatrix, n: int) -> int:
    return jump_at(V, omega_root(n))


def _coprime_to_delta(poly, n: int) -> bool:
    g = _pgcd(_dense(poly), _dense(delta_n(n)))
    return len(g) <= 1


def _jump_atom(atom: KnotAtom, n: int) -> Value:
    hid = f"jump[{n}]"
    if isinstance(atom, Declared):
        fact = atom.data.facts.get(hid)
        if fact is None:
            raise MissingInvariantData(atom, hid)
        return fact
    if isinstance(atom, Torus) and _coprime_to_delta(torus_alexander(atom.p, atom.q), n):
        # jumps only occur at roots of the Alexander polynomial
        return Fraction(0)
    V = _matrix_of(atom)
    if V is None:
        raise MissingInvariantData(atom, hid)
    return Fraction(_jump_matrix(V, n))


@lru_cache(maxsize=None)
def jump_functional(n: int) -> HomDescriptor:
    """Signature jump at ``omega_n``; vanishes on alternating knots and ``|J| <= 4 g4``."""
    return HomDescriptor(
        f"jump[{n}]", f"J at omega_{n}", lambda a: _jump_atom(a, n),
        vanishes_on_Ca=True, genus_constant=4,
    )


def difference(h1: HomDescriptor, h2: HomDescriptor, hid: str | None = None) -> HomDescriptor:
    """``h1 - h2``; vanishes on alternating knots when both agree with sigma/2 there."""
    if not (h1.agrees_with_sigma_half and h2.agrees_with_sigma_half):
        raise ValueError("differences need two maps that agree on alternating knots")

    def value(a):
        v1, v2 = h1.atom_value(a), h2.atom_value(a)
        if isinstance(v1, Sign) or isinstance(v2, Sign):
            raise MissingInvariantData(a, hid or f"{h1.id}-{h2.id}", "only sign data")
        return v1 - v2

    return HomDescriptor(
        hid or f"{h1.id}-{h2.id}", f"{h1.label} - {h2.label}", value,
        vanishes_on_Ca=True, genus_constant=2,
    )


@lru_cache(maxsize=None)
def upsilon_psi(s, t) -> HomDescriptor:
    """``psi_{s,t} = Upsilon(s)/s - Upsilon(t)/t``."""
    s, t = Fraction(s), Fraction(t)
    if t == 0:
        raise ValueError("t must be positive")
    return difference(upsilon_over_t(s), upsilon_over_t(t), hid=f"psi[{s},{t}]")


def torus_psi(p: int) -> HomDescriptor:
    """``psi_{2/p, 2/p + eps_p}`` with ``eps_p`` the midpoint choice ``(2/(p-1) - 2/p)/2``."""
    if p < 3:
        raise ValueError("p must be at least 3")
    a = Fraction(2, p)
    eps = (Fraction(2, p - 1) - a) / 2
    return upsilon_psi(a, a + eps)


def _ts_atom(atom: KnotAtom, n: int) -> Value:
    hid = ts_functional_id(n)
    # psi_n is evaluated at a_n < b_n < a_{n-1}
    upper = Fraction(2, 2 * n - 3)
    if isinstance(atom, Declared):
        d = atom.data
        if hid in d.facts:
            return d.facts[hid]
        if d.upsilon_zero_until is not None and d.upsilon_zero_until >= upper:
            return Fraction(0)
    if isinstance(atom, Torus):
        first = singularities(_torus_ups(atom.p, atom.q))
        if not first or first[0] >= upper:
            return Fraction(0)  # Upsilon is linear through 0 there
    raise MissingInvariantData(atom, hid)


@lru_cache(maxsize=None)
def ts_functional(n: int) -> HomDescriptor:
    """``psi_{a_n, b_n}`` with ``a_n = 2/(2n-1)`` and an unspecified ``b_n`` in ``(a_n, a_{n-1})``."""
    if n < 2:
        raise ValueError("n must be at least 2")
    return HomDescriptor(
        ts_functional_id(n), f"psi_(a_{n}, b_{n})", lambda a: _ts_atom(a, n),
        vanishes_on_Ca=True, genus_constant=2,
        note="only sign data; b_n is never fixed numerically",
    )


def get_functional(hid: str) -> HomDescriptor:
    """Look up a functional by id: ``sigma_half``, ``ups[2/3]``, ``jump[3]``, ``psi[0,2/3]``, ``psi_ts[4]``, ``a-b``."""
    base = {h.id: h for h in AGREEING}
    if hid in base:
        return base[hid]
    if hid.startswith("ups[") and hid.endswith("]"):
        return upsilon_over_t(Fraction(hid[4:-1]))
    if hid.startswith("jump[") and hid.endswith("]"):
        return jump_functional(int(hid[5:-1]))
    if hid.startswith("psi_ts[") and hid.endswith("]"):
        return ts_functional(int(hid[7:-1]))
    if hid.startswith("psi[") and hid.endswith("]"):
        s, t = hid[4:-1].split(",")
        return upsilon_psi(Fraction(s), Fraction(t))
    # difference "a-b", splitting at a '-' that separates two known ids
    for i, ch in enumerate(hid):
        if ch == "-" and i:
            try:
                return difference(get_functional(hid[:i]), get_functional(hid[i + 1:]))
            except (KeyError, ValueError):
                continue
    raise KeyError(f"unknown functional {hid!r}")


# ---------------------------------------------------------------------------
# bounds


@dataclass(frozen=True)
class Witness:
    """A functional vanishing on alternating knots, its value, and the bound it yields.

    For a difference ``nu1 - nu2`` the component ids and values are listed.
    """

    functionals: tuple[str, ...]
    values: tuple[Fraction, ...]
    value: Fraction
    divisor: int

    @property
    def bound(self) -> Fraction:
        return abs(self.value) / self.divisor

    def describe(self) -> str:
        if len(self.functionals) == 2:
            a, b = self.functionals
            va, vb = self.values
            return f"{a} - {b} = {va} - ({vb}) = {self.value}"
        return f"{self.functionals[0]} = {self.value}"

    def recompute(self, K: KnotExpr) -> Fraction:
        vals = [get_functional(h)(K) for h in self.functionals]
        if len(vals) == 2:
            return vals[0] - vals[1]
        return vals[0]


def _ceil(x: Fraction) -> int:
    return math.ceil(x)


@dataclass(frozen=True)
class BoundReport:
    expr: KnotExpr
    ag_lower: Fraction
    as_lower: Fraction
    ag_witness: Witness | None
    as_witness: Witness | None
    declared_dependent: bool = False
    skipped: tuple[str, ...] = ()

    @property
    def ag_lower_int(self) -> int:
        """Integer ceiling; genera are integers."""
        return _ceil(self.ag_lower)

    @property
    def as_lower_int(self) -> int:
        return _ceil(self.as_lower)

    def verify(self) -> bool:
        for w in (self.ag_witness, self.as_witness):
            if w is not None and w.recompute(self.expr) != w.value:
                return False
        return True

    def to_text(self) -> str:
        lines = [
            f"knot: {self.expr.render()}",
            f"ag_lower: {self.ag_lower}",
            f"ag_lower_int: {self.ag_lower_int}",
            f"ag_witness: {self.ag_witness.describe() if self.ag_witness else 'none'}",
            f"ag_divisor: {self.ag_witness.divisor if self.ag_witness else '-'}",
            f"as_lower: {self.as_lower}",
            f"as_lower_int: {self.as_lower_int}",
            f"as_witness: {self.as_witness.describe() if self.as_witness else 'none'}",
            f"unavailable: {', '.join(self.skipped) if self.skipped else 'none'}",
        ]
        if self.declared_dependent:
            lines.append(f"warning: {DECLARED_WATERMARK}")
        return "\n".join(lines) + "\n"


def _critical_ts(K: KnotExpr) -> list[Fraction]:
    """Points of ``[0, 1]`` where ``Upsilon_K(t)/t`` can attain its extremes.

    On each linear piece ``a t + b`` the quotient is ``a + b/t``, which is
    monotone, so the extremes sit at 0 (as a limit), 1, or a breakpoint.
    """
    ts = {Fraction(0), Fraction(1)}
    for a in K.atoms:
        if isinstance(a, Torus):
            ts.update(x for x in _torus_ups(a.p, a.q).breakpoints if 0 < x <= 1)
        elif isinstance(a, Declared):
            d = a.data
            if d.upsilon is not None:
                ts.update(x for x in d.upsilon.breakpoints if 0 < x <= 1)
            if d.upsilon_zero_until is not None and d.upsilon_zero_until <= 1:
                ts.add(d.upsilon_zero_until)
    return sorted(ts)


def _agreeing_values(K: KnotExpr, crossing_only: bool):
    homs = list(AGREEING) + [upsilon_over_t(t) for t in _critical_ts(K)]
    vals: list[tuple[HomDescriptor, Fraction]] = []
    skipped = []
    for h in homs:
        if crossing_only and not h.crossing_lemma_ok:
            continue
        try:
            v = h(K)
        except MissingInvariantData:
            skipped.append(h.id)
            continue
        if isinstance(v, Sign):
            skipped.append(h.id)
            continue
        vals.append((h, v))
    return vals, skipped


def _best_pair(vals) -> Witness | None:
    if len(vals) < 2:
        return None
    hi = max(vals, key=lambda hv: hv[1])
    lo = min(vals, key=lambda hv: hv[1])
    if hi[1] == lo[1]:
        hi, lo = vals[0], vals[1]
    return Witness((hi[0].id, lo[0].id), (hi[1], lo[1]), hi[1] - lo[1], 2)


def _jump_indices(K: KnotExpr) -> list[int]:
    return sorted({a.n for a in K.atoms if isinstance(a, DeltaKnot)})


def _bounds(K: KnotExpr, jump_indices: Iterable[int] | None) -> BoundReport:
    vals, skipped = _agreeing_values(K, crossing_only=False)
    cands: list[Witness] = []
    pair = _best_pair(vals)
    if pair is not None:
        cands.append(pair)
    for n in (jump_indices if jump_indices is not None else _jump_indices(K)):
        h = jump_functional(n)
        try:
            v = h(K)
        except MissingInvariantData:
            skipped.append(h.id)
            continue
        if isinstance(v, Sign):
            continue
        cands.append(Witness((h.id,), (v,), v, h.genus_constant))
    best = max(cands, key=lambda w: w.bound, default=None)

    crossing = [(h, v) for h, v in vals if h.crossing_lemma_ok]
    w = _best_pair(crossing)
    as_w = Witness(w.functionals, w.values, w.value, 1) if w is not None else None
    return BoundReport(
        K,
        best.bound if best else Fraction(0),
        as_w.bound if as_w else Fraction(0),
        best,
        as_w,
        K.uses_declared(),
        tuple(skipped),
    )


def ag_lower_bound(K: KnotExpr, jump_indices: Iterable[int] | None = None) -> BoundReport:
    """Lower bound on the genus of a cobordism from ``K`` to an alternating knot.

    The maximum of ``|nu1(K) - nu2(K)| / 2`` over maps agreeing with
    ``sigma/2`` on alternating knots, and ``|J(K)| / 4`` over the jump
    functionals at the ``omega_n`` of the ``K[n]`` atoms present.
    """
    rep = _bounds(K, jump_indices)
    if rep.ag_witness is None and not K.is_unknot():
        raise MissingInvariantData(K, "ag_lower_bound", "no usable functional")
    return rep


def as_lower_bound(K: KnotExpr) -> BoundReport:
    """Lower bound ``|nu1(K) - nu2(K)|`` on the double points of a singular concordance to an alternating knot."""
    rep = _bounds(K, None)
    if rep.as_witness is None and not K.is_unknot():
        raise MissingInvariantData(K, "as_lower_bound", "fewer than two usable maps")
    return rep


def singular_inequality_check(K1: KnotExpr, K2: KnotExpr, s_plus: int, s_minus: int, h: HomDescriptor) -> bool:
    """``-s_plus <= h(K1) - h(K2) <= s_minus``."""
    if not h.crossing_lemma_ok:
        raise ValueError(f"{h.id} does not satisfy the crossing-change hypotheses")
    d = h(K1 - K2)
    if isinstance(d, Sign):
        raise MissingInvariantData(K1 - K2, h.id, "only sign data")
    return -s_plus <= d <= s_minus


def jump_bound_theorem(K: KnotExpr, n: int, N: int) -> Fraction:
    """``g4(K) >= |J_{omega_n}(K)| / 4 = |a_n N|`` for ``K`` in the span of ``{2N K_i}``."""
    if N < 1:
        raise ValueError("N must be positive")
    coeffs = {}
    for c, a in K.terms:
        if not isinstance(a, DeltaKnot):
            raise ValueError(f"{a} is not one of the K_i")
        if c % (2 * N):
            raise ValueError(f"coefficient {c} of {a} is not a multiple of 2N = {2 * N}")
        coeffs[a.n] = c // (2 * N)
    a_n = coeffs.get(n, 0)
    if a_n == 0:
        raise ValueError(f"coefficient a_{n} is zero")
    J = jump_functional(n)(K)
    bound = abs(J) / 4
    if bound != abs(a_n * N):
        raise AssertionError(f"jump bound {bound} != |a_n N| = {abs(a_n * N)}")
    return bound


# ---------------------------------------------------------------------------
# independence certificates


def _fmt(v) -> str:
    if v is None:
        return "?"
    return str(v)


def _is_zero(v) -> bool:
    return v is not None and not isinstance(v, Sign) and v == 0


def _triangular_order(matrix) -> list[tuple[int, int]] | None:
    """Peel rows with exactly one possibly-nonzero entry among the remaining columns."""
    nrows = len(matrix)
    ncols = len(matrix[0]) if matrix else 0
    cols = set(range(ncols))
    rows = set(range(nrows))
    order = []
    while cols:
        for r in sorted(rows):
            live = [c for c in sorted(cols) if not _is_zero(matrix[r][c])]
            if len(live) == 1 and matrix[r][live[0]] is not None:
                order.append((r, live[0]))
                rows.discard(r)
                cols.discard(live[0])
                break
        else:
            return None
    return order


@dataclass(frozen=True)
class IndependenceCertificate:
    knots: tuple[KnotExpr, ...]
    functionals: tuple[str, ...]
    matrix: tuple[tuple[Value | None, ...], ...]
    order: tuple[tuple[int, int], ...] | None
    verdict: str
    selection: str = "explicit"
    declared_dependent: bool = False

    @property
    def independent(self) -> bool:
        return self.verdict == "independent"

    def triangular(self) -> list[list[Value | None]]:
        """Matrix with rows and columns in witness order; zero above the diagonal."""
        if self.order is None:
            raise ValueError("no triangular witness")
        return [[self.matrix[r][c] for _, c in self.order] for r, _ in self.order]

    def verify(self) -> bool:
        """Re-evaluate every entry and replay the witness ordering."""
        fresh = _evaluate_matrix([get_functional(h) for h in self.functionals], self.knots)
        if fresh != [list(row) for row in self.matrix]:
            return False
        if self.order is None:
            return self.verdict == "inconclusive"
        tri = self.triangular()
        for i, row in enumerate(tri):
            if row[i] is None or _is_zero(row[i]):
                return False
            if any(not _is_zero(x) for x in row[i + 1:]):
                return False
        return len(self.order) == len(self.knots) and self.verdict == "independent"

    def to_text(self) -> str:
        lines = [
            f"verdict: {self.verdict}",
            f"selection: {self.selection}",
            f"knots: {'; '.join(k.render() for k in self.knots)}",
            f"functionals: {'; '.join(self.functionals)}",
            "matrix:",
        ]
        for h, row in zip(self.functionals, self.matrix):
            lines.append(f"  {h}: {', '.join(_fmt(v) for v in row)}")
        if self.order is not None:
            lines.append(
                "order: " + "; ".join(f"{self.functionals[r]} -> {self.knots[c].render()}" for r, c in self.order)
            )
            lines.append("triangular:")
            for row in self.triangular():
                lines.append("  " + ", ".join(_fmt(v) for v in row))
        else:
            lines.append("order: none")
        if self.declared_dependent:
            lines.append(f"warning: {DECLARED_WATERMARK}")
        return "\n".join(lines) + "\n"


def _evaluate_matrix(funcs: Sequence[HomDescriptor], knots: Sequence[KnotExpr]):
    out = []
    for h in funcs:
        row = []
        for K in knots:
            try:
                row.append(h(K))
            except MissingInvariantData:
                row.append(None)
        out.append(row)
    return out


def _auto_functional(K: KnotExpr) -> HomDescriptor | None:
    atoms = K.atoms
    if len(atoms) == 1 and isinstance(atoms[0], Torus):
        a = atoms[0]
        if a.q == a.p + 1 and a.p >= 3:
            return torus_psi(a.p)
    try:
        f = expr_upsilon(K)
    except MissingInvariantData:
        f = None
    if f is not None:
        sing = [x for x in singularities(f) if x < 1]
        if sing:
            nxt = [x for x in f.breakpoints if x > sing[0]][0]
            return upsilon_psi(sing[0], sing[0] + (min(nxt, Fraction(1)) - sing[0]) / 2)
    if len(atoms) == 1 and isinstance(atoms[0], DeltaKnot):
        return jump_functional(atoms[0].n)
    for a in atoms:
        if isinstance(a, Declared):
            for hid, sign in sorted(a.data.facts.items()):
                if sign != Sign.ZERO:
                    return get_functional(hid)
    return None


def independence_certificate(knots: Sequence[KnotExpr | KnotAtom], functionals="auto") -> IndependenceCertificate:
    """Certificate that the classes of ``knots`` are independent modulo alternating knots.

    Every functional used vanishes on alternating knots, so a lower
    triangular evaluation matrix with nonzero diagonal forbids any
    nontrivial combination from being alternating.
    """
    knots = tuple(k if isinstance(k, KnotExpr) else KnotExpr.of(k) for k in knots)
    if functionals == "auto":
        funcs = []
        for K in knots:
            f = _auto_functional(K)
            if f is not None and f not in funcs:
                funcs.append(f)
        selection = "auto"
    else:
        funcs = [get_functional(f) if isinstance(f, str) else f for f in functionals]
        selection = "explicit"
    for f in funcs:
        if not f.vanishes_on_Ca:
            raise ValueError(f"{f.id} does not vanish on alternating knots")
    matrix = _evaluate_matrix(funcs, knots)
    order = _triangular_order(matrix) if funcs and knots else None
    verdict = "independent" if order is not None and len(order) == len(knots) else "inconclusive"
    return IndependenceCertificate(
        knots,
        tuple(f.id for f in funcs),
        tuple(tuple(r) for r in matrix),
        tuple(order) if order is not None else None,
        verdict,
        selection,
        any(K.uses_declared() for K in knots),
    )


# ---------------------------------------------------------------------------
# reports


@dataclass(frozen=True)
class DeltaReport:
    n: int
    poly: object
    value_at_one: Fraction
    irreducible: bool
    real_roots: tuple[IsolatingInterval, ...]
    circle_pairs: int
    matrix: SeifertMatrix
    jump: int
    murasugi: MurasugiVerdict

    @property
    def ag_bound(self) -> Fraction:
        return Fraction(abs(self.jump), 4)

    def to_text(self) -> str:
        roots = "; ".join(f"({iv.lo}, {iv.hi})" for iv in self.real_roots)
        rows = " / ".join(" ".join(str(x) for x in r) for r in self.matrix.entries)
        m = "compatible" if self.murasugi.compatible else f"incompatible ({self.murasugi.reason})"
        return "\n".join([
            f"n: {self.n}",
            f"delta: {self.poly}",
            f"delta(1): {self.value_at_one}",
            f"irreducible: {'yes' if self.irreducible else 'no'}",
            f"real_roots: {roots}",
            f"negative_real_roots: {sum(1 for iv in self.real_roots if iv.hi <= 0)}",
            f"unit_circle_pairs: {self.circle_pairs}",
            f"seifert_matrix: {rows}",
            f"jump_at_omega: {self.jump}",
            f"murasugi: {m}",
            f"ag_lower: {self.ag_bound}",
            f"ag_lower_int: {_ceil(self.ag_bound)}",
        ]) + "\n"


def deltan_report(n: int) -> DeltaReport:
    d = delta_n(n)
    V = delta_matrix(n)
    return DeltaReport(
        n=n,
        poly=d,
        value_at_one=eval_rational(d, 1),
        irreducible=irreducible_over_q(d),
        real_roots=tuple(sturm_isolate_real_roots(d)),
        circle_pairs=count_unit_circle_root_pairs(d),
        matrix=V,
        jump=_jump_matrix(V, n),
        murasugi=murasugi_alternating_test(d),
    )


@dataclass(frozen=True)
class ObstructionReport:
    expr: KnotExpr
    witnesses: tuple[Witness, ...]
    signed: tuple[tuple[str, Sign], ...] = ()
    declared_dependent: bool = False

    @property
    def obstructed(self) -> bool:
        return bool(self.witnesses or self.signed)

    def to_text(self) -> str:
        lines = [f"knot: {self.expr.render()}"]
        if not self.obstructed:
            lines.append("no obstruction found")
        for w in self.witnesses:
            lines.append(f"witness: {w.describe()}")
        for hid, s in self.signed:
            lines.append(f"witness: {hid} is {s}")
        if self.declared_dependent:
            lines.append(f"warning: {DECLARED_WATERMARK}")
        return "\n".join(lines) + "\n"


def alternating_obstruction(K: KnotExpr) -> ObstructionReport:
    """Every available certificate that ``K`` is not concordant to an alternating knot."""
    vals, _ = _agreeing_values(K, crossing_only=False)
    # collapse maps with identical ids
    seen = {}
    for h, v in vals:
        seen.setdefault(h.id, (h, v))
    vals = list(seen.values())
    wit = []
    for i, (h1, v1) in enumerate(vals):
        for h2, v2 in vals[i + 1:]:
            if v1 != v2:
                wit.append(Witness((h1.id, h2.id), (v1, v2), v1 - v2, 2))
    signed = []
    for n in _jump_indices(K):
        h = jump_functional(n)
        try:
            v = h(K)
        except MissingInvariantData:
            continue
        if isinstance(v, Sign):
            if v != Sign.ZERO:
                signed.append((h.id, v))
        elif v:
            wit.append(Witness((h.id,), (v,), v, 4))
    for a in K.atoms:
        if isinstance(a, Declared):
            for hid in sorted(a.data.facts):
                try:
                    v = get_functional(hid)(K)
                except MissingInvariantData:
                    continue
                if isinstance(v, Sign) and v != Sign.ZERO:
                    signed.append((hid, v))
                elif not isinstance(v, Sign) and v:
                    wit.append(Witness((hid,), (v,), v, get_functional(hid).genus_constant))
    return ObstructionReport(K, tuple(wit), tuple(signed), K.uses_declared())
