from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from altknots.poly import (
    IntLaurentPoly,
    NotSymmetric,
    RootAtPlusMinusOne,
    UnsupportedDegree,
    ZeroDenominator,
    ZeroPolynomial,
    chebyshev_expand,
    chebyshev_reduce,
    count_real_roots,
    count_unit_circle_root_pairs,
    delta_n,
    eval_rational,
    format_poly,
    irreducible_over_q,
    is_symmetric,
    laurent_arithmetic,
    parse_poly,
    refine_interval,
    sturm_isolate_real_roots,
    symmetric_normalize,
)

T = sympy.Symbol("t")
PROPS = settings(max_examples=150, deadline=None, derandomize=True)


def to_sympy(p: IntLaurentPoly):
    return sum(c * T**e for e, c in p.items())


def dense_poly(p: IntLaurentPoly) -> sympy.Poly:
    return sympy.Poly(to_sympy(p.shift(-min(p.low, 0))), T)


laurent = st.dictionaries(st.integers(-4, 4), st.integers(-9, 9), max_size=6).map(IntLaurentPoly)
ordinary = st.lists(st.integers(-9, 9), min_size=2, max_size=7).map(IntLaurentPoly.from_list)


# --- text format -----------------------------------------------------------


def test_parse_and_format():
    p = parse_poly("t^4 + 2*t^3 - 5*t^2 + 2*t + 1")
    assert p.coeffs == {4: 1, 3: 2, 2: -5, 1: 2, 0: 1}
    assert format_poly(p) == "t^4 + 2*t^3 - 5*t^2 + 2*t + 1"
    q = parse_poly("-t + 3 - t^-1")
    assert q.coeffs == {1: -1, 0: 3, -1: -1}
    assert parse_poly(format_poly(q)) == q


@PROPS
@given(laurent)
def test_format_round_trip(p):
    assert parse_poly(format_poly(p)) == p


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        parse_poly("t^^2 + 1")


# --- ring structure ----------------------------------------------------------


@PROPS
@given(laurent, laurent, laurent)
def test_ring_laws_by_evaluation(a, b, c):
    assert a * (b + c) == a * b + a * c
    for x in (Fraction(2, 3), Fraction(-5, 7)):
        assert eval_rational(a * b, x) == eval_rational(a, x) * eval_rational(b, x)
        assert eval_rational(a - c, x) == eval_rational(a, x) - eval_rational(c, x)
    assert laurent_arithmetic(a, b, "mul") == a * b
    assert laurent_arithmetic(a, None, "mirror")(Fraction(3)) == a(Fraction(1, 3))
    assert laurent_arithmetic(a, None, "neg") == -a


def test_eval_rational():
    p = parse_poly("t^2 - 3 + 2*t^-1")
    assert eval_rational(p, Fraction(1, 2)) == Fraction(1, 4) - 3 + 4
    with pytest.raises(ZeroDenominator):
        eval_rational(p, 0)


# --- symmetric normalization --------------------------------------------------


def test_symmetric_normalize_trefoil_and_figure_eight():
    assert symmetric_normalize(parse_poly("t^2 - t + 1")) == parse_poly("t - 1 + t^-1")
    assert symmetric_normalize(parse_poly("-t^3 + 3*t^2 - t")) == parse_poly("t - 3 + t^-1")
    assert not is_symmetric(parse_poly("t^2 + 2*t + 3"))
    with pytest.raises(NotSymmetric):
        symmetric_normalize(parse_poly("t + 2"))


@PROPS
@given(laurent, st.integers(-5, 5), st.sampled_from([1, -1]))
def test_normalize_ignores_units(p, k, sign):
    sym = p + p.mirror()
    if sym.is_zero():
        return
    n = symmetric_normalize(sym)
    assert symmetric_normalize(sym.shift(k) * sign) == n
    assert n == n.mirror() and n.leading > 0


# --- Sturm ---------------------------------------------------------------------


def _grid_sign_changes(p: IntLaurentPoly, lo: int, hi: int) -> int:
    """Sign changes of p on the half-integer grid in (lo, hi)."""
    pts = [Fraction(2 * k + 1, 2) for k in range(lo, hi)]
    vals = [eval_rational(p, x) for x in pts]
    return sum(1 for a, b in zip(vals, vals[1:]) if a * b < 0)


@PROPS
@given(
    st.sets(st.integers(-8, 8), min_size=1, max_size=5),
    st.integers(1, 5),
    st.integers(-3, 3),
    st.integers(-10, 10),
    st.integers(1, 10),
)
def test_sturm_count_against_two_oracles(roots, c, b, lo, width):
    # integer roots times a quadratic with no real roots
    p = IntLaurentPoly.const(1)
    for r in roots:
        p = p * IntLaurentPoly.from_list([-r, 1])
    p = p * IntLaurentPoly.from_list([b * b + c, 2 * b, 1])  # (t + b)^2 + c
    a, z = Fraction(2 * lo + 1, 2), Fraction(2 * (lo + width) + 1, 2)
    ours = count_real_roots(p, a, z)
    # sympy: closed interval, endpoints are half-integers so never roots
    assert ours == dense_poly(p).count_roots(a, z)
    assert ours == sum(1 for r in roots if a < r < z)
    # sign changes on the half-integer grid see exactly the simple integer roots
    assert ours == _grid_sign_changes(p, lo, lo + width + 1)


@PROPS
@given(ordinary)
def test_isolation_against_sympy_roots(p):
    if p.is_zero() or (p.high - min(p.low, 0)) < 1:
        return
    ivs = sturm_isolate_real_roots(p)
    sp = dense_poly(p)
    real = sympy.real_roots(sp)
    distinct = sorted(set(real), key=lambda r: float(r))
    assert len(ivs) == len(distinct)
    mult = {r: real.count(r) for r in distinct}
    for iv, r in zip(ivs, distinct):
        assert iv.lo < r < iv.hi
        assert iv.multiplicity == mult[r]


def test_isolation_examples():
    ivs = sturm_isolate_real_roots(parse_poly("t^2 - 2"))
    assert len(ivs) == 2 and ivs[0].hi <= 0 <= ivs[1].lo
    ivs = sturm_isolate_real_roots(parse_poly("t^3 - 2*t^2 + t"))
    assert [iv.multiplicity for iv in ivs] == [1, 2]
    with pytest.raises(ZeroPolynomial):
        sturm_isolate_real_roots(IntLaurentPoly())


def test_refine_interval():
    p = parse_poly("t^2 - 2")
    iv = sturm_isolate_real_roots(p)[1]
    r = refine_interval(p, iv, Fraction(1, 10**6))
    assert r.width < Fraction(1, 10**6)
    assert r.lo < Fraction(14142136, 10**7) and r.hi > Fraction(14142135, 10**7)
    # exact rational root found mid-bisection stays isolated
    q = parse_poly("2*t - 1") * parse_poly("t^2 + 1")
    iv = sturm_isolate_real_roots(q)[0]
    r = refine_interval(q, iv, Fraction(1, 1000))
    assert r.lo < Fraction(1, 2) < r.hi and r.width < Fraction(1, 1000)


# --- irreducibility ------------------------------------------------------------


@PROPS
@given(st.lists(st.integers(-6, 6), min_size=2, max_size=5))
def test_irreducible_against_sympy(coeffs):
    p = IntLaurentPoly.from_list(coeffs)
    if p.is_zero():
        return
    deg = p.high - p.low
    if deg == 0:
        assert not irreducible_over_q(p)
        return
    expected = sympy.Poly(to_sympy(p.shift(-p.low)), T).is_irreducible
    assert irreducible_over_q(p) == expected


def test_irreducible_examples():
    assert irreducible_over_q(delta_n(1))
    assert not irreducible_over_q(parse_poly("t^4 + t^2 + 1"))  # (t^2+t+1)(t^2-t+1)
    assert not irreducible_over_q(parse_poly("t^4 - 4"))
    with pytest.raises(UnsupportedDegree):
        irreducible_over_q(IntLaurentPoly.from_list([1, 0, 0, 0, 0, 1]))


# --- t + 1/t reduction -----------------------------------------------------------


@PROPS
@given(st.lists(st.integers(-6, 6), min_size=1, max_size=4))
def test_chebyshev_round_trip(coeffs):
    q = IntLaurentPoly.from_list(coeffs)
    if q.is_zero():
        return
    p = chebyshev_expand(q)
    assert chebyshev_reduce(p) == (q if q.leading > 0 else -q)


@settings(max_examples=100, deadline=None, derandomize=True)
@given(st.lists(st.integers(-5, 5), min_size=2, max_size=4))
def test_unit_circle_pairs_against_numeric_roots(coeffs):
    q = IntLaurentPoly.from_list(coeffs)
    if q.is_zero() or q.high < 1:
        return
    p = chebyshev_expand(q)
    if eval_rational(p, 1) == 0 or eval_rational(p, -1) == 0:
        with pytest.raises(RootAtPlusMinusOne):
            count_unit_circle_root_pairs(p)
        return
    sp = dense_poly(p)
    if sympy.discriminant(sp) == 0:
        return  # repeated roots make the numeric count ambiguous
    upper = [z for z in sp.nroots(n=30) if abs(abs(z) - 1) < 1e-12 and sympy.im(z) > 0]
    assert count_unit_circle_root_pairs(p) == len(upper)


def test_delta_n_shape():
    d = delta_n(3)
    assert d == parse_poly("t^4 + 3*t^3 - 7*t^2 + 3*t + 1")
    assert chebyshev_reduce(d) == parse_poly("t^2 + 3*t - 9")
    with pytest.raises(ValueError):
        delta_n(0)
