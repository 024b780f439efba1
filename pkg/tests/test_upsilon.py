from fractions import Fraction
from math import gcd

import pytest
import sympy
from hypothesis import assume, given, settings, strategies as st

from altknots.concordance import expr_upsilon
from altknots.knots import KnotExpr, Torus
from altknots.poly import IntLaurentPoly, symmetric_normalize
from altknots.upsilon import (
    NotCoprime,
    NotStaircaseForm,
    PLFunction,
    Semigroup,
    Staircase,
    first_singularity,
    pl_arithmetic,
    psi,
    singularities,
    staircase_from_alexander,
    torus_alexander,
    torus_upsilon,
    upsilon_brute,
    upsilon_from_staircase,
)

PROPS = settings(max_examples=100, deadline=None, derandomize=True)
F = Fraction

torus_pairs = st.tuples(st.integers(2, 9), st.integers(3, 14)).filter(
    lambda pq: pq[0] < pq[1] and gcd(*pq) == 1
)
t_in_domain = st.builds(Fraction, st.integers(0, 240), st.just(120))


@st.composite
def torus_sum(draw):
    terms = draw(st.lists(st.tuples(st.integers(-3, 3), torus_pairs), min_size=1, max_size=3))
    return KnotExpr((c, Torus(p, q)) for c, (p, q) in terms)


# --- PL functions ----------------------------------------------------------------


def test_pl_function_basics():
    f = PLFunction.from_pairs([(0, 0), (F(1, 2), -1), (1, -2), (2, 0)])
    assert f.breakpoints == (0, 1, 2)  # collinear point pruned
    assert f(F(1, 4)) == F(-1, 2)
    assert f.over_t(0) == -2 and f.over_t(1) == -2
    assert PLFunction.from_text(f.to_text()) == f
    with pytest.raises(ValueError):
        f(F(5, 2))
    with pytest.raises(ValueError):
        PLFunction.from_pairs([(0, 1), (2, 0)])


@PROPS
@given(torus_pairs, torus_pairs, t_in_domain)
def test_pl_algebra_is_pointwise(a, b, t):
    f, g = torus_upsilon(*a), torus_upsilon(*b)
    assert (f + g)(t) == f(t) + g(t)
    assert (f - g)(t) == f(t) - g(t)
    assert (-f)(t) == -f(t)
    assert f.scale(3)(t) == 3 * f(t)
    assert pl_arithmetic(f, g, "add") == f + g
    assert pl_arithmetic(f, None, "scale", k=0) == PLFunction.zero()


# --- semigroups and torus Alexander polynomials ------------------------------------------


@PROPS
@given(torus_pairs)
def test_semigroup_gap_count_is_genus(pq):
    p, q = pq
    S = Semigroup(p, q)
    assert len(S.gaps()) == (p - 1) * (q - 1) // 2
    assert S.frobenius not in S and S.frobenius + 1 in S


@PROPS
@given(torus_pairs)
def test_torus_alexander_against_semigroup_and_sympy(pq):
    p, q = pq
    d = torus_alexander(p, q)
    # 1 - (1 - t) sum over gaps of t^gap
    gaps = Semigroup(p, q).gaps()
    semi = IntLaurentPoly.const(1) - IntLaurentPoly.from_list([1, -1]) * IntLaurentPoly(
        {g: 1 for g in gaps}
    )
    assert d == symmetric_normalize(semi)
    t = sympy.Symbol("t")
    quo = sympy.Poly(sympy.cancel((t ** (p * q) - 1) * (t - 1) / ((t**p - 1) * (t**q - 1))), t)
    assert d == symmetric_normalize(IntLaurentPoly({m[0]: int(c) for m, c in zip(quo.monoms(), quo.coeffs())}))


def test_torus_alexander_errors():
    with pytest.raises(NotCoprime):
        torus_alexander(4, 6)
    with pytest.raises(NotCoprime):
        Semigroup(4, 6)


# --- staircases ------------------------------------------------------------------------


def test_staircase_t37():
    S = staircase_from_alexander(torus_alexander(3, 7))
    assert S.generators == ((0, 6), (1, 4), (2, 2), (4, 1), (6, 0))
    assert S.genus == 6
    with pytest.raises(NotStaircaseForm):
        staircase_from_alexander(IntLaurentPoly({1: 1, 0: -3, -1: 1}))
    with pytest.raises(ValueError):
        Staircase(((0, 2), (1, 3)))


@PROPS
@given(torus_pairs, t_in_domain)
def test_envelope_against_brute_force(pq, t):
    S = staircase_from_alexander(torus_alexander(*pq))
    assert upsilon_from_staircase(S)(t) == upsilon_brute(S, t)


@pytest.mark.parametrize(
    "p,q,text",
    [
        (3, 4, "0:0, 2/3:-2, 4/3:-2, 2:0"),
        (3, 7, "0:0, 2/3:-4, 4/3:-4, 2:0"),
        (4, 5, "0:0, 1/2:-3, 1:-4, 3/2:-3, 2:0"),
        (2, 3, "0:0, 1:-1, 2:0"),
    ],
)
def test_torus_upsilon_values(p, q, text):
    assert torus_upsilon(p, q).to_text() == text


# --- Upsilon as a homomorphism -------------------------------------------------------------


@PROPS
@given(torus_pairs, t_in_domain)
def test_symmetry_and_initial_slope(pq, t):
    p, q = pq
    f = torus_upsilon(p, q)
    assert f(t) == f(2 - t)
    assert f.initial_slope == -F((p - 1) * (q - 1), 2)
    assert f(t) <= 0


@PROPS
@given(torus_sum(), torus_sum(), t_in_domain)
def test_additivity_and_mirror(K1, K2, t):
    u1, u2 = expr_upsilon(K1), expr_upsilon(K2)
    assert expr_upsilon(K1 + K2)(t) == u1(t) + u2(t)
    assert expr_upsilon(-K1)(t) == -u1(t)
    assert expr_upsilon(K1 - K1) == PLFunction.zero()


@PROPS
@given(st.sampled_from(range(3, 41, 2)), st.integers(1, 120))
def test_alternating_torus_knots_are_linear_on_unit_interval(q, k):
    t = F(k, 120)
    assert torus_upsilon(2, q).over_t(t) == -F(q - 1, 2)


# --- psi and singularities -------------------------------------------------------------------


def test_psi_examples():
    K = KnotExpr([(1, Torus(3, 7)), (-1, Torus(4, 5))])
    f = expr_upsilon(K)
    assert psi(0, F(2, 3), f) == 1
    assert psi(F(1, 2), 1, torus_upsilon(2, 9)) == 0
    with pytest.raises(ValueError):
        psi(0, 0, f)


@pytest.mark.parametrize("p", range(3, 12))
def test_first_singularity_of_t_p_p1(p):
    f = torus_upsilon(p, p + 1)
    assert first_singularity(f) == F(2, p)
    assert F(4, p) in singularities(f) or F(4, p) >= 1


def test_no_singularity_for_t2q():
    assert first_singularity(torus_upsilon(2, 7)) == 1
    assert first_singularity(PLFunction.zero()) is None
