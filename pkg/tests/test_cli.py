import io
import xml.etree.ElementTree as ET
from decimal import Decimal
from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from altknots.cli import main
from altknots.concordance import expr_upsilon
from altknots.knots import Declared, DeltaKnot, KnotExpr, MatrixKnot, Torus, delta_matrix
from altknots.parse import ParseError, parse_expr
from altknots.render import format_decimal, sample_grid
from altknots.upsilon import NotCoprime, PLFunction


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


# --- parser -----------------------------------------------------------------------------------


def test_parse_examples():
    e = parse_expr("T(3,7) - T(4,5)")
    assert e.terms == ((1, Torus(3, 7)), (-1, Torus(4, 5)))
    e = parse_expr("2*T(3,7) + 3*K[2]")
    assert e.coefficient(Torus(3, 7)) == 2 and e.coefficient(DeltaKnot(2)) == 3
    assert parse_expr("  T(7 , 3)#-T(4,5) ") == parse_expr("T(3,7) - T(4,5)")
    assert parse_expr("T(3,4) + T(3,4) - 2*T(3,4)").is_unknot()
    assert parse_expr("") == parse_expr("0") == KnotExpr()
    assert parse_expr("-D(Wh+(T(2,3),0))").terms == ((-1, Declared("Wh+(T(2,3),0)")),)


def test_parse_errors_carry_position():
    with pytest.raises(NotCoprime):
        parse_expr("T(4,6)")
    with pytest.raises(ParseError) as exc:
        parse_expr("T(3,7) +\n  X(1)")
    assert (exc.value.line, exc.value.column) == (2, 3)
    with pytest.raises(ParseError) as exc:
        parse_expr("T(3,7")
    assert exc.value.column == 6
    with pytest.raises(ParseError):
        parse_expr("D(no such knot)")
    with pytest.raises(ParseError):
        parse_expr("K[0]")
    with pytest.raises(ParseError):
        parse_expr("T(3,7) T(4,5)")


def test_parse_matrix_atoms(tmp_path):
    (tmp_path / "k1.txt").write_text(delta_matrix(1).to_text())
    (tmp_path / "bad.txt").write_text("2\n1 0\n0 1\n")
    e = parse_expr("M(k1.txt) - K[1]", matrix_dir=tmp_path)
    (atom,) = [a for a in e.atoms if isinstance(a, MatrixKnot)]
    assert atom.matrix == delta_matrix(1)
    with pytest.raises(ParseError, match="bad matrix"):
        parse_expr("M(bad.txt)", matrix_dir=tmp_path)
    with pytest.raises(ParseError, match="not found"):
        parse_expr("M(missing.txt)", matrix_dir=tmp_path)


atoms = st.one_of(
    st.tuples(st.integers(2, 9), st.integers(3, 15))
    .filter(lambda pq: pq[0] < pq[1] and gcd(*pq) == 1)
    .map(lambda pq: Torus(*pq)),
    st.integers(1, 20).map(DeltaKnot),
    st.sampled_from(["Wh+(T(2,3),0)", "Wh+(T(2,3),2)", "TS[2]", "TS[7]"]).map(Declared),
)
exprs = st.lists(st.tuples(st.integers(-5, 5), atoms), max_size=5).map(KnotExpr)


@settings(max_examples=150, deadline=None, derandomize=True)
@given(exprs)
def test_render_parse_round_trip(e):
    text = e.render()
    assert parse_expr(text) == e
    assert parse_expr(text).render() == text


# --- upsilon command ---------------------------------------------------------------------------


def test_upsilon_breakpoints_t37_minus_t45():
    code, out, _ = run("upsilon", "T(3,7) - T(4,5)")
    assert code == 0
    rows = {Fraction(t): (Fraction(u), Fraction(q)) for t, u, q in (ln.split() for ln in out.splitlines()[1:])}
    assert rows[Fraction(0)][1] == 0
    assert abs(rows[Fraction(2, 3)][1]) == 1


def test_upsilon_trefoil_and_empty():
    _, out, _ = run("upsilon", "T(2,3)")
    f = PLFunction.from_pairs((Fraction(t), Fraction(u)) for t, u, _ in (ln.split() for ln in out.splitlines()[1:]))
    assert all(f.over_t(Fraction(k, 50)) == -1 for k in range(1, 51))
    code, out, _ = run("upsilon", "")
    assert code == 0 and out.splitlines()[1:] == ["0 0 0", "2 0 0"]


def test_csv_lies_on_exact_function():
    expr = "T(3,7) - T(2,11)"
    code, out, _ = run("upsilon", expr, "--format", "csv", "--grid", "1/30", "--digits", "8")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "t,upsilon,upsilon_over_t"
    f = expr_upsilon(parse_expr(expr))
    grid = sample_grid(Fraction(1, 30))
    assert len(lines) - 1 == len(grid) == 60
    for t, line in zip(grid, lines[1:]):
        assert line.split(",") == [format_decimal(x, 8) for x in (t, f(t), f.over_t(t))]


def test_csv_default_grid():
    _, out, _ = run("upsilon", "T(3,4)", "--format", "csv")
    lines = out.splitlines()
    assert len(lines) == 241 and lines[-1] == "2,0,0"
    assert Decimal(lines[1].split(",")[0]) == Decimal("0.00833333")


def test_svg_is_self_contained(tmp_path):
    target = tmp_path / "fig.svg"
    code, out, _ = run("upsilon", "T(3,7) - T(4,5)", "--format", "svg", "-o", str(target))
    assert code == 0 and out == ""
    root = ET.fromstring(target.read_text())
    ns = "{http://www.w3.org/2000/svg}"
    assert root.tag == ns + "svg"
    assert root.find(ns + "polyline") is not None
    assert len(root.findall(ns + "circle")) == len(expr_upsilon(parse_expr("T(3,7) - T(4,5)")).breakpoints) - 2
    assert len(root.findall(ns + "line")) >= 2
    assert "href" not in target.read_text()


def test_upsilon_errors():
    assert run("upsilon", "T(4,6)")[0] == 1
    assert run("upsilon", "T(3,4)", "--grid", "0")[0] == 1
    assert run("upsilon", "T(3,4)", "--grid", "abc")[0] == 1
    code, _, err = run("upsilon", "K[1]")
    assert code == 2 and "missing data" in err


# --- other commands --------------------------------------------------------------------------------


def _field(out, key):
    return next(ln.split(": ", 1)[1] for ln in out.splitlines() if ln.startswith(key + ": "))


def test_bound_command():
    code, out, _ = run("bound", "T(3,7) - T(2,11)")
    assert code == 0 and Fraction(_field(out, "as_lower")) >= 2
    _, out, _ = run("bound", "T(3,7)")
    assert Fraction(_field(out, "ag_lower")) >= 1
    _, out, _ = run("bound", "T(2,9)")
    assert _field(out, "ag_lower") == "0" and _field(out, "as_lower") == "0"
    assert run("bound", "M(4_1.txt)", "--matrix-dir", "/nonexistent")[0] == 1


def test_independent_command():
    code, out, _ = run("independent", "T(3,4)", "T(4,5)", "T(5,6)")
    assert code == 0 and _field(out, "verdict") == "independent"
    code, out, _ = run("independent", "T(2,3)", "T(2,5)")
    assert code == 2 and _field(out, "verdict") == "inconclusive"
    code, out, _ = run("independent", "T(3,4)", "T(4,5)", "--functionals", "psi[2/3,5/6],psi[1/2,7/12]")
    assert code == 0 and _field(out, "selection") == "explicit"
    assert _field(out, "functionals") == "psi[2/3,5/6]; psi[1/2,7/12]"
    code, _, err = run("independent", "T(3,4)", "--functionals", "bogus")
    assert code == 1 and "unknown functional" in err


def test_deltan_and_obstruct_commands():
    code, out, _ = run("deltan", "1")
    assert code == 0 and abs(int(_field(out, "jump_at_omega"))) == 2
    code, out, _ = run("obstruct", "T(2,7)")
    assert code == 0 and "no obstruction found" in out
    assert run("deltan", "0")[0] == 1
    assert run("nonsense")[0] == 1
    assert run()[0] == 1


@pytest.mark.parametrize(
    "argv",
    [
        ("upsilon", "T(3,7) - T(4,5)", "--format", "svg"),
        ("upsilon", "T(4,5)", "--format", "csv"),
        ("bound", "T(3,7) - T(4,5)"),
        ("independent", "D(TS[2])", "D(TS[3])"),
        ("deltan", "3"),
        ("obstruct", "D(Wh+(T(2,3),0))"),
    ],
)
def test_output_is_deterministic(argv):
    assert run(*argv) == run(*argv)
