from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cases import MALFORMED
from harmonic_congruences.catalog import NESTED_FORMS, builtin_catalog, nested_variant
from harmonic_congruences.dsl import (
    Add, Bernoulli, Const, Div, Harmonic, Mul, Neg, Pow, Prime, Sub, Sum, Var,
    parse_catalog, parse_congruence, parse_expr, print_congruence, print_expr,
)
from harmonic_congruences.errors import ParseError

CON7 = "c1 | p>5 | sum(k=1..p-1, H(k)/(k*2^k)) === (7/24)*p*B(p-3) (mod p^2)"


def test_con7_example():
    spec = parse_congruence(CON7)
    assert spec.id == "c1"
    assert spec.mod_exponent == 2
    assert spec.min_prime == 5
    assert spec.forall is None
    assert isinstance(spec.lhs, Sum) and spec.lhs.var == "k"
    assert spec.rhs == Mul(Mul(Const(Fraction(7, 24)), Prime()), Bernoulli(Sub(Prime(), Const(Fraction(3)))))


def test_trivial_spec():
    spec = parse_congruence("t | p>3 | 0 === 0 (mod p)")
    assert (spec.lhs, spec.rhs, spec.mod_exponent, spec.min_prime) == (Const(Fraction(0)), Const(Fraction(0)), 1, 3)


def test_harmonic_default_order():
    assert parse_expr("H(p)") == parse_expr("H(p, 1)") == Harmonic(Prime(), 1)


def test_precedence_and_associativity():
    assert parse_expr("1 - 2 - 3") == Sub(Sub(Const(Fraction(1)), Const(Fraction(2))), Const(Fraction(3)))
    assert parse_expr("2^3^2") == Pow(Const(Fraction(2)), Pow(Const(Fraction(3)), Const(Fraction(2))))
    assert parse_expr("-p^2") == Neg(Pow(Prime(), Const(Fraction(2))))
    assert parse_expr("p/2*3") == Mul(Div(Prime(), Const(Fraction(2))), Const(Fraction(3)))


def test_neg_rational_prints():
    assert print_expr(Neg(Const(Fraction(1, 3)))) == "-(1/3)"
    assert parse_expr("-(1/3)") == Neg(Const(Fraction(1, 3)))


def test_integer_division_keeps_shape():
    e = Div(Const(Fraction(1)), Const(Fraction(3)))
    assert parse_expr(print_expr(Mul(Prime(), e))) == Mul(Prime(), e)


def test_whitespace_normalized():
    messy = "c1|p>5|sum( k = 1 .. p-1 ,H( k )/( k*2 ^k ) )===(7/24) * p*B( p - 3 )(mod  p ^ 2)"
    assert print_congruence(parse_congruence(messy)) == print_congruence(parse_congruence(CON7))
    text = print_congruence(parse_congruence(messy))
    assert "  " not in text
    assert text == "c1 | p>5 | sum(k=1..p - 1, H(k)/(k*2^k)) === (7/24)*p*B(p - 3) (mod p^2)"


@pytest.mark.parametrize("spec", builtin_catalog(), ids=lambda s: s.id)
def test_round_trip_builtin(spec):
    text = print_congruence(spec)
    again = parse_congruence(text)
    assert again == spec
    assert print_congruence(again) == text


@pytest.mark.parametrize("cid", sorted(NESTED_FORMS))
def test_round_trip_nested(cid):
    spec = nested_variant(next(s for s in builtin_catalog() if s.id == cid))
    assert parse_congruence(print_congruence(spec)) == spec


def test_forall_mod_inside_parens():
    inside = "f | p>3 | forall(k=1..p-1, H(k) === H(p-k-1) (mod p))"
    outside = "f | p>3 | forall(k=1..p-1, H(k) === H(p-k-1)) (mod p)"
    assert parse_congruence(inside) == parse_congruence(outside)


@pytest.mark.parametrize("text, fragment", MALFORMED)
def test_malformed(text, fragment):
    with pytest.raises(ParseError) as info:
        parse_congruence(text)
    err = info.value
    assert fragment in str(err)
    assert err.line >= 1 and err.column >= 1
    assert str(err).startswith(f"{err.line}:{err.column}:")


def test_catalog_errors_report_line():
    text = "# header\n\nok | p>3 | 0 === 0 (mod p)\nbad | p>3 | 0 === (mod p)\n"
    with pytest.raises(ParseError) as info:
        parse_catalog(text)
    assert info.value.line == 4


def test_catalog_duplicate_ids():
    with pytest.raises(ParseError):
        parse_catalog("a | p>3 | 0 === 0 (mod p)\na | p>3 | 1 === 1 (mod p)\n")


def test_catalog_comments_and_blanks():
    specs = parse_catalog("# c\n\n a | p>3 | 0 === 0 (mod p)  # trailing\n\n")
    assert [s.id for s in specs] == ["a"]


def test_reserved_names():
    with pytest.raises(ParseError):
        parse_expr("sum(p=1..3, p)")


# random expression trees for the round-trip property
_atoms = st.one_of(
    st.fractions(min_value=0, max_value=50, max_denominator=9).map(Const),
    st.just(Prime()),
    st.builds(Harmonic, st.just(Var("k")), st.integers(1, 3)),
    st.builds(Bernoulli, st.just(Sub(Prime(), Const(Fraction(3))))),
    st.just(Var("k")),
)


def _extend(children):
    return st.one_of(
        st.builds(Add, children, children),
        st.builds(Sub, children, children),
        st.builds(Mul, children, children),
        st.builds(Div, children, children),
        st.builds(Neg, children),
        st.builds(Pow, children, st.sampled_from([Const(Fraction(2)), Var("k"), Neg(Const(Fraction(1)))])),
    )


@given(st.recursive(_atoms, _extend, max_leaves=12))
def test_round_trip_random(expr):
    wrapped = Sum("k", Const(Fraction(1)), Sub(Prime(), Const(Fraction(1))), expr)
    assert parse_expr(print_expr(wrapped)) == wrapped
