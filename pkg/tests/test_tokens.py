import pytest
from hypothesis import given, strategies as st

from motwedge import tokens
from motwedge.errors import ParseError


def test_ascii_and_unicode_spellings_agree():
    assert tokens.canonical("τΔh₁e₀²") == "tau*Dh1*e0^2"
    assert tokens.canonical("Delta_h1 * e0^{2} * tau") == "tau*Dh1*e0^2"
    assert tokens.canonical("d e0") == "d0*e0"


def test_unit_and_exponent_forms():
    assert tokens.parse_product("1") == ()
    assert tokens.parse_product("") == ()
    assert tokens.parse_product("g^(3)") == (("g", 3),)
    assert tokens.parse_product("g³") == (("g", 3),)


def test_display_joins_named_products():
    assert tokens.display("tau*e0*g^2") == "τe₀g²"
    assert tokens.display("Dh1*d0.e0") == "Δh₁d₀·e₀"


@pytest.mark.parametrize("bad", ["x7", "g^", "e0^-1", "tau^g"])
def test_rejects_malformed(bad):
    with pytest.raises(ParseError):
        tokens.parse_product(bad)


factors = st.dictionaries(st.sampled_from(tokens.ATOM_ORDER), st.integers(1, 9), max_size=6)


@given(factors)
def test_format_parse_round_trip(exps):
    f = tuple(sorted(exps.items(), key=lambda kv: tokens.ATOM_ORDER.index(kv[0])))
    assert tokens.parse_product(tokens.format_product(f)) == f
    assert tokens.parse_product(tokens.format_product(f, unicode=True)) == f


@given(factors, factors)
def test_multiply_adds_exponents(a, b):
    pa = tokens.parse_product(tokens.format_product(tuple(a.items())) if a else "1")
    pb = tokens.parse_product(tokens.format_product(tuple(b.items())) if b else "1")
    prod = dict(tokens.multiply(pa, pb))
    for atom in tokens.ATOM_ORDER:
        assert prod.get(atom, 0) == a.get(atom, 0) + b.get(atom, 0)
