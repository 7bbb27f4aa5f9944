import pytest
from hypothesis import given, strategies as st

from motwedge.errors import ParseError, UnknownName
from motwedge.grading import (
    G_STEP, P_STEP, ZERO, TriDegree, chow_zero_lift, classical_vanishes, degree_of, dump_generator_table,
    generator_table, lookup_generator, parse_generator_table, v_degree, wedge_member_degree)

degrees = st.builds(TriDegree, st.integers(-200, 200), st.integers(-200, 200), st.integers(-200, 200))


def test_addition_examples():
    assert ZERO + TriDegree(40, 8, 23) == TriDegree(40, 8, 23)
    assert degree_of("d0") + degree_of("e0") == TriDegree(31, 8, 18)
    assert degree_of("tau") + degree_of("g") * 2 == degree_of("tau*g^2") == TriDegree(40, 8, 23)


def test_chow_and_coweight():
    assert (ZERO.chow, ZERO.coweight) == (0, 0)
    assert (degree_of("e0").chow, degree_of("e0").coweight) == (1, 7)
    assert (degree_of("g").chow, degree_of("g").coweight) == (0, 8)


@given(degrees, degrees, degrees)
def test_addition_is_a_commutative_monoid(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert a + ZERO == a


@given(degrees, degrees)
def test_chow_and_coweight_are_additive(a, b):
    assert (a + b).chow == a.chow + b.chow
    assert (a + b).coweight == a.coweight + b.coweight


@given(st.integers(0, 500), st.integers(0, 500))
def test_chow_zero_lift_lands_in_chow_zero(s, f):
    assert chow_zero_lift(s, f).chow == 0


@pytest.mark.parametrize("j", range(21))
def test_lift_matches_parameterized_rows(j):
    assert chow_zero_lift(8 * j + 1, 4 * j + 1) == degree_of(f"h2*g^{j}") == TriDegree(20 * j + 3, 4 * j + 1, 12 * j + 2)
    assert chow_zero_lift(8 * j, 4 * j) == G_STEP * j
    assert classical_vanishes(8 * j, 4 * j)
    assert degree_of(f"P^{j}*h1") == TriDegree(8 * j + 1, 4 * j + 1, 4 * j + 1)
    assert degree_of(f"P^{j}*d0") == wedge_member_degree("d0", j, 0) == TriDegree(8 * j + 14, 4 * j + 4, 4 * j + 8)
    assert degree_of(f"P^{j}*e0") == TriDegree(8 * j + 17, 4 * j + 4, 4 * j + 10)


def test_table_rows():
    assert degree_of("τg²") == TriDegree(40, 8, 23)
    assert degree_of("d₀e₀r") == TriDegree(61, 14, 34)
    assert degree_of("i") == TriDegree(23, 7, 12)
    assert degree_of("tau*Delta_h1*d0*e0") == TriDegree(56, 13, 30)
    assert v_degree(4) == TriDegree(30, 1, 15) == degree_of("v4")


def test_wedge_member_degree():
    assert wedge_member_degree("tau*g^2", 0, 0) == TriDegree(40, 8, 23)
    assert wedge_member_degree("tau*g^2", 1, 1) == TriDegree(68, 16, 39)
    assert wedge_member_degree("tau*Dh1*g", 1, 0) == TriDegree(53, 13, 28)
    assert wedge_member_degree(TriDegree(1, 2, 3), 2, 0) == TriDegree(1, 2, 3) + P_STEP * 2


def test_derived_atoms_are_consistent_with_products():
    n = degree_of("n")
    assert degree_of("r") == n * 2
    assert degree_of("i") == degree_of("P") + n
    assert degree_of("k") == degree_of("d0") + n
    assert degree_of("m") == degree_of("g") + n
    assert degree_of("d0*l") == degree_of("d0") + degree_of("l")


def test_opaque_symbols_have_no_degree():
    info = lookup_generator("x_j")
    assert info.degree is None
    with pytest.raises(UnknownName):
        degree_of("x_j")
    with pytest.raises(UnknownName):
        lookup_generator("qq")


def test_every_used_symbol_resolves():
    for name in ["tau", "h1", "h2", "P", "g", "d0", "e0", "Dh1", "n", "l", "m", "r", "i", "k",
                 "a1", "v1^4", "v2", "v7", "Dh1*d0", "Dh1*e0"]:
        assert lookup_generator(name).degree is not None, name


def test_table_round_trip_and_unique_names():
    table = generator_table()
    text = dump_generator_table(table)
    assert parse_generator_table(text) == table
    with pytest.raises(ParseError):
        parse_generator_table("a\t1\t1\t1\tx\na\t1\t1\t1\tx\n")


def test_data_dir_override(tmp_path, monkeypatch):
    (tmp_path / "generators.tsv").write_text("zz\t1\t2\t3\tlocal\n", encoding="utf-8")
    monkeypatch.setenv("MOTWEDGE_DATA_DIR", str(tmp_path))
    assert degree_of("zz") == TriDegree(1, 2, 3)
