from itertools import product

import pytest
from hypothesis import given, strategies as st

from flagmotive.errors import InvalidMatrix, NotFiniteType, SpecSyntaxError
from flagmotive.rootdata import (
    CartanMatrix,
    format_named,
    generate_root_system,
    is_positive,
    leading_principal_minors,
    parse_root_datum,
)
from flagmotive.weyl import apply, identity, matmul, oracle_weyl_group

from conftest import NAMED_RANK_LE_4


def test_a1():
    d = parse_root_datum("A1")
    assert d.cartan.entries == ((2,),)
    assert d.torus_rank == 1


def test_pure_torus():
    d = parse_root_datum("T2")
    assert d.cartan.entries == ()
    assert d.torus_rank == 2


def test_g2_json_matrix_accepted():
    d = parse_root_datum("[[2,-1],[-3,2]]")
    assert d.cartan.entries == ((2, -1), (-3, 2))
    assert leading_principal_minors(d.cartan.entries) == [2, 1]


def test_affine_a1_rejected():
    assert leading_principal_minors(((2, -2), (-2, 2))) == [2, 0]
    with pytest.raises(NotFiniteType):
        parse_root_datum("[[2,-2],[-2,2]]")


def test_json_object_form():
    d = parse_root_datum('{"cartan": [[2,-1],[-1,2]], "torus_rank": 3, "label": "GL3"}')
    assert d.label == "GL3"
    assert d.torus_rank == 3
    assert d.central_rank == 1


@pytest.mark.parametrize(
    "spec, exc",
    [
        ("[[3]]", InvalidMatrix),
        ("[[2,1],[1,2]]", InvalidMatrix),
        ("[[2,-1],[0,2]]", InvalidMatrix),
        ("[[2,-1,0],[-1,2]]", InvalidMatrix),
        ('{"cartan": [[2]], "torus_rank": 0}', InvalidMatrix),
        ("[[2,-1,0],[-1,2,-1],[0,-2,2]]x", SpecSyntaxError),
        ("[[2,", SpecSyntaxError),
        ('{"torus_rank": 1}', SpecSyntaxError),
        ("", SpecSyntaxError),
        ("A0", SpecSyntaxError),
        ("B1", SpecSyntaxError),
        ("C2", SpecSyntaxError),
        ("D3", SpecSyntaxError),
        ("E5", SpecSyntaxError),
        ("Z3", SpecSyntaxError),
        ("A1xT1xA1", SpecSyntaxError),
        ("A1x", SpecSyntaxError),
        ("xT0", SpecSyntaxError),
        ("A1xT0", SpecSyntaxError),
        ("A 2", SpecSyntaxError),
    ],
)
def test_rejections(spec, exc):
    with pytest.raises(exc):
        parse_root_datum(spec)


def test_products_are_block_diagonal():
    d = parse_root_datum("a1xG2xT1")
    assert d.label == "A1xG2xT1"
    assert d.cartan.entries == ((2, 0, 0), (0, 2, -3), (0, -1, 2))
    assert d.torus_rank == 4


def test_named_b2_c3_matrices():
    assert parse_root_datum("B2").cartan.entries == ((2, -1), (-2, 2))
    assert parse_root_datum("C3").cartan.entries == ((2, -1, 0), (-1, 2, -2), (0, -1, 2))


def test_roots_a1():
    rs = generate_root_system(parse_root_datum("A1"))
    assert rs.positive_roots == ((1,),)
    assert rs.simple_reflections == (((-1,),),)


def test_roots_a2():
    rs = generate_root_system(parse_root_datum("A2"))
    assert set(rs.positive_roots) == {(1, 0), (0, 1), (1, 1)}


def test_roots_g2():
    assert len(generate_root_system(parse_root_datum("G2")).positive_roots) == 6


def _roots_by_orbit(rs):
    """Positive roots as W-images of simple roots, W from the brute-force oracle."""
    n = rs.rank
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    images = {apply(m, a) for m in oracle_weyl_group(rs) for a in simple}
    return {v for v in images if is_positive(v)}


@pytest.mark.parametrize("spec", NAMED_RANK_LE_4)
def test_roots_match_weyl_orbit_oracle(spec):
    rs = generate_root_system(parse_root_datum(spec))
    assert set(rs.positive_roots) == _roots_by_orbit(rs)
    assert len(set(rs.positive_roots)) == len(rs.positive_roots)


@pytest.mark.parametrize("spec", NAMED_RANK_LE_4 + ["E6", "E7", "E8", "D5", "A1xB2xT3"])
def test_reflection_structure(spec):
    rs = generate_root_system(parse_root_datum(spec))
    n = rs.rank
    for i, s in enumerate(rs.simple_reflections):
        assert matmul(s, s) == identity(n)
        alpha_i = tuple(int(j == i) for j in range(n))
        assert apply(s, alpha_i) == tuple(-x for x in alpha_i)
        others = [a for a in rs.positive_roots if a != alpha_i]
        assert sorted(apply(s, a) for a in others) == sorted(others)


@pytest.mark.parametrize(
    "spec, count",
    [("A4", 10), ("B3", 9), ("C4", 16), ("D4", 12), ("E6", 36), ("E7", 63), ("E8", 120), ("F4", 24)],
)
def test_positive_root_counts_known(spec, count):
    # |Phi+| = (sum of (degree - 1)) over fundamental degrees, a classical count.
    assert len(generate_root_system(parse_root_datum(spec)).positive_roots) == count


_simple = st.sampled_from(
    [("A", r) for r in range(1, 6)]
    + [("B", r) for r in range(2, 5)]
    + [("C", r) for r in range(3, 5)]
    + [("D", r) for r in range(4, 6)]
    + [("E", 6), ("F", 4), ("G", 2)]
)


@given(st.lists(_simple, min_size=1, max_size=3), st.integers(0, 3), st.booleans())
def test_named_round_trip(factors, torus, lower):
    label = format_named(factors, torus)
    d = parse_root_datum(label.lower() if lower else label)
    assert d.label == label
    assert parse_root_datum(d.label) == d
    assert d.torus_rank == sum(r for _, r in factors) + torus


def test_cartan_matrix_positive_definite_check_matches_brute_force():
    # Every 2x2 candidate with small entries: finite iff a_ij * a_ji < 4.
    for a, b in product(range(0, -5, -1), repeat=2):
        m = ((2, a), (b, 2))
        if (a == 0) != (b == 0):
            with pytest.raises(InvalidMatrix):
                CartanMatrix(m)
        elif a * b < 4:
            CartanMatrix(m)
        else:
            with pytest.raises(NotFiniteType):
                CartanMatrix(m)
