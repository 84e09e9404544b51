"""
Tests for Cartan data, root generation and weight bases.
"""
from fractions import Fraction

import pytest

from flagstab.errors import ChamberBoundaryError, ValidationError
from flagstab.roots.cartan import cartan_data, epsilon_simple_roots, parse_type_spec, root_count
from flagstab.roots.root_system import (EPSILON, FUNDAMENTAL, SIMPLE, Weight, build, dominant_conjugate,
                                        inner, weight_polytope_contains)

F = Fraction


@pytest.mark.parametrize("type_spec", ["A1", "A3", "B2", "B4", "C3", "D4", "G2", "F4", "E6", "A1xG2"])
def test_root_counts(type_spec):
    rs = build(type_spec)
    expected = sum(root_count(c.family, c.rank) for c in rs.components)
    assert len(rs.all_roots) == expected
    assert len(rs.positive_roots) * 2 == expected


def test_parse_type_spec():
    comps = parse_type_spec("a2 x g2")
    assert [c.label for c in comps] == ["A2", "G2"]
    assert comps[1].offset == 2
    for bad in ["", "B1", "Q3", "E5", "G3", "D3"]:
        with pytest.raises(ValidationError):
            parse_type_spec(bad)


def test_cartan_matrices():
    assert cartan_data("G2").cartan == ((2, -3), (-1, 2))
    assert cartan_data("B2").cartan == ((2, -1), (-2, 2))
    assert cartan_data("C3").cartan == ((2, -1, 0), (-1, 2, -2), (0, -1, 2))
    assert cartan_data("A1xA1").cartan == ((2, 0), (0, 2))


def test_fundamental_weights_pair_dually():
    for type_spec in ["A3", "B3", "C3", "G2", "F4"]:
        rs = build(type_spec)
        for i, pi in enumerate(rs.fundamental_weights):
            for j, alpha in enumerate(rs.simple_roots):
                expected = rs.half_lengths[j] if i == j else 0
                assert rs.inner(pi, alpha) == expected


def test_a2_fundamental_weights():
    rs = build("A2")
    assert rs.fundamental_weights == ((F(2, 3), F(1, 3)), (F(1, 3), F(2, 3)))
    assert inner(rs, Weight((1, 0), FUNDAMENTAL), Weight((1, 0), FUNDAMENTAL)) == F(2, 3)


def test_highest_roots():
    assert build("B2").highest_root() == (F(1), F(2))
    assert build("G2").highest_root() == (F(3), F(2))
    assert build("A3").highest_root() == (F(1), F(1), F(1))
    assert build("A1xG2").highest_root(1) == (F(0), F(3), F(2))


def test_basis_conversion():
    rs = build("B3")
    chi = Weight((3, 2, 4), FUNDAMENTAL)
    simple = rs.to_simple(chi)
    assert rs.convert(simple, FUNDAMENTAL).coords == (F(3), F(2), F(4))
    assert rs.to_simple(rs.convert(chi, EPSILON)) == simple


def test_epsilon_coordinates():
    b2 = build("B2")
    # epsilon_1 = alpha_1 + alpha_2
    assert b2.to_simple(Weight((1, 0), EPSILON)) == (F(1), F(1))
    a2 = build("A2")
    # type A vectors are projected to the sum-zero hyperplane first
    assert a2.to_simple(Weight((1, 0, 0), EPSILON)) == a2.fundamental_weights[0]
    with pytest.raises(ValidationError):
        build("G2").to_simple(Weight((1, 0), EPSILON))


def test_unknown_basis():
    with pytest.raises(ValidationError):
        Weight((1, 2), "polar")


def test_strict_dominance_errors():
    rs = build("A2")
    assert rs.require_strictly_dominant(Weight((2, 1), FUNDAMENTAL)) == (F(5, 3), F(4, 3))
    with pytest.raises(ChamberBoundaryError) as info:
        rs.require_strictly_dominant(Weight((1, 0), FUNDAMENTAL))
    assert info.value.wall == 2
    assert info.value.field == "chi"
    with pytest.raises(ValidationError):
        rs.require_strictly_dominant(Weight((1, -1), FUNDAMENTAL))
    with pytest.raises(ValidationError):
        rs.to_simple(Weight((1, 2, 3), SIMPLE))


def test_dominant_conjugate():
    rs = build("B2")
    v = (F(-1), F(1))
    plus, w = dominant_conjugate(rs, v)
    assert rs.is_dominant(plus)
    assert w.act(v) == plus


def test_weight_polytope():
    rs = build("A2")
    chi = rs.from_fundamental([2, 1])
    assert weight_polytope_contains(rs, chi, chi)
    assert weight_polytope_contains(rs, chi, rs.from_fundamental([0, 0]))
    assert weight_polytope_contains(rs, chi, rs.from_fundamental([1, 1]))
    assert not weight_polytope_contains(rs, chi, rs.from_fundamental([1, 2]))
    assert not weight_polytope_contains(rs, chi, rs.from_fundamental([3, 0]))


def test_epsilon_simple_roots():
    b2, c3, g2 = (parse_type_spec(t)[0] for t in ("B2", "C3", "G2"))
    assert epsilon_simple_roots(b2) == [[F(1), F(-1)], [F(0), F(1)]]
    assert epsilon_simple_roots(c3) == [[F(1), F(-1), F(0)], [F(0), F(1), F(-1)], [F(0), F(0), F(2)]]
    assert epsilon_simple_roots(g2) is None
