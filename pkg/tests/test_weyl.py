"""
Tests for Weyl group enumeration and element arithmetic.
"""
from fractions import Fraction

import pytest

from flagstab.errors import ScaleGuardError, ValidationError
from flagstab.roots.root_system import build
from flagstab.weyl.weyl_group import WeylGroup, group_order, longest_element

F = Fraction


@pytest.mark.parametrize("type_spec, order", [("A1", 2), ("A2", 6), ("A3", 24), ("B2", 8),
                                               ("G2", 12), ("B3", 48), ("A1xA1", 4)])
def test_group_orders(groups, type_spec, order):
    group = groups(type_spec)
    assert len(group) == order
    assert group_order(group.rs) == order


def test_longest_element(groups):
    for type_spec in ["A2", "B2", "G2", "B3", "A3"]:
        group = groups(type_spec)
        w0 = longest_element(group)
        assert w0.length == len(group.rs.positive_roots)
        assert all(not group.rs.is_positive(w0.act(r)) for r in group.rs.positive_roots)


def test_longest_element_is_minus_one_for_b2(b2):
    assert b2.longest.act((F(3, 2), F(2))) == (F(-3, 2), F(-2))


def test_longest_element_of_a2_swaps_fundamental_weights(a2):
    pi1, pi2 = a2.rs.fundamental_weights
    assert a2.longest.act(pi1) == tuple(-a for a in pi2)


def test_elements_preserve_the_form(groups):
    for type_spec in ["A2", "B2", "G2", "B3"]:
        group = groups(type_spec)
        assert all(group.preserves_form(w) for w in group)


def test_enumeration_order(b3):
    lengths = [w.length for w in b3]
    assert lengths == sorted(lengths)
    assert b3.identity.is_identity
    assert b3.index_of(b3.identity) == 0


def test_inverse_and_multiply(b3):
    for w in b3.elements[::5]:
        assert b3.multiply(w, b3.inverse(w)).is_identity
        assert b3.inverse(w).length == w.length


def test_from_word(a2):
    s1, s2 = a2.simple_reflections
    assert a2.from_word([1]) == s1
    assert a2.from_word([1, 2, 1]) == a2.longest
    assert a2.from_word([2], times_longest=True) == a2.multiply(s2, a2.longest)
    assert a2.from_word([]) == a2.identity
    with pytest.raises(ValidationError) as info:
        a2.from_word([3])
    assert info.value.field == "word"


def test_simple_reflection_action(b2):
    s1 = b2.simple_reflections[0]
    assert s1.act((F(1), F(0))) == (F(-1), F(0))
    assert s1.act((F(0), F(1))) == (F(1), F(1))


def test_enumeration_cap():
    with pytest.raises(ScaleGuardError):
        WeylGroup(build("B3"), cap=10)


@pytest.mark.parametrize("type_spec", ["G2", "B3", "A1xA2"])
def test_group_is_closed_under_products(groups, type_spec):
    group = groups(type_spec)
    for a in group:
        row = {group.index_of(group.multiply(a, b)) for b in group}
        assert len(row) == len(group)


@pytest.mark.parametrize("type_spec", ["A3", "B3", "G2", "A1xA2"])
def test_length_against_the_longest_element(groups, type_spec):
    group = groups(type_spec)
    w0 = group.longest
    for w in group:
        assert group.multiply(w, w0).length == w0.length - w.length
