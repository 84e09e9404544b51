"""
Tests for saturated subsystems, the zero-in-cone qualification and highest-root paths.
"""
from fractions import Fraction

import pytest

from flagstab.errors import ValidationError
from flagstab.roots.root_system import FUNDAMENTAL, Weight, build
from flagstab.saturated.paths import PathBuilder, build_path, descent_check, qualifying_pairs, verify_path
from flagstab.saturated.subsystems import (admissible_roots, enumerate_saturated, qualification_certificate,
                                           qualifies, saturate, spans_containing, support_span)

F = Fraction


def rho(group):
    return Weight(tuple([1] * group.rs.rank), FUNDAMENTAL)


def test_counts_and_labels():
    assert [s.label for s in enumerate_saturated(build("A2"))] == ["0", "A1", "A1", "A1", "A2"]
    assert [s.label for s in enumerate_saturated(build("B2"))] == ["0"] + ["A1"] * 4 + ["B2"]
    g2 = enumerate_saturated(build("G2"))
    assert len(g2) == 8
    assert g2[-1].label == "G2"


def test_b3_contains_reducible_and_rank_two_subsystems():
    labels = {s.label for s in enumerate_saturated(build("B3"))}
    assert {"A1xA1", "A2", "B2", "B3"} <= labels


def test_saturation_adds_missing_roots():
    rs = build("B2")
    # the two orthogonal long roots span the plane, so every root joins
    sat = saturate(rs, [(1, 0), (1, 2)])
    assert sat.label == "B2"
    assert len(sat.roots) == 8
    assert sat.span.is_full


def test_subsystem_structure():
    rs = build("B3")
    sat = saturate(rs, [(1, 0, 0), (0, 0, 1)])
    assert sat.label == "A1xA1"
    assert sat.rank == 2
    assert len(sat.components) == 2
    assert sorted(rs.all_roots[i] for i in sat.highest_roots()) == [(F(0), F(0), F(1)), (F(1), F(0), F(0))]
    assert sat.is_subsystem_of(saturate(rs, rs.simple_roots))


def test_highest_root_pairs_nonnegatively(groups):
    for type_spec in ["B3", "G2"]:
        rs = groups(type_spec).rs
        for sat in enumerate_saturated(rs):
            for comp in sat.components:
                top = rs.all_roots[comp.highest_root]
                for i in comp.positive:
                    assert rs.inner(top, rs.all_roots[i]) >= 0


def test_spans_containing(b2):
    rs = b2.rs
    sats = enumerate_saturated(rs)
    found = spans_containing(rs, (F(2), F(0)), sats)
    assert [s.label for s in found] == ["A1", "B2"]
    assert spans_containing(rs, (F(3, 2), F(2)), sats) == [sats[-1]]


def test_qualification(b2):
    sats = enumerate_saturated(b2.rs)
    chi = rho(b2)
    full = sats[-1]
    assert qualifies(b2, full, b2.identity, chi)
    certificate = qualification_certificate(b2, full, b2.identity, chi)
    assert certificate.feasible and certificate.verify()
    # w w0 chi = -chi lies on no root line
    assert all(qualification_certificate(b2, s, b2.identity, chi) is None for s in sats[1:-1])


def test_support_span(b2):
    chi = rho(b2)
    sat, semistable = support_span(b2, b2.identity, chi, [(1, 0), (0, 1)])
    assert sat.label == "B2"
    assert semistable
    _, semistable = support_span(b2, b2.identity, chi, [(1, 0)])
    assert not semistable
    with pytest.raises(ValidationError):
        support_span(b2, b2.longest, chi, [(1, 0)])


def test_b2_identity_path(b2):
    rs = b2.rs
    sats = enumerate_saturated(rs)
    path = build_path(b2, sats[-1], b2.identity, rho(b2))
    assert [rs.all_roots[s.root] for s in path.steps] == [(F(1), F(2)), (F(1), F(0))]
    assert [s.k for s in path.steps] == [F(1), F(1, 2)]
    assert [s.subsystem.label for s in path.steps] == ["B2", "A1"]
    assert path.end == (F(-3, 2), F(-2))
    assert path.scaling == 2
    assert verify_path(b2, path) == []
    assert descent_check(b2, path) == []


def test_b2_path_after_a_simple_reflection(b2):
    rs = b2.rs
    sats = enumerate_saturated(rs)
    s1 = b2.simple_reflections[0]
    path = build_path(b2, sats[-1], s1, rho(b2))
    assert path.target == (F(-1, 2), F(-2))
    assert [s.k for s in path.steps] == [F(1, 2), F(1)]
    assert rs.all_roots[path.steps[1].root] == (F(0), F(1))


def test_path_rejects_non_qualifying_subsystem(b2):
    sats = enumerate_saturated(b2.rs)
    with pytest.raises(ValidationError) as info:
        build_path(b2, sats[1], b2.identity, rho(b2))
    assert info.value.field == "subsystem"


@pytest.mark.parametrize("type_spec", ["B2", "B3"])
def test_path_suite(groups, type_spec):
    group = groups(type_spec)
    chi = rho(group)
    builder = PathBuilder(group)
    pairs = qualifying_pairs(group, enumerate_saturated(group.rs), chi)
    assert pairs
    for index, sat in pairs:
        path = builder.build(sat, group.elements[index], chi)
        assert path.end == path.target
        assert builder.verify(path) == []
        assert builder.descent_check(path) == []


@pytest.mark.parametrize("type_spec, chi", [("B2", (1, 1)), ("B2", (5, 1)), ("B3", (3, 2, 4)),
                                            ("G2", (1, 1)), ("G2", (4, 1))])
def test_qualifying_pairs_admit_a_highest_root(groups, type_spec, chi):
    group = groups(type_spec)
    rs = group.rs
    for index, sat in qualifying_pairs(group, enumerate_saturated(rs), Weight(chi, FUNDAMENTAL)):
        w = group.elements[index]
        admissible = set(admissible_roots(rs, group, w, sat.positive))
        assert any(top in admissible for top in sat.highest_roots())
