"""
Tests for GIT fan construction, classification and validation.
"""
import os
from fractions import Fraction

import numpy as np
import pytest

from flagstab.errors import ScaleGuardError, ValidationError
from flagstab.fan.fan_plot import render_svg
from flagstab.fan.git_fan import (candidate_walls, classify, compute_fan, crossing_report, face_between,
                                  grid_oracle, validate_fan)
from flagstab.roots.root_system import FUNDAMENTAL, Weight, build
from flagstab.stability.stability import chamber_cone, random_dominant, unstable_codimension
from flagstab.weyl.weyl_group import WeylGroup

F = Fraction

_FANS = {}


def fan_of(group):
    if group.rs.type_spec not in _FANS:
        _FANS[group.rs.type_spec] = compute_fan(group)
    return _FANS[group.rs.type_spec]


def fundamental(*coords):
    return Weight(tuple(coords), FUNDAMENTAL)


def test_a1_fan_is_the_chamber(groups):
    group = groups("A1")
    fan = fan_of(group)
    assert len(fan.maximal_cones) == 1
    assert fan.walls == []
    assert validate_fan(fan, group, samples_per_cone=10).passed


def test_b2_has_a_single_cone(b2):
    fan = fan_of(b2)
    assert candidate_walls(b2) == []
    assert len(fan.maximal_cones) == 1
    assert fan.maximal_cones[0].cone == chamber_cone(b2.rs)
    assert not fan.merged


def test_a2_fan_has_two_cones(a2):
    fan = fan_of(a2)
    assert len(fan.maximal_cones) == 2
    assert fan.walls == [(F(1), F(-1))]
    fingerprints = {c.fingerprint for c in fan.maximal_cones}
    assert len(fingerprints) == 2


def test_classify(a2):
    fan = fan_of(a2)
    inside = classify(fan, a2, fundamental(2, 1))
    assert inside.interior
    assert inside.cone is not None
    on_wall = classify(fan, a2, fundamental(1, 1))
    assert not on_wall.interior
    assert len(on_wall.cones) == 2
    assert on_wall.cone is None
    with pytest.raises(ValidationError):
        classify(fan, a2, fundamental(0, 1))


def test_classify_is_scale_invariant(groups):
    rng = np.random.default_rng(5)
    for type_spec in ["A2", "G2"]:
        group = groups(type_spec)
        fan = fan_of(group)
        for _ in range(10):
            chi = random_dominant(group.rs, rng)
            q = F(int(rng.integers(1, 9)), int(rng.integers(1, 9)))
            assert classify(fan, group, chi) == classify(fan, group, tuple(q * a for a in chi))


def test_face_between_adjacent_cones(a2):
    fan = fan_of(a2)
    face, gens = face_between(fan, 0, 1)
    assert gens == ((F(1), F(1)),)
    assert face.contains(a2.rs.from_fundamental([1, 1]))


def test_cones_are_sorted_and_fan_is_deterministic(a2):
    first = compute_fan(a2)
    second = compute_fan(a2, threads=3)
    assert first == second
    normals = [c.cone.normals for c in first.maximal_cones]
    assert normals == sorted(normals)


@pytest.mark.parametrize("type_spec", ["A2", "B2", "G2", "A3"])
def test_fan_validation(groups, type_spec):
    group = groups(type_spec)
    result = validate_fan(fan_of(group), group, seed=1)
    assert result.violations == []
    assert result.samples_checked >= 100 * len(fan_of(group).maximal_cones)


@pytest.mark.parametrize("type_spec", ["A2", "B2"])
def test_grid_oracle_counts_match(groups, type_spec):
    group = groups(type_spec)
    assert grid_oracle(group, density=50) == len(fan_of(group).maximal_cones)


@pytest.mark.parametrize("type_spec", ["B2", "B3", "G2"])
def test_every_cone_has_codimension_at_least_two(groups, type_spec):
    group = groups(type_spec)
    for fan_cone in fan_of(group).maximal_cones:
        assert unstable_codimension(group, fan_cone.sample) >= 2


def test_adjacent_cones_differ(groups):
    group = groups("G2")
    fan = fan_of(group)
    assert len({c.fingerprint for c in fan.maximal_cones}) == len(fan.maximal_cones)


def test_crossing_report(a2):
    report = crossing_report(a2, fundamental(2, 1), fundamental(1, 2))
    assert len(report['crossings']) == 1
    crossing = report['crossings'][0]
    assert crossing.t == F(1, 2)
    assert crossing.gained and crossing.lost
    assert report['pieces'][0][2] != report['pieces'][1][2]


def test_rank_guard():
    with pytest.raises(ScaleGuardError):
        compute_fan(WeylGroup(build("B5")))


def test_render_svg(a2, tmp_path):
    path = str(tmp_path / "a2_fan.svg")
    render_svg(fan_of(a2), a2.rs, path)
    assert os.path.getsize(path) > 0
    with open(path, encoding="utf-8") as f:
        assert "<svg" in f.read()


def test_render_svg_needs_rank_two(b3, tmp_path):
    with pytest.raises(ValidationError):
        render_svg(fan_of(b3), b3.rs, str(tmp_path / "b3.svg"))
