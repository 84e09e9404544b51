"""
Tests for H/V cone conversion, ray shooting and cone equality.
"""
from fractions import Fraction

import numpy as np
import pytest

from flagstab.errors import ScaleGuardError, ValidationError
from flagstab.linalg.cones import (AffCone, ConeH, dual_description, generators_of,
                                   ray_hit_boundary, relative_interior_point, same_cone)
from flagstab.linalg.rational import add, is_zero, qvector, scale

F = Fraction


def test_quadrant_round_trip():
    cone = dual_description([[1, 0], [0, 1]], 2)
    assert cone == ConeH.from_normals([[1, 0], [0, 1]], 2)
    assert set(generators_of(cone)) == {(F(1), F(0)), (F(0), F(1))}


def test_redundant_generators_are_dropped():
    cone = dual_description([[1, 0], [1, 1], [0, 1], [2, 1]], 2)
    assert cone.normals == ((F(0), F(1)), (F(1), F(0)))


def test_half_plane_has_lineality():
    cone = dual_description([[1, 0], [-1, 0], [0, 1]], 2)
    assert cone.normals == ((F(0), F(1)),)
    gens = generators_of(cone)
    assert (F(0), F(1)) in gens
    assert (F(1), F(0)) in gens and (F(-1), F(0)) in gens


def test_three_dimensional_cone_over_a_square():
    square = [[1, 1, 1], [1, -1, 1], [-1, 1, 1], [-1, -1, 1]]
    cone = dual_description(square, 3)
    assert len(cone.normals) == 4
    assert cone.contains(qvector([0, 0, 1]))
    assert not cone.contains(qvector([2, 0, 1]))
    assert same_cone(generators_of(cone), square, 3)


def test_zero_cone():
    cone = dual_description([], 2)
    assert cone.contains(qvector([0, 0]))
    assert not cone.contains(qvector([1, 0]))
    assert generators_of(cone) == ()


def test_from_normals_keeps_sign_and_sorts():
    cone = ConeH.from_normals([[0, 2], [-3, 0], [0, 1]], 2)
    assert cone.normals == ((F(-1), F(0)), (F(0), F(1)))
    assert cone.contains_strictly(qvector([-1, 1]))
    assert cone.tight_normals(qvector([0, 5])) == ((F(-1), F(0)),)


def test_dimension_guard():
    with pytest.raises(ScaleGuardError):
        dual_description([[1] * 9], 9)


def test_ray_hit_boundary():
    cone = AffCone.create([0, 0], [[1, 0], [0, 1]])
    hit = ray_hit_boundary([2, 1], [-1, 0], cone)
    assert hit.t == F(2)
    assert hit.point == (F(0), F(1))
    assert hit.face_generators == ((F(0), F(1)),)


def test_ray_hit_boundary_on_affine_cone():
    cone = AffCone.create([-1, -1], [[1, 0], [0, 1]])
    hit = ray_hit_boundary([0, 0], [-1, -2], cone)
    assert hit.t == F(1, 2)
    assert hit.point == (F(-1, 2), F(-1))


def test_ray_hit_unbounded_and_outside():
    cone = AffCone.create([0, 0], [[1, 0], [0, 1]])
    assert ray_hit_boundary([1, 1], [1, 0], cone).unbounded
    with pytest.raises(ValidationError):
        ray_hit_boundary([-1, 0], [1, 0], cone)


def test_aff_cone_membership():
    cone = AffCone.create([1, 1], [[1, 0], [1, 1]])
    assert cone.contains(qvector([3, 2]))
    assert not cone.contains(qvector([1, 2]))


def test_relative_interior_point():
    assert relative_interior_point([[1, 0], [0, 1]]) == (F(1), F(1))
    quadrant = ConeH.from_normals([[1, 0], [0, 1]], 2)
    assert quadrant.contains_strictly(relative_interior_point(quadrant))
    assert relative_interior_point([], 2) == (F(0), F(0))


def random_generators(rng, dim, count):
    gens = [[int(x) for x in rng.integers(-3, 4, size=dim)] for _ in range(count)]
    return [g for g in gens if any(g)]


def test_random_cones_round_trip():
    rng = np.random.default_rng(7)
    for _ in range(60):
        dim = int(rng.integers(2, 5))
        gens = random_generators(rng, dim, int(rng.integers(1, 7)))
        if not gens:
            continue
        cone = dual_description(gens, dim)
        assert all(cone.contains(qvector(g)) for g in gens)
        back = generators_of(cone)
        assert same_cone(gens, back, dim)
        assert dual_description(back, dim) == cone


def test_ray_leaves_the_cone_right_after_the_exit_parameter():
    rng = np.random.default_rng(11)
    for _ in range(40):
        dim = int(rng.integers(2, 4))
        gens = random_generators(rng, dim, int(rng.integers(1, 5)))
        if not gens:
            continue
        vertex = qvector(rng.integers(-2, 3, size=dim).tolist())
        cone = AffCone.create(vertex, gens)
        start = vertex
        for g in cone.generators:
            start = add(start, g)
        direction = qvector(rng.integers(-3, 4, size=dim).tolist())
        if is_zero(direction):
            continue
        hit = ray_hit_boundary(start, direction, cone)
        if hit.unbounded:
            assert cone.contains(add(start, scale(100, direction)))
            continue
        assert cone.contains(hit.point)
        assert not cone.contains(add(start, scale(hit.t + F(1, 1000), direction)))
