"""
Tests for the Picard rank of the torus quotient.
"""
from fractions import Fraction

import numpy as np
import pytest

from flagstab.errors import ScaleGuardError, ValidationError
from flagstab.fan.git_fan import compute_fan
from flagstab.linalg.cones import generators_of
from flagstab.linalg.rational import add, combine, scale, zero_vector
from flagstab.linalg.subspace import Subspace
from flagstab.picard.picard import PicardCalculator, constraint_rank
from flagstab.roots.root_system import FUNDAMENTAL, Weight, build
from flagstab.saturated.subsystems import enumerate_saturated, qualification_certificate, spans_containing
from flagstab.weyl.weyl_group import WeylGroup

F = Fraction


def fundamental(*coords):
    return Weight(tuple(coords), FUNDAMENTAL)


def calculator(group):
    return PicardCalculator(group, enumerate_saturated(group.rs))


def test_b4_rank_is_two(groups):
    group = groups("B4")
    calc = calculator(group)
    chi = fundamental(10, 1, 8, 2)
    cert = calc.picard_rank(chi)
    assert cert.rank == 2
    assert not cert.an_caveat
    assert calc.open_cell_constraints(chi).dim == 2
    assert not calc.is_general_position(chi)
    assert calc.nullspace_witness_check(cert) == []


@pytest.mark.parametrize("type_spec, chi", [("B2", (1, 1)), ("B3", (1, 1, 1)), ("G2", (1, 1))])
def test_general_position_gives_twice_the_rank(groups, type_spec, chi):
    group = groups(type_spec)
    calc = calculator(group)
    assert calc.is_general_position(fundamental(*chi))
    cert = calc.picard_rank(fundamental(*chi))
    assert cert.rank == 2 * group.rs.rank
    assert calc.nullspace_witness_check(cert) == []


def test_b3_example(b3):
    cert = calculator(b3).picard_rank(fundamental(3, 2, 4))
    assert cert.rank == 6


def test_b2_profiles(b2):
    calc = calculator(b2)
    chi = fundamental(1, 1)
    cert = calc.assemble_constraints(chi)
    assert len(cert.per_w) == 3
    for record in cert.per_w:
        assert record.qualifying == ("B2",)
        assert record.profile.is_full
        assert record.complement == ()
    assert cert.constraints == []


def test_profile_requires_semistable_target(b2):
    calc = calculator(b2)
    # w w0 = identity is never semistable
    with pytest.raises(ValidationError):
        calc.span_profile(b2.longest, fundamental(1, 1))
    assert calc.span_profile(b2.identity, fundamental(1, 1)).is_full
    assert calc.minimal_profile(b2.identity, fundamental(1, 1)).is_full


def test_type_a_caveat(a2):
    cert = calculator(a2).picard_rank(fundamental(2, 1))
    assert cert.an_caveat
    assert cert.rank is not None
    assert 0 <= cert.rank <= 4


def test_constraint_rank():
    assert constraint_rank([[1, 0, 1, 0], [2, 0, 2, 0]], 4) == 1


def test_rank_guard():
    group = WeylGroup(build("x".join(["A1"] * 7)))
    with pytest.raises(ScaleGuardError):
        PicardCalculator(group, [])


@pytest.mark.parametrize("type_spec, chi", [("B2", (1, 1)), ("B3", (3, 2, 4))])
def test_minimal_profiles_match_full_intersection(groups, type_spec, chi):
    assert calculator(groups(type_spec)).validate_minimal_profile(fundamental(*chi)) == []


# chi = 20 e1 + 10 e2 + 9 e3 + e4 written over the positive roots of each subsystem
B4_WITNESSES = {
    "A3": [(10, [1, 1, 0, 0]), (9, [1, 0, 1, 0]), (1, [1, 0, 0, 1])],
    "A1xA2": [(20, [1, 0, 0, 0]), (9, [0, 1, 1, 0]), (1, [0, 1, 0, 1])],
}


def test_b4_open_cell_subsystems(groups):
    group = groups("B4")
    rs = group.rs
    sats = enumerate_saturated(rs)
    chi = fundamental(10, 1, 8, 2)
    chi_simple = rs.to_simple(chi)
    assert chi_simple == rs.from_epsilon([20, 10, 9, 1])

    w0_chi = group.longest.act(chi_simple)
    proper = [s for s in spans_containing(rs, w0_chi, sats) if not s.span.is_full]
    assert sorted(s.label for s in proper) == ["A1xA2", "A3"]
    for sat in proper:
        positive = {rs.all_roots[i] for i in sat.positive}
        total = zero_vector(rs.rank)
        for coeff, eps in B4_WITNESSES[sat.label]:
            root = rs.from_epsilon(eps)
            assert root in positive
            total = add(total, scale(coeff, root))
        assert total == chi_simple
        certificate = qualification_certificate(group, sat, group.identity, chi)
        assert certificate.feasible and certificate.verify()

    expected = Subspace.from_vectors([rs.from_epsilon([0, 0, 1, -1]), rs.from_epsilon([2, 1, 1, 0])], 4)
    assert calculator(group).open_cell_constraints(chi) == expected


def test_b4_cell_of_s3_s4_forces_mu1_to_vanish(groups):
    group = groups("B4")
    rs = group.rs
    chi = fundamental(10, 1, 8, 2)
    calc = calculator(group)
    cert = calc.picard_rank(chi)
    assert all(not any(v[rs.rank:]) for v in cert.nullspace_basis)

    pi3 = rs.fundamental_weights[2]
    identity = next(r for r in cert.per_w if r.w_index == group.index_of(group.identity))
    assert identity.profile == calc.open_cell_constraints(chi)
    # mu0 = mu1 = pi3 passes the open cell
    assert identity.profile.contains(add(group.longest.act(pi3), pi3))
    w = group.from_word([3, 4])
    record = next(r for r in cert.per_w if r.w_index == group.index_of(w))
    u = group.elements[record.u_index]
    assert not record.profile.contains(add(u.act(pi3), pi3))


@pytest.mark.parametrize("type_spec", ["B2", "B3", "G2"])
def test_picard_rank_is_constant_on_fan_cones(groups, type_spec):
    group = groups(type_spec)
    calc = calculator(group)
    rng = np.random.default_rng(5)
    for fan_cone in compute_fan(group).maximal_cones:
        gens = generators_of(fan_cone.cone)
        expected = calc.picard_rank(fan_cone.sample).rank
        for _ in range(3):
            coefficients = [F(int(rng.integers(1, 9)), int(rng.integers(1, 4))) for _ in gens]
            point = combine(coefficients, gens, group.rs.rank)
            assert calc.picard_rank(point).rank == expected


@pytest.mark.parametrize("type_spec, chi", [("B4", (10, 1, 8, 2)), ("A2", (2, 1)), ("A3", (2, 1, 3))])
def test_deduplication_keeps_the_rank(groups, type_spec, chi):
    group = groups(type_spec)
    cert = calculator(group).picard_rank(fundamental(*chi))
    raw = [row for record in cert.per_w for row in record.rows]
    assert len(raw) == cert.raw_row_count
    dim = 2 * group.rs.rank
    assert constraint_rank(raw, dim) == constraint_rank(cert.constraints, dim) == dim - cert.rank
