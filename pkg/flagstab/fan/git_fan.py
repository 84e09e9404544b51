"""
The GIT fan of the Weyl chamber.

Candidate walls are the translates w.(span of all simple roots but one) that
meet the open chamber. The chamber is split along them by exact strict
feasibility tests; each piece gets one interior sample, whose GIT cone and
semistable fingerprint define a maximal cone. Pieces with equal fingerprints
are merged.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..config import DEFAULT_RANK_GUARD, SATURATED_RANK_GUARD
from ..errors import CertificateError, ScaleGuardError
from ..linalg.cones import ConeH, generators_of, relative_interior_point
from ..linalg.lp import solve_inequalities
from ..linalg.rational import QVector, combine, dot, hyperplane_key, neg, rank
from ..roots.root_system import VectorLike
from ..stability.stability import chamber_cone, git_cone, wst_indices
from ..utils import parallel_map
from ..weyl.weyl_group import WeylGroup

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FanCone:
    """A maximal cone with an interior sample and its W^st fingerprint."""
    cone: ConeH
    sample: QVector
    fingerprint: Tuple[int, ...]


@dataclass
class GitFan:
    """
    Maximal cones and walls of the GIT fan of one root system.

    Attributes:
        type_spec: the root system
        maximal_cones: in lexicographic order of their facet normals
        walls: canonical normals of the walls meeting the open chamber
        merged: some arrangement pieces shared a fingerprint
        piece_count: number of arrangement pieces before merging
    """
    type_spec: str
    maximal_cones: List[FanCone] = field(default_factory=list)
    walls: List[QVector] = field(default_factory=list)
    merged: bool = False
    piece_count: int = 0


@dataclass(frozen=True)
class FanLocation:
    """Where a weight sits in the fan."""
    cones: Tuple[int, ...]
    interior: bool
    fingerprint: Tuple[int, ...]

    @property
    def cone(self) -> Optional[int]:
        return self.cones[0] if self.interior else None


@dataclass
class FanValidation:
    """Outcome of validate_fan; each violation carries the check name and a witness point."""
    violations: List[Dict] = field(default_factory=list)
    grid_points: int = 0
    samples_checked: int = 0

    @property
    def passed(self) -> bool:
        return not self.violations


@dataclass(frozen=True)
class Crossing:
    t: Fraction
    gained: Tuple[int, ...]
    lost: Tuple[int, ...]


def candidate_walls(group: WeylGroup) -> List[QVector]:
    """
    Hyperplanes w.(span of Pi minus alpha_i) meeting the open chamber.

    The normal of w.{x_i = 0} is row i of w^-1; it meets the open chamber
    when it takes both signs on the fundamental weights.
    """
    rs = group.rs
    keys = set()
    for w in group.elements:
        for row in group.inverse(w).matrix:
            keys.add(hyperplane_key(row))
    walls = []
    for key in sorted(keys):
        values = [sum(k * a for k, a in zip(key, pi)) for pi in rs.fundamental_weights]
        if any(v > 0 for v in values) and any(v < 0 for v in values):
            walls.append(tuple(Fraction(k) for k in key))
    return walls


def _check_scale(system_rank: int, allow_large: bool) -> None:
    if system_rank > SATURATED_RANK_GUARD:
        raise ScaleGuardError(f"fan computation does not support rank {system_rank}")
    if system_rank > DEFAULT_RANK_GUARD:
        if not allow_large:
            raise ScaleGuardError(
                f"fan computation is limited to rank {DEFAULT_RANK_GUARD}; pass --allow-large for rank {system_rank}")
        logger.warning(f"Computing the GIT fan in rank {system_rank}; this can take a long time")


class FanBuilder:
    """
    Splits the Weyl chamber along candidate walls and assembles the fan.
    """

    def __init__(self, group: WeylGroup, threads: int = 1, allow_large: bool = False):
        self.logger = logging.getLogger(__name__)
        _check_scale(group.rs.rank, allow_large)
        self.group = group
        self.rs = group.rs
        self.threads = threads

    def _strict_point(self, normals: Sequence[QVector]) -> Optional[QVector]:
        """A point with n . x >= 1 for every normal, if one exists."""
        return solve_inequalities(normals, [Fraction(1)] * len(normals))

    def _split(self, walls: Sequence[QVector]) -> List[QVector]:
        """Interior witnesses of the full-dimensional pieces of the chamber."""
        base = list(chamber_cone(self.rs).normals)
        start = self._strict_point(base)
        pieces: List[Tuple[List[QVector], QVector]] = [(base, start)]
        for wall in walls:
            refined = []
            for normals, witness in pieces:
                value = dot(wall, witness)
                sides = []
                for side in (wall, neg(wall)):
                    if dot(side, witness) > 0:
                        sides.append((normals + [side], witness))
                        continue
                    point = self._strict_point(normals + [side])
                    if point is not None:
                        sides.append((normals + [side], point))
                if not sides:
                    raise CertificateError(f"piece with witness {witness} vanished at wall {wall}")
                if value == 0:
                    self.logger.debug(f"witness {witness} lies on wall {wall}")
                refined.extend(sides)
            pieces = refined
        return [witness for _, witness in pieces]

    def compute(self) -> GitFan:
        walls = candidate_walls(self.group)
        witnesses = self._split(walls)
        self.logger.info(f"{self.rs.type_spec}: {len(walls)} walls, {len(witnesses)} arrangement pieces")
        fingerprints = parallel_map(lambda x: wst_indices(self.group, x), witnesses, self.threads,
                                    desc="fan fingerprints")
        by_fingerprint: Dict[Tuple[int, ...], QVector] = {}
        for witness, fp in zip(witnesses, fingerprints):
            by_fingerprint.setdefault(fp, witness)
        fan = GitFan(self.rs.type_spec, walls=walls, piece_count=len(witnesses))
        if len(by_fingerprint) < len(witnesses):
            fan.merged = True
            self.logger.warning(f"{len(witnesses) - len(by_fingerprint)} arrangement pieces merged "
                                f"by equal W^st fingerprints")
        cones = [FanCone(git_cone(self.group, witness), witness, fp)
                 for fp, witness in by_fingerprint.items()]
        fan.maximal_cones = sorted(cones, key=lambda c: c.cone.normals)
        return fan


def compute_fan(group: WeylGroup, threads: int = 1, allow_large: bool = False) -> GitFan:
    """The GIT fan of the Weyl chamber of group's root system."""
    return FanBuilder(group, threads, allow_large).compute()


def classify(fan: GitFan, group: WeylGroup, chi: VectorLike) -> FanLocation:
    """
    Locate chi: the maximal cones containing it and whether it is interior to one.

    Raises:
        ValidationError: chi outside the open chamber
    """
    chi_simple = group.rs.require_strictly_dominant(chi)
    containing = tuple(k for k, c in enumerate(fan.maximal_cones) if c.cone.contains(chi_simple))
    interior = len(containing) == 1 and fan.maximal_cones[containing[0]].cone.contains_strictly(chi_simple)
    return FanLocation(containing, interior, wst_indices(group, chi_simple))


def face_between(fan: GitFan, i: int, j: int) -> Tuple[ConeH, Tuple[QVector, ...]]:
    """Intersection of two maximal cones with its generators."""
    face = fan.maximal_cones[i].cone.intersect(fan.maximal_cones[j].cone)
    return face, generators_of(face)


def _is_face_of(face_gens: Sequence[QVector], cone: ConeH, other: ConeH) -> bool:
    """
    True when the cone spanned by face_gens is the face of cone cut out by its tight normals.
    """
    dim = cone.dim
    point = relative_interior_point(face_gens, dim) if face_gens else tuple(Fraction(0) for _ in range(dim))
    tight = cone.tight_normals(point)
    face_of_cone = [g for g in generators_of(cone) if all(dot(n, g) == 0 for n in tight)]
    return all(other.contains(g) for g in face_of_cone)


def grid_points(group: WeylGroup, density: int) -> List[QVector]:
    """{sum a_i pi_i : 1 <= a_i <= density} in simple coordinates."""
    rs = group.rs
    points = []
    for coords in np.ndindex(*([density] * rs.rank)):
        points.append(rs.from_fundamental([c + 1 for c in coords]))
    return points


def grid_oracle(group: WeylGroup, density: int = 50) -> int:
    """
    Number of fingerprint buckets on the grid whose points span the whole space.
    """
    rs = group.rs
    buckets: Dict[Tuple[int, ...], List[QVector]] = {}
    for point in grid_points(group, density):
        buckets.setdefault(wst_indices(group, point), []).append(point)
    full = 0
    for points in buckets.values():
        basis: List[QVector] = []
        for p in points:
            if rank(basis + [p], rs.rank) > len(basis):
                basis.append(p)
                if len(basis) == rs.rank:
                    break
        if len(basis) == rs.rank:
            full += 1
    logger.info(f"grid oracle for {rs.type_spec} at density {density}: {len(buckets)} buckets, {full} full")
    return full


def validate_fan(fan: GitFan, group: WeylGroup, seed: int = 0, samples_per_cone: int = 100,
                 density: int = 6) -> FanValidation:
    """
    Check support coverage, the face property and fingerprint constancy.
    """
    rs = group.rs
    result = FanValidation()
    cones = fan.maximal_cones

    for point in grid_points(group, density):
        result.grid_points += 1
        inside = [k for k, c in enumerate(cones) if c.cone.contains(point)]
        strictly = [k for k in inside if cones[k].cone.contains_strictly(point)]
        on_wall = any(dot(n, point) == 0 for n in fan.walls)
        if not inside:
            result.violations.append({'check': 'support', 'point': point, 'detail': 'in no cone'})
        elif len(strictly) > 1 or (strictly and len(inside) > 1) or (not strictly and not on_wall):
            result.violations.append({'check': 'support', 'point': point,
                                      'detail': f'cones {inside}, strictly in {strictly}'})

    for i in range(len(cones)):
        for j in range(i + 1, len(cones)):
            _, gens = face_between(fan, i, j)
            for a, b in ((i, j), (j, i)):
                if not _is_face_of(gens, cones[a].cone, cones[b].cone):
                    witness = relative_interior_point(gens, rs.rank) if gens else None
                    result.violations.append({'check': 'face', 'cones': (a, b), 'point': witness})

    rng = np.random.default_rng(seed)
    for k, fan_cone in enumerate(cones):
        gens = generators_of(fan_cone.cone)
        point = fan_cone.sample
        for _ in range(samples_per_cone):
            coefficients = [Fraction(int(rng.integers(1, 20)), int(rng.integers(1, 7))) for _ in gens]
            point = combine(coefficients, gens, rs.rank)
            result.samples_checked += 1
            if wst_indices(group, point) != fan_cone.fingerprint:
                result.violations.append({'check': 'constancy', 'cone': k, 'point': point})
        if git_cone(group, point) != fan_cone.cone:
            result.violations.append({'check': 'cone', 'cone': k, 'point': point})

    fingerprints = [c.fingerprint for c in cones]
    if len(set(fingerprints)) != len(fingerprints):
        result.violations.append({'check': 'distinct', 'point': None})
    logger.info(f"fan validation for {rs.type_spec}: {len(result.violations)} violations")
    return result


def crossing_report(group: WeylGroup, chi_a: VectorLike, chi_b: VectorLike) -> Dict:
    """
    Follow the segment chi_a -> chi_b through the walls.

    Returns:
        {'crossings': [Crossing], 'pieces': [(t_lo, t_hi, fingerprint)]}
    """
    rs = group.rs
    a = rs.require_strictly_dominant(chi_a)
    b = rs.require_strictly_dominant(chi_b)
    params = set()
    for n in candidate_walls(group):
        va, vb = dot(n, a), dot(n, b)
        if va != vb:
            t = va / (va - vb)
            if 0 < t < 1:
                params.add(t)
    cuts = [Fraction(0)] + sorted(params) + [Fraction(1)]
    pieces = []
    for lo, hi in zip(cuts, cuts[1:]):
        mid = (lo + hi) / 2
        point = tuple((1 - mid) * x + mid * y for x, y in zip(a, b))
        pieces.append((lo, hi, wst_indices(group, point)))
    crossings = []
    for (_, t, before), (_, _, after) in zip(pieces, pieces[1:]):
        crossings.append(Crossing(t, tuple(sorted(set(after) - set(before))),
                                  tuple(sorted(set(before) - set(after)))))
    return {'crossings': crossings, 'pieces': pieces}
