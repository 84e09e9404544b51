"""
Polyhedral cones in generator and inequality form.

Conversion between the two forms runs cddlib's double description in exact
fraction mode; its output is reduced to a canonical form here.
"""
import logging
from dataclasses import dataclass
from functools import cached_property
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import cdd

from ..config import MAX_CONE_DIMENSION
from ..errors import ScaleGuardError, ValidationError
from .lp import cone_member
from .rational import (QVector, add, dot, is_zero, neg, primitive, qvector, scale, sub,
                       zero_vector)
from .subspace import Subspace

logger = logging.getLogger(__name__)


def canonical_normal(v: Sequence[Fraction]) -> QVector:
    """Primitive integer representative of a half-space normal (positive scaling only)."""
    return tuple(Fraction(x) for x in primitive(v))


def _dedup(vectors: Iterable[QVector]) -> Tuple[QVector, ...]:
    seen = []
    for v in vectors:
        if v not in seen:
            seen.append(v)
    return tuple(seen)


@dataclass(frozen=True)
class ConeH:
    """
    The cone {x : n . x >= 0 for every normal n}.

    Normals are stored canonically, sorted and deduplicated, so two ConeH
    built from the same inequalities compare equal.
    """
    dim: int
    normals: Tuple[QVector, ...]

    @classmethod
    def from_normals(cls, normals: Iterable[Sequence], dim: int) -> 'ConeH':
        canon = set()
        for n in normals:
            n = qvector(n)
            if len(n) != dim:
                raise ValidationError(f"normal of length {len(n)} in dimension {dim}")
            if not is_zero(n):
                canon.add(canonical_normal(n))
        return cls(dim, tuple(sorted(canon)))

    def contains(self, x: Sequence[Fraction]) -> bool:
        return all(dot(n, x) >= 0 for n in self.normals)

    def contains_strictly(self, x: Sequence[Fraction]) -> bool:
        return all(dot(n, x) > 0 for n in self.normals)

    def tight_normals(self, x: Sequence[Fraction]) -> Tuple[QVector, ...]:
        return tuple(n for n in self.normals if dot(n, x) == 0)

    def intersect(self, other: 'ConeH') -> 'ConeH':
        return ConeH.from_normals(self.normals + other.normals, self.dim)

    def generators(self) -> Tuple[QVector, ...]:
        return generators_of(self)


@dataclass(frozen=True)
class AffCone:
    """
    The affine cone vertex + Q+ span(generators).
    """
    vertex: QVector
    generators: Tuple[QVector, ...]

    @classmethod
    def create(cls, vertex: Sequence, generators: Iterable[Sequence]) -> 'AffCone':
        vertex = qvector(vertex)
        gens = _dedup(qvector(g) for g in generators)
        for g in gens:
            if len(g) != len(vertex):
                raise ValidationError("generator and vertex dimensions differ")
        return cls(vertex, gens)

    @property
    def dim(self) -> int:
        return len(self.vertex)

    @cached_property
    def inequalities(self) -> ConeH:
        """H-form of the generator cone (translate by the vertex before testing)."""
        return dual_description(self.generators, self.dim)

    def contains(self, x: Sequence[Fraction]) -> bool:
        return cone_member(sub(qvector(x), self.vertex), self.generators).feasible


def _double_description(constraints: Sequence[QVector], dim: int) -> Tuple[List[QVector], List[QVector]]:
    """
    Generators of {x : a . x >= 0 for every constraint a}, computed by cddlib
    in exact fraction arithmetic.

    Returns:
        (extreme rays, lineality directions)
    """
    if dim > MAX_CONE_DIMENSION:
        raise ScaleGuardError(
            f"cone dimension {dim} exceeds the supported maximum {MAX_CONE_DIMENSION}")
    rows = [[0] + list(a) for a in constraints if not is_zero(a)]
    if not rows:
        return [], [tuple(Fraction(int(i == j)) for j in range(dim)) for i in range(dim)]

    mat = cdd.Matrix(rows, number_type='fraction')
    mat.rep_type = cdd.RepType.INEQUALITY
    generators = cdd.Polyhedron(mat).get_generators()
    generators.canonicalize()

    rays: List[QVector] = []
    lineality: List[QVector] = []
    for k in range(generators.row_size):
        row = generators[k]
        direction = tuple(Fraction(x) for x in row[1:])
        # rows with a nonzero leading entry are vertices; a cone has only the origin
        if Fraction(row[0]) != 0 or is_zero(direction):
            continue
        if k in generators.lin_set:
            lineality.append(direction)
        else:
            rays.append(direction)
    return rays, lineality


def _project_out(vector: QVector, orthogonal_basis: Sequence[QVector]) -> QVector:
    for b in orthogonal_basis:
        vector = sub(vector, scale(dot(vector, b) / dot(b, b), b))
    return vector


def _orthogonalize(vectors: Sequence[QVector]) -> List[QVector]:
    basis: List[QVector] = []
    for v in vectors:
        v = _project_out(v, basis)
        if not is_zero(v):
            basis.append(v)
    return basis


def _cone_generators(constraints: Sequence[QVector], dim: int) -> Tuple[List[QVector], List[QVector]]:
    """Canonical (rays, lineality basis) of the cone cut out by constraints."""
    rays, lineality = _double_description([qvector(c) for c in constraints], dim)
    lineality = list(Subspace.from_vectors(lineality, dim).basis)
    ortho = _orthogonalize(lineality)
    canonical_rays = sorted({canonical_normal(_project_out(r, ortho)) for r in rays
                             if not is_zero(_project_out(r, ortho))})
    canonical_lineality = [canonical_normal(l) for l in lineality]
    logger.debug(f"double description in dimension {dim}: {len(canonical_rays)} rays, "
                 f"lineality {len(canonical_lineality)}")
    return canonical_rays, canonical_lineality


def dual_description(generators: Sequence[Sequence], dim: int) -> ConeH:
    """
    Inequality description of the cone spanned by generators.

    Args:
        generators: cone generators (an empty list gives the zero cone)
        dim: ambient dimension

    Returns:
        ConeH whose normals are the facet normals, with equations as +/- pairs
    """
    rays, lineality = _cone_generators([qvector(g) for g in generators], dim)
    normals = list(rays) + list(lineality) + [neg(l) for l in lineality]
    return ConeH.from_normals(normals, dim)


def generators_of(cone: ConeH) -> Tuple[QVector, ...]:
    """Generators of an inequality-described cone: extreme rays plus +/- lineality."""
    rays, lineality = _cone_generators(cone.normals, cone.dim)
    return tuple(rays) + tuple(lineality) + tuple(neg(l) for l in lineality)


def same_cone(a: Sequence[Sequence], b: Sequence[Sequence], dim: int) -> bool:
    """Set equality of two generated cones, by membership in both directions."""
    if any(not cone_member(g, b).feasible for g in a):
        return False
    return all(cone_member(g, a).feasible for g in b)


@dataclass(frozen=True)
class RayHit:
    """
    Where a ray leaves an affine cone.

    Attributes:
        t: exit parameter, None when the ray never leaves
        point: start + t * direction (None when unbounded)
        face_generators: generators spanning the minimal face containing point
    """
    t: Optional[Fraction]
    point: Optional[QVector]
    face_generators: Tuple[QVector, ...]

    @property
    def unbounded(self) -> bool:
        return self.t is None


def ray_hit_boundary(start: Sequence, direction: Sequence, cone: AffCone) -> RayHit:
    """
    Largest t >= 0 keeping start + t * direction inside the cone.

    Raises:
        ValidationError: if start is not in the cone
    """
    start = qvector(start)
    direction = qvector(direction)
    if len(start) != cone.dim or len(direction) != cone.dim:
        raise ValidationError("ray and cone dimensions differ", field="start")
    offset = sub(start, cone.vertex)
    h = cone.inequalities
    if not h.contains(offset):
        raise ValidationError("ray start lies outside the cone", field="start")

    t: Optional[Fraction] = None
    for n in h.normals:
        slope = dot(n, direction)
        if slope < 0:
            bound = dot(n, offset) / -slope
            if t is None or bound < t:
                t = bound
    if t is None:
        return RayHit(None, None, cone.generators)

    point = add(start, scale(t, direction))
    tight = h.tight_normals(sub(point, cone.vertex))
    face = tuple(g for g in cone.generators if all(dot(n, g) == 0 for n in tight))
    return RayHit(t, point, face)


def relative_interior_point(cone: Union[ConeH, Sequence[Sequence]], dim: Optional[int] = None) -> QVector:
    """
    A rational point in the relative interior: the sum of the cone's generators.
    """
    if isinstance(cone, ConeH):
        gens = generators_of(cone)
        dim = cone.dim
    else:
        gens = [qvector(g) for g in cone]
        if dim is None:
            if not gens:
                raise ValidationError("dimension required for an empty generator list")
            dim = len(gens[0])
    total = zero_vector(dim)
    for g in gens:
        total = add(total, g)
    return total
