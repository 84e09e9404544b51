"""
Root systems in simple-root coordinates.

Every vector handled here is a tuple of Fractions giving coefficients with
respect to the simple roots. The invariant form is the symmetrized Cartan
matrix with long roots of squared length 2 in each component.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple, Union

from ..errors import ChamberBoundaryError, ValidationError
from ..linalg.lp import cone_member
from ..linalg.rational import (QMatrix, QVector, add, dot, inverse, is_zero, mat_mul, mat_vec,
                               qvector, scale, solve, sub, transpose, zero_vector)
from .cartan import CartanData, ComponentType, cartan_data, epsilon_simple_roots

logger = logging.getLogger(__name__)

SIMPLE = 'simple'
FUNDAMENTAL = 'fundamental'
EPSILON = 'epsilon'
BASES = (SIMPLE, FUNDAMENTAL, EPSILON)


@dataclass(frozen=True)
class Weight:
    """A rational weight with the basis its coordinates refer to."""
    coords: QVector
    basis: str = SIMPLE

    def __post_init__(self):
        if self.basis not in BASES:
            raise ValidationError(f"unknown basis {self.basis!r}", field="basis")


VectorLike = Union[Weight, Sequence]


class RootSystem:
    """
    A finite root system with its Weyl chamber data.

    Use build() rather than the constructor; it parses the type spec and caches.
    """

    def __init__(self, data: CartanData):
        self.logger = logging.getLogger(__name__)
        self.components: Tuple[ComponentType, ...] = data.components
        self.type_spec = "x".join(c.label for c in data.components)
        self.rank = data.rank
        self.cartan = data.cartan
        self.half_lengths = data.half_lengths
        self.gram: QMatrix = data.gram
        self.gram_inverse: QMatrix = inverse(self.gram)
        self.simple_roots: Tuple[QVector, ...] = tuple(
            tuple(Fraction(int(i == j)) for j in range(self.rank)) for i in range(self.rank))
        # pi_i = sum_k (D G^-1)_ik alpha_k
        self.fundamental_weights: Tuple[QVector, ...] = tuple(
            tuple(self.half_lengths[i] * self.gram_inverse[i][k] for k in range(self.rank))
            for i in range(self.rank))

        self.positive_roots: Tuple[QVector, ...] = self._generate_positive_roots()
        self.all_roots: Tuple[QVector, ...] = self.positive_roots + tuple(
            tuple(-a for a in r) for r in self.positive_roots)
        self.positive_indices = tuple(range(len(self.positive_roots)))
        self._root_index: Dict[QVector, int] = {r: i for i, r in enumerate(self.all_roots)}
        self._positive_int = [tuple(int(a) for a in r) for r in self.positive_roots]

        self._epsilon = self._epsilon_embedding()
        self.logger.debug(f"Built {self.type_spec}: rank {self.rank}, {len(self.all_roots)} roots")

    def _generate_positive_roots(self) -> Tuple[QVector, ...]:
        found = set(self.simple_roots)
        frontier = list(self.simple_roots)
        while frontier:
            next_frontier = []
            for root in frontier:
                for i in range(self.rank):
                    image = self.reflect_simple(i, root)
                    if image not in found:
                        found.add(image)
                        next_frontier.append(image)
            frontier = next_frontier
        positive = [r for r in found if all(a >= 0 for a in r)]
        return tuple(sorted(positive, key=lambda r: (sum(r), r)))

    def _epsilon_embedding(self) -> Optional[Tuple[QMatrix, List[Tuple[int, int, bool]]]]:
        columns: List[List[Fraction]] = []
        blocks = []
        width = 0
        for comp in self.components:
            roots = epsilon_simple_roots(comp)
            if roots is None:
                return None
            blocks.append((width, len(roots[0]), comp.family == 'A'))
            for root in roots:
                columns.append([Fraction(0)] * width + root)
            width += len(roots[0])
        columns = [col + [Fraction(0)] * (width - len(col)) for col in columns]
        return transpose(columns), blocks

    # -- form and pairings -------------------------------------------------

    def inner(self, u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
        """Invariant form on simple-root coordinates."""
        return dot(u, mat_vec(self.gram, v))

    def functional(self, v: Sequence[Fraction]) -> QVector:
        """Coordinate vector n with n . x = (v, x)."""
        return mat_vec(self.gram, v)

    def coroot_pairings(self, v: Sequence[Fraction]) -> QVector:
        """<v, alpha_i^vee> for every simple root; these are the fundamental coordinates."""
        return mat_vec(self.cartan, v)

    def reflect_simple(self, i: int, v: Sequence[Fraction]) -> QVector:
        c = sum((self.cartan[i][j] * v[j] for j in range(self.rank)), Fraction(0))
        return tuple(a - c if k == i else Fraction(a) for k, a in enumerate(v))

    def reflect(self, alpha: Sequence[Fraction], v: Sequence[Fraction]) -> QVector:
        """s_alpha(v) = v - 2 (v, alpha) / (alpha, alpha) alpha."""
        c = 2 * self.inner(v, alpha) / self.inner(alpha, alpha)
        return sub(v, scale(c, alpha))

    # -- roots -------------------------------------------------------------

    def root_index(self, v: Sequence[Fraction]) -> Optional[int]:
        return self._root_index.get(tuple(Fraction(a) for a in v))

    def is_root(self, v: Sequence[Fraction]) -> bool:
        return self.root_index(v) is not None

    @staticmethod
    def is_positive(v: Sequence[Fraction]) -> bool:
        return not is_zero(v) and all(a >= 0 for a in v)

    def component_of(self, v: Sequence[Fraction]) -> int:
        """Index of the component whose coordinates support the root v."""
        for k, comp in enumerate(self.components):
            if any(v[i] != 0 for i in comp.indices):
                return k
        raise ValidationError("zero vector has no component")

    def highest_root(self, component: int = 0) -> QVector:
        comp = self.components[component]
        inside = [r for r in self.positive_roots if self.component_of(r) == component]
        return max(inside, key=lambda r: sum(r[i] for i in comp.indices))

    @property
    def has_type_a(self) -> bool:
        """True when some factor is of type A_n."""
        return any(c.family == 'A' for c in self.components)

    @property
    def is_irreducible(self) -> bool:
        return len(self.components) == 1

    def length_of(self, matrix: Sequence[Sequence[int]]) -> int:
        """Number of positive roots the matrix sends to negative roots."""
        count = 0
        for root in self._positive_int:
            image = [sum(row[j] * root[j] for j in range(self.rank)) for row in matrix]
            if any(a < 0 for a in image):
                count += 1
        return count

    # -- weights and bases -------------------------------------------------

    def weight(self, coords: Sequence, basis: str = FUNDAMENTAL) -> Weight:
        return Weight(qvector(coords), basis)

    def to_simple(self, v: VectorLike) -> QVector:
        """Simple-root coordinates of a Weight (plain sequences are taken as simple coordinates)."""
        if not isinstance(v, Weight):
            v = qvector(v)
            if len(v) != self.rank:
                raise ValidationError(f"expected {self.rank} coordinates, got {len(v)}")
            return v
        if v.basis == SIMPLE:
            return self.to_simple(v.coords)
        if v.basis == FUNDAMENTAL:
            if len(v.coords) != self.rank:
                raise ValidationError(f"expected {self.rank} coordinates, got {len(v.coords)}", field="chi")
            return self.from_fundamental(v.coords)
        return self.from_epsilon(v.coords)

    def convert(self, v: VectorLike, basis: str) -> Weight:
        simple = self.to_simple(v)
        if basis == SIMPLE:
            return Weight(simple, SIMPLE)
        if basis == FUNDAMENTAL:
            return Weight(self.coroot_pairings(simple), FUNDAMENTAL)
        return Weight(self.to_epsilon(simple), EPSILON)

    def from_fundamental(self, coords: Sequence[Fraction]) -> QVector:
        total = zero_vector(self.rank)
        for c, pi in zip(qvector(coords), self.fundamental_weights):
            if c != 0:
                total = add(total, scale(c, pi))
        return total

    def _require_epsilon(self):
        if self._epsilon is None:
            raise ValidationError(f"epsilon coordinates are not available for {self.type_spec}",
                                  field="basis")
        return self._epsilon

    @property
    def epsilon_dimension(self) -> int:
        matrix, _ = self._require_epsilon()
        return len(matrix)

    def to_epsilon(self, v: Sequence[Fraction]) -> QVector:
        matrix, _ = self._require_epsilon()
        return mat_vec(matrix, v)

    def from_epsilon(self, e: Sequence) -> QVector:
        """
        Simple-root coordinates of an epsilon vector.

        Type A blocks are first projected to their sum-zero hyperplane.
        """
        matrix, blocks = self._require_epsilon()
        e = list(qvector(e))
        if len(e) != len(matrix):
            raise ValidationError(f"expected {len(matrix)} epsilon coordinates, got {len(e)}", field="chi")
        for start, width, is_type_a in blocks:
            if is_type_a:
                mean = sum(e[start:start + width], Fraction(0)) / width
                for k in range(start, start + width):
                    e[k] -= mean
        columns = transpose(matrix)
        normal = mat_mul(columns, matrix)
        x = solve(normal, mat_vec(columns, e))
        if mat_vec(matrix, x) != tuple(e):
            raise ValidationError("vector is not in the span of the roots", field="chi")
        return x

    # -- chamber -----------------------------------------------------------

    def is_dominant(self, v: VectorLike) -> bool:
        return all(a >= 0 for a in self.coroot_pairings(self.to_simple(v)))

    def is_strictly_dominant(self, v: VectorLike) -> bool:
        return all(a > 0 for a in self.coroot_pairings(self.to_simple(v)))

    def require_strictly_dominant(self, v: VectorLike) -> QVector:
        """
        Simple coordinates of v after checking v lies in the open chamber.

        Raises:
            ChamberBoundaryError: v is dominant but lies on a wall
            ValidationError: v is not dominant
        """
        simple = self.to_simple(v)
        pairings = self.coroot_pairings(simple)
        for i, a in enumerate(pairings):
            if a < 0:
                raise ValidationError(
                    f"weight is not dominant: coordinate {i + 1} is {a}", field="chi")
        for i, a in enumerate(pairings):
            if a == 0:
                raise ChamberBoundaryError(i + 1)
        return simple

    def __repr__(self) -> str:
        return f"RootSystem({self.type_spec!r})"


@lru_cache(maxsize=32)
def _build_cached(normalized: str) -> RootSystem:
    return RootSystem(cartan_data(normalized))


def build(type_spec: str) -> RootSystem:
    """
    Build (or fetch from cache) the root system of a type spec.

    Args:
        type_spec: product of A_n, B_n, C_n, D_n, E6-8, F4, G2, e.g. "B4" or "A2xG2"

    Returns:
        RootSystem
    """
    components = cartan_data(type_spec).components
    return _build_cached("x".join(c.label for c in components))


def inner(rs: RootSystem, u: VectorLike, v: VectorLike) -> Fraction:
    """Invariant form of two weights given in any basis."""
    return rs.inner(rs.to_simple(u), rs.to_simple(v))


def dominant_conjugate(rs: RootSystem, v: VectorLike):
    """
    Move v into the closed chamber by simple reflections.

    Returns:
        (dominant weight in simple coordinates, WeylElement w with w v = v_plus)
    """
    from ..weyl.weyl_group import WeylElement

    current = rs.to_simple(v)
    matrix = [[int(i == j) for j in range(rs.rank)] for i in range(rs.rank)]
    while True:
        pairings = rs.coroot_pairings(current)
        i = next((k for k, a in enumerate(pairings) if a < 0), None)
        if i is None:
            break
        current = rs.reflect_simple(i, current)
        # left-multiply by s_i: row i becomes row_i - sum_j a_ij row_j
        new_row = [matrix[i][c] - sum(rs.cartan[i][j] * matrix[j][c] for j in range(rs.rank))
                   for c in range(rs.rank)]
        matrix[i] = new_row
    frozen = tuple(tuple(row) for row in matrix)
    return current, WeylElement(frozen, rs.length_of(frozen))


def weight_polytope_contains(rs: RootSystem, chi: VectorLike, lam: VectorLike) -> bool:
    """
    True iff lam lies in the convex hull of the W-orbit of chi.

    Uses the dominance criterion: chi - (dominant conjugate of lam) is a
    nonnegative combination of simple roots.
    """
    chi_simple = rs.to_simple(chi)
    lam_plus, _ = dominant_conjugate(rs, lam)
    return cone_member(sub(chi_simple, lam_plus), rs.simple_roots).feasible
