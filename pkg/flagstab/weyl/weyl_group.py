"""
Weyl group enumeration and action on weights.

Elements are integer matrices acting on simple-root coordinates. The group
is enumerated breadth-first from the identity by left multiplication with
simple reflections, so the BFS depth of an element is its length.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Dict, Iterable, List, Sequence, Tuple

import numpy as np

from ..config import DEFAULT_WEYL_CAP
from ..errors import ScaleGuardError, ValidationError
from ..linalg.rational import QVector, mat_mul, qvector
from ..roots.root_system import RootSystem, VectorLike

logger = logging.getLogger(__name__)

IntMatrix = Tuple[Tuple[int, ...], ...]

_EXCEPTIONAL_ORDERS = {'E6': 51840, 'E7': 2903040, 'E8': 696729600, 'F4': 1152, 'G2': 12}


@dataclass(frozen=True)
class WeylElement:
    """
    A Weyl group element.

    Attributes:
        matrix: integer matrix acting on simple-root coordinates
        length: number of positive roots sent to negative roots
    """
    matrix: IntMatrix
    length: int

    def act(self, v: Sequence[Fraction]) -> QVector:
        return tuple(sum((row[j] * v[j] for j in range(len(row))), Fraction(0)) for row in self.matrix)

    @property
    def is_identity(self) -> bool:
        return all(self.matrix[i][j] == int(i == j)
                   for i in range(len(self.matrix)) for j in range(len(self.matrix)))


def group_order(rs: RootSystem) -> int:
    """Order of the Weyl group from the component types."""
    order = 1
    for comp in rs.components:
        n = comp.rank
        if comp.family == 'A':
            order *= factorial(n + 1)
        elif comp.family in ('B', 'C'):
            order *= 2 ** n * factorial(n)
        elif comp.family == 'D':
            order *= 2 ** (n - 1) * factorial(n)
        else:
            order *= _EXCEPTIONAL_ORDERS[comp.label]
    return order


def _simple_reflection_matrices(rs: RootSystem) -> List[np.ndarray]:
    matrices = []
    for i in range(rs.rank):
        s = np.eye(rs.rank, dtype=np.int64)
        s[i, :] -= np.array(rs.cartan[i], dtype=np.int64)
        matrices.append(s)
    return matrices


def enumerate_elements(rs: RootSystem, cap: int = DEFAULT_WEYL_CAP) -> List[WeylElement]:
    """
    All Weyl group elements in BFS-layer order, lexicographic within a layer.

    Raises:
        ScaleGuardError: if the group order exceeds cap
    """
    order = group_order(rs)
    if order > cap:
        raise ScaleGuardError(f"Weyl group of {rs.type_spec} has {order} elements, above the cap {cap}")
    reflections = _simple_reflection_matrices(rs)
    identity = np.eye(rs.rank, dtype=np.int64)
    seen = {identity.tobytes()}
    layer = [identity]
    elements: List[WeylElement] = [WeylElement(_freeze(identity), 0)]
    depth = 0
    while layer:
        depth += 1
        next_layer: Dict[bytes, np.ndarray] = {}
        for m in layer:
            for s in reflections:
                product = s @ m
                key = product.tobytes()
                if key not in seen:
                    seen.add(key)
                    next_layer[key] = product
        frozen = sorted(_freeze(m) for m in next_layer.values())
        elements.extend(WeylElement(f, depth) for f in frozen)
        layer = list(next_layer.values())
    if len(elements) != order:
        raise ScaleGuardError(f"enumerated {len(elements)} elements, expected {order}")
    return elements


def _freeze(m: np.ndarray) -> IntMatrix:
    return tuple(tuple(int(x) for x in row) for row in m)


class WeylGroup:
    """
    The enumerated Weyl group of a root system with lookup by matrix.
    """

    def __init__(self, rs: RootSystem, cap: int = DEFAULT_WEYL_CAP):
        self.logger = logging.getLogger(__name__)
        self.rs = rs
        self.elements: List[WeylElement] = enumerate_elements(rs, cap)
        self._index: Dict[IntMatrix, int] = {w.matrix: k for k, w in enumerate(self.elements)}
        self._inverses: Dict[IntMatrix, WeylElement] = {}
        self.identity = self.elements[0]
        self.longest = self.elements[-1]
        self.simple_reflections: List[WeylElement] = [
            self.elements[self._index[_freeze(s)]] for s in _simple_reflection_matrices(rs)]
        self.logger.info(f"Weyl group of {rs.type_spec}: {len(self.elements)} elements, "
                         f"longest length {self.longest.length}")

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def index_of(self, w: WeylElement) -> int:
        return self._index[w.matrix]

    def element(self, matrix: Iterable[Iterable]) -> WeylElement:
        key = tuple(tuple(int(x) for x in row) for row in matrix)
        try:
            return self.elements[self._index[key]]
        except KeyError as e:
            raise ValidationError("matrix is not a Weyl group element") from e

    def multiply(self, a: WeylElement, b: WeylElement) -> WeylElement:
        """The product a b (apply b first)."""
        return self.element(mat_mul(a.matrix, b.matrix))

    def inverse(self, w: WeylElement) -> WeylElement:
        """w^-1 = G^-1 w^T G, since w preserves the invariant form."""
        cached = self._inverses.get(w.matrix)
        if cached is not None:
            return cached
        wt = tuple(tuple(Fraction(w.matrix[j][i]) for j in range(self.rs.rank)) for i in range(self.rs.rank))
        result = self.element(mat_mul(mat_mul(self.rs.gram_inverse, wt), self.rs.gram))
        self._inverses[w.matrix] = result
        return result

    def from_word(self, word: Sequence[int], times_longest: bool = False) -> WeylElement:
        """
        Product s_{i1} s_{i2} ... of 1-based simple reflection indices.

        Args:
            word: simple reflection indices, read left to right
            times_longest: right-multiply the product by w0
        """
        w = self.identity
        for i in word:
            if not 1 <= i <= self.rs.rank:
                raise ValidationError(f"simple reflection index {i} out of range 1..{self.rs.rank}",
                                      field="word")
            w = self.multiply(w, self.simple_reflections[i - 1])
        if times_longest:
            w = self.multiply(w, self.longest)
        return w

    def act(self, w: WeylElement, v: VectorLike) -> QVector:
        return w.act(self.rs.to_simple(v))

    def preserves_form(self, w: WeylElement) -> bool:
        m = tuple(tuple(Fraction(x) for x in row) for row in w.matrix)
        mt = tuple(tuple(m[j][i] for j in range(self.rs.rank)) for i in range(self.rs.rank))
        return mat_mul(mat_mul(mt, self.rs.gram), m) == self.rs.gram


def act(w: WeylElement, v: Sequence) -> QVector:
    """Image of a simple-coordinate vector."""
    return w.act(qvector(v))


def longest_element(group: WeylGroup) -> WeylElement:
    return group.longest
