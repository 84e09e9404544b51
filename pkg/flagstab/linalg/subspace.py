"""
Linear subspaces of Q^n with a canonical reduced row-echelon basis.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence

from ..errors import ValidationError
from .rational import QMatrix, QVector, is_zero, mat_mul, nullspace, qvector, rref


@dataclass(frozen=True)
class Subspace:
    """
    A subspace given by its RREF basis; equal subspaces compare equal.

    Attributes:
        ambient: dimension of the surrounding space
        basis: linearly independent rows in reduced row-echelon form
    """
    ambient: int
    basis: QMatrix

    @property
    def dim(self) -> int:
        return len(self.basis)

    @classmethod
    def from_vectors(cls, vectors: Iterable[Sequence], ambient: int) -> 'Subspace':
        rows = [qvector(v) for v in vectors]
        for row in rows:
            if len(row) != ambient:
                raise ValidationError(f"vector of length {len(row)} in a space of dimension {ambient}")
        rows = [row for row in rows if not is_zero(row)]
        if not rows:
            return cls(ambient, ())
        reduced, r = rref(rows, ambient)
        return cls(ambient, tuple(reduced[:r]))

    @classmethod
    def zero(cls, ambient: int) -> 'Subspace':
        return cls(ambient, ())

    @classmethod
    def full(cls, ambient: int) -> 'Subspace':
        return cls.from_vectors(
            [[1 if i == j else 0 for j in range(ambient)] for i in range(ambient)], ambient)

    @property
    def is_full(self) -> bool:
        return self.dim == self.ambient

    def _check(self, other: 'Subspace') -> None:
        if other.ambient != self.ambient:
            raise ValidationError(
                f"subspaces live in dimensions {self.ambient} and {other.ambient}")

    def contains(self, v: Sequence[Fraction]) -> bool:
        """True if v lies in the subspace."""
        if len(v) != self.ambient:
            raise ValidationError(f"vector of length {len(v)} in a space of dimension {self.ambient}")
        if is_zero(v):
            return True
        if not self.basis:
            return False
        _, r = rref(list(self.basis) + [qvector(v)], self.ambient)
        return r == self.dim

    def contains_subspace(self, other: 'Subspace') -> bool:
        self._check(other)
        return all(self.contains(row) for row in other.basis)

    def sum(self, other: 'Subspace') -> 'Subspace':
        self._check(other)
        return Subspace.from_vectors(list(self.basis) + list(other.basis), self.ambient)

    def annihilator(self) -> 'Subspace':
        """Complement with respect to the plain coordinate dot product."""
        return Subspace.from_vectors(nullspace(self.basis, self.ambient), self.ambient)

    def intersect(self, other: 'Subspace') -> 'Subspace':
        """Intersection, computed as the common kernel of both annihilators."""
        self._check(other)
        equations = list(self.annihilator().basis) + list(other.annihilator().basis)
        return Subspace.from_vectors(nullspace(equations, self.ambient), self.ambient)

    def orthogonal_complement(self, form: Optional[QMatrix] = None) -> 'Subspace':
        """
        Orthogonal complement with respect to a symmetric bilinear form.

        Args:
            form: Gram matrix; the identity when omitted

        Returns:
            {x : (b, x) = 0 for every basis vector b}
        """
        if form is None:
            return self.annihilator()
        if not self.basis:
            return Subspace.full(self.ambient)
        functionals = mat_mul(self.basis, form)
        return Subspace.from_vectors(nullspace(functionals, self.ambient), self.ambient)

    def coordinates(self, v: Sequence[Fraction]) -> Optional[QVector]:
        """
        Coefficients of v in the canonical basis, or None when v is not in the span.
        """
        if not self.contains(v):
            return None
        # RREF rows have a unit pivot, so the coefficients are the pivot entries of v
        coefficients: List[Fraction] = []
        for row in self.basis:
            pivot = next(j for j, a in enumerate(row) if a != 0)
            coefficients.append(Fraction(v[pivot]))
        return tuple(coefficients)

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient})"


def intersect_all(spaces: Iterable[Subspace], ambient: int) -> Subspace:
    """Intersection of a family of subspaces (the full space for an empty family)."""
    result = Subspace.full(ambient)
    for space in spaces:
        result = result.intersect(space)
        if result.dim == 0:
            break
    return result
