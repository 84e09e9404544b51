"""
Exact rational vectors and matrices.

Vectors are tuples of Fraction, matrices are tuples of row vectors. Row
reduction and nullspaces go through sympy so nothing is ever rounded.
"""
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, List, Sequence, Tuple

import sympy

from ..errors import ValidationError

Rat = Fraction
QVector = Tuple[Fraction, ...]
QMatrix = Tuple[QVector, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def qvector(values: Iterable) -> QVector:
    """Build a QVector from ints, Fractions or 'p/q' strings."""
    return tuple(Fraction(v) for v in values)


def qmatrix(rows: Iterable[Iterable]) -> QMatrix:
    """Build a rectangular QMatrix."""
    matrix = tuple(qvector(row) for row in rows)
    if matrix and len({len(row) for row in matrix}) != 1:
        raise ValidationError("matrix rows have different lengths")
    return matrix


def zero_vector(dim: int) -> QVector:
    return (ZERO,) * dim


def unit_vector(dim: int, index: int) -> QVector:
    return tuple(ONE if i == index else ZERO for i in range(dim))


def identity_matrix(dim: int) -> QMatrix:
    return tuple(unit_vector(dim, i) for i in range(dim))


def add(u: Sequence[Fraction], v: Sequence[Fraction]) -> QVector:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Sequence[Fraction], v: Sequence[Fraction]) -> QVector:
    return tuple(a - b for a, b in zip(u, v))


def scale(c, v: Sequence[Fraction]) -> QVector:
    return tuple(c * a for a in v)


def neg(v: Sequence[Fraction]) -> QVector:
    return tuple(-a for a in v)


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), ZERO)


def is_zero(v: Sequence[Fraction]) -> bool:
    return all(a == 0 for a in v)


def combine(coefficients: Sequence[Fraction], vectors: Sequence[Sequence[Fraction]],
            dim: int) -> QVector:
    """Return sum_i c_i * v_i."""
    total = [ZERO] * dim
    for c, vec in zip(coefficients, vectors):
        if c == 0:
            continue
        for k in range(dim):
            total[k] += c * vec[k]
    return tuple(total)


def mat_vec(matrix: Sequence[Sequence], v: Sequence[Fraction]) -> QVector:
    return tuple(dot(row, v) for row in matrix)


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence]) -> QMatrix:
    cols = transpose(b)
    return tuple(tuple(dot(row, col) for col in cols) for row in a)


def transpose(matrix: Sequence[Sequence]) -> QMatrix:
    if not matrix:
        return ()
    return tuple(tuple(Fraction(row[j]) for row in matrix) for j in range(len(matrix[0])))


def lcm(a: int, b: int) -> int:
    return abs(a * b) // gcd(a, b) if a and b else abs(a or b)


def denominator_lcm(values: Iterable[Fraction]) -> int:
    """Least common multiple of the denominators (1 for an empty input)."""
    return reduce(lcm, (Fraction(v).denominator for v in values), 1)


def primitive(v: Sequence[Fraction]) -> Tuple[int, ...]:
    """
    Scale a vector by a positive rational to a primitive integer vector.

    The zero vector maps to itself.
    """
    if is_zero(v):
        return tuple(0 for _ in v)
    m = denominator_lcm(v)
    ints = [int(a * m) for a in v]
    g = reduce(gcd, (abs(x) for x in ints if x), 0)
    return tuple(x // g for x in ints)


def hyperplane_key(v: Sequence[Fraction]) -> Tuple[int, ...]:
    """Primitive integer normal with its first nonzero entry positive."""
    p = primitive(v)
    for x in p:
        if x != 0:
            return p if x > 0 else tuple(-y for y in p)
    return p


def _to_sympy(matrix: Sequence[Sequence[Fraction]], ncols: int) -> sympy.Matrix:
    if not matrix:
        return sympy.zeros(0, ncols)
    return sympy.Matrix([[sympy.Rational(a.numerator, a.denominator) for a in map(Fraction, row)]
                         for row in matrix])


def _from_sympy_entry(x) -> Fraction:
    x = sympy.nsimplify(x) if not isinstance(x, sympy.Rational) else x
    return Fraction(int(x.p), int(x.q))


def rref(matrix: Sequence[Sequence[Fraction]], ncols: int = None) -> Tuple[QMatrix, int]:
    """
    Reduced row-echelon form of a rational matrix.

    Args:
        matrix: rows of rationals
        ncols: column count, needed only when matrix has no rows

    Returns:
        (rref matrix with the same shape, rank)
    """
    if ncols is None:
        ncols = len(matrix[0]) if matrix else 0
    if not matrix:
        return (), 0
    reduced, pivots = _to_sympy(matrix, ncols).rref()
    rows = tuple(tuple(_from_sympy_entry(reduced[i, j]) for j in range(ncols))
                 for i in range(reduced.rows))
    return rows, len(pivots)


def nullspace(matrix: Sequence[Sequence[Fraction]], ncols: int) -> List[QVector]:
    """Basis of {x : matrix x = 0}; the identity basis for an empty matrix."""
    if not matrix:
        return list(identity_matrix(ncols))
    basis = _to_sympy(matrix, ncols).nullspace()
    return [tuple(_from_sympy_entry(vec[k]) for k in range(ncols)) for vec in basis]


def rank(matrix: Sequence[Sequence[Fraction]], ncols: int = None) -> int:
    return rref(matrix, ncols)[1]


def solve(matrix: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> QVector:
    """
    Solve a square nonsingular system exactly.

    Raises:
        ValidationError: if the matrix is singular
    """
    n = len(matrix)
    augmented = [list(row) + [rhs[i]] for i, row in enumerate(matrix)]
    reduced, r = rref(augmented, n + 1)
    if r != n or any(reduced[i][i] != 1 for i in range(n)):
        raise ValidationError("singular linear system")
    return tuple(reduced[i][n] for i in range(n))


def inverse(matrix: Sequence[Sequence[Fraction]]) -> QMatrix:
    """Exact inverse of a square nonsingular matrix."""
    n = len(matrix)
    inv = _to_sympy(matrix, n).inv()
    return tuple(tuple(_from_sympy_entry(inv[i, j]) for j in range(n)) for i in range(n))


def parse_rational(text: str) -> Fraction:
    """Parse 'p', 'p/q' or '-p/q' into a Fraction."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as e:
        raise ValidationError(f"not a rational number: {text!r}") from e


def format_rational(x: Fraction) -> str:
    """Serialize as 'p/q', always printing the denominator."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"
