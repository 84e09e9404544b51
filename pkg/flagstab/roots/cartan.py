"""
Cartan data for the finite crystallographic types and their products.
"""
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from ..errors import ValidationError

HALF = Fraction(1, 2)
THIRD = Fraction(1, 3)

_COMPONENT_PATTERN = re.compile(r'^([A-G])(\d+)$')
_MIN_RANK = {'A': 1, 'B': 2, 'C': 3, 'D': 4}
_EXCEPTIONAL = {'E': (6, 7, 8), 'F': (4,), 'G': (2,)}


@dataclass(frozen=True)
class ComponentType:
    """One irreducible factor of a type spec, e.g. B4."""
    family: str
    rank: int
    offset: int

    @property
    def label(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def indices(self) -> range:
        return range(self.offset, self.offset + self.rank)


def parse_type_spec(type_spec: str) -> List[ComponentType]:
    """
    Parse 'TYPE RANK (x TYPE RANK)*', case-insensitive.

    Args:
        type_spec: e.g. "B4", "a2xg2", "A1 x A1"

    Returns:
        Components with their coordinate offsets
    """
    if not type_spec or not type_spec.strip():
        raise ValidationError("empty type spec", field="type_spec")
    components: List[ComponentType] = []
    offset = 0
    for part in re.split(r'[x×]', type_spec.strip().upper().replace('X', 'x')):
        token = part.replace(' ', '')
        match = _COMPONENT_PATTERN.match(token)
        if not match:
            raise ValidationError(f"cannot parse component {part!r} of {type_spec!r}", field="type_spec")
        family, rank = match.group(1), int(match.group(2))
        if family in _EXCEPTIONAL:
            if rank not in _EXCEPTIONAL[family]:
                raise ValidationError(f"unsupported rank {family}{rank}", field="type_spec")
        elif rank < _MIN_RANK[family]:
            raise ValidationError(
                f"type {family} needs rank at least {_MIN_RANK[family]}, got {rank}", field="type_spec")
        components.append(ComponentType(family, rank, offset))
        offset += rank
    return components


def _dynkin(family: str, n: int) -> Tuple[List[Fraction], List[Tuple[int, int]]]:
    """Half squared lengths of the simple roots and the diagram edges (Bourbaki numbering)."""
    chain = [(i, i + 1) for i in range(n - 1)]
    one = Fraction(1)
    if family == 'A':
        return [one] * n, chain
    if family == 'B':
        return [one] * (n - 1) + [HALF], chain
    if family == 'C':
        return [HALF] * (n - 1) + [one], chain
    if family == 'D':
        return [one] * n, [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    if family == 'E':
        return [one] * n, [(0, 2), (1, 3)] + [(i, i + 1) for i in range(2, n - 1)]
    if family == 'F':
        return [one, one, HALF, HALF], chain
    if family == 'G':
        return [THIRD, one], chain
    raise ValidationError(f"unknown family {family}", field="type_spec")


@dataclass(frozen=True)
class CartanData:
    """
    Block-diagonal Cartan data of a (possibly reducible) type.

    a_ij = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i); half_lengths[i] is
    (alpha_i, alpha_i) / 2 with long roots of squared length 2.
    """
    components: Tuple[ComponentType, ...]
    cartan: Tuple[Tuple[int, ...], ...]
    half_lengths: Tuple[Fraction, ...]
    gram: Tuple[Tuple[Fraction, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.half_lengths)


def cartan_data(type_spec: str) -> CartanData:
    components = parse_type_spec(type_spec)
    rank = sum(c.rank for c in components)
    half_lengths = [Fraction(0)] * rank
    gram = [[Fraction(0)] * rank for _ in range(rank)]
    for comp in components:
        lengths, edges = _dynkin(comp.family, comp.rank)
        for i, d in enumerate(lengths):
            half_lengths[comp.offset + i] = d
            gram[comp.offset + i][comp.offset + i] = 2 * d
        for i, j in edges:
            value = -max(lengths[i], lengths[j])
            gram[comp.offset + i][comp.offset + j] = value
            gram[comp.offset + j][comp.offset + i] = value
    cartan = []
    for i in range(rank):
        row = []
        for j in range(rank):
            entry = gram[i][j] / half_lengths[i]
            if entry.denominator != 1:
                raise ValidationError(f"non-integral Cartan entry at ({i}, {j})")
            row.append(int(entry))
        cartan.append(tuple(row))
    return CartanData(
        components=tuple(components),
        cartan=tuple(cartan),
        half_lengths=tuple(half_lengths),
        gram=tuple(tuple(row) for row in gram),
    )


def epsilon_simple_roots(comp: ComponentType) -> Optional[List[List[Fraction]]]:
    """
    Simple roots of a classical component in epsilon coordinates.

    Returns:
        one epsilon vector per simple root, or None for exceptional types
    """
    n = comp.rank
    family = comp.family
    if family not in ('A', 'B', 'C', 'D'):
        return None
    width = n + 1 if family == 'A' else n

    def eps(*pairs) -> List[Fraction]:
        vec = [Fraction(0)] * width
        for index, coeff in pairs:
            vec[index] += coeff
        return vec

    roots = [eps((i, 1), (i + 1, -1)) for i in range(n - 1)]
    if family == 'A':
        roots.append(eps((n - 1, 1), (n, -1)))
    elif family == 'B':
        roots.append(eps((n - 1, 1)))
    elif family == 'C':
        roots.append(eps((n - 1, 2)))
    else:
        roots.append(eps((n - 2, 1), (n - 1, 1)))
    return roots


COMPONENT_ROOT_COUNTS: Dict[str, int] = {'E6': 72, 'E7': 126, 'E8': 240, 'F4': 48, 'G2': 12}


def root_count(family: str, n: int) -> int:
    """Number of roots of an irreducible type."""
    if family == 'A':
        return n * (n + 1)
    if family in ('B', 'C'):
        return 2 * n * n
    if family == 'D':
        return 2 * n * (n - 1)
    return COMPONENT_ROOT_COUNTS[f"{family}{n}"]
