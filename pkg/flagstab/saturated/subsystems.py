"""
Saturated root subsystems and the zero-in-cone qualification.

A subsystem is saturated when it equals the intersection of its linear span
with the whole root system. Every saturated subsystem is therefore determined
by a root-spanned subspace, which is how they are enumerated and compared.
"""
import logging
from collections import Counter
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from ..config import SATURATED_RANK_GUARD
from ..errors import ScaleGuardError, ValidationError
from ..linalg.lp import ConeMembership, cone_member
from ..linalg.rational import QVector, dot, neg, qvector
from ..linalg.subspace import Subspace
from ..roots.root_system import RootSystem, VectorLike
from ..weyl.weyl_group import WeylElement, WeylGroup

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SubsystemComponent:
    """An irreducible component of a saturated subsystem (root indices into all_roots)."""
    label: str
    simple: Tuple[int, ...]
    positive: Tuple[int, ...]
    highest_root: int


@dataclass(frozen=True)
class SaturatedSubsystem:
    """
    A saturated subsystem of a root system.

    Attributes:
        span: canonical span of the subsystem's roots
        roots: indices into all_roots of every root in the span
        positive: the positive ones among them
        simple: the base of the positive system (indecomposable positive roots)
        components: irreducible components in canonical order
    """
    span: Subspace
    roots: Tuple[int, ...]
    positive: Tuple[int, ...]
    simple: Tuple[int, ...]
    components: Tuple[SubsystemComponent, ...]
    annihilator: Tuple[QVector, ...]

    @property
    def label(self) -> str:
        if not self.components:
            return "0"
        ordered = sorted(self.components, key=lambda c: (int(c.label[1:]), c.label))
        return "x".join(c.label for c in ordered)

    @property
    def rank(self) -> int:
        return self.span.dim

    @property
    def sort_key(self):
        return (self.span.dim, self.span.basis)

    def contains(self, v: Sequence) -> bool:
        """Membership of v in the span, by the precomputed annihilator."""
        return all(dot(n, v) == 0 for n in self.annihilator)

    def is_subsystem_of(self, other: 'SaturatedSubsystem') -> bool:
        return set(self.roots) <= set(other.roots)

    def highest_roots(self) -> List[int]:
        return [c.highest_root for c in self.components]


def _component_label(rs: RootSystem, rank: int, positive: Sequence[int]) -> str:
    n_roots = 2 * len(positive)
    lengths = Counter(rs.inner(rs.all_roots[i], rs.all_roots[i]) for i in positive)
    if len(lengths) <= 1:
        if n_roots == rank * (rank + 1):
            return f"A{rank}"
        if rank >= 4 and n_roots == 2 * rank * (rank - 1):
            return f"D{rank}"
        return f"E{rank}"
    if rank == 2 and n_roots == 12:
        return "G2"
    if rank == 4 and n_roots == 48:
        return "F4"
    if rank == 2:
        return "B2"
    short = lengths[min(lengths)]
    return f"B{rank}" if short == rank else f"C{rank}"


def from_span(rs: RootSystem, span: Subspace) -> SaturatedSubsystem:
    """The saturated subsystem Delta cap span, with its components and base."""
    annihilator = tuple(span.annihilator().basis)
    roots = tuple(i for i, r in enumerate(rs.all_roots) if all(dot(n, r) == 0 for n in annihilator))
    positive = tuple(i for i in roots if i < len(rs.positive_roots))
    positive_set = {rs.all_roots[i] for i in positive}

    simple = []
    for i in positive:
        root = rs.all_roots[i]
        decomposable = any(
            tuple(a - b for a, b in zip(root, other)) in positive_set
            for other in positive_set if other != root)
        if not decomposable:
            simple.append(i)

    # connected components of the nonorthogonality graph on positive roots
    unassigned = list(positive)
    components = []
    while unassigned:
        seed = unassigned.pop(0)
        members = [seed]
        queue = [seed]
        while queue:
            current = queue.pop()
            linked = [j for j in unassigned if rs.inner(rs.all_roots[current], rs.all_roots[j]) != 0]
            for j in linked:
                unassigned.remove(j)
                members.append(j)
                queue.append(j)
        members.sort()
        comp_simple = tuple(i for i in simple if i in members)
        highest = max(members, key=lambda i: (sum(rs.all_roots[i]), i))
        label = _component_label(rs, len(comp_simple), members)
        components.append(SubsystemComponent(label, comp_simple, tuple(members), highest))
    components.sort(key=lambda c: c.positive[0])
    return SaturatedSubsystem(span, roots, positive, tuple(simple), tuple(components), annihilator)


def saturate(rs: RootSystem, roots: Sequence[Sequence]) -> SaturatedSubsystem:
    """Saturated subsystem generated by a set of roots."""
    return from_span(rs, Subspace.from_vectors([qvector(r) for r in roots], rs.rank))


def enumerate_saturated(rs: RootSystem, allow_large: bool = False) -> List[SaturatedSubsystem]:
    """
    All saturated subsystems, from the empty one to the whole system.

    Subspaces are grown one positive root at a time; the output is sorted by
    (dimension, canonical basis).

    Raises:
        ScaleGuardError: rank above the guard
    """
    if rs.rank > SATURATED_RANK_GUARD and not allow_large:
        raise ScaleGuardError(
            f"saturated subsystem enumeration is limited to rank {SATURATED_RANK_GUARD}, "
            f"{rs.type_spec} has rank {rs.rank}")
    empty = from_span(rs, Subspace.zero(rs.rank))
    found: Dict[Tuple, SaturatedSubsystem] = {empty.span.basis: empty}
    layer = [empty]
    for _ in range(rs.rank):
        next_layer = []
        for sat in layer:
            covered = set(sat.roots)
            for i, root in enumerate(rs.positive_roots):
                if i in covered:
                    continue
                span = sat.span.sum(Subspace.from_vectors([root], rs.rank))
                grown = found.get(span.basis)
                if grown is None:
                    grown = from_span(rs, span)
                    found[span.basis] = grown
                    next_layer.append(grown)
                covered.update(grown.roots)
        layer = next_layer
    result = sorted(found.values(), key=lambda s: s.sort_key)
    logger.info(f"{rs.type_spec}: {len(result)} saturated subsystems")
    return result


def spans_containing(rs: RootSystem, v: VectorLike,
                     sats: Sequence[SaturatedSubsystem]) -> List[SaturatedSubsystem]:
    """Subsystems whose span contains v, in canonical order."""
    simple = rs.to_simple(v)
    return sorted((s for s in sats if s.contains(simple)), key=lambda s: s.sort_key)


def admissible_roots(rs: RootSystem, group: WeylGroup, w: WeylElement,
                     candidates: Sequence[int]) -> List[int]:
    """Indices alpha among candidates (positive roots) with w^-1 alpha positive."""
    w_inverse = group.inverse(w)
    return [i for i in candidates if rs.is_positive(w_inverse.act(rs.all_roots[i]))]


def target_point(group: WeylGroup, w: WeylElement, chi: VectorLike) -> QVector:
    """w w0 chi in simple coordinates."""
    chi_simple = group.rs.require_strictly_dominant(chi)
    return w.act(group.longest.act(chi_simple))


def qualification_certificate(group: WeylGroup, sat: SaturatedSubsystem, w: WeylElement,
                              chi: VectorLike) -> Optional[ConeMembership]:
    """
    Cone membership of -w w0 chi over the roots of sat^+ cap w Delta^+.

    Returns None when w w0 chi is already outside the span.
    """
    rs = group.rs
    target = target_point(group, w, chi)
    if not sat.contains(target):
        return None
    gens = [rs.all_roots[i] for i in admissible_roots(rs, group, w, sat.positive)]
    return cone_member(neg(target), gens)


def qualifies(group: WeylGroup, sat: SaturatedSubsystem, w: WeylElement, chi: VectorLike) -> bool:
    """0 in w w0 chi + Q+ (sat^+ cap w Delta^+)."""
    certificate = qualification_certificate(group, sat, w, chi)
    return certificate is not None and certificate.feasible


def corollary_2_6_check(group: WeylGroup, w: WeylElement, chi: VectorLike) -> Tuple[bool, bool]:
    """
    The two equivalent zero-in-cone conditions for w.

    Returns:
        (0 in w w0 chi + Q+ Delta^+, 0 in w w0 chi + Q+ (Delta^+ cap w Delta^+))
    """
    rs = group.rs
    target = neg(target_point(group, w, chi))
    full = cone_member(target, rs.positive_roots).feasible
    restricted = [rs.all_roots[i] for i in admissible_roots(rs, group, w, rs.positive_indices)]
    return full, cone_member(target, restricted).feasible


def support_span(group: WeylGroup, w: WeylElement, chi: VectorLike,
                 roots: Sequence[Sequence]) -> Tuple[SaturatedSubsystem, bool]:
    """
    Span of a torus-orbit support built from roots of Delta^+ cap w Delta^+.

    Args:
        roots: roots with nonzero coefficients in the unipotent part

    Returns:
        (saturated subsystem spanned by roots, whether 0 lies in w w0 chi + Q+ roots)
    """
    rs = group.rs
    w_inverse = group.inverse(w)
    vectors = [qvector(r) for r in roots]
    for r in vectors:
        if not (rs.is_root(r) and rs.is_positive(r) and rs.is_positive(w_inverse.act(r))):
            raise ValidationError(f"{r} is not in Delta^+ cap w Delta^+", field="roots")
    target = target_point(group, w, chi)
    semistable = cone_member(neg(target), vectors).feasible
    return saturate(rs, vectors), semistable
