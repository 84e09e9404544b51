"""
Semistable Weyl elements, the GIT cone of a weight and the unstable codimension.

A Weyl element w is semistable for a strictly dominant weight chi when
(w chi, lambda) <= 0 for every lambda in the closed chamber, which is the
same as w chi lying in minus the cone of positive roots.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Tuple

import numpy as np

from ..errors import ValidationError
from ..linalg.cones import ConeH, dual_description, generators_of
from ..linalg.lp import ConeMembership, cone_member
from ..linalg.rational import QVector, add, neg, scale
from ..roots.root_system import RootSystem, VectorLike, weight_polytope_contains
from ..utils import parallel_map
from ..weyl.weyl_group import WeylElement, WeylGroup

logger = logging.getLogger(__name__)


@dataclass
class StabilityReport:
    """
    Semistability data of one strictly dominant weight.

    Attributes:
        chi: the weight in simple-root coordinates
        wst: enumeration indices of the semistable elements
        unstable_codim: codimension of the unstable locus in G/B
        sigma: the GIT cone of chi
        lemma_1_10_applicable: no factor of type A_n
    """
    chi: QVector
    wst: List[int]
    unstable_codim: int
    sigma: ConeH
    lemma_1_10_applicable: bool
    max_unstable_length: int = 0
    reflected_longest: Dict[int, bool] = field(default_factory=dict)


def mu(rs: RootSystem, chi: VectorLike, w: WeylElement, lam: VectorLike) -> Fraction:
    """
    Mumford's numerical function on the cell of w: (w chi, lambda).

    Raises:
        ValidationError: lambda outside the closed chamber
    """
    chi_simple = rs.require_strictly_dominant(chi)
    lam_simple = rs.to_simple(lam)
    if not rs.is_dominant(lam_simple):
        raise ValidationError("lambda must lie in the closed Weyl chamber", field="lam")
    return rs.inner(w.act(chi_simple), lam_simple)


def is_semistable(rs: RootSystem, chi: VectorLike, w: WeylElement) -> bool:
    """True iff w chi has only nonpositive simple-root coordinates."""
    chi_simple = rs.require_strictly_dominant(chi)
    return all(a <= 0 for a in w.act(chi_simple))


def semistability_certificate(rs: RootSystem, chi: VectorLike, w: WeylElement) -> ConeMembership:
    """Cone membership of -w chi in the cone of simple roots, with its certificate."""
    chi_simple = rs.require_strictly_dominant(chi)
    return cone_member(neg(w.act(chi_simple)), rs.simple_roots)


def is_semistable_by_pairing(rs: RootSystem, chi: VectorLike, w: WeylElement) -> bool:
    """Same question tested on the chamber generators: (w chi, pi_j) <= 0 for all j."""
    chi_simple = rs.require_strictly_dominant(chi)
    image = w.act(chi_simple)
    return all(rs.inner(image, pi) <= 0 for pi in rs.fundamental_weights)


def wst(group: WeylGroup, chi: VectorLike, threads: int = 1) -> List[WeylElement]:
    """All semistable elements, in enumeration order."""
    rs = group.rs
    chi_simple = rs.require_strictly_dominant(chi)
    flags = parallel_map(lambda w: all(a <= 0 for a in w.act(chi_simple)), group.elements, threads)
    return [w for w, ok in zip(group.elements, flags) if ok]


def wst_indices(group: WeylGroup, chi: VectorLike, threads: int = 1) -> Tuple[int, ...]:
    """Fingerprint of a weight: sorted enumeration indices of W^st."""
    return tuple(group.index_of(w) for w in wst(group, chi, threads))


def unstable_codimension(group: WeylGroup, chi: VectorLike, threads: int = 1) -> int:
    """
    Codimension of the unstable locus: l(w0) minus the largest length outside W^st.
    """
    semistable = {group.index_of(w) for w in wst(group, chi, threads)}
    longest_unstable = max(w.length for k, w in enumerate(group.elements) if k not in semistable)
    return group.longest.length - longest_unstable


def chamber_cone(rs: RootSystem) -> ConeH:
    """The closed Weyl chamber: (alpha_i, x) >= 0."""
    return ConeH.from_normals(rs.gram, rs.rank)


def chambers_containing(group: WeylGroup, chi_simple: QVector) -> List[WeylElement]:
    """Elements w with chi in wA, i.e. w^-1 chi has nonnegative simple coordinates."""
    return [w for w in group.elements if all(a >= 0 for a in group.inverse(w).act(chi_simple))]


def git_cone(group: WeylGroup, chi: VectorLike) -> ConeH:
    """
    The GIT cone of chi: the chamber intersected with every wA containing chi.

    Raises:
        ChamberBoundaryError: chi on a wall of the chamber
    """
    rs = group.rs
    chi_simple = rs.require_strictly_dominant(chi)
    normals = list(rs.gram)
    for w in chambers_containing(group, chi_simple):
        normals.extend(group.inverse(w).matrix)
    # reduce to facet normals so equal cones compare equal
    raw = ConeH.from_normals(normals, rs.rank)
    return dual_description(generators_of(raw), rs.rank)


def lemma_1_10_check(rs: RootSystem) -> List[Fraction]:
    """
    (pi_i, pi_i) - (alpha_i, alpha_i) / 2 for every simple root.
    """
    return [rs.inner(pi, pi) - d for pi, d in zip(rs.fundamental_weights, rs.half_lengths)]


def report(group: WeylGroup, chi: VectorLike, threads: int = 1) -> StabilityReport:
    rs = group.rs
    chi_simple = rs.require_strictly_dominant(chi)
    semistable = wst(group, chi_simple, threads)
    indices = [group.index_of(w) for w in semistable]
    index_set = set(indices)
    longest_unstable = max(w.length for k, w in enumerate(group.elements) if k not in index_set)
    # s_i w0 membership, one flag per simple root
    reflected_longest = {
        i + 1: group.index_of(group.multiply(s, group.longest)) in index_set
        for i, s in enumerate(group.simple_reflections)
    }
    return StabilityReport(
        chi=chi_simple,
        wst=indices,
        unstable_codim=group.longest.length - longest_unstable,
        sigma=git_cone(group, chi_simple),
        lemma_1_10_applicable=not rs.has_type_a,
        max_unstable_length=longest_unstable,
        reflected_longest=reflected_longest,
    )


def random_dominant(rs: RootSystem, rng: np.random.Generator, high: int = 12,
                    strict: bool = True) -> QVector:
    """A random rational weight in the (open) chamber, in simple coordinates."""
    low = 1 if strict else 0
    coords = [Fraction(int(rng.integers(low, high + 1)), int(rng.integers(1, 5))) for _ in range(rs.rank)]
    return rs.from_fundamental(coords)


def seshadri_minimality_samples(group: WeylGroup, chi: VectorLike, seed: int = 0,
                                count: int = 100) -> List[Dict]:
    """
    Check (w chi, lambda) <= (tau, lambda) on random samples.

    tau is drawn from (w chi + Q+ positive roots) intersected with the weight
    polytope of chi; the nonnegative combination is halved until tau falls
    inside the polytope.

    Returns:
        violations, each with the offending w index, lambda and tau
    """
    rs = group.rs
    chi_simple = rs.require_strictly_dominant(chi)
    rng = np.random.default_rng(seed)
    violations = []
    for _ in range(count):
        w = group.elements[int(rng.integers(0, len(group)))]
        lam = random_dominant(rs, rng, strict=False)
        start = w.act(chi_simple)
        w_inverse = group.inverse(w)
        shift = tuple(Fraction(0) for _ in range(rs.rank))
        # positive roots pointing into the polytope from the vertex w chi
        for root in rs.positive_roots:
            if not rs.is_positive(w_inverse.act(root)):
                c = Fraction(int(rng.integers(0, 4)), int(rng.integers(1, 4)))
                shift = add(shift, scale(c, root))
        tau = add(start, shift)
        halvings = 0
        while not weight_polytope_contains(rs, chi_simple, tau):
            halvings += 1
            shift = scale(Fraction(1, 2), shift) if halvings < 64 else scale(0, shift)
            tau = add(start, shift)
        if rs.inner(start, lam) > rs.inner(tau, lam):
            violations.append({'w': group.index_of(w), 'lam': lam, 'tau': tau})
    logger.debug(f"Seshadri minimality: {count} samples, {len(violations)} violations")
    return violations
