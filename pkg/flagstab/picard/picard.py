"""
Rank of the Picard group of the torus quotient of the semistable flags.

For every u = w w0 in W^st the qualifying saturated subsystems cut out a
subspace L_w; a pair (mu0, mu1) survives when w w0 mu0 + mu1 lies in every
L_w. The rank is the dimension of the space of surviving pairs.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from ..config import SATURATED_RANK_GUARD
from ..errors import ScaleGuardError, ValidationError
from ..linalg.rational import QVector, hyperplane_key, mat_vec, nullspace, qvector, rank
from ..linalg.subspace import Subspace, intersect_all
from ..roots.root_system import VectorLike
from ..saturated.subsystems import (SaturatedSubsystem, qualifies, spans_containing,
                                    target_point)
from ..stability.stability import wst
from ..utils import parallel_map
from ..weyl.weyl_group import WeylElement, WeylGroup

logger = logging.getLogger(__name__)


@dataclass
class WeylProfile:
    """Per-element record: u = w w0 in W^st, its subspace L_w and the complement used."""
    w_index: int
    u_index: int
    profile: Subspace
    complement: Tuple[QVector, ...]
    qualifying: Tuple[str, ...]
    rows: Tuple[QVector, ...] = ()


@dataclass
class PicardCertificate:
    """
    Constraint matrix on (mu0, mu1) and the resulting rank.

    Attributes:
        chi: weight in simple coordinates
        constraints: deduplicated rows acting on the 2r-vector (mu0, mu1)
        per_w: one record per semistable element
        nullspace_basis: basis of the pairs satisfying every row
        rank: 2r minus the rank of constraints
        an_caveat: the system has a factor of type A_n
    """
    chi: QVector
    constraints: List[QVector] = field(default_factory=list)
    per_w: List[WeylProfile] = field(default_factory=list)
    nullspace_basis: List[QVector] = field(default_factory=list)
    rank: Optional[int] = None
    an_caveat: bool = False
    raw_row_count: int = 0


class PicardCalculator:
    """
    Assembles Picard constraints for one Weyl group and its saturated subsystems.
    """

    def __init__(self, group: WeylGroup, sats: Sequence[SaturatedSubsystem], threads: int = 1,
                 allow_large: bool = False):
        self.logger = logging.getLogger(__name__)
        rs = group.rs
        if rs.rank > SATURATED_RANK_GUARD and not allow_large:
            raise ScaleGuardError(f"Picard computation is limited to rank {SATURATED_RANK_GUARD}")
        self.group = group
        self.rs = rs
        self.sats = list(sats)
        self.threads = threads

    def qualifying(self, w: WeylElement, chi: VectorLike) -> List[SaturatedSubsystem]:
        target = target_point(self.group, w, chi)
        return [s for s in spans_containing(self.rs, target, self.sats)
                if qualifies(self.group, s, w, chi)]

    def _require_semistable(self, w: WeylElement, chi: VectorLike) -> None:
        target = target_point(self.group, w, chi)
        if any(a > 0 for a in target):
            raise ValidationError("w w0 is not in W^st for this weight", field="w")

    def span_profile(self, w: WeylElement, chi: VectorLike) -> Subspace:
        """Intersection of the spans of every qualifying subsystem for w."""
        self._require_semistable(w, chi)
        return intersect_all((s.span for s in self.qualifying(w, chi)), self.rs.rank)

    def minimal_profile(self, w: WeylElement, chi: VectorLike) -> Subspace:
        """The same intersection restricted to inclusion-minimal qualifying subsystems."""
        self._require_semistable(w, chi)
        found = self.qualifying(w, chi)
        minimal = [s for s in found
                   if not any(o is not s and o.is_subsystem_of(s) and o.roots != s.roots for o in found)]
        return intersect_all((s.span for s in minimal), self.rs.rank)

    def validate_minimal_profile(self, chi: VectorLike) -> List[int]:
        """Indices of semistable-target elements where the minimal and full profiles differ."""
        mismatches = []
        for u in wst(self.group, chi, self.threads):
            w = self.group.multiply(u, self.group.longest)
            if self.minimal_profile(w, chi) != self.span_profile(w, chi):
                mismatches.append(self.group.index_of(w))
        return mismatches

    def open_cell_constraints(self, chi: VectorLike) -> Subspace:
        """Intersection of the spans over every subsystem whose span contains w0 chi."""
        chi_simple = self.rs.require_strictly_dominant(chi)
        w0_chi = self.group.longest.act(chi_simple)
        return intersect_all((s.span for s in spans_containing(self.rs, w0_chi, self.sats)),
                             self.rs.rank)

    def is_general_position(self, chi: VectorLike) -> bool:
        """Only the whole system has a span containing w0 chi."""
        chi_simple = self.rs.require_strictly_dominant(chi)
        w0_chi = self.group.longest.act(chi_simple)
        return all(s.span.is_full for s in spans_containing(self.rs, w0_chi, self.sats))

    def _profile_record(self, u: WeylElement, chi_simple: QVector) -> Tuple[WeylProfile, List[QVector]]:
        group = self.group
        rs = self.rs
        w = group.multiply(u, group.longest)
        found = self.qualifying(w, chi_simple)
        profile = intersect_all((s.span for s in found), rs.rank)
        complement = tuple(profile.orthogonal_complement(rs.gram).basis)
        rows = []
        for n in complement:
            functional = mat_vec(rs.gram, n)
            # (n, u mu0) = (G n) . (u mu0) = (u^T G n) . mu0
            left = tuple(sum((u.matrix[k][j] * functional[k] for k in range(rs.rank)), Fraction(0))
                         for j in range(rs.rank))
            rows.append(left + functional)
        record = WeylProfile(group.index_of(w), group.index_of(u), profile, complement,
                             tuple(s.label for s in found), tuple(rows))
        return record, rows

    def assemble_constraints(self, chi: VectorLike) -> PicardCertificate:
        """
        Collect the constraint rows from every w with w w0 in W^st.
        """
        chi_simple = self.rs.require_strictly_dominant(chi)
        semistable = wst(self.group, chi_simple, self.threads)
        results = parallel_map(lambda u: self._profile_record(u, chi_simple), semistable, self.threads,
                               desc="Picard profiles")
        cert = PicardCertificate(chi=chi_simple, an_caveat=self.rs.has_type_a)
        seen = set()
        for record, rows in sorted(results, key=lambda item: item[0].w_index):
            cert.per_w.append(record)
            for row in rows:
                cert.raw_row_count += 1
                key = hyperplane_key(row)
                if key not in seen:
                    seen.add(key)
                    cert.constraints.append(qvector(key))
        cert.constraints.sort()
        self.logger.info(f"{len(semistable)} semistable elements gave {cert.raw_row_count} rows, "
                         f"{len(cert.constraints)} distinct")
        return cert

    def finalize(self, cert: PicardCertificate) -> PicardCertificate:
        dim = 2 * self.rs.rank
        cert.nullspace_basis = nullspace(cert.constraints, dim)
        cert.rank = dim - rank(cert.constraints, dim)
        if cert.an_caveat:
            self.logger.warning(f"{self.rs.type_spec} has a type A factor; the Picard rank is "
                                f"computed but the codimension-two hypothesis is not guaranteed")
        self.logger.info(f"Picard rank of {self.rs.type_spec}: {cert.rank}")
        return cert

    def picard_rank(self, chi: VectorLike) -> PicardCertificate:
        return self.finalize(self.assemble_constraints(chi))

    def nullspace_witness_check(self, cert: PicardCertificate) -> List[str]:
        """
        Every nullspace vector (mu0, mu1) must put w w0 mu0 + mu1 in each recorded L_w.
        """
        r = self.rs.rank
        violations = []
        for k, mu in enumerate(cert.nullspace_basis):
            mu0, mu1 = mu[:r], mu[r:]
            for record in cert.per_w:
                u = self.group.elements[record.u_index]
                image = tuple(a + b for a, b in zip(u.act(mu0), mu1))
                if record.profile.coordinates(image) is None:
                    violations.append(f"nullspace vector {k} leaves L_w for w #{record.w_index}")
        return violations


def constraint_rank(rows: Sequence[Sequence], dim: int) -> int:
    """Rank of a row set without deduplication."""
    return rank([qvector(r) for r in rows], dim)
