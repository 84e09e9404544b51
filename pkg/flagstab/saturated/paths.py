"""
Piecewise-linear highest-root paths from 0 to w w0 chi.

Starting at M = 0 inside the affine cone H = w w0 chi + Q+ sat^+, the path
repeatedly walks along minus a component highest root until it hits the
boundary of H, then restricts to the saturated subsystem of the landing face.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

from ..errors import PathConstructionError, ValidationError
from ..linalg.cones import AffCone, ray_hit_boundary
from ..linalg.lp import cone_member
from ..linalg.rational import QVector, denominator_lcm, dot, is_zero, neg, scale, sub
from ..roots.root_system import VectorLike
from ..weyl.weyl_group import WeylElement, WeylGroup
from .subsystems import (SaturatedSubsystem, admissible_roots, qualifies, saturate,
                         target_point)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PathStep:
    """
    One segment M -> M - k * beta, taken inside subsystem.
    """
    point: QVector
    root: int
    k: Fraction
    subsystem: SaturatedSubsystem


@dataclass
class Path:
    """
    A highest-root path for (w, chi).

    Attributes:
        w: the Weyl element
        chi: strictly dominant weight (simple coordinates)
        target: w w0 chi
        steps: segments in order
        end: final point (equal to target)
        scaling: N with every N * M_i and N * k_i integral
    """
    w: WeylElement
    chi: QVector
    target: QVector
    steps: List[PathStep] = field(default_factory=list)
    end: Optional[QVector] = None
    scaling: int = 1

    @property
    def points(self) -> List[QVector]:
        return [s.point for s in self.steps] + ([self.end] if self.end is not None else [])

    @property
    def chain(self) -> List[SaturatedSubsystem]:
        return [s.subsystem for s in self.steps]


class PathBuilder:
    """
    Builds and checks highest-root paths for one Weyl group.
    """

    def __init__(self, group: WeylGroup):
        self.logger = logging.getLogger(__name__)
        self.group = group
        self.rs = group.rs

    def _affine_cone(self, target: QVector, sat: SaturatedSubsystem) -> AffCone:
        return AffCone.create(target, [self.rs.all_roots[i] for i in sat.positive])

    def _minimal_face(self, point: QVector, target: QVector,
                      sat: SaturatedSubsystem) -> SaturatedSubsystem:
        """Saturated subsystem of the minimal face of w w0 chi + Q+ sat^+ containing point."""
        cone = self._affine_cone(target, sat)
        tight = cone.inequalities.tight_normals(sub(point, target))
        face = [self.rs.all_roots[i] for i in sat.positive
                if all(dot(n, self.rs.all_roots[i]) == 0 for n in tight)]
        if len(face) == len(sat.positive):
            return sat
        return saturate(self.rs, face)

    def build(self, sat: SaturatedSubsystem, w: WeylElement, chi: VectorLike) -> Path:
        """
        Construct the path for a qualifying (sat, w, chi).

        Raises:
            ValidationError: sat does not qualify for (w, chi)
            PathConstructionError: no admissible highest root advances, or
                the step guard is exceeded
        """
        rs = self.rs
        chi_simple = rs.require_strictly_dominant(chi)
        if not qualifies(self.group, sat, w, chi_simple):
            raise ValidationError(f"subsystem {sat.label} does not qualify for this w", field="subsystem")
        target = target_point(self.group, w, chi_simple)
        path = Path(w=w, chi=chi_simple, target=target)
        guard = max(1, len(sat.positive) * rs.rank)
        current = sat
        point: QVector = tuple(Fraction(0) for _ in range(rs.rank))

        while point != target:
            if len(path.steps) >= guard:
                raise PathConstructionError(
                    f"path for {sat.label} did not reach w w0 chi within {guard} steps")
            current = self._minimal_face(point, target, current)
            cone = self._affine_cone(target, current)
            admissible = set(admissible_roots(rs, self.group, w, current.positive))
            step = None
            for beta in current.highest_roots():
                if beta not in admissible:
                    continue
                hit = ray_hit_boundary(point, neg(rs.all_roots[beta]), cone)
                if hit.unbounded or hit.t <= 0:
                    continue
                step = PathStep(point, beta, hit.t, current)
                break
            if step is None:
                raise PathConstructionError(
                    f"no component highest root of {current.label} advances from {point}")
            self.logger.debug(f"step {len(path.steps)}: beta={rs.all_roots[step.root]} "
                              f"k={step.k} in {current.label}")
            path.steps.append(step)
            point = sub(point, scale(step.k, rs.all_roots[step.root]))

        path.end = point
        values = [a for p in path.points for a in p] + [s.k for s in path.steps]
        path.scaling = denominator_lcm(values)
        return path

    def verify(self, path: Path) -> List[str]:
        """
        Check every path invariant.

        Returns:
            human-readable violations (empty when the path is sound)
        """
        rs = self.rs
        violations = []
        n = path.scaling
        w_inverse = self.group.inverse(path.w)
        if path.steps and not is_zero(path.steps[0].point):
            violations.append("path does not start at 0")
        if path.end != path.target:
            violations.append("path does not end at w w0 chi")
        previous: Optional[SaturatedSubsystem] = None
        for i, step in enumerate(path.steps):
            beta = rs.all_roots[step.root]
            nxt = path.steps[i + 1].point if i + 1 < len(path.steps) else path.end
            if step.k <= 0:
                violations.append(f"step {i}: k={step.k} is not positive")
            if nxt != sub(step.point, scale(step.k, beta)):
                violations.append(f"step {i}: next point is not M - k beta")
            if step.root not in step.subsystem.highest_roots():
                violations.append(f"step {i}: root is not a component highest root")
            if not rs.is_positive(w_inverse.act(beta)):
                violations.append(f"step {i}: root is not in w Delta^+")
            if previous is not None and not step.subsystem.is_subsystem_of(previous):
                violations.append(f"step {i}: subsystem {step.subsystem.label} is not nested")
            gens = [rs.all_roots[j] for j in step.subsystem.positive]
            if not cone_member(sub(step.point, path.target), gens).feasible:
                violations.append(f"step {i}: point outside w w0 chi + Q+ subsystem^+")
            for j in step.subsystem.simple:
                if rs.inner(step.point, rs.all_roots[j]) > 0:
                    violations.append(f"step {i}: point outside minus the subsystem chamber")
            if (n * step.k).denominator != 1 or any((n * a).denominator != 1 for a in step.point):
                violations.append(f"step {i}: not integral after scaling by {n}")
            previous = step.subsystem
        return violations

    def descent_check(self, path: Path) -> List[str]:
        """
        Walk the scaled path one root at a time.

        For every step and 0 <= l < N k_i requires (N M_{i+1} + l beta_i, beta_i) < 0,
        and (-w0 chi, w^-1 beta_i) >= 0.
        """
        rs = self.rs
        violations = []
        n = path.scaling
        w_inverse = self.group.inverse(path.w)
        minus_w0_chi = neg(self.group.longest.act(path.chi))
        for i, step in enumerate(path.steps):
            beta = rs.all_roots[step.root]
            landing = sub(step.point, scale(step.k, beta))
            scaled = scale(n, landing)
            for l in range(int(n * step.k)):
                value = rs.inner(tuple(a + l * b for a, b in zip(scaled, beta)), beta)
                if value >= 0:
                    violations.append(f"step {i}, l={l}: pairing {value} is not negative")
                    break
            if rs.inner(minus_w0_chi, w_inverse.act(beta)) < 0:
                violations.append(f"step {i}: (-w0 chi, w^-1 beta) is negative")
        return violations


def build_path(group: WeylGroup, sat: SaturatedSubsystem, w: WeylElement, chi: VectorLike) -> Path:
    return PathBuilder(group).build(sat, w, chi)


def verify_path(group: WeylGroup, path: Path) -> List[str]:
    return PathBuilder(group).verify(path)


def descent_check(group: WeylGroup, path: Path) -> List[str]:
    return PathBuilder(group).descent_check(path)


def qualifying_pairs(group: WeylGroup, sats: List[SaturatedSubsystem],
                     chi: VectorLike) -> List[Tuple[int, SaturatedSubsystem]]:
    """All (w index, sat) with sat qualifying for w."""
    pairs = []
    for k, w in enumerate(group.elements):
        for sat in sats:
            if qualifies(group, sat, w, chi):
                pairs.append((k, sat))
    return pairs
