"""
FlagVarietyAnalyzer: coordinates the engines for one root system.
"""
import logging
from typing import List, Optional, Sequence

from .config import Settings, load_settings
from .fan.git_fan import GitFan, compute_fan, validate_fan, FanValidation
from .picard.picard import PicardCalculator, PicardCertificate
from .roots.root_system import RootSystem, VectorLike, build
from .saturated.paths import Path, PathBuilder
from .saturated.subsystems import SaturatedSubsystem, enumerate_saturated
from .stability.stability import StabilityReport, mu, report, lemma_1_10_check, unstable_codimension
from .weyl.weyl_group import WeylElement, WeylGroup


class FlagVarietyAnalyzer:
    """
    One root system with its Weyl group and lazily built saturated subsystems.

    Every command-line job runs through one analyzer.
    """

    def __init__(self, type_spec: str, settings: Optional[Settings] = None):
        """
        Build the root system and Weyl group of type_spec.

        Args:
            type_spec: e.g. "B4" or "A1xG2"
            settings: runtime settings; read from the environment when omitted
        """
        self.logger = logging.getLogger(__name__)
        self.settings = settings or load_settings()
        self.rs: RootSystem = build(type_spec)
        self.group = WeylGroup(self.rs, cap=self.settings.weyl_cap)
        self._saturated: Optional[List[SaturatedSubsystem]] = None
        self._paths: Optional[PathBuilder] = None

    @property
    def saturated(self) -> List[SaturatedSubsystem]:
        """Saturated subsystems, enumerated once."""
        if self._saturated is None:
            self._saturated = enumerate_saturated(self.rs, self.settings.allow_large)
        return self._saturated

    @property
    def paths(self) -> PathBuilder:
        if self._paths is None:
            self._paths = PathBuilder(self.group)
        return self._paths

    def element(self, word: Sequence[int] = (), times_longest: bool = False) -> WeylElement:
        return self.group.from_word(word, times_longest)

    def stability(self, chi: VectorLike) -> StabilityReport:
        return report(self.group, chi, self.settings.threads)

    def codimension(self, chi: VectorLike) -> int:
        return unstable_codimension(self.group, chi, self.settings.threads)

    def mu(self, chi: VectorLike, w: WeylElement, lam: VectorLike):
        return mu(self.rs, chi, w, lam)

    def lemma_1_10(self):
        return lemma_1_10_check(self.rs)

    def fan(self) -> GitFan:
        return compute_fan(self.group, self.settings.threads, self.settings.allow_large)

    def validate(self, fan: GitFan, seed: int = 0) -> FanValidation:
        return validate_fan(fan, self.group, seed=seed)

    def path(self, sat: SaturatedSubsystem, w: WeylElement, chi: VectorLike) -> Path:
        path = self.paths.build(sat, w, chi)
        self.logger.info(f"path for {sat.label}: {len(path.steps)} steps, N={path.scaling}")
        return path

    def picard_calculator(self) -> PicardCalculator:
        return PicardCalculator(self.group, self.saturated, self.settings.threads, self.settings.allow_large)

    def picard(self, chi: VectorLike) -> PicardCertificate:
        return self.picard_calculator().picard_rank(chi)

    def general_position(self, chi: VectorLike) -> bool:
        return self.picard_calculator().is_general_position(chi)
