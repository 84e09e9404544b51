"""
Command-line jobs: argument parsing and dispatch to the analyzer.
"""
import argparse
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from ..analyzer import FlagVarietyAnalyzer
from ..config import Settings, load_settings
from ..errors import ScaleGuardError, ValidationError
from ..fan.fan_plot import render_svg
from ..fan.git_fan import classify, crossing_report
from ..linalg.rational import format_rational, parse_rational
from ..roots.root_system import BASES, FUNDAMENTAL, Weight
from ..saturated.paths import qualifying_pairs
from ..utils import save_json_file
from . import serialization

logger = logging.getLogger(__name__)

COMMANDS = ('wst', 'fan', 'picard', 'path', 'saturated', 'codim', 'mu', 'lemma110')
NEEDS_CHI = ('wst', 'picard', 'path', 'codim', 'mu')

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_SCALE = 3


@dataclass
class JobSpec:
    """
    One command invocation.

    Attributes:
        command: one of COMMANDS
        type_spec: root system, e.g. "B4"
        chi: weight coordinates in `basis` (fundamental by default)
    """
    command: str
    type_spec: str
    chi: Optional[List[Fraction]] = None
    basis: str = FUNDAMENTAL
    word: List[int] = field(default_factory=list)
    times_w0: bool = False
    lam: Optional[List[Fraction]] = None
    chi_to: Optional[List[Fraction]] = None
    subsystem: Optional[int] = None
    output: Optional[str] = None
    svg: Optional[str] = None
    validate: bool = False
    seed: int = 0
    threads: Optional[int] = None
    allow_large: bool = False
    verbose: bool = False


def parse_coordinates(text: Optional[str], name: str) -> Optional[List[Fraction]]:
    """Comma-separated rationals, e.g. "10,1,8,2" or "1/2,3"."""
    if text is None:
        return None
    try:
        return [parse_rational(part) for part in text.split(',')]
    except ValidationError as e:
        raise ValidationError(f"--{name}: {e}", field=name) from e


def parse_word(text: Optional[str]) -> List[int]:
    if not text:
        return []
    try:
        return [int(part) for part in text.split(',')]
    except ValueError as e:
        raise ValidationError(f"--word: not a list of integers: {text!r}", field="word") from e


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="flagstab",
        description="Torus-quotient GIT data of flag varieties G/B in exact arithmetic")
    parser.add_argument("command", choices=COMMANDS, help="Computation to run")
    parser.add_argument("type_spec", help="Root system type, e.g. B4 or A1xG2")
    parser.add_argument("--chi", help="Weight coordinates, comma separated")
    parser.add_argument("--basis", choices=BASES, default=FUNDAMENTAL,
                        help="Basis of --chi and --lam (default: fundamental weights)")
    parser.add_argument("--word", help="Weyl element as 1-based simple reflection indices, e.g. 1,2")
    parser.add_argument("--times-w0", action="store_true", help="Right-multiply --word by w0")
    parser.add_argument("--lam", help="One-parameter subgroup for mu, in the chamber")
    parser.add_argument("--chi-to", help="Second weight for a fan crossing report")
    parser.add_argument("--subsystem", type=int, help="Index into the saturated subsystem list (path)")
    parser.add_argument("--output", help="Also write the JSON document to this file")
    parser.add_argument("--svg", help="Write a rank-2 fan diagram to this file")
    parser.add_argument("--validate", action="store_true", help="Validate the computed fan")
    parser.add_argument("--seed", type=int, default=0, help="Seed for randomized checks")
    parser.add_argument("--threads", type=int, help="Worker threads (overrides FLAGSTAB_THREADS)")
    parser.add_argument("--allow-large", action="store_true", help="Lift the default rank guards")
    parser.add_argument("--verbose", action="store_true", help="Debug logging on stderr")
    return parser


def job_from_args(args: argparse.Namespace) -> JobSpec:
    return JobSpec(
        command=args.command,
        type_spec=args.type_spec,
        chi=parse_coordinates(args.chi, "chi"),
        basis=args.basis,
        word=parse_word(args.word),
        times_w0=args.times_w0,
        lam=parse_coordinates(args.lam, "lam"),
        chi_to=parse_coordinates(args.chi_to, "chi-to"),
        subsystem=args.subsystem,
        output=args.output,
        svg=args.svg,
        validate=args.validate,
        seed=args.seed,
        threads=args.threads,
        allow_large=args.allow_large,
        verbose=args.verbose,
    )


class JobRunner:
    """
    Runs one JobSpec against a FlagVarietyAnalyzer and builds its document.
    """

    def __init__(self, job: JobSpec, settings: Optional[Settings] = None):
        self.logger = logging.getLogger(__name__)
        self.job = job
        base = settings or load_settings()
        self.settings = base.with_overrides(threads=job.threads, allow_large=job.allow_large or None)
        self.analyzer = FlagVarietyAnalyzer(job.type_spec, self.settings)
        self.rs = self.analyzer.rs
        self.group = self.analyzer.group

    def _weight(self, coords: Optional[List[Fraction]], name: str) -> Optional[Weight]:
        if coords is None:
            return None
        weight = Weight(tuple(coords), self.job.basis)
        if self.job.basis != 'epsilon' and len(coords) != self.rs.rank:
            raise ValidationError(f"--{name} needs {self.rs.rank} coordinates for {self.rs.type_spec}, "
                                  f"got {len(coords)}", field=name)
        return weight

    def chi(self) -> Optional[Weight]:
        chi = self._weight(self.job.chi, "chi")
        if chi is None and self.job.command in NEEDS_CHI:
            raise ValidationError(f"{self.job.command} requires --chi", field="chi")
        return chi

    def run(self) -> Dict[str, Any]:
        handler = getattr(self, f"_run_{self.job.command}")
        return serialization.document(self.job.command, self.rs.type_spec, handler())

    def _run_wst(self) -> Dict[str, Any]:
        rep = self.analyzer.stability(self.chi())
        return serialization.stability_to_dict(self.rs, self.group, rep)

    def _run_codim(self) -> Dict[str, Any]:
        return {'unstable_codim': self.analyzer.codimension(self.chi()),
                'longest_length': self.group.longest.length}

    def _run_mu(self) -> Dict[str, Any]:
        chi = self.chi()
        lam = self._weight(self.job.lam, "lam")
        if lam is None:
            raise ValidationError("mu requires --lam", field="lam")
        w = self.analyzer.element(self.job.word, self.job.times_w0)
        value = self.analyzer.mu(chi, w, lam)
        return {'w': serialization.element_to_dict(self.group, w),
                'lam': serialization.weight_to_dict(self.rs.to_simple(lam)),
                'mu': format_rational(value)}

    def _run_lemma110(self) -> Dict[str, Any]:
        values = self.analyzer.lemma_1_10()
        return {'values': {str(i + 1): format_rational(v) for i, v in enumerate(values)},
                'all_nonnegative': all(v >= 0 for v in values),
                'has_type_a': self.rs.has_type_a}

    def _run_saturated(self) -> Dict[str, Any]:
        sats = self.analyzer.saturated
        return {'count': len(sats),
                'subsystems': [serialization.subsystem_to_dict(self.rs, k, s) for k, s in enumerate(sats)]}

    def _run_fan(self) -> Dict[str, Any]:
        fan = self.analyzer.fan()
        result = serialization.fan_to_dict(fan)
        chi = self.chi()
        if chi is not None:
            result['location'] = serialization.location_to_dict(classify(fan, self.group, chi))
            chi_to = self._weight(self.job.chi_to, "chi-to")
            if chi_to is not None:
                result['crossings'] = serialization.crossings_to_dict(crossing_report(self.group, chi, chi_to))
        if self.job.validate:
            result['validation'] = serialization.validation_to_dict(
                self.analyzer.validate(fan, seed=self.job.seed))
        if self.job.svg:
            result['svg'] = render_svg(fan, self.rs, self.job.svg)
        return result

    def _run_path(self) -> Dict[str, Any]:
        chi = self.chi()
        sats = self.analyzer.saturated
        if self.job.subsystem is not None and not 0 <= self.job.subsystem < len(sats):
            raise ValidationError(f"--subsystem must be between 0 and {len(sats) - 1}", field="subsystem")
        if self.job.subsystem is not None and (self.job.word or self.job.times_w0):
            w = self.analyzer.element(self.job.word, self.job.times_w0)
            pairs = [(self.group.index_of(w), sats[self.job.subsystem])]
        else:
            pairs = qualifying_pairs(self.group, sats, chi)
            if self.job.subsystem is not None:
                pairs = [(k, s) for k, s in pairs if s is sats[self.job.subsystem]]
            if self.job.word or self.job.times_w0:
                index = self.group.index_of(self.analyzer.element(self.job.word, self.job.times_w0))
                pairs = [(k, s) for k, s in pairs if k == index]
        paths = []
        for k, sat in pairs:
            path = self.analyzer.path(sat, self.group.elements[k], chi)
            violations = self.analyzer.paths.verify(path) + self.analyzer.paths.descent_check(path)
            paths.append(serialization.path_to_dict(self.rs, self.group, path, violations))
        return {'count': len(paths), 'paths': paths}

    def _run_picard(self) -> Dict[str, Any]:
        chi = self.chi()
        cert = self.analyzer.picard(chi)
        return serialization.picard_to_dict(cert, general_position=self.analyzer.general_position(chi))


def run(job: JobSpec, settings: Optional[Settings] = None) -> Tuple[int, Dict[str, Any]]:
    """
    Execute a job.

    Returns:
        (exit status, document); failed jobs return an error document
        with the message and the offending field
    """
    try:
        doc = JobRunner(job, settings).run()
    except ValidationError as e:
        logger.error(f"Invalid input ({e.field or 'input'}): {e}")
        return EXIT_INVALID, {'schema_version': serialization.SCHEMA_VERSION,
                              'error': str(e), 'field': e.field}
    except ScaleGuardError as e:
        logger.error(f"Scale guard: {e}")
        return EXIT_SCALE, {'schema_version': serialization.SCHEMA_VERSION,
                            'error': str(e), 'field': None}
    if job.output and not save_json_file(job.output, doc):
        return EXIT_INVALID, {'schema_version': serialization.SCHEMA_VERSION,
                              'error': f"could not write {job.output}", 'field': 'output'}
    return EXIT_OK, doc

