"""
JSON documents for flagstab results.

Rationals are written as "p/q" strings and weights as {"basis", "coords"}
objects, so every document parses back to the exact values it came from.
"""
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

from ..fan.git_fan import Crossing, FanCone, FanLocation, FanValidation, GitFan
from ..linalg.cones import ConeH, generators_of
from ..linalg.rational import QVector, format_rational, parse_rational
from ..picard.picard import PicardCertificate
from ..roots.root_system import FUNDAMENTAL, SIMPLE, RootSystem, Weight
from ..saturated.paths import Path
from ..saturated.subsystems import SaturatedSubsystem
from ..stability.stability import StabilityReport
from ..weyl.weyl_group import WeylElement, WeylGroup

SCHEMA_VERSION = "1.0"


def vector_to_list(v: Sequence[Fraction]) -> List[str]:
    return [format_rational(a) for a in v]


def vector_from_list(values: Sequence[str]) -> QVector:
    return tuple(parse_rational(str(a)) for a in values)


def weight_to_dict(coords: Sequence[Fraction], basis: str = SIMPLE) -> Dict[str, Any]:
    return {'basis': basis, 'coords': vector_to_list(coords)}


def weight_from_dict(data: Dict[str, Any]) -> Weight:
    return Weight(vector_from_list(data['coords']), data['basis'])


def decode(value: Any) -> Any:
    """
    Turn a parsed document back into exact values.

    "p/q" strings become Fractions and weight objects become Weights; other
    values are returned unchanged.
    """
    if isinstance(value, dict):
        if set(value) == {'basis', 'coords'}:
            return weight_from_dict(value)
        return {k: decode(v) for k, v in value.items()}
    if isinstance(value, list):
        return [decode(v) for v in value]
    if isinstance(value, str) and '/' in value:
        try:
            return parse_rational(value)
        except ValueError:
            return value
    return value


def document(command: str, type_spec: str, result: Dict[str, Any]) -> Dict[str, Any]:
    return {'schema_version': SCHEMA_VERSION, 'command': command, 'type_spec': type_spec,
            'result': result}


def element_to_dict(group: WeylGroup, w: WeylElement) -> Dict[str, Any]:
    return {'index': group.index_of(w), 'length': w.length,
            'matrix': [list(row) for row in w.matrix]}


def cone_to_dict(cone: ConeH) -> Dict[str, Any]:
    return {'dim': cone.dim,
            'normals': [vector_to_list(n) for n in cone.normals],
            'generators': [vector_to_list(g) for g in generators_of(cone)]}


def cone_from_dict(data: Dict[str, Any]) -> ConeH:
    return ConeH.from_normals([vector_from_list(n) for n in data['normals']], data['dim'])


def stability_to_dict(rs: RootSystem, group: WeylGroup, rep: StabilityReport) -> Dict[str, Any]:
    return {
        'chi': weight_to_dict(rs.coroot_pairings(rep.chi), FUNDAMENTAL),
        'wst': [element_to_dict(group, group.elements[k]) for k in rep.wst],
        'unstable_codim': rep.unstable_codim,
        'max_unstable_length': rep.max_unstable_length,
        'sigma': cone_to_dict(rep.sigma),
        'lemma_1_10_applicable': rep.lemma_1_10_applicable,
        'reflected_longest_semistable': {str(i): ok for i, ok in rep.reflected_longest.items()},
    }


def fan_to_dict(fan: GitFan) -> Dict[str, Any]:
    return {
        'type_spec': fan.type_spec,
        'maximal_cones': [{'cone': cone_to_dict(c.cone),
                           'sample': weight_to_dict(c.sample),
                           'fingerprint': list(c.fingerprint)} for c in fan.maximal_cones],
        'walls': [vector_to_list(n) for n in fan.walls],
        'merged': fan.merged,
        'piece_count': fan.piece_count,
    }


def fan_from_dict(data: Dict[str, Any]) -> GitFan:
    cones = [FanCone(cone_from_dict(c['cone']), vector_from_list(c['sample']['coords']),
                     tuple(c['fingerprint'])) for c in data['maximal_cones']]
    return GitFan(data['type_spec'], cones, [vector_from_list(n) for n in data['walls']],
                  data['merged'], data['piece_count'])


def location_to_dict(location: FanLocation) -> Dict[str, Any]:
    return {'cones': list(location.cones), 'interior': location.interior,
            'fingerprint': list(location.fingerprint)}


def validation_to_dict(validation: FanValidation) -> Dict[str, Any]:
    violations = []
    for v in validation.violations:
        entry = {k: (vector_to_list(x) if k == 'point' and x is not None else x) for k, x in v.items()}
        if 'cones' in entry:
            entry['cones'] = list(entry['cones'])
        violations.append(entry)
    return {'passed': validation.passed, 'grid_points': validation.grid_points,
            'samples_checked': validation.samples_checked, 'violations': violations}


def crossings_to_dict(report: Dict[str, Any]) -> Dict[str, Any]:
    crossings: List[Crossing] = report['crossings']
    return {
        'crossings': [{'t': format_rational(c.t), 'gained': list(c.gained), 'lost': list(c.lost)}
                      for c in crossings],
        'pieces': [{'from': format_rational(lo), 'to': format_rational(hi), 'fingerprint': list(fp)}
                   for lo, hi, fp in report['pieces']],
    }


def subsystem_to_dict(rs: RootSystem, index: int, sat: SaturatedSubsystem) -> Dict[str, Any]:
    return {
        'index': index,
        'label': sat.label,
        'rank': sat.rank,
        'span': [vector_to_list(b) for b in sat.span.basis],
        'positive_roots': [vector_to_list(rs.all_roots[i]) for i in sat.positive],
        'highest_roots': [vector_to_list(rs.all_roots[i]) for i in sat.highest_roots()],
    }


def path_to_dict(rs: RootSystem, group: WeylGroup, path: Path,
                 violations: Optional[List[str]] = None) -> Dict[str, Any]:
    return {
        'w': element_to_dict(group, path.w),
        'chi': weight_to_dict(rs.coroot_pairings(path.chi), FUNDAMENTAL),
        'target': weight_to_dict(path.target),
        'steps': [{'point': weight_to_dict(s.point),
                   'root': vector_to_list(rs.all_roots[s.root]),
                   'k': format_rational(s.k),
                   'subsystem': s.subsystem.label} for s in path.steps],
        'end': weight_to_dict(path.end),
        'N': path.scaling,
        'violations': list(violations or []),
    }


def picard_to_dict(cert: PicardCertificate, general_position: Optional[bool] = None) -> Dict[str, Any]:
    return {
        'chi': weight_to_dict(cert.chi),
        'rank': cert.rank,
        'an_caveat': cert.an_caveat,
        'general_position': general_position,
        'raw_row_count': cert.raw_row_count,
        'constraints': [vector_to_list(r) for r in cert.constraints],
        'nullspace_basis': [vector_to_list(v) for v in cert.nullspace_basis],
        'per_w': [{'w': p.w_index, 'u': p.u_index,
                   'profile': [vector_to_list(b) for b in p.profile.basis],
                   'complement': [vector_to_list(n) for n in p.complement],
                   'qualifying': list(p.qualifying)} for p in cert.per_w],
    }


def picard_from_dict(data: Dict[str, Any]) -> PicardCertificate:
    """The numeric part of a Picard document (per-element records are not rebuilt)."""
    return PicardCertificate(
        chi=vector_from_list(data['chi']['coords']),
        constraints=[vector_from_list(r) for r in data['constraints']],
        nullspace_basis=[vector_from_list(v) for v in data['nullspace_basis']],
        rank=data['rank'],
        an_caveat=data['an_caveat'],
        raw_row_count=data['raw_row_count'],
    )
