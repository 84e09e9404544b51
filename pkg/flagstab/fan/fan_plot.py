"""
SVG drawing of a rank-2 GIT fan.
"""
import logging
from typing import Sequence

import matplotlib
matplotlib.use("Agg")
from matplotlib import pyplot as plt
import numpy as np

from ..errors import ValidationError
from ..linalg.cones import generators_of
from ..roots.root_system import RootSystem
from .git_fan import GitFan

logger = logging.getLogger(__name__)


def _embedding(rs: RootSystem) -> np.ndarray:
    """Matrix taking simple coordinates to Euclidean coordinates (v -> L^T v with G = L L^T)."""
    gram = np.array([[float(a) for a in row] for row in rs.gram])
    return np.linalg.cholesky(gram).T


def _direction(embed: np.ndarray, v: Sequence) -> np.ndarray:
    point = embed @ np.array([float(a) for a in v])
    return point / np.linalg.norm(point)


def render_svg(fan: GitFan, rs: RootSystem, path: str) -> str:
    """
    Draw the chamber, its walls and the maximal cones of a rank-2 fan.

    Args:
        fan: the fan to draw
        rs: its root system
        path: output file; written as SVG

    Returns:
        the path written

    Raises:
        ValidationError: the root system does not have rank 2
    """
    if rs.rank != 2:
        raise ValidationError(f"fan diagrams are only drawn for rank 2, not {rs.type_spec}", field="svg")
    embed = _embedding(rs)
    fig, ax = plt.subplots(figsize=(6, 6))
    colors = plt.cm.tab10.colors

    for k, fan_cone in enumerate(fan.maximal_cones):
        rays = [_direction(embed, g) for g in generators_of(fan_cone.cone)]
        if len(rays) == 2:
            xs = [0.0, rays[0][0], rays[1][0]]
            ys = [0.0, rays[0][1], rays[1][1]]
            ax.fill(xs, ys, color=colors[k % len(colors)], alpha=0.35, label=f"cone {k}")
        middle = _direction(embed, fan_cone.sample) * 0.6
        ax.text(middle[0], middle[1], str(k), ha="center", va="center")

    for pi in rs.fundamental_weights:
        end = _direction(embed, pi)
        ax.plot([0, end[0]], [0, end[1]], color="black", linewidth=2)
    for normal in fan.walls:
        # the wall meets the chamber along one ray
        along = (-normal[1], normal[0])
        if not all(rs.inner(along, rs.simple_roots[i]) >= 0 for i in range(2)):
            along = (normal[1], -normal[0])
        end = _direction(embed, along)
        ax.plot([0, end[0]], [0, end[1]], color="black", linestyle="--", linewidth=1)

    ax.set_aspect("equal")
    ax.set_xlim(-1.1, 1.1)
    ax.set_ylim(-1.1, 1.1)
    ax.axis("off")
    ax.set_title(f"GIT fan of {fan.type_spec}")
    ax.legend(loc="lower left", fontsize="small")
    fig.savefig(path, format="svg", bbox_inches="tight")
    plt.close(fig)
    logger.info(f"Wrote fan diagram to {path}")
    return path
