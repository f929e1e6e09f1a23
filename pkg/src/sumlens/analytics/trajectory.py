"""Trajectory sampling between two feature vectors in projection space."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from sumlens.analytics.projection import ProjectionModel

SAMPLE_COUNT = 100
DEFAULT_DELTA = 0.25

BETTER = "better"
WORSE = "worse"
INSIGNIFICANT = "insignificant"


@dataclass(frozen=True)
class TrajectorySegment:
    case_id: str
    weight: int
    points: np.ndarray  # (SAMPLE_COUNT, 2) projected samples, endpoints inclusive
    old_point: np.ndarray
    new_point: np.ndarray
    delta: float  # distance-to-target improvement in z-space
    direction: str

    def to_dict(self) -> dict:
        return {
            "case_id": self.case_id,
            "weight": self.weight,
            "points": self.points.tolist(),
            "old_point": self.old_point.tolist(),
            "new_point": self.new_point.tolist(),
            "delta": self.delta,
            "direction": self.direction,
        }


def sample_trajectory(
    model: ProjectionModel,
    old_z: Sequence[float],
    new_z: Sequence[float],
    target_z: Sequence[float],
    included_dims: Sequence[int] | None = None,
    delta: float = DEFAULT_DELTA,
    case_id: str = "",
    weight: int = 1,
) -> TrajectorySegment:
    """Project 100 interpolated points and classify the movement.

    The better/worse call is made in feature z-space (restricted to the
    included feature dimensions), not in screen space: delta is the drop
    in Euclidean distance to the target vector.
    """
    old = np.asarray(old_z, dtype=float)
    new = np.asarray(new_z, dtype=float)
    target = np.asarray(target_z, dtype=float)

    ts = np.linspace(0.0, 1.0, SAMPLE_COUNT)
    samples = np.vstack([model.project(old + t * (new - old)) for t in ts])

    dims = list(included_dims) if included_dims is not None else list(range(len(old)))
    d_old = float(np.linalg.norm(old[dims] - target[dims]))
    d_new = float(np.linalg.norm(new[dims] - target[dims]))
    improvement = d_old - d_new

    if abs(improvement) < delta:
        direction = INSIGNIFICANT
    elif improvement > 0:
        direction = BETTER
    else:
        direction = WORSE

    return TrajectorySegment(
        case_id=case_id,
        weight=weight,
        points=samples,
        old_point=samples[0],
        new_point=samples[-1],
        delta=improvement,
        direction=direction,
    )
