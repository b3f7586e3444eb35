"""Pinhole back-projection, box estimation from points, and the camera
POV volume used to decide when an unseen object should have been visible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from .graph import BBox3D

DEFAULT_NEAR = 0.3
DEFAULT_FAR = 4.0
DEFAULT_EPSILON = 0.5

# percentile window and minimum cloud size for the outlier guard
_TRIM_LO = 1.0
_TRIM_HI = 99.0
_TRIM_MIN_POINTS = 20

_ORTHO_TOL = 1e-6


@dataclass(frozen=True)
class CameraIntrinsics:
    fx: float
    fy: float
    cx: float
    cy: float
    width: int
    height: int

    def __post_init__(self):
        if self.fx <= 0 or self.fy <= 0:
            raise ValueError("focal lengths must be positive")
        if not (0 <= self.cx < self.width and 0 <= self.cy < self.height):
            raise ValueError("principal point outside image")


@dataclass(frozen=True)
class CameraPose:
    """Camera-to-world transform: X_world = R @ X_cam + t."""

    rotation: Tuple[float, ...]  # 9 floats, row-major
    translation: Tuple[float, float, float]

    def __post_init__(self):
        r = np.asarray(self.rotation, dtype=np.float64).reshape(3, 3)
        if not np.allclose(r.T @ r, np.eye(3), atol=_ORTHO_TOL):
            raise ValueError("rotation is not orthonormal")
        if np.linalg.det(r) < 0:
            raise ValueError("rotation must be proper (det +1)")
        object.__setattr__(self, "rotation", tuple(float(v) for v in r.ravel()))
        object.__setattr__(
            self, "translation", tuple(float(v) for v in self.translation)
        )

    def matrix(self) -> np.ndarray:
        return np.asarray(self.rotation, dtype=np.float64).reshape(3, 3)

    def origin(self) -> np.ndarray:
        return np.asarray(self.translation, dtype=np.float64)


@dataclass
class DepthImage:
    width: int
    height: int
    values: np.ndarray  # meters; 0 or NaN = invalid

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=np.float64).reshape(
            self.height, self.width
        )


@dataclass
class PixelMask:
    width: int
    height: int
    values: np.ndarray  # 0/1 membership

    def __post_init__(self):
        self.values = np.asarray(self.values).reshape(self.height, self.width) != 0


@dataclass(frozen=True)
class Frustum:
    """Camera POV volume: apex plus half-angles between near and far."""

    pose: CameraPose
    tan_half_horizontal: float
    tan_half_vertical: float
    near: float
    far: float


def back_project(
    mask: PixelMask, depth: DepthImage, k: CameraIntrinsics, pose: CameraPose
) -> np.ndarray:
    """Lift masked valid-depth pixels into world-frame points (N, 3)."""
    if (mask.width, mask.height) != (depth.width, depth.height):
        raise ValueError(
            f"mask {mask.width}x{mask.height} does not match "
            f"depth {depth.width}x{depth.height}"
        )
    z = depth.values
    valid = mask.values & np.isfinite(z) & (z > 0)
    v_idx, u_idx = np.nonzero(valid)
    if v_idx.size == 0:
        return np.empty((0, 3), dtype=np.float64)
    zs = z[v_idx, u_idx]
    xs = (u_idx - k.cx) * zs / k.fx
    ys = (v_idx - k.cy) * zs / k.fy
    cam_points = np.stack([xs, ys, zs], axis=1)
    return cam_points @ pose.matrix().T + pose.origin()


def bbox_from_points(points: np.ndarray) -> BBox3D:
    """Axis-aligned box over the points.

    Clouds of 20+ points first drop outliers: a point is discarded only
    when it falls outside the [1st, 99th] percentile band on every axis,
    which removes isolated far points while keeping at least 98% of any
    cloud inside the returned box.
    """
    pts = np.asarray(points, dtype=np.float64).reshape(-1, 3)
    if pts.shape[0] == 0:
        raise ValueError("cannot build a bbox from zero points")
    if pts.shape[0] >= _TRIM_MIN_POINTS:
        lo = np.percentile(pts, _TRIM_LO, axis=0)
        hi = np.percentile(pts, _TRIM_HI, axis=0)
        outside = (pts < lo) | (pts > hi)
        keep = ~np.all(outside, axis=1)
        if keep.any():
            pts = pts[keep]
    return BBox3D(tuple(pts.min(axis=0)), tuple(pts.max(axis=0)))


def compute_pov_volume(
    pose: CameraPose, k: CameraIntrinsics, near: float = DEFAULT_NEAR, far: float = DEFAULT_FAR
) -> Frustum:
    if not (0.0 < near < far):
        raise ValueError(f"require 0 < near < far, got near={near} far={far}")
    return Frustum(
        pose=pose,
        tan_half_horizontal=(k.width / 2.0) / k.fx,
        tan_half_vertical=(k.height / 2.0) / k.fy,
        near=near,
        far=far,
    )


def frustum_half_angles(f: Frustum) -> Tuple[float, float]:
    """(horizontal, vertical) half-angles in radians."""
    return math.atan(f.tan_half_horizontal), math.atan(f.tan_half_vertical)


def frustum_contains(f: Frustum, bbox: BBox3D) -> bool:
    """True when the box centroid lies inside the POV volume."""
    c = np.asarray(bbox.centroid(), dtype=np.float64)
    p_cam = f.pose.matrix().T @ (c - f.pose.origin())
    x, y, z = p_cam
    if not (f.near <= z <= f.far):
        return False
    return abs(x / z) <= f.tan_half_horizontal and abs(y / z) <= f.tan_half_vertical


def centroid_distance(a: BBox3D, b: BBox3D) -> float:
    ca = a.centroid()
    cb = b.centroid()
    return math.sqrt(sum((x - y) ** 2 for x, y in zip(ca, cb)))


def is_valid_association(node_bbox: BBox3D, observed: BBox3D, epsilon: float = DEFAULT_EPSILON) -> bool:
    """Spatial consistency: centroids within epsilon (inclusive)."""
    return centroid_distance(node_bbox, observed) <= epsilon
