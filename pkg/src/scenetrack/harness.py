"""Scenario replay, ground-truth scoring, the component ablation grid and
the object-level vs voxel-level memory comparison.

Scoring reuses the tracker's own similarity configuration and epsilon on
purpose (documented choice), so it is not an independent oracle:
  - exists: at the event's evaluation frame some persistent object matches
    the event attributes at/above tau, centered within epsilon of the
    expected box;
  - moved: at the deadline the object matches at its new box and no
    persistent node matches at the old one (the old box is the
    expected_bbox of the object's most recent earlier exists/moved event);
  - removed: at the deadline no persistent node matches the attributes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .geometry import centroid_distance
from .graph import (
    BBox3D,
    SemanticAttributes,
    object_memory_bytes,
    voxel_baseline_bytes,
)
from .scenario import (
    EVENT_EXISTS,
    EVENT_MOVED,
    EVENT_REMOVED,
    GroundTruthEvent,
    Scenario,
)
from .similarity import Providers, SimilarityConfig, attribute_similarity
from .tracker import (
    PersistentScene,
    TrackerConfig,
    UpdateReport,
    build_scene,
    scene_update,
)


@dataclass
class EventOutcome:
    kind: str
    object_key: str
    frame: int
    deadline: int
    achieved: bool


@dataclass
class MetricsReport:
    detections: Tuple[int, int]  # (achieved, expected)
    deletions: Tuple[int, int]
    updates: Tuple[int, int]
    events: List[EventOutcome] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "detections": {"achieved": self.detections[0], "expected": self.detections[1]},
            "deletions": {"achieved": self.deletions[0], "expected": self.deletions[1]},
            "updates": {"achieved": self.updates[0], "expected": self.updates[1]},
            "events": [
                {
                    "kind": e.kind,
                    "object_key": e.object_key,
                    "frame": e.frame,
                    "deadline": e.deadline,
                    "achieved": e.achieved,
                }
                for e in self.events
            ],
        }


@dataclass
class FrameLog:
    """Per-frame observability: the update report plus a snapshot of the
    persistent object nodes after the frame."""

    frame: int
    exploration: bool
    report: UpdateReport
    persistent_objects: Dict[int, Tuple[SemanticAttributes, BBox3D]]


@dataclass
class ReplayResult:
    scene: PersistentScene
    metrics: MetricsReport
    frame_logs: List[FrameLog]
    peak_object_bytes: int
    peak_object_count: int
    observed_bounds: Optional[BBox3D]


def _node_matches(
    node_attrs: SemanticAttributes,
    node_bbox: BBox3D,
    event_attrs: SemanticAttributes,
    expected_bbox: Optional[BBox3D],
    config: TrackerConfig,
    providers: Providers,
) -> bool:
    score = attribute_similarity(event_attrs, node_attrs, config.similarity, providers)
    if score < config.similarity.tau:
        return False
    if expected_bbox is not None:
        return centroid_distance(node_bbox, expected_bbox) <= config.epsilon
    return True


def _old_bbox_for(event: GroundTruthEvent, all_events: Sequence[GroundTruthEvent]) -> Optional[BBox3D]:
    prior = [
        e
        for e in all_events
        if e.object_key == event.object_key
        and e.frame < event.frame
        and e.kind in (EVENT_EXISTS, EVENT_MOVED)
        and e.expected_bbox is not None
    ]
    if not prior:
        return None
    return max(prior, key=lambda e: e.frame).expected_bbox


def score_event(
    event: GroundTruthEvent,
    persistent_objects: Dict[int, Tuple[SemanticAttributes, BBox3D]],
    all_events: Sequence[GroundTruthEvent],
    config: TrackerConfig,
    providers: Providers,
) -> bool:
    """Ground-truth outcome of one event against a persistent-set snapshot."""
    matches = [
        nid
        for nid, (attrs, bbox) in persistent_objects.items()
        if _node_matches(attrs, bbox, event.attributes, event.expected_bbox, config, providers)
    ]
    if event.kind == EVENT_EXISTS:
        return bool(matches)
    if event.kind == EVENT_REMOVED:
        return not matches
    # moved: present at the new location, no duplicate left at the old one
    if not matches:
        return False
    old_bbox = _old_bbox_for(event, all_events)
    if old_bbox is None:
        return True
    duplicates = [
        nid
        for nid, (attrs, bbox) in persistent_objects.items()
        if _node_matches(attrs, bbox, event.attributes, old_bbox, config, providers)
    ]
    return not duplicates


def _snapshot(scene: PersistentScene) -> Dict[int, Tuple[SemanticAttributes, BBox3D]]:
    return {
        nid: (scene.graph.nodes[nid].attributes, scene.graph.nodes[nid].bbox)
        for nid in scene.persistent
    }


def _union_bbox(a: Optional[BBox3D], b: BBox3D) -> BBox3D:
    if a is None:
        return b
    return BBox3D(
        tuple(min(x, y) for x, y in zip(a.min_corner, b.min_corner)),
        tuple(max(x, y) for x, y in zip(a.max_corner, b.max_corner)),
    )


def persistent_object_bytes(scene: PersistentScene) -> int:
    """Byte budget of the persistent object-layer nodes."""
    return sum(
        object_memory_bytes(scene.graph.nodes[nid]) for nid in scene.persistent
    )


def replay(
    scenario: Scenario,
    config: TrackerConfig,
    providers: Providers,
) -> ReplayResult:
    """Feed the scenario's frames through the tracker and score its
    ground truth."""
    scene = build_scene(rooms=scenario.rooms, supports=scenario.supports)
    by_eval_frame: Dict[int, List[int]] = {}
    for idx, event in enumerate(scenario.ground_truth):
        by_eval_frame.setdefault(event.evaluation_frame, []).append(idx)

    outcomes: Dict[int, bool] = {}
    frame_logs: List[FrameLog] = []
    peak_bytes = persistent_object_bytes(scene)
    peak_count = len(scene.persistent)
    bounds: Optional[BBox3D] = None
    for _, bbox in scenario.supports:
        bounds = _union_bbox(bounds, bbox)

    for fi, frame in enumerate(scenario.frames):
        scene, report = scene_update(scene, frame, config, providers)
        snapshot = _snapshot(scene)
        frame_logs.append(
            FrameLog(
                frame=fi,
                exploration=scenario.exploration_flags[fi],
                report=report,
                persistent_objects=snapshot,
            )
        )
        frame_bytes = persistent_object_bytes(scene)
        if frame_bytes > peak_bytes:
            peak_bytes = frame_bytes
            peak_count = len(scene.persistent)
        for _, bbox in snapshot.values():
            bounds = _union_bbox(bounds, bbox)
        for idx in by_eval_frame.get(fi, ()):
            outcomes[idx] = score_event(
                scenario.ground_truth[idx],
                snapshot,
                scenario.ground_truth,
                config,
                providers,
            )

    events = []
    tallies = {EVENT_EXISTS: [0, 0], EVENT_MOVED: [0, 0], EVENT_REMOVED: [0, 0]}
    for idx, event in enumerate(scenario.ground_truth):
        achieved = outcomes.get(idx, False)
        tallies[event.kind][1] += 1
        if achieved:
            tallies[event.kind][0] += 1
        events.append(
            EventOutcome(
                kind=event.kind,
                object_key=event.object_key,
                frame=event.frame,
                deadline=event.evaluation_frame,
                achieved=achieved,
            )
        )

    metrics = MetricsReport(
        detections=tuple(tallies[EVENT_EXISTS]),
        deletions=tuple(tallies[EVENT_REMOVED]),
        updates=tuple(tallies[EVENT_MOVED]),
        events=events,
    )
    return ReplayResult(
        scene=scene,
        metrics=metrics,
        frame_logs=frame_logs,
        peak_object_bytes=peak_bytes,
        peak_object_count=peak_count,
        observed_bounds=bounds,
    )


# --- ablation ----------------------------------------------------------------

# subset order of the published component study
ABLATION_SUBSETS: Tuple[Tuple[str, ...], ...] = (
    ("label", "color", "material", "description"),
    ("description", "material", "color"),
    ("label", "material", "color"),
    ("label", "description"),
    ("description",),
    ("label",),
)


@dataclass
class AblationRow:
    components: Tuple[str, ...]
    deletion_rate: float
    update_rate: float

    def as_dict(self) -> dict:
        return {
            "components": list(self.components),
            "deletion_rate": self.deletion_rate,
            "update_rate": self.update_rate,
        }


def _rate(pair: Tuple[int, int]) -> float:
    achieved, expected = pair
    if expected == 0:
        return 1.0
    return achieved / expected


def run_ablation(
    scenarios: Sequence[Scenario],
    subsets: Sequence[Sequence[str]],
    config: TrackerConfig,
    providers: Providers,
) -> List[AblationRow]:
    """One row per component subset: deletion and update rates averaged
    across the scenarios."""
    if not scenarios or not subsets:
        raise ValueError("need at least one scenario and one subset")
    rows = []
    for subset in subsets:
        sub_similarity = SimilarityConfig(
            weights=config.similarity.weights, components=tuple(subset), tau=config.similarity.tau
        )
        sub_config = TrackerConfig(
            similarity=sub_similarity,
            epsilon=config.epsilon,
            exploration=config.exploration,
            near=config.near,
            far=config.far,
            uncertain_recovery=config.uncertain_recovery,
        )
        deletion_rates = []
        update_rates = []
        for scenario in scenarios:
            result = replay(scenario, sub_config, providers)
            deletion_rates.append(_rate(result.metrics.deletions))
            update_rates.append(_rate(result.metrics.updates))
        rows.append(
            AblationRow(
                components=tuple(subset),
                deletion_rate=sum(deletion_rates) / len(deletion_rates),
                update_rate=sum(update_rates) / len(update_rates),
            )
        )
    return rows


def format_ablation_table(rows: Sequence[AblationRow]) -> str:
    """Aligned text table, rows in input order."""
    header = f"{'components':<42} {'deletions':>9} {'updates':>9}"
    lines = [header, "-" * len(header)]
    for row in rows:
        name = "+".join(row.components)
        lines.append(f"{name:<42} {row.deletion_rate:>9.3f} {row.update_rate:>9.3f}")
    return "\n".join(lines) + "\n"


# --- memory ------------------------------------------------------------------


def memory_document(
    object_count: int,
    object_bytes: int,
    voxel_count: int,
    embedding_dim: int = 512,
    bytes_per_float: int = 2,
) -> dict:
    baseline = voxel_baseline_bytes(voxel_count, embedding_dim, bytes_per_float)
    return {
        "object_count": object_count,
        "object_bytes": object_bytes,
        "voxel_count": voxel_count,
        "embedding_dim": embedding_dim,
        "bytes_per_float": bytes_per_float,
        "voxel_baseline_bytes": baseline,
        "reduction_factor": (baseline / object_bytes) if object_bytes else None,
    }


def memory_report(
    scene: PersistentScene,
    voxel_count: int,
    embedding_dim: int = 512,
    bytes_per_float: int = 2,
) -> dict:
    """Object-level byte total against the dense per-voxel baseline."""
    return memory_document(
        object_count=len(scene.persistent),
        object_bytes=persistent_object_bytes(scene),
        voxel_count=voxel_count,
        embedding_dim=embedding_dim,
        bytes_per_float=bytes_per_float,
    )


def voxel_count_for_bounds(bounds: Optional[BBox3D], resolution: float) -> int:
    """Voxels filling the axis-aligned bounds at the given edge length."""
    if bounds is None:
        return 0
    if resolution <= 0:
        raise ValueError("resolution must be positive")
    import math

    count = 1
    for lo, hi in zip(bounds.min_corner, bounds.max_corner):
        extent = hi - lo
        if extent <= 0:
            return 0
        count *= max(1, math.ceil(extent / resolution - 1e-9))
    return count
