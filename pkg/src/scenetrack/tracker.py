"""Scene update: exploration and tracking modes over a persistent graph.

Each frame's detections are associated to persistent objects by attribute
similarity. Exploration only adds and refines nodes. Tracking also
resolves identity conflicts (semantic match at an inconsistent location
moves the old node to the uncertain set and spawns a fresh one) and, at
the end of the frame, prunes objects that should have been visible in the
current POV volume but were not observed.

Per-frame contract details that matter for reproducing a run:
  - a persistent object matched by one detection is claimed and excluded
    from matching by later detections of the same frame;
  - objects spawned earlier in the frame are immediately matchable;
  - recovery (when enabled) runs only after no persistent match exists,
    and restores the original node id;
  - the report lists each node once, by its net transition over the frame.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Dict, List, Optional, Sequence, Set, Tuple

from . import geometry
from .geometry import (
    CameraIntrinsics,
    CameraPose,
    DepthImage,
    Frustum,
    PixelMask,
    back_project,
    bbox_from_points,
    compute_pov_volume,
    frustum_contains,
    is_valid_association,
)
from .graph import (
    BBox3D,
    LAYER_OBJECT,
    LAYER_ROOM,
    LAYER_SUPPORT,
    ObjectNode,
    SceneGraph,
    STATE_PERSISTENT,
    STATE_UNCERTAIN,
    SemanticAttributes,
    add_node,
    infer_hierarchy,
)
from .similarity import Providers, SimilarityConfig, attribute_similarity, find_best_match


class UnknownNodeError(KeyError):
    def __init__(self, node_id: int):
        super().__init__(f"node not in persistent set: {node_id}")
        self.node_id = node_id


@dataclass
class Detection:
    """One observation: semantic attributes plus exactly one geometry
    variant (a precomputed 3D box, or a mask/depth pair to back-project)."""

    attributes: SemanticAttributes
    bbox3d: Optional[BBox3D] = None
    mask: Optional[PixelMask] = None
    depth: Optional[DepthImage] = None

    def __post_init__(self):
        has_box = self.bbox3d is not None
        has_pixels = self.mask is not None and self.depth is not None
        if has_box == has_pixels:
            raise ValueError("detection needs either bbox3d or mask+depth")


@dataclass
class TrackerConfig:
    similarity: SimilarityConfig = field(default_factory=SimilarityConfig)
    epsilon: float = geometry.DEFAULT_EPSILON
    exploration: bool = True
    near: float = geometry.DEFAULT_NEAR
    far: float = geometry.DEFAULT_FAR
    uncertain_recovery: bool = False

    def __post_init__(self):
        if self.epsilon <= 0:
            raise ValueError("epsilon must be positive")
        if not (0 < self.near < self.far):
            raise ValueError("require 0 < near < far")


@dataclass
class FrameInput:
    detections: List[Detection]
    pose: CameraPose
    intrinsics: CameraIntrinsics
    mode_override: Optional[bool] = None  # exploration flag for this frame


@dataclass
class UpdateReport:
    spawned: List[int] = field(default_factory=list)
    updated: List[int] = field(default_factory=list)
    marked_uncertain: List[int] = field(default_factory=list)
    pruned_persistent: List[int] = field(default_factory=list)
    pruned_uncertain: List[int] = field(default_factory=list)
    recovered: List[int] = field(default_factory=list)
    seen: Set[int] = field(default_factory=set)


@dataclass
class PersistentScene:
    """Tracked world state: the graph plus the persistent/uncertain split
    of object-layer nodes. Rooms and supports are static scaffolding."""

    graph: SceneGraph = field(default_factory=SceneGraph)
    persistent: Set[int] = field(default_factory=set)
    uncertain: Set[int] = field(default_factory=set)
    frame_index: int = 0
    next_id: int = 0
    room_polygons: Dict[int, List[Tuple[float, float]]] = field(default_factory=dict)

    def copy(self) -> "PersistentScene":
        return PersistentScene(
            graph=self.graph.copy(),
            persistent=set(self.persistent),
            uncertain=set(self.uncertain),
            frame_index=self.frame_index,
            next_id=self.next_id,
            room_polygons=self.room_polygons,
        )

    def check_invariants(self) -> None:
        overlap = self.persistent & self.uncertain
        if overlap:
            raise ValueError(f"persistent/uncertain overlap: {sorted(overlap)}")
        for nid in self.persistent:
            node = self.graph.nodes.get(nid)
            if node is None or node.state != STATE_PERSISTENT:
                raise ValueError(f"persistent id {nid} missing or mis-stated")
        for nid in self.uncertain:
            node = self.graph.nodes.get(nid)
            if node is None or node.state != STATE_UNCERTAIN:
                raise ValueError(f"uncertain id {nid} missing or mis-stated")
        self.graph.check_invariants()

    def persistent_nodes(self) -> List[ObjectNode]:
        return [self.graph.nodes[i] for i in sorted(self.persistent)]

    def uncertain_nodes(self) -> List[ObjectNode]:
        return [self.graph.nodes[i] for i in sorted(self.uncertain)]

    def support_nodes(self) -> List[ObjectNode]:
        return [n for n in self.graph.nodes.values() if n.layer == LAYER_SUPPORT]

    def room_nodes(self) -> List[ObjectNode]:
        return [n for n in self.graph.nodes.values() if n.layer == LAYER_ROOM]


def build_scene(
    rooms: Sequence[Tuple[str, List[Tuple[float, float]]]] = (),
    supports: Sequence[Tuple[str, BBox3D]] = (),
) -> PersistentScene:
    """Initial scene from static room polygons and support boxes."""
    scene = PersistentScene()
    room_nodes = []
    for label, polygon in rooms:
        xs = [p[0] for p in polygon]
        ys = [p[1] for p in polygon]
        node = ObjectNode(
            id=scene.next_id,
            layer=LAYER_ROOM,
            attributes=SemanticAttributes(label=label),
            bbox=BBox3D((min(xs), min(ys), 0.0), (max(xs), max(ys), 0.0)),
        )
        scene.next_id += 1
        add_node(scene.graph, node)
        scene.room_polygons[node.id] = [tuple(p) for p in polygon]
        room_nodes.append(node)
    support_nodes = []
    for label, bbox in supports:
        node = ObjectNode(
            id=scene.next_id,
            layer=LAYER_SUPPORT,
            attributes=SemanticAttributes(label=label),
            bbox=bbox,
        )
        scene.next_id += 1
        add_node(scene.graph, node)
        support_nodes.append(node)
    scene.graph.edges.extend(
        infer_hierarchy([], support_nodes, room_nodes, scene.room_polygons)
    )
    return scene


def resolve_bbox(detection: Detection, frame: FrameInput) -> Optional[BBox3D]:
    """Detection geometry to a world box; None when nothing back-projects."""
    if detection.bbox3d is not None:
        return detection.bbox3d
    points = back_project(detection.mask, detection.depth, frame.intrinsics, frame.pose)
    if points.shape[0] == 0:
        return None
    return bbox_from_points(points)


def spawn_object(
    scene: PersistentScene,
    attributes: SemanticAttributes,
    bbox: BBox3D,
    seen: Optional[Set[int]] = None,
) -> int:
    """New persistent object node with a fresh id; its belonging edge is
    inferred against the scene's supports."""
    node = ObjectNode(
        id=scene.next_id,
        layer=LAYER_OBJECT,
        attributes=attributes,
        bbox=bbox,
        state=STATE_PERSISTENT,
        last_seen_frame=scene.frame_index,
    )
    scene.next_id += 1
    add_node(scene.graph, node)
    scene.persistent.add(node.id)
    scene.graph.edges.extend(
        infer_hierarchy([node], scene.support_nodes(), [], scene.room_polygons)
    )
    if seen is not None:
        seen.add(node.id)
    return node.id


def update_bbox(scene: PersistentScene, node_id: int, bbox: BBox3D) -> None:
    """Replace the node's box with the newest observation."""
    if node_id not in scene.persistent:
        raise UnknownNodeError(node_id)
    node = scene.graph.nodes[node_id]
    scene.graph.nodes[node_id] = replace(
        node, bbox=bbox, last_seen_frame=scene.frame_index
    )


def mark_uncertain_and_remove(scene: PersistentScene, node_id: int) -> None:
    """Move a persistent node into the uncertain set and strip its edges."""
    if node_id not in scene.persistent:
        raise UnknownNodeError(node_id)
    node = scene.graph.nodes[node_id]
    scene.persistent.discard(node_id)
    scene.uncertain.add(node_id)
    scene.graph.nodes[node_id] = replace(node, state=STATE_UNCERTAIN)
    scene.graph.drop_edges_of(node_id)


def recover_uncertain(
    scene: PersistentScene,
    attributes: SemanticAttributes,
    bbox: BBox3D,
    config: TrackerConfig,
    providers: Providers,
) -> Optional[int]:
    """Restore an uncertain node when the new observation both matches it
    semantically and lands where the node was last seen."""
    if not config.uncertain_recovery:
        return None
    best_id: Optional[int] = None
    best_score = -1.0
    for node in scene.uncertain_nodes():
        score = attribute_similarity(attributes, node.attributes, config.similarity, providers)
        if score < config.similarity.tau:
            continue
        if not is_valid_association(node.bbox, bbox, config.epsilon):
            continue
        if score > best_score:
            best_id = node.id
            best_score = score
    if best_id is None:
        return None
    node = scene.graph.nodes[best_id]
    scene.uncertain.discard(best_id)
    scene.persistent.add(best_id)
    scene.graph.nodes[best_id] = replace(
        node, state=STATE_PERSISTENT, bbox=bbox, last_seen_frame=scene.frame_index
    )
    scene.graph.edges.extend(
        infer_hierarchy(
            [scene.graph.nodes[best_id]], scene.support_nodes(), [], scene.room_polygons
        )
    )
    return best_id


def prune_persistent(scene: PersistentScene, frustum: Frustum, seen: Set[int]) -> List[int]:
    """Drop persistent objects that sit inside the POV volume yet were not
    observed this frame. Objects outside the volume are kept, so nothing
    is deleted merely for being out of view."""
    pruned = []
    for nid in sorted(scene.persistent):
        if nid in seen:
            continue
        if frustum_contains(frustum, scene.graph.nodes[nid].bbox):
            pruned.append(nid)
    for nid in pruned:
        scene.persistent.discard(nid)
        scene.graph.remove_node(nid)
    return pruned


def prune_uncertain(scene: PersistentScene, frustum: Frustum) -> List[int]:
    """Drop uncertain objects whose stored location is back in view: the
    spot was revisited and the object is confirmed absent."""
    pruned = []
    for nid in sorted(scene.uncertain):
        if frustum_contains(frustum, scene.graph.nodes[nid].bbox):
            pruned.append(nid)
    for nid in pruned:
        scene.uncertain.discard(nid)
        scene.graph.remove_node(nid)
    return pruned


def scene_update(
    scene: PersistentScene,
    frame: FrameInput,
    config: TrackerConfig,
    providers: Providers,
) -> Tuple[PersistentScene, UpdateReport]:
    """Process one frame and return the updated scene plus a report.

    The input scene is never mutated; provider failures therefore leave
    the caller's state untouched.
    """
    exploration = (
        frame.mode_override if frame.mode_override is not None else config.exploration
    )
    next_scene = scene.copy()
    start_persistent = set(scene.persistent)
    start_uncertain = set(scene.uncertain)

    seen: Set[int] = set()
    claimed: Set[int] = set()
    bbox_replaced: Set[int] = set()
    spawned_ids: List[int] = []
    recovered_ids: List[int] = []

    for detection in frame.detections:
        bbox = resolve_bbox(detection, frame)
        if bbox is None:
            continue
        match = find_best_match(
            detection.attributes,
            next_scene.persistent_nodes(),
            config.similarity,
            providers,
            claimed,
        )
        if match is None:
            rid = recover_uncertain(
                next_scene, detection.attributes, bbox, config, providers
            )
            if rid is not None:
                recovered_ids.append(rid)
                claimed.add(rid)
                seen.add(rid)
                bbox_replaced.add(rid)
            else:
                spawned_ids.append(
                    spawn_object(next_scene, detection.attributes, bbox, seen)
                )
        else:
            claimed.add(match.id)
            if exploration:
                update_bbox(next_scene, match.id, bbox)
                bbox_replaced.add(match.id)
            elif is_valid_association(match.bbox, bbox, config.epsilon):
                update_bbox(next_scene, match.id, bbox)
                bbox_replaced.add(match.id)
                seen.add(match.id)
            else:
                mark_uncertain_and_remove(next_scene, match.id)
                spawned_ids.append(
                    spawn_object(next_scene, detection.attributes, bbox, seen)
                )

    report = UpdateReport(seen=seen)
    if not exploration:
        frustum = compute_pov_volume(
            frame.pose, frame.intrinsics, config.near, config.far
        )
        report.pruned_persistent = prune_persistent(next_scene, frustum, seen)
        report.pruned_uncertain = prune_uncertain(next_scene, frustum)

    # net transitions over the frame
    report.spawned = sorted(i for i in spawned_ids if i in next_scene.persistent)
    report.recovered = sorted(
        i for i in recovered_ids if i in next_scene.persistent and i in start_uncertain
    )
    report.updated = sorted(
        i
        for i in bbox_replaced
        if i in start_persistent and i in next_scene.persistent
    )
    report.marked_uncertain = sorted(
        i for i in next_scene.uncertain if i not in start_uncertain
    )

    next_scene.frame_index += 1
    next_scene.check_invariants()
    return next_scene, report
