"""Three-layer scene graph: rooms, supporting objects, objects.

Nodes carry semantic attributes and a 3D bounding box; edges encode
belonging between adjacent layers only. The module also implements the
object-level byte accounting used by the memory footprint report.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Tuple

from shapely.geometry import Point, Polygon

LAYER_ROOM = "room"
LAYER_SUPPORT = "supporting_object"
LAYER_OBJECT = "object"

LAYERS = (LAYER_ROOM, LAYER_SUPPORT, LAYER_OBJECT)

# parent layer expected for each child layer
_PARENT_LAYER = {LAYER_OBJECT: LAYER_SUPPORT, LAYER_SUPPORT: LAYER_ROOM}

STATE_PERSISTENT = "persistent"
STATE_UNCERTAIN = "uncertain"

# byte accounting caps (16-bit bbox floats, 8-bit characters)
BBOX_BYTES = 12
DESCRIPTION_CAP = 100
LABEL_CAP = 15
COLOR_CAP = 15
MATERIAL_CAP = 15
MAX_OBJECT_BYTES = BBOX_BYTES + DESCRIPTION_CAP + LABEL_CAP + COLOR_CAP + MATERIAL_CAP

# hierarchy heuristic: footprint overlap fraction and vertical contact gap
FOOTPRINT_OVERLAP_MIN = 0.5
SUPPORT_CONTACT_DZ = 0.10


class DuplicateNodeIdError(ValueError):
    """Raised when a node id is inserted twice into one graph."""

    def __init__(self, node_id: int):
        super().__init__(f"node id already present in graph: {node_id}")
        self.node_id = node_id


@dataclass(frozen=True)
class SemanticAttributes:
    """Open-vocabulary attribute tuple: label, color, material, description."""

    label: str
    color: str = ""
    material: str = ""
    description: str = ""

    def __post_init__(self):
        if not self.label:
            raise ValueError("label must be non-empty")


@dataclass(frozen=True)
class BBox3D:
    """Axis-aligned box in world frame, meters."""

    min_corner: Tuple[float, float, float]
    max_corner: Tuple[float, float, float]

    def __post_init__(self):
        lo = tuple(float(v) for v in self.min_corner)
        hi = tuple(float(v) for v in self.max_corner)
        if len(lo) != 3 or len(hi) != 3:
            raise ValueError("corners must be 3-vectors")
        for a, b in zip(lo, hi):
            if not (math.isfinite(a) and math.isfinite(b)):
                raise ValueError("bbox coordinates must be finite")
            if a > b:
                raise ValueError(f"min_corner exceeds max_corner: {lo} > {hi}")
        object.__setattr__(self, "min_corner", lo)
        object.__setattr__(self, "max_corner", hi)

    def centroid(self) -> Tuple[float, float, float]:
        return tuple((a + b) / 2.0 for a, b in zip(self.min_corner, self.max_corner))

    def extent(self) -> Tuple[float, float, float]:
        return tuple(b - a for a, b in zip(self.min_corner, self.max_corner))


@dataclass(frozen=True)
class ObjectNode:
    id: int
    layer: str
    attributes: SemanticAttributes
    bbox: BBox3D
    state: str = STATE_PERSISTENT
    last_seen_frame: Optional[int] = None

    def __post_init__(self):
        if self.layer not in LAYERS:
            raise ValueError(f"unknown layer: {self.layer}")
        if self.state not in (STATE_PERSISTENT, STATE_UNCERTAIN):
            raise ValueError(f"unknown state: {self.state}")


@dataclass(frozen=True)
class BelongingEdge:
    child_id: int
    parent_id: int


@dataclass
class SceneGraph:
    """Mutable container owned by a single writer (the tracker)."""

    nodes: Dict[int, ObjectNode] = field(default_factory=dict)
    edges: List[BelongingEdge] = field(default_factory=list)

    def check_invariants(self) -> None:
        """Layer discipline, endpoint existence, single parent, no cycles."""
        seen_children = set()
        for e in self.edges:
            child = self.nodes.get(e.child_id)
            parent = self.nodes.get(e.parent_id)
            if child is None or parent is None:
                raise ValueError(f"edge endpoint missing: {e}")
            if _PARENT_LAYER.get(child.layer) != parent.layer:
                raise ValueError(
                    f"edge violates layer discipline: {child.layer} -> {parent.layer}"
                )
            if e.child_id in seen_children:
                raise ValueError(f"child has multiple parents: {e.child_id}")
            seen_children.add(e.child_id)
        # layer discipline makes cycles impossible; nothing further to check

    def parent_of(self, node_id: int) -> Optional[int]:
        for e in self.edges:
            if e.child_id == node_id:
                return e.parent_id
        return None

    def remove_node(self, node_id: int) -> None:
        self.nodes.pop(node_id, None)
        self.edges = [
            e for e in self.edges if e.child_id != node_id and e.parent_id != node_id
        ]

    def drop_edges_of(self, node_id: int) -> None:
        self.edges = [
            e for e in self.edges if e.child_id != node_id and e.parent_id != node_id
        ]

    def copy(self) -> "SceneGraph":
        return SceneGraph(nodes=dict(self.nodes), edges=list(self.edges))


def add_node(graph: SceneGraph, node: ObjectNode) -> SceneGraph:
    if node.id in graph.nodes:
        raise DuplicateNodeIdError(node.id)
    graph.nodes[node.id] = node
    return graph


def _xy_overlap_area(a: BBox3D, b: BBox3D) -> float:
    w = min(a.max_corner[0], b.max_corner[0]) - max(a.min_corner[0], b.min_corner[0])
    d = min(a.max_corner[1], b.max_corner[1]) - max(a.min_corner[1], b.min_corner[1])
    if w <= 0.0 or d <= 0.0:
        return 0.0
    return w * d


def _footprint_area(b: BBox3D) -> float:
    ext = b.extent()
    return ext[0] * ext[1]


def infer_hierarchy(
    objects: Iterable[ObjectNode],
    supports: Iterable[ObjectNode],
    rooms: Iterable[ObjectNode],
    room_polygons: Optional[Dict[int, List[Tuple[float, float]]]] = None,
) -> List[BelongingEdge]:
    """Geometric belonging heuristic.

    An object belongs to a support when its XY footprint overlaps the
    support's by at least half the object footprint and its bottom face
    rests within SUPPORT_CONTACT_DZ of the support's top. A support
    belongs to the room whose floor polygon contains its centroid.
    Nodes with no qualifying parent stay parentless.
    """
    edges: List[BelongingEdge] = []
    support_list = sorted(supports, key=lambda n: n.id)
    for obj in sorted(objects, key=lambda n: n.id):
        area = _footprint_area(obj.bbox)
        best: Optional[Tuple[float, int]] = None
        for sup in support_list:
            gap = abs(obj.bbox.min_corner[2] - sup.bbox.max_corner[2])
            if gap > SUPPORT_CONTACT_DZ:
                continue
            overlap = _xy_overlap_area(obj.bbox, sup.bbox)
            # degenerate (zero-area) footprints qualify on contact alone
            if area > 0.0 and overlap < FOOTPRINT_OVERLAP_MIN * area:
                continue
            if best is None or overlap > best[0]:
                best = (overlap, sup.id)
            elif overlap == best[0] and sup.id < best[1]:
                best = (overlap, sup.id)
        if best is not None:
            edges.append(BelongingEdge(child_id=obj.id, parent_id=best[1]))

    polygons = room_polygons or {}
    room_list = sorted(rooms, key=lambda n: n.id)
    for sup in support_list:
        cx, cy, _ = sup.bbox.centroid()
        point = Point(cx, cy)
        for room in room_list:
            poly = polygons.get(room.id)
            if poly is None:
                continue
            if Polygon(poly).covers(point):
                edges.append(BelongingEdge(child_id=sup.id, parent_id=room.id))
                break
    return edges


def object_memory_bytes(node: ObjectNode) -> int:
    """Byte budget of one node: 12 B bbox + capped 8-bit text fields."""
    a = node.attributes
    return (
        BBOX_BYTES
        + min(len(a.description), DESCRIPTION_CAP)
        + min(len(a.material), MATERIAL_CAP)
        + min(len(a.color), COLOR_CAP)
        + min(len(a.label), LABEL_CAP)
    )


def voxel_baseline_bytes(voxel_count: int, embedding_dim: int, bytes_per_float: int) -> int:
    if voxel_count < 0 or embedding_dim < 0 or bytes_per_float < 0:
        raise ValueError("counts must be non-negative")
    return voxel_count * embedding_dim * bytes_per_float


# --- serialization -----------------------------------------------------------
#
# The export document prints every float with exactly 6 decimal places and
# sorts keys, so identical graphs serialize to identical bytes. json.dumps
# cannot format floats, hence the small emitter below.


def _emit(value, out: List[str]) -> None:
    if isinstance(value, bool):
        out.append("true" if value else "false")
    elif isinstance(value, float):
        out.append(f"{value:.6f}")
    elif isinstance(value, int):
        out.append(str(value))
    elif isinstance(value, str):
        out.append(json.dumps(value, ensure_ascii=False))
    elif value is None:
        out.append("null")
    elif isinstance(value, (list, tuple)):
        out.append("[")
        for i, item in enumerate(value):
            if i:
                out.append(", ")
            _emit(item, out)
        out.append("]")
    elif isinstance(value, dict):
        out.append("{")
        for i, key in enumerate(sorted(value)):
            if i:
                out.append(", ")
            out.append(json.dumps(key, ensure_ascii=False))
            out.append(": ")
            _emit(value[key], out)
        out.append("}")
    else:
        raise TypeError(f"cannot serialize {type(value)}")


def dumps_sorted(document) -> str:
    """JSON text with sorted keys and %.6f floats (deterministic bytes)."""
    out: List[str] = []
    _emit(document, out)
    return "".join(out)


def export_graph(graph: SceneGraph) -> str:
    nodes = []
    for node in sorted(graph.nodes.values(), key=lambda n: n.id):
        nodes.append(
            {
                "id": node.id,
                "layer": node.layer,
                "label": node.attributes.label,
                "color": node.attributes.color,
                "material": node.attributes.material,
                "description": node.attributes.description,
                "bbox": {
                    "min": [float(v) for v in node.bbox.min_corner],
                    "max": [float(v) for v in node.bbox.max_corner],
                },
                "state": node.state,
            }
        )
    edges = [
        {"child": e.child_id, "parent": e.parent_id}
        for e in sorted(graph.edges, key=lambda e: (e.child_id, e.parent_id))
    ]
    return dumps_sorted({"nodes": nodes, "edges": edges})


def import_graph(text: str) -> SceneGraph:
    doc = json.loads(text)
    graph = SceneGraph()
    for item in doc["nodes"]:
        node = ObjectNode(
            id=int(item["id"]),
            layer=item["layer"],
            attributes=SemanticAttributes(
                label=item["label"],
                color=item["color"],
                material=item["material"],
                description=item["description"],
            ),
            bbox=BBox3D(tuple(item["bbox"]["min"]), tuple(item["bbox"]["max"])),
            state=item["state"],
        )
        add_node(graph, node)
    for item in doc["edges"]:
        graph.edges.append(BelongingEdge(child_id=int(item["child"]), parent_id=int(item["parent"])))
    graph.check_invariants()
    return graph
