"""Scenario documents: a scripted sequence of frames (camera pose,
intrinsics, detections) plus static rooms/supports and ground-truth
events for scoring a replay."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import List, Optional, Tuple, Union

import jsonschema
import numpy as np

from .geometry import CameraIntrinsics, CameraPose, DepthImage, PixelMask
from .graph import BBox3D, SemanticAttributes
from .tracker import Detection, FrameInput

EVENT_EXISTS = "exists"
EVENT_MOVED = "moved"
EVENT_REMOVED = "removed"


class ScenarioValidationError(ValueError):
    """Invalid scenario document; `path` points at the offending field."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


_BBOX_SCHEMA = {
    "type": "object",
    "additionalProperties": False,
    "required": ["min", "max"],
    "properties": {
        "min": {"type": "array", "items": {"type": "number"}, "minItems": 3, "maxItems": 3},
        "max": {"type": "array", "items": {"type": "number"}, "minItems": 3, "maxItems": 3},
    },
}

_IMAGE_SCHEMA = {
    "type": "object",
    "additionalProperties": False,
    "required": ["width", "height", "values"],
    "properties": {
        "width": {"type": "integer", "minimum": 1, "maximum": 64},
        "height": {"type": "integer", "minimum": 1, "maximum": 64},
        "values": {"type": "array", "items": {"type": "number"}},
    },
}

_DETECTION_SCHEMA = {
    "type": "object",
    "additionalProperties": False,
    "required": ["label"],
    "properties": {
        "label": {"type": "string", "minLength": 1},
        "color": {"type": "string"},
        "material": {"type": "string"},
        "description": {"type": "string"},
        "bbox3d": _BBOX_SCHEMA,
        "mask": _IMAGE_SCHEMA,
        "depth": _IMAGE_SCHEMA,
    },
}

SCENARIO_SCHEMA = {
    "type": "object",
    "additionalProperties": False,
    "required": ["name", "frames"],
    "properties": {
        "name": {"type": "string", "minLength": 1},
        "rooms": {
            "type": "array",
            "items": {
                "type": "object",
                "additionalProperties": False,
                "required": ["label", "polygon"],
                "properties": {
                    "label": {"type": "string", "minLength": 1},
                    "polygon": {
                        "type": "array",
                        "minItems": 3,
                        "items": {
                            "type": "array",
                            "items": {"type": "number"},
                            "minItems": 2,
                            "maxItems": 2,
                        },
                    },
                },
            },
        },
        "supports": {
            "type": "array",
            "items": {
                "type": "object",
                "additionalProperties": False,
                "required": ["label", "bbox"],
                "properties": {
                    "label": {"type": "string", "minLength": 1},
                    "bbox": _BBOX_SCHEMA,
                },
            },
        },
        "frames": {
            "type": "array",
            "minItems": 1,
            "items": {
                "type": "object",
                "additionalProperties": False,
                "required": ["exploration", "pose", "intrinsics", "detections"],
                "properties": {
                    "exploration": {"type": "boolean"},
                    "pose": {
                        "type": "object",
                        "additionalProperties": False,
                        "required": ["rotation", "translation"],
                        "properties": {
                            "rotation": {
                                "type": "array",
                                "items": {"type": "number"},
                                "minItems": 9,
                                "maxItems": 9,
                            },
                            "translation": {
                                "type": "array",
                                "items": {"type": "number"},
                                "minItems": 3,
                                "maxItems": 3,
                            },
                        },
                    },
                    "intrinsics": {
                        "type": "object",
                        "additionalProperties": False,
                        "required": ["fx", "fy", "cx", "cy", "width", "height"],
                        "properties": {
                            "fx": {"type": "number"},
                            "fy": {"type": "number"},
                            "cx": {"type": "number"},
                            "cy": {"type": "number"},
                            "width": {"type": "integer"},
                            "height": {"type": "integer"},
                        },
                    },
                    "detections": {"type": "array", "items": _DETECTION_SCHEMA},
                },
            },
        },
        "ground_truth": {
            "type": "array",
            "items": {
                "type": "object",
                "additionalProperties": False,
                "required": ["kind", "object_key", "frame", "attributes"],
                "properties": {
                    "kind": {"enum": [EVENT_EXISTS, EVENT_MOVED, EVENT_REMOVED]},
                    "object_key": {"type": "string", "minLength": 1},
                    "frame": {"type": "integer", "minimum": 0},
                    "deadline": {"type": "integer", "minimum": 0},
                    "expected_bbox": _BBOX_SCHEMA,
                    "attributes": {
                        "type": "object",
                        "additionalProperties": False,
                        "required": ["label"],
                        "properties": {
                            "label": {"type": "string", "minLength": 1},
                            "color": {"type": "string"},
                            "material": {"type": "string"},
                            "description": {"type": "string"},
                        },
                    },
                },
            },
        },
    },
}


@dataclass(frozen=True)
class GroundTruthEvent:
    kind: str
    object_key: str
    frame: int
    attributes: SemanticAttributes
    deadline: Optional[int] = None
    expected_bbox: Optional[BBox3D] = None

    @property
    def evaluation_frame(self) -> int:
        return self.deadline if self.deadline is not None else self.frame


@dataclass
class Scenario:
    name: str
    rooms: List[Tuple[str, List[Tuple[float, float]]]]
    supports: List[Tuple[str, BBox3D]]
    frames: List[FrameInput]
    exploration_flags: List[bool]
    ground_truth: List[GroundTruthEvent]


def _parse_bbox(doc: dict) -> BBox3D:
    return BBox3D(tuple(doc["min"]), tuple(doc["max"]))


def _parse_attributes(doc: dict) -> SemanticAttributes:
    return SemanticAttributes(
        label=doc["label"],
        color=doc.get("color", ""),
        material=doc.get("material", ""),
        description=doc.get("description", ""),
    )


def _parse_detection(doc: dict, path: str) -> Detection:
    has_box = "bbox3d" in doc
    has_pixels = "mask" in doc and "depth" in doc
    if has_box == has_pixels:
        raise ScenarioValidationError(
            path, "detection needs exactly one of bbox3d or mask+depth"
        )
    if has_box:
        return Detection(attributes=_parse_attributes(doc), bbox3d=_parse_bbox(doc["bbox3d"]))
    mask_doc, depth_doc = doc["mask"], doc["depth"]
    for name, img in (("mask", mask_doc), ("depth", depth_doc)):
        if len(img["values"]) != img["width"] * img["height"]:
            raise ScenarioValidationError(
                f"{path}.{name}.values",
                f"expected {img['width'] * img['height']} values, got {len(img['values'])}",
            )
    return Detection(
        attributes=_parse_attributes(doc),
        mask=PixelMask(mask_doc["width"], mask_doc["height"], np.array(mask_doc["values"])),
        depth=DepthImage(depth_doc["width"], depth_doc["height"], np.array(depth_doc["values"])),
    )


def loads_scenario(text: Union[str, bytes]) -> Scenario:
    """Parse and validate one scenario document."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ScenarioValidationError("$", f"not valid JSON: {exc}")

    validator = jsonschema.Draft202012Validator(SCENARIO_SCHEMA)
    errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.absolute_path))
    if errors:
        err = errors[0]
        raise ScenarioValidationError(err.json_path, err.message)

    frames: List[FrameInput] = []
    flags: List[bool] = []
    for fi, fdoc in enumerate(doc["frames"]):
        fpath = f"$.frames[{fi}]"
        intr = fdoc["intrinsics"]
        try:
            intrinsics = CameraIntrinsics(
                fx=intr["fx"], fy=intr["fy"], cx=intr["cx"], cy=intr["cy"],
                width=intr["width"], height=intr["height"],
            )
        except ValueError as exc:
            raise ScenarioValidationError(f"{fpath}.intrinsics", str(exc))
        try:
            pose = CameraPose(
                rotation=tuple(fdoc["pose"]["rotation"]),
                translation=tuple(fdoc["pose"]["translation"]),
            )
        except ValueError as exc:
            raise ScenarioValidationError(f"{fpath}.pose", str(exc))
        detections = [
            _parse_detection(d, f"{fpath}.detections[{di}]")
            for di, d in enumerate(fdoc["detections"])
        ]
        frames.append(
            FrameInput(
                detections=detections,
                pose=pose,
                intrinsics=intrinsics,
                mode_override=fdoc["exploration"],
            )
        )
        flags.append(fdoc["exploration"])

    events: List[GroundTruthEvent] = []
    defined_keys = {
        ev["object_key"]
        for ev in doc.get("ground_truth", [])
        if ev["kind"] == EVENT_EXISTS
    }
    for ei, ev in enumerate(doc.get("ground_truth", [])):
        epath = f"$.ground_truth[{ei}]"
        if ev["object_key"] not in defined_keys:
            raise ScenarioValidationError(
                f"{epath}.object_key",
                f"object key {ev['object_key']!r} has no exists event defining it",
            )
        if ev["frame"] >= len(frames):
            raise ScenarioValidationError(
                f"{epath}.frame", f"frame {ev['frame']} outside scenario ({len(frames)} frames)"
            )
        deadline = ev.get("deadline")
        if deadline is not None:
            if deadline >= len(frames):
                raise ScenarioValidationError(
                    f"{epath}.deadline", f"deadline {deadline} outside scenario"
                )
            if deadline < ev["frame"]:
                raise ScenarioValidationError(
                    f"{epath}.deadline", "deadline precedes the event frame"
                )
        expected = ev.get("expected_bbox")
        events.append(
            GroundTruthEvent(
                kind=ev["kind"],
                object_key=ev["object_key"],
                frame=ev["frame"],
                deadline=deadline,
                expected_bbox=_parse_bbox(expected) if expected is not None else None,
                attributes=_parse_attributes(ev["attributes"]),
            )
        )

    return Scenario(
        name=doc["name"],
        rooms=[
            (r["label"], [tuple(p) for p in r["polygon"]])
            for r in doc.get("rooms", [])
        ],
        supports=[(s["label"], _parse_bbox(s["bbox"])) for s in doc.get("supports", [])],
        frames=frames,
        exploration_flags=flags,
        ground_truth=events,
    )


def load_scenario(path) -> Scenario:
    with open(path, "rb") as f:
        return loads_scenario(f.read())
