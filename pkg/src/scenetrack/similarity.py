"""Attribute-level similarity between two object observations.

Four component scores (label, color, material, description) combine into
one weighted score in [0, 1]; a detection is associated to the best
candidate whose score clears the matching threshold.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, Iterable, Optional, Set, Tuple

import numpy as np

from .colors import color_to_rgb, rgb_distance, RGBColor
from .embeddings import WordVectorTable, word_similarity
from .graph import ObjectNode, SemanticAttributes

COMPONENT_LABEL = "label"
COMPONENT_COLOR = "color"
COMPONENT_MATERIAL = "material"
COMPONENT_DESCRIPTION = "description"
ALL_COMPONENTS = (
    COMPONENT_LABEL,
    COMPONENT_COLOR,
    COMPONENT_MATERIAL,
    COMPONENT_DESCRIPTION,
)

# weighting of label/color/material/description that worked best upstream
DEFAULT_ALPHA = 0.15
DEFAULT_BETA = 0.30
DEFAULT_GAMMA = 0.15
DEFAULT_DELTA = 0.40

DEFAULT_TAU = 0.75

_SQRT3 = math.sqrt(3.0)
_WEIGHT_SUM_TOL = 1e-9


@dataclass(frozen=True)
class SimilarityWeights:
    alpha: float = DEFAULT_ALPHA
    beta: float = DEFAULT_BETA
    gamma: float = DEFAULT_GAMMA
    delta: float = DEFAULT_DELTA

    def __post_init__(self):
        for name, v in self.as_dict().items():
            if not (0.0 <= v <= 1.0):
                raise ValueError(f"weight {name} out of [0, 1]: {v}")
        total = self.alpha + self.beta + self.gamma + self.delta
        if abs(total - 1.0) > _WEIGHT_SUM_TOL:
            raise ValueError(f"weights must sum to 1, got {total}")

    def as_dict(self) -> Dict[str, float]:
        return {
            COMPONENT_LABEL: self.alpha,
            COMPONENT_COLOR: self.beta,
            COMPONENT_MATERIAL: self.gamma,
            COMPONENT_DESCRIPTION: self.delta,
        }


@dataclass(frozen=True)
class SimilarityConfig:
    weights: SimilarityWeights = SimilarityWeights()
    components: Tuple[str, ...] = ALL_COMPONENTS
    tau: float = DEFAULT_TAU

    def __post_init__(self):
        comps = tuple(self.components)
        if not comps:
            raise ValueError("at least one component must be enabled")
        for c in comps:
            if c not in ALL_COMPONENTS:
                raise ValueError(f"unknown component: {c}")
        if len(set(comps)) != len(comps):
            raise ValueError("duplicate component")
        if not (0.0 <= self.tau <= 1.0):
            raise ValueError(f"tau out of [0, 1]: {self.tau}")
        object.__setattr__(self, "components", comps)

    def effective_weights(self) -> Dict[str, float]:
        """Weights of enabled components, renormalized proportionally."""
        raw = self.weights.as_dict()
        total = sum(raw[c] for c in self.components)
        if total <= 0.0:
            raise ValueError("enabled components carry zero total weight")
        return {c: raw[c] / total for c in self.components}


@dataclass(frozen=True)
class ComponentScores:
    s_label: float
    s_color: float
    s_material: float
    s_description: float

    def get(self, component: str) -> float:
        return {
            COMPONENT_LABEL: self.s_label,
            COMPONENT_COLOR: self.s_color,
            COMPONENT_MATERIAL: self.s_material,
            COMPONENT_DESCRIPTION: self.s_description,
        }[component]


@dataclass
class Providers:
    """Bundles the loaded word table and the description embedder."""

    word_vectors: WordVectorTable
    embedder: object  # LocalHashEmbedder or RemoteEmbedder


def chromatic_similarity(c1: RGBColor, c2: RGBColor) -> float:
    """1 minus the RGB distance normalized by sqrt(3), so the score stays
    in [0, 1]."""
    return 1.0 - rgb_distance(c1, c2) / _SQRT3


def _description_similarity(d1: str, d2: str, embedder) -> float:
    if not d1 and not d2:
        return 1.0
    if not d1 or not d2:
        return 0.0
    v1 = embedder.embed(d1)
    v2 = embedder.embed(d2)
    return min(1.0, max(0.0, float(np.dot(v1, v2))))


def component_scores(
    a1: SemanticAttributes, a2: SemanticAttributes, providers: Providers
) -> ComponentScores:
    return ComponentScores(
        s_label=word_similarity(a1.label, a2.label, providers.word_vectors),
        s_color=chromatic_similarity(color_to_rgb(a1.color), color_to_rgb(a2.color)),
        s_material=word_similarity(a1.material, a2.material, providers.word_vectors),
        s_description=_description_similarity(
            a1.description, a2.description, providers.embedder
        ),
    )


def attribute_similarity(
    a1: SemanticAttributes,
    a2: SemanticAttributes,
    config: SimilarityConfig,
    providers: Providers,
) -> float:
    """Weighted combination of the enabled component scores."""
    scores = component_scores(a1, a2, providers)
    weights = config.effective_weights()
    return sum(weights[c] * scores.get(c) for c in config.components)


def find_best_match(
    attributes: SemanticAttributes,
    candidates: Iterable[ObjectNode],
    config: SimilarityConfig,
    providers: Providers,
    claimed: Optional[Set[int]] = None,
) -> Optional[ObjectNode]:
    """Highest-scoring unclaimed candidate at or above tau, ties broken
    by smaller node id; None when nothing clears the threshold."""
    claimed = claimed or set()
    best: Optional[ObjectNode] = None
    best_score = -1.0
    for node in sorted(candidates, key=lambda n: n.id):
        if node.id in claimed:
            continue
        score = attribute_similarity(attributes, node.attributes, config, providers)
        if score > best_score:
            best = node
            best_score = score
    if best is not None and best_score >= config.tau:
        return best
    return None
