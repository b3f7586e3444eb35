"""Run configuration: similarity weights/components/threshold, spatial
epsilon, frustum range, recovery toggle, embedder selection and the
word-vector source."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from typing import Optional

from .embeddings import (
    DEFAULT_TIMEOUT_S,
    LocalHashEmbedder,
    RemoteEmbedder,
    WordVectorTable,
    load_word_vectors,
)
from .geometry import DEFAULT_EPSILON, DEFAULT_FAR, DEFAULT_NEAR
from .similarity import (
    ALL_COMPONENTS,
    Providers,
    SimilarityConfig,
    SimilarityWeights,
)
from .tracker import TrackerConfig

EMBEDDER_LOCAL = "local"
EMBEDDER_REMOTE = "remote"

_KNOWN_KEYS = {
    "weights",
    "components",
    "tau",
    "epsilon",
    "frustum",
    "uncertain_recovery",
    "embedder",
    "word_vectors",
}
_KNOWN_WEIGHT_KEYS = {"alpha", "beta", "gamma", "delta"}
_KNOWN_FRUSTUM_KEYS = {"near", "far"}
_KNOWN_EMBEDDER_KEYS = {"kind", "endpoint", "timeout"}


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    similarity: SimilarityConfig = field(default_factory=SimilarityConfig)
    epsilon: float = DEFAULT_EPSILON
    near: float = DEFAULT_NEAR
    far: float = DEFAULT_FAR
    uncertain_recovery: bool = False
    embedder_kind: str = EMBEDDER_LOCAL
    endpoint: Optional[str] = None
    timeout: float = DEFAULT_TIMEOUT_S
    word_vectors_path: Optional[str] = None

    def tracker_config(self, exploration: bool = True) -> TrackerConfig:
        return TrackerConfig(
            similarity=self.similarity,
            epsilon=self.epsilon,
            exploration=exploration,
            near=self.near,
            far=self.far,
            uncertain_recovery=self.uncertain_recovery,
        )

    def build_providers(self) -> Providers:
        if self.word_vectors_path is None:
            table = load_bundled_word_vectors()
        else:
            with open(self.word_vectors_path, "rb") as f:
                table = load_word_vectors(f)
        if self.embedder_kind == EMBEDDER_LOCAL:
            embedder = LocalHashEmbedder()
        elif self.embedder_kind == EMBEDDER_REMOTE:
            if not self.endpoint:
                raise ConfigError("remote embedder requires an endpoint")
            embedder = RemoteEmbedder(self.endpoint, timeout=self.timeout)
        else:
            raise ConfigError(f"unknown embedder kind: {self.embedder_kind}")
        return Providers(word_vectors=table, embedder=embedder)


def load_bundled_word_vectors() -> WordVectorTable:
    data = resources.files("scenetrack.data").joinpath("word_vectors.txt").read_bytes()
    return load_word_vectors(data)


def _reject_unknown(doc: dict, known: set, path: str) -> None:
    unknown = set(doc) - known
    if unknown:
        raise ConfigError(f"{path}: unknown keys {sorted(unknown)}")


def parse_run_config(doc: dict) -> RunConfig:
    if not isinstance(doc, dict):
        raise ConfigError("config document must be an object")
    _reject_unknown(doc, _KNOWN_KEYS, "$")

    weights = SimilarityWeights()
    if "weights" in doc:
        wd = doc["weights"]
        _reject_unknown(wd, _KNOWN_WEIGHT_KEYS, "$.weights")
        try:
            weights = SimilarityWeights(
                alpha=wd.get("alpha", 0.0),
                beta=wd.get("beta", 0.0),
                gamma=wd.get("gamma", 0.0),
                delta=wd.get("delta", 0.0),
            )
        except ValueError as exc:
            raise ConfigError(f"$.weights: {exc}")

    components = tuple(doc.get("components", ALL_COMPONENTS))
    try:
        similarity = SimilarityConfig(
            weights=weights, components=components, tau=doc.get("tau", SimilarityConfig().tau)
        )
    except ValueError as exc:
        raise ConfigError(f"$: {exc}")

    frustum = doc.get("frustum", {})
    _reject_unknown(frustum, _KNOWN_FRUSTUM_KEYS, "$.frustum")
    embedder = doc.get("embedder", {})
    _reject_unknown(embedder, _KNOWN_EMBEDDER_KEYS, "$.embedder")
    kind = embedder.get("kind", EMBEDDER_LOCAL)
    if kind not in (EMBEDDER_LOCAL, EMBEDDER_REMOTE):
        raise ConfigError(f"$.embedder.kind: unknown kind {kind!r}")

    epsilon = doc.get("epsilon", DEFAULT_EPSILON)
    if not (isinstance(epsilon, (int, float)) and epsilon > 0):
        raise ConfigError("$.epsilon: must be a positive number")
    near = frustum.get("near", DEFAULT_NEAR)
    far = frustum.get("far", DEFAULT_FAR)
    if not (0 < near < far):
        raise ConfigError("$.frustum: require 0 < near < far")

    return RunConfig(
        similarity=similarity,
        epsilon=float(epsilon),
        near=float(near),
        far=float(far),
        uncertain_recovery=bool(doc.get("uncertain_recovery", False)),
        embedder_kind=kind,
        endpoint=embedder.get("endpoint"),
        timeout=float(embedder.get("timeout", DEFAULT_TIMEOUT_S)),
        word_vectors_path=doc.get("word_vectors"),
    )


def load_run_config(path: Optional[str]) -> RunConfig:
    """Config from a JSON file; defaults when no path is given."""
    if path is None:
        return RunConfig()
    with open(path, "r", encoding="utf-8") as f:
        try:
            doc = json.load(f)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"config is not valid JSON: {exc}")
    return parse_run_config(doc)


def config_summary(config: RunConfig) -> dict:
    """Echoed alongside every report so runs are interpretable."""
    return {
        "weights": config.similarity.weights.as_dict(),
        "components": list(config.similarity.components),
        "tau": config.similarity.tau,
        "epsilon": config.epsilon,
        "frustum": {"near": config.near, "far": config.far},
        "uncertain_recovery": config.uncertain_recovery,
        "embedder": config.embedder_kind,
    }
