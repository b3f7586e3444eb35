"""Lightweight attribute-level semantic scene graph for tracking dynamic
objects, with a scripted scenario replay harness."""

from .colors import RGBColor, color_to_rgb
from .config import RunConfig, load_run_config
from .embeddings import (
    LocalHashEmbedder,
    RemoteEmbedder,
    WordVectorTable,
    load_word_vectors,
    word_similarity,
)
from .geometry import (
    CameraIntrinsics,
    CameraPose,
    Frustum,
    back_project,
    bbox_from_points,
    compute_pov_volume,
    frustum_contains,
    is_valid_association,
)
from .graph import (
    BBox3D,
    BelongingEdge,
    ObjectNode,
    SceneGraph,
    SemanticAttributes,
    add_node,
    export_graph,
    import_graph,
    infer_hierarchy,
    object_memory_bytes,
    voxel_baseline_bytes,
)
from .harness import MetricsReport, memory_report, replay, run_ablation
from .scenario import Scenario, load_scenario, loads_scenario
from .similarity import (
    ComponentScores,
    Providers,
    SimilarityConfig,
    SimilarityWeights,
    attribute_similarity,
    chromatic_similarity,
    component_scores,
    find_best_match,
)
from .tracker import (
    Detection,
    FrameInput,
    PersistentScene,
    TrackerConfig,
    UpdateReport,
    build_scene,
    scene_update,
)

__version__ = "0.1.0"
