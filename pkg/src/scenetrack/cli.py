"""Command-line entry point: replay a scenario, run the component
ablation grid over a scenario directory, or produce the memory report.

Exit codes: 0 success, 2 validation problem (bad paths, schema or config),
1 runtime failure (e.g. remote embedder unreachable).
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path
from typing import List, Optional, Sequence

from .config import (
    ConfigError,
    EMBEDDER_LOCAL,
    EMBEDDER_REMOTE,
    RunConfig,
    config_summary,
    load_run_config,
)
from .embeddings import EmbedderError, WordVectorFormatError
from .graph import dumps_sorted, export_graph
from .harness import (
    format_ablation_table,
    memory_document,
    replay,
    run_ablation,
    voxel_count_for_bounds,
)
from .scenario import Scenario, ScenarioValidationError, load_scenario

EXIT_OK = 0
EXIT_RUNTIME = 1
EXIT_VALIDATION = 2

DEFAULT_SUBSET_SPEC = (
    "label,color,material,description/description,material,color/"
    "label,material,color/label,description/description/label"
)


def _fail(code: int, message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def _load_config(args) -> RunConfig:
    config = load_run_config(args.config)
    if args.embedder:
        config.embedder_kind = args.embedder
    if args.endpoint:
        config.endpoint = args.endpoint
        if not args.embedder:
            config.embedder_kind = EMBEDDER_REMOTE
    return config


def _write(out_dir: str, name: str, text: str) -> None:
    os.makedirs(out_dir, exist_ok=True)
    with open(os.path.join(out_dir, name), "w", encoding="utf-8") as f:
        f.write(text)


def _parse_subsets(spec: str) -> List[List[str]]:
    subsets = []
    for chunk in spec.split("/"):
        subset = [c.strip() for c in chunk.split(",") if c.strip()]
        if subset:
            subsets.append(subset)
    if not subsets:
        raise ConfigError("--ablate-subsets did not parse to any subset")
    return subsets


def cmd_replay(args) -> int:
    try:
        config = _load_config(args)
        scenario = load_scenario(args.scenario)
        providers = config.build_providers()
    except FileNotFoundError as exc:
        return _fail(EXIT_VALIDATION, str(exc))
    except (ConfigError, ScenarioValidationError, WordVectorFormatError) as exc:
        return _fail(EXIT_VALIDATION, str(exc))
    try:
        result = replay(scenario, config.tracker_config(), providers)
    except EmbedderError as exc:
        return _fail(EXIT_RUNTIME, str(exc))
    doc = {
        "scenario": scenario.name,
        "config": config_summary(config),
        "seed": args.seed,
        "metrics": result.metrics.as_dict(),
    }
    _write(args.out, "metrics.json", dumps_sorted(doc) + "\n")
    _write(args.out, "graph.json", export_graph(result.scene.graph) + "\n")
    m = result.metrics
    print(
        f"{scenario.name}: detections {m.detections[0]}/{m.detections[1]} "
        f"deletions {m.deletions[0]}/{m.deletions[1]} "
        f"updates {m.updates[0]}/{m.updates[1]}"
    )
    return EXIT_OK


def _load_scenario_dir(path: str) -> List[Scenario]:
    base = Path(path)
    if not base.is_dir():
        raise ScenarioValidationError("$", f"not a directory: {path}")
    files = sorted(base.glob("*.json"))
    if not files:
        raise ScenarioValidationError("$", f"no scenario files in {path}")
    scenarios = []
    for f in files:
        try:
            scenarios.append(load_scenario(f))
        except ScenarioValidationError as exc:
            raise ScenarioValidationError(exc.path, f"{f.name}: {exc}")
    return scenarios


def cmd_ablate(args) -> int:
    try:
        config = _load_config(args)
        scenarios = _load_scenario_dir(args.scenario_dir)
        subsets = _parse_subsets(args.ablate_subsets)
        providers = config.build_providers()
    except FileNotFoundError as exc:
        return _fail(EXIT_VALIDATION, str(exc))
    except (ConfigError, ScenarioValidationError, WordVectorFormatError) as exc:
        return _fail(EXIT_VALIDATION, str(exc))
    try:
        rows = run_ablation(scenarios, subsets, config.tracker_config(), providers)
    except EmbedderError as exc:
        return _fail(EXIT_RUNTIME, str(exc))
    except ValueError as exc:
        return _fail(EXIT_VALIDATION, str(exc))
    doc = {
        "scenarios": [s.name for s in scenarios],
        "config": config_summary(config),
        "seed": args.seed,
        "rows": [r.as_dict() for r in rows],
    }
    table = format_ablation_table(rows)
    _write(args.out, "ablation.json", dumps_sorted(doc) + "\n")
    _write(args.out, "ablation.txt", table)
    print(table, end="")
    return EXIT_OK


def cmd_memory(args) -> int:
    try:
        config = _load_config(args)
        scenario = load_scenario(args.scenario)
        providers = config.build_providers()
    except FileNotFoundError as exc:
        return _fail(EXIT_VALIDATION, str(exc))
    except (ConfigError, ScenarioValidationError, WordVectorFormatError) as exc:
        return _fail(EXIT_VALIDATION, str(exc))
    try:
        result = replay(scenario, config.tracker_config(), providers)
    except EmbedderError as exc:
        return _fail(EXIT_RUNTIME, str(exc))
    if args.voxels is not None:
        voxels = args.voxels
    else:
        voxels = voxel_count_for_bounds(result.observed_bounds, args.voxel_res)
    doc = memory_document(
        object_count=result.peak_object_count,
        object_bytes=result.peak_object_bytes,
        voxel_count=voxels,
        embedding_dim=args.embedding_dim,
        bytes_per_float=args.bytes_per_float,
    )
    doc["scenario"] = scenario.name
    doc["seed"] = args.seed
    _write(args.out, "memory.json", dumps_sorted(doc) + "\n")
    print(
        f"{scenario.name}: {doc['object_count']} objects, "
        f"{doc['object_bytes']} B object-level vs {doc['voxel_baseline_bytes']} B voxel baseline"
    )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="scenetrack",
        description="Replay scripted scenarios through the semantic scene tracker",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--config", default=None, help="run configuration JSON")
        p.add_argument("--out", required=True, help="output directory")
        p.add_argument(
            "--embedder", choices=[EMBEDDER_LOCAL, EMBEDDER_REMOTE], default=None
        )
        p.add_argument("--endpoint", default=None, help="remote embedder URL")
        p.add_argument("--seed", type=int, default=0, help="recorded in reports")

    p_replay = sub.add_parser("replay", help="replay one scenario and score it")
    p_replay.add_argument("--scenario", required=True)
    common(p_replay)
    p_replay.set_defaults(func=cmd_replay)

    p_ablate = sub.add_parser("ablate", help="component ablation over a scenario dir")
    p_ablate.add_argument("--scenario-dir", required=True)
    p_ablate.add_argument("--ablate-subsets", default=DEFAULT_SUBSET_SPEC)
    common(p_ablate)
    p_ablate.set_defaults(func=cmd_ablate)

    p_memory = sub.add_parser("memory", help="object-level vs voxel memory report")
    p_memory.add_argument("--scenario", required=True)
    p_memory.add_argument("--voxels", type=int, default=None, help="explicit voxel count")
    p_memory.add_argument("--voxel-res", type=float, default=0.025, help="voxel edge, meters")
    p_memory.add_argument("--embedding-dim", type=int, default=512)
    p_memory.add_argument("--bytes-per-float", type=int, default=2)
    common(p_memory)
    p_memory.set_defaults(func=cmd_memory)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except Exception as exc:  # anything unplanned is a runtime failure
        return _fail(EXIT_RUNTIME, f"{type(exc).__name__}: {exc}")


if __name__ == "__main__":
    sys.exit(main())
