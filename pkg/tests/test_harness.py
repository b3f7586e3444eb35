import json

import pytest

from scenetrack.graph import BBox3D, SemanticAttributes, dumps_sorted
from scenetrack.harness import (
    ABLATION_SUBSETS,
    format_ablation_table,
    memory_document,
    memory_report,
    replay,
    run_ablation,
    score_event,
    voxel_count_for_bounds,
)
from scenetrack.scenario import load_scenario, loads_scenario
from scenetrack.similarity import SimilarityConfig
from scenetrack.tracker import TrackerConfig, build_scene, spawn_object


def full_config(**kw):
    return TrackerConfig(**kw)


def label_only_config():
    return TrackerConfig(similarity=SimilarityConfig(components=("label",)))


@pytest.fixture(scope="module")
def levels(scenario_dir):
    return {
        name: load_scenario(scenario_dir / f"{name}.json")
        for name in ("level1", "level2", "level3")
    }


class TestReplay:
    def test_level1_full_scores(self, levels, providers):
        result = replay(levels["level1"], full_config(), providers)
        m = result.metrics
        assert m.detections == (3, 3)
        assert m.deletions == (3, 3)
        assert m.updates == (3, 3)

    def test_label_only_never_beats_full_updates(self, levels, providers):
        # run both configurations over the same fixture
        for name in ("level1", "level2", "level3"):
            full = replay(levels[name], full_config(), providers).metrics
            label = replay(levels[name], label_only_config(), providers).metrics
            full_rate = full.updates[0] / max(full.updates[1], 1)
            label_rate = label.updates[0] / max(label.updates[1], 1)
            assert label_rate <= full_rate

    def test_empty_scenario_zero_counts(self, providers):
        doc = {
            "name": "empty",
            "frames": [
                {
                    "exploration": True,
                    "pose": {"rotation": [1, 0, 0, 0, 1, 0, 0, 0, 1],
                             "translation": [0, 0, 0]},
                    "intrinsics": {"fx": 100.0, "fy": 100.0, "cx": 16.0, "cy": 16.0,
                                   "width": 32, "height": 32},
                    "detections": [],
                }
            ],
        }
        result = replay(loads_scenario(json.dumps(doc)), full_config(), providers)
        assert result.metrics.detections == (0, 0)
        assert result.metrics.deletions == (0, 0)
        assert result.metrics.updates == (0, 0)
        assert result.metrics.events == []

    def test_achieved_never_exceeds_expected(self, levels, providers):
        for name, scn in levels.items():
            for comps in ABLATION_SUBSETS:
                cfg = TrackerConfig(similarity=SimilarityConfig(components=comps))
                m = replay(scn, cfg, providers).metrics
                for a, e in (m.detections, m.deletions, m.updates):
                    assert 0 <= a <= e

    def test_determinism_across_runs(self, levels, providers):
        r1 = replay(levels["level3"], full_config(), providers)
        r2 = replay(levels["level3"], full_config(), providers)
        assert dumps_sorted(r1.metrics.as_dict()) == dumps_sorted(r2.metrics.as_dict())

    def test_recovery_never_lowers_detections(self, levels, providers):
        for name, scn in levels.items():
            off = replay(scn, full_config(uncertain_recovery=False), providers).metrics
            on = replay(scn, full_config(uncertain_recovery=True), providers).metrics
            assert on.detections[0] >= off.detections[0]

    def test_outcomes_recomputable_from_frame_logs(self, levels, providers):
        # every reported outcome can be re-derived from the per-frame log
        cfg = full_config()
        for name, scn in levels.items():
            result = replay(scn, cfg, providers)
            snapshots = {log.frame: log.persistent_objects for log in result.frame_logs}
            for outcome in result.metrics.events:
                event = next(
                    e for e in scn.ground_truth
                    if e.object_key == outcome.object_key
                    and e.kind == outcome.kind
                    and e.frame == outcome.frame
                )
                recomputed = score_event(
                    event, snapshots[outcome.deadline], scn.ground_truth, cfg, providers
                )
                assert recomputed == outcome.achieved


@pytest.fixture(scope="module")
def rows(levels, providers):
    return run_ablation(
        list(levels.values()), ABLATION_SUBSETS, full_config(), providers
    )


class TestAblation:

    def test_six_rows_in_input_order(self, rows):
        assert len(rows) == 6
        assert [r.components for r in rows] == list(ABLATION_SUBSETS)

    def test_full_has_max_update_rate(self, rows):
        full = rows[0]
        assert all(full.update_rate >= r.update_rate for r in rows)

    def test_label_only_ranks_last_in_both(self, rows):
        label = rows[-1]
        assert label.components == ("label",)
        for r in rows[:-1]:
            assert label.update_rate < r.update_rate
            assert label.deletion_rate < r.deletion_rate

    def test_single_scenario_rates_are_its_ratios(self, levels, providers):
        scn = levels["level2"]
        rows = run_ablation([scn], [("label",)], full_config(), providers)
        m = replay(scn, label_only_config(), providers).metrics
        assert rows[0].deletion_rate == pytest.approx(m.deletions[0] / m.deletions[1])
        assert rows[0].update_rate == pytest.approx(m.updates[0] / m.updates[1])

    def test_rates_bounded(self, rows):
        for r in rows:
            assert 0.0 <= r.deletion_rate <= 1.0
            assert 0.0 <= r.update_rate <= 1.0

    def test_table_formatting(self, rows):
        text = format_ablation_table(rows)
        lines = text.strip().splitlines()
        assert len(lines) == 8  # header + rule + six rows
        assert "label+color+material+description" in lines[2]

    def test_empty_inputs_rejected(self, providers):
        with pytest.raises(ValueError):
            run_ablation([], [("label",)], full_config(), providers)


class TestMemory:
    def _maximal_scene(self, count):
        scene = build_scene()
        for i in range(count):
            spawn_object(
                scene,
                SemanticAttributes(
                    label="l" * 15, color="c" * 15, material="m" * 15,
                    description="d" * 100,
                ),
                BBox3D((i, 0, 0), (i + 0.5, 0.5, 0.5)),
            )
        return scene

    def test_paper_scene_arithmetic(self):
        scene = self._maximal_scene(21)
        doc = memory_report(scene, voxel_count=626140, embedding_dim=512, bytes_per_float=2)
        assert doc["object_bytes"] == 3297
        assert doc["voxel_baseline_bytes"] == 641_167_360

    def test_empty_scene_zero_bytes(self):
        doc = memory_report(build_scene(), voxel_count=626140)
        assert doc["object_bytes"] == 0
        assert doc["reduction_factor"] is None

    def test_reduction_factor(self):
        doc = memory_document(21, 3297, 626140, 512, 2)
        assert doc["reduction_factor"] == pytest.approx(641_167_360 / 3297)
        assert doc["reduction_factor"] == pytest.approx(194470, abs=1.0)

    def test_voxel_count_for_unit_cube(self):
        bounds = BBox3D((0, 0, 0), (1, 1, 1))
        assert voxel_count_for_bounds(bounds, 0.025) == 40 ** 3 == 64000

    def test_voxel_count_empty_bounds(self):
        assert voxel_count_for_bounds(None, 0.025) == 0

    def test_level2_peak_is_paper_scene(self, levels, providers):
        result = replay(levels["level2"], full_config(), providers)
        assert result.peak_object_count == 21
        assert result.peak_object_bytes == 3297
