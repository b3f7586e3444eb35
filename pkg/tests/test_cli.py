import json
import shutil

import pytest

from scenetrack.cli import EXIT_OK, EXIT_VALIDATION, main

LEVEL1 = "level1.json"


@pytest.fixture()
def out(tmp_path):
    return tmp_path / "out"


def read(path):
    with open(path, "r", encoding="utf-8") as f:
        return f.read()


class TestReplayCommand:
    def test_level1_default_config(self, scenario_dir, out, capsys):
        code = main(["replay", "--scenario", str(scenario_dir / LEVEL1), "--out", str(out)])
        assert code == EXIT_OK
        printed = capsys.readouterr().out
        assert "detections 3/3" in printed
        assert "deletions 3/3" in printed
        assert "updates 3/3" in printed
        metrics = json.loads(read(out / "metrics.json"))
        assert metrics["metrics"]["detections"] == {"achieved": 3, "expected": 3}
        graph = json.loads(read(out / "graph.json"))
        assert set(graph) == {"nodes", "edges"}

    def test_missing_scenario_exits_2(self, tmp_path, out):
        code = main(["replay", "--scenario", str(tmp_path / "nope.json"), "--out", str(out)])
        assert code == EXIT_VALIDATION

    def test_bad_weight_sum_exits_2(self, scenario_dir, tmp_path, out, capsys):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({"weights": {"alpha": 0.2, "beta": 0.3, "gamma": 0.2, "delta": 0.2}}))
        code = main([
            "replay", "--scenario", str(scenario_dir / LEVEL1),
            "--config", str(cfg), "--out", str(out),
        ])
        assert code == EXIT_VALIDATION
        assert "sum" in capsys.readouterr().err

    def test_invalid_scenario_exits_2(self, tmp_path, out):
        bad = tmp_path / "bad.json"
        bad.write_text('{"name": "x"}')
        code = main(["replay", "--scenario", str(bad), "--out", str(out)])
        assert code == EXIT_VALIDATION

    def test_idempotent_byte_identical(self, scenario_dir, tmp_path):
        out1, out2 = tmp_path / "a", tmp_path / "b"
        main(["replay", "--scenario", str(scenario_dir / LEVEL1), "--out", str(out1)])
        main(["replay", "--scenario", str(scenario_dir / LEVEL1), "--out", str(out2)])
        assert read(out1 / "metrics.json") == read(out2 / "metrics.json")
        assert read(out1 / "graph.json") == read(out2 / "graph.json")


class TestAblateCommand:
    def test_six_default_rows(self, scenario_dir, out):
        code = main(["ablate", "--scenario-dir", str(scenario_dir), "--out", str(out)])
        assert code == EXIT_OK
        doc = json.loads(read(out / "ablation.json"))
        assert len(doc["rows"]) == 6
        assert doc["rows"][0]["components"] == ["label", "color", "material", "description"]
        assert doc["rows"][-1]["components"] == ["label"]
        text = read(out / "ablation.txt")
        assert len(text.strip().splitlines()) == 8

    def test_custom_subsets(self, scenario_dir, out):
        code = main([
            "ablate", "--scenario-dir", str(scenario_dir),
            "--ablate-subsets", "label/description", "--out", str(out),
        ])
        assert code == EXIT_OK
        doc = json.loads(read(out / "ablation.json"))
        assert [r["components"] for r in doc["rows"]] == [["label"], ["description"]]

    def test_empty_dir_exits_2(self, tmp_path, out):
        empty = tmp_path / "empty"
        empty.mkdir()
        assert main(["ablate", "--scenario-dir", str(empty), "--out", str(out)]) == EXIT_VALIDATION

    def test_unreadable_scenario_named(self, scenario_dir, tmp_path, out, capsys):
        work = tmp_path / "scn"
        work.mkdir()
        shutil.copy(scenario_dir / LEVEL1, work / LEVEL1)
        (work / "broken.json").write_text('{"name": "broken"}')
        code = main(["ablate", "--scenario-dir", str(work), "--out", str(out)])
        assert code == EXIT_VALIDATION
        assert "broken.json" in capsys.readouterr().err


class TestMemoryCommand:
    def test_explicit_voxel_override(self, scenario_dir, out):
        code = main([
            "memory", "--scenario", str(scenario_dir / "level2.json"),
            "--voxels", "626140", "--out", str(out),
        ])
        assert code == EXIT_OK
        doc = json.loads(read(out / "memory.json"))
        assert doc["object_bytes"] == 3297
        assert doc["voxel_baseline_bytes"] == 641167360

    def test_voxel_resolution_on_unit_cube(self, tmp_path, out):
        scenario = {
            "name": "cube",
            "frames": [{
                "exploration": True,
                "pose": {"rotation": [1, 0, 0, 0, 1, 0, 0, 0, 1], "translation": [0, 0, 0]},
                "intrinsics": {"fx": 100.0, "fy": 100.0, "cx": 16.0, "cy": 16.0,
                               "width": 32, "height": 32},
                "detections": [
                    {"label": "crate", "bbox3d": {"min": [0, 0, 0], "max": [1, 1, 1]}}
                ],
            }],
        }
        path = tmp_path / "cube.json"
        path.write_text(json.dumps(scenario))
        code = main([
            "memory", "--scenario", str(path), "--voxel-res", "0.025", "--out", str(out),
        ])
        assert code == EXIT_OK
        doc = json.loads(read(out / "memory.json"))
        assert doc["voxel_count"] == 64000

    def test_zero_object_scenario(self, tmp_path, out):
        scenario = {
            "name": "void",
            "frames": [{
                "exploration": True,
                "pose": {"rotation": [1, 0, 0, 0, 1, 0, 0, 0, 1], "translation": [0, 0, 0]},
                "intrinsics": {"fx": 100.0, "fy": 100.0, "cx": 16.0, "cy": 16.0,
                               "width": 32, "height": 32},
                "detections": [],
            }],
        }
        path = tmp_path / "void.json"
        path.write_text(json.dumps(scenario))
        code = main(["memory", "--scenario", str(path), "--out", str(out)])
        assert code == EXIT_OK
        doc = json.loads(read(out / "memory.json"))
        assert doc["object_bytes"] == 0
        assert doc["voxel_count"] == 0


class TestEmbedderFlags:
    def test_remote_embedder_flag_end_to_end(self, scenario_dir, out):
        import json as _json
        import threading
        from http.server import BaseHTTPRequestHandler, HTTPServer

        class Handler(BaseHTTPRequestHandler):
            def do_POST(self):
                body = _json.loads(self.rfile.read(int(self.headers["Content-Length"])))
                payload = _json.dumps(
                    {"embeddings": [[1.0, 2.0, 2.0] for _ in body["texts"]]}
                ).encode()
                self.send_response(200)
                self.send_header("Content-Length", str(len(payload)))
                self.end_headers()
                self.wfile.write(payload)

            def log_message(self, *args):
                pass

        httpd = HTTPServer(("127.0.0.1", 0), Handler)
        threading.Thread(target=httpd.serve_forever, daemon=True).start()
        try:
            code = main([
                "replay", "--scenario", str(scenario_dir / LEVEL1),
                "--embedder", "remote",
                "--endpoint", f"http://127.0.0.1:{httpd.server_port}/embed",
                "--out", str(out),
            ])
            assert code == EXIT_OK
            metrics = json.loads(read(out / "metrics.json"))
            assert metrics["config"]["embedder"] == "remote"
            # constant embeddings collapse description similarity to 1.0,
            # which the clean three-object scene tolerates
            assert metrics["metrics"]["detections"] == {"achieved": 3, "expected": 3}
        finally:
            httpd.shutdown()

    def test_unreachable_endpoint_exits_1(self, scenario_dir, out):
        code = main([
            "replay", "--scenario", str(scenario_dir / LEVEL1),
            "--embedder", "remote", "--endpoint", "http://127.0.0.1:1/x",
            "--out", str(out),
        ])
        assert code == 1
