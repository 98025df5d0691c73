import json

import pytest

from treeramsey import serialize, trees
from treeramsey.cli import main
from treeramsey.maps import TreeMap


@pytest.fixture()
def files(tmp_path):
    paths = {}
    for name, t in [
        ("c1", trees.chain(1)),
        ("c2", trees.chain(2)),
        ("c3", trees.chain(3)),
        ("y", trees.tree([None, 0, 0])),
    ]:
        p = tmp_path / f"{name}.json"
        serialize.save_json(str(p), serialize.tree_to_json(t))
        paths[name] = str(p)
    m = tmp_path / "f001.json"
    serialize.save_json(
        str(m), serialize.map_to_json(TreeMap(trees.chain(3), trees.chain(2), (0, 0, 1)))
    )
    paths["f001"] = str(m)
    paths["dir"] = str(tmp_path)
    return paths


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_version_deterministic(capsys):
    code1, out1 = run(capsys, "--version")
    code2, out2 = run(capsys, "--version")
    assert code1 == code2 == 0 and out1 == out2
    payload = json.loads(out1)
    assert payload["schemas"]["tree"] == 1


def test_enum_trees_count(capsys):
    code, out = run(capsys, "enum", "trees", "--n", "4", "--count-only")
    assert code == 0 and out.strip() == "5"


def test_enum_maps(files, capsys):
    code, out = run(
        capsys, "--json", "enum", "maps", "--kind", "sealed",
        "--dom", files["c3"], "--cod", files["c2"],
    )
    assert code == 0
    assert json.loads(out)["maps"] == [[0, 0, 1]]


def test_rs_roundtrip(files, capsys, tmp_path):
    code, out = run(capsys, "--json", "rs", "injection", "--map", files["f001"])
    assert code == 0
    e = serialize.map_from_json(json.loads(out))
    assert e.values == (0, 2)


def test_exit_code_fails(files, capsys):
    code, _ = run(
        capsys, "witness", "check", "--b", "2",
        "--s", files["c2"], "--t", files["c3"], "--u", files["c3"],
    )
    assert code == 1


def test_exit_code_holds_and_report_roundtrip(files, capsys, tmp_path):
    out_path = str(tmp_path / "rep.json")
    code, _ = run(
        capsys, "witness", "check", "--b", "2",
        "--s", files["c2"], "--t", files["c2"], "--u", files["c2"],
        "--out", out_path,
    )
    assert code == 0
    code, out = run(capsys, "witness", "replay", "--report", out_path)
    assert code == 0 and "reproduced: True" in out


def test_exit_code_usage_error(files, capsys):
    bad = files["dir"] + "/nonexistent.json"
    code, _ = run(capsys, "trees", "meet", "--in", bad, "--v", "0", "--w", "1")
    assert code == 2


def test_exit_code_malformed_json(files, capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _ = run(capsys, "trees", "meet", "--in", str(bad), "--v", "0", "--w", "1")
    assert code == 2


def test_exit_code_resource_cap(files, capsys):
    code, _ = run(
        capsys, "--max-nodes", "1", "witness", "check", "--b", "2",
        "--s", files["c2"], "--t", files["c3"], "--u", files["c3"],
    )
    assert code == 3


def test_schema_version_refusal(files, capsys, tmp_path):
    payload = serialize.tree_to_json(trees.chain(2))
    payload["version"] = 99
    p = tmp_path / "v99.json"
    serialize.save_json(str(p), payload)
    code, _ = run(capsys, "trees", "meet", "--in", str(p), "--v", "0", "--w", "1")
    assert code == 2


def test_loader_rejects_non_canonical_without_normalize(files, capsys, tmp_path):
    payload = {"schema": "tree", "version": 1, "kind": "tree", "parent": [None, 0, 0, 1]}
    p = tmp_path / "noncanon.json"
    serialize.save_json(str(p), payload)
    code, _ = run(capsys, "trees", "meet", "--in", str(p), "--v", "1", "--w", "2")
    assert code == 2
    code, out = run(capsys, "--normalize", "trees", "meet", "--in", str(p), "--v", "1", "--w", "2")
    assert code == 0


def test_tree_save_load_identity_roundtrip():
    for t in trees.all_trees(4):
        assert serialize.tree_from_json(serialize.tree_to_json(t)) == t


def test_search_with_fixture_and_jobs(files, capsys, tmp_path):
    fix = str(tmp_path / "fix.json")
    code1, out1 = run(
        capsys, "--json", "witness", "search", "--mode", "chain", "--b", "2",
        "--k", "2", "--l", "2", "--max-vertices", "4", "--fixtures", fix,
    )
    code2, out2 = run(
        capsys, "--json", "--jobs", "2", "witness", "search", "--mode", "chain",
        "--b", "2", "--k", "2", "--l", "2", "--max-vertices", "4", "--fixtures", fix,
    )
    assert code1 == code2 == 0
    assert out1 == out2  # identical bytes for any --jobs value
    fixture = serialize.load_fixtures(fix)
    assert len(fixture["entries"]) == 1


def test_fixture_mismatch_is_refused(tmp_path):
    fix = str(tmp_path / "fix.json")
    serialize.record_fixture(fix, "k", 1)
    assert serialize.record_fixture(fix, "k", 1) is False
    with pytest.raises(Exception):
        serialize.record_fixture(fix, "k", 2)


def test_config_file_defaults(files, capsys, tmp_path):
    cfg = tmp_path / "cfg"
    cfg.write_text("max_nodes=1\n")
    code, _ = run(
        capsys, "--config", str(cfg), "witness", "check", "--b", "2",
        "--s", files["c2"], "--t", files["c3"], "--u", files["c3"],
    )
    assert code == 3  # the configured cap applies


def test_bridge_commands(files, capsys):
    code, out = run(capsys, "bridge", "prvo", "--values", "0,0,1", "--k", "2")
    assert code == 0 and "agree=True" in out
    code, out = run(capsys, "bridge", "gr", "--u", files["y"], "--l", "2")
    assert code == 0


def test_deterministic_output_across_runs(files, capsys):
    args = [
        "--json", "witness", "check", "--b", "2",
        "--s", files["c2"], "--t", files["c3"], "--u", files["c3"],
    ]
    _, out1 = run(capsys, *args)
    _, out2 = run(capsys, *args)
    assert out1 == out2

def test_max_colorings_cap(files, capsys):
    code, _ = run(
        capsys, "--max-colorings", "0", "witness", "check", "--b", "2",
        "--s", files["c2"], "--t", files["c3"], "--u", files["c3"],
    )
    assert code == 3


def test_env_var_node_cap(files, capsys, monkeypatch):
    monkeypatch.setenv("RAMSEY_MAX_NODES", "1")
    code, _ = run(
        capsys, "witness", "check", "--b", "2",
        "--s", files["c2"], "--t", files["c3"], "--u", files["c3"],
    )
    assert code == 3


def test_coloring_json_roundtrip():
    payload = serialize.coloring_to_json((0, 1, 1), 2)
    colors, b = serialize.coloring_from_json(payload)
    assert colors == (0, 1, 1) and b == 2


def test_config_missing_file(files, capsys):
    code, _ = run(capsys, "--config", "/nonexistent/cfg", "enum", "trees", "--n", "2")
    assert code == 2
