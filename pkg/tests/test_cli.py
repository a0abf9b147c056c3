import json

import pytest

from segalkit.cli import main


@pytest.fixture
def workdir(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    return tmp_path


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_chain3_segal_check(workdir, capsys):
    assert main(["generate", "chain-poset", "3", "-o", "chain3.cat.json"]) == 0
    assert main(["nerve", "chain3.cat.json", "--level", "3", "-o", "chain3.sst.json"]) == 0
    capsys.readouterr()
    code, out, _ = run(["segal-check", "chain3.sst.json"], capsys)
    assert code == 0 and "PASS" in out


def test_walking_iso_complete_check(workdir, capsys):
    main(["generate", "walking-iso", "-o", "wi.cat.json"])
    main(["nerve", "wi.cat.json", "-o", "walking-iso.sst.json"])
    capsys.readouterr()
    code, out, _ = run(["complete-check", "walking-iso.sst.json", "--json"], capsys)
    report = json.loads(out)
    assert code == 1
    assert report["verdict"] is False
    assert len(report["witness"]["neutral_in_edges"]) == 2


def test_z2_roundtrip_level4(workdir, capsys):
    main(["generate", "group-delooping", "z2", "-o", "z2.cat.json"])
    capsys.readouterr()
    code, out, _ = run(["roundtrip", "z2.cat.json", "--level", "4", "--json"], capsys)
    assert code == 0 and json.loads(out)["counts"]["tables_equal"] is True


def test_generate_is_deterministic(workdir, capsys):
    main(["generate", "random-category", "4", "2", "--seed", "7", "-o", "a.json"])
    main(["generate", "random-category", "4", "2", "--seed", "7", "-o", "b.json"])
    assert (workdir / "a.json").read_bytes() == (workdir / "b.json").read_bytes()


def test_generate_chain_and_group(capsys):
    code, out, _ = run(["generate", "chain-poset", "3"], capsys)
    assert code == 0 and json.loads(out)["objects"] == 3
    code, out, _ = run(["generate", "group-delooping", "z2"], capsys)
    assert json.loads(out)["hom"] == {"0,0": 2}
    code, out, _ = run(["generate", "group-delooping", "[[0, 1], [1, 0]]"], capsys)
    assert code == 0 and json.loads(out)["id"] == [0]


def test_every_generator_kind_is_accepted(capsys):
    from segalkit import corpus
    params = {"chain-poset": ["2"], "random-poset": ["3"], "group-delooping": ["z3"],
              "random-category": ["3"], "codiscrete": ["3"]}
    for kind in corpus.GENERATORS:
        code, out, err = run(["generate", kind, *params.get(kind, [])], capsys)
        assert code == 0, (kind, err)
        assert json.loads(out)["objects"] >= 1


@pytest.mark.parametrize("argv", [
    ["generate", "chain-poset"],
    ["generate", "chain-poset", "x"],
    ["generate", "group-delooping", "q8"],
    ["generate", "walking-iso", "3"],
    ["generate", "random-poset", "3", "2.0"],
])
def test_generate_bad_params_exit_2(argv, capsys):
    assert run(argv, capsys)[0] == 2


def test_malformed_json_exit_2(workdir, capsys):
    (workdir / "bad.sst.json").write_text('{"top_level": 2,\n "levels": [')
    code, _, err = run(["validate", "bad.sst.json"], capsys)
    assert code == 2 and "line 2" in err


def test_dangling_reference_exit_2(workdir, capsys):
    (workdir / "d.sst.json").write_text(json.dumps(
        {"top_level": 1, "levels": [{"count": 1}, {"simplices": [{"faces": [0, 3]}]}]}))
    assert run(["validate", "d.sst.json"], capsys)[0] == 2


def test_invalid_identity_exit_1(workdir, capsys):
    payload = {"top_level": 2, "levels": [
        {"count": 3},
        {"simplices": [{"faces": [1, 0]}, {"faces": [2, 1]}, {"faces": [2, 0]}, {"faces": [2, 2]}]},
        {"simplices": [{"faces": [3, 2, 0]}]}]}
    (workdir / "m.sst.json").write_text(json.dumps(payload))
    code, out, _ = run(["validate", "m.sst.json", "--json"], capsys)
    assert code == 1 and json.loads(out)["witness"] == {"simplex": [2, 0], "i": 0, "j": 2}
    assert run(["segal-check", "m.sst.json"], capsys)[0] == 1


def test_horn_count_and_extract(workdir, capsys):
    main(["generate", "group-delooping", "z3", "-o", "z3.cat.json"])
    main(["nerve", "z3.cat.json", "--level", "3", "-o", "z3.sst.json"])
    capsys.readouterr()
    code, out, _ = run(["horn-count", "z3.sst.json", "3", "2", "--json"], capsys)
    assert code == 0 and json.loads(out)["counts"]["by_filler_count"] == {"1": 27}
    code, out, _ = run(["extract", "z3.sst.json"], capsys)
    assert code == 0 and "id" not in json.loads(out)


def test_synthesize_then_extract_with_identities(workdir, capsys):
    main(["generate", "chain-poset", "3", "-o", "c.cat.json"])
    main(["nerve", "c.cat.json", "--level", "4", "-o", "c.sst.json"])
    assert main(["synthesize-degeneracies", "c.sst.json", "--target", "3", "-o", "c.deg.json"]) == 0
    assert main(["extract", "c.sst.json", "--degeneracies", "c.deg.json", "-o", "back.cat.json"]) == 0
    back = json.loads((workdir / "back.cat.json").read_text())
    orig = json.loads((workdir / "c.cat.json").read_text())
    assert back == orig
    capsys.readouterr()
    assert run(["univalence-check", "c.sst.json", "--degeneracies", "c.deg.json"], capsys)[0] == 0


def test_synthesize_incomplete_exit_2(workdir, capsys):
    main(["generate", "group-delooping", "z2", "-o", "z2.cat.json"])
    code, _, err = run(["synthesize-degeneracies", "z2.cat.json", "--level", "3"], capsys)
    assert code == 2 and "vertex" in err


def test_univalence_check_searches_degeneracies(workdir, capsys):
    main(["generate", "group-delooping", "z2", "-o", "z2.cat.json"])
    capsys.readouterr()
    code, out, _ = run(["univalence-check", "z2.cat.json", "--json"], capsys)
    assert code == 1 and len(json.loads(out)["witness"]["isomorphisms"]) == 2


def test_segal_check_exhaustive_on_category_input(workdir, capsys, monkeypatch):
    monkeypatch.setenv("SEGALKIT_THREADS", "2")
    main(["generate", "random-category", "4", "2", "--seed", "3", "-o", "r.cat.json"])
    capsys.readouterr()
    code, out, _ = run(["segal-check", "r.cat.json", "--level", "4", "--exhaustive", "--json"], capsys)
    assert code == 0 and json.loads(out)["counts"]["violations"] == 0


def test_missing_file_exit_2(capsys):
    assert run(["validate", "/nonexistent.sst.json"], capsys)[0] == 2
