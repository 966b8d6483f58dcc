import json

import pytest

from octantwalks.cli import main
from octantwalks.classify import RecordStore, load_store, run_classify, summarise


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_cli_census_formulas(capsys):
    code, out = run_cli(capsys, "census", "--formulas-only")
    assert code == 0
    assert out["I"][3] == 73
    assert sum(out["I"]) == 11_074_225


def test_cli_project(capsys):
    code, out = run_cli(capsys, "project", "0--;-+0;-++;+0+")
    assert code == 0
    assert out["dimension"] == 2
    assert out["redundant_axes"] == ["z"]
    assert out["projections"]["z"] == "-0;0+;+-*2"
    assert out["alpha_beta"]["alpha"] == "1"


def test_cli_group_and_orbitsum(capsys):
    code, out = run_cli(capsys, "group", "--", "---;--+;-+0;+00")
    assert code == 0
    assert out["order"] == 8
    assert out["orbit_sum_zero"] is False
    code, out = run_cli(capsys, "orbitsum", "--", "-0;+-;++;+0*2")
    assert code == 0
    assert out["order"] == 4


def test_cli_count(capsys):
    code, out = run_cli(capsys, "count", "---;--+;-+0;+00", "--order", "8")
    assert code == 0
    assert out["series"]["000"][8] == "28"


def test_cli_hadamard(capsys):
    code, out = run_cli(capsys, "hadamard", "+00;++0;-0+;-0-;--+;---", "--check", "--order", "6")
    assert code == 0
    assert out["decompositions"]
    assert out["assembly_matches_octant"] is True


def test_cli_verify_functional(capsys):
    code, out = run_cli(capsys, "verify", "functional", "---;--+;-+0;+00", "--order", "8")
    assert code == 0
    assert out[0]["passed"] is True


def test_cli_verify_closed_form_exit_code(capsys):
    code, out = run_cli(capsys, "verify", "closed-form", "ex43", "--order", "10")
    assert code == 0


def test_cli_guess_roundtrip(capsys, tmp_path):
    seq = [2**n for n in range(60)]
    path = tmp_path / "seq.json"
    path.write_text(json.dumps(seq))
    code, out = run_cli(capsys, "guess", str(path), "--r-max", "2", "--d-max", "2")
    assert code == 0
    assert out[0]["order"] == 1
    assert out[0]["verified_full"] is True


def test_cli_classify_and_tables(capsys, tmp_path):
    store = tmp_path / "store.jsonl"
    code, out = run_cli(capsys, "classify", "--max-card", "4", "--scope", "3d", "--store", str(store))
    assert code == 0
    assert out["total"] == 221
    assert out["finite"]["total"] == 26
    # rerun resumes without recomputation and yields the same summary
    code, out2 = run_cli(capsys, "classify", "--max-card", "4", "--scope", "3d", "--store", str(store))
    assert code == 0
    assert out2 == out
    code = main(["tables", "--store", str(store), "--json"])
    tab = json.loads(capsys.readouterr().out)
    assert tab["finite"]["by_card"][:2] == [0, 26]


def test_store_refuses_schema_mismatch(tmp_path):
    store = tmp_path / "store.jsonl"
    store.write_text('{"schema": 99, "scope": "3d", "bound": 200, "order": 12}\n')
    with pytest.raises(ValueError):
        RecordStore(str(store), "3d", 200, 12)


def test_store_refuses_scope_mismatch(tmp_path):
    store = tmp_path / "store.jsonl"
    run_classify(2, "3d", store_path=str(store))
    with pytest.raises(ValueError):
        RecordStore(str(store), "2d-free", 200, 12)


def test_summary_recomputed_from_store_matches(tmp_path):
    store = tmp_path / "store.jsonl"
    live = run_classify(4, "3d", store_path=str(store))
    _, records = load_store(str(store))
    assert summarise(records) == live
