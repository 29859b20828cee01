import json
from importlib.resources import as_file, files

import pytest

from filtrated_k.cli import main
from filtrated_k.groups import parse_graded
from filtrated_k.reference import d4_table

DATA = files("filtrated_k") / "data"


@pytest.fixture(scope="module")
def data_dir():
    with as_file(DATA) as path:
        yield path


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_homtable_machine_output_round_trips(capsys, data_dir):
    code, out, _ = run(capsys, "homtable", "--poset", data_dir / "d4.poset", "--format", "machine")
    assert code == 0
    data = json.loads(out)
    table = {(y, z): parse_graded(g) for y, row in data["rows"].items() for z, g in row.items()}
    assert table == d4_table()
    assert set(data["flags"].values()) == {"exact"}


def test_homtable_is_deterministic(capsys):
    a = run(capsys, "homtable", "chain:3", "--format", "machine")[1]
    b = run(capsys, "homtable", "chain:3", "--format", "machine")[1]
    assert a == b


def test_homtable_text_for_two_point_chain(capsys):
    code, out, _ = run(capsys, "homtable", "chain:2")
    assert code == 0
    rows = {line.split()[0]: line.split()[1:] for line in out.splitlines()[1:]}
    assert rows["1"] == ["Z[0]", "Z[1]", "0", "exact"]
    assert rows["12"] == ["Z[0]", "0", "Z[0]", "exact"]


def test_space(capsys):
    code, out, _ = run(capsys, "space", "d4", "--format", "machine")
    data = json.loads(out)
    assert data["minimal_open"]["1"] == "14"
    assert len(data["connected_locally_closed"]) == 11


def test_complex(capsys):
    code, out, _ = run(capsys, "complex", "chain:2", "1", "2", "--format", "machine")
    data = json.loads(out)
    assert data["relative"] == ["(1,2)"]
    assert data["k_theory"] == "Z[1]"


def test_module_resolve_m(capsys, data_dir):
    code, out, _ = run(capsys, "module-resolve", "d4", data_dir / "M.mod", "--format", "machine")
    assert code == 0
    data = json.loads(out)
    assert data["length"] == 1 and data["verified"]
    assert data["modules"] == [[["124", 0], ["134", 0], ["234", 0]], [["1234", 0]]]
    code, out, _ = run(capsys, "module-resolve", "d4", data_dir / "M.mod")
    assert "F1 = P1234" in out and "F0 = P124 + P134 + P234" in out


def test_module_resolve_truncation_fails(capsys, data_dir):
    code, out, _ = run(capsys, "module-resolve", "d4", data_dir / "M3.mod", "--max-length", "1")
    assert code == 1 and "truncated" in out


@pytest.mark.parametrize("k", [2, 3, 4, 6])
def test_module_ext(capsys, data_dir, k):
    code, out, _ = run(capsys, "module-ext", "d4", data_dir / f"M{k}.mod", data_dir / "P1234.mod", "--degree", 2)
    assert code == 0 and out.strip() == f"Z/{k}[0]"


def test_module_check(capsys, data_dir):
    code, out, _ = run(capsys, "module-check", "d4", data_dir / "M.mod", "--format", "machine")
    data = json.loads(out)
    assert data["exact"] and data["free_slots"] and not data["free"]
    code, out, _ = run(capsys, "module-check", "d4refined", data_dir / "Mprime.mod", "--format", "machine")
    data = json.loads(out)
    assert data["exact"] and data["free"] and data["free_spec"] == [["12344", 0]]


def test_input_errors_exit_with_two(capsys, data_dir, tmp_path):
    assert run(capsys, "homtable", "nowhere")[0] == 2
    assert run(capsys, "homtable")[0] == 2
    assert run(capsys, "homtable", "--poset", tmp_path / "missing.poset")[0] == 2
    bad = tmp_path / "bad.poset"
    bad.write_text("elements a b\ncover a<b, b<a\n")
    assert run(capsys, "space", "--poset", bad)[0] == 2
    assert run(capsys, "module-check", "d4", data_dir / "Mprime.mod")[0] == 2
    assert run(capsys, "module-check", "d5", data_dir / "M.mod")[0] == 2
    assert run(capsys, "complex", "chain:3", "13", "1")[0] == 2
    assert run(capsys, "verify-paper", "--only", "nonsense")[0] == 2


def test_verify_subset(capsys):
    code, out, _ = run(capsys, "verify-paper", "--only", "ext", "--format", "machine")
    data = json.loads(out)
    assert code == 0 and data["ok"]
    assert [c["tag"] for c in data["checks"]] == ["ext"]
