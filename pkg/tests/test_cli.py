import json

import pytest

from relhopf import catalog
from relhopf.cli import main
from relhopf.serialize import instance_from, save


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def files(tmp_path, capsys):
    for name, fname in [("H4", "H4.json"), ("kZ2", "kZ2.json"), ("k^Z3", "kZ3d.json"),
                        ("H4*", "H4d.json"), ("k", "k.json")]:
        assert run(capsys, "catalog", name, "-o", tmp_path / fname)[0] == 0
    assert run(capsys, "transmute", "enveloping", tmp_path / "H4.json",
               "-o", tmp_path / "H4bar.json")[0] == 0
    return tmp_path


def test_validate_hopf(files, capsys):
    code, out, _ = run(capsys, "validate", "hopf", files / "H4.json")
    assert code == 0 and out.strip().endswith("PASS")


def test_validate_many_files_machine(files, capsys):
    code, out, _ = run(capsys, "--format", "machine", "validate", "bialgebra",
                       files / "H4.json", files / "kZ2.json", files / "k.json")
    data = json.loads(out)
    assert code == 0 and [d["file"] for d in data] == [str(files / f) for f in
                                                       ("H4.json", "kZ2.json", "k.json")]


def test_validate_qt_coqt(files, capsys):
    assert run(capsys, "validate", "qt", files / "H4.json")[0] == 0
    assert run(capsys, "validate", "coqt", files / "H4d.json")[0] == 0
    assert run(capsys, "validate", "qt", files / "kZ2.json")[0] == 2


def test_validate_failure_exit_one(files, capsys):
    H = catalog.build_sweedler(5, 0)[0]
    inst = instance_from(H)
    inst.maps["antipode"] = H.antipode.scale(2)
    save(inst, files / "bad.json")
    code, out, _ = run(capsys, "validate", "hopf", files / "bad.json")
    assert code == 1
    assert "FAIL" in out and "PASS" not in out.splitlines()[-1]


def test_validate_yd_and_relhopf(files, capsys):
    assert run(capsys, "validate", "yd", files / "H4bar.json",
               "--bialgebra", files / "H4.json")[0] == 0
    assert run(capsys, "validate", "relhopf", files / "H4bar.json",
               "--bialgebra", files / "H4.json")[0] == 0
    assert run(capsys, "validate", "module", files / "H4.json")[0] == 2


def test_theorem21(files, capsys):
    code, out, _ = run(capsys, "theorem21", "--bialgebra", files / "H4.json",
                       "--datum", files / "H4bar.json")
    assert code == 0 and "agreement=true" in out
    code, out, _ = run(capsys, "--format", "machine", "theorem21", "--bialgebra",
                       files / "H4.json", "--datum", files / "H4bar.json")
    data = json.loads(out)
    assert data["agreement"] and data["braided_bialgebra"] and data["monoidal"]


def test_theorem21_rejects_non_datum(files, capsys):
    code, _, err = run(capsys, "theorem21", "--bialgebra", files / "kZ2.json",
                       "--datum", files / "H4bar.json")
    assert code == 2 and "error" in err


def test_prop34(files, capsys):
    H = catalog.build_dual_group_algebra(catalog.cyclic_table(3), catalog.GF(7))
    inst = instance_from(H)
    inst.maps["coaction"] = H.comult
    save(inst, files / "self.json")
    code, out, _ = run(capsys, "prop34", "--bialgebra", files / "kZ3d.json",
                       "--comodule-algebra", files / "self.json")
    assert code == 0 and "agreement=true" in out and "cob=fail" in out


def test_suites(files, capsys):
    code, out, _ = run(capsys, "--format", "machine", "suite", "long", files / "kZ2.json",
                       "--samples", 10, "--seed", 3)
    data = json.loads(out)
    assert code == 0 and data["seed"] == 3 and data["stats"]["samples"] == 10
    assert run(capsys, "suite", "ydident", files / "kZ3d.json", "--samples", 10)[0] == 0
    assert run(capsys, "suite", "long", files / "H4.json", "--samples", 5)[0] == 1


def test_identities(files, capsys, monkeypatch):
    monkeypatch.chdir(files)
    code, out, _ = run(capsys, "identities", "paper.identities", "--env", "H4.json")
    assert code == 0 and "native checkers agree" in out
    code, out, _ = run(capsys, "identities", "paper.identities", "--env", "H4bar.json",
                       "--bialgebra", "H4.json")
    assert code == 0
    (files / "broken.identities").write_text("x : m_B . == m_B\n")
    assert run(capsys, "identities", "broken.identities", "--env", "H4.json")[0] == 2


def test_input_errors(files, capsys):
    assert run(capsys, "validate", "hopf", files / "missing.json")[0] == 2
    (files / "junk.json").write_text("{")
    assert run(capsys, "validate", "hopf", files / "junk.json")[0] == 2
    assert run(capsys, "nonsense")[0] == 2
    assert run(capsys, "catalog", "nope", "-o", files / "x.json")[0] == 2


def test_transmute_function(files, capsys):
    code, out, _ = run(capsys, "transmute", "function", files / "H4d.json",
                       "-o", files / "fun.json")
    assert code == 0
    assert run(capsys, "validate", "yd", files / "fun.json",
               "--bialgebra", files / "H4d.json")[0] == 0
    assert run(capsys, "transmute", "enveloping", files / "kZ2.json", "-o", files / "o.json")[0] == 2


def test_console_script_help(capsys):
    assert main(["--help"]) == 0
