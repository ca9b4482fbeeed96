import os
import shutil

import pytest

from quandles.catalog_io import serialize_matrix
from quandles.cli import main


@pytest.fixture()
def table_files(tmp_path, q61, q72, q52, q53):
    paths = {}
    for name, q in (("q61", q61), ("q72", q72), ("q52", q52), ("q53", q53)):
        path = tmp_path / f"{name}.qnd"
        path.write_text(serialize_matrix(q.table))
        paths[name] = str(path)
    return paths


class TestCheck:
    def test_q61(self, table_files, capsys):
        assert main(["check", table_files["q61"]]) == 0
        out = capsys.readouterr().out
        assert "connected" in out
        assert "not latin" in out
        assert "{1,1,2,2}" in out

    def test_malformed_file(self, tmp_path, capsys):
        path = tmp_path / "bad.qnd"
        path.write_text("2\n1 2\n")
        assert main(["check", str(path)]) == 2

    def test_invalid_quandle(self, tmp_path, capsys):
        path = tmp_path / "bad.qnd"
        path.write_text("2\n2 2\n1 1\n")
        assert main(["check", str(path)]) == 2

    def test_missing_file(self, capsys):
        assert main(["check", "/nonexistent/x.qnd"]) == 2


class TestCanon:
    def test_golden_q52(self, table_files, q52, capsys):
        assert main(["canon", table_files["q52"]]) == 0
        assert capsys.readouterr().out == serialize_matrix(q52.table)

    def test_golden_q53(self, table_files, q53, capsys):
        assert main(["canon", table_files["q53"]]) == 0
        assert capsys.readouterr().out == serialize_matrix(q53.table)


class TestIso:
    def test_not_isomorphic(self, table_files):
        assert main(["iso", table_files["q52"], table_files["q53"]]) == 1

    def test_isomorphic_to_self(self, table_files):
        assert main(["iso", table_files["q61"], table_files["q61"]]) == 0


class TestAut:
    def test_q52(self, table_files, capsys):
        assert main(["aut", table_files["q52"]]) == 0
        assert "|Aut| = 20" in capsys.readouterr().out


class TestDual:
    def test_involution(self, table_files, q61, tmp_path, capsys):
        assert main(["dual", table_files["q61"]]) == 0
        once = capsys.readouterr().out
        path = tmp_path / "dual.qnd"
        path.write_text(once)
        assert main(["dual", str(path)]) == 0
        assert capsys.readouterr().out == serialize_matrix(q61.table)


class TestEnum:
    def test_order_two_empty(self, capsys):
        assert main(["enum", "2"]) == 0
        assert "0 classes" in capsys.readouterr().out

    def test_order_five_with_profile(self, capsys):
        assert main(["enum", "5", "--profile", "{1,4}"]) == 0
        assert "2 classes" in capsys.readouterr().out

    def test_out_directory(self, tmp_path, capsys):
        out = str(tmp_path / "cat5")
        assert main(["enum", "5", "--out", out]) == 0
        assert sorted(os.listdir(out)) == [
            "index.txt",
            "q5_1.qnd",
            "q5_2.qnd",
            "q5_3.qnd",
        ]

    def test_order_guard(self, capsys):
        assert main(["enum", "9"]) == 2

    def test_env_var_sets_cap(self, monkeypatch, capsys):
        monkeypatch.setenv("QUANDLE_MAX_ORDER", "7")
        assert main(["enum", "8"]) == 2

    def test_flag_override(self, monkeypatch, capsys):
        monkeypatch.setenv("QUANDLE_MAX_ORDER", "4")
        # explicit flag wins over the environment variable
        assert main(["enum", "5", "--max-order-override", "5"]) == 0


class TestVerify:
    def test_single_file(self, table_files, capsys):
        assert main(["verify", table_files["q52"]]) == 0
        out = capsys.readouterr().out
        assert "CLAIM THM-CANON pass" in out
        assert "CLAIM LEM-GROUP pass" in out

    def test_catalog_dir(self, tmp_path, table_files, capsys):
        cat = tmp_path / "cat"
        cat.mkdir()
        shutil.copy(table_files["q52"], cat / "q52.qnd")
        shutil.copy(table_files["q61"], cat / "q61.qnd")
        assert main(["verify", str(cat)]) == 0
        out = capsys.readouterr().out
        assert "scope=q52" in out and "scope=q61" in out

    def test_claims_filter(self, table_files, capsys):
        assert main(["verify", table_files["q52"], "--claims", "COR-CONJ"]) == 0
        lines = [
            ln
            for ln in capsys.readouterr().out.splitlines()
            if ln.startswith("CLAIM")
        ]
        assert lines and all("COR-CONJ" in ln for ln in lines)

    def test_disconnected_input(self, tmp_path, capsys):
        path = tmp_path / "triv.qnd"
        path.write_text("2\n1 1\n2 2\n")
        assert main(["verify", str(path)]) == 1


class TestUsage:
    def test_no_args(self, capsys):
        assert main([]) == 2

    def test_unknown_subcommand(self, capsys):
        assert main(["frobnicate"]) == 2
