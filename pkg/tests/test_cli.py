import json

import pytest

from dwlink.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


class TestGroupInfo:
    def test_s3(self, capsys):
        code, out = run(capsys, "group-info", "--group", "symmetric:3")
        assert code == 0
        doc = json.loads(out)
        assert doc["order"] == 6
        assert sorted(c["size"] for c in doc["classes"]) == [1, 2, 3]

    def test_bad_spec(self, capsys):
        assert main(["group-info", "--group", "nope:3"]) == 2


class TestBraidInfo:
    def test_trefoil(self, capsys):
        code, out = run(capsys, "braid-info", "--braid", "2: 1 1 1")
        assert code == 0
        doc = json.loads(out)
        assert doc["components"] == 1
        assert doc["self_writhe"] == [3]

    def test_hopf(self, capsys):
        code, out = run(capsys, "braid-info", "--braid", "2: 1 1")
        doc = json.loads(out)
        assert doc["linking"] == [[0, 1], [1, 0]]

    def test_bad_braid(self, capsys):
        assert main(["braid-info", "--braid", "2: 9"]) == 2


class TestHoms:
    def test_unlink_count(self, capsys):
        code, out = run(
            capsys, "homs", "--braid", "2:", "--group", "cyclic:3", "--count"
        )
        assert code == 0
        assert json.loads(out)["count"] == 9

    def test_records(self, capsys):
        code, out = run(capsys, "homs", "--braid", "2: 1", "--group", "cyclic:2")
        doc = json.loads(out)
        assert doc["count"] == 2
        assert doc["homs"][0]["longitude"] == ["0"]

    def test_constrained(self, capsys):
        code, out = run(
            capsys,
            "homs",
            "--braid",
            "2: 1 1 1",
            "--group",
            "symmetric:3",
            "--x",
            "(1 2)",
            "--count",
        )
        assert code == 0
        assert json.loads(out)["count"] > 0

    def test_search_cap_exit(self, capsys):
        assert main(["homs", "--braid", "12:", "--group", "quaternion:8"]) == 3


class TestDw:
    def test_hopf_z2(self, capsys):
        code, out = run(
            capsys, "dw", "--braid", "2: 1 1", "--group", "cyclic:2", "--all-x", "--exact"
        )
        assert code == 0
        doc = json.loads(out)
        assert len(doc["exact_entries"]) == 4
        assert all(e["count"] == 1 for e in doc["exact_entries"])


class TestVerify:
    def test_trefoil_unknot(self, capsys):
        code, out = run(
            capsys,
            "verify", "--braid", "2: 1", "-p", "3", "-k", "1", "--group", "cyclic:2",
        )
        assert code == 0
        assert json.loads(out)["violations"] == []

    def test_component_mismatch_exit2(self, capsys):
        code = main(
            ["verify", "--braid", "2: 1", "-p", "2", "-k", "1", "--group", "cyclic:3"]
        )
        assert code == 2

    def test_group_order_divisible_exit2(self, capsys):
        code = main(
            [
                "verify", "--braid", "2: 1 1 1",
                "-p", "3", "-k", "1", "--group", "symmetric:3",
            ]
        )
        assert code == 2

    def test_thread_count_invariance(self, capsys):
        args = ["verify", "--braid", "2: 1", "-p", "3", "-k", "1",
                "--group", "quaternion:8"]
        _, out1 = run(capsys, *args, "--threads", "1")
        _, out8 = run(capsys, *args, "--threads", "8")
        # elapsed differs between runs; everything else must be byte-identical
        d1, d8 = json.loads(out1), json.loads(out8)
        d1.pop("elapsed"), d8.pop("elapsed")
        assert json.dumps(d1) == json.dumps(d8)


class TestSweep:
    def test_catalog(self, capsys, tmp_path):
        path = tmp_path / "catalog.json"
        path.write_text(
            json.dumps(
                [
                    {"braid": "2: 1", "p": 3, "k": 1, "group": "cyclic:2"},
                    {"braid": "3: 1 2", "p": 2, "k": 1, "group": "cyclic:3"},
                ]
            )
        )
        code, out = run(capsys, "sweep", "--catalog", str(path))
        assert code == 0
        doc = json.loads(out)
        assert [e["status"] for e in doc["entries"]] == ["ok", "ok"]

    def test_precondition_entry_exit2(self, capsys, tmp_path):
        path = tmp_path / "catalog.json"
        path.write_text(
            json.dumps([{"braid": "2: 1", "p": 2, "k": 1, "group": "cyclic:3"}])
        )
        assert main(["sweep", "--catalog", str(path)]) == 2

    def test_missing_file(self, capsys):
        assert main(["sweep", "--catalog", "/nonexistent.json"]) == 2


class TestFrobcheck:
    def test_basic(self, capsys):
        code, out = run(
            capsys, "frobcheck", "-p", "3", "-e", "2", "-n", "3", "--trials", "25"
        )
        assert code == 0
        assert json.loads(out)["ok"] is True

    def test_not_prime(self, capsys):
        assert main(["frobcheck", "-p", "4", "-n", "2"]) == 2


class TestDeterminism:
    def test_byte_stable_output(self, capsys):
        args = ["dw", "--braid", "2: 1 1", "--group", "symmetric:3"]
        _, out1 = run(capsys, *args)
        _, out2 = run(capsys, *args)
        assert out1 == out2
