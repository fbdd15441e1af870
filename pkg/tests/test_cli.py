"""
CLI tests: cli.main.main(argv) is called directly and stdout/stderr are
read through capsys.
"""

import io
import json

import pytest

from cli.main import main
from domains.analysis import enumerate_sp
from domains.model import dump_domain
from orders.core import format_order

PI3 = '{"voters": [[1, 2, 3], [2, 3, 1], [3, 1, 2]]}'


def run(capsys, *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture()
def pi3_file(tmp_path):
    path = tmp_path / "pi3.json"
    path.write_text(PI3, encoding="utf-8")
    return str(path)


@pytest.fixture()
def full3_file(tmp_path):
    path = tmp_path / "l3.json"
    orders = [[1, 2, 3], [1, 3, 2], [2, 1, 3], [2, 3, 1], [3, 1, 2], [3, 2, 1]]
    path.write_text(json.dumps({"n": 3, "orders": orders}), encoding="utf-8")
    return str(path)


# ---------------------------------------------------------------------------
# encode / decode / enum
# ---------------------------------------------------------------------------

class TestCodecVerbs:
    def test_encode(self, capsys):
        assert run(capsys, "encode", "34251") == (0, "+-+-\n", "")

    def test_decode(self, capsys):
        assert run(capsys, "decode", "++-+")[:2] == (0, "23415\n")

    def test_decode_leading_minus(self, capsys):
        assert run(capsys, "decode", "--", "--+-")[:2] == (0, "43251\n")

    def test_decode_positions(self, capsys):
        assert run(capsys, "decode", "(2)(3)(5)", "--n", "5")[:2] == (0, "23415\n")

    def test_decode_positions_need_n(self, capsys):
        code, _, err = run(capsys, "decode", "(2)(3)")
        assert code == 2
        assert err.startswith("SignedOrderError:")

    def test_encode_not_single_peaked(self, capsys):
        code, out, err = run(capsys, "encode", "2413")
        assert code == 2
        assert out == ""
        assert err.startswith("NotSinglePeaked:")

    def test_encode_json(self, capsys):
        code, out, _ = run(capsys, "encode", "43251", "--json")
        assert code == 0
        assert json.loads(out) == {
            "verb": "encode",
            "order": "43251",
            "signs": "--+-",
            "positive_positions": "(4)",
            "top": 4,
            "inversions": 7,
        }

    @pytest.mark.parametrize("n", range(1, 7))
    def test_round_trip(self, capsys, n):
        for order in enumerate_sp(n):
            code, signs, _ = run(capsys, "encode", format_order(order))
            assert code == 0
            code, back, _ = run(capsys, "decode", "--", signs.strip())
            assert code == 0
            assert back.strip() == format_order(order)

    def test_enum(self, capsys):
        code, out, _ = run(capsys, "enum", "4")
        assert code == 0
        assert out.split() == ["1234", "2134", "2314", "2341", "3214", "3241", "3421", "4321"]

    def test_enum_counts(self, capsys):
        assert run(capsys, "enum", "4", "--counts")[:2] == (0, "1 3 3 1\n")

    def test_enum_cap(self, capsys):
        code, _, err = run(capsys, "enum", "6", "--max-n", "5")
        assert code == 2
        assert err.startswith("ResourceLimit:")


# ---------------------------------------------------------------------------
# poset / path / check
# ---------------------------------------------------------------------------

class TestPosetVerbs:
    def test_poset_edge_list(self, capsys):
        code, out, _ = run(capsys, "poset", "3")
        assert code == 0
        assert out == "123 -> 213\n213 -> 231\n231 -> 321\n"

    def test_poset_dot_deterministic(self, capsys):
        first = run(capsys, "poset", "5", "--dot")
        second = run(capsys, "poset", "5", "--dot")
        assert first == second
        assert first[1].startswith("digraph bruhat {")

    def test_poset_needs_input(self, capsys):
        assert run(capsys, "poset")[0] == 2

    def test_path(self, capsys):
        code, out, _ = run(capsys, "path", "1234", "4321")
        assert code == 0
        assert out.strip().split(" -> ")[0] == "1234"
        assert len(out.strip().split(" -> ")) == 7

    def test_path_absent(self, capsys, tmp_path):
        path = tmp_path / "d.json"
        path.write_text('{"n": 4, "orders": [[1,2,3,4], [2,1,3,4], [1,2,4,3]]}', encoding="utf-8")
        code, out, _ = run(capsys, "path", "2134", "1243", "--domain", str(path))
        assert code == 1
        assert out.startswith("no path")

    @pytest.mark.parametrize("n", range(1, 9))
    def test_check_sp(self, capsys, n):
        code, out, _ = run(capsys, "check", str(n))
        assert code == 0
        assert all(line.endswith(": true") for line in out.splitlines())

    def test_check_full_domain(self, capsys, full3_file):
        code, out, _ = run(capsys, "check", "--domain", full3_file, "--json")
        assert code == 1
        report = json.loads(out)
        assert report["single_peaked"] is False
        assert report["peak_pit"] is False
        assert report["lattice"] is True

    def test_check_domain_from_stdin(self, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO(dump_domain(enumerate_sp(4))))
        assert run(capsys, "check", "--domain", "-")[0] == 0

    def test_missing_file(self, capsys, tmp_path):
        code, _, err = run(capsys, "check", "--domain", str(tmp_path / "absent.json"))
        assert code == 2
        assert err.startswith("FileNotFoundError:")

    def test_malformed_domain(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text('{"n": 3, "orders": "nope"}', encoding="utf-8")
        code, _, err = run(capsys, "check", "--domain", str(path))
        assert code == 2
        assert err.startswith("ValidationError:")

    def test_domain_not_utf8(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_bytes(b'{"n": 3, "orders": [[1,2,3]]}\xff')
        code, out, err = run(capsys, "check", "--domain", str(path))
        assert code == 2
        assert out == ""
        assert err.startswith("SignedOrderError:")
        assert "not valid UTF-8" in err

    def test_stdin_not_utf8(self, capsys, monkeypatch):
        raw = io.BytesIO(b'{"voters": [[1,2,3]]}\xff')
        monkeypatch.setattr("sys.stdin", io.TextIOWrapper(raw, encoding="utf-8"))
        code, _, err = run(capsys, "majority", "--profile", "-")
        assert code == 2
        assert err.startswith("SignedOrderError: standard input")


# ---------------------------------------------------------------------------
# majority / verify-cd
# ---------------------------------------------------------------------------

class TestVotingVerbs:
    def test_majority_cycle(self, capsys, pi3_file):
        code, out, _ = run(capsys, "majority", "--profile", pi3_file)
        assert code == 1
        assert "cycle: 1 ≺ 3 ≺ 2 ≺ 1" in out

    def test_majority_acyclic(self, capsys, tmp_path):
        path = tmp_path / "p.json"
        path.write_text('{"voters": [[1,2,3], [1,2,3], [3,2,1]]}', encoding="utf-8")
        code, out, _ = run(capsys, "majority", "--profile", str(path), "--json")
        assert code == 0
        result = json.loads(out)
        assert result["cycle"] is None
        assert result["majority_order"] == "123"

    def test_majority_even(self, capsys, tmp_path):
        path = tmp_path / "p.json"
        path.write_text('{"voters": [[1,2,3], [3,2,1]]}', encoding="utf-8")
        code, _, err = run(capsys, "majority", "--profile", str(path))
        assert code == 2
        assert err.startswith("EvenProfile:")

    def test_verify_sp4(self, capsys):
        code, out, _ = run(capsys, "verify-cd", "4", "--m", "3")
        assert code == 0
        assert out == "condorcet: true (512 profiles)\n"

    def test_verify_full_domain(self, capsys, full3_file):
        code, out, _ = run(capsys, "verify-cd", "--domain", full3_file, "--m", "3", "--json")
        assert code == 1
        result = json.loads(out)
        assert result["witness"] == {"voters": [[1, 2, 3], [2, 3, 1], [3, 1, 2]]}
        assert result["witness_cycle"] == [1, 3, 2, 1]

    def test_verify_budget(self, capsys):
        code, _, err = run(capsys, "verify-cd", "4", "--m", "3", "--max-profiles", "100")
        assert code == 2
        assert err.startswith("ResourceLimit:")


# ---------------------------------------------------------------------------
# tiling / intervals / usage
# ---------------------------------------------------------------------------

class TestFigureVerbs:
    def test_tiling(self, capsys):
        code, out, _ = run(capsys, "tiling", "4", "--highlight", "2314")
        assert code == 0
        assert out.count("<polygon") == 6
        assert 'id="snake"' in out

    def test_tiling_deterministic(self, capsys):
        assert run(capsys, "tiling", "4") == run(capsys, "tiling", "4")

    def test_intervals(self, capsys):
        code, out, _ = run(capsys, "intervals", "2")
        assert code == 0
        assert out.count(" -> ") == 4

    def test_intervals_json(self, capsys):
        code, out, _ = run(capsys, "intervals", "4", "--json")
        result = json.loads(out)
        assert (result["nodes"], result["arcs"]) == (11, 16)


class TestUsage:
    def test_unknown_verb(self, capsys):
        assert main(["frobnicate"]) == 2

    def test_missing_verb(self, capsys):
        assert main([]) == 2

    def test_help(self, capsys):
        assert main(["--help"]) == 0
        assert "verify-cd" in capsys.readouterr().out

    def test_bad_log_level(self, capsys, monkeypatch):
        monkeypatch.setattr("cli.main.LOG_LEVEL", "verbose")
        code, out, err = run(capsys, "enum", "3")
        assert code == 2
        assert out == ""
        assert err == "SignedOrderError: LOG_LEVEL='verbose' is not a logging level.\n"

    def test_log_level_is_case_insensitive(self, capsys, monkeypatch):
        monkeypatch.setattr("cli.main.LOG_LEVEL", "debug")
        assert run(capsys, "enum", "3")[0] == 0
