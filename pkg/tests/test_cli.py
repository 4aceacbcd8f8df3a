import json

import pytest

from rookideal import Board, facet_ideal, ideal_from_text
from rookideal.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestIdealCommand:
    def test_three_by_three(self, capsys):
        code, out, _ = run_cli(capsys, "ideal", "--m", "3", "--n", "3")
        assert code == 0
        ideal = ideal_from_text(out)
        assert len(ideal.gens) == 6
        assert ideal == facet_ideal(Board(3, 3))

    def test_power(self, capsys):
        code, out, _ = run_cli(capsys, "ideal", "--m", "2", "--n", "2", "--power", "2")
        assert code == 0
        assert len(ideal_from_text(out).gens) == 3

    def test_stanley_reisner_kind(self, capsys):
        code, out, _ = run_cli(
            capsys, "ideal", "--m", "1", "--n", "4", "--kind", "stanley-reisner"
        )
        assert code == 0
        assert len(ideal_from_text(out).gens) == 6

    def test_round_trip_canonical(self, capsys):
        code, out, _ = run_cli(capsys, "ideal", "--m", "2", "--n", "3")
        assert out == ideal_from_text(out).to_text()

    def test_bounds_are_usage_errors(self, capsys):
        for argv in (
            ["ideal", "--m", "3", "--n", "2"],
            ["ideal", "--m", "2", "--n", "7"],
            ["ideal", "--m", "2", "--n", "2", "--power", "5"],
        ):
            code, _, err = run_cli(capsys, *argv)
            assert code == 1
            assert "usage error" in err


class TestPrimesCommand:
    def test_both_methods_agree(self, capsys):
        code, out, _ = run_cli(capsys, "primes", "--m", "2", "--n", "3", "--method", "both")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "methods agree: 5 minimal primes"
        assert len(lines) == 6

    def test_single_row(self, capsys):
        code, out, _ = run_cli(capsys, "primes", "--m", "1", "--n", "4")
        assert code == 0
        assert out.split() == ["x11", "x12", "x13", "x14"]

    def test_three_by_three_bight(self, capsys):
        code, out, _ = run_cli(capsys, "primes", "--m", "3", "--n", "3", "--method", "both")
        assert code == 0
        sizes = [len(line.split()) for line in out.strip().splitlines()[1:]]
        assert max(sizes) == 4 and len(sizes) == 15

    def test_cover_search_guard_on_big_boards(self, capsys):
        code, _, err = run_cli(capsys, "primes", "--m", "5", "--n", "5", "--method", "both")
        assert code == 3 and "--allow-long" in err
        code, out, _ = run_cli(capsys, "primes", "--m", "5", "--n", "5")
        assert code == 0 and len(out.strip().splitlines()) == 210
        code, _, _ = run_cli(capsys, "primes", "--m", "4", "--n", "4", "--method", "both")
        assert code == 0


class TestInvariantsCommand:
    def test_three_by_three_json(self, capsys):
        code, out, _ = run_cli(capsys, "invariants", "--m", "3", "--n", "3")
        assert code == 0
        payload = json.loads(out)
        assert payload["reg"] == 4 and payload["depth"] == 4
        assert payload["dim"] == 6 and payload["height"] == 3 and payload["bight"] == 4
        assert payload["a_invariant"] == 0

    def test_power_case(self, capsys):
        code, out, _ = run_cli(capsys, "invariants", "--m", "2", "--n", "2", "--power", "3")
        payload = json.loads(out)
        assert code == 0 and payload["reg"] == 6 and payload["depth"] == 2

    def test_json_stable_without_timing(self, capsys):
        _, first, _ = run_cli(capsys, "invariants", "--m", "2", "--n", "3")
        _, second, _ = run_cli(capsys, "invariants", "--m", "2", "--n", "3")
        a, b = json.loads(first), json.loads(second)
        a.pop("wall_ms"), b.pop("wall_ms")
        assert a == b

    def test_guard_trips_without_flag(self, capsys):
        code, _, err = run_cli(capsys, "invariants", "--m", "2", "--n", "4", "--power", "3")
        assert code == 3
        assert "--allow-long" in err

    def test_gf2_char(self, capsys):
        code, out, _ = run_cli(capsys, "invariants", "--m", "2", "--n", "2", "--char", "2")
        payload = json.loads(out)
        assert code == 0 and payload["field"] == 2 and payload["reg"] == 2

    def test_composite_char_rejected(self, capsys):
        code, _, err = run_cli(capsys, "invariants", "--m", "2", "--n", "2", "--char", "6")
        assert code == 1

    def test_threads_flag_gives_same_numbers(self, capsys):
        _, one, _ = run_cli(capsys, "invariants", "--m", "2", "--n", "3", "--threads", "1")
        _, two, _ = run_cli(capsys, "invariants", "--m", "2", "--n", "3", "--threads", "2")
        a, b = json.loads(one), json.loads(two)
        a.pop("wall_ms"), b.pop("wall_ms")
        assert a == b


class TestBettiCommand:
    def test_from_file(self, capsys, tmp_path):
        path = tmp_path / "ideal.txt"
        path.write_text(facet_ideal(Board(2, 2)).to_text())
        code, out, _ = run_cli(capsys, "betti", str(path))
        assert code == 0
        payload = json.loads(out.strip().splitlines()[-1])
        assert payload["entries"] == [[0, 2, 2], [1, 4, 1]]

    def test_fixture_regularity(self, capsys, tmp_path):
        from rookideal import fixture_ideal

        for name, n, expected in (("L_six", None, 3), ("L_2n3", 4, 5), ("L_2n5", 4, 3)):
            path = tmp_path / "fixture.txt"
            path.write_text(fixture_ideal(name, n).to_text())
            code, out, _ = run_cli(capsys, "betti", str(path))
            payload = json.loads(out.strip().splitlines()[-1])
            assert code == 0 and payload["reg"] == expected

    def test_parse_error_reports_line(self, capsys, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("vars 2\n1 zz\n")
        code, _, err = run_cli(capsys, "betti", str(path))
        assert code == 1 and "line 2" in err

    def test_missing_file(self, capsys):
        code, _, err = run_cli(capsys, "betti", "/nonexistent/ideal.txt")
        assert code == 1


class TestMatchingCommand:
    def test_three_by_three(self, capsys):
        code, out, _ = run_cli(capsys, "matching", "--m", "3", "--n", "3")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "bound 4"
        assert len(lines) == 3  # two witness facets


class TestUsage:
    def test_unknown_command(self, capsys):
        code, _, err = run_cli(capsys, "frobnicate")
        assert code == 1
