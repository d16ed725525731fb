"""Command line interface: commands, exit codes, JSON output."""

import json

from polypell.cli import (EXIT_INPUT, EXIT_NOT_WITHIN, EXIT_SOLVED, main)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestPell:
    def test_solvable(self, capsys):
        code, out, _ = run(capsys, "pell", "--D", "X^6+X")
        assert code == EXIT_SOLVED
        assert "A = 2*X^5+1" in out
        assert "B = 2*X^2" in out
        assert "verdict: pellian" in out

    def test_not_solvable(self, capsys):
        code, out, _ = run(capsys, "pell", "--D", "X^6+X+1",
                           "--max-steps", "8", "--l-bound", "3")
        assert code == EXIT_NOT_WITHIN
        assert "not pellian" in out

    def test_json(self, capsys):
        code, out, _ = run(capsys, "pell", "--D", "X^6+X", "--json")
        assert code == EXIT_SOLVED
        data = json.loads(out)
        assert data["command"] == "pell"
        assert data["inputs"]["D"] == "X^6+X"
        assert data["verdict"] == "pellian"
        assert data["entries"][0]["A"] == "2*X^5+1"


class TestAlmostPell:
    def test_exact(self, capsys):
        code, out, _ = run(capsys, "almost-pell",
                           "--D", "X*(X^7-X^3-1)", "--F", "4*X+1")
        assert code == EXIT_SOLVED
        assert "A = 2*X^4-1" in out
        assert "B = 2" in out

    def test_non_split_notice(self, capsys):
        code, out, _ = run(capsys, "almost-pell",
                           "--D", "X^6+X+1", "--F", "X^2+1",
                           "--max-steps", "8")
        assert code == EXIT_NOT_WITHIN
        assert "does not split" in out


class TestCfrac:
    def test_steps(self, capsys):
        code, out, _ = run(capsys, "cfrac", "--D", "X^6+X", "--steps", "4")
        assert code == EXIT_SOLVED
        assert "a_0 = X^3" in out
        assert out.count("a_") == 4


class TestOrder:
    def test_infinity_class(self, capsys):
        code, out, _ = run(capsys, "order", "--D", "X^6+X",
                           "--order-bound", "8")
        assert code == EXIT_SOLVED
        assert "verdict: order 5" in out

    def test_out_of_range(self, capsys):
        code, out, _ = run(capsys, "order", "--D", "X^6+X",
                           "--order-bound", "3")
        assert code == EXIT_NOT_WITHIN


class TestRelation:
    def test_infinity_lattice(self, capsys):
        code, out, _ = run(capsys, "relation", "--D", "X^6+X",
                           "--l-bound", "6")
        assert code == EXIT_SOLVED
        assert "basis: [5]" in out


class TestScan:
    def test_octic_family_height_one(self, capsys):
        code, out, _ = run(capsys, "scan",
                           "--D", "(X-t)*(X^7-X^3-1)", "--F", "4*X+1",
                           "--height-bound", "1", "--max-steps", "12",
                           "--l-bound", "5")
        assert code == EXIT_SOLVED
        assert "generic verdict: proven" in out
        assert "t0 = 0: solvable" in out

    def test_requires_parameter(self, capsys):
        code, _, err = run(capsys, "scan", "--D", "X^6+X", "--F", "1")
        assert code == EXIT_INPUT


class TestVerifyExamples:
    def test_all_pass(self, capsys):
        code, out, _ = run(capsys, "verify-examples")
        assert code == EXIT_SOLVED
        assert "FAIL" not in out
        assert "verdict: all examples verified" in out


class TestErrors:
    def test_parse_error(self, capsys):
        code, _, err = run(capsys, "pell", "--D", "X^6+%")
        assert code == EXIT_INPUT
        assert "parse error" in err

    def test_invalid_d(self, capsys):
        code, _, err = run(capsys, "pell", "--D", "X^5+X")
        assert code == EXIT_INPUT
        assert "input error" in err

    def test_no_command(self, capsys):
        code, out, _ = run(capsys)
        assert code == EXIT_INPUT
