import json
from fractions import Fraction

import pytest

from irratio.cli import (parse_fraction, parse_interval_dict, run,
                         e_witness_report_dict, pi_witness_report_dict)
from irratio.witness import e_witness, pi_witness

F = Fraction


class TestParsing:
    def test_fraction(self):
        assert parse_fraction("19/7") == F(19, 7)
        assert parse_fraction("5") == F(5)

    @pytest.mark.parametrize("bad", ["1.5", "a/b", "1/2/3", "-1/2", "1/0", ""])
    def test_invalid_fraction(self, bad):
        with pytest.raises(ValueError):
            parse_fraction(bad)


class TestDigitsCommand:
    def test_pi(self, capsys):
        assert run(["digits", "pi", "--digits", "6"]) == 0
        out = capsys.readouterr().out.strip()
        assert out.startswith("3.141592")

    def test_pi_archimedes(self, capsys):
        assert run(["digits", "pi", "--digits", "6", "--method", "archimedes"]) == 0
        assert capsys.readouterr().out.startswith("3.141592")

    def test_e(self, capsys):
        assert run(["digits", "e", "--digits", "10"]) == 0
        assert capsys.readouterr().out.startswith("2.7182818284")

    def test_cap_exceeded(self, capsys, monkeypatch):
        monkeypatch.setenv("IRRATIO_MAX_DIGITS", "20")
        assert run(["digits", "pi", "--digits", "30"]) == 2

    def test_cap_override_allows(self, capsys, monkeypatch):
        monkeypatch.setenv("IRRATIO_MAX_DIGITS", "40")
        assert run(["digits", "e", "--digits", "30"]) == 0


class TestWitnessCommand:
    def test_e_text(self, capsys):
        assert run(["witness", "e", "19/7"]) == 0
        out = capsys.readouterr().out
        assert "M = " in out and "-20" in out
        assert "CONTRADICTION" in out

    def test_e_json_roundtrip(self, capsys):
        assert run(["witness", "e", "19/7", "--json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["M"] == "-20"
        assert payload["verdict"] == "CONTRADICTION"
        report = e_witness(19, 7)
        assert payload == e_witness_report_dict(report)
        iv = parse_interval_dict(payload["tail_enclosure"])
        assert iv == report.tail_enclosure

    def test_pi2_json(self, capsys):
        assert run(["witness", "pi2", "1/1", "--json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["n"] == "3"
        assert payload["verdict"] == "CONTRADICTION"
        assert int(payload["N"]) == pi_witness(1, 1).N
        # round-trip through the parsers
        report = pi_witness(1, 1)
        assert payload == pi_witness_report_dict(report)

    def test_text_json_consistency(self, capsys):
        run(["witness", "e", "3/1"])
        text = capsys.readouterr().out
        run(["witness", "e", "3/1", "--json"])
        payload = json.loads(capsys.readouterr().out)
        assert f"M = n!·a/b - sum(n!/k!) = {payload['M']}" in text
        assert payload["verdict"] in text

    def test_sqrt(self, capsys):
        assert run(["witness", "sqrt", "2"]) == 0
        assert "irrational" in capsys.readouterr().out
        assert run(["witness", "sqrt", "144"]) == 0
        assert "= 12" in capsys.readouterr().out

    def test_invalid_candidate(self, capsys):
        assert run(["witness", "e", "0/3"]) == 1
        assert run(["witness", "pi2", "1.5"]) == 1

    def test_invalid_override(self, capsys):
        assert run(["witness", "pi2", "10/1", "--n", "5"]) == 1


class TestOtherCommands:
    def test_archimedes_table(self, capsys):
        assert run(["archimedes", "--doublings", "4"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert len(lines) == 6  # header + doublings 0..4
        assert "96" in lines[-1]

    def test_pascal(self, capsys):
        assert run(["pascal", "--rows", "5"]) == 0
        rows = capsys.readouterr().out.strip().splitlines()
        assert rows[-1].split() == ["1", "5", "10", "10", "5", "1"]

    def test_cf_pi(self, capsys):
        assert run(["cf", "pi", "--depth", "5"]) == 0
        out = capsys.readouterr().out
        assert "[3, 7, 15, 1, 292]" in out
        assert "355/113" in out

    def test_cf_e(self, capsys):
        assert run(["cf", "e", "--depth", "8"]) == 0
        assert "[2, 1, 2, 1, 1, 4, 1, 1]" in capsys.readouterr().out

    def test_check_identities(self, capsys):
        assert run(["check", "identities", "--max-n", "3"]) == 0
        out = capsys.readouterr().out
        assert out.count("pass") == 3

    def test_check_squeeze(self, capsys):
        assert run(["check", "squeeze", "--h", "1/2"]) == 0
        assert "certified" in capsys.readouterr().out

    def test_unknown_command(self, capsys):
        assert run(["frobnicate"]) == 1

    def test_bad_flag_value(self, capsys):
        assert run(["pascal", "--rows", "-3"]) == 1
