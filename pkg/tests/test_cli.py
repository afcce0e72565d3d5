import pytest

from hollowlat.cli import (
    ParseError,
    ValidationError,
    emit_dot,
    emit_lattice_spec,
    emit_module_spec,
    main,
    parse_spec,
)
from hollowlat.modules import FiniteModule, submodule_lattice

Z12 = "ring 12\nmodule 12\n"
Z30 = "ring 30\nmodule 30\n"
KLEIN = "ring 2\nmodule 2 2\n"

CHAIN_SPEC = """\
lattice 2
leq 0 1
poset 1
act 0 0 0
act 0 1 1
"""


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return str(path)


class TestParsing:
    def test_module_spec(self, tmp_path):
        parsed = parse_spec(write(tmp_path, "m.spec", Z12))
        assert isinstance(parsed, FiniteModule)
        assert parsed.ring.n == 12 and parsed.factors == (12,)

    def test_direct_sum_spec(self, tmp_path):
        parsed = parse_spec(write(tmp_path, "m.spec", KLEIN))
        assert parsed.factors == (2, 2)

    def test_bad_factor_rejected(self, tmp_path):
        with pytest.raises(ValidationError):
            parse_spec(write(tmp_path, "m.spec", "ring 12\nmodule 5\n"))

    def test_unknown_directive(self, tmp_path):
        with pytest.raises(ParseError) as err:
            parse_spec(write(tmp_path, "m.spec", "ring 12\nmodle 12\n"))
        assert err.value.line == 2

    def test_lattice_spec(self, tmp_path):
        lattice, action = parse_spec(write(tmp_path, "l.spec", CHAIN_SPEC))
        assert lattice.size == 2 and action.poset.size == 1

    def test_missing_act_entry(self, tmp_path):
        broken = "lattice 2\nleq 0 1\nposet 1\nact 0 0 0\n"
        with pytest.raises(ParseError) as err:
            parse_spec(write(tmp_path, "l.spec", broken))
        assert "act 0 1" in str(err.value)

    def test_duplicate_act_entry(self, tmp_path):
        broken = CHAIN_SPEC + "act 0 1 0\n"
        with pytest.raises(ParseError):
            parse_spec(write(tmp_path, "l.spec", broken))

    def test_action_axiom_violation(self, tmp_path):
        # s.0 = 1 is not deflationary
        broken = "lattice 2\nleq 0 1\nposet 1\nact 0 0 1\nact 0 1 1\n"
        with pytest.raises(ValidationError):
            parse_spec(write(tmp_path, "l.spec", broken))

    def test_order_cycle_rejected(self, tmp_path):
        broken = "lattice 2\nleq 0 1\nleq 1 0\nposet 1\nact 0 0 0\nact 0 1 1\n"
        with pytest.raises(ValidationError):
            parse_spec(write(tmp_path, "l.spec", broken))

    def test_comments_and_blanks_ignored(self, tmp_path):
        text = "# a module\n\nring 12  # modulus\nmodule 12\n"
        assert parse_spec(write(tmp_path, "m.spec", text)).ring.n == 12

    def test_missing_file(self):
        with pytest.raises(ParseError):
            parse_spec("/nonexistent/path.spec")


class TestRoundTrip:
    def test_module_round_trip(self, tmp_path):
        module = parse_spec(write(tmp_path, "m.spec", KLEIN))
        again = parse_spec(write(tmp_path, "m2.spec", emit_module_spec(module)))
        assert again.ring.n == module.ring.n and again.factors == module.factors

    def test_lattice_round_trip(self, tmp_path):
        module = parse_spec(write(tmp_path, "m.spec", Z12))
        lat, act = submodule_lattice(module)
        text = emit_lattice_spec(act)
        lat2, act2 = parse_spec(write(tmp_path, "l.spec", text))
        assert lat2.up == lat.up and lat2.bottom == lat.bottom
        assert act2.table == act.table and act2.poset.up == act.poset.up


class TestDot:
    def test_two_chain(self):
        from hollowlat.lattice import chain
        dot = emit_dot(chain(2), ["0", "1"])
        assert dot == (
            "digraph hasse {\n"
            "  rankdir=BT;\n"
            "  node [shape=box];\n"
            '  n0 [label="0"];\n'
            '  n1 [label="1"];\n'
            "  n0 -> n1;\n"
            "}\n"
        )

    def test_z12_hasse_has_divisor_edges(self, tmp_path):
        from hollowlat.modules import enumerate_submodules
        module = parse_spec(write(tmp_path, "m.spec", Z12))
        lat, _ = submodule_lattice(module)
        dot = emit_dot(lat, [s.name for s in enumerate_submodules(module)])
        assert dot.count("->") == 7  # covering pairs of the divisor lattice of 12

    def test_highlight_marks_second_spectrum(self, tmp_path, capsys):
        spec = write(tmp_path, "m.spec", Z12)
        assert main(["hasse", "--in", spec, "--highlight", "second"]) == 0
        out = capsys.readouterr().out
        assert 'n1 [label="(6)", tooltip="second"' in out
        assert 'n2 [label="(4)", tooltip="second"' in out
        assert 'n3 [label="(3)"];' in out


class TestExitCodes:
    def test_pass_case(self, tmp_path, capsys):
        spec = write(tmp_path, "m.spec", Z30)
        assert main(["verify", "--in", spec]) == 0
        out = capsys.readouterr().out
        assert "FAIL" not in out and "SKIP" not in out

    def test_fail_witness_case(self, tmp_path, capsys):
        spec = write(tmp_path, "m.spec", Z12)
        assert main(["represent", "--in", spec, "--expect", "(2),(6)"]) == 1
        assert "FAIL" in capsys.readouterr().out

    def test_hypothesis_unmet_case(self, tmp_path, capsys):
        spec = write(tmp_path, "m.spec", Z12)
        code = main(["verify", "--in", spec, "--claim", "semisimple_equivalences"])
        assert code == 2
        assert "SKIP" in capsys.readouterr().out

    def test_parse_error_case(self, tmp_path, capsys):
        spec = write(tmp_path, "m.spec", "ring 12\nmodule 7\n")
        assert main(["submodules", "--in", spec]) == 3
        assert "error:" in capsys.readouterr().err

    def test_lattice_command_mismatch(self, tmp_path):
        spec = write(tmp_path, "l.spec", CHAIN_SPEC)
        assert main(["pshollow", "--in", spec]) == 3


class TestReports:
    def test_machine_report_deterministic(self, tmp_path, capsys):
        spec = write(tmp_path, "m.spec", Z12)
        out1 = tmp_path / "r1.txt"
        out2 = tmp_path / "r2.txt"
        assert main(["verify", "--in", spec, "--report", str(out1)]) == 0
        assert main(["verify", "--in", spec, "--report", str(out2)]) == 0
        capsys.readouterr()
        assert out1.read_bytes() == out2.read_bytes()

    def test_machine_report_format(self, tmp_path, capsys):
        spec = write(tmp_path, "m.spec", Z12)
        out = tmp_path / "r.txt"
        assert main(["represent", "--in", spec, "--report", str(out)]) == 0
        capsys.readouterr()
        lines = out.read_text().splitlines()
        assert lines[0] == "hollowlat-report 1"
        assert lines[1] == "subject ring 12 module 12"
        assert all(line.split()[2] in ("pass", "fail", "hypothesis-unmet")
                   for line in lines if line.startswith("claim"))

    def test_spectra_command_lists_kinds(self, tmp_path, capsys):
        spec = write(tmp_path, "m.spec", Z12)
        assert main(["spectra", "--in", spec, "--kind", "second"]) == 0
        out = capsys.readouterr().out
        assert "spectrum.second  [(6) (4)]" in out

    def test_spectra_on_lattice_input(self, tmp_path, capsys):
        spec = write(tmp_path, "l.spec", CHAIN_SPEC)
        assert main(["spectra", "--in", spec]) == 0
        assert "spectrum.prime" in capsys.readouterr().out

    def test_submodules_command(self, tmp_path, capsys):
        spec = write(tmp_path, "m.spec", Z12)
        assert main(["submodules", "--in", spec]) == 0
        out = capsys.readouterr().out
        assert "submodules.count  [6]" in out

    def test_minimize_command(self, tmp_path, capsys):
        spec = write(tmp_path, "m.spec", Z12)
        assert main(["minimize", "--in", spec, "--summands", "(3),(4),(6)"]) == 0
        out = capsys.readouterr().out
        assert "minimize.result  [(4)+(3)]" in out

    def test_minimize_rejects_bad_summands(self, tmp_path, capsys):
        spec = write(tmp_path, "m.spec", Z12)
        assert main(["minimize", "--in", spec, "--summands", "(4),(6)"]) == 3

    def test_bound_flag_enforced(self, tmp_path, capsys):
        spec = write(tmp_path, "m.spec", Z30)
        assert main(["submodules", "--in", spec, "--bound", "10"]) == 3

    def test_bound_env_enforced(self, tmp_path, capsys, monkeypatch):
        monkeypatch.setenv("HOLLOWLAT_BOUND", "10")
        spec = write(tmp_path, "m.spec", Z30)
        assert main(["submodules", "--in", spec]) == 3
        monkeypatch.setenv("HOLLOWLAT_BOUND", "64")
        assert main(["submodules", "--in", spec]) == 0
