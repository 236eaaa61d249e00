"""The command-line workbench: grammars, formats, exit codes, determinism."""

import json

import pytest

from wordorbits.cli import (main, parse_structured_factors,
                            parse_structured_orbits, parse_structured_witness)
from wordorbits.complexity import orbit_classes
from wordorbits.construct import build_isomorphic_witness
from wordorbits.perm import PermGroup, normalize_spec, parse_cycles
from wordorbits.words import factors, fibonacci


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


# --- happy paths ------------------------------------------------------------------

def test_factors_verb(capsys):
    code, out = run_cli(capsys, "factors", "--word", "fib", "--n", "4")
    assert code == 0
    body = [line for line in out.splitlines() if not line.startswith("#")]
    assert body == ["n: 4", "count: 5", "0010", "0100", "0101", "1001", "1010"]


def test_orbits_verb(capsys):
    code, out = run_cli(capsys, "orbits", "--word", "fib", "--n", "4",
                        "--group", "(1,2,3,4)")
    assert code == 0
    assert "class 1: 0010 0100" in out
    assert "class 3: 1001" in out
    assert "abelian-transitive: false" in out


def test_epsilon_verb(capsys):
    code, out = run_cli(capsys, "epsilon", "--group", "(1,2);(3,4)", "--n", "4")
    assert code == 0
    assert "epsilon: 2" in out
    assert "orbit 1: 1 2" in out


def test_verify_verb_recovers_factor_counts(capsys):
    code, out = run_cli(capsys, "verify-theorem1", "--word", "fib",
                        "--groups", "id", "--n", "1..20")
    assert code == 0
    assert "verdict: pass" in out
    assert "sturmian-consistent: true" in out


def test_complexity_table_on_periodic_source(capsys):
    code, out = run_cli(capsys, "complexity-table", "--word", "periodic:01",
                        "--groups", "id", "--n", "1..3")
    assert code == 0
    assert "verdict: tabulated" in out


def test_witness_verb(capsys):
    code, out = run_cli(capsys, "witness", "--word", "fib", "--n", "4",
                        "--abelian", "Z4")
    assert code == 0
    assert "passed: true" in out


def test_conjugate_witness_verb(capsys):
    code, out = run_cli(capsys, "conjugate-witness", "--word", "fib",
                        "--n", "7", "--sigma", "(1,2,3,4,5)")
    assert code == 0
    assert "classes: 4" in out
    assert "passed: true" in out


def test_christoffel_verb_positional_and_flag(capsys):
    code, out = run_cli(capsys, "christoffel", "010010")
    assert code == 0
    code2, out2 = run_cli(capsys, "christoffel", "--w", "010010")
    assert code2 == 0
    assert [l for l in out.splitlines() if not l.startswith("#")] == \
        [l for l in out2.splitlines() if not l.startswith("#")]


def test_scan_verb(capsys):
    code, out = run_cli(capsys, "scan-conjugates", "--word", "fib", "--n", "6",
                        "--group", "(1,2,3)(4,5,6)")
    assert code == 0
    assert "min-classes: 4" in out


def test_fine_wilf_verb(capsys):
    code, out = run_cli(capsys, "fine-wilf", "--word", "fib", "--m", "4")
    assert code == 0
    assert "a: 1" in out and "b: 1" in out and "c: 2" in out


# --- exit codes --------------------------------------------------------------------

def test_unknown_verb_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_unknown_flag_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["factors", "--word", "fib", "--n", "4", "--wat"])
    assert exc.value.code == 2


def test_bad_word_spec_exits_2(capsys):
    assert main(["factors", "--word", "nope:x", "--n", "4"]) == 2


def test_bad_group_spec_exits_2(capsys):
    assert main(["orbits", "--word", "fib", "--n", "4", "--group", "wat"]) == 2


def test_scan_guard_exits_2(capsys):
    assert main(["scan-conjugates", "--word", "fib", "--n", "12",
                 "--group", "id"]) == 2


def test_verify_inapplicable_exits_2(capsys):
    assert main(["verify-theorem1", "--word", "periodic:01",
                 "--groups", "id", "--n", "1..3"]) == 2


def test_non_primitive_christoffel_exits_2(capsys):
    assert main(["christoffel", "10"]) == 2


def test_trace_violation_exits_2(capsys):
    assert main(["witness", "--word", "fib", "--n", "3",
                 "--abelian", "Z2xZ2"]) == 2


def test_falsified_verification_exits_1(capsys, monkeypatch):
    # no honest input falsifies the bound, so force the fail paths directly
    import wordorbits.cli as cli_mod
    from wordorbits.complexity import ComplexityRow, ComplexityTable

    bad_table = ComplexityTable("stub", (ComplexityRow(2, "id", 2, 1),),
                                "fail", failure_n=2)
    monkeypatch.setattr(cli_mod, "verify_complexity_bound",
                        lambda *a, **k: bad_table)
    assert main(["verify-theorem1", "--word", "fib", "--groups", "id",
                 "--n", "2"]) == 1

    real_build = cli_mod.build_isomorphic_witness
    def unhappy(*a, **k):
        report = real_build(*a, **k)
        object.__setattr__(report, "passed", False)
        return report
    monkeypatch.setattr(cli_mod, "build_isomorphic_witness", unhappy)
    assert main(["witness", "--word", "fib", "--n", "4",
                 "--abelian", "Z4"]) == 1


def test_abc_rule_degree_restriction(capsys):
    assert main(["verify-theorem1", "--word", "fib", "--groups", "abc:1,1,2",
                 "--n", "4..4"]) == 0
    assert main(["verify-theorem1", "--word", "fib", "--groups", "abc:1,1,2",
                 "--n", "4..5"]) == 2


def test_group_file_rule(tmp_path, capsys):
    path = tmp_path / "groups.txt"
    path.write_text("# degree  generators\n4 (1,3,2,4)\n5 (1,3,5,2,4)\n")
    code, out = run_cli(capsys, "verify-theorem1", "--word", "fib",
                        "--groups", f"file:{path}", "--n", "4..5")
    assert code == 0
    assert "sturmian-consistent: true" in out
    assert main(["verify-theorem1", "--word", "fib",
                 "--groups", f"file:{path}", "--n", "4..6"]) == 2


# --- determinism --------------------------------------------------------------------

@pytest.mark.parametrize("argv", [
    ("factors", "--word", "fib", "--n", "6"),
    ("factors", "--word", "fib", "--n", "6", "--format", "csv"),
    ("orbits", "--word", "tm", "--n", "5", "--group", "cyc",
     "--format", "structured"),
    ("verify-theorem1", "--word", "fib", "--groups", "sym", "--n", "1..6"),
    ("christoffel", "010010"),
    ("witness", "--word", "fib", "--n", "6", "--abelian", "Z3",
     "--format", "structured"),
])
def test_repeated_runs_are_byte_identical(capsys, argv):
    _, first = run_cli(capsys, *argv)
    _, second = run_cli(capsys, *argv)
    assert first == second


def test_csv_needs_no_quoting(capsys):
    for argv in (
        ("scan-conjugates", "--word", "fib", "--n", "6",
         "--group", "(1,2,3)(4,5,6)", "--format", "csv"),
        ("witness", "--word", "fib", "--n", "6", "--abelian", "Z2xZ2",
         "--format", "csv"),
        ("verify-theorem1", "--word", "fib", "--groups", "cyc", "--n", "1..6",
         "--format", "csv"),
    ):
        _, out = run_cli(capsys, *argv)
        rows = [line for line in out.splitlines() if not line.startswith("#")]
        width = len(rows[0].split(","))
        assert all('"' not in row and len(row.split(",")) == width
                   for row in rows)


# --- structured round trips ------------------------------------------------------------

def test_factors_round_trip(capsys):
    _, out = run_cli(capsys, "factors", "--word", "fib", "--n", "4",
                     "--format", "structured")
    assert parse_structured_factors(out) == factors(fibonacci(), 4)


def test_orbits_round_trip(capsys):
    _, out = run_cli(capsys, "orbits", "--word", "fib", "--n", "4",
                     "--group", "(1,3,2,4)", "--format", "structured")
    expected = orbit_classes(factors(fibonacci(), 4),
                             PermGroup((parse_cycles("(1,3,2,4)"),)))
    assert parse_structured_orbits(out) == expected


def test_witness_round_trip(capsys):
    _, out = run_cli(capsys, "witness", "--word", "fib", "--n", "4",
                     "--abelian", "Z2", "--format", "structured")
    expected = build_isomorphic_witness(fibonacci(), 4, normalize_spec([2]))
    assert parse_structured_witness(out) == expected


def test_structured_is_versioned_json(capsys):
    _, out = run_cli(capsys, "fine-wilf", "--word", "fib", "--m", "8",
                     "--format", "structured")
    data = json.loads(out)
    assert data["format"] == "wordorbits/1"
    assert data["version"]
    assert data["command"] == "fine-wilf --word fib --m 8 --format structured"
