import json

import pytest

from coxembed.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture
def m4_file(tmp_path):
    path = tmp_path / "m2x2_4.txt"
    path.write_text("1,4\n4,1\n")
    return str(path)


@pytest.fixture
def m3_file(tmp_path):
    path = tmp_path / "m2x2_3.txt"
    path.write_text("1,3\n3,1\n")
    return str(path)


def test_order_dihedral(capsys):
    code, out, _ = run_cli(capsys, "order", "< s1,s2 | s1^2, s2^2, (s1 s2)^3 >")
    assert code == 0
    assert out == "6\n"


def test_order_budget_exceeded(capsys):
    code, out, _ = run_cli(capsys, "order", "< a, b | >", "--max-cosets", "100")
    assert code == 0
    assert out == "budget-exceeded\n"


def test_index(capsys, m4_file):
    code, out, _ = run_cli(
        capsys,
        "index",
        "< r1,r2,s1,s2 | r1^2, r2^2, s1^2, s2^2, (r1 r2)^2, (r1 s2)^2, (r2 s1)^2,"
        " (s1 s2)^4, (s1 r1)^2, (s2 r2)^2 >",
        "s1 r1",
        "s2 r2",
    )
    assert code == 0
    assert out == "4\n"


def test_build_coxeter(capsys, m3_file):
    code, out, _ = run_cli(capsys, "build", "coxeter", "--m", m3_file)
    assert code == 0
    assert out == "< s1, s2 | s1^2, s2^2, s1 s2 s1 s2 s1 s2 >\n"


def test_build_pc(capsys, tmp_path):
    nfile = tmp_path / "n.txt"
    nfile.write_text("1,2\n2,1\n")
    code, out, _ = run_cli(capsys, "build", "pc", "--m", str(nfile), "--p", "2,2")
    assert code == 0
    assert "g1 g2 g1^-1 g2^-1 g1 g2 g1^-1 g2^-1" in out


def test_kernel_klein_evaluated(capsys):
    code, out, _ = run_cli(capsys, "kernel", "klein")
    assert code == 0
    assert "presentation: < a, b | a b^-1 a^-1 b^-1 >" in out
    assert "a = s1 r1 r2" in out
    assert "b = s2 r2" in out


def test_kernel_both_modes(capsys, m4_file):
    code, out, _ = run_cli(capsys, "kernel", "thm1", "--m", m4_file, "--p", "2,2", "--mode", "both")
    assert code == 0
    assert "mode: evaluated" in out and "mode: raw" in out


def test_abelianization(capsys):
    code, out, _ = run_cli(capsys, "abelianization", "< a, b | a^-1 b a b >")
    assert code == 0
    assert out == "free rank 1, torsion (2)\n"


def test_match(capsys):
    code, out, _ = run_cli(
        capsys, "match", "< a, b | a^2, b^3 >", "< x, y | y^2, x^3 >"
    )
    assert code == 0
    assert out == "a -> y, b -> x\n"
    code, out, _ = run_cli(capsys, "match", "< a | a^2 >", "< a | a^3 >")
    assert code == 1
    assert out == "none\n"


def test_simplify(capsys):
    # the greedy eliminates the lowest-index candidate, leaving b
    code, out, _ = run_cli(capsys, "simplify", "< a, b | b a^-1 >")
    assert code == 0
    assert out == "< b | >\n"


def test_simplify_json_trace(capsys):
    code, out, _ = run_cli(
        capsys, "simplify", "< a, b | b a^-1 >", "--format", "json"
    )
    assert code == 0
    data = json.loads(out)
    assert data["presentation"] == "< b | >"
    assert ["eliminate", "a", "a b^-1", "b"] in data["trace"]["steps"]
    assert data["trace"]["defining"] == {"a": "b", "b": "b"}


def test_verify_thm1_json(capsys, m4_file):
    code, out, _ = run_cli(
        capsys, "verify", "thm1", "--m", m4_file, "--p", "2,2", "--format", "json"
    )
    assert code == 0
    data = json.loads(out)
    assert data["verdict"] == "pass"
    assert data["finite"]["ambient_order"] == 32
    assert list(data) == [
        "instance",
        "hom_valid",
        "image_rank",
        "transversal_size",
        "evaluated",
        "raw",
        "finite",
        "split_section",
        "verdict",
    ]


def test_verify_text_klein(capsys):
    code, out, _ = run_cli(capsys, "verify", "klein", "--max-cosets", "2000")
    assert code == 0
    assert "finite: skipped" in out
    assert out.rstrip().endswith("verdict: pass")


def test_verify_artin_label3_fails_honestly(capsys, m3_file):
    code, out, _ = run_cli(capsys, "verify", "artin", "--m", m3_file, "--max-cosets", "2000")
    assert code == 1
    assert "verdict: fail" in out


def test_embed_json(capsys, m4_file):
    code, out, _ = run_cli(
        capsys, "embed", "thm1", "--m", m4_file, "--p", "2,2", "--format", "json"
    )
    assert code == 0
    data = json.loads(out)
    assert data["family"] == "thm1"
    assert data["hom"] == {"r1": "10", "r2": "01", "s1": "10", "s2": "01"}
    assert data["expected_words"] == {"a1": "s1 r1", "a2": "s2 r2"}


def test_presentation_from_file(capsys, tmp_path):
    path = tmp_path / "pres.txt"
    path.write_text("< s | s^2 >\n")
    code, out, _ = run_cli(capsys, "order", f"@{path}")
    assert code == 0
    assert out == "2\n"


def test_parse_error_exit_code(capsys):
    code, _, err = run_cli(capsys, "order", "< a | b >")
    assert code == 2
    assert "error:" in err


def test_usage_error_exit_code(capsys):
    code, _, err = run_cli(capsys, "verify", "thm1")  # missing --m
    assert code == 2
    code2, _, _ = run_cli(capsys, "nonsense")
    assert code2 == 2


def test_out_flag_writes_file(capsys, tmp_path):
    target = tmp_path / "out.txt"
    code, out, _ = run_cli(capsys, "order", "< s | s^2 >", "--out", str(target))
    assert code == 0
    assert out == ""
    assert target.read_text() == "2\n"


def test_exit_code_matrix_over_families(capsys, m4_file, m3_file):
    # (argv, expected exit code)
    matrix = [
        (("verify", "thm1", "--m", m4_file, "--p", "2,2"), 0),
        (("verify", "prop2", "--m", m3_file, "--p", "2,2"), 0),
        (("verify", "prop2", "--m", m3_file, "--p", "4,4", "--max-cosets", "2000"), 0),
        (("verify", "klein", "--max-cosets", "2000"), 0),
        (("verify", "artin", "--m", m4_file, "--max-cosets", "2000"), 1),
        (("kernel", "prop2", "--m", m3_file, "--p", "4,4"), 0),
        (("embed", "artin", "--m", m3_file), 0),
        (("build", "artin", "--m", m3_file), 0),
        (("verify", "klein", "--m", m3_file), 2),
        (("verify", "thm1", "--m", m3_file, "--p", "2,2"), 2),  # odd label
        (("verify", "prop2", "--m", m3_file, "--p", "3,4"), 2),  # odd order
    ]
    for argv, expected in matrix:
        code = main(list(argv))
        capsys.readouterr()
        assert code == expected, argv


def test_module_entry_point():
    import subprocess
    import sys

    proc = subprocess.run(
        [sys.executable, "-m", "coxembed", "order", "< s | s^2 >"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "2\n"


def test_determinism_byte_identical(capsys, m4_file):
    runs = []
    for _ in range(2):
        _, out, _ = run_cli(
            capsys, "verify", "thm1", "--m", m4_file, "--p", "2,2", "--format", "json"
        )
        runs.append(out)
    assert runs[0] == runs[1]
    runs = []
    for _ in range(2):
        _, out, _ = run_cli(capsys, "kernel", "klein", "--format", "json")
        runs.append(out)
    assert runs[0] == runs[1]
