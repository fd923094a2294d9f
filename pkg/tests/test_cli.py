"""Command line interface: subcommands, exit codes, determinism."""

from tritoric.cli import main

SQUARE_POLY = "2 4\n3 0\n0 1\n1 2\n2 3\n"
SQUARE_CHAR = "0 e1\n1 e2\n2 e1\n3 e2\n"


def run(argv):
    return main(argv)


def test_build_torus(tmp_path, capsys):
    out = tmp_path / "t2.txt"
    assert run(["build", "torus", "2", "--out", str(out), "--quiet"]) == 0
    text = out.read_text()
    assert text.startswith("dim 2 vertices 9 facets 18")


def test_build_cube(tmp_path):
    out = tmp_path / "c2.txt"
    assert run(["build", "cube", "2", "--out", str(out), "--quiet"]) == 0
    assert "vertices 16" in out.read_text().splitlines()[0]


def test_build_cpn_and_verify(tmp_path, capsys):
    out = tmp_path / "cpn1.txt"
    assert run(["build", "cpn", "1", "--out", str(out), "--quiet"]) == 0
    assert "vertices 5 facets 6" in out.read_text().splitlines()[0]
    assert run(["verify", str(out)]) == 0
    report = capsys.readouterr().out
    assert "overall        pass" in report
    assert "equivariance" in report


def test_build_block(tmp_path):
    out = tmp_path / "b.txt"
    assert run(["build", "block", "cz", "--out", str(out), "--quiet"]) == 0
    head = out.read_text().splitlines()[0]
    assert "vertices 16" in head  # two disk factors


def test_build_toric_from_files(tmp_path, capsys):
    poly = tmp_path / "sq.poly"
    char = tmp_path / "sq.char"
    poly.write_text(SQUARE_POLY)
    char.write_text(SQUARE_CHAR)
    out = tmp_path / "s2s2.txt"
    assert run(["build", "toric", str(poly), str(char),
                "--out", str(out), "--quiet"]) == 0
    assert "vertices 25" in out.read_text().splitlines()[0]
    assert run(["homology", str(out), "--quiet"]) == 0
    table = capsys.readouterr().out
    assert "2      2" in table  # b_2 = 2


def test_exit_code_2_on_bad_params(capsys):
    assert run(["build", "cpn", "0"]) == 2
    assert run(["build", "cpn", "potato"]) == 2
    assert run(["build", "toric", "/nonexistent", "/nope"]) == 2


def test_exit_code_2_on_bad_block_spec(capsys):
    assert run(["build", "block", "zz"]) == 2  # two diagonal disks
    assert run(["build", "block", "xyz"]) == 2


def test_exit_code_2_on_parse_error(tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("not a complex file\n")
    assert run(["verify", str(bad)]) == 2
    assert run(["homology", str(bad)]) == 2
    assert run(["export", str(bad)]) == 2


def test_exit_code_1_on_failed_check(tmp_path, capsys):
    out = tmp_path / "t2.txt"
    run(["build", "torus", "2", "--out", str(out), "--quiet"])
    lines = out.read_text().splitlines()
    # drop one facet: the complex stops being a closed pseudomanifold
    kept = [ln for ln in lines if not ln.startswith("s ")] + \
        [ln for ln in lines if ln.startswith("s ")][:-1]
    head = kept[0].split()
    head[-1] = str(int(head[-1]) - 1)
    kept[0] = " ".join(head)
    broken = tmp_path / "broken.txt"
    broken.write_text("\n".join(kept) + "\n")
    assert run(["verify", str(broken), "--checks", "pseudomanifold"]) == 1
    report = capsys.readouterr().out
    assert "FAIL" in report


def test_verify_unknown_check(tmp_path):
    out = tmp_path / "t1.txt"
    run(["build", "torus", "1", "--out", str(out), "--quiet"])
    assert run(["verify", str(out), "--checks", "bogus"]) == 2


def test_verify_json(tmp_path, capsys):
    out = tmp_path / "t1.txt"
    run(["build", "torus", "1", "--out", str(out), "--quiet"])
    assert run(["verify", str(out), "--json"]) == 0
    assert '"passed": true' in capsys.readouterr().out


def test_determinism_and_roundtrip(tmp_path):
    a = tmp_path / "a.txt"
    b = tmp_path / "b.txt"
    run(["build", "cpn", "2", "--out", str(a), "--quiet"])
    run(["build", "cpn", "2", "--out", str(b), "--quiet"])
    assert a.read_text() == b.read_text()
    c = tmp_path / "c.txt"
    run(["export", str(a), "--out", str(c), "--quiet"])
    assert a.read_text() == c.read_text()


def test_export_formats(tmp_path, capsys):
    src = tmp_path / "t1.txt"
    run(["build", "torus", "1", "--out", str(src), "--quiet"])
    assert run(["export", str(src), "--format", "json", "--quiet"]) == 0
    js = capsys.readouterr().out
    assert js.startswith("{")
    assert run(["export", str(src), "--format", "facets-only", "--quiet"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 3


def test_max_n_override(tmp_path):
    out = tmp_path / "t4.txt"
    assert run(["build", "torus", "4", "--out", str(out), "--quiet"]) == 0
    assert run(["build", "torus", "7"]) == 2


def test_verify_torus3_equivariance_reports_27(tmp_path, capsys):
    out = tmp_path / "t3.txt"
    run(["build", "torus", "3", "--out", str(out), "--quiet"])
    assert run(["verify", str(out), "--checks", "equivariance"]) == 0
    assert "group_elements=27" in capsys.readouterr().out
