"""File formats: canonical complex files, JSON, polytope and symbol files."""

import pytest

from tritoric.assembly import assemble_cpn
from tritoric.blocks import b_spec, build_block
from tritoric.io import (
    FileFormatError,
    complex_to_facet_lines,
    complex_to_json,
    complex_to_text,
    parse_characteristic_file,
    parse_polytope_file,
    parse_vertex,
    render_vertex,
    text_to_complex,
)
from tritoric.torus import torus_complex


def test_roundtrip_torus():
    K = torus_complex(2)
    text = complex_to_text(K)
    K2, labels = text_to_complex(text)
    assert K2 == K
    assert complex_to_text(K2) == text


def test_roundtrip_assembled():
    K = assemble_cpn(2).complex
    text = complex_to_text(K)
    K2, _ = text_to_complex(text)
    assert K2 == K
    assert complex_to_text(K2) == text


def test_roundtrip_block_marks():
    K = build_block(b_spec(2, 1), validate=False)
    text = complex_to_text(K)
    K2, _ = text_to_complex(text)
    assert K2 == K


def test_render_parse_vertex_kinds():
    assert render_vertex((0, 2, 1)) == "t021"
    assert parse_vertex("t021") == (0, 2, 1)
    assert render_vertex((0, 9)) == "t0c"
    assert parse_vertex("t0c") == (0, 9)
    assert render_vertex(((1,), (2, 0))) == "f1|20"
    assert parse_vertex("f1|20") == ((1,), (2, 0))
    assert parse_vertex("17") == 17
    assert render_vertex(9) == "9"
    assert parse_vertex("9") == 9
    with pytest.raises(FileFormatError):
        parse_vertex("z$!")


def test_comments_and_blank_lines_ignored():
    K = torus_complex(1)
    text = "# a comment\n\n" + complex_to_text(K) + "# trailing\n"
    K2, _ = text_to_complex(text)
    assert K2 == K


def test_parse_errors():
    with pytest.raises(FileFormatError):
        text_to_complex("")  # no header
    with pytest.raises(FileFormatError):
        text_to_complex("dim 1 vertices 2 facets 1\nv 0 a\nv 5 b\ns 0 5\n")
    with pytest.raises(FileFormatError):
        text_to_complex("dim 1 vertices 2 facets 2\nv 0 0\nv 1 1\ns 0 1\n")
    with pytest.raises(FileFormatError):
        text_to_complex("dim 2 vertices 2 facets 1\nv 0 0\nv 1 1\ns 0 1\n")
    with pytest.raises(FileFormatError):
        text_to_complex("junk\n")


def test_json_and_facet_lines():
    K = torus_complex(1)
    js = complex_to_json(K)
    assert '"vertices":["t0","t1","t2"]' in js
    lines = complex_to_facet_lines(K).strip().splitlines()
    assert len(lines) == 3


def test_polytope_file_roundtrip():
    text = "# square\n2 4\n3 0\n0 1\n1 2\n2 3\n"
    Q = parse_polytope_file(text)
    assert Q.n == 2
    assert Q.m == 4
    assert Q.n_vertices == 4


def test_polytope_file_errors():
    with pytest.raises(FileFormatError):
        parse_polytope_file("")
    with pytest.raises(FileFormatError):
        parse_polytope_file("2\n0 1\n")
    with pytest.raises(FileFormatError):
        parse_polytope_file("2 2\n0 5\n")


def test_characteristic_file():
    text = "0 e1\n1 e2\n2 e1\n3 e2\n"
    assert parse_characteristic_file(text, 4, 2) == [1, 2, 1, 2]
    assert parse_characteristic_file("0 0\n1 1\n", 2, 1) == [0, 1]
    with pytest.raises(FileFormatError):
        parse_characteristic_file("0 e1\n", 2, 2)  # missing facet
    with pytest.raises(FileFormatError):
        parse_characteristic_file("0 e1\n0 e2\n", 2, 2)  # repeated facet
    with pytest.raises(FileFormatError):
        parse_characteristic_file("0 e9\n1 e1\n", 2, 2)  # symbol range
