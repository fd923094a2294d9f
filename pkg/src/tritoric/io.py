"""Text formats: the canonical complex file, JSON, and facets-only exports.

Canonical format::

    dim <d> vertices <v> facets <f>
    v <index> <label>
    s <i> <j> ...

Vertex labels are opaque strings, sorted lexicographically; facet lines
reference vertex indices and are sorted as index tuples.  Lines starting
with ``#`` are comments and are ignored on input.  Canonical output
carries no comments, so export(import(f)) is byte-identical for canonical
files.
"""

from __future__ import annotations

import json
from typing import Callable

from .assembly import parse_label as parse_assembled_label
from .assembly import render_label as render_assembled_label
from .complexes import SimplicialComplex, make_complex

CENTER_CHAR = "c"


class FileFormatError(ValueError):
    """Malformed complex, polytope, or characteristic file."""


# -- label rendering -------------------------------------------------------


def render_vertex(v) -> str:
    """Canonical string for any vertex kind used by the builders.

    Assembled labels render as ``f<facets>|<digits>``, grid/torus/block mark
    tuples as ``t<marks>`` with ``c`` for a cone apex, plain integers as
    decimals.
    """
    if isinstance(v, tuple) and len(v) == 2 and isinstance(v[0], tuple) \
            and isinstance(v[1], tuple):
        return render_assembled_label(v)
    if isinstance(v, tuple):
        return "t" + "".join(CENTER_CHAR if x == 9 else str(x) for x in v)
    return str(v)


def parse_vertex(text: str):
    """Inverse of render_vertex for the schemas the builders emit."""
    if text.startswith("f") and "|" in text:
        return parse_assembled_label(text)
    if text.startswith("t") and len(text) > 1 \
            and all(ch in "0123c" for ch in text[1:]):
        return tuple(9 if ch == CENTER_CHAR else int(ch) for ch in text[1:])
    try:
        return int(text)
    except ValueError:
        raise FileFormatError(f"unrecognized vertex label {text!r}")


# -- canonical complex files -------------------------------------------------


def complex_to_text(K: SimplicialComplex,
                    render: Callable = render_vertex) -> str:
    labels = sorted(render(v) for v in K.vertices)
    if len(set(labels)) != len(labels):
        raise FileFormatError("vertex labels collide under rendering")
    index = {lab: i for i, lab in enumerate(labels)}
    facet_rows = sorted(
        tuple(sorted(index[render(v)] for v in f)) for f in K.facets)
    lines = [f"dim {K.dim} vertices {len(labels)} facets {len(facet_rows)}"]
    for i, lab in enumerate(labels):
        lines.append(f"v {i} {lab}")
    for row in facet_rows:
        lines.append("s " + " ".join(map(str, row)))
    return "\n".join(lines) + "\n"


def text_to_complex(text: str, parse: Callable = parse_vertex
                    ) -> tuple[SimplicialComplex, list[str]]:
    """Parse a complex file; returns the complex and the label strings by index."""
    header = None
    labels: dict[int, str] = {}
    facets: list[tuple] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "dim":
            if header is not None:
                raise FileFormatError(f"line {lineno}: duplicate header")
            try:
                header = (int(parts[1]), int(parts[3]), int(parts[5]))
                if parts[2] != "vertices" or parts[4] != "facets":
                    raise IndexError
            except (IndexError, ValueError):
                raise FileFormatError(f"line {lineno}: bad header {line!r}")
        elif parts[0] == "v":
            try:
                idx = int(parts[1])
                lab = parts[2]
            except (IndexError, ValueError):
                raise FileFormatError(f"line {lineno}: bad vertex line {line!r}")
            if idx in labels:
                raise FileFormatError(f"line {lineno}: repeated vertex index {idx}")
            labels[idx] = lab
        elif parts[0] == "s":
            try:
                facets.append(tuple(int(x) for x in parts[1:]))
            except ValueError:
                raise FileFormatError(f"line {lineno}: bad facet line {line!r}")
        else:
            raise FileFormatError(f"line {lineno}: unknown record {parts[0]!r}")
    if header is None:
        raise FileFormatError("missing header line")
    d, nv, nf = header
    if sorted(labels) != list(range(nv)):
        raise FileFormatError("vertex indices are not dense from 0")
    if len(facets) != nf:
        raise FileFormatError(f"facet count {len(facets)} != header {nf}")
    verts = {i: parse(lab) for i, lab in labels.items()}
    if len(set(verts.values())) != nv:
        raise FileFormatError("labels parse to colliding vertices")
    try:
        K = make_complex([[verts[i] for i in f] for f in facets])
    except KeyError as e:
        raise FileFormatError(f"facet references undeclared vertex {e}")
    if K.dim != d:
        raise FileFormatError(f"dimension {K.dim} != header {d}")
    return K, [labels[i] for i in range(nv)]


# -- other export formats ------------------------------------------------------


def complex_to_json(K: SimplicialComplex) -> str:
    labels = sorted(render_vertex(v) for v in K.vertices)
    index = {lab: i for i, lab in enumerate(labels)}
    facet_rows = sorted(
        tuple(sorted(index[render_vertex(v)] for v in f)) for f in K.facets)
    return json.dumps(
        {"vertices": labels, "facets": [list(r) for r in facet_rows]},
        indent=None, separators=(",", ":")) + "\n"


def complex_to_facet_lines(K: SimplicialComplex) -> str:
    rows = sorted(tuple(sorted(render_vertex(v) for v in f)) for f in K.facets)
    return "\n".join(" ".join(r) for r in rows) + "\n"


# -- polytope and characteristic files -----------------------------------------


def parse_polytope_file(text: str):
    """Header ``n m`` then one line of 0-based facet indices per vertex."""
    from .polytopes import SimplePolytope

    rows: list[list[int]] = []
    header = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 2:
                raise FileFormatError(f"line {lineno}: header must be 'n m'")
            try:
                header = (int(parts[0]), int(parts[1]))
            except ValueError:
                raise FileFormatError(f"line {lineno}: bad header {line!r}")
        else:
            try:
                rows.append([int(x) for x in parts])
            except ValueError:
                raise FileFormatError(f"line {lineno}: bad incidence {line!r}")
    if header is None:
        raise FileFormatError("empty polytope file")
    n, m = header
    for r in rows:
        if any(not 0 <= f < m for f in r):
            raise FileFormatError("facet index out of range")
    return SimplePolytope(rows, n, m=m)


def parse_characteristic_file(text: str, m: int, n: int) -> list[int]:
    """One line per facet: ``<facet-index> <symbol>`` with symbol ``e0..en``
    or a bare integer 0..n."""
    out: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise FileFormatError(f"line {lineno}: expected 'facet symbol'")
        try:
            facet = int(parts[0])
        except ValueError:
            raise FileFormatError(f"line {lineno}: bad facet index {parts[0]!r}")
        sym = parts[1]
        if sym.startswith("e"):
            sym = sym[1:]
        try:
            symbol = int(sym)
        except ValueError:
            raise FileFormatError(f"line {lineno}: bad symbol {parts[1]!r}")
        if not 0 <= symbol <= n:
            raise FileFormatError(f"line {lineno}: symbol out of range 0..{n}")
        if facet in out:
            raise FileFormatError(f"line {lineno}: facet {facet} assigned twice")
        out[facet] = symbol
    if sorted(out) != list(range(m)):
        raise FileFormatError(f"need one symbol for each of the {m} facets")
    return [out[i] for i in range(m)]
