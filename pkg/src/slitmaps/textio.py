"""Plain-text block format for maps, paths, marked trees and covered maps.

One block per object, blocks separated by a blank line::

    darts 4
    sigma 2 3 1 0
    iota 1 0 3 2
    root 0
    faces 1

``faces`` (optional) lists the label of every face orbit, orbits ordered by
their smallest dart.  Extra optional lines: ``marks v1 v2`` (vertex indices,
vertices ordered by smallest dart), ``covering e1 e2 ...`` (edges named by
their smaller dart, sorted), ``path ...`` and ``loop ...`` (dart lists).
"""
from dataclasses import dataclass

from .core import build_map
from .errors import MapError, ParseError

_ORDER = ("darts", "sigma", "iota", "root")
_OPTIONAL = ("faces", "marks", "covering", "path", "loop")


@dataclass
class Block:
    map: object
    marks: tuple = None
    covering: tuple = None
    path: tuple = None
    loop: tuple = None
    first_line: int = 1


def _ints(parts, lineno):
    out = []
    col = len(parts[0]) + 2
    for tok in parts[1:]:
        if not tok.isdigit():
            raise ParseError(f"expected a nonnegative decimal integer, got {tok!r}", lineno, col)
        out.append(int(tok))
        col += len(tok) + 1
    return out


def _split_blocks(text):
    if text and not text.endswith("\n"):
        raise ParseError("input must be newline-terminated", text.count("\n") + 1, None)
    lines = text.split("\n")[:-1] if text else []
    blocks = []
    cur = []
    for i, line in enumerate(lines, start=1):
        if line == "":
            if cur:
                blocks.append(cur)
                cur = []
            continue
        if line != line.rstrip() or line != line.lstrip():
            col = len(line.rstrip()) + 1 if line != line.rstrip() else 1
            raise ParseError("leading or trailing whitespace", i, col)
        if "  " in line or "\t" in line:
            raise ParseError("fields must be separated by single spaces", i, line.find("  ") + 1)
        cur.append((i, line))
    if cur:
        blocks.append(cur)
    return blocks


def _parse_block(lines):
    fields = {}
    for pos, (lineno, line) in enumerate(lines):
        parts = line.split(" ")
        key = parts[0]
        if pos < len(_ORDER):
            if key != _ORDER[pos]:
                raise ParseError(f"expected {_ORDER[pos]!r}, got {key!r}", lineno, 1)
        elif key not in _OPTIONAL:
            raise ParseError(f"unknown line {key!r}", lineno, 1)
        if key in fields:
            raise ParseError(f"duplicate line {key!r}", lineno, 1)
        values = _ints(parts, lineno)
        fields[key] = (lineno, values)
    if len(lines) < len(_ORDER):
        lineno = lines[-1][0] if lines else 1
        raise ParseError(f"block ends before the {_ORDER[len(lines)]!r} line", lineno, None)

    ln, darts = fields["darts"]
    if len(darts) != 1:
        raise ParseError("'darts' takes exactly one value", ln, 7)
    n = darts[0]
    for key in ("sigma", "iota"):
        ln, vals = fields[key]
        if len(vals) != n:
            raise ParseError(f"{key} lists {len(vals)} darts, expected {n}", ln, None)
        for v in vals:
            if v >= n:
                raise ParseError(f"dart {v} out of range", ln, None)
    ln, root = fields["root"]
    if len(root) != 1:
        raise ParseError("'root' takes exactly one value", ln, 6)
    labels = fields["faces"][1] if "faces" in fields else None
    try:
        m = build_map(fields["sigma"][1], fields["iota"][1], root[0], labels)
    except MapError as exc:
        raise ParseError(str(exc), lines[0][0], None) from exc
    blk = Block(map=m, first_line=lines[0][0])
    if "marks" in fields:
        ln, marks = fields["marks"]
        if len(marks) != 2 or marks[0] == marks[1] or max(marks) >= m.num_vertices:
            raise ParseError("'marks' needs two distinct vertex indices", ln, None)
        blk.marks = tuple(marks)
    if "covering" in fields:
        ln, cov = fields["covering"]
        if cov != sorted(cov) or any(m.iota[e] < e for e in cov if e < m.num_darts):
            raise ParseError("'covering' must list sorted edge ids (smaller darts)", ln, None)
        if any(e >= m.num_darts for e in cov):
            raise ParseError("covering edge out of range", ln, None)
        blk.covering = tuple(cov)
    for key in ("path", "loop"):
        if key in fields:
            ln, ds = fields[key]
            if any(d >= m.num_darts for d in ds):
                raise ParseError(f"dart out of range in {key!r}", ln, None)
            setattr(blk, key, tuple(ds))
    return blk


def parse_blocks(text):
    """Parse every block of ``text``; raises ParseError with line/column."""
    return [_parse_block(b) for b in _split_blocks(text)]


def parse_map(text):
    blocks = parse_blocks(text)
    if len(blocks) != 1:
        raise ParseError(f"expected one map block, found {len(blocks)}")
    return blocks[0].map


def format_map(m, marks=None, covering=None, path=None, loop=None):
    lines = [
        f"darts {m.num_darts}",
        "sigma " + " ".join(map(str, m.sigma)),
        "iota " + " ".join(map(str, m.iota)),
        f"root {m.root}",
    ]
    if m.face_labels is not None:
        lines.append("faces " + " ".join(map(str, m.face_labels)))
    if marks is not None:
        lines.append("marks " + " ".join(map(str, sorted(marks))))
    if covering is not None:
        lines.append("covering " + " ".join(map(str, sorted(covering))))
    if path is not None:
        lines.append("path " + " ".join(map(str, path)) if path else "path")
    if loop is not None:
        lines.append("loop " + " ".join(map(str, loop)))
    return "\n".join(lines) + "\n"


def format_blocks(chunks):
    return "\n".join(chunks)
