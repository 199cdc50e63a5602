"""
Line-oriented text formats.

Quiver::

    quiver 3
    1 -> 2
    2 -> 3

Seed: header ``seed <n>``, mutable arrows as above plus frozen arrows
``a -> b'`` and ``b' -> a``.

Triangulation: header ``polygon <m>``, then ``arc <label> <u> <v>`` with
0-based polygon vertices and 1-based labels.

Blank lines and ``#`` comments are ignored everywhere.
"""

from collections.abc import Iterator
from pathlib import Path

import numpy as np

from src.models.quiver import Quiver, Seed
from src.models.triangulation import Triangulation
from src.utils.parser.exceptions import ParseError
from src.utils.parser.field_parsers import (
    FROZEN_MARK,
    parse_count,
    parse_int,
    parse_polygon_vertex,
    parse_steps,
    parse_vertex,
)

ARROW = "->"


class TextParser:
    def __init__(self, text: str, source: str = "<string>"):
        """
        :param text: File contents.
        :param source: Name used in error messages.
        """
        self.text = text
        self.source = source

    def error(self, line_no: int | None, reason: str) -> ParseError:
        return ParseError(self.source, line_no, reason)

    def lines(self) -> Iterator[tuple[int, str]]:
        for line_no, raw in enumerate(self.text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if line:
                yield line_no, line

    def header(self) -> tuple[int, str, int]:
        for line_no, line in self.lines():
            tokens = line.split()
            if len(tokens) != 2:
                raise self.error(line_no, f"expected '<kind> <size>', got '{line}'")
            try:
                return line_no, tokens[0], parse_count(tokens[1])
            except ValueError as e:
                raise self.error(line_no, str(e))
        raise self.error(None, "empty input")

    def parse(self) -> Quiver | Seed | Triangulation:
        _, kind, _ = self.header()
        if kind == "quiver":
            return self.parse_quiver()
        if kind == "seed":
            return self.parse_seed()
        if kind == "polygon":
            return self.parse_triangulation()
        raise self.error(None, f"unknown header '{kind}'")

    def _arrow_lines(self, expected: str) -> tuple[int, list[tuple[int, str, str]]]:
        header_line, kind, n = self.header()
        if kind != expected:
            raise self.error(header_line, f"expected '{expected}' header, got '{kind}'")
        arrows = []
        for line_no, line in self.lines():
            if line_no == header_line:
                continue
            parts = [part.strip() for part in line.split(ARROW)]
            if len(parts) != 2 or not all(parts):
                raise self.error(line_no, f"expected 'a {ARROW} b', got '{line}'")
            arrows.append((line_no, parts[0], parts[1]))
        return n, arrows

    def parse_quiver(self) -> Quiver:
        n, arrows = self._arrow_lines("quiver")
        matrix = np.zeros((n, n), dtype=np.int64)
        for line_no, left, right in arrows:
            try:
                (a, frozen_a), (b, frozen_b) = parse_vertex(left, n), parse_vertex(right, n)
            except ValueError as e:
                raise self.error(line_no, str(e))
            if frozen_a or frozen_b:
                raise self.error(line_no, "frozen vertices are only allowed in seeds")
            if a == b:
                raise self.error(line_no, f"loop at vertex {a}")
            matrix[a - 1, b - 1] += 1
            matrix[b - 1, a - 1] -= 1
        return Quiver(matrix)

    def parse_seed(self) -> Seed:
        n, arrows = self._arrow_lines("seed")
        matrix = np.zeros((2 * n, 2 * n), dtype=np.int64)
        for line_no, left, right in arrows:
            try:
                (a, frozen_a), (b, frozen_b) = parse_vertex(left, n), parse_vertex(right, n)
            except ValueError as e:
                raise self.error(line_no, str(e))
            if frozen_a and frozen_b:
                raise self.error(line_no, "arrows between frozen vertices are not allowed")
            i = a - 1 + (n if frozen_a else 0)
            j = b - 1 + (n if frozen_b else 0)
            if i == j:
                raise self.error(line_no, f"loop at vertex {a}")
            matrix[i, j] += 1
            matrix[j, i] -= 1
        return Seed(matrix)

    def parse_triangulation(self) -> Triangulation:
        header_line, kind, m = self.header()
        if kind != "polygon":
            raise self.error(header_line, f"expected 'polygon' header, got '{kind}'")
        chords: dict[int, tuple[int, int]] = {}
        for line_no, line in self.lines():
            if line_no == header_line:
                continue
            tokens = line.split()
            if len(tokens) != 4 or tokens[0] != "arc":
                raise self.error(line_no, f"expected 'arc <label> <u> <v>', got '{line}'")
            try:
                label = parse_int(tokens[1])
                u = parse_polygon_vertex(tokens[2], m)
                v = parse_polygon_vertex(tokens[3], m)
            except ValueError as e:
                raise self.error(line_no, str(e))
            if label in chords:
                raise self.error(line_no, f"arc label {label} used twice")
            chords[label] = (u, v)
        if sorted(chords) != list(range(1, len(chords) + 1)):
            raise self.error(None, f"arc labels must be 1..{len(chords)}")
        return Triangulation(m, tuple(chords[label] for label in sorted(chords)))


def parse_text(text: str, source: str = "<string>") -> Quiver | Seed | Triangulation:
    return TextParser(text, source).parse()


def load_file(path: Path | str) -> Quiver | Seed | Triangulation:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise ParseError(str(path), None, f"cannot read file: {e}")
    return parse_text(text, str(path))


def parse_sequence(text: str, source: str = "<sequence>") -> list[int]:
    try:
        return parse_steps(text)
    except ValueError as e:
        raise ParseError(source, None, str(e))


def format_quiver(q: Quiver) -> str:
    lines = [f"quiver {q.n}"]
    lines.extend(f"{a} {ARROW} {b}" for a, b in q.arrows)
    return "\n".join(lines) + "\n"


def format_seed(s: Seed) -> str:
    lines = [f"seed {s.n}"]
    lines.extend(f"{a} {ARROW} {b}" for a, b in s.arrows)
    lines.extend(f"{a} {ARROW} {b}" for a, b in s.frozen_arrows)
    return "\n".join(lines) + "\n"


def format_triangulation(t: Triangulation) -> str:
    lines = [f"polygon {t.m}"]
    lines.extend(f"arc {label} {u} {v}" for label, (u, v) in enumerate(t.chords, start=1))
    return "\n".join(lines) + "\n"


def format_any(value: Quiver | Seed | Triangulation) -> str:
    if isinstance(value, Seed):
        return format_seed(value)
    if isinstance(value, Quiver):
        return format_quiver(value)
    return format_triangulation(value)


__all__ = [
    "FROZEN_MARK",
    "TextParser",
    "format_any",
    "format_quiver",
    "format_seed",
    "format_triangulation",
    "load_file",
    "parse_sequence",
    "parse_text",
]
