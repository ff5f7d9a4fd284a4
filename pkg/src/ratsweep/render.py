"""ASCII and SVG depictions of Dyck paths, path diagrams, and inversion traces.

Every renderer is a pure function of its inputs and emits byte-stable text,
so outputs can be pinned as golden files.  ASCII draws red segments as '/'
and blue segments as '\\' with the row count in the right margin; SVG draws
red arrows solid and blue arrows dashed.  When a diagram is unbalanced, the
lowest row with positive count is marked by a thick horizontal rule in both
formats.
"""

from __future__ import annotations

from .core import (
    SOUTH,
    CoprimePair,
    InvalidInputError,
    format_ranks,
    is_dyck,
    step_ranks,
)
from .diagram import PathDiagram, build_diagram, default_height
from .inversion import InversionTrace

FORMATS = ("ascii", "svg")
TRACE_MODES = ("panels", "overlay")

_SVG_HEAD = '<?xml version="1.0" encoding="UTF-8"?>\n'


def _check_format(format: str) -> None:
    if format not in FORMATS:
        raise InvalidInputError(f"format must be one of {FORMATS}, got {format!r}")


def _svg_doc(width: int, height: int, body: list[str]) -> str:
    lines = [
        _SVG_HEAD
        + f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">'
    ]
    lines.extend(body)
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Dyck paths


def render_path(word: str, pair: CoprimePair, format: str = "ascii") -> str:
    """Staircase of the word in the m x n rectangle, with the diagonal and
    the starting-vertex ranks labeled."""
    _check_format(format)
    if not is_dyck(word, pair):
        raise InvalidInputError(f"render_path needs a Dyck word, got {word!r}")
    ranks = step_ranks(word, pair)
    if format == "ascii":
        return _path_ascii(word, pair, ranks)
    return _path_svg(word, pair, ranks)


def _path_ascii(word: str, pair: CoprimePair, ranks: tuple[int, ...]) -> str:
    m, n = pair.m, pair.n
    label_width = max(len(str(r)) for r in ranks)
    east_off = label_width + 2
    cell = max(6, east_off + label_width + 1)
    width = m * cell + 1
    canvas = [[" "] * width for _ in range(2 * n + 1)]

    def line_row(y: int) -> int:
        return 2 * (n - y)

    def gap_row(j: int) -> int:
        # cells row j sits between the lattice lines at heights j and j+1
        return 2 * (n - j) - 1

    for y in range(n + 1):
        row = canvas[line_row(y)]
        for x in range(m + 1):
            row[x * cell] = "+"
    x = y = 0
    for letter, rank in zip(word, ranks):
        label = str(rank)
        if letter == SOUTH:
            row = canvas[gap_row(y)]
            row[x * cell] = "|"
            row[x * cell + 1 : x * cell + 1 + len(label)] = label
            y += 1
        else:
            row = canvas[line_row(y)]
            for c in range(x * cell + 1, (x + 1) * cell):
                row[c] = "-"
            below = canvas[gap_row(y - 1)]
            below[x * cell + east_off : x * cell + east_off + len(label)] = label
            x += 1
    # diagonal dots last, only into cells the path and labels left untouched
    for j in range(n):
        row = canvas[gap_row(j)]
        for i in range(m):
            if n * i < m * (j + 1) and n * (i + 1) > m * j:
                if all(c == " " for c in row[i * cell + 1 : (i + 1) * cell]):
                    row[i * cell + cell // 2] = "."
    header = f"({pair.m},{pair.n}) {word}"
    return "\n".join([header] + ["".join(row).rstrip() for row in canvas]) + "\n"


def _path_svg(word: str, pair: CoprimePair, ranks: tuple[int, ...]) -> str:
    m, n = pair.m, pair.n
    unit = 30
    left, top, right, bottom = 30, 20, 20, 30

    def px(x: int) -> int:
        return left + x * unit

    def py(y: int) -> int:
        return top + (n - y) * unit

    body = []
    for x in range(m + 1):
        body.append(
            f'<line class="grid" x1="{px(x)}" y1="{py(0)}" x2="{px(x)}" y2="{py(n)}" '
            'stroke="#cccccc" stroke-width="1"/>'
        )
    for y in range(n + 1):
        body.append(
            f'<line class="grid" x1="{px(0)}" y1="{py(y)}" x2="{px(m)}" y2="{py(y)}" '
            'stroke="#cccccc" stroke-width="1"/>'
        )
    body.append(
        f'<line class="diagonal" x1="{px(0)}" y1="{py(0)}" x2="{px(m)}" y2="{py(n)}" '
        'stroke="#888888" stroke-width="1"/>'
    )
    x = y = 0
    for letter, rank in zip(word, ranks):
        if letter == SOUTH:
            x2, y2 = x, y + 1
        else:
            x2, y2 = x + 1, y
        body.append(
            f'<line class="step" x1="{px(x)}" y1="{py(y)}" x2="{px(x2)}" y2="{py(y2)}" '
            'stroke="#000000" stroke-width="3"/>'
        )
        body.append(
            f'<text class="rank" x="{px(x) + 4}" y="{py(y) - 4}" '
            f'font-size="11" font-family="monospace">{rank}</text>'
        )
        x, y = x2, y2
    return _svg_doc(left + m * unit + right, top + n * unit + bottom, body)


# ---------------------------------------------------------------------------
# Path diagrams


def render_diagram(diagram: PathDiagram, format: str = "ascii", top: int | None = None) -> str:
    """The diagram's arrows with S/W column labels, per-row counts on the
    right, and a rule marking the lowest positive row when unbalanced.

    ``top`` fixes the highest rendered row (default: highest occupied row),
    letting trace panels share one crop.
    """
    _check_format(format)
    top_row = diagram.top_occupied_row() if top is None else top
    if top_row < 0 or top_row >= diagram.height:
        raise InvalidInputError(f"top row {top_row} out of range 0..{diagram.height - 1}")
    marker = _lowest_positive(diagram)
    header = [
        f"({diagram.pair.m},{diagram.pair.n}) {diagram.word}",
        f"ranks {format_ranks(diagram.ranks)}",
    ]
    if format == "ascii":
        return "\n".join(header + _diagram_ascii_lines(diagram, top_row, marker)) + "\n"
    body, width, height = _diagram_svg_group(diagram, top_row, marker, 0, 0)
    return _svg_doc(width, height, body)


def _lowest_positive(diagram: PathDiagram) -> int | None:
    # local scan: rendering must not disturb the diagram's query cursor
    for j, (red, blue) in enumerate(zip(diagram.red_counts, diagram.blue_counts)):
        if red > blue:
            return j
    return None


def _segment_char(diagram: PathDiagram, column: int, row: int) -> str:
    rank = diagram.start_rank(column)
    if diagram.word[column - 1] == SOUTH:
        return "/" if rank <= row < rank + diagram.pair.m else "."
    return "\\" if rank - diagram.pair.n <= row < rank else "."


def _diagram_ascii_lines(diagram: PathDiagram, top_row: int, marker: int | None) -> list[str]:
    length = diagram.pair.length
    lines = []
    for j in range(top_row, -1, -1):
        cells = " ".join(_segment_char(diagram, i, j) for i in range(1, length + 1))
        lines.append(f"{j:>3} {cells} {diagram.row_count(j):>4}")
        if marker is not None and j == marker:
            lines.append("    " + "=" * (2 * length - 1))
    lines.append("    " + " ".join(diagram.word))
    return lines


def _diagram_svg_group(
    diagram: PathDiagram,
    top_row: int,
    marker: int | None,
    x_off: int,
    y_off: int,
) -> tuple[list[str], int, int]:
    """Elements for one diagram at the given offset; returns (body, w, h)."""
    pair = diagram.pair
    length = pair.length
    cw, rh = 24, 14
    left, topm, right, bottom = 34, 16, 40, 24

    def px(k: int) -> int:
        return x_off + left + k * cw

    def py(level: int) -> int:
        return y_off + topm + (top_row + 1 - level) * rh

    body = []
    for level in range(top_row + 2):
        body.append(
            f'<line class="grid" x1="{px(0)}" y1="{py(level)}" x2="{px(length)}" y2="{py(level)}" '
            'stroke="#dddddd" stroke-width="1"/>'
        )
        body.append(
            f'<text class="level" x="{x_off + 4}" y="{py(level) + 4}" '
            f'font-size="10" font-family="monospace">{level}</text>'
        )
    if marker is not None:
        body.append(
            f'<line class="marker" x1="{px(0)}" y1="{py(marker)}" x2="{px(length)}" y2="{py(marker)}" '
            'stroke="#22aa44" stroke-width="4"/>'
        )
    for arrow in diagram.arrows():
        x1 = px(arrow.column - 1)
        x2 = px(arrow.column)
        if arrow.color == "red":
            y1, y2 = py(arrow.start_rank), py(arrow.start_rank + pair.m)
            style = 'stroke="#cc2222" stroke-width="2"'
        else:
            y1, y2 = py(arrow.start_rank), py(arrow.start_rank - pair.n)
            style = 'stroke="#2244cc" stroke-width="2" stroke-dasharray="5 4"'
        body.append(
            f'<line class="arrow {arrow.color}" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" {style}/>'
        )
    for j in range(top_row + 1):
        count = diagram.row_count(j)
        body.append(
            f'<text class="count" x="{px(length) + 8}" y="{(py(j) + py(j + 1)) // 2 + 4}" '
            f'font-size="10" font-family="monospace">{count}</text>'
        )
    for i, letter in enumerate(diagram.word, start=1):
        body.append(
            f'<text class="letter" x="{px(i - 1) + cw // 2 - 3}" y="{py(0) + 14}" '
            f'font-size="11" font-family="monospace">{letter}</text>'
        )
    width = left + length * cw + right
    height = topm + (top_row + 2) * rh + bottom
    return body, width, height


# ---------------------------------------------------------------------------
# Traces


def render_trace(
    trace: InversionTrace,
    word: str | None = None,
    pair: CoprimePair | None = None,
    format: str = "ascii",
    mode: str = "panels",
) -> str:
    """A recorded inversion run, either as one diagram panel per step
    (initial diagram included) or as the final diagram overlaid with a box
    per lift giving the step number at the cell the lift's start vacated.

    Requires a trace recorded at full verbosity (rank snapshots present).
    """
    _check_format(format)
    if mode not in TRACE_MODES:
        raise InvalidInputError(f"mode must be one of {TRACE_MODES}, got {mode!r}")
    if word is not None and word != trace.word:
        raise InvalidInputError(f"word {word!r} does not match the trace's {trace.word!r}")
    if pair is not None and pair != trace.pair:
        raise InvalidInputError("pair does not match the trace's pair")
    if len(trace.steps) != trace.step_count or any(
        record.ranks_after is None for record in trace.steps
    ):
        raise InvalidInputError("trace lacks rank snapshots; record it at trace level 'full'")
    if mode == "panels":
        return _trace_panels(trace, format)
    return _trace_overlay(trace, format)


def _trace_boxes(trace: InversionTrace) -> list[tuple[int, int, int]]:
    """(column, row the start vacated, step number) per lift, by replay."""
    ranks = list(trace.start_ranks)
    boxes = []
    for record in trace.steps:
        for column in record.lifted_columns:
            boxes.append((column, ranks[column - 1], record.step))
            ranks[column - 1] += 1
        if tuple(ranks) != record.ranks_after:
            raise InvalidInputError("trace snapshots do not replay from its lifted columns")
    return boxes


def _trace_header(trace: InversionTrace) -> str:
    return (
        f"{trace.algorithm} trace ({trace.pair.m},{trace.pair.n}) {trace.word} "
        f"steps={trace.step_count}"
    )


def _panel_diagrams(trace: InversionTrace) -> tuple[list[tuple[str, PathDiagram]], int]:
    height = default_height(trace.start_ranks, trace.pair)
    captions = ["start"]
    snapshots = [trace.start_ranks]
    for record in trace.steps:
        lifted = ",".join(str(c) for c in record.lifted_columns)
        captions.append(f"step {record.step}: row {record.worked_row}, lift {lifted}")
        snapshots.append(record.ranks_after)
    diagrams = [
        (caption, build_diagram(trace.word, ranks, trace.pair, height=height))
        for caption, ranks in zip(captions, snapshots)
    ]
    top = max(diagram.top_occupied_row() for _, diagram in diagrams)
    return diagrams, top


def _trace_panels(trace: InversionTrace, format: str) -> str:
    diagrams, top = _panel_diagrams(trace)
    if format == "ascii":
        chunks = [_trace_header(trace)]
        for caption, diagram in diagrams:
            lines = [f"-- {caption}"]
            lines.extend(_diagram_ascii_lines(diagram, top, _lowest_positive(diagram)))
            chunks.append("\n".join(lines))
        return "\n\n".join(chunks) + "\n"
    body = [
        f'<text class="title" x="6" y="16" font-size="12" font-family="monospace">'
        f"{_trace_header(trace)}</text>"
    ]
    y_off = 24
    width = 0
    for caption, diagram in diagrams:
        body.append(
            f'<text class="caption" x="6" y="{y_off + 12}" font-size="11" '
            f'font-family="monospace">{caption}</text>'
        )
        group, w, h = _diagram_svg_group(diagram, top, _lowest_positive(diagram), 0, y_off + 16)
        body.extend(group)
        width = max(width, w)
        y_off += h + 20
    return _svg_doc(width, y_off, body)


def _trace_overlay(trace: InversionTrace, format: str) -> str:
    boxes = _trace_boxes(trace)
    height = default_height(trace.start_ranks, trace.pair)
    final = build_diagram(trace.word, trace.final_ranks, trace.pair, height=height)
    top = final.top_occupied_row()
    length = trace.pair.length
    if format == "ascii":
        cw = max(2, len(str(max((step for _, _, step in boxes), default=0))))
        content = {(column, row): str(step) for column, row, step in boxes}
        lines = [_trace_header(trace), "-- overlay on the final diagram"]
        for j in range(top, -1, -1):
            cells = " ".join(
                content.get((i, j), _segment_char(final, i, j)).rjust(cw)
                for i in range(1, length + 1)
            )
            lines.append(f"{j:>3} {cells} {final.row_count(j):>4}")
        lines.append("    " + " ".join(letter.rjust(cw) for letter in final.word))
        return "\n".join(lines) + "\n"
    group, width, group_height = _diagram_svg_group(final, top, _lowest_positive(final), 0, 24)
    body = [
        f'<text class="title" x="6" y="16" font-size="12" font-family="monospace">'
        f"{_trace_header(trace)}</text>"
    ]
    body.extend(group)
    cw, rh = 24, 14
    left, topm = 34, 16
    for column, row, step in boxes:
        x = left + (column - 1) * cw
        y = 24 + topm + (top - row) * rh
        body.append(
            f'<rect class="lift" x="{x + 2}" y="{y + 1}" width="{cw - 4}" height="{rh - 2}" '
            'fill="#ffe9a8" stroke="#aa8800" stroke-width="1"/>'
        )
        body.append(
            f'<text class="lift-step" x="{x + 5}" y="{y + rh - 3}" '
            f'font-size="9" font-family="monospace">{step}</text>'
        )
    return _svg_doc(width, group_height + 24, body)
