"""CGF 텍스트 포맷 (색마다 involution 한 줄)

    cgf 1
    dim <d>
    vertices <ν>
    color <c>: <i0> <i1> ... <i(ν-1)>     (c = 0..d 오름차순)

'#' 로 시작하는 줄은 주석. 출력은 항상 위 형식 그대로, 줄 끝 개행 포함.
"""
from __future__ import annotations

import os
import re
from pathlib import Path
from typing import Iterator, List, Union

from ..core.errors import CGFParseError
from ..core.models import ColoredGraph

MAGIC = "cgf 1"

_DIM_RE = re.compile(r"^dim (\d+)$")
_VERTICES_RE = re.compile(r"^vertices (\d+)$")
_COLOR_RE = re.compile(r"^color (\d+):((?: \d+)*)$")


def serialize(graph: ColoredGraph) -> str:
    lines = [MAGIC, f"dim {graph.dim}", f"vertices {graph.num_vertices}"]
    for c, partner in enumerate(graph.matchings):
        lines.append(f"color {c}: " + " ".join(str(w) for w in partner))
    return "\n".join(lines) + "\n"


def _content_lines(text: str) -> List[str]:
    out = []
    for raw in text.splitlines():
        line = raw.rstrip("\r")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        out.append(line)
    return out


def parse(text: str) -> ColoredGraph:
    lines = _content_lines(text)
    if not lines or lines[0] != MAGIC:
        raise CGFParseError(f"first line must be '{MAGIC}'")
    if len(lines) < 3:
        raise CGFParseError("missing 'dim' / 'vertices' header")

    m = _DIM_RE.match(lines[1])
    if not m:
        raise CGFParseError(f"bad dim line: {lines[1]!r}")
    dim = int(m.group(1))
    m = _VERTICES_RE.match(lines[2])
    if not m:
        raise CGFParseError(f"bad vertices line: {lines[2]!r}")
    nu = int(m.group(1))

    color_lines = lines[3:]
    if len(color_lines) != dim + 1:
        raise CGFParseError(f"dim {dim} needs {dim + 1} color lines, found {len(color_lines)}")

    matchings = []
    for expected, line in enumerate(color_lines):
        m = _COLOR_RE.match(line)
        if not m:
            raise CGFParseError(f"bad color line: {line[:60]!r}")
        if int(m.group(1)) != expected:
            raise CGFParseError(f"color lines must be ascending; expected color {expected}")
        entries = tuple(int(x) for x in m.group(2).split())
        if len(entries) != nu:
            raise CGFParseError(f"color {expected}: {len(entries)} entries for {nu} vertices")
        matchings.append(entries)

    return ColoredGraph(dim=dim, num_vertices=nu, matchings=tuple(matchings))


def parse_many(text: str) -> Iterator[ColoredGraph]:
    """빈 줄로 구분된 CGF 블록 스트림"""
    block: List[str] = []
    for line in text.splitlines():
        if line.strip() == MAGIC and block:
            yield parse("\n".join(block))
            block = []
        block.append(line)
    if _content_lines("\n".join(block)):
        yield parse("\n".join(block))


def load(path: Union[str, os.PathLike]) -> ColoredGraph:
    return parse(Path(path).expanduser().read_text(encoding="utf-8"))


def save(graph: ColoredGraph, path: Union[str, os.PathLike]) -> str:
    p = Path(path).expanduser()
    p.parent.mkdir(parents=True, exist_ok=True)
    p.write_text(serialize(graph), encoding="utf-8")
    return str(p)
