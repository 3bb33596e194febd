from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, TextIO, Tuple

from pydantic import ValidationError

from ..core.config import global_settings as C
from ..core.models import BettiVector, ColoredGraph
from ..services import cgf

Handler = Callable[[argparse.Namespace, "Output"], int]


@dataclass
class Argument:
    flags: Tuple[str, ...]
    options: Dict[str, Any] = field(default_factory=dict)


def arg(*flags: str, **options: Any) -> Argument:
    return Argument(flags=flags, options=options)


@dataclass
class CommandSpec:
    name: str
    help: str
    arguments: List[Argument]
    handler: Handler


class CommandRouter:
    """서브커맨드 묶음. cli 가 include 해서 argparse 서브파서로 등록한다."""

    def __init__(self) -> None:
        self.commands: List[CommandSpec] = []

    def command(self, name: str, *, help: str = "", arguments: Optional[List[Argument]] = None):
        def decorator(fn: Handler) -> Handler:
            self.commands.append(CommandSpec(name=name, help=help, arguments=arguments or [], handler=fn))
            return fn

        return decorator


# ========================================
# 출력
# ========================================
def _flatten(prefix: str, value: Any, out: List[str]) -> None:
    if isinstance(value, dict):
        if not value:
            out.append(f"{prefix}: {{}}")
        for k, v in value.items():
            _flatten(f"{prefix}.{k}" if prefix else str(k), v, out)
    elif isinstance(value, list) and any(isinstance(v, (dict, list)) for v in value):
        for i, v in enumerate(value):
            _flatten(f"{prefix}[{i}]", v, out)
    else:
        out.append(f"{prefix}: {json.dumps(value)}")


def to_text(payload: Dict[str, Any]) -> str:
    """JSON 과 같은 정보를 'a.b: 값' 줄로 평탄화"""
    lines: List[str] = []
    _flatten("", payload, lines)
    return "\n".join(lines)


class Output:
    def __init__(self, fmt: str, stream: Optional[TextIO] = None) -> None:
        self.format = fmt
        self.stream = stream or sys.stdout

    def emit(self, payload: Dict[str, Any]) -> None:
        if self.format == "text":
            self.stream.write(to_text(payload) + "\n")
        else:
            self.stream.write(json.dumps(payload, indent=C.JSON_INDENT, ensure_ascii=False) + "\n")

    def emit_line(self, payload: Dict[str, Any]) -> None:
        self.stream.write(json.dumps(payload, ensure_ascii=False, separators=(",", ":")) + "\n")

    def raw(self, text: str) -> None:
        self.stream.write(text)


# ========================================
# 공용 인자 파서
# ========================================
def betti_arg(text: str) -> BettiVector:
    try:
        values = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"--betti expects five integers B0,B1,B2,B3,B4 (got {text!r})")
    if len(values) != 5:
        raise argparse.ArgumentTypeError(f"--betti expects five integers (got {len(values)})")
    try:
        return BettiVector(entries=values)
    except ValidationError as e:
        raise argparse.ArgumentTypeError(f"--betti: {e.errors()[0]['msg']}")


def nonnegative_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {v}")
    return v


def load_graph(path: str) -> ColoredGraph:
    if path == "-":
        return cgf.parse(sys.stdin.read())
    return cgf.load(path)


def write_graph(graph: ColoredGraph, out: Output, path: Optional[str]) -> Dict[str, Any]:
    if path:
        saved = cgf.save(graph, path)
        return {"written": saved, "num_vertices": graph.num_vertices, "dim": graph.dim}
    out.raw(cgf.serialize(graph))
    return {}
