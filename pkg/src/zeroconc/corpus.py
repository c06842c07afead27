"""Batch regression runner over JSON-lines files of expected invariants.

Each line looks like ``{"expr": "...", "expected": {"mu": 8, "d_bar": "2"}}``.
Blank lines and lines starting with ``//`` are skipped.
"""
from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .engine import profile
from .errors import ZeroconcError
from .parser import parse


@dataclass
class LineResult:
    line: int
    expr: str
    ok: bool
    messages: list = field(default_factory=list)


@dataclass
class CorpusReport:
    results: list

    @property
    def passed(self) -> int:
        return sum(r.ok for r in self.results)

    @property
    def failed(self) -> int:
        return len(self.results) - self.passed

    @property
    def ok(self) -> bool:
        return self.failed == 0


def check_line(lineno: int, text: str) -> LineResult:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        return LineResult(lineno, "", False, [f"line {lineno}: invalid JSON ({exc.msg})"])
    if not isinstance(obj, dict) or not isinstance(obj.get("expr"), str):
        return LineResult(lineno, "", False, [f'line {lineno}: missing string field "expr"'])
    expected = obj.get("expected", {})
    if not isinstance(expected, dict) or set(expected) - {"mu", "d_bar"}:
        return LineResult(lineno, obj["expr"], False, [f'line {lineno}: "expected" may only hold mu and d_bar'])
    try:
        prof = profile(parse(obj["expr"]))
    except ZeroconcError as exc:
        return LineResult(lineno, obj["expr"], False, [f"line {lineno}: {exc}"])
    res = LineResult(lineno, obj["expr"], True)
    if "mu" in expected:
        if not isinstance(expected["mu"], int) or isinstance(expected["mu"], bool):
            return LineResult(lineno, obj["expr"], False, [f"line {lineno}: expected mu must be an integer"])
        if prof.mu != expected["mu"] % 16:
            res.ok = False
            res.messages.append(f"mu: expected {expected['mu']}, got {prof.mu}")
    if "d_bar" in expected:
        try:
            want = Fraction(str(expected["d_bar"]))
        except (ValueError, ZeroDivisionError):
            return LineResult(lineno, obj["expr"], False, [f"line {lineno}: d_bar must be an 'a/b' string"])
        if isinstance(expected["d_bar"], float):
            return LineResult(lineno, obj["expr"], False, [f"line {lineno}: d_bar must be exact, not a float"])
        if prof.d_bar != want:
            res.ok = False
            res.messages.append(f"d_bar: expected {want}, got {prof.d_bar}")
    return res


def run_corpus(path, jobs: int = 1) -> CorpusReport:
    """Evaluate every line of ``path``; raises OSError if it cannot be read.

    With ``jobs > 1`` lines are checked in a thread pool; results keep file order.
    """
    with open(path, encoding="utf-8") as fh:
        lines = [(n, raw.strip()) for n, raw in enumerate(fh, start=1)]
    lines = [(n, t) for n, t in lines if t and not t.startswith("//")]
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(lambda item: check_line(*item), lines))
    else:
        results = [check_line(n, t) for n, t in lines]
    return CorpusReport(results)
