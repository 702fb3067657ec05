"""
The machine-readable record every subcommand prints.

JSON output is ``{"command", "params", "rows", "diagnostics"}`` with sorted keys and every
float written as ``%.17g``, so identical invocations give byte-identical output and floats
survive a round trip. CSV output carries the rows only, one ``label,value,...`` line each.
"""

import csv
import io
import json
import math
from dataclasses import dataclass, field

from crr._typing import *

Row = Tuple[str, List[float]]


def format_float(value: float) -> str:
    """
    ``%.17g``, with the JSON spellings of the non-finite values.

    Examples:
        >>> format_float(0.1)
        '0.10000000000000001'
        >>> format_float(float("inf"))
        'Infinity'
    """
    if math.isnan(value):
        return "NaN"
    if math.isinf(value):
        return "Infinity" if value > 0 else "-Infinity"
    return "%.17g" % value


def _encode(obj: Any) -> str:
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, float):
        return format_float(obj)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, str):
        return json.dumps(obj, ensure_ascii=False)
    if isinstance(obj, Mapping):
        items = sorted(obj.items())
        return "{" + ", ".join(f"{json.dumps(str(k))}: {_encode(v)}" for k, v in items) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(_encode(v) for v in obj) + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}: {obj!r}")


@final
@dataclass
class OutputRecord:
    """
    One subcommand's result.

    Examples:
        >>> record = OutputRecord("chain", {"lambda": 1.0})
        >>> record.add_row("gamma", [1.0, 0.5])
        >>> record.to_json()
        '{"command": "chain", "diagnostics": {}, "params": {"lambda": 1}, "rows": [["gamma", [1, 0.5]]]}\\n'
    """

    command: str
    params: Dict[str, Any]
    rows: List[Row] = field(default_factory=list)
    diagnostics: Dict[str, float] = field(default_factory=dict)

    def add_row(self, label: str, values: Iterable[float]) -> None:
        self.rows.append((label, [float(v) for v in values]))

    def add_diagnostic(self, name: str, value: float) -> None:
        self.diagnostics[name] = float(value)

    def to_json(self) -> str:
        body = {
            "command": self.command,
            "params": self.params,
            "rows": [[label, values] for label, values in self.rows],
            "diagnostics": self.diagnostics,
        }
        return _encode(body) + "\n"

    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        for label, values in self.rows:
            writer.writerow([label, *map(format_float, values)])
        return buffer.getvalue()

    def serialize(self, fmt: OutputFormat) -> str:
        if fmt == "json":
            return self.to_json()
        if fmt == "csv":
            return self.to_csv()
        raise ValueError(f"unknown output format {fmt!r}")


__all__ = ["OutputRecord", "format_float"]
