import csv
import io
import json
from dataclasses import asdict, is_dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional

from models.base import OutputFormat
from .models import CommandOutput

# Integers beyond double precision are emitted as strings in JSON
JSON_SAFE_INT = 2 ** 53


class OutputFormatter:
    def __init__(self, default_format: str = 'text', precision: int = 12):
        self.default_format = OutputFormat(default_format)
        self.precision = precision

    def render(self, output: CommandOutput, output_format: Optional[str] = None) -> str:
        format_type = OutputFormat(output_format) if output_format else self.default_format

        if format_type is OutputFormat.JSON:
            return self._format_as_json(output)
        elif format_type is OutputFormat.CSV:
            return self._format_as_csv(output)
        else:
            return self._format_as_text(output)

    def _jsonable(self, value: Any) -> Any:
        if is_dataclass(value) and not isinstance(value, type):
            return self._jsonable(asdict(value))
        if isinstance(value, Enum):
            return value.value
        if isinstance(value, bool) or value is None or isinstance(value, str):
            return value
        if isinstance(value, int):
            return str(value) if abs(value) >= JSON_SAFE_INT else value
        if isinstance(value, Fraction):
            return str(value)
        if isinstance(value, float):
            return round(value, self.precision)
        if isinstance(value, complex):
            return [round(value.real, self.precision), round(value.imag, self.precision)]
        if isinstance(value, dict):
            return {str(k): self._jsonable(v) for k, v in value.items()}
        if isinstance(value, (list, tuple)):
            return [self._jsonable(v) for v in value]
        return str(value)

    def _format_as_json(self, output: CommandOutput) -> str:
        document = {'command': output.command, **output.summary}
        if output.rows:
            document['rows'] = output.rows
        document.update(output.document)
        return json.dumps(self._jsonable(document), indent=2, sort_keys=True)

    def _cell(self, value: Any) -> str:
        if isinstance(value, float):
            return f"{value:.{self.precision}g}"
        if isinstance(value, (list, tuple)):
            return " ".join(self._cell(v) for v in value)
        if value is None:
            return "-"
        return str(value)

    def _format_as_text(self, output: CommandOutput) -> str:
        lines = []
        if output.summary:
            width = max(len(k) for k in output.summary)
            for key, value in output.summary.items():
                lines.append(f"{key:<{width}} : {self._cell(value)}")
        if output.rows:
            if lines:
                lines.append("")
            lines.extend(self._aligned(output.rows))
        if output.message:
            lines.append(output.message)
        return "\n".join(lines)

    def _aligned(self, rows: List[Dict[str, Any]]) -> List[str]:
        headers = list(rows[0].keys())
        cells = [[self._cell(row.get(h)) for h in headers] for row in rows]
        widths = [max(len(h), *(len(r[i]) for r in cells)) for i, h in enumerate(headers)]
        lines = ["  ".join(h.rjust(w) for h, w in zip(headers, widths))]
        lines.append("  ".join("-" * w for w in widths))
        lines.extend("  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in cells)
        return lines

    def _format_as_csv(self, output: CommandOutput) -> str:
        rows = output.rows or [output.summary]
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        headers = list(rows[0].keys())
        writer.writerow(headers)
        for row in rows:
            writer.writerow([self._cell(row.get(h)) for h in headers])
        return buffer.getvalue().rstrip("\n")
