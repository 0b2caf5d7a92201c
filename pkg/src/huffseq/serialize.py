"""JSON/CSV exchange formats.

Exact values travel as "p" or "p/q" strings and floats as JSON numbers, so
a file written here reads back to identical elements.
"""

from __future__ import annotations

import csv
import io
import json
import math
from fractions import Fraction
from pathlib import Path

from .errors import HuffmanError
from .numeric import NumericValue, Scale, format_number, parse_number
from .sequence import Family, HuffmanSequence


class ParseError(HuffmanError):
    code = "parse-error"


def cell(x) -> str:
    """Render one CSV cell deterministically."""
    if x is None:
        return ""
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, float):
        return repr(x)
    return str(x)


def jsonable(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, float) and not math.isfinite(x):
        return "inf" if x > 0 else ("-inf" if x < 0 else "nan")
    if isinstance(x, complex):
        return [x.real, x.imag]
    if isinstance(x, dict):
        return {k: jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    return x


def sequence_to_json(seq: HuffmanSequence, report: dict | None = None) -> dict:
    out = {
        "family": seq.family.value,
        "length": seq.length,
        "scale": seq.scale.to_json() if seq.scale is not None else None,
        "elements": [format_number(x) for x in seq.elements],
        "rotation_offset": seq.rotation_offset,
    }
    if seq.label:
        out["label"] = seq.label
    if report is not None:
        out["report"] = jsonable(report)
    return out


def dumps(payload) -> str:
    return json.dumps(jsonable(payload), indent=2, allow_nan=False) + "\n"


def write_csv(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([cell(v) for v in row])
    return buf.getvalue()


def _json_number(v) -> NumericValue:
    if isinstance(v, bool):
        raise ParseError(f"boolean is not an element value: {v!r}")
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, float):
        return v
    if isinstance(v, str):
        return parse_number(v)
    raise ParseError(f"cannot read element {v!r}")


def sequence_from_json(data) -> HuffmanSequence:
    if isinstance(data, list):
        return HuffmanSequence.custom([_json_number(v) for v in data])
    if not isinstance(data, dict) or "elements" not in data:
        raise ParseError("JSON input must be a list or an object with 'elements'")
    elements = [_json_number(v) for v in data["elements"]]
    try:
        family = Family(data.get("family", "custom"))
    except ValueError:
        family = Family.CUSTOM
    scale = None
    sc = data.get("scale")
    if isinstance(sc, dict) and sc.get("value") is not None:
        scale = Scale(_json_number(sc["value"]))
    return HuffmanSequence(family, elements, scale, int(data.get("rotation_offset", 0)), data.get("label", ""))


def sequence_from_csv(text: str) -> HuffmanSequence:
    """Read either an ``index,value`` table or a bare list of numbers."""
    rows = [r for r in csv.reader(io.StringIO(text)) if any(c.strip() for c in r)]
    if not rows:
        raise ParseError("empty CSV input")
    header = [c.strip().lower() for c in rows[0]]
    if "value" in header:
        col = header.index("value")
        tokens = [r[col] for r in rows[1:]]
    else:
        tokens = [c for r in rows for c in r if c.strip()]
    return HuffmanSequence.custom([parse_number(t) for t in tokens])


def read_sequence(path: str | Path) -> HuffmanSequence:
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {p}: {exc}") from exc
    stripped = text.lstrip()
    if p.suffix.lower() == ".json" or stripped.startswith(("{", "[")):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON in {p}: {exc}") from exc
        seq = sequence_from_json(data)
    else:
        seq = sequence_from_csv(text)
    if seq.length == 0:
        raise ParseError(f"{p} holds no elements")
    return seq
