"""Deterministic JSON/CSV emission with pinned float formatting.

JSON numbers carry 17 significant digits, CSV cells 12; identical inputs
therefore serialize to byte-identical output on any platform.  The JSON
writer is hand-rolled because the stdlib encoder offers no control over
float formatting.
"""

import math

JSON_SIGFIGS = 17
CSV_SIGFIGS = 12


def fmt_float(x: float, sigfigs: int) -> str:
    if math.isnan(x):
        raise ValueError("refusing to serialize NaN")
    if math.isinf(x):
        raise ValueError("refusing to serialize infinity")
    return format(x, f".{sigfigs}g")


def _json_scalar(value, sigfigs: int) -> str:
    if value is None:
        return "null"
    if value is True:
        return "true"
    if value is False:
        return "false"
    if isinstance(value, str):
        out = ['"']
        for ch in value:
            if ch == '"':
                out.append('\\"')
            elif ch == "\\":
                out.append("\\\\")
            elif ord(ch) < 0x20:
                out.append(f"\\u{ord(ch):04x}")
            else:
                out.append(ch)
        out.append('"')
        return "".join(out)
    if isinstance(value, bool):  # pragma: no cover - caught above
        raise TypeError
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return fmt_float(value, sigfigs)
    raise TypeError(f"cannot serialize {type(value).__name__}")


def dumps_json(document, sigfigs: int = JSON_SIGFIGS, indent: int = 2) -> str:
    """Serialize dicts/lists/scalars; dict order is preserved as written."""

    def emit(node, depth):
        pad = " " * (indent * depth)
        pad_in = " " * (indent * (depth + 1))
        if isinstance(node, dict):
            if not node:
                return "{}"
            parts = [
                f"{pad_in}{_json_scalar(str(k), sigfigs)}: {emit(v, depth + 1)}"
                for k, v in node.items()
            ]
            return "{\n" + ",\n".join(parts) + "\n" + pad + "}"
        if isinstance(node, (list, tuple)):
            if not node:
                return "[]"
            # Flat numeric lists stay on one line; nested structures wrap.
            if all(not isinstance(v, (dict, list, tuple)) for v in node):
                return "[" + ", ".join(_json_scalar(v, sigfigs) for v in node) + "]"
            parts = [f"{pad_in}{emit(v, depth + 1)}" for v in node]
            return "[\n" + ",\n".join(parts) + "\n" + pad + "]"
        return _json_scalar(node, sigfigs)

    return emit(document, 0) + "\n"


def dumps_csv(header: list[str], rows: list[list], sigfigs: int = CSV_SIGFIGS) -> str:
    """Comma-delimited table; floats at 12 significant digits, '' for None."""

    def cell(value) -> str:
        if value is None:
            return ""
        if isinstance(value, float):
            return fmt_float(value, sigfigs)
        return str(value)

    lines = [",".join(header)]
    lines.extend(",".join(cell(v) for v in row) for row in rows)
    return "\n".join(lines) + "\n"
