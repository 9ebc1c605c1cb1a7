"""Graph files and bound reports.

Text format, one record per line, ``#`` starts a comment::

    n <count>
    l <id> <label>
    e <a> <b>

``n`` must come first. Label lines are optional; unlabeled vertices get
``v<id>``. Ids are 0-based. The JSON format is an object with keys ``n``,
``edges`` (list of pairs) and optional ``labels`` (list of strings).
"""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path

from .bounds import BoundReport
from .errors import ParseError, StrongDomError
from .graph import Graph

CSV_HEADER = ["instance", "gst_parts", "degrees", "lower", "upper", "exact", "tight", "holds"]


def parse_graph_text(text: str) -> Graph:
    n = None
    labels = {}
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        kind = fields[0]
        if kind == "n":
            if n is not None:
                raise ParseError("repeated 'n' header", lineno)
            if len(fields) != 2:
                raise ParseError(f"expected 'n <count>', got {line!r}", lineno)
            n = _int(fields[1], lineno)
            if n < 0:
                raise ParseError("vertex count must be non-negative", lineno)
            continue
        if n is None:
            raise ParseError("'n <count>' must precede other records", lineno)
        if kind == "l":
            if len(fields) != 3:
                raise ParseError(f"expected 'l <id> <label>', got {line!r}", lineno)
            v = _vertex(fields[1], n, lineno)
            if v in labels:
                raise ParseError(f"vertex {v} labeled twice", lineno)
            if fields[2] in labels.values():
                raise ParseError(f"duplicate label {fields[2]!r}", lineno)
            labels[v] = fields[2]
        elif kind == "e":
            if len(fields) != 3:
                raise ParseError(f"expected 'e <a> <b>', got {line!r}", lineno)
            a, b = _vertex(fields[1], n, lineno), _vertex(fields[2], n, lineno)
            if a == b:
                raise ParseError(f"self-loop at vertex {a}", lineno)
            edges.append((a, b))
        else:
            raise ParseError(f"unknown record type {kind!r}", lineno)
    if n is None:
        raise ParseError("missing 'n <count>' header")
    try:
        return Graph(n, edges, labels)
    except StrongDomError as exc:
        # e.g. an explicit label colliding with a default "v<i>" name
        raise ParseError(str(exc)) from exc


def _int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"not an integer: {token!r}", lineno) from None


def _vertex(token: str, n: int, lineno: int) -> int:
    v = _int(token, lineno)
    if not 0 <= v < n:
        raise ParseError(f"vertex {v} out of range [0, {n})", lineno)
    return v


def format_graph_text(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines += [f"l {v} {name}" for v, name in enumerate(g.labels) if name != f"v{v}"]
    lines += [f"e {a} {b}" for a, b in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def graph_to_dict(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.sorted_edges()], "labels": list(g.labels)}


def graph_from_dict(data) -> Graph:
    if not isinstance(data, dict) or "n" not in data:
        raise ParseError("JSON graph must be an object with key 'n'")
    try:
        return Graph(int(data["n"]), [tuple(e) for e in data.get("edges", [])], data.get("labels"))
    except (StrongDomError, TypeError, ValueError) as exc:
        raise ParseError(str(exc)) from exc


def _is_json(path: Path, text: str) -> bool:
    return path.suffix.lower() == ".json" or text.lstrip().startswith("{")


def read_graph(path) -> Graph:
    path = Path(path)
    text = path.read_text()
    if _is_json(path, text):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno) from exc
        return graph_from_dict(data)
    return parse_graph_text(text)


def write_graph(g: Graph, path):
    path = Path(path)
    if path.suffix.lower() == ".json":
        path.write_text(json.dumps(graph_to_dict(g), indent=1) + "\n")
    else:
        path.write_text(format_graph_text(g))


# ---------------------------------------------------------------------------
# reports


def report_row(r: BoundReport) -> dict:
    return {
        "instance": r.context,
        "gst_parts": list(r.parts_gamma),
        "degrees": list(r.degrees),
        "lower": r.lower,
        "upper": r.upper,
        "exact": r.exact,
        "tight": r.tight,
        "holds": r.holds,
        "nodes": r.nodes_explored,
    }


def _join(values) -> str:
    return ";".join(str(v) for v in values)


def render_reports(reports, fmt: str = "table") -> str:
    rows = [report_row(r) for r in reports]
    if fmt == "json":
        return json.dumps(rows, indent=1) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for row in rows:
            writer.writerow([
                row["instance"], _join(row["gst_parts"]), _join(row["degrees"]),
                row["lower"], row["upper"], row["exact"], row["tight"], str(row["holds"]).lower(),
            ])
        return buf.getvalue()
    if fmt != "table":
        raise ValueError(f"unknown report format {fmt!r}")
    header = CSV_HEADER + ["nodes"]
    cells = [header] + [
        [row["instance"], _join(row["gst_parts"]), _join(row["degrees"]), str(row["lower"]),
         str(row["upper"]), str(row["exact"]), row["tight"], "yes" if row["holds"] else "NO", str(row["nodes"])]
        for row in rows
    ]
    widths = [max(len(c[i]) for c in cells) for i in range(len(header))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(line, widths)).rstrip() for line in cells]
    return "\n".join(lines) + "\n"


def parse_csv_reports(text: str) -> list[dict]:
    """Inverse of the CSV rendering, for consistency checks."""
    out = []
    for rec in csv.DictReader(io.StringIO(text)):
        out.append({
            "instance": rec["instance"],
            "gst_parts": [int(x) for x in rec["gst_parts"].split(";") if x],
            "degrees": [int(x) for x in rec["degrees"].split(";") if x],
            "lower": int(rec["lower"]),
            "upper": int(rec["upper"]),
            "exact": int(rec["exact"]),
            "tight": rec["tight"],
            "holds": rec["holds"] == "true",
        })
    return out
