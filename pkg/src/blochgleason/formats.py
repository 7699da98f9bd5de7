"""Text formats for matrices and Bloch vectors, and JSON/CSV report output.

Matrix files hold one row per line with whitespace-separated entries written
as ``re+imi`` / ``re-imi`` (a bare real is also accepted). Bloch files hold
whitespace-separated reals. Reports are ``{"command", "summary", "records"}``
dictionaries; floats are written with ``repr`` so they round-trip exactly.
"""
import csv
import io
import json
import math

import numpy as np


def parse_complex(token):
    tok = token.strip()
    if not tok or "j" in tok.lower():
        raise ValueError(f"bad complex entry {token!r}")
    try:
        z = complex(tok[:-1] + "j") if tok.endswith("i") else complex(float(tok))
    except ValueError:
        raise ValueError(f"bad complex entry {token!r}") from None
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError(f"non-finite entry {token!r}")
    return z


def _rows(text):
    return [line.split() for line in text.splitlines()
            if line.strip() and not line.lstrip().startswith("#")]


def parse_matrix_text(text):
    rows = _rows(text)
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise ValueError("matrix file must contain N rows of N entries")
    return np.array([[parse_complex(t) for t in r] for r in rows], dtype=np.complex128)


def parse_bloch_text(text):
    tokens = [t for r in _rows(text) for t in r]
    try:
        v = np.array([float(t) for t in tokens])
    except ValueError:
        raise ValueError("Bloch file must contain only real numbers") from None
    if v.size == 0 or not np.all(np.isfinite(v)):
        raise ValueError("Bloch file is empty or has non-finite values")
    dim = math.isqrt(v.size + 1)
    if dim < 2 or dim * dim != v.size + 1:
        raise ValueError(f"{v.size} components is not N**2 - 1 for any N >= 2")
    return v


def read_state_text(text):
    """Return ``("matrix", array)`` or ``("bloch", array)`` by inspecting the layout.

    A square block of at least two rows is a matrix. ``N**2 - 1`` is never a
    perfect square, so the two layouts cannot be confused.
    """
    rows = _rows(text)
    if len(rows) >= 2 and all(len(r) == len(rows) for r in rows):
        return "matrix", parse_matrix_text(text)
    return "bloch", parse_bloch_text(text)


def read_state(path):
    with open(path) as fh:
        return read_state_text(fh.read())


def format_float(x):
    return repr(float(x))


def format_complex(z):
    z = complex(z)
    sign = "-" if math.copysign(1.0, z.imag) < 0 else "+"
    return f"{format_float(z.real)}{sign}{format_float(abs(z.imag))}i"


def format_matrix(m):
    return "\n".join(" ".join(format_complex(z) for z in row) for row in np.asarray(m)) + "\n"


def format_bloch(v):
    return " ".join(format_float(x) for x in v) + "\n"


def _plain(value):
    if isinstance(value, (np.floating, float)):
        return float(value)
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, np.bool_):
        return bool(value)
    return value


def _csv_cell(value):
    value = _plain(value)
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format_float(value)
    return str(value)


def to_json(report):
    clean = {
        "command": report["command"],
        "summary": {k: _plain(v) for k, v in report["summary"].items()},
        "records": [{k: _plain(v) for k, v in rec.items()} for rec in report.get("records", [])],
    }
    return json.dumps(clean, indent=2) + "\n"


def to_csv(report):
    """Records as a CSV table, then a blank line, then ``key,value`` summary rows."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    records = report.get("records", [])
    if records:
        header = list(records[0])
        w.writerow(header)
        for rec in records:
            w.writerow([_csv_cell(rec[k]) for k in header])
        w.writerow([])
    w.writerow(["key", "value"])
    w.writerow(["command", report["command"]])
    for k, v in report["summary"].items():
        w.writerow([k, _csv_cell(v)])
    return buf.getvalue()


def render(report, fmt):
    if fmt == "json":
        return to_json(report)
    if fmt == "csv":
        return to_csv(report)
    raise ValueError(f"unknown format {fmt!r}")


def parse_csv_report(text):
    """Inverse of :func:`to_csv` for tests and scripts: returns ``(records, summary)`` as strings."""
    blocks = text.split("\n\n")
    summary_block = blocks[-1]
    records = []
    if len(blocks) > 1:
        records = list(csv.DictReader(io.StringIO(blocks[0])))
    rows = list(csv.reader(io.StringIO(summary_block)))
    summary = {k: v for k, v in rows[1:] if k != "command"}
    return records, summary
