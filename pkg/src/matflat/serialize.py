"""Matroid JSON format: loading with positioned validation errors, and dumping."""

import json

from .bits import MAX_ELEMENTS
from .errors import FormatError, ResourceLimit
from .gf import MAX_Q, build_field, is_prime_power
from .matroid import LinearMatroid, PointLineMatroid, UniformMatroid, materialize


def _int(obj, path, lo=None, hi=None):
    if isinstance(obj, bool) or not isinstance(obj, int):
        raise FormatError(path, f"expected an integer, got {json.dumps(obj)}")
    if lo is not None and obj < lo:
        raise FormatError(path, f"{obj} is below the minimum {lo}")
    if hi is not None and obj > hi:
        raise FormatError(path, f"{obj} exceeds the maximum {hi}")
    return obj


def _list(obj, path):
    if not isinstance(obj, list):
        raise FormatError(path, f"expected an array, got {type(obj).__name__}")
    return obj


def _field(doc, key):
    if key not in doc:
        raise FormatError(f"$.{key}", "missing required field")
    return doc[key]


def matroid_from_dict(doc):
    if not isinstance(doc, dict):
        raise FormatError("$", "expected a JSON object")
    kind = _field(doc, "type")
    if kind == "linear":
        return _linear(doc)
    if kind == "rank3":
        return _rank3(doc)
    if kind == "uniform":
        n = _int(_field(doc, "n"), "$.n", 0)
        if n > MAX_ELEMENTS:
            raise ResourceLimit(f"$.n: {n} elements exceeds the bitset width {MAX_ELEMENTS}")
        r = _int(_field(doc, "r"), "$.r", 0, n)
        return UniformMatroid(r, n)
    raise FormatError("$.type", f"unknown matroid type {json.dumps(kind)}")


def _linear(doc):
    q = _int(_field(doc, "q"), "$.q", 2, MAX_Q)
    if not is_prime_power(q):
        raise FormatError("$.q", f"{q} is not a prime power")
    rows = _int(_field(doc, "rank"), "$.rank", 0)
    cols = _list(_field(doc, "columns"), "$.columns")
    if len(cols) > MAX_ELEMENTS:
        raise ResourceLimit(f"$.columns: {len(cols)} elements exceeds the bitset width {MAX_ELEMENTS}")
    for i, col in enumerate(cols):
        _list(col, f"$.columns[{i}]")
        if len(col) != rows:
            raise FormatError(f"$.columns[{i}]", f"has length {len(col)}, expected {rows}")
        for j, x in enumerate(col):
            _int(x, f"$.columns[{i}][{j}]", 0, q - 1)
    M = LinearMatroid(build_field(q), cols, rows=rows)
    if M.full_rank != rows:
        raise FormatError("$.columns", f"columns span rank {M.full_rank}, declared rank is {rows}")
    return M


def _rank3(doc):
    n = _int(_field(doc, "n"), "$.n", 0)
    if n > MAX_ELEMENTS:
        raise ResourceLimit(f"$.n: {n} elements exceeds the bitset width {MAX_ELEMENTS}")
    lines = _list(_field(doc, "long_lines"), "$.long_lines")
    owner = {}
    for j, line in enumerate(lines):
        path = f"$.long_lines[{j}]"
        _list(line, path)
        if len(line) < 3:
            raise FormatError(path, f"a long line needs at least 3 points, got {len(line)}")
        for t, e in enumerate(line):
            _int(e, f"{path}[{t}]", 0, n - 1)
        if len(set(line)) != len(line):
            raise FormatError(path, "repeated element")
        pts = sorted(line)
        for a in range(len(pts)):
            for b in range(a + 1, len(pts)):
                pair = (pts[a], pts[b])
                if pair in owner:
                    raise FormatError(path, f"elements {pair[0]} and {pair[1]} already lie on "
                                            f"$.long_lines[{owner[pair]}]")
                owner[pair] = j
    return PointLineMatroid(n, lines)


def loads(text):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"line {exc.lineno} column {exc.colno}", exc.msg) from None
    return matroid_from_dict(doc)


def load_matroid(path):
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def matroid_to_dict(M):
    M, _ = materialize(M)
    if isinstance(M, LinearMatroid):
        return {"type": "linear", "q": M.field.q, "rank": M.rows, "columns": [list(c) for c in M.columns]}
    if isinstance(M, PointLineMatroid):
        from .bits import to_list
        return {"type": "rank3", "n": M.n, "long_lines": [to_list(L) for L in M.long_lines]}
    if isinstance(M, UniformMatroid):
        return {"type": "uniform", "r": M.r, "n": M.n}
    raise TypeError(f"no JSON form for {M!r}")


def dumps(M):
    return json.dumps(matroid_to_dict(M), separators=(",", ":"))


def dump_matroid(M, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(M) + "\n")
