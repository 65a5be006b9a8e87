"""Serialization: the graph file format and the block-vector wire format.

Graph files are JSON documents with 1-based vertex numbers:

    {"n": 2, "edges": [{"from": 2, "to": 1, "count": 1}]}

``n`` is the vertex count; each edge record gives the number of arrows from
``from`` to ``to``; pairs without a record have count 0.  Duplicate
(to, from) records and infinite counts are rejected.

A block-vector element travels as a list of records

    {"to": i, "from": j, "vector": [[re, im], ...]}

with one record per nonempty block, again 1-based.
"""

from __future__ import annotations

import json
import math

import numpy as np

from .correspondence import CorrespondenceElement
from .quiver import Quiver

#: version of the graph file schema (printed by the CLI --version flag)
GRAPH_SCHEMA_VERSION = "1"


def _schema_error(msg: str) -> ValueError:
    return ValueError(f"malformed graph file: {msg}")


def parse_quiver_dict(doc) -> Quiver:
    """Validate a decoded graph document and build the quiver."""
    if not isinstance(doc, dict):
        raise _schema_error("top level must be an object")
    unknown = set(doc) - {"n", "edges"}
    if unknown:
        raise _schema_error(f"unknown fields {sorted(unknown)}")
    n = doc.get("n")
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise _schema_error(f"'n' must be a positive integer, got {n!r}")
    edges = doc.get("edges", [])
    if not isinstance(edges, list):
        raise _schema_error("'edges' must be a list")
    c = [[0] * n for _ in range(n)]
    seen: set[tuple[int, int]] = set()
    for k, rec in enumerate(edges):
        if not isinstance(rec, dict) or set(rec) != {"from", "to", "count"}:
            raise _schema_error(
                f"edge record {k} must have exactly the fields from/to/count"
            )
        src, dst, count = rec["from"], rec["to"], rec["count"]
        for name, v in (("from", src), ("to", dst)):
            if isinstance(v, bool) or not isinstance(v, int) or not 1 <= v <= n:
                raise _schema_error(f"edge record {k}: '{name}' must be in 1..{n}")
        if count == "inf" or (isinstance(count, float) and math.isinf(count)):
            raise _schema_error(
                f"edge record {k}: infinite multiplicities are not supported; "
                "only finite graphs can be realized"
            )
        if isinstance(count, bool) or not isinstance(count, int) or count < 0:
            raise _schema_error(
                f"edge record {k}: 'count' must be a nonnegative integer, got {count!r}"
            )
        key = (dst, src)
        if key in seen:
            raise _schema_error(
                f"duplicate edge record for to={dst}, from={src}"
            )
        seen.add(key)
        c[dst - 1][src - 1] = count
    return Quiver(c)


def parse_quiver_file(path) -> Quiver:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise _schema_error(f"{path}: {exc}") from exc
    return parse_quiver_dict(doc)


def quiver_to_dict(q: Quiver) -> dict:
    edges = [
        {"from": j + 1, "to": i + 1, "count": q.c[i][j]}
        for i in range(q.n)
        for j in range(q.n)
        if q.c[i][j]
    ]
    return {"n": q.n, "edges": edges}


def write_quiver_file(q: Quiver, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(quiver_to_dict(q), fh, indent=2, sort_keys=True)
        fh.write("\n")


def element_to_wire(xi: CorrespondenceElement) -> list[dict]:
    """One record per nonempty block, 1-based, complex entries as [re, im]."""
    out = []
    for i in range(xi.quiver.n):
        for j in range(xi.quiver.n):
            vec = xi.blocks[i][j]
            if vec.size == 0:
                continue
            out.append(
                {
                    "to": i + 1,
                    "from": j + 1,
                    "vector": [[float(z.real), float(z.imag)] for z in vec],
                }
            )
    return out


def element_from_wire(q: Quiver, records) -> CorrespondenceElement:
    xi = CorrespondenceElement.zeros(q)
    seen: set[tuple[int, int]] = set()
    for k, rec in enumerate(records):
        if not isinstance(rec, dict) or set(rec) != {"to", "from", "vector"}:
            raise ValueError(f"block record {k} must have the fields to/from/vector")
        for name in ("to", "from"):
            v = rec[name]
            if isinstance(v, bool) or not isinstance(v, int):
                raise ValueError(f"block record {k}: '{name}' must be an integer")
        i, j = rec["to"] - 1, rec["from"] - 1
        if not (0 <= i < q.n and 0 <= j < q.n):
            raise ValueError(f"block record {k}: vertex out of range")
        if (i, j) in seen:
            raise ValueError(f"duplicate block record for to={i + 1}, from={j + 1}")
        seen.add((i, j))
        vec = np.array([complex(re, im) for re, im in rec["vector"]])
        if vec.shape[0] != q.c[i][j]:
            raise ValueError(
                f"block record {k}: expected dimension {q.c[i][j]}, got {vec.shape[0]}"
            )
        xi = xi.with_block(i, j, vec)
    return xi
