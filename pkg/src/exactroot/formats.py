"""Parsing and serialization: graph6, edge lists, DOT output and JSON
certificate documents. Every format round-trips bit-exactly."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .graphs import Graph, VertexMapping


class ParseError(ValueError):
    """Malformed input; the message pins down the offending location."""


# ---------------------------------------------------------------------------
# graph6 (McKay's 6-bit ASCII encoding of the upper adjacency triangle)
# ---------------------------------------------------------------------------

def _g6_encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError("graph too large for graph6")


def emit_graph6(g: Graph) -> str:
    """Canonical graph6 line (no trailing newline)."""
    out = [_g6_encode_n(g.n)]
    bits = 0
    nbits = 0
    for j in range(1, g.n):
        for i in range(j):
            bits = (bits << 1) | (1 if g.has_edge(i, j) else 0)
            nbits += 1
            if nbits == 6:
                out.append(chr(bits + 63))
                bits = 0
                nbits = 0
    if nbits:
        out.append(chr((bits << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line. Raises ParseError (naming the byte offset) on
    characters outside [63, 126], a truncated body, or nonzero padding."""
    line = text.rstrip("\n").rstrip("\r")
    if not line:
        raise ParseError("graph6: empty input at byte 0")
    data = [ord(ch) for ch in line]
    for off, val in enumerate(data):
        if not (63 <= val <= 126):
            raise ParseError(f"graph6: character out of range [63,126] at byte {off}")
    pos = 0
    if data[0] != 126:
        n = data[0] - 63
        pos = 1
    elif len(data) >= 2 and data[1] != 126:
        if len(data) < 4:
            raise ParseError("graph6: truncated extended header at byte 1")
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        pos = 4
        if n < 63:
            raise ParseError("graph6: malformed length header at byte 0")
    else:
        if len(data) < 8:
            raise ParseError("graph6: truncated extended header at byte 2")
        n = 0
        for k in range(2, 8):
            n = (n << 6) | (data[k] - 63)
        pos = 8
        if n < 258048:
            raise ParseError("graph6: malformed length header at byte 0")
    npairs = n * (n - 1) // 2
    nbytes = (npairs + 5) // 6
    if len(data) - pos != nbytes:
        raise ParseError(
            f"graph6: body has {len(data) - pos} bytes at byte {pos}, expected {nbytes}"
        )
    edges = []
    bit = 0
    j, i = 1, 0
    for off in range(pos, len(data)):
        val = data[off] - 63
        for k in range(5, -1, -1):
            if bit < npairs:
                if (val >> k) & 1:
                    edges.append((i, j))
                bit += 1
                i += 1
                if i == j:
                    j += 1
                    i = 0
            else:
                if (val >> k) & 1:
                    raise ParseError(f"graph6: nonzero padding bit at byte {off}")
    return Graph(n, edges)


# ---------------------------------------------------------------------------
# edge list ("n m" header then one "u v" line per edge)
# ---------------------------------------------------------------------------

def emit_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {len(g.edges)}"]
    lines.extend(f"{u} {v}" for u, v in sorted(g.edges))
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise ParseError("edge list: missing header at line 1")
    head = lines[0].split()
    if len(head) != 2:
        raise ParseError("edge list: header must be 'n m' at line 1")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise ParseError("edge list: header must be 'n m' at line 1") from None
    if n < 0 or m < 0:
        raise ParseError("edge list: negative count at line 1")
    if len(lines) - 1 != m:
        raise ParseError(f"edge list: expected {m} edge lines, found {len(lines) - 1}")
    edges = []
    seen = set()
    for idx, raw in enumerate(lines[1:], start=2):
        parts = raw.split()
        if len(parts) != 2:
            raise ParseError(f"edge list: expected 'u v' at line {idx}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"edge list: expected 'u v' at line {idx}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"edge list: vertex out of range at line {idx}")
        if u == v:
            raise ParseError(f"edge list: self-loop at line {idx}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise ParseError(f"edge list: duplicate edge at line {idx}")
        seen.add(key)
        edges.append(key)
    return Graph(n, edges)


# ---------------------------------------------------------------------------
# DOT output (figures only, never parsed back)
# ---------------------------------------------------------------------------

def emit_dot(g: Graph, highlight: VertexMapping | None = None) -> str:
    """Deterministic DOT text; vertices in the highlight image are colored."""
    marked = highlight.image() if highlight is not None else frozenset()
    lines = ["graph {"]
    for v in range(g.n):
        if v in marked:
            lines.append(f"  {v} [color=red, style=filled, fillcolor=lightcoral];")
        else:
            lines.append(f"  {v};")
    for u, v in sorted(g.edges):
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# JSON certificates
# ---------------------------------------------------------------------------

_KIND_FIELDS = {
    # kind -> (required witness fields, allowed witness fields)
    "any-root": ({"root"}, {"root"}),
    "tree-root": ({"root", "mapping"}, {"root", "mapping"}),
    "bipartite-root": ({"root"}, {"root"}),
    "triangle-free-root": ({"root"}, {"root", "cliques"}),
    "clique-dual": ({"cliques"}, {"cliques"}),
    "clique-cover": ({"cliques"}, {"cliques"}),
    "none": (set(), set()),
}


@dataclass(frozen=True)
class CertificateDocument:
    """A witness for one of the root/cover decisions. `verified` is set only
    after a verifier has re-checked the witness against its instance."""

    kind: str
    root: Graph | None = None
    mapping: VertexMapping | None = None
    cliques: tuple[tuple[int, ...], ...] | None = None
    verified: bool = field(default=False)

    def __post_init__(self):
        if self.kind not in _KIND_FIELDS:
            raise ValueError(f"unknown certificate kind {self.kind!r}")
        required, allowed = _KIND_FIELDS[self.kind]
        present = {
            name
            for name in ("root", "mapping", "cliques")
            if getattr(self, name) is not None
        }
        if not required <= present:
            raise ValueError(
                f"certificate kind {self.kind!r} requires {sorted(required)}"
            )
        if not present <= allowed:
            raise ValueError(
                f"certificate kind {self.kind!r} does not carry {sorted(present - allowed)}"
            )
        if self.cliques is not None:
            object.__setattr__(
                self,
                "cliques",
                tuple(tuple(int(v) for v in c) for c in self.cliques),
            )


def emit_certificate_json(cert: CertificateDocument) -> str:
    doc: dict = {"kind": cert.kind, "verified": cert.verified}
    if cert.root is not None:
        doc["root"] = emit_graph6(cert.root)
    if cert.mapping is not None:
        doc["mapping"] = [[u, v] for u, v in sorted(cert.mapping.items())]
    if cert.cliques is not None:
        doc["cliques"] = [sorted(c) for c in cert.cliques]
    return json.dumps(doc, sort_keys=True) + "\n"


def _expect(cond: bool, path: str, what: str):
    if not cond:
        raise ParseError(f"certificate: {what} at {path}")


def parse_certificate_json(text: str) -> CertificateDocument:
    """Strict parse; unknown fields are rejected and errors carry a
    JSON-pointer style path."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"certificate: invalid JSON ({exc.msg}) at /") from None
    _expect(isinstance(doc, dict), "/", "expected an object")
    known = {"kind", "root", "mapping", "cliques", "verified"}
    for key in doc:
        _expect(key in known, f"/{key}", "unknown field")
    _expect("kind" in doc, "/kind", "missing field")
    _expect(isinstance(doc["kind"], str), "/kind", "expected a string")
    _expect("verified" in doc, "/verified", "missing field")
    _expect(isinstance(doc["verified"], bool), "/verified", "expected a boolean")
    root = None
    if "root" in doc:
        _expect(isinstance(doc["root"], str), "/root", "expected a graph6 string")
        try:
            root = parse_graph6(doc["root"])
        except ParseError as exc:
            raise ParseError(f"certificate: {exc} at /root") from None
    mapping = None
    if "mapping" in doc:
        raw = doc["mapping"]
        _expect(isinstance(raw, list), "/mapping", "expected a list of pairs")
        pairs = []
        for i, item in enumerate(raw):
            _expect(
                isinstance(item, list) and len(item) == 2,
                f"/mapping/{i}",
                "expected a [u, v] pair",
            )
            for k in range(2):
                _expect(
                    isinstance(item[k], int) and not isinstance(item[k], bool),
                    f"/mapping/{i}/{k}",
                    "expected an integer",
                )
            pairs.append((item[0], item[1]))
        try:
            mapping = VertexMapping(pairs)
        except ValueError as exc:
            raise ParseError(f"certificate: {exc} at /mapping") from None
    cliques = None
    if "cliques" in doc:
        raw = doc["cliques"]
        _expect(isinstance(raw, list), "/cliques", "expected a list of cliques")
        cl = []
        for i, item in enumerate(raw):
            _expect(isinstance(item, list), f"/cliques/{i}", "expected a vertex list")
            for k, v in enumerate(item):
                _expect(
                    isinstance(v, int) and not isinstance(v, bool),
                    f"/cliques/{i}/{k}",
                    "expected an integer",
                )
            cl.append(tuple(item))
        cliques = tuple(cl)
    try:
        return CertificateDocument(
            kind=doc["kind"],
            root=root,
            mapping=mapping,
            cliques=cliques,
            verified=doc["verified"],
        )
    except ValueError as exc:
        raise ParseError(f"certificate: {exc} at /kind") from None
