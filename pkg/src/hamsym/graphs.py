"""Core graph type: simple undirected graphs as fixed-width bit rows.

Vertices are dense indices 0..n-1.  Adjacency is stored as one Python int
bit row per vertex (bit u of row v set iff {u,v} is an edge); rows pack into
one 64-bit word up to the default cap and two words when the cap is raised
to 128.  Graphs are immutable after construction and safe to share.

Serialization: graph6 (bit-exact per the published format) and a JSON
edge-list form {"n": ..., "edges": [[u, v], ...], "labels": optional}.
"""

from __future__ import annotations

import json
from collections import deque

import numpy as np

from . import config
from .errors import (
    CapExceededError,
    EdgeNotPresentError,
    MalformedHeaderError,
    SelfLoopError,
    TrailingGarbageError,
    VertexOutOfRangeError,
)


def edge(u, v):
    """The unordered pair (u, v) normalized to u < v."""
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1.

    `labels`, when present, is a tuple of opaque byte strings, one per
    vertex; constructors use it to carry group elements without the core
    knowing any group theory.
    """

    __slots__ = ("n", "rows", "labels", "_np_rows", "_edge_list", "_hash")

    def __init__(self, n, rows, labels=None):
        if n < 1:
            raise VertexOutOfRangeError("graphs need at least one vertex")
        if n > config.vertex_cap():
            raise CapExceededError(
                f"{n} vertices exceeds the configured cap {config.vertex_cap()}"
            )
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != n:
                raise ValueError("labels must have one entry per vertex")
        self.n = n
        self.rows = tuple(rows)
        self.labels = labels
        self._np_rows = None
        self._edge_list = None
        self._hash = None
        mask = (1 << n) - 1
        for v, row in enumerate(self.rows):
            if row >> v & 1:
                raise SelfLoopError(f"self-loop at vertex {v}")
            if row & ~mask:
                raise VertexOutOfRangeError(f"row {v} has bits beyond n-1")
        for v in range(n):
            for u in range(v):
                if (self.rows[v] >> u & 1) != (self.rows[u] >> v & 1):
                    raise ValueError("adjacency is not symmetric")

    # -- basic accessors ---------------------------------------------------

    def has_edge(self, u, v):
        return bool(self.rows[u] >> v & 1)

    def degree(self, v):
        return bin(self.rows[v]).count("1")

    def neighbors(self, v):
        row = self.rows[v]
        out = []
        while row:
            low = row & -row
            out.append(low.bit_length() - 1)
            row ^= low
        return out

    def edges(self):
        """All edges as (u, v) with u < v, sorted."""
        if self._edge_list is None:
            out = []
            for v in range(self.n):
                row = self.rows[v] >> (v + 1) << (v + 1)
                while row:
                    low = row & -row
                    out.append((v, low.bit_length() - 1))
                    row ^= low
            self._edge_list = tuple(out)
        return self._edge_list

    @property
    def m(self):
        return len(self.edges())

    def bit_rows(self):
        """Adjacency as a (n, words) uint64 array for the kernels."""
        if self._np_rows is None:
            words = 1 if self.n <= 64 else 2
            arr = np.zeros((self.n, words), dtype=np.uint64)
            for v, row in enumerate(self.rows):
                for w in range(words):
                    arr[v, w] = (row >> (64 * w)) & 0xFFFFFFFFFFFFFFFF
            arr.setflags(write=False)
            self._np_rows = arr
        return self._np_rows

    def neighbor_arrays(self):
        """(neighbors, degrees) padded int16 arrays for the kernels."""
        degs = np.array([self.degree(v) for v in range(self.n)], dtype=np.int16)
        width = max(1, int(degs.max()))
        nbr = np.zeros((self.n, width), dtype=np.int16)
        for v in range(self.n):
            for i, u in enumerate(self.neighbors(v)):
                nbr[v, i] = u
        return nbr, degs

    def relabeled(self, img):
        """The graph with vertex v renamed to img[v]."""
        rows = [0] * self.n
        for v in range(self.n):
            r = 0
            for u in self.neighbors(v):
                r |= 1 << img[u]
            rows[img[v]] = r
        labels = None
        if self.labels is not None:
            labels = [b""] * self.n
            for v in range(self.n):
                labels[img[v]] = self.labels[v]
        return Graph(self.n, rows, labels)

    def with_labels(self, labels):
        return Graph(self.n, self.rows, labels)

    def adjacency_equal(self, other):
        return self.n == other.n and self.rows == other.rows

    # -- dunder ------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows and self.labels == other.labels

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.rows))
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def from_edge_list(n, edges, labels=None):
    """Build a graph from an edge list; duplicates collapse, loops are errors."""
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRangeError(f"edge ({u}, {v}) outside 0..{n - 1}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows, labels)


# -- graph6 ------------------------------------------------------------------


def _g6_encode_size(n):
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, (n >> 12) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63])
    raise CapExceededError("graph6 long form beyond 258047 vertices not supported")


def _g6_decode_size(data):
    if not data:
        raise MalformedHeaderError("empty graph6 input")
    b0 = data[0]
    if b0 == 126:
        if len(data) >= 2 and data[1] == 126:
            raise MalformedHeaderError("graph6 >=258048-vertex form not supported")
        if len(data) < 4:
            raise MalformedHeaderError("truncated graph6 size header")
        parts = data[1:4]
        if any(not 63 <= b <= 126 for b in parts):
            raise MalformedHeaderError("invalid graph6 size bytes")
        n = ((parts[0] - 63) << 12) | ((parts[1] - 63) << 6) | (parts[2] - 63)
        return n, 4
    if not 63 <= b0 <= 125:
        raise MalformedHeaderError(f"invalid graph6 header byte {b0}")
    return b0 - 63, 1


def graph6_encode(g):
    """Encode as graph6 bytes (upper triangle, column order, 6-bit groups)."""
    n = g.n
    out = bytearray(_g6_encode_size(n))
    bits = []
    for v in range(1, n):
        for u in range(v):
            bits.append(1 if g.has_edge(u, v) else 0)
    while len(bits) % 6:
        bits.append(0)
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i : i + 6]:
            val = (val << 1) | b
        out.append(val + 63)
    return bytes(out)


def graph6_decode(data):
    """Decode graph6 bytes (or str) to a Graph."""
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if data.startswith(b">>graph6<<"):
        data = data[len(b">>graph6<<") :]
    n, pos = _g6_decode_size(data)
    if n < 1:
        raise MalformedHeaderError("graph6 size 0 is not supported here")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < nbytes:
        raise MalformedHeaderError("graph6 body shorter than the header implies")
    if len(body) > nbytes:
        raise TrailingGarbageError(f"{len(body) - nbytes} unexpected trailing bytes")
    bits = []
    for b in body:
        if not 63 <= b <= 126:
            raise MalformedHeaderError(f"invalid graph6 body byte {b}")
        val = b - 63
        for k in range(5, -1, -1):
            bits.append(val >> k & 1)
    edges = []
    i = 0
    for v in range(1, n):
        for u in range(v):
            if bits[i]:
                edges.append((u, v))
            i += 1
    if any(bits[nbits:]):
        raise TrailingGarbageError("nonzero padding bits in graph6 body")
    return from_edge_list(n, edges)


# -- JSON edge-list form -------------------------------------------------------


def to_json_dict(g):
    d = {"n": g.n, "edges": [list(e) for e in g.edges()]}
    if g.labels is not None:
        d["labels"] = [lbl.decode("utf-8", "backslashreplace") for lbl in g.labels]
    return d


def to_json(g):
    return json.dumps(to_json_dict(g), sort_keys=True)


def from_json_dict(d):
    labels = d.get("labels")
    if labels is not None:
        labels = [s.encode("utf-8") for s in labels]
    return from_edge_list(d["n"], [tuple(e) for e in d["edges"]], labels)


def from_json(s):
    return from_json_dict(json.loads(s))


# -- predicates ----------------------------------------------------------------


def is_connected(g):
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        row = frontier
        while row:
            low = row & -row
            nxt |= g.rows[low.bit_length() - 1]
            row ^= low
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << g.n) - 1


def is_bipartite(g):
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in g.neighbors(v):
                if color[u] < 0:
                    color[u] = color[v] ^ 1
                    queue.append(u)
                elif color[u] == color[v]:
                    return False
    return True


def bipartition(g):
    """A 2-coloring as (side0, side1) vertex lists, or None if not bipartite."""
    if not is_bipartite(g):
        return None
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in g.neighbors(v):
                if color[u] < 0:
                    color[u] = color[v] ^ 1
                    queue.append(u)
    return (
        [v for v in range(g.n) if color[v] == 0],
        [v for v in range(g.n) if color[v] == 1],
    )


def degree_sequence(g):
    """Degrees sorted ascending."""
    return sorted(g.degree(v) for v in range(g.n))


def is_regular(g, d=None):
    degs = {g.degree(v) for v in range(g.n)}
    if len(degs) != 1:
        return False
    return d is None or degs == {d}


def shortest_cycle_through_edge(g, e):
    """Length of the shortest cycle containing e, or None when e is a bridge.

    Computed as the shortest u-v path in g minus e, plus one.
    """
    u, v = edge(*e)
    if not g.has_edge(u, v):
        raise EdgeNotPresentError(f"edge {e} not in graph")
    dist = [-1] * g.n
    dist[u] = 0
    queue = deque([u])
    while queue:
        x = queue.popleft()
        if x == v:
            return dist[v] + 1
        for y in g.neighbors(x):
            if (x, y) in ((u, v), (v, u)):
                continue
            if dist[y] < 0:
                dist[y] = dist[x] + 1
                queue.append(y)
    return None


def girth(g):
    """Length of the shortest cycle of g, or None for a forest."""
    best = None
    for e in g.edges():
        l = shortest_cycle_through_edge(g, e)
        if l is not None and (best is None or l < best):
            best = l
    return best


def complement(g):
    full = (1 << g.n) - 1
    rows = [(~g.rows[v]) & full & ~(1 << v) for v in range(g.n)]
    return Graph(g.n, rows, g.labels)
