"""Immutable simple undirected graphs stored as per-vertex bit rows."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import (
    CannotDeleteLastVertexError,
    Graph6ParseError,
    InvalidPermutationError,
    InvalidVertexError,
)

MAX_N = 62
GRAPH6_HEADER = b">>graph6<<"


def bits_of(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class VertexSet:
    """A set of vertex indices backed by a bit mask."""

    bits: int = 0

    @classmethod
    def of(cls, vertices: Iterable[int]) -> VertexSet:
        mask = 0
        for v in vertices:
            mask |= 1 << v
        return cls(mask)

    def __iter__(self) -> Iterator[int]:
        return bits_of(self.bits)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and v >= 0 and bool(self.bits >> v & 1)

    def __or__(self, other: VertexSet) -> VertexSet:
        return VertexSet(self.bits | other.bits)

    def __and__(self, other: VertexSet) -> VertexSet:
        return VertexSet(self.bits & other.bits)

    def __sub__(self, other: VertexSet) -> VertexSet:
        return VertexSet(self.bits & ~other.bits)

    def __repr__(self) -> str:
        return "{" + ",".join(map(str, self)) + "}"


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` has bit ``u`` set iff ``uv`` is an edge. Instances are
    validated on construction and never mutated.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_N:
            raise ValueError(f"vertex count must be in 1..{MAX_N}, got {self.n}")
        if len(self.adj) != self.n:
            raise ValueError(f"expected {self.n} rows, got {len(self.adj)}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"row {v} has bits beyond vertex {self.n - 1}")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in bits_of(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidVertexError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @classmethod
    def from_graph6(cls, data: bytes | str) -> Graph:
        return decode_graph6(data)

    def _check(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self.n):
            raise InvalidVertexError(f"vertex {v!r} not in 0..{self.n - 1}")

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        self._check(v)
        return self.adj[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.adj)

    def degree_multiset(self) -> tuple[int, ...]:
        return tuple(sorted(self.degrees()))

    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits_of(self.adj[u] >> (u + 1) << (u + 1))]

    def neighborhood(self, v: int) -> VertexSet:
        self._check(v)
        return VertexSet(self.adj[v])

    def closed_neighborhood(self, v: int) -> VertexSet:
        self._check(v)
        return VertexSet(self.adj[v] | 1 << v)

    def delete_vertex(self, v: int) -> Graph:
        """Return ``G - v``; vertices above ``v`` shift down by one."""
        self._check(v)
        if self.n == 1:
            raise CannotDeleteLastVertexError("cannot delete the only vertex")
        low = (1 << v) - 1
        rows = []
        for u, row in enumerate(self.adj):
            if u != v:
                rows.append((row & low) | (row >> (v + 1) << v))
        return Graph(self.n - 1, tuple(rows))

    def add_vertex(self, neighbors: int) -> Graph:
        """Return a copy with a new vertex ``n`` adjacent to the vertices in mask ``neighbors``."""
        if neighbors & ~self.vertex_mask:
            raise InvalidVertexError("neighbor mask exceeds vertex range")
        new = 1 << self.n
        rows = [row | new if neighbors >> u & 1 else row for u, row in enumerate(self.adj)]
        rows.append(neighbors)
        return Graph(self.n + 1, tuple(rows))

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph with edge ``(perm[u], perm[v])`` for every edge ``(u, v)``."""
        perm = tuple(perm)
        if len(perm) != self.n or sorted(perm) != list(range(self.n)):
            raise InvalidPermutationError(f"not a permutation of 0..{self.n - 1}: {perm}")
        rows = [0] * self.n
        for u, row in enumerate(self.adj):
            image = 0
            for w in bits_of(row):
                image |= 1 << perm[w]
            rows[perm[u]] = image
        return Graph(self.n, tuple(rows))

    def to_graph6(self) -> bytes:
        return encode_graph6(self)

    def __str__(self) -> str:
        return self.to_graph6().decode("ascii")


def encode_graph6(g: Graph) -> bytes:
    out = bytearray([63 + g.n])
    acc = 0
    width = 0
    adj = g.adj
    for j in range(1, g.n):
        row = adj[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            width += 1
            if width == 6:
                out.append(acc + 63)
                acc = 0
                width = 0
    if width:
        out.append((acc << (6 - width)) + 63)
    return bytes(out)


def decode_graph6(data: bytes | str) -> Graph:
    """Parse one graph6 line (optional header, optional trailing newline)."""
    if isinstance(data, str):
        try:
            data = data.encode("ascii")
        except UnicodeEncodeError as exc:
            raise Graph6ParseError("non-ASCII character", exc.start) from None
    base = 0
    if data.startswith(GRAPH6_HEADER):
        base = len(GRAPH6_HEADER)
    body = data[base:]
    if body.endswith(b"\r\n"):
        body = body[:-2]
    elif body.endswith(b"\n"):
        body = body[:-1]
    if not body:
        raise Graph6ParseError("empty graph6 string", base)
    for pos, byte in enumerate(body):
        if not 63 <= byte <= 126:
            raise Graph6ParseError(f"byte {byte!r} outside 63..126", base + pos)
    n = body[0] - 63
    if n == 63:
        raise Graph6ParseError(f"multi-byte size form unsupported (n > {MAX_N})", base)
    if n == 0:
        raise Graph6ParseError("graph with zero vertices", base)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(body) < 1 + nbytes:
        raise Graph6ParseError(f"truncated: n={n} needs {nbytes} data bytes", base + len(body))
    if len(body) > 1 + nbytes:
        raise Graph6ParseError("trailing garbage", base + 1 + nbytes)
    pad = nbytes * 6 - nbits
    if pad and (body[nbytes] - 63) & ((1 << pad) - 1):
        raise Graph6ParseError("nonzero padding bits", base + nbytes)
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[1 + k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))


def complete(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star(leaves: int) -> Graph:
    """K_{1,leaves} with center 0."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def wheel(rim: int) -> Graph:
    """Hub 0 joined to a cycle on vertices 1..rim."""
    edges = [(0, i) for i in range(1, rim + 1)]
    edges += [(i, i % rim + 1) for i in range(1, rim + 1)]
    return Graph.from_edges(rim + 1, edges)


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for g in graphs:
        edges += [(u + offset, v + offset) for u, v in g.edges()]
        offset += g.n
    return Graph.from_edges(offset, edges)
