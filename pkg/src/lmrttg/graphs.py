"""Bitset-backed simple graphs and two-terminal graphs.

Vertices are the integers ``0..n-1``.  Adjacency is stored as one integer
bit row per vertex (bit ``v`` of ``rows[u]`` is set iff ``uv`` is an edge),
which keeps complement/join/union and triangle counting down to a handful
of word operations.  All graph values are immutable after construction, so
they can be shared freely between parallel workers.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product

from .errors import DomainError, SizeLimitError

#: Default vertex bound for the brute-force canonical forms.
CANONICAL_MAX_N = 10


class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``."""

    __slots__ = ("n", "rows", "_m")

    def __init__(self, n: int, rows) -> None:
        rows = tuple(rows)
        if n < 0 or len(rows) != n:
            raise DomainError("row count must equal the vertex count")
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row & ~full:
                raise DomainError("adjacency bit outside the vertex range")
            if (row >> v) & 1:
                raise DomainError("self-loops are not allowed")
        self.n = n
        self.rows = rows
        self._m = None

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, tuple(full ^ (1 << v) for v in range(n)))

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise DomainError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise DomainError(f"edge ({u},{v}) outside vertex range")
            if (rows[u] >> v) & 1:
                raise DomainError(f"duplicate edge ({u},{v})")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows)

    @property
    def m(self) -> int:
        """Edge count."""
        if self._m is None:
            self._m = sum(row.bit_count() for row in self.rows) // 2
        return self._m

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> tuple:
        return tuple(row.bit_count() for row in self.rows)

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def edges(self) -> list:
        """All edges as sorted ``(u, v)`` pairs with ``u < v``."""
        out = []
        for u in range(self.n):
            w = self.rows[u] >> (u + 1)
            v = u + 1
            while w:
                if w & 1:
                    out.append((u, v))
                w >>= 1
                v += 1
        return out

    def relabel(self, perm) -> "Graph":
        """Image under the vertex bijection ``perm`` (old index -> new index)."""
        rows = [0] * self.n
        for u, row in enumerate(self.rows):
            r = 0
            w = row
            while w:
                b = w & -w
                r |= 1 << perm[b.bit_length() - 1]
                w ^= b
            rows[perm[u]] = r
        return Graph(self.n, rows)

    def check(self) -> None:
        """Assert structural invariants (used by the test suite)."""
        for u in range(self.n):
            for v in range(u + 1, self.n):
                assert self.has_edge(u, v) == self.has_edge(v, u)
        assert sum(self.degrees()) == 2 * self.m

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class TwoTerminalGraph:
    """A graph together with a distinguished pair of terminal vertices."""

    graph: Graph
    s: int
    t: int

    def __post_init__(self) -> None:
        n = self.graph.n
        if not (0 <= self.s < n and 0 <= self.t < n):
            raise DomainError("terminals must be vertices of the graph")
        if self.s == self.t:
            raise DomainError("terminals must be distinct")

    def __repr__(self) -> str:
        return f"TwoTerminalGraph(n={self.graph.n}, m={self.graph.m}, s={self.s}, t={self.t})"


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full ^ row ^ (1 << v) for v, row in enumerate(g.rows)))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """Union on disjoint vertex sets; the vertices of ``h`` are shifted up by ``g.n``."""
    rows = list(g.rows) + [row << g.n for row in h.rows]
    return Graph(g.n + h.n, rows)


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus every cross edge between the two parts."""
    gmask = (1 << g.n) - 1
    hmask = ((1 << h.n) - 1) << g.n
    rows = [row | hmask for row in g.rows]
    rows += [(row << g.n) | gmask for row in h.rows]
    return Graph(g.n + h.n, rows)


def is_universal(g, v: int) -> bool:
    """True iff ``v`` is adjacent to every other vertex."""
    if isinstance(g, TwoTerminalGraph):
        g = g.graph
    if not 0 <= v < g.n:
        raise DomainError("vertex out of range")
    return g.degree(v) == g.n - 1


@lru_cache(maxsize=None)
def vertex_pairs(n: int) -> tuple:
    """All unordered pairs ``(u, v)`` with ``u < v`` in lexicographic order."""
    return tuple((u, v) for u in range(n) for v in range(u + 1, n))


@lru_cache(maxsize=None)
def pair_index(n: int) -> dict:
    """Map from an ordered pair ``(u, v)``, ``u < v``, to its slot in vertex_pairs."""
    return {p: i for i, p in enumerate(vertex_pairs(n))}


# ---------------------------------------------------------------------------
# Canonical forms.
#
# Keys are computed as the minimum edge bitmask over all relabelings that
# send each vertex to a slot of the same degree (and terminals onto the slot
# pair {0, 1}).  Degrees are preserved by isomorphism, so restricting to
# degree-compatible relabelings loses nothing, while cutting the search from
# (n-2)!*2 maps to the product of the degree-class factorials.
# ---------------------------------------------------------------------------


def _assignments(groups):
    """Yield vertex->slot maps; each group fills its consecutive slot block."""
    starts = []
    slot = 0
    for grp in groups:
        starts.append(slot)
        slot += len(grp)
    for combo in product(*(permutations(grp) for grp in groups)):
        perm = {}
        for start, arranged in zip(starts, combo):
            for offset, v in enumerate(arranged):
                perm[v] = start + offset
        yield perm


def _min_mask(g: Graph, groups) -> int:
    idx = pair_index(g.n)
    edges = g.edges()
    best = None
    for perm in _assignments(groups):
        mask = 0
        for u, v in edges:
            a = perm[u]
            b = perm[v]
            if a > b:
                a, b = b, a
            mask |= 1 << idx[(a, b)]
        if best is None or mask < best:
            best = mask
    return best or 0


def _degree_groups(vertices, degs):
    """Group vertices by degree, highest degree first."""
    by_deg = {}
    for v in vertices:
        by_deg.setdefault(degs[v], []).append(v)
    return [by_deg[d] for d in sorted(by_deg, reverse=True)]


def canonical_key(tg: TwoTerminalGraph, max_n: int = CANONICAL_MAX_N):
    """Complete invariant of (graph, unordered terminal pair) isomorphism.

    Two two-terminal graphs get equal keys iff some graph isomorphism maps
    the one terminal pair onto the other (as an unordered pair).
    """
    g = tg.graph
    if g.n > max_n:
        raise SizeLimitError(f"canonical form limited to n <= {max_n} (got {g.n})")
    degs = g.degrees()
    inner = [v for v in range(g.n) if v != tg.s and v != tg.t]
    groups = [[tg.s, tg.t]] + _degree_groups(inner, degs)
    term_degs = tuple(sorted((degs[tg.s], degs[tg.t])))
    inner_degs = tuple(sorted((degs[v] for v in inner), reverse=True))
    return (g.n, term_degs, inner_degs, _min_mask(g, groups))


def canonical_key_ordered(tg: TwoTerminalGraph, max_n: int = CANONICAL_MAX_N):
    """Like canonical_key but with the terminals taken as an ordered pair."""
    g = tg.graph
    if g.n > max_n:
        raise SizeLimitError(f"canonical form limited to n <= {max_n} (got {g.n})")
    degs = g.degrees()
    inner = [v for v in range(g.n) if v != tg.s and v != tg.t]
    groups = [[tg.s], [tg.t]] + _degree_groups(inner, degs)
    inner_degs = tuple(sorted((degs[v] for v in inner), reverse=True))
    return (g.n, degs[tg.s], degs[tg.t], inner_degs, _min_mask(g, groups))


def graph_key(g: Graph, max_n: int = 8):
    """Complete isomorphism invariant for plain graphs (small n only)."""
    if g.n > max_n:
        raise SizeLimitError(f"canonical form limited to n <= {max_n} (got {g.n})")
    degs = g.degrees()
    groups = _degree_groups(range(g.n), degs)
    return (g.n, tuple(sorted(degs, reverse=True)), _min_mask(g, groups))


def canonical_form(tg: TwoTerminalGraph, max_n: int = CANONICAL_MAX_N) -> TwoTerminalGraph:
    """A canonically labeled copy: terminals at 0,1, minimal edge mask."""
    key = canonical_key(tg, max_n=max_n)
    mask = key[-1]
    pairs = vertex_pairs(tg.graph.n)
    edges = [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1]
    return TwoTerminalGraph(Graph.from_edges(tg.graph.n, edges), 0, 1)


# ---------------------------------------------------------------------------
# Serialization: the graph JSON format and DOT export.
# ---------------------------------------------------------------------------


def to_json_obj(obj) -> dict:
    if isinstance(obj, TwoTerminalGraph):
        d = {"n": obj.graph.n, "terminals": [obj.s, obj.t], "edges": obj.graph.edges()}
    else:
        d = {"n": obj.n, "edges": obj.edges()}
    d["edges"] = sorted([min(u, v), max(u, v)] for u, v in d["edges"])
    return d


def from_json_obj(d):
    g = Graph.from_edges(d["n"], [tuple(e) for e in d["edges"]])
    if "terminals" in d and d["terminals"] is not None:
        s, t = d["terminals"]
        return TwoTerminalGraph(g, s, t)
    return g


def to_json(obj) -> str:
    return json.dumps(to_json_obj(obj), separators=(",", ":"), sort_keys=True)


def from_json(text: str):
    return from_json_obj(json.loads(text))


def to_dot(obj) -> str:
    terminals = ()
    g = obj
    if isinstance(obj, TwoTerminalGraph):
        terminals = (obj.s, obj.t)
        g = obj.graph
    lines = ["graph G {"]
    for v in range(g.n):
        shape = "doublecircle" if v in terminals else "circle"
        lines.append(f'  {v} [shape={shape}];')
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
