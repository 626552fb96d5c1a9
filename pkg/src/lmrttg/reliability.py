"""Exact reliability coefficients and the brute-force optimum search.

The coefficient vector ``(N_1, ..., N_m)`` counts, for each i, the i-edge
spanning subgraphs that still join the terminals.  The graph whose vector
is lexicographically maximal over all two-terminal graphs with the same
(n, m) beats every peer near p = 0; the search below finds all of them.

The search never assumes anything about the winner's shape.  It streams
every labeled candidate (terminals fixed at 0 and 1, which every
two-terminal graph can be relabeled to), prunes by exactly computed
``(N_1, N_2, N_3)`` prefixes (the first three rounds of the iterative
argmax filtration), and only then enumerates full edge subsets
for the survivors.
"""

from __future__ import annotations

import os
from fractions import Fraction
from itertools import combinations
from math import comb

from .errors import DomainError, SizeLimitError
from .graphs import Graph, TwoTerminalGraph, canonical_form, canonical_key, canonical_key_ordered, vertex_pairs

DEFAULT_MAX_EDGES = 24
DEFAULT_MAX_VERTICES = 7


def _max_edges() -> int:
    value = os.environ.get("LMRTTG_MAX_ENUM")
    return int(value) if value else DEFAULT_MAX_EDGES


def _connects(pairs_bits, mask: int, sbit: int, tbit: int) -> bool:
    """Whether the edge subset ``mask`` joins s to t (bitset fixpoint)."""
    active = []
    w = mask
    while w:
        b = w & -w
        active.append(pairs_bits[b.bit_length() - 1])
        w ^= b
    reach = sbit
    changed = True
    while changed and not reach & tbit:
        changed = False
        for ub, vb in active:
            if reach & ub:
                if not reach & vb:
                    reach |= vb
                    changed = True
            elif reach & vb:
                reach |= ub
                changed = True
    return bool(reach & tbit)


def _nvec(n: int, s: int, t: int, edges, max_edges: int) -> tuple:
    m = len(edges)
    if m > max_edges:
        raise SizeLimitError(f"subset enumeration limited to m <= {max_edges} (got {m})")
    counts = [0] * (m + 1)
    st = (min(s, t), max(s, t))
    sbit, tbit = 1 << s, 1 << t
    rest = [e for e in edges if (min(e), max(e)) != st]
    if len(rest) < m:
        # every subset containing the terminal edge connects
        for i in range(1, m + 1):
            counts[i] += comb(m - 1, i - 1)
    pairs_bits = [(1 << u, 1 << v) for u, v in rest]
    for mask in range(1, 1 << len(rest)):
        if _connects(pairs_bits, mask, sbit, tbit):
            counts[mask.bit_count()] += 1
    return tuple(counts[1:])


def n_vector(tg: TwoTerminalGraph, max_edges: int = None) -> tuple:
    """Exact coefficient vector ``(N_1, ..., N_m)`` by subset enumeration."""
    if max_edges is None:
        max_edges = _max_edges()
    return _nvec(tg.graph.n, tg.s, tg.t, tg.graph.edges(), max_edges)


def prefix3(tg: TwoTerminalGraph) -> tuple:
    """``(N_1, N_2, N_3)`` by closed combinatorial counts (no enumeration).

    N_1 is the terminal edge indicator.  A 2-subset connects iff it
    contains the terminal edge or is a length-two path.  A 3-subset
    connects iff it contains the terminal edge, contains a length-two path
    plus any other edge, or is itself a length-three path.
    """
    g, s, t = tg.graph, tg.s, tg.t
    m = g.m
    if m == 0:
        return ()
    rows = g.rows
    common = (rows[s] & rows[t]).bit_count()
    inner_mask = ((1 << g.n) - 1) ^ (1 << s) ^ (1 << t)
    three_paths = 0
    w = rows[s] & inner_mask
    while w:
        b = w & -w
        u = b.bit_length() - 1
        three_paths += (rows[u] & rows[t] & inner_mask).bit_count()
        w ^= b
    n1 = 1 if g.has_edge(s, t) else 0
    out = [n1]
    if m >= 2:
        out.append((m - 1) * n1 + common)
    if m >= 3:
        out.append(n1 * comb(m - 1, 2) + common * (m - 2 - n1) + three_paths)
    return tuple(out)


def reliability_at(tg: TwoTerminalGraph, p, max_edges: int = None) -> Fraction:
    """Exact terminal-connection probability at edge survival rate ``p``."""
    p = Fraction(p)
    if not 0 <= p <= 1:
        raise DomainError(f"survival probability must lie in [0,1]; got {p}")
    counts = n_vector(tg, max_edges=max_edges)
    m = len(counts)
    q = 1 - p
    return sum((c * p**i * q ** (m - i) for i, c in enumerate(counts, start=1)), Fraction(0))


def lex_compare(a, b) -> int:
    """Lexicographic order on coefficient vectors: -1, 0 or +1."""
    a, b = tuple(a), tuple(b)
    if len(a) != len(b):
        raise DomainError("coefficient vectors must have equal length")
    if a < b:
        return -1
    return 1 if a > b else 0


def filtration(candidates, level: int, max_edges: int = None):
    """Iterative argmax refinement by N_1, then N_2, ... up to ``level``.

    All candidates must share (n, m).  Carried to ``level = m`` this yields
    exactly the set of locally most reliable graphs among the candidates.
    """
    cands = list(candidates)
    if not cands:
        raise DomainError("filtration needs at least one candidate")
    nm = {(c.graph.n, c.graph.m) for c in cands}
    if len(nm) != 1:
        raise DomainError("candidates must share vertex and edge counts")
    m = cands[0].graph.m
    if not 1 <= level <= m:
        raise DomainError(f"level must lie in 1..m; got {level}")
    vecs = [n_vector(c, max_edges=max_edges) for c in cands]
    keep = list(range(len(cands)))
    for i in range(level):
        best = max(vecs[idx][i] for idx in keep)
        keep = [idx for idx in keep if vecs[idx][i] == best]
    return [cands[idx] for idx in keep]


def enumerate_classes(n: int, m: int, max_n: int = None):
    """One representative per two-terminal isomorphism class, terminals 0,1.

    Every two-terminal graph is isomorphic to one with terminals so
    labeled, hence this streams all of T_{n,m} up to isomorphism.
    """
    if max_n is None:
        max_n = DEFAULT_MAX_VERTICES
    if n > max_n:
        raise SizeLimitError(f"class enumeration limited to n <= {max_n} (got {n})")
    pairs = vertex_pairs(n)
    if not 0 <= m <= len(pairs):
        raise DomainError(f"need 0 <= m <= C(n,2); got n={n}, m={m}")
    seen = set()
    for combo in combinations(range(len(pairs)), m):
        tg = TwoTerminalGraph(Graph.from_edges(n, [pairs[i] for i in combo]), 0, 1)
        key = canonical_key(tg)
        if key not in seen:
            seen.add(key)
            yield tg


def _prefix_scan(n: int, m: int):
    """Stream all labeled candidates containing the terminal edge and keep
    the max ``(N_2, N_3)`` prefix (N_1 = 1 is forced: some candidate always
    has the terminal edge, and N_1 dominates lexicographically).

    Returns ``(survivor edge lists, candidates examined)``.
    """
    pairs = vertex_pairs(n)
    e_total = len(pairs)
    inner_mask = ((1 << n) - 1) ^ 3
    best = None
    survivors = []
    examined = 0
    for rest in combinations(range(1, e_total), m - 1):
        examined += 1
        rows = [0] * n
        rows[0] = 2
        rows[1] = 1
        for e in rest:
            u, v = pairs[e]
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        common = (rows[0] & rows[1]).bit_count()
        n2 = (m - 1) + common
        if best is not None and n2 < best[0]:
            continue
        three_paths = 0
        w = rows[0] & inner_mask
        while w:
            b = w & -w
            three_paths += (rows[b.bit_length() - 1] & rows[1] & inner_mask).bit_count()
            w ^= b
        key = (n2, comb(m - 1, 2) + common * (m - 3) + three_paths)
        if best is None or key > best:
            best = key
            survivors = [rest]
        elif key == best:
            survivors.append(rest)
    edge_lists = [[(0, 1)] + [pairs[e] for e in rest] for rest in survivors]
    return edge_lists, examined


def _search(n: int, m: int, max_n: int = None, max_edges: int = None) -> dict:
    """Full optimum search; returns winners plus bookkeeping for reports."""
    if max_n is None:
        max_n = DEFAULT_MAX_VERTICES
    if max_edges is None:
        max_edges = _max_edges()
    if n > max_n:
        raise SizeLimitError(f"search limited to n <= {max_n} (got {n}); set LMRTTG_MAX_ENUM/flags to raise")
    if m > max_edges:
        raise SizeLimitError(f"search limited to m <= {max_edges} (got {m})")
    if n < 2 or not 1 <= m <= comb(n, 2):
        raise DomainError(f"need n >= 2 and 1 <= m <= C(n,2); got n={n}, m={m}")
    edge_lists, examined = _prefix_scan(n, m)
    scored = [(_nvec(n, 0, 1, edges, max_edges), edges) for edges in edge_lists]
    best_vec = max(vec for vec, _ in scored)
    reps = {}
    ordered_keys = set()
    for vec, edges in scored:
        if vec != best_vec:
            continue
        tg = TwoTerminalGraph(Graph.from_edges(n, edges), 0, 1)
        key = canonical_key(tg)
        ordered_keys.add(canonical_key_ordered(tg))
        if key not in reps:
            reps[key] = canonical_form(tg)
    return {
        "n": n,
        "m": m,
        "winners": [reps[k] for k in sorted(reps)],
        "n_vector": best_vec,
        "examined": examined,
        "survivors": len(scored),
        "unique_ordered": len(ordered_keys) == 1,
    }


def find_lmrttg(n: int, m: int, max_n: int = None, max_edges: int = None) -> list:
    """All lexicographic maximizers, one canonical representative each."""
    return _search(n, m, max_n=max_n, max_edges=max_edges)["winners"]
