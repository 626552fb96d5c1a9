"""Exact graph invariants and their closed forms on the named families.

Everything here is integer arithmetic.  The one half-integer intermediate
(the ``n - 9/2`` factor in the complement-sum identity) is carried as an
even product and divided at the end, with the divisibility asserted.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import DomainError, FamilyDoesNotExist
from .families import FamilyTag, family_exists, quasi_complete_params, quasi_star_params
from .graphs import Graph, complement


def zagreb1(g: Graph) -> int:
    """Sum of squared degrees."""
    return sum(d * d for d in g.degrees())


def zagreb2(g: Graph) -> int:
    """Sum over edges of the endpoint degree products."""
    degs = g.degrees()
    return sum(degs[u] * degs[v] for u, v in g.edges())


def count_triangles(g: Graph) -> int:
    rows = g.rows
    total = 0
    for u, v in g.edges():
        total += (rows[u] & rows[v]).bit_count()
    return total // 3


def count_p3(g: Graph) -> int:
    """Paths on three vertices, i.e. pairs of edges sharing an endpoint."""
    return sum(comb(d, 2) for d in g.degrees())


def count_p4(g: Graph) -> int:
    """Paths on four vertices, each counted once.

    An ordered walk u-v-w-x with distinct endpoints is a choice of central
    edge vw plus neighbors u != w of v and x != v of w; the u = x cases are
    exactly three per triangle.  Halving the ordered count gives
    ``M2 - M1 + m - 3*k3``.
    """
    return zagreb2(g) - zagreb1(g) + g.m - 3 * count_triangles(g)


def h_invariant(g: Graph) -> int:
    """Second Zagreb index minus six times the triangle count."""
    return zagreb2(g) - 6 * count_triangles(g)


@dataclass(frozen=True)
class InvariantBundle:
    m1: int
    m2: int
    k3: int
    p3: int
    p4: int
    h_value: int
    m: int


def invariant_bundle(g: Graph) -> InvariantBundle:
    m1 = zagreb1(g)
    m2 = zagreb2(g)
    k3 = count_triangles(g)
    p3 = count_p3(g)
    p4 = m2 - m1 + g.m - 3 * k3
    return InvariantBundle(m1=m1, m2=m2, k3=k3, p3=p3, p4=p4, h_value=m2 - 6 * k3, m=g.m)


def ramsey_residuals(g: Graph) -> tuple:
    """Left-minus-right of the three complementation identities.

    The triangle, three-path and four-path counts of a graph and its
    complement satisfy linear identities in n, m and p3(G); all three
    residuals are zero for every simple graph.
    """
    n, m = g.n, g.m
    gc = complement(g)
    k3g, k3c = count_triangles(g), count_triangles(gc)
    p3g, p3c = count_p3(g), count_p3(gc)
    p4g, p4c = count_p4(g), count_p4(gc)
    r_k3 = (k3g + k3c) - (comb(n, 3) - m * (n - 2) + p3g)
    r_p3 = (p3g + p3c) - (2 * p3g + (n - 2) * (comb(n, 2) - 2 * m))
    r_p4 = (p4g + p4c) - (
        2 * (n - 5) * p3g
        + 2 * m * m
        - 8 * m
        + 3 * m * n
        - 3 * comb(n, 3)
        + (n - 2) ** 2 * (comb(n, 2) - 3 * m)
    )
    return (r_k3, r_p3, r_p4)


# ---------------------------------------------------------------------------
# Closed forms on the families.
# ---------------------------------------------------------------------------


def quasi_complete_h(k: int, j: int) -> int:
    """Closed form of the h-invariant of the quasi-complete graph.

    Equals ``k^4/2 - k^3/2 - 3jk^2 + (j^2+7j+1)k - (5j^2+7j)/2``; both
    halved terms are even, so the value is an exact integer.
    """
    if not 1 <= j <= k:
        raise DomainError(f"need 1 <= j <= k; got k={k}, j={j}")
    num = k**4 - k**3 - 6 * j * k * k + 2 * (j * j + 7 * j + 1) * k - (5 * j * j + 7 * j)
    assert num % 2 == 0
    return num // 2


def quasi_complete_m1(k: int, j: int) -> int:
    """First Zagreb index of the quasi-complete graph, from its degree data."""
    if not 1 <= j <= k:
        raise DomainError(f"need 1 <= j <= k; got k={k}, j={j}")
    return (k - j) * k * k + j * (k - 1) ** 2 + (k - j) ** 2


def quasi_star_m1(n: int, kp: int, jp: int) -> int:
    """First Zagreb index of the quasi-star graph, from its degree data.

    Accepts ``kp = n`` (the empty graph's degenerate parameters), where the
    formula correctly collapses to zero.
    """
    if not (1 <= jp <= kp <= n):
        raise DomainError(f"need 1 <= j' <= k' <= n; got n={n}, k'={kp}, j'={jp}")
    return (
        (n - kp - 1 + jp) ** 2
        + jp * (n - kp) ** 2
        + (kp - jp) * (n - kp - 1) ** 2
        + (n - kp - 1) * (n - 1) ** 2
    )


def h_sum_offset(n: int, m: int) -> int:
    """The additive constant in the complement-sum identity for h.

    ``h(G) + h(complement(G)) = (n - 9/2) M1(G) + offset(n, m)`` for every
    graph on n vertices and m edges.
    """
    return 2 * m * m - 6 * comb(n, 3) + (n - 1) ** 2 * comb(n, 2) - 3 * (n - 1) * (n - 3) * m


def family_h(n: int, m: int, tag: FamilyTag) -> int:
    """h-invariant of a family member, by closed form.

    C-side values come from the quasi-complete closed form and the fixed
    offsets between variants; S-side values use the complement-sum identity
    (the complement of the quasi-star is the quasi-complete on the
    complementary edge count).  Raises FamilyDoesNotExist for absent tags.
    """
    tag = FamilyTag(tag)
    if not family_exists(n, m, tag):
        raise FamilyDoesNotExist(f"{tag} has no member at n={n}, m={m}")
    k, j = quasi_complete_params(m)
    if tag is FamilyTag.C1:
        return quasi_complete_h(k, j)
    if tag is FamilyTag.C3:
        return quasi_complete_h(k, j) + 3
    if tag is FamilyTag.C2:
        num = (2 * k - 7) * (k - j) * (k - j - 1)
        assert num % 2 == 0
        return quasi_complete_h(k, j) - num // 2
    kp, jp = quasi_star_params(n, m)
    mc = comb(n, 2) - m
    prod = (2 * n - 9) * quasi_star_m1(n, kp, jp)
    assert prod % 2 == 0  # M1 is always even
    s1 = prod // 2 + h_sum_offset(n, m) - quasi_complete_h(*quasi_complete_params(mc))
    if tag is FamilyTag.S1:
        return s1
    if tag is FamilyTag.S3:
        return s1 - 3
    num = (2 * kp - 7) * (kp - jp) * (kp - jp - 1)
    assert num % 2 == 0
    return s1 + num // 2
