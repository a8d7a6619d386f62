"""Maximum matching and matching extension/exclusion checks.

Two independent routes are kept for every decision: a direct search
(blossom-based maximum matching, explicit enumeration of small matchings)
and a structural criterion route (odd-component counting over vertex
subsets).  The test suite relies on both routes agreeing on exhaustive
small-graph sweeps, so neither side may call into the other.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graphs import Graph, _component_masks, _mask_to_vertices, delete_vertices, is_connected

SUBSET_SCAN_CAP = 20


@dataclass(frozen=True)
class MatchingResult:
    """A matching as a sorted tuple of (u, v) pairs with u < v."""

    edges: tuple[tuple[int, int], ...]

    @property
    def size(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class Verdict:
    """Outcome of an extendability/excludability check.

    When holds is False the witness is re-checkable: a vertex set violating
    the criterion, a matching that fails to extend, or an edge with no
    avoiding perfect matching.  `reason` is a short machine-readable tag.
    """

    holds: bool
    method: str
    witness: object = None
    reason: str | None = None


# ---------------------------------------------------------------------------
# Maximum matching (blossom algorithm)
# ---------------------------------------------------------------------------

def _find_augmenting_path(g: Graph, match: list[int], root: int) -> bool:
    n = g.n
    parent = [-1] * n
    base = list(range(n))
    used = [False] * n
    used[root] = True
    queue = deque([root])

    def lca(a: int, b: int) -> int:
        seen = set()
        while True:
            a = base[a]
            seen.add(a)
            if match[a] == -1:
                break
            a = parent[match[a]]
        while True:
            b = base[b]
            if b in seen:
                return b
            b = parent[match[b]]

    def mark_path(v: int, stem: int, child: int, blossom: list[bool]) -> None:
        while base[v] != stem:
            blossom[base[v]] = True
            blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    while queue:
        v = queue.popleft()
        for to in g.neighbors(v):
            if base[v] == base[to] or match[v] == to:
                continue
            if to == root or (match[to] != -1 and parent[match[to]] != -1):
                # odd cycle: contract the blossom down to its stem
                stem = lca(v, to)
                blossom = [False] * n
                mark_path(v, stem, to, blossom)
                mark_path(to, stem, v, blossom)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = stem
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if match[to] == -1:
                    # augment along the alternating path back to the root
                    while to != -1:
                        prev = parent[to]
                        nxt = match[prev]
                        match[to] = prev
                        match[prev] = to
                        to = nxt
                    return True
                used[match[to]] = True
                queue.append(match[to])
    return False


def max_matching(g: Graph) -> MatchingResult:
    """A maximum matching of g."""
    n = g.n
    match = [-1] * n
    for v in range(n):
        if match[v] == -1:
            for u in g.neighbors(v):
                if match[u] == -1:
                    match[v] = u
                    match[u] = v
                    break
    for v in range(n):
        if match[v] == -1:
            _find_augmenting_path(g, match, v)
    edges = tuple(sorted((min(v, match[v]), max(v, match[v]))
                         for v in range(n) if match[v] > v))
    return MatchingResult(edges)


def matching_number(g: Graph) -> int:
    return max_matching(g).size


def has_perfect_matching(g: Graph) -> bool:
    return g.n % 2 == 0 and matching_number(g) == g.n // 2


def brute_force_matching_number(g: Graph) -> int:
    """Independent oracle: exhaustive search over all matchings (tiny graphs)."""
    edges = g.edges()

    def rec(i: int, used: int) -> int:
        best = 0
        for j in range(i, len(edges)):
            u, v = edges[j]
            if used >> u & 1 or used >> v & 1:
                continue
            best = max(best, 1 + rec(j + 1, used | 1 << u | 1 << v))
        return best

    return rec(0, 0)


# ---------------------------------------------------------------------------
# Berge-Tutte deficiency by exhaustive subset scan
# ---------------------------------------------------------------------------

def berge_tutte_deficiency(g: Graph) -> tuple[int, frozenset[int]]:
    """max over S of (odd components of g-S) - |S|, with a maximizing S.

    Exponential in n; refuses n > SUBSET_SCAN_CAP.  The matching number
    satisfies 2*nu = n - deficiency.
    """
    if g.n > SUBSET_SCAN_CAP:
        raise ValueError(f"subset scan capped at n <= {SUBSET_SCAN_CAP}")
    full = (1 << g.n) - 1
    best = -1
    best_mask = 0
    for smask in range(full + 1):
        odd = sum(1 for c in _component_masks(g.adj, full & ~smask)
                  if c.bit_count() % 2 == 1)
        d = odd - smask.bit_count()
        if d > best:
            best = d
            best_mask = smask
    return best, frozenset(_mask_to_vertices(best_mask))


# ---------------------------------------------------------------------------
# k-extendability
# ---------------------------------------------------------------------------

def _matchings_of_size(g: Graph, k: int):
    """All matchings of size k, as tuples of edges in index-increasing order."""
    edges = g.edges()

    def rec(start: int, used: int, acc: list):
        if len(acc) == k:
            yield tuple(acc)
            return
        for i in range(start, len(edges)):
            u, v = edges[i]
            if used >> u & 1 or used >> v & 1:
                continue
            acc.append(edges[i])
            yield from rec(i + 1, used | 1 << u | 1 << v, acc)
            acc.pop()

    yield from rec(0, 0, [])


def is_k_extendable(g: Graph, k: int) -> Verdict:
    """Direct check: every matching of size k extends to a perfect matching.

    Follows the definition's preconditions: graphs of odd order, of order
    below 2k+2, or without a perfect matching are not k-extendable (returned
    as holds=False, never as an error).
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    if g.n % 2 == 1:
        return Verdict(False, "direct", witness=frozenset(), reason="odd-order")
    if g.n < 2 * k + 2:
        return Verdict(False, "direct", witness=frozenset(), reason="too-few-vertices")
    if not has_perfect_matching(g):
        return Verdict(False, "direct", witness=frozenset(), reason="no-perfect-matching")
    for matching in _matchings_of_size(g, k):
        covered = [v for e in matching for v in e]
        rest, _ = delete_vertices(g, covered)
        if not has_perfect_matching(rest):
            return Verdict(False, "direct", witness=matching,
                           reason="non-extendable-matching")
    return Verdict(True, "direct")


def _has_k_independent_edges(g: Graph, mask: int, k: int) -> bool:
    """Does the subgraph induced on `mask` contain k pairwise disjoint edges?"""
    if k == 0:
        return True
    v = None
    mm = mask
    while mm:
        c = (mm & -mm).bit_length() - 1
        mm &= mm - 1
        if g.adj[c] & mask:
            v = c
            break
    if v is None:
        return False
    if _has_k_independent_edges(g, mask & ~(1 << v), k):
        return True
    nb = g.adj[v] & mask
    while nb:
        u = (nb & -nb).bit_length() - 1
        nb &= nb - 1
        if _has_k_independent_edges(g, mask & ~(1 << v) & ~(1 << u), k - 1):
            return True
    return False


def is_k_extendable_chen(g: Graph, k: int) -> Verdict:
    """Criterion route: o(g-S) <= |S| - 2k whenever g[S] has k disjoint edges.

    Uses only odd-component counting over subsets, never the blossom code,
    so it stays an independent witness for the direct check.
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    if g.n > SUBSET_SCAN_CAP:
        raise ValueError(f"subset scan capped at n <= {SUBSET_SCAN_CAP}")
    if g.n % 2 == 1:
        return Verdict(False, "criterion", witness=frozenset(), reason="odd-order")
    if g.n < 2 * k + 2:
        return Verdict(False, "criterion", witness=frozenset(), reason="too-few-vertices")
    full = (1 << g.n) - 1
    # Perfect matching precondition, via the subset-scan route.
    for smask in range(full + 1):
        odd = sum(1 for c in _component_masks(g.adj, full & ~smask)
                  if c.bit_count() % 2 == 1)
        if odd > smask.bit_count():
            return Verdict(False, "criterion",
                           witness=frozenset(_mask_to_vertices(smask)),
                           reason="no-perfect-matching")
    for smask in range(full + 1):
        if smask.bit_count() < 2 * k:
            continue
        if not _has_k_independent_edges(g, smask, k):
            continue
        odd = sum(1 for c in _component_masks(g.adj, full & ~smask)
                  if c.bit_count() % 2 == 1)
        if odd > smask.bit_count() - 2 * k:
            return Verdict(False, "criterion",
                           witness=frozenset(_mask_to_vertices(smask)),
                           reason="criterion-violated")
    return Verdict(True, "criterion")


# ---------------------------------------------------------------------------
# 1-excludability
# ---------------------------------------------------------------------------

def is_1_excludable(g: Graph) -> Verdict:
    """Direct check: for every edge e, g-e has a perfect matching."""
    if g.n % 2 == 1:
        return Verdict(False, "direct", witness=frozenset(), reason="odd-order")
    edges = g.edges()
    if not edges:
        return Verdict(True, "direct")
    base = max_matching(g)
    if base.size < g.n // 2:
        return Verdict(False, "direct", witness=edges[0],
                       reason="no-perfect-matching")
    in_base = set(base.edges)
    for e in edges:
        if e not in in_base:
            continue  # base matching itself avoids e
        u, v = e
        adj = list(g.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        if not has_perfect_matching(Graph(g.n, tuple(adj))):
            return Verdict(False, "direct", witness=e, reason="edge-forced")
    return Verdict(True, "direct")


def find_odd_bridges(g: Graph) -> frozenset[tuple[int, int]]:
    """Bridges whose removal splits their component into two odd halves."""
    full = (1 << g.n) - 1
    out = []
    for comp in _component_masks(g.adj, full):
        if comp.bit_count() % 2 == 1:
            continue  # two odd halves sum to an even component
        out.extend(_odd_bridges_in_component(g, comp))
    return frozenset(out)


def _odd_bridges_in_component(g: Graph, comp: int) -> list[tuple[int, int]]:
    found = []
    verts = _mask_to_vertices(comp)
    for v in verts:
        m = g.adj[v] & comp & (-1 << (v + 1))  # edges leaving v upward, inside comp
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            side = _flood_avoiding_edge(g, comp, v, u)
            if not side >> u & 1:  # (v,u) is a bridge of the component
                if side.bit_count() % 2 == 1 and (comp & ~side).bit_count() % 2 == 1:
                    found.append((v, u))
    return found


def _flood_avoiding_edge(g: Graph, comp: int, v: int, u: int):
    """Vertices reachable from v inside comp without using the edge (v,u)."""
    seen = 1 << v
    frontier = 1 << v
    while frontier:
        nxt = 0
        f = frontier
        while f:
            w = (f & -f).bit_length() - 1
            f &= f - 1
            nb = g.adj[w]
            if w == v:
                nb &= ~(1 << u)
            elif w == u:
                nb &= ~(1 << v)
            nxt |= nb
        frontier = nxt & comp & ~seen
        seen |= frontier
    return seen


def _component_has_odd_bridge(g: Graph, comp: int) -> bool:
    if comp.bit_count() % 2 == 1:
        return False
    return bool(_odd_bridges_in_component(g, comp))


def is_1_excludable_criterion(g: Graph) -> Verdict:
    """Criterion route over all vertex subsets S:

    (i) if g-S has a component containing an odd-bridge then
        o(g-S) <= |S| - 2;
    (ii) o(g-S) <= |S| otherwise.

    Requires a connected input; the direct checker has no such restriction.
    """
    if g.n > SUBSET_SCAN_CAP:
        raise ValueError(f"subset scan capped at n <= {SUBSET_SCAN_CAP}")
    if g.n == 0 or not is_connected(g):
        raise ValueError("criterion check requires a connected graph")
    full = (1 << g.n) - 1
    for smask in range(full + 1):
        comps = _component_masks(g.adj, full & ~smask)
        odd = sum(1 for c in comps if c.bit_count() % 2 == 1)
        s = smask.bit_count()
        if odd <= s - 2:
            continue  # both conditions already satisfied
        bridged = any(_component_has_odd_bridge(g, c) for c in comps)
        if bridged:
            return Verdict(False, "criterion",
                           witness=frozenset(_mask_to_vertices(smask)),
                           reason="criterion-i")
        if odd > s:
            return Verdict(False, "criterion",
                           witness=frozenset(_mask_to_vertices(smask)),
                           reason="criterion-ii")
    return Verdict(True, "criterion")


__all__ = [
    "MatchingResult", "Verdict", "max_matching", "matching_number",
    "has_perfect_matching", "brute_force_matching_number",
    "berge_tutte_deficiency", "is_k_extendable", "is_k_extendable_chen",
    "is_1_excludable", "is_1_excludable_criterion", "find_odd_bridges",
    "SUBSET_SCAN_CAP",
]
