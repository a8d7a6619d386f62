"""Simple undirected graphs on labeled vertices 0..n-1.

Vertices are small integers and adjacency is kept as per-vertex bit masks,
which makes adjacency tests O(1) and component/subset scans cheap for the
n <= 62 range this library targets (the graph6 short format ceiling).
All graphs are immutable after construction; every operation returns a new
Graph, so values can be shared freely across worker processes.
"""

from __future__ import annotations


class Graph:
    """Immutable simple graph: no loops, symmetric adjacency."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: tuple[int, ...]):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        if len(adj) != n:
            raise ValueError("adjacency table size does not match vertex count")
        full = (1 << n) - 1
        for v, mask in enumerate(adj):
            if mask & ~full:
                raise ValueError(f"vertex {v} has a neighbor out of range")
            if mask >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
        for v, mask in enumerate(adj):
            m = mask
            while m:
                u = (m & -m).bit_length() - 1
                m &= m - 1
                if not adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")
        self.n = n
        self.adj = tuple(adj)

    @property
    def m(self) -> int:
        """Number of edges."""
        return sum(mask.bit_count() for mask in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int):
        """Neighbors of v in increasing order."""
        m = self.adj[v]
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            yield u

    def edges(self) -> list[tuple[int, int]]:
        """All edges (u, v) with u < v, lexicographically sorted."""
        out = []
        for v in range(self.n):
            m = self.adj[v] >> (v + 1) << (v + 1)
            while m:
                u = (m & -m).bit_length() - 1
                m &= m - 1
                out.append((v, u))
        return out

    def degree_sequence(self) -> tuple[int, ...]:
        """Degrees in nonincreasing order."""
        return tuple(sorted((mask.bit_count() for mask in self.adj), reverse=True))

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def from_edge_list(n: int, edges) -> Graph:
    """Graph with the given edges; duplicate pairs collapse."""
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) out of range for n={n}")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


# ---------------------------------------------------------------------------
# graph6 codec (short format, n <= 62)
# ---------------------------------------------------------------------------

def _edge_slot_count(n: int) -> int:
    return n * (n - 1) // 2


def parse_graph6(text: str) -> Graph:
    """Decode one line of graph6 (short format only).

    Bit layout: header byte n+63, then the upper triangle in column order
    x(0,1), x(0,2), x(1,2), x(0,3), ... packed big-endian into 6-bit
    groups, each group offset by 63.
    """
    line = text.strip()
    if not line:
        raise ValueError("empty graph6 line")
    if line.startswith(">>graph6<<"):
        line = line[len(">>graph6<<"):]
    first = ord(line[0])
    if first == 126:
        raise ValueError("long graph6 format (n > 62) is not supported")
    if not 63 <= first <= 125:
        raise ValueError(f"bad graph6 header byte {first}")
    n = first - 63
    body = line[1:]
    nbits = _edge_slot_count(n)
    nchars = (nbits + 5) // 6
    if len(body) != nchars:
        raise ValueError(
            f"graph6 body has {len(body)} chars, expected {nchars} for n={n}")
    bits = []
    for ch in body:
        val = ord(ch) - 63
        if not 0 <= val <= 63:
            raise ValueError(f"graph6 char {ch!r} out of range")
        for k in range(5, -1, -1):
            bits.append(val >> k & 1)
    if any(bits[nbits:]):
        raise ValueError("nonzero padding bits in graph6 body")
    adj = [0] * n
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            idx += 1
    return Graph(n, tuple(adj))


def to_graph6(g: Graph) -> str:
    """Encode in graph6 short format for this labeling (no canonicalization)."""
    if g.n > 62:
        raise ValueError("graph6 short format supports n <= 62 only")
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(g.adj[i] >> j & 1)
    while len(bits) % 6:
        bits.append(0)
    chars = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = val << 1 | b
        chars.append(chr(val + 63))
    return "".join(chars)


def parse_edge_list_text(text: str) -> Graph:
    """Parse the plain text format: first line n, then one 'u v' pair per line."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty edge list input")
    n = int(lines[0])
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line: {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return from_edge_list(n, edges)


# ---------------------------------------------------------------------------
# Construction algebra
# ---------------------------------------------------------------------------

def disjoint_union(a: Graph, b: Graph) -> Graph:
    """Vertices of b are relabeled by +a.n."""
    adj = list(a.adj) + [mask << a.n for mask in b.adj]
    return Graph(a.n + b.n, tuple(adj))


def join(a: Graph, b: Graph) -> Graph:
    """Disjoint union plus all a.n * b.n cross edges."""
    amask = (1 << a.n) - 1
    bmask = ((1 << b.n) - 1) << a.n
    adj = [mask | bmask for mask in a.adj]
    adj += [(mask << a.n) | amask for mask in b.adj]
    return Graph(a.n + b.n, tuple(adj))


def delete_vertices(g: Graph, vertices) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on the complement of `vertices`.

    Returns (subgraph, kept) where kept[i] is the original label of the
    subgraph's vertex i; the relabeling is order preserving.
    """
    drop = 0
    for v in vertices:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
        drop |= 1 << v
    kept = [v for v in range(g.n) if not drop >> v & 1]
    pos = {v: i for i, v in enumerate(kept)}
    adj = []
    for v in kept:
        mask = 0
        rem = g.adj[v] & ~drop
        while rem:
            u = (rem & -rem).bit_length() - 1
            rem &= rem - 1
            mask |= 1 << pos[u]
        adj.append(mask)
    return Graph(len(kept), tuple(adj)), tuple(kept)


# ---------------------------------------------------------------------------
# Structure queries
# ---------------------------------------------------------------------------

def _component_masks(adj, remaining: int) -> list[int]:
    """Connected components of the subgraph induced on `remaining`, as bit masks."""
    comps = []
    rem = remaining
    while rem:
        v = (rem & -rem).bit_length() - 1
        comp = 0
        frontier = 1 << v
        while frontier:
            comp |= frontier
            nxt = 0
            f = frontier
            while f:
                u = (f & -f).bit_length() - 1
                f &= f - 1
                nxt |= adj[u]
            frontier = nxt & remaining & ~comp
        comps.append(comp)
        rem &= ~comp
    return comps


def _mask_to_vertices(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        v = (mask & -mask).bit_length() - 1
        mask &= mask - 1
        out.append(v)
    return tuple(out)


def components(g: Graph) -> list[frozenset[int]]:
    """Vertex sets of the connected components, ordered by smallest member."""
    full = (1 << g.n) - 1
    return [frozenset(_mask_to_vertices(c)) for c in _component_masks(g.adj, full)]


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        raise ValueError("connectivity undefined for the empty graph")
    full = (1 << g.n) - 1
    return len(_component_masks(g.adj, full)) == 1


def min_degree(g: Graph) -> int:
    if g.n == 0:
        raise ValueError("minimum degree undefined for the empty graph")
    return min(mask.bit_count() for mask in g.adj)


def odd_components(g: Graph, vertices) -> int:
    """Number of odd-order components of g minus the given vertex set."""
    drop = 0
    for v in vertices:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
        drop |= 1 << v
    remaining = ((1 << g.n) - 1) & ~drop
    return sum(1 for c in _component_masks(g.adj, remaining) if c.bit_count() % 2 == 1)


# ---------------------------------------------------------------------------
# Isomorphism (exact backtracking with color refinement; intended for n <= 12)
# ---------------------------------------------------------------------------

def _stable_colors(g: Graph) -> list[int]:
    """Iterated degree refinement; color ids are label independent."""
    colors = [g.degree(v) for v in range(g.n)]
    for _ in range(g.n):
        keys = []
        for v in range(g.n):
            nbr = tuple(sorted(colors[u] for u in g.neighbors(v)))
            keys.append((colors[v], nbr))
        order = {key: i for i, key in enumerate(sorted(set(keys)))}
        new = [order[k] for k in keys]
        if new == colors:
            break
        colors = new
    return colors


def are_isomorphic(a: Graph, b: Graph) -> bool:
    """Exact test via refinement-pruned backtracking.

    May be slow above roughly 12 vertices; in the sweeps it only runs on
    the handful of surviving graphs.
    """
    if a.n != b.n or a.m != b.m:
        return False
    if a.degree_sequence() != b.degree_sequence():
        return False
    ca, cb = _stable_colors(a), _stable_colors(b)
    if sorted(ca) != sorted(cb):
        return False
    # Map a's vertices in order of rarest color, most constrained first.
    count = {}
    for c in ca:
        count[c] = count.get(c, 0) + 1
    order = sorted(range(a.n), key=lambda v: (count[ca[v]], -a.degree(v), v))
    candidates = {v: [u for u in range(b.n) if cb[u] == ca[v]] for v in order}

    mapping = [-1] * a.n
    used = [False] * b.n

    def extend(i: int) -> bool:
        if i == a.n:
            return True
        v = order[i]
        for u in candidates[v]:
            if used[u]:
                continue
            ok = True
            for w in order[:i]:
                if a.has_edge(v, w) != b.has_edge(u, mapping[w]):
                    ok = False
                    break
            if ok:
                mapping[v] = u
                used[u] = True
                if extend(i + 1):
                    return True
                used[u] = False
                mapping[v] = -1
        return False

    return extend(0)


def all_pairs(n: int):
    """All vertex pairs (i, j), i < j, in graph6 column order."""
    return [(i, j) for j in range(1, n) for i in range(j)]


def brute_force_is_isomorphic(a: Graph, b: Graph) -> bool:
    """Min-over-permutations reference check; only for tiny graphs in tests."""
    from itertools import permutations
    if a.n != b.n or a.m != b.m:
        return False
    target = set(b.edges())
    for perm in permutations(range(a.n)):
        if all((min(perm[u], perm[v]), max(perm[u], perm[v])) in target
               for u, v in a.edges()):
            return True
    return False


__all__ = [
    "Graph", "from_edge_list", "empty_graph", "complete_graph", "cycle_graph",
    "path_graph", "parse_graph6", "to_graph6", "parse_edge_list_text",
    "disjoint_union", "join", "delete_vertices", "components", "is_connected",
    "min_degree", "odd_components", "are_isomorphic", "all_pairs",
    "brute_force_is_isomorphic",
]
