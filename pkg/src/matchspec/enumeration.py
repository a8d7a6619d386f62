"""Exhaustive graph sources and verification sweeps.

The built-in source enumerates every connected graph on n <= 7 vertices,
one representative per isomorphism class, by scanning all 2^C(n,2) labeled
graphs and deduplicating on the minimum-over-permutations adjacency
bit-string (the chosen representative IS that minimum).  Larger orders are
ingested from graph6 files produced externally; the n=8 file ships as a
test fixture.

Sweeps evaluate a threshold statement over a source, collecting the graphs
that satisfy the hypothesis but fail the conclusion, tagging each with the
registered exception family it matches (an unmatched one is a genuine
counterexample).  Filters run cheapest first: degree filter, then the
size/spectral hypothesis, and matching enumeration only on survivors.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from math import comb
from random import Random

import numpy as np

from . import families, graphs, matching, spectral, theorems
from .graphs import Graph, all_pairs, from_edge_list, parse_graph6, to_graph6
from .spectral import Polynomial, characteristic_polynomial, largest_real_root
from .theorems import TheoremId

ENUMERATION_CAP = 7

# Published counts of connected graphs up to isomorphism (n = 1..7).
CONNECTED_GRAPH_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}

SWEEP_SCHEMA = "matchspec/sweep-report/1"
LEMMA_SCHEMA = "matchspec/lemma-report/1"


# ---------------------------------------------------------------------------
# Enumeration of all connected graphs on n <= 7 vertices
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def enumerate_connected(n: int) -> tuple[Graph, ...]:
    """One representative per isomorphism class of connected n-vertex graphs.

    Each representative is the labeled graph whose edge bit-string (graph6
    slot order) is minimal within its class.
    """
    if not 1 <= n <= ENUMERATION_CAP:
        raise ValueError(
            f"built-in enumeration is capped at n <= {ENUMERATION_CAP}; "
            "use a graph6 file source for larger orders")
    if n == 1:
        return (graphs.empty_graph(1),)

    pairs = all_pairs(n)
    nslots = len(pairs)
    total = 1 << nslots
    masks = np.arange(total, dtype=np.uint32)

    # per-graph adjacency rows as n-bit masks
    rows = np.zeros((total, n), dtype=np.uint8)
    for idx, (i, j) in enumerate(pairs):
        bit = ((masks >> np.uint32(idx)) & np.uint32(1)).astype(np.uint8)
        rows[:, i] |= bit << j
        rows[:, j] |= bit << i

    # vectorized reachability from vertex 0
    reach = np.ones(total, dtype=np.uint8)
    for _ in range(n):
        acc = reach.copy()
        for v in range(n):
            has = (reach >> v) & 1
            acc |= rows[:, v] * has
        if np.array_equal(acc, reach):
            break
        reach = acc
    todo = reach == (1 << n) - 1
    del rows, reach

    # edge-slot images of every vertex permutation
    slot = {p: i for i, p in enumerate(pairs)}
    perm_maps = np.array(
        [[slot[(min(pm[i], pm[j]), max(pm[i], pm[j]))] for (i, j) in pairs]
         for pm in permutations(range(n))], dtype=np.int64)
    weights = np.int64(1) << np.arange(nslots, dtype=np.int64)

    reps = []
    ptr = 0
    chunk = 1 << 16
    while ptr < total:
        if not todo[ptr]:
            hits = np.flatnonzero(todo[ptr:ptr + chunk])
            if hits.size == 0:
                ptr += chunk
                continue
            ptr += int(hits[0])
        mask = ptr
        reps.append(mask)
        bits = np.array([(mask >> i) & 1 for i in range(nslots)], dtype=np.int64)
        variants = bits[perm_maps] @ weights
        todo[variants] = False
        ptr += 1

    out = []
    for mask in reps:
        edges = [pairs[i] for i in range(nslots) if mask >> i & 1]
        out.append(from_edge_list(n, edges))
    return tuple(out)


# ---------------------------------------------------------------------------
# Graph sources
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BuiltIn:
    """All connected graphs of order n, from the built-in enumerator."""

    n: int

    def graph6_lines(self) -> list[str]:
        return [to_graph6(g) for g in enumerate_connected(self.n)]

    def describe(self) -> str:
        return f"builtin:n={self.n}"


@dataclass(frozen=True)
class File:
    """graph6 lines from a file; '#' comments and blank lines are skipped."""

    path: str

    def graph6_lines(self) -> list[str]:
        out = []
        with open(self.path) as fh:
            for line in fh:
                line = line.strip()
                if line and not line.startswith("#"):
                    out.append(line)
        return out

    def describe(self) -> str:
        return f"file:{self.path}"


# ---------------------------------------------------------------------------
# Theorem sweeps
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SweepReport:
    theorem: str
    n: int
    k: int | None
    source: str
    min_degree: int | None
    graphs_scanned: int
    hypothesis_count: int
    counterexamples: tuple[str, ...]
    exceptions_found: tuple[tuple[str, str | None, dict | None], ...]
    wall_time: float

    def to_json_dict(self, include_timing: bool = True) -> dict:
        doc = {
            "schema": SWEEP_SCHEMA,
            "theorem": self.theorem,
            "n": self.n,
            "k": self.k,
            "source": self.source,
            "min_degree": self.min_degree,
            "graphs_scanned": self.graphs_scanned,
            "hypothesis_count": self.hypothesis_count,
            "counterexamples": list(self.counterexamples),
            "exceptions_found": [
                {"graph6": g6, "family": fam, "params": params}
                for g6, fam, params in self.exceptions_found
            ],
        }
        if include_timing:
            doc["wall_time"] = self.wall_time
        return doc

    def to_json(self, include_timing: bool = True) -> str:
        return json.dumps(self.to_json_dict(include_timing), indent=2,
                          sort_keys=True)

    def csv_rows(self) -> list[list]:
        rows = [["graph6", "status", "family", "params"]]
        for g6 in self.counterexamples:
            rows.append([g6, "counterexample", "", ""])
        for g6, fam, params in self.exceptions_found:
            if fam is not None:
                rows.append([g6, "exception", fam, json.dumps(params or {},
                                                              sort_keys=True)])
        return rows


def _sweep_chunk(args) -> tuple[int, int, list]:
    lines, kind, k, expected_n, min_deg, tol = args
    t = TheoremId(kind, k)
    scanned = 0
    hyp = 0
    events = []
    for g6 in lines:
        g = parse_graph6(g6)
        if g.n != expected_n:
            raise ValueError(
                f"mixed vertex counts in source: expected n={expected_n}, "
                f"found n={g.n} in {g6!r}")
        scanned += 1
        if min_deg is not None and (g.n == 0 or graphs.min_degree(g) < min_deg):
            continue
        met, _, _ = theorems.hypothesis_status(g, t, tol)
        if not met:
            continue
        hyp += 1
        if t.about_extension:
            conclusion = matching.is_k_extendable(g, t.k).holds
        else:
            conclusion = matching.is_1_excludable(g).holds
        if conclusion:
            continue
        rec = families.recognize(g, theorems.exception_candidates(t, g.n))
        events.append((g6, rec))
    return scanned, hyp, events


def sweep_theorem(source, t: TheoremId, min_degree: int | None = None,
                  jobs: int = 1, tolerance: float = theorems.SPECTRAL_TOL,
                  chunk_size: int = 4096) -> SweepReport:
    """Evaluate theorem t over every graph in the source.

    Deterministic: output lists are sorted by graph6 string, so reports are
    identical for any worker count (wall_time aside).
    """
    start = time.perf_counter()
    lines = source.graph6_lines()
    if not lines:
        raise ValueError("empty graph source")
    expected_n = parse_graph6(lines[0]).n
    if expected_n % 2 != 0:
        raise ValueError(f"sweeps need even n, got n={expected_n}")

    chunks = [lines[i:i + chunk_size] for i in range(0, len(lines), chunk_size)]
    args = [(c, t.kind, t.k, expected_n, min_degree, tolerance) for c in chunks]
    if jobs > 1 and len(chunks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_sweep_chunk, args))
    else:
        results = [_sweep_chunk(a) for a in args]

    scanned = sum(r[0] for r in results)
    hyp = sum(r[1] for r in results)
    events = sorted((e for r in results for e in r[2]), key=lambda e: e[0])
    counterexamples = tuple(g6 for g6, rec in events if rec is None)
    exceptions = tuple(
        (g6, rec[0] if rec else None, rec[1] if rec else None)
        for g6, rec in events)
    return SweepReport(
        theorem=str(t), n=expected_n, k=t.k, source=source.describe(),
        min_degree=min_degree, graphs_scanned=scanned, hypothesis_count=hyp,
        counterexamples=counterexamples, exceptions_found=exceptions,
        wall_time=time.perf_counter() - start)


# ---------------------------------------------------------------------------
# Lemma verification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LemmaReport:
    lemma: str
    grid: dict
    instances: int
    violations: tuple[str, ...]
    max_equality_gap: float
    wall_time: float
    notes: tuple[str, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json_dict(self, include_timing: bool = True) -> dict:
        doc = {
            "schema": LEMMA_SCHEMA,
            "lemma": self.lemma,
            "grid": {k: str(v) for k, v in self.grid.items()},
            "instances": self.instances,
            "violations": list(self.violations),
            "max_equality_gap": self.max_equality_gap,
            "notes": list(self.notes),
        }
        if include_timing:
            doc["wall_time"] = self.wall_time
        return doc

    def to_json(self, include_timing: bool = True) -> str:
        return json.dumps(self.to_json_dict(include_timing), indent=2,
                          sort_keys=True)


LEMMA_IDS = ("l2.1", "l2.2", "l2.4", "l2.5", "l2.8", "l2.9", "l2.10", "l2.11")


def verify_lemma(lemma: str, **options) -> LemmaReport:
    """Check one of the library's structural/spectral inequalities.

    Options (all keyword-only, each with desk-scale defaults):
      trials, seed          -- randomized suites (l2.1, l2.5, l2.8)
      n_values              -- orders for family/exhaustive suites
      sources               -- {n: GraphSource} overriding BuiltIn (l2.9/l2.10)
      l_values              -- even orders for the bridged-completes suite
    """
    lemma = lemma.lower()
    start = time.perf_counter()
    if lemma == "l2.1":
        report = _verify_subgraph_monotonicity(**options)
    elif lemma == "l2.2":
        report = _verify_perron_symmetry(**options)
    elif lemma == "l2.4":
        report = _verify_quotient_radius(**options)
    elif lemma == "l2.5":
        report = _verify_interlacing(**options)
    elif lemma == "l2.8":
        report = _verify_packing_comparison(**options)
    elif lemma == "l2.9":
        report = _verify_size_bound_no_pm(**options)
    elif lemma == "l2.10":
        report = _verify_rho_bound_no_pm(**options)
    elif lemma == "l2.11":
        report = _verify_bridged_extremes(**options)
    else:
        raise ValueError(f"unknown lemma id {lemma!r}; known: {LEMMA_IDS}")
    grid, instances, violations, gap, notes = report
    return LemmaReport(lemma=lemma, grid=grid, instances=instances,
                       violations=tuple(violations), max_equality_gap=gap,
                       wall_time=time.perf_counter() - start, notes=tuple(notes))


def _check_grid_cap(values, cap: int, what: str) -> None:
    if max(values) > cap:
        raise ValueError(f"{what} is capped at n <= {cap}, got {max(values)}")


def _random_connected(rng: Random, n: int, p: float = 0.5) -> Graph:
    while True:
        edges = [(i, j) for i in range(n) for j in range(i + 1, n)
                 if rng.random() < p]
        g = from_edge_list(n, edges)
        if graphs.is_connected(g):
            return g


def _verify_subgraph_monotonicity(trials: int = 100, seed: int = 20240601):
    # strict rho drop on proper connected subgraphs
    rng = Random(seed)
    violations = []
    min_gap = float("inf")
    done = 0
    while done < trials:
        n = rng.randint(4, 10)
        g = _random_connected(rng, n)
        # delete a few vertices and/or edges, keep the rest connected
        h = g
        if rng.random() < 0.5 and n > 2:
            drop = rng.sample(range(n), rng.randint(1, n - 2))
            h, _ = graphs.delete_vertices(g, drop)
        edges = h.edges()
        if edges and (h.n == g.n or rng.random() < 0.5):
            removable = rng.sample(edges, rng.randint(1, len(edges)))
            keep = [e for e in edges if e not in set(removable)]
            h = from_edge_list(h.n, keep)
        if h.n == 0 or not graphs.is_connected(h):
            continue
        if h.n == g.n and h.m == g.m:
            continue  # not a proper subgraph
        rho_g = spectral.spectral_radius(g).rho
        rho_h = spectral.spectral_radius(h).rho
        gap = rho_g - rho_h
        min_gap = min(min_gap, gap)
        if gap <= 1e-9:
            violations.append(
                f"rho({to_graph6(h)}) = {rho_h} !< rho({to_graph6(g)}) = {rho_g}")
        done += 1
    return ({"trials": trials, "seed": seed}, done, violations, min_gap, [])


def _registry_grid(n_values) -> list[tuple[str, dict]]:
    grid = []
    for n in n_values:
        grid.extend([
            ("thm11-exc1", {"n": n, "k": 1}),
            ("thm11-exc2", {"k": (n - 4) // 2}) if n >= 6 else None,
            ("thm11-extremal", {"n": n, "k": 1, "s": 3}) if n >= 8 else None,
            ("thm13-f3", {"n": n}),
            ("thm13-fact3-split", {"n": n, "s": 2}) if n >= 8 else None,
            ("thm13-fact3-pendant", {"n": n, "s": 2}) if n >= 10 else None,
            ("lem210", {"n": n}),
            ("w1", {"n": n}),
            ("w2", {"n": n}) if n >= 8 else None,
        ])
    out = []
    for item in grid:
        if item is None:
            continue
        fid, params = item
        try:
            families.named_spec(fid, **params)
        except ValueError:
            continue
        out.append(item)
    return out


def _verify_perron_symmetry(n_values=(6, 8, 10, 12, 14), tol: float = 1e-9):
    # vertices with equal neighborhoods (up to each other) get equal Perron weight
    _check_grid_cap(n_values, 14, "the spectral family grid")
    violations = []
    max_dev = 0.0
    instances = 0
    for fid, params in _registry_grid(n_values):
        g = families.build_named(fid, **params)
        perron = spectral.spectral_radius(g).perron
        for i in range(g.n):
            for j in range(i + 1, g.n):
                if g.adj[i] & ~(1 << j) == g.adj[j] & ~(1 << i):
                    dev = abs(perron[i] - perron[j])
                    max_dev = max(max_dev, dev)
                    if dev > tol:
                        violations.append(
                            f"{fid}{params}: perron[{i}] != perron[{j}] "
                            f"(|diff| = {dev})")
        instances += 1
    return ({"n_values": n_values}, instances, violations, max_dev, [])


def _verify_quotient_radius(n_values=(6, 8, 10, 12, 14), tol: float = 1e-9):
    # equitable quotient's largest root equals the graph's spectral radius
    _check_grid_cap(n_values, 14, "the spectral family grid")
    violations = []
    max_dev = 0.0
    instances = 0
    for fid, params in _registry_grid(n_values):
        spec = families.named_spec(fid, **params)
        g = families.build(spec)
        part = families.canonical_partition(spec)
        q = spectral.quotient_matrix(g, part)
        if not q.equitable:
            violations.append(f"{fid}{params}: canonical partition not equitable")
            continue
        poly = characteristic_polynomial(q.as_int_rows())
        root = largest_real_root(poly, 0.0, float(g.n))
        rho = spectral.spectral_radius(g).rho
        dev = abs(root - rho)
        max_dev = max(max_dev, dev)
        if dev > tol:
            violations.append(
                f"{fid}{params}: quotient root {root} vs rho {rho}")
        instances += 1
    return ({"n_values": n_values}, instances, violations, max_dev, [])


def _verify_interlacing(trials: int = 100, seed: int = 20240602,
                        tol: float = 1e-9):
    # principal submatrix eigenvalues interlace the full spectrum
    rng = Random(seed)
    violations = []
    max_dev = 0.0
    for trial in range(trials):
        n = rng.randint(2, 12)
        g = from_edge_list(n, [(i, j) for i in range(n) for j in range(i + 1, n)
                               if rng.random() < 0.5])
        t = rng.randint(1, n)
        keep = sorted(rng.sample(range(n), t))
        lam = spectral.eigenvalues(g)
        sub, _ = graphs.delete_vertices(g, [v for v in range(n) if v not in keep])
        mu = spectral.eigenvalues(sub)
        for i in range(t):
            high = lam[i] - mu[i]
            low = mu[i] - lam[n - t + i]
            max_dev = max(max_dev, -min(high, low, 0.0))
            if high < -tol or low < -tol:
                violations.append(
                    f"trial {trial}: interlacing broken at i={i} "
                    f"(mu={mu[i]}, window=[{lam[n - t + i]}, {lam[i]}])")
    return ({"trials": trials, "seed": seed}, trials, violations, max_dev, [])


def _join_with_parts(s: int, parts: list[Graph]) -> Graph:
    body = parts[0]
    for p in parts[1:]:
        body = graphs.disjoint_union(body, p)
    return graphs.join(graphs.complete_graph(s), body)


def _verify_packing_comparison(trials: int = 60, seed: int = 20240603,
                               tol: float = 1e-9):
    # size and rho both rise when clique parts merge into one big clique
    # plus (t-1) copies of K_k; equality exactly when already of that shape
    rng = Random(seed)
    violations = []
    min_strict_gap = float("inf")
    done = 0
    while done < trials:
        s = rng.randint(1, 3)
        k = rng.randint(1, 2)
        t = rng.randint(2, 4)
        m = rng.randint(0, 3)
        sizes = sorted((rng.randint(k, k + 3) for _ in range(t)), reverse=True)
        n = sum(sizes) + s + m
        if n > 14:
            continue
        h_edges = [(i, j) for i in range(m) for j in range(i + 1, m)
                   if rng.random() < 0.5]
        h = from_edge_list(m, h_edges) if m else None
        left_parts = ([h] if h else []) + [graphs.complete_graph(c) for c in sizes]
        big = n - m - s - k * (t - 1)
        right_parts = ([h] if h else []) + [graphs.complete_graph(big)] + \
            [graphs.complete_graph(k) for _ in range(t - 1)]
        left = _join_with_parts(s, left_parts)
        right = _join_with_parts(s, right_parts)
        equality_case = all(c == k for c in sizes[1:])
        size_l, size_r = left.m, right.m
        rho_l = spectral.spectral_radius(left).rho
        rho_r = spectral.spectral_radius(right).rho
        if equality_case:
            if size_l != size_r or abs(rho_l - rho_r) > tol:
                violations.append(
                    f"equality case broken: sizes {sizes}, s={s}, k={k}, m={m}: "
                    f"|E| {size_l} vs {size_r}, rho {rho_l} vs {rho_r}")
            if not graphs.are_isomorphic(left, right):
                violations.append(
                    f"equality case not isomorphic: sizes {sizes}, s={s}, k={k}")
        else:
            min_strict_gap = min(min_strict_gap, size_r - size_l, rho_r - rho_l)
            if size_l >= size_r or rho_l >= rho_r - tol:
                violations.append(
                    f"strict case broken: sizes {sizes}, s={s}, k={k}, m={m}: "
                    f"|E| {size_l} vs {size_r}, rho {rho_l} vs {rho_r}")
        done += 1
    gap = 0.0 if min_strict_gap == float("inf") else min_strict_gap
    return ({"trials": trials, "seed": seed}, done, violations, gap, [])


def _no_pm_size_bound(n: int) -> int:
    if n == 6:
        return 9
    if n == 8:
        return 18
    return comb(n - 2, 2) + 2  # n >= 10 or n = 4


def _graphs_without_pm(source) -> list[Graph]:
    """Connected graphs from the source with some S: o(G-S) >= |S|+2.

    For even order that is exactly 'no perfect matching' (deficiency >= 2
    by parity); the blossom test filters, and the witness subset is then
    confirmed by an explicit scan.
    """
    out = []
    for g6 in source.graph6_lines():
        g = parse_graph6(g6)
        if g.n % 2 != 0:
            raise ValueError("the deficiency bound suites need even n")
        if matching.has_perfect_matching(g):
            continue
        d, witness = matching.berge_tutte_deficiency(g)
        if d < 2 or graphs.odd_components(g, witness) < len(witness) + 2:
            raise AssertionError(
                f"deficiency witness failed to re-validate on {g6}")
        out.append(g)
    return out


def _sources_for(n_values, sources):
    table = {}
    for n in n_values:
        if sources and n in sources:
            table[n] = sources[n]
        else:
            table[n] = BuiltIn(n)
    return table


def _verify_size_bound_no_pm(n_values=(4, 6), sources=None):
    # graphs with o(G-S) >= |S|+2 for some S stay below the size bound
    _check_grid_cap(n_values, 8, "the exhaustive subset-scan suite")
    violations = []
    max_m_ratio = 0.0
    instances = 0
    notes = []
    for n, source in _sources_for(n_values, sources).items():
        bound = _no_pm_size_bound(n)
        hit = 0
        for g in _graphs_without_pm(source):
            instances += 1
            hit = max(hit, g.m)
            if g.m > bound:
                violations.append(
                    f"n={n}: {to_graph6(g)} has m={g.m} > bound {bound}")
        max_m_ratio = max(max_m_ratio, hit / bound if bound else 0.0)
        notes.append(f"n={n}: max size among qualifying graphs {hit} (bound {bound})")
    return ({"n_values": n_values}, instances, violations, max_m_ratio, notes)


def _verify_rho_bound_no_pm(n_values=(4, 6), sources=None, tol: float = 1e-9):
    # spectral version of the same bound, plus the attaining families
    _check_grid_cap(n_values, 8, "the exhaustive subset-scan suite")
    violations = []
    max_dev = 0.0
    instances = 0
    notes = []
    for n, source in _sources_for(n_values, sources).items():
        if n == 6:
            bound = largest_real_root(Polynomial((-8, -1, 1)), 0.0, 6.0)
            attaining = families.build(
                families.Join(families.Complete(2), families.Empty(4)))
        else:
            bound = spectral.theta(n)
            attaining = families.build_named("lem210", n=n)
        rho_att = spectral.spectral_radius(attaining).rho
        if abs(rho_att - bound) > tol:
            violations.append(
                f"n={n}: attaining family misses the bound: {rho_att} vs {bound}")
        best = 0.0
        for g in _graphs_without_pm(source):
            instances += 1
            rho = spectral.spectral_radius(g).rho
            best = max(best, rho)
            if rho > bound + tol:
                violations.append(
                    f"n={n}: {to_graph6(g)} has rho={rho} > bound {bound}")
        notes.append(f"n={n}: max rho among qualifying graphs {best} "
                     f"(bound {bound})")
        max_dev = max(max_dev, abs(best - bound))
    return ({"n_values": n_values}, instances, violations, max_dev, notes)


def _verify_bridged_extremes(l_values=(6, 8, 10, 12), tol: float = 1e-9):
    # across odd splits p+q=l, size and rho peak at the pendant shape and
    # then at the {3, l-3} split
    _check_grid_cap(l_values, 14, "the bridged-completes grid")
    violations = []
    min_gap = float("inf")
    instances = 0
    for l in l_values:
        if l % 2 != 0 or l < 4:
            raise ValueError("bridged-completes suite needs even l >= 4")
        entries = []
        for p in range(1, l, 2):
            q = l - p
            g = families.build(families.BridgedCompletes(p, q))
            entries.append((p, q, g.m, spectral.spectral_radius(g).rho))
            instances += 1
        pend_m = comb(l - 1, 2) + 1
        pend_rho = max(r for p, q, m, r in entries if 1 in (p, q))
        runner_m = comb(3, 2) + comb(l - 3, 2) + 1
        runner_rho = max((r for p, q, m, r in entries if 3 in (p, q) and 1 not in (p, q)),
                         default=None)
        for p, q, m, rho in entries:
            if m > pend_m or rho > pend_rho + tol:
                violations.append(
                    f"l={l}: split ({p},{q}) beats the pendant shape "
                    f"(m={m} vs {pend_m}, rho={rho} vs {pend_rho})")
            if 1 in (p, q):
                continue
            min_gap = min(min_gap, pend_m - m, pend_rho - rho)
            if m > runner_m or (runner_rho is not None and rho > runner_rho + tol):
                violations.append(
                    f"l={l}: split ({p},{q}) beats the (3,{l - 3}) runner-up")
            if 3 in (p, q):
                if m != runner_m:
                    violations.append(f"l={l}: runner-up size mismatch at ({p},{q})")
            else:
                if m >= runner_m or rho >= runner_rho - tol:
                    violations.append(
                        f"l={l}: split ({p},{q}) ties the runner-up "
                        f"(m={m} vs {runner_m}, rho={rho} vs {runner_rho})")
    gap = 0.0 if min_gap == float("inf") else min_gap
    return ({"l_values": l_values}, instances, violations, gap, [])


# ---------------------------------------------------------------------------
# Characteristic polynomial identity suite
# ---------------------------------------------------------------------------

def _phi_bridged(l: int, q: int) -> tuple:
    return (l - 3, 2 * l * q - 2 * q * q - 2 * l, l * q - q * q - 3 * l + 5,
            4 - l, 1)


def _phi_bridged_q3(l: int) -> tuple:
    return (l - 3, 4 * l - 18, -4, 4 - l, 1)


def _phi_exc1(n: int, k: int) -> tuple:
    return (-4 * k * k + 2 * k * n - 4 * k, -(2 * k + n - 2), -(n - 3), 1)


def _phi_exc2(k: int) -> tuple:
    return (-6 * k - 3, -2 * k, 1)


def _phi_extremal(n: int, k: int, s: int) -> tuple:
    return (-s * (2 * k - s - 1) * (2 * k + n - 2 * s - 2),
            -(n - 2 * s * k + s * s + 2 * k - 2),
            -(n - s + 2 * k - 3), 1)


def _phi_hub_pendant_clique(n: int, h: int) -> tuple:
    return (-3 * h * n + 3 * h * h + 9 * n - 4 * h - 15,
            6 * n - 3 * h - 19,
            3 * n * h - 3 * h * h - 4 * n - 2,
            n * h - h * h - 4 * n + 8,
            -(n - 5), 1)


def _phi_f3(n: int) -> tuple:
    return (3 * n - 11, -3, 3 - n, 1)


def _phi_w1(s: int) -> tuple:
    return (s * s, -(s * s + s + 1), -s, 1)


def _phi_fact3_split(n: int, s: int) -> tuple:
    return (-s * s * n + 2 * s ** 3 + s * n - 2 * s,
            s * s * n - 2 * s ** 3 + s * n - 3 * s * s + n - 4 * s - 2,
            -(s * s + s + 1), s + 2 - n, 1)


def _phi_fact3_pendant(n: int, s: int) -> tuple:
    return (-n * s * s + 2 * s ** 3 + 3 * s * s,
            -(2 * s ** 3 - n * s * s + 3 * s * s - n * s + 5 * s - n + 3),
            (s + 1) * (n * s - 2 * s * s - 3 * s - 2),
            -(s * s + 2 * n - s - 4),
            -(n - s - 4), 1)


def _phi_w2(n: int) -> tuple:
    return (-4 * n + 28, -(41 - 7 * n), -(48 - 6 * n), -(2 * n - 2),
            -(n - 6), 1)


def _hub_pendant_clique_spec(n: int, h: int) -> families.FamilySpec:
    # one dominating vertex joined to a pendant-clique of order h and a clique
    if h < 4 or h % 2 != 0 or n - h - 1 < 1:
        raise ValueError("requires even h >= 4 and n >= h+2")
    return families.Join(
        families.Complete(1),
        families.Union((families.PendantComplete(h), families.Complete(n - h - 1))))


def default_identity_grid() -> list[tuple[str, dict]]:
    grid: list[tuple[str, dict]] = []
    grid += [("bridged", {"l": l, "q": q})
             for l, q in ((8, 3), (8, 5), (10, 3), (10, 5), (10, 7), (12, 5))]
    grid += [("bridged-q3", {"l": l}) for l in (6, 8, 10, 12)]
    grid += [("thm11-exc1", {"n": n, "k": k})
             for n, k in ((6, 1), (8, 1), (8, 2), (10, 1), (10, 2), (12, 3))]
    grid += [("thm11-exc2", {"k": k}) for k in (1, 2, 3)]
    grid += [("thm11-extremal", {"n": n, "k": k, "s": s})
             for n, k, s in ((8, 1, 2), (8, 1, 3), (10, 1, 3), (10, 2, 4),
                             (12, 1, 4), (12, 2, 5), (14, 3, 6))]
    grid += [("hub-pendant-clique", {"n": n, "h": h})
             for n, h in ((10, 4), (12, 4), (12, 6), (14, 4), (14, 6))]
    grid += [("thm13-f3", {"n": n}) for n in (6, 8, 10, 12, 14)]
    grid += [("w1", {"s": s}) for s in (2, 3, 4, 5, 6)]
    grid += [("thm13-fact3-split", {"n": n, "s": s})
             for n, s in ((8, 2), (10, 2), (10, 3), (12, 3), (12, 4))]
    grid += [("thm13-fact3-pendant", {"n": n, "s": s})
             for n, s in ((10, 2), (12, 2), (12, 3), (14, 3), (14, 4))]
    grid += [("w2", {"n": n}) for n in (8, 10, 12, 14, 16)]
    return grid


def _identity_instance(name: str, params: dict):
    """(FamilySpec, expected ascending coefficients) for one grid point."""
    if name == "bridged":
        l, q = params["l"], params["q"]
        return families.BridgedCompletes(l - q, q), _phi_bridged(l, q)
    if name == "bridged-q3":
        l = params["l"]
        return families.BridgedCompletes(l - 3, 3), _phi_bridged_q3(l)
    if name == "thm11-exc1":
        return (families.named_spec("thm11-exc1", **params),
                _phi_exc1(params["n"], params["k"]))
    if name == "thm11-exc2":
        return (families.named_spec("thm11-exc2", **params),
                _phi_exc2(params["k"]))
    if name == "thm11-extremal":
        return (families.named_spec("thm11-extremal", **params),
                _phi_extremal(params["n"], params["k"], params["s"]))
    if name == "hub-pendant-clique":
        return (_hub_pendant_clique_spec(params["n"], params["h"]),
                _phi_hub_pendant_clique(params["n"], params["h"]))
    if name == "thm13-f3":
        return (families.named_spec("thm13-f3", **params),
                _phi_f3(params["n"]))
    if name == "w1":
        s = params["s"]
        return families.named_spec("w1", n=2 * s + 2), _phi_w1(s)
    if name == "thm13-fact3-split":
        return (families.named_spec("thm13-fact3-split", **params),
                _phi_fact3_split(params["n"], params["s"]))
    if name == "thm13-fact3-pendant":
        return (families.named_spec("thm13-fact3-pendant", **params),
                _phi_fact3_pendant(params["n"], params["s"]))
    if name == "w2":
        return (families.named_spec("w2", **params), _phi_w2(params["n"]))
    raise ValueError(f"unknown identity {name!r}")


def verify_charpoly_identities(grid=None, tol: float = 1e-9) -> LemmaReport:
    """Exact coefficient check of every displayed quotient polynomial.

    For each grid point: build the family, take its canonical equitable
    partition, compute the quotient's characteristic polynomial exactly,
    and compare it coefficient-by-coefficient with the closed formula.
    The quotient's largest root must also match the eigensolver's rho.
    Mismatches are reported verbatim, never patched over.
    """
    start = time.perf_counter()
    grid = list(grid) if grid is not None else default_identity_grid()
    violations = []
    max_dev = 0.0
    for name, params in grid:
        spec, expected = _identity_instance(name, params)
        g = families.build(spec)
        part = families.canonical_partition(spec)
        q = spectral.quotient_matrix(g, part)
        if not q.equitable:
            violations.append(f"{name}{params}: partition not equitable")
            continue
        poly = characteristic_polynomial(q.as_int_rows())
        if poly.coeffs != tuple(expected):
            violations.append(
                f"{name}{params}: quotient charpoly {poly.coeffs} "
                f"!= displayed formula {tuple(expected)}")
            continue
        root = largest_real_root(poly, 0.0, float(g.n))
        rho = spectral.spectral_radius(g).rho
        dev = abs(root - rho)
        max_dev = max(max_dev, dev)
        if dev > tol:
            violations.append(
                f"{name}{params}: formula root {root} vs rho {rho}")
    return LemmaReport(
        lemma="charpoly-identities", grid={"instances": len(grid)},
        instances=len(grid), violations=tuple(violations),
        max_equality_gap=max_dev, wall_time=time.perf_counter() - start)


__all__ = [
    "ENUMERATION_CAP", "CONNECTED_GRAPH_COUNTS", "enumerate_connected",
    "BuiltIn", "File", "SweepReport", "sweep_theorem", "LemmaReport",
    "LEMMA_IDS", "verify_lemma", "verify_charpoly_identities",
    "default_identity_grid", "SWEEP_SCHEMA", "LEMMA_SCHEMA",
]
