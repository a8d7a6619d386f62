#!/usr/bin/env python3
"""Catalog of the extremal families and the thresholds they attain.

Every family in the registry sits exactly at a size or spectral threshold
while failing the corresponding matching property; this script tabulates
them and shows the text grammar for building graphs by hand.
"""

from matchspec import (is_1_excludable, is_k_extendable, spectral_radius,
                       to_graph6)
from matchspec.families import (FAMILY_REGISTRY, build, build_named,
                                format_spec, named_spec, parse_family_text)
from matchspec.theorems import (size_threshold_excludable,
                                size_threshold_extendable,
                                spectral_threshold_excludable,
                                spectral_threshold_extendable)

print("== registry ==")
samples = {"thm11-extremal": {"n": 10, "k": 1, "s": 3},
           "thm11-exc1": {"n": 8, "k": 1}, "thm11-exc2": {"k": 1},
           "thm13-f1": {}, "thm13-f2": {}, "thm13-f3": {"n": 10},
           "thm13-fact3-pendant": {"n": 12, "s": 2},
           "thm13-fact3-split": {"n": 10, "s": 4},
           "lem210": {"n": 10}, "w1": {"n": 10}, "w2": {"n": 10}}
assert set(samples) == set(FAMILY_REGISTRY)
for fid, params in samples.items():
    spec = named_spec(fid, **params)
    g = build(spec)
    print(f"{fid:22s} {format_spec(spec):32s} n={g.n:3d} m={g.m:3d} "
          f"rho={spectral_radius(g).rho:8.4f}  {to_graph6(g)}")

print("\n== extension threshold, attained and failed ==")
for n, k in ((6, 1), (8, 1), (8, 2), (10, 1)):
    g = build_named("thm11-exc1", n=n, k=k)
    print(f"n={n}, k={k}: size threshold {size_threshold_extendable(n, k)} "
          f"(graph has m={g.m}), spectral threshold "
          f"{spectral_threshold_extendable(n, k):.6f} "
          f"(graph has rho={spectral_radius(g).rho:.6f}), "
          f"k-extendable={is_k_extendable(g, k).holds}")

print("\n== exclusion threshold, attained and failed ==")
for n in (6, 8, 10):
    fid = {6: "thm13-f1", 8: "thm13-f2"}.get(n)
    g = build_named(fid) if fid else build_named("thm13-f3", n=n)
    print(f"n={n}: size threshold {size_threshold_excludable(n)} (m={g.m}), "
          f"spectral threshold {spectral_threshold_excludable(n):.6f} "
          f"(rho={spectral_radius(g).rho:.6f}), "
          f"1-excludable={is_1_excludable(g).holds}")

print("\n== the text grammar ==")
for text in ("K(2) v (K(3) u K1)", "K(5)^+", "K(3)+K(5)", "w2:n=14"):
    g = build(parse_family_text(text))
    print(f"{text:24s} -> n={g.n}, m={g.m}, graph6 {to_graph6(g)}")
