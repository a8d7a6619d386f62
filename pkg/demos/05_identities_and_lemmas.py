#!/usr/bin/env python3
"""Exact polynomial identities and the supporting inequality suites."""

from matchspec import verify_charpoly_identities, verify_lemma

print("== quotient polynomial identities (exact integer comparison) ==")
report = verify_charpoly_identities()
print(f"{report.instances} family/partition instances checked; "
      f"{len(report.violations)} coefficient mismatches; "
      f"worst |root - rho| = {report.max_equality_gap:.2e}")
for violation in report.violations:
    print(f"   MISMATCH: {violation}")

print("\n== inequality suites ==")
for lemma in ("l2.1", "l2.2", "l2.4", "l2.5", "l2.8", "l2.9", "l2.10", "l2.11"):
    r = verify_lemma(lemma)
    status = "ok" if r.ok else f"{len(r.violations)} VIOLATIONS"
    print(f"{lemma}: {r.instances} instances, {status} "
          f"(gap {r.max_equality_gap:.4g}, {r.wall_time:.2f}s)")
    for note in r.notes:
        print(f"   {note}")
    for violation in r.violations:
        print(f"   {violation}")
