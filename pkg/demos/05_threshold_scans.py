"""Which endpoint wins: thresholds and the open-regime scanner.

At offset 0 the split is exact: the first member dominates for
t < (n+1)/2 and the top member from there on, strictly once n >= 6.
For general offsets the top member provably dominates at large t; below
that threshold the ordering is only conjectured, so the scanner reports
sign evidence without asserting anything.
"""

from starextremal import counts

print("Gap between first and top member at offset 0 (n=12):")
for t in range(1, 12):
    f = counts.gap_first_vs_top(12, t)
    side = "first" if f > 0 else ("top" if f < 0 else "tie")
    print(f"  t={t:>2}: gap={f:>6}  larger: {side}")

print("\nthreshold_compare against the proven statement, n=8:")
for t in range(1, 8):
    r = counts.threshold_compare(8, 0, t)
    print(f"  t={t}: {r.ordering:<10} strict={r.strict} "
          f"predicted={r.predicted} consistent={r.consistent}")

print("\nBase gap identity f(2t, t) = C(2t-2, t-1) - 2:")
for t in (3, 4, 5, 10, 20):
    print(f"  t={t:>2}: {counts.gap_first_vs_top(2 * t, t)}")

print("\nConjecture scanner (signs of top - first below the threshold),")
print("offsets -1..2, n up to 40; -1 everywhere is the conjectured value:")
res = counts.conjecture_scan(4, 40, -1, 2)
signs = {}
for row in res.rows:
    signs.setdefault(row.ell, set()).add(row.sign)
for ell in sorted(signs):
    print(f"  ell={ell:>2}: signs seen {sorted(signs[ell])}, "
          f"strict from n={res.persistent_from[ell]}")
