"""Endpoint bounds and extremal-set descriptions.

Along the family index the star count is convex, so the maximum over all
graphs with a given degree floor lacking the property sits at one of two
endpoint indices: ID (forced by the degree floor) or I0 (the top of the
range).  Which endpoint wins, and whether t exceeds n-i-1, determines
whether one graph, two graphs, or a whole spanning-subgraph family is
extremal.
"""

from starextremal import counts

print("Bound for non-hamiltonian graphs, n=8, min degree d=0:")
for t in range(1, 8):
    b = counts.star_bound_g(8, 0, 0, t)
    print(f"  t={t}: bound={b.value:>4}  argmax={b.tag:<4} "
          f"(ID i={b.i_id}: {b.value_id}, I0 i={b.i_i0}: {b.value_i0})")

print("\nThe series across the whole index range (n=8, ell=0, t=2):")
s = counts.star_series_g(8, 0, 2, 1, counts.index_i0_g(8, 0))
print("  values:", s.values)
print("  deltas:", s.deltas, "(nondecreasing:", s.deltas_nondecreasing(), ")")

print("\nExtremal sets at n=10, ell=0, d=4 (both endpoints coincide at i=4):")
for t in (2, 5, 6, 9):
    d = counts.extremal_description(10, 0, 4, t)
    names = ", ".join(
        f"{'member' if e.kind == 'single' else 'family'}(i={e.i}, "
        f"{e.labeled_count} labeled)" for e in d.entries)
    print(f"  t={t}: case={d.case:<10} bound={d.bound:>4}  ->  {names}")

print("\nConnectivity family: at t=1 the series strictly decreases, so the")
print("left endpoint alone is the bound (n=10, k=2):")
s = counts.star_series_h(10, 2, 1, 1, counts.index_i0_h(10, 2))
print("  degree-sum values:", s.values)
print("  deltas:", s.deltas, " (closed form 4i+2k-2n-4, all <= -2)")
b = counts.star_bound_h(10, 2, 1, 1)
print(f"  bound at t=1: {b.value} argmax={b.tag}")
