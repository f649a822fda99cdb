"""The two extremal families and their exact star counts.

Family G members are K_{i+l} + (I_i u K_{n-2i-l}): a dominating clique
joined to an independent set plus a clique.  Family H members are
K_{k-1} + (K_i u K_{n-k-i+1}).  Star counts come out of the degree lists
alone, so the closed forms and the constructed graphs must agree exactly.
"""

from starextremal import counts, graphs

print("Family G member (n=10, ell=0, i=4):")
g = graphs.build_g(10, 0, 4)
print("  graph6:", graphs.graph6_encode(g))
print("  degree list:", graphs.degree_sequence(g))
print("  closed-form list:", counts.degree_list_g(10, 0, 4))

print("\nStar counts s_t for t = 1..9 (closed form vs constructed graph):")
for t in range(1, 10):
    closed = counts.stars_g(10, 0, 4, t)
    direct = graphs.count_stars(g, t)
    print(f"  t={t}: {closed:>6} {'==' if closed == direct else '!='} {direct}")

print("\nFamily H member (n=7, k=3, i=2): K_2 + (K_2 u K_3)")
h = graphs.build_h(7, 3, 2)
print("  degree list:", graphs.degree_sequence(h))
print("  s_3 =", counts.stars_h(7, 3, 2, 3))

print("\nThe spanning-subgraph family around (n=6, ell=0, i=1) "
      f"has {counts.family_size(6, 0, 1)} labeled members;")
print("around (n=10, ell=0, i=4) only",
      counts.family_size(10, 0, 4), "(the clique part is a K_2):")
for member in graphs.enumerate_family(10, 0, 4):
    print("  ", graphs.graph6_encode(member),
          graphs.degree_sequence(member))

print("\nDegenerate first member at ell=-1 (an isolated vertex plus K_4):")
print("  ", graphs.degree_sequence(graphs.build_g(5, -1, 1)))
