"""Exact property deciders, the degree closure, and the witness.

Family members are engineered to fail their matched property: deleting
the dominating clique leaves too many components.  The deciders confirm
this, the closure demonstrates stability (adding an edge between
vertices with large degree sum never creates the property), and the
witness extracts the index certifying the degree condition every lacking
graph must satisfy.
"""

import random

from starextremal import graphs
from starextremal import properties as props
from starextremal.properties import PropertySpec

g = graphs.build_g(6, 0, 2)          # K_2 + (I_2 u K_2)
print("K_2 + (I_2 u K_2):", graphs.degree_sequence(g))
print("  hamiltonian:", props.is_hamiltonian(g))
w = props.chvatal_witness(g, PropertySpec("hamiltonian"))
print(f"  witness: i*={w.i_star}, {w.low_count} vertices of degree "
      f"<= {w.low_cap}, {w.high_count} of degree >= {6 - w.i_star}")

print("\nOther families and their forbidden properties:")
print("  I_1 u K_6 traceable:", props.is_traceable(graphs.build_g(7, -1, 1)))
print("  K_2+(I_1 u K_4) hamiltonian-connected:",
      props.is_hamiltonian_connected(graphs.build_g(7, 1, 1)))
print("  K_3+(I_1 u K_4) 2-edge-hamiltonian:",
      props.is_k_edge_hamiltonian(graphs.build_g(8, 2, 1), 2))
print("  K_3+(I_1 u K_4) 2-hamiltonian:",
      props.is_k_hamiltonian(graphs.build_g(8, 2, 1), 2))
print("  K_1+(K_1 u K_4) connectivity:",
      props.vertex_connectivity(graphs.build_h(6, 2, 1)))

print("\nClosure at the stability threshold preserves each property.")
rng = random.Random(5)
n = 8
edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.45]
h = graphs.from_edges(n, edges)
spec = PropertySpec("hamiltonian")
closed = props.bc_closure(h, spec.stability_threshold(n))
print(f"  random graph: {graphs.edge_count(h)} edges, "
      f"hamiltonian={props.is_hamiltonian(h)}")
print(f"  closure:      {graphs.edge_count(closed)} edges, "
      f"hamiltonian={props.is_hamiltonian(closed)}")

print("\nThe cycle kernel takes forced edges (here: grow a cycle through")
print("a fixed 2-edge path of the Petersen graph):")
pet = graphs.petersen_graph()
full = (1 << 10) - 1
print("  petersen hamiltonian:", props.is_hamiltonian(pet))
print("  spanning cycle through path 0-1-2:",
      props._ham_cycle_masks(pet.rows, full, ((0, 1), (1, 2))))
