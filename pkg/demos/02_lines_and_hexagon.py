"""Lines on blow-ups of the plane, and the hexagon on the sextic del Pezzo surface."""
from dpjordan.perms import center, subgroups
from dpjordan.picard import config_for_degree, graph_automorphisms, hexagon_structure_check

# %% Line counts and automorphism orders of the dual graphs by degree
for d in range(9, 2, -1):
    cfg = config_for_degree(d)
    order = graph_automorphisms(cfg.graph()).order if cfg.names else 1
    print(f"degree {d}: {len(cfg.names):2d} lines, graph automorphisms {order}")

# %% The hexagon
cfg = config_for_degree(6)
graph = cfg.graph()
print("edges:", graph.edges())
A = graph_automorphisms(graph)
ok, sigma = hexagon_structure_check(A)
print("order", A.order, "| splits as S3 x mu2:", ok, "| central involution:", sigma)
print("centre order:", center(A).order)
print("subgroup orders:", sorted(H.order for H in subgroups(A)))
