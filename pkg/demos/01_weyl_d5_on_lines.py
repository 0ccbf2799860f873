"""W(D5) as signed permutations of five indices, acting on the 16 lines of a quartic del Pezzo surface."""
from collections import Counter

from dpjordan import weyl
from dpjordan.perms import conjugacy_classes, element_order

# %% The sixteen lines and their intersection graph
cfg = weyl.lines()
print("lines:", " ".join(cfg.names))
print("each line meets", sorted({sum(1 for x in row if x == 1) for row in cfg.gram}), "others")

# %% Some elements and how they move lines
for text in ["i12", "i1234", "(1 2 3 4 5)", "(1 2 3)", "(1 2 3 4)*i15"]:
    g = weyl.parse_element(text)
    p = weyl.line_action(g)
    print(f"{text:>14}  order {element_order(p)}  fixes {sorted(weyl.fixed_lines(g))}")
    print(" " * 16 + weyl.line_cycles(p))

# %% The whole group: 1920 elements, classes by element order
G = weyl.full_group()
print("|W(D5)| =", G.order)
classes = conjugacy_classes(G)
print("classes per element order:", dict(sorted(Counter(element_order(c[0]) for c in classes).items())))
