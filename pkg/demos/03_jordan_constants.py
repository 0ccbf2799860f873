"""Jordan constants of small groups and of the automorphism groups from the worked examples."""
from dpjordan.constructions import dp4_sign_group, dp6_group, dp8_product_group, dp8_s5
from dpjordan.jordan import jordan_constant
from dpjordan.perms import alternating_group, dihedral_group, symmetric_group

# %% Warm-up: nu(G) is the least index of a normal abelian subgroup, J(G) its max over subgroups
for name, G in [("S3", symmetric_group(3)), ("D4", dihedral_group(4)),
                ("A4", alternating_group(4)), ("S4", symmetric_group(4))]:
    r = jordan_constant(G)
    print(f"{name}: |G|={r.group_order} nu={r.nu} J={r.jordan} ({r.method})")

# %% Example groups
examples = {
    "mu2^4 x| mu2 (order 32)": dp4_sign_group(),
    "mu5^2 x| mu2^2": dp6_group(5),
    "mu7^2 x| mu2^2": dp6_group(7),
    "(A5 x A5) x| mu2": dp8_product_group(),
    "S5": dp8_s5(),
}
for name, G in examples.items():
    r = jordan_constant(G)
    print(f"{name:>26}: |G|={r.group_order:5d}  J={r.jordan}  via {r.method}")

# %% A small subgroup cap turns an exhaustive sweep into a lower bound
r = jordan_constant(dp6_group(5), cap=16)
print("capped:", r.method, "lower bound", r.lower_bound)
