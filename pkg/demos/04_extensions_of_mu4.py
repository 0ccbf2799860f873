"""Every extension 1 -> mu_2^k -> G -> mu_4 -> 1 from normalized cocycles, and its Jordan constant."""
from collections import Counter

from dpjordan.extensions import actions, enumerate_extensions, regular_representation, valid_cocycles
from dpjordan.jordan import jordan_constant

# %% Cocycle counts per action
for k in (0, 1, 2):
    for phi in actions(k):
        print(f"k={k} action {phi}: {len(valid_cocycles(k, phi))} normalized cocycles")

# %% Jordan constants over all 160 extensions with k = 2
hist = Counter()
central = Counter()
for e in enumerate_extensions(2):
    hist[jordan_constant(regular_representation(e.group)).jordan] += 1
    central[(e.trivial_action, e.kernel_is_central())] += 1
print("J histogram:", dict(sorted(hist.items())))
print("(trivial action, central kernel):", dict(central))
