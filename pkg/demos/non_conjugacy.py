"""
Telling listed groups apart
===========================

Two pieces of evidence that different labels are different groups:
conjugation invariants, and a blind search for a conjugator that comes
back empty.
"""

import numpy as np

from e2class import SearchConfig, entry, invariants, search_conjugator

# same dimension, same Sigma, different algebras
a = entry("L3.5").spec()
b = entry("L3.6").spec()
print(invariants(a))
print(invariants(b))

res = search_conjugator(a, b, SearchConfig(restarts=100, seed=1))
print("conjugator found:", res.conjugator is not None, "best distance %.3f" % res.distance)

# a genuine conjugate is found quickly
g = np.array([[1.1, 0.3], [-0.2, 0.9]])
res = search_conjugator(b.conjugate(g), b, SearchConfig(seed=2))
print("conjugate recovered:", res.conjugator is not None, "distance %.1e" % res.distance)

# rotation-dilations: alpha = 0 loses the rotation, visible in the traceless part
for alpha in (0.0, 0.5):
    v = invariants(entry("L2.1").spec({"alpha": alpha}))
    print(alpha, v.dim_traceless, v.params)
print(invariants(entry("L2.2").spec()).dim_traceless)
