"""
GL(2, R) as a Lorentz group
===========================

Symmetric 2x2 matrices are points (x, y, t) of Minkowski space, and
``h -> h^{-T} . h^{-1}`` acts there by scaled Lorentz transformations.
"""

import numpy as np

from e2class import classify_vector, iwasawa_sl2, lorentz_of
from e2class.core import ETA_FORM
from e2class.lorentz import lorentz_iwasawa

# a unimodular matrix and its 3x3 image
g = np.array([[2.0, 1.0], [3.0, 2.0]])
m = lorentz_of(g)
print(np.round(m, 4))
print("preserves the form:", np.allclose(m.T @ ETA_FORM @ m, ETA_FORM))
print("keeps the future:", m[2, 2] > 0)

# -I acts trivially, scalars shrink
print(np.allclose(lorentz_of(-np.eye(2)), np.eye(3)), np.allclose(lorentz_of(3 * np.eye(2)), np.eye(3) / 9))

# shear, dilation and rotation factors of g
dec = iwasawa_sl2(g)
print(dec)
print("recomposed:", np.allclose(dec.matrix(), g))

# one representative of each of the six orbits, and where g moves it
for u in ([0, 0, 0], [0, 0, 1], [0, 0, -1], [1, 0, 1], [-1, 0, -1], [0, 1, 0]):
    u = np.array(u, dtype=float)
    print(u, classify_vector(u).value, "->", np.round(m @ u, 3), classify_vector(m @ u).value)

# the factors fix u_1, u_0 and u_-1 respectively
for kind, u in (("K", [0, 0, 1]), ("N", [0.5, 0, 0.5]), ("A", [0, 1, 0])):
    print(kind, np.allclose(lorentz_iwasawa(kind, 0.9) @ u, u))

