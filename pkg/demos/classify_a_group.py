"""
Recognising a disguised group
=============================

Start from a listed group, hide it behind a random change of basis and
ask the classifier to find it again.
"""

import numpy as np

from e2class import GroupSpec, classify, entry, ortho_complement, verify
from e2class.catalog import DUAL

rng = np.random.default_rng(7)

# rotation-dilations with slope 1.25 acting on the line through the identity
original = entry("L2.1").spec({"alpha": 1.25})
g = rng.normal(size=(2, 2))
disguised = original.conjugate(g)
print("Sigma generator:", np.round(disguised.sigma.generators[0], 4).tolist())
print("algebra generator:", np.round(disguised.h.generators[0], 4).tolist())

label, cert = classify(disguised)
print("label", label.id, "params", label.params)
print("conjugator", np.round(cert.conjugator, 6).tolist())
print("residuals", cert.residual_sigma, cert.residual_h)

# the certificate is checked from scratch, not trusted
print("verified:", verify(disguised, label, cert).passed)

# orthogonal complement of Sigma with the transposed algebra: the twin group
twin = GroupSpec(ortho_complement(disguised.sigma), disguised.h.transpose())
twin_label, _ = classify(twin)
print("twin", twin_label.id, "expected", DUAL[label.id], twin_label.params)
