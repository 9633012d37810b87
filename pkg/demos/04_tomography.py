"""
Reconstructing a matrix from its orbit overlaps
===============================================

Any trace-one matrix is recovered from the d^3 numbers tr(rho P) / d^2.
"""
import numpy as np

from fourier2design import design
from fourier2design.eigenbasis import common_eigenbasis

rng = np.random.default_rng(0)
d = 7
orbit = design.wh_orbit(common_eigenbasis(d).vectors, d)

a = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
rho = a @ a.conj().T
rho /= np.trace(rho)

c = design.tomography_coefficients(rho, orbit)
rec = design.reconstruct_state(c, orbit)
print(len(c), "coefficients, sum", np.round(c.sum(), 12))
print("round trip error:", np.linalg.norm(rec - rho))

# non-Hermitian input works too
m = a / np.trace(a)
print("non-Hermitian round trip error:",
      np.linalg.norm(design.reconstruct_state(design.tomography_coefficients(m, orbit), orbit) - m))
