"""
The Weyl-Heisenberg group and the Fourier matrix
================================================

Builds the displacement operators for d = 7, checks how the Fourier matrix
acts on them, and walks through the cyclic subgroup of SL(2, Z_d) that
commutes with the Fourier element.
"""
import numpy as np

from fourier2design import weyl_heisenberg as whm

d = 7
w = whm.wh_all(d)          # w[r, s] is W(r, s)
f = whm.fourier(d)
print("tau =", np.round(whm.tau(d), 6))

# F W(r, s) F^-1 = W(-s, r): the Fourier matrix rotates the index plane
worst = max(np.abs(f @ w[r, s] @ f.conj().T - w[-s % d, r]).max()
            for r in range(d) for s in range(d))
print("max |F W F^-1 - W(-s, r)| =", worst)

# the subgroup {[[a, b], [-b, a]] : a^2 + b^2 = 1} is cyclic of order d + 1 here
elems = whm.fsl_elements(d)
gen = whm.fsl_generator(d)
print(len(elems), "elements, generator", (gen.alpha, gen.beta), "of order", gen.order())

# each element has a unitary representative, written two different ways
for g in elems[:4]:
    if g.beta == 0 or g.alpha == 1:
        continue
    a = whm.clifford_rep_appleby(g)
    b = whm.clifford_rep_wh_expansion(g)
    print((g.alpha, g.beta), "phase distance between the two forms:", whm.phase_distance(a, b))

# the Fourier matrix itself belongs to the family
g = whm.FSLElement(0, d - 1, d)
print("F equals the representative of (0, d-1):", np.allclose(whm.clifford_rep_appleby(g), f))
