"""
Searching Fourier eigenspaces for 2-design bases
================================================

Rotates an orthonormal frame inside each eigenspace of F and minimizes the
frame-potential excess of the Weyl-Heisenberg orbit with Nelder-Mead.
"""
import time

from fourier2design.eigenbasis import common_eigenbasis
from fourier2design.search import SearchConfig, alignment, search

t0 = time.perf_counter()
r = search(SearchConfig(d=7, restarts=20, seed=1))
print("d = 7: residual %.2e, %d distinct solution(s), %.1f s"
      % (r.best_residual, r.distinct_solutions, time.perf_counter() - t0))
print("infidelity against the R_m eigenbasis: %.1e" % alignment(r.best_vectors, common_eigenbasis(7).vectors)[0])
print("largest imaginary part after phase fixing: %.1e" % r.max_imag_after_phase)

# two vectors from the +1 eigenspace and one from -1 give a 75-vector design at d = 5
r = search(SearchConfig(d=5, subset=(2, 1, 0, 0), restarts=20, seed=1))
print("d = 5 subset:", r.converged, "%.2e" % r.best_residual)

# d = 4 and 6 do not reach the bound
for d in (4, 6):
    r = search(SearchConfig(d=d, restarts=10, seed=1, jobs=4))
    print(d, r.note)
