"""
Certifying a 2-design
=====================

The d^3 vectors W(k, l) psi_i, for psi_i the R_m eigenbasis, meet the
frame-potential lower bound 2 / (d (d + 1)). The standard basis does not.
"""
import numpy as np

from fourier2design import design
from fourier2design.eigenbasis import common_eigenbasis, projector_coefficients

for d in (3, 7, 11):
    b = common_eigenbasis(d)
    report = design.certify(design.wh_orbit(b.vectors, d), coefficients=projector_coefficients(b))
    print(d, report.N, "fp = %.12f" % report.frame_potential, "bound = %.12f" % report.fp_bound,
          "2-design:", report.is_2design)

# a counterexample
report = design.certify(design.wh_orbit(np.eye(3), 3))
print("standard basis: fp excess", report.fp_residual, "sym residual", report.sym_residual)

# at d = 3 the eigenvector with eigenvalue i is a SIC fiducial
b = common_eigenbasis(3)
ok, table = design.is_sic_fiducial(b.vectors[2], 3)
print("SIC fiducial:", ok)
print(np.round(table, 6))

# large d: the coefficient criterion only needs the d basis vectors
b = common_eigenbasis(19)
print("d = 19 coefficient residual:", design.coefficient_residual(projector_coefficients(b)))
