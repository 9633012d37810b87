"""Fourier-matrix eigenbases from the commuting family R_m and the projective
2-designs generated by their Weyl-Heisenberg orbits."""

from .design import (DesignReport, ProjectorOrbit, certify, frame_potential,
                     is_sic_fiducial, reconstruct_state, sym_residual,
                     tomography_coefficients, wh_orbit)
from .eigenbasis import (FourierEigenbasis, ProjectorCoefficients, common_eigenbasis,
                         fourier_multiplicities, projector_coefficients, x_matrix)
from .search import SearchConfig, SearchResult, eigenspace_frame, search
from .weyl_heisenberg import (FSLElement, clifford_rep_appleby, clifford_rep_wh_expansion,
                              fourier, fsl_elements, r_matrix, wh)

__version__ = "0.1.0"
