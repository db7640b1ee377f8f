"""Desk-scale exact constructions for o_N and sp_2n and their
Gelfand-Tsetlin-type bases."""

from .construction import DeskScaleError, HWModule, Realization, build_module
from .signed_realization import (BCDIrrep, ClassicalAlgebra, apply_z, apply_z_ai,
                       apply_z_interp, apply_z_nminus, build_bcd_irrep,
                       fnn_action_check, gt_basis_bcd, gt_basis_checks,
                       lowering_zia, multiplicity_basis, v_plus_basis,
                       v_plus_mu, z_interp, z_interp_poly, zab_operators)
from .orthogonal_chain import OrthogonalChain, orth_basis_checks, orth_gt_basis

__all__ = [
    "DeskScaleError", "HWModule", "Realization", "build_module",
    "BCDIrrep", "ClassicalAlgebra", "apply_z", "apply_z_ai", "apply_z_interp",
    "apply_z_nminus", "build_bcd_irrep", "fnn_action_check", "gt_basis_bcd",
    "gt_basis_checks", "lowering_zia", "multiplicity_basis", "v_plus_basis",
    "v_plus_mu", "z_interp", "z_interp_poly", "zab_operators",
    "OrthogonalChain", "orth_basis_checks", "orth_gt_basis",
]
