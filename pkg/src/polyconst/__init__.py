"""Equivalence constants between sup-norms and coefficient norms of homogeneous
polynomials on l_p^2, and the Hardy-Littlewood constants derived from them."""
from .constants import (ConstantResult, baseline_bound, big_K, estimate_little_k,
                        hl_constant, little_k, phi_psi, power_lower_bound,
                        power_ratio_same_sign, showcase_degree5)
from .extremal import (ExtremeFamily, ext_coeff_ball, ext_sup1, ext_supinf,
                       ext_supp)
from .optimize import OptResult, ScanConfig, maximize
from .poly import (INF, HomogeneousPoly2, ScaledLogValue, SpherePoint, coeff_norm,
                   evaluate, l2_of_power, parse_exponent, power, sphere_point,
                   sup_norm)

__version__ = "0.1.0"

__all__ = [
    "ConstantResult", "baseline_bound", "big_K", "estimate_little_k", "hl_constant",
    "little_k", "phi_psi", "power_lower_bound", "power_ratio_same_sign", "showcase_degree5",
    "ExtremeFamily", "ext_coeff_ball", "ext_sup1", "ext_supinf", "ext_supp",
    "OptResult", "ScanConfig", "maximize",
    "INF", "HomogeneousPoly2", "ScaledLogValue", "SpherePoint", "coeff_norm", "evaluate",
    "l2_of_power", "parse_exponent", "power", "sphere_point", "sup_norm",
]
