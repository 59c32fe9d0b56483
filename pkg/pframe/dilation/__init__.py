from .dilation_systems import DilationSystem, build_dilation, minimal_nprime
from .cuntz_operators import (apply_dilated_S, apply_dilated_S_adjoint,
                              dilated_frame_element, cuntz_check, project_V,
                              compatibility_check, compression_check,
                              orthonormal_basis_check, nu, nu_normalization_check)
