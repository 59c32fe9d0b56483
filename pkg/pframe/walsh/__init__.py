from .operators import apply_S, apply_S_adjoint, apply_word, resolution_of_identity_check
from .frame_families import (FrameFamily, CoefficientSet, frame_element, tensor_power,
                             level_parseval_check, analyze, synthesize,
                             parseval_residual, long_word_check)
