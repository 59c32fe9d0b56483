from .words import Word, enumerate_words, all_words
from .grid_functions import (GridFunction, GridFunction1D, GridFunction2D,
                             inner_product, refine, norm, embed_V, step_breakpoints)
from .frame_matrices import (FrameMatrix, ValidationReport, Violation, validate,
                             orthonormal_completion, build_from_complement,
                             extract_complement, walsh_matrix, fourier_matrix,
                             random_parseval_frame, random_frame_matrix)
