"""Exact SL2 trace polynomials and universal character rings of one-relator groups."""

__version__ = "0.1.0"

from .fgword import Word, parse_word  # noqa: E402
from .mpoly import Poly, UniPoly, chebyshev  # noqa: E402
from .trace import oracle_check, trace_poly  # noqa: E402

__all__ = ["Poly", "UniPoly", "Word", "chebyshev", "oracle_check", "parse_word", "trace_poly", "__version__"]
