"""Exact A2 skein calculus and pure braid group representations on clasped A2 web spaces."""

from . import braid, coefficients, linalg, spider, triangulation, webs
from .braid import PureBraidWord, basis, basis_dim, check_pure_braid_relations, parse_word, rho_generator, rho_word
from .coefficients import ONE, V, ZERO, LaurentPoly, PoleError, RatFunc, bar, eval_numeric, monomial, qbinom, qint, qnum
from .linalg import RepMatrix, SingularMatrixError
from .spider import delta, sixj_mixed, sixj_square, tet, theta
from .triangulation import ColoredTriangulation, flip, t0

__version__ = "0.1.0"
