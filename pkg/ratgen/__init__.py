'''Rational generating functions of two-dimensional linear difference
equations with constant coefficients.'''
from .arith import Rational, rat_format, rat_parse  # noqa: F401
from .errors import *  # noqa: F401,F403
from .poly import Poly1, Poly2, RatFunc2, poly_gcd  # noqa: F401
from .recurrence import (DifferenceEquation2, InitialDataSpec,  # noqa: F401
                         LineRecurrence, Problem, ResolvedInitialData,
                         extend_line, phi_at, resolve, validate)
from .solver1d import RatFunc1, gf_1d, gf_1d_shifted  # noqa: F401
from .solver2d import (assemble_gf, boundary_residual, char_poly,  # noqa: F401
                       theorem1_residual)
from .oracle import (SeriesTable, compare_tables, expand_ratfunc,  # noqa: F401
                     expand_table)

__version__ = '0.1.0'
