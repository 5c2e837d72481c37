"""Exact construction and brute-force verification of monomial Rota-Baxter and
homomorphic averaging operators on F[x, y]."""

from .errors import (DegenerateDenominator, DiscriminantMismatch, DivisionByZero,
                     ExponentOutOfWindow, InvalidFamilyParams, RotaBaxterError,
                     UnclassifiedMonomial)
from .exactfield import QuadExt, field_arith, parse_field, quad, rational_root, to_str
from .monoalg import Monomial, OperatorRule, SparsePoly, Term, Window, laurent_window
from .report import VerificationReport, Violation

__version__ = "0.1.0"
