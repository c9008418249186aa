"""Exact numerics for varieties uniruled by lines."""

from .algebra import BinaryForm, SymMatrix3, det3, distinct_projective_roots, poly_gcd
from .bundle import BundleContext, DivisorClass, check_identity_chi, check_veronese_bounds, invariants, triple_product
from .classifier import Flags, Outcome, PolarizedPair, Verdict, classify, delta_genus, sharp_inequality_check
from .fano import TABLE, corner_ledger, derive_d_n, verify_table
from .veronese import SectionCoefficients, build_matrix, count_degenerate_fibers, sharpness_sweep

__version__ = "0.1.0"
