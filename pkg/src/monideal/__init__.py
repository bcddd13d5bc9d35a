"""Size, depth and Stanley depth of monomial ideals, with theorem-checking suites."""

from .core import MonomialIdeal, lexsegment, load_ideal, modify_trivial, parse_ideal
from .decomp import associated_primes, primary_decomposition, size_report
from .homology import betti_lcm, betti_taylor, depth_ideal, depth_quotient
from .sdepth import check_certificate, sdepth, sdepth_ideal, sdepth_quotient
from .verify import default_spec, run_suite

__all__ = [
    "MonomialIdeal", "lexsegment", "load_ideal", "modify_trivial", "parse_ideal",
    "associated_primes", "primary_decomposition", "size_report",
    "betti_lcm", "betti_taylor", "depth_ideal", "depth_quotient",
    "check_certificate", "sdepth", "sdepth_ideal", "sdepth_quotient",
    "default_spec", "run_suite",
]
