"""Exact enumeration and height analysis of skew Dyck paths with two down-step colours."""
from .closed_forms import coefficient_asymptotic, s_coefficient, s_series, weighted_trinomial
from .height import average_height_asymptotic, average_height_exact, height_distribution, sh_ratfn
from .levels import level_closed, level_dp, truncated_solution
from .paths import Path, Step, count_by_height, count_paths, enumerate_paths, validate_path
from .sampler import sample_path
from .series import Polynomial, RationalFn, Series

__version__ = "0.1.0"
