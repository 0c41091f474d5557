"""Named identity checks, each a function of the truncation order."""
from __future__ import annotations

from typing import Callable

from . import height, levels
from .closed_forms import CheckReport, combine, compare, functional_equation_residual, substitution_identity_check
from .series import Series


def _functional_equation(order: int) -> CheckReport:
    return compare("functional_equation", functional_equation_residual(order), Series.zero(order), order)


def _tail(order: int) -> CheckReport:
    return combine("tail_formula", [height.tail_formula_check(h, order) for h in (0, 2, 5)], order)


def _ph_qh(order: int) -> CheckReport:
    return combine("ph_qh_closed", [height.ph_qh_closed_check(h, order) for h in (0, 1, 3)], order)


def _boundaries(order: int) -> CheckReport:
    return combine("boundaries", [levels.boundary_check("g", order), levels.boundary_check("h", order)], order)


CHECKS: dict[str, Callable[[int], CheckReport]] = {
    "functional_equation": _functional_equation,
    "substitution": lambda order: substitution_identity_check(max(order, 2)),
    "s_of_zsq": lambda order: levels.s_of_zsq_identity_check(max(order, 2)),
    "level_closed": lambda order: levels.level_agreement_check(8, order),
    "kernel": levels.kernel_check,
    "three_term": lambda order: levels.three_term_check(6, order),
    "boundaries": _boundaries,
    "dk_closed": lambda order: levels.dk_closed_check(12, order),
    "truncation": lambda order: levels.truncation_check(8, order),
    "tail_formula": _tail,
    "ph_qh_closed": _ph_qh,
}

# Relations in their as-printed form that the exact computation refutes.
# Addressable by name, excluded from --all.
KNOWN_FALSE: dict[str, Callable[[int], CheckReport]] = {
    "g_truncation_dp": lambda order: levels.g_truncation_dp_check(8, order),
    "g_boundary_printed": lambda order: levels.boundary_check("g", order, printed=True),
    "s_of_zsq_printed_radicand": lambda order: levels.s_of_zsq_identity_check(
        max(order, 2), levels.MISPRINTED_RADICAND
    ),
}


def run_check(name: str, order: int) -> CheckReport:
    if name in CHECKS:
        return CHECKS[name](order)
    if name in KNOWN_FALSE:
        return KNOWN_FALSE[name](order)
    raise KeyError(name)


def run_all(order: int) -> CheckReport:
    return combine("all", [fn(order) for fn in CHECKS.values()], order)
