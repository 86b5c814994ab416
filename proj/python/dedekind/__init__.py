"""Subgroup lattices, conjugacy classes of subgroups and the ratios d' and d*.

Rationals come back as fractions.Fraction; reports as dicts in the same shape
as the CLI's JSON output.
"""

import json
from fractions import Fraction

from . import _core
from ._core import CapExceeded, Error, InvalidParameter, ParseError, __version__

__all__ = [
    "CapExceeded",
    "Error",
    "InvalidParameter",
    "ParseError",
    "canonical_spec",
    "d_prime",
    "d_star",
    "density",
    "dot",
    "formula",
    "info",
    "is_modular",
    "lattice",
    "order",
    "suites",
    "verify",
]

canonical_spec = _core.canonical_spec
lattice = _core.lattice
dot = _core.dot
is_modular = _core.is_modular


def order(spec):
    return int(_core.group_order(spec))


def info(spec, d_star=True, allow_slow=False, threads=1, max_order=512):
    """Invariant report; d_star is None above order 256 unless allow_slow."""
    report = json.loads(_core.report_json(spec, d_star, allow_slow, threads, max_order))
    for key in ("d_prime", "d_star"):
        if report[key] is not None:
            report[key] = Fraction(report[key]["num"], report[key]["den"])
    return report


def d_prime(spec, max_order=512):
    return Fraction(_core.d_prime(spec, max_order))


def d_star(spec, allow_slow=False, pruned=True, threads=1, max_order=512):
    return Fraction(_core.d_star(spec, allow_slow, pruned, threads, max_order))


_FORMULAS = {
    "modular": _core.modular_formula,
    "schmidt": _core.schmidt_formula,
    "dihedral": _core.dihedral_formula,
    "heisenberg": _core.heisenberg_formula,
    "section": _core.section_formula,
}


def formula(name, *params):
    if name == "gaussian":
        return int(_core.gaussian_binomial(*params))
    if name not in _FORMULAS:
        raise InvalidParameter(f"unknown formula {name!r}")
    return Fraction(_FORMULAS[name](*params))


def density(a, b, epsilon="1/100", budget=500):
    steps = _core.density(a, b, str(epsilon), budget)
    for s in steps:
        s["value"] = Fraction(s["value"])
        s["gap"] = Fraction(s["gap"])
    return steps


def suites():
    return list(_core.suite_names())


def verify(suite="all", threads=1):
    return json.loads(_core.verify_json(suite, threads))
