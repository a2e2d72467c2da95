"""Exact verification of root-system, lattice, matrix-group, and block invariants."""

from ._blockcheck import (
    __version__,
    aut_is_two_group,
    aut_order,
    classify_case,
    classify_central,
    gl42_certificate,
    lattice_quotient,
    module_names,
    rank2_invariants,
    run_checks,
    same_orbit,
    sl2_shapes,
    torus_fixed_order,
    weyl_orbit_size,
)

__all__ = [
    "__version__",
    "aut_is_two_group",
    "aut_order",
    "classify_case",
    "classify_central",
    "gl42_certificate",
    "lattice_quotient",
    "module_names",
    "rank2_invariants",
    "run_checks",
    "same_orbit",
    "sl2_shapes",
    "torus_fixed_order",
    "verify_all",
    "weyl_orbit_size",
]


def verify_all(module=""):
    """Run the registered checks and summarize the outcome.

    Returns a dict with ``total``, ``passed``, ``failed``, and the list of
    failing check ids.
    """
    records = run_checks(module)
    failures = [r["id"] for r in records if not r["pass"]]
    return {
        "total": len(records),
        "passed": len(records) - len(failures),
        "failed": len(failures),
        "failures": failures,
    }
