"""Exact counting invariants of braid closures over finite groups, with a
machine check of the mod-p congruence relating a periodic link to its
quotient, and finite-field trace/Frobenius checks."""

from .braids import BraidWord, braid_power, components, compose, parse_braid, permutation
from .congruence import check_preconditions, sweep, verify
from .dw import dw_class, dw_exact, dw_table
from .gf import field_make, frobenius_trace_check, mat_mul, mat_pow, trace
from .groups import (
    FiniteGroup,
    cyclic,
    dihedral,
    from_cayley_table,
    from_group_spec,
    from_permutation_generators,
    quaternion8,
    symmetric,
)
from .holonomy import artin_action, count_homs, enumerate_homs, longitude_image

__all__ = [
    "BraidWord",
    "FiniteGroup",
    "artin_action",
    "braid_power",
    "check_preconditions",
    "components",
    "compose",
    "count_homs",
    "cyclic",
    "dihedral",
    "dw_class",
    "dw_exact",
    "dw_table",
    "enumerate_homs",
    "field_make",
    "frobenius_trace_check",
    "from_cayley_table",
    "from_group_spec",
    "from_permutation_generators",
    "longitude_image",
    "mat_mul",
    "mat_pow",
    "parse_braid",
    "permutation",
    "quaternion8",
    "sweep",
    "symmetric",
    "trace",
    "verify",
]

__version__ = "0.1.0"
