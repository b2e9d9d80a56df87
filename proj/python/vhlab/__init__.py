"""vhlab: exact computational laboratory for a virtually-Heisenberg walk.

Everything heavy lives in the compiled extension ``vhlab._core``; this
package re-exports it and adds a couple of pure-Python conveniences.
Big integers cross the boundary as native Python ints.
"""

import json as _json

from ._core import (  # noqa: F401
    algebraic_area,
    brute_force_closed,
    check_recurrence,
    cogrowth_check,
    complexity_profile,
    count_abcc,
    count_closed,
    count_reduced_split,
    crt_witness,
    density_constant,
    density_scan,
    enumerate_Sn,
    eval_word,
    extract_even,
    f_sign,
    guess_recurrence,
    h3_lazy_ratio,
    max_square_divisor,
    miracle_report,
    qf_members,
    r2_formula,
    saturation_scan,
    sl3_check,
    verify_witness,
    winding_grid,
)

__all__ = [
    "algebraic_area",
    "brute_force_closed",
    "check_recurrence",
    "cogrowth_check",
    "complexity_profile",
    "count_abcc",
    "count_closed",
    "count_reduced_split",
    "crt_witness",
    "density_constant",
    "density_scan",
    "enumerate_Sn",
    "eval_word",
    "extract_even",
    "f_sign",
    "guess_recurrence",
    "h3_lazy_ratio",
    "max_square_divisor",
    "miracle_report",
    "qf_members",
    "r2_formula",
    "recurrence_coeffs",
    "saturation_scan",
    "sl3_check",
    "verify_witness",
    "winding_grid",
]

__version__ = "1.0.0"


def recurrence_coeffs(rec_json):
    """Decode a recurrence JSON string into a list of integer coefficient
    vectors [p_0, ..., p_k] with p_i[j] multiplying n^j."""
    data = _json.loads(rec_json)
    polys = data["p"] if isinstance(data, dict) else data
    return [[int(c) for c in poly] for poly in polys]
