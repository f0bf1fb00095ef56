"""
Executable reduction gadgets: OMv and 2D range problems encoded as dynamic
string instances, plus the alphabet lifts between inner product and Hamming
distance.
"""

from .backends import (
    CountingBackend,
    PerturbedIPBackend,
    approx_ip_backend,
    dynem_backend,
    dynhd_backend,
    dynip_backend,
)
from .grid import (
    GridEncoder,
    range_count_via_dynip,
    range_empty_via_approx_dynip,
    range_empty_via_dynem,
)
from .instances import GadgetResult, GridInstance, OMvInstance
from .lifts import (
    IP_TO_HD,
    IPMOD2_TO_TERNARY_HD,
    Lift,
    decode_hd,
    decode_hd_mod2,
    ip_via_lifted_dynhd,
    ipmod2_via_lifted_ternary_dynhd,
    lift_ip_to_hd,
    lift_ipmod2_to_hdmod2_ternary,
)
from .omv import (
    default_repetitions,
    omv_text_only,
    omv_via_approx_dynip,
    omv_via_dynem,
    omv_via_dynip_mod2,
    omv_via_dynip_modc,
)

__all__ = [
    "CountingBackend",
    "GadgetResult",
    "GridEncoder",
    "GridInstance",
    "IPMOD2_TO_TERNARY_HD",
    "IP_TO_HD",
    "Lift",
    "OMvInstance",
    "PerturbedIPBackend",
    "approx_ip_backend",
    "decode_hd",
    "decode_hd_mod2",
    "default_repetitions",
    "dynem_backend",
    "dynhd_backend",
    "dynip_backend",
    "ip_via_lifted_dynhd",
    "ipmod2_via_lifted_ternary_dynhd",
    "lift_ip_to_hd",
    "lift_ipmod2_to_hdmod2_ternary",
    "omv_text_only",
    "omv_via_approx_dynip",
    "omv_via_dynem",
    "omv_via_dynip_mod2",
    "omv_via_dynip_modc",
    "range_count_via_dynip",
    "range_empty_via_approx_dynip",
    "range_empty_via_dynem",
]
