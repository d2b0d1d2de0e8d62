"""Wehrl-Renyi entropy of N-qubit states.

Five routes to the same quantity: exact subset enumeration, swap-operator
contraction, Husimi-function Monte Carlo, Haar local-twirl sampling, and a
shot-level two-copy measurement simulation, plus closed forms for the
benchmark families.
"""

__version__ = "0.1.0"

from .analytic import haar_mean_second_moment, wre_bounds, wre_closed_form
from .husimi import (BlochDirection, CoherentConfig, MomentEstimate,
                     WreEstimate, coherent_amplitudes, coherent_overlap,
                     husimi_value, mc_normalization_check, mc_second_moment,
                     sample_direction, wre_mc)
from .kernels import BACKEND
from .protocol import (ProtocolEstimate, ShotSummary, TwoCopyState,
                       evolve_two_copies, exact_success_probability,
                       pair_gate, sample_shots, wre_protocol)
from .purities import (PuritySumResult, partial_trace_dm, partial_trace_pure,
                       purity, purity_sum_dm, purity_sum_enum,
                       purity_sum_swap, wre_exact)
from .qstate import (DensityMatrix, PureState, apply_local_unitaries,
                     make_named_state, sample_haar_state, to_density_matrix)
from .twirl import (MomentCheckReport, haar_moment_check, sample_su2,
                    wre_twirl)

__all__ = [
    "BACKEND", "BlochDirection", "CoherentConfig", "DensityMatrix",
    "MomentCheckReport", "MomentEstimate", "ProtocolEstimate", "PureState",
    "PuritySumResult", "ShotSummary", "TwoCopyState", "WreEstimate",
    "apply_local_unitaries", "coherent_amplitudes", "coherent_overlap",
    "evolve_two_copies", "exact_success_probability",
    "haar_mean_second_moment", "haar_moment_check", "husimi_value",
    "make_named_state", "mc_normalization_check", "mc_second_moment",
    "pair_gate", "partial_trace_dm", "partial_trace_pure", "purity",
    "purity_sum_dm", "purity_sum_enum", "purity_sum_swap",
    "sample_direction", "sample_haar_state", "sample_shots", "sample_su2",
    "to_density_matrix", "wre_bounds", "wre_closed_form", "wre_exact",
    "wre_mc", "wre_protocol", "wre_twirl",
]
