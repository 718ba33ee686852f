"""Threshold conflict graphs and Bin Packing with Conflicts.

Submodules: ``graph`` (graph type and basic queries), ``density`` (threshold
and density formulas), ``generators`` (seeded graph and instance generators),
``threshold`` (recognition and structure), ``bppc`` (bounds and solvers),
``instance_io``, ``experiment`` and ``cli``.
"""

from .bppc import (
    BppcInstance,
    Decomposition,
    Packing,
    SolveResult,
    brute_force_oracle,
    decompose_universal,
    ffd_conflicts,
    lower_bound,
    solve_exact,
    verify_packing,
)
from .density import (
    approx_threshold_from_density,
    expected_bppc_lower_bound,
    expected_clique_size,
    expected_density_from_threshold,
    expected_universal_count,
    threshold_from_density,
)
from .generators import (
    GeneratorSpec,
    gen_bppc_instance,
    gen_interval,
    gen_soriano_gendreau,
    gen_threshold,
    gen_uniform_arbitrary,
)
from .graph import DensityReport, Graph, complement, degree_sequence, edge_density
from .threshold import (
    IntervalModel,
    Rejection,
    ThresholdCertificate,
    compute_last_col,
    derive_interval_model,
    intersection_graph,
    max_clique,
    max_independent_set,
    realize_threshold_representation,
    recognize_threshold,
    universal_vertices,
)

__version__ = "0.1.0"
