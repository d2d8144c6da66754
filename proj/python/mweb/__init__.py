"""Weighted bipartite biclique toolkit: solvers, reductions, bicluster
scoring and binary-matrix summarization."""

from ._mweb import (  # noqa: F401
    Biclique,
    BinaryMatrix,
    CapacityError,
    Method,
    Objective,
    OptResult,
    ProductParams,
    SambaRefinedParams,
    SambaSimpleParams,
    SimpleGraph,
    Summary,
    ValidationError,
    WeightedBipartiteGraph,
    WeightSetDescriptor,
    amplification_factor,
    biclique_weight,
    binomial_tail,
    brute_force_mdlh,
    clique_number,
    clique_to_mweb,
    gamma_product,
    log_likelihood_ratio,
    mdlh_to_problem_p,
    mweb_to_problem_p,
    problem_p_value,
    project_solution,
    p_star,
    ratio_within_window,
    refined_weights,
    significance,
    simple_weights,
    solve_branch_bound,
    solve_exact,
    solve_local_search,
    solve_mdlh,
    theoretical_copies,
    validate_summary,
    weight_set_of,
)

__version__ = "0.1.0"
