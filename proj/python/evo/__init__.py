"""Memetic (mu+lambda) evolutionary algorithms on graphs.

Darwinian, Baldwinian, Lamarckian, and partial-Lamarckian (LB) evolution for
maximum independent set and max-cut, the generalized deceptive-leading-blocks
benchmark, and a runtime-scaling harness for the (1+1) EA variants.
"""

from ._core import (
    AggregateScore,
    BitString,
    DlbProblem,
    EAConfig,
    EvalCounter,
    EvolutionKind,
    EvolutionType,
    EvoError,
    FitResult,
    Graph,
    GridBest,
    GridCell,
    GridReport,
    GridRow,
    GridSpec,
    LocalSearchResult,
    LsResult,
    McProblem,
    MisProblem,
    OnePlusOneResult,
    Problem,
    Rng,
    RunRecord,
    ScalingPoint,
    ScalingReport,
    ScalingRun,
    ScalingSeries,
    aggregate_scores,
    baldwin_value,
    bernoulli_mutation,
    derive_seed,
    dlb_scaling_experiment,
    enumerate_grid,
    fit_exponent,
    grid_search,
    hillclimb,
    population_diversity,
    read_grid_csv,
    read_scaling_csv,
    run_mu_plus_lambda,
    run_one_plus_one,
    uniform_crossover,
    write_grid_csv,
    write_scaling_csv,
)

__version__ = "0.1.0"

__all__ = [
    "AggregateScore",
    "BitString",
    "DlbProblem",
    "EAConfig",
    "EvalCounter",
    "EvolutionKind",
    "EvolutionType",
    "EvoError",
    "FitResult",
    "Graph",
    "GridBest",
    "GridCell",
    "GridReport",
    "GridRow",
    "GridSpec",
    "LocalSearchResult",
    "LsResult",
    "McProblem",
    "MisProblem",
    "OnePlusOneResult",
    "Problem",
    "Rng",
    "RunRecord",
    "ScalingPoint",
    "ScalingReport",
    "ScalingRun",
    "ScalingSeries",
    "aggregate_scores",
    "baldwin_value",
    "bernoulli_mutation",
    "derive_seed",
    "dlb_scaling_experiment",
    "enumerate_grid",
    "fit_exponent",
    "grid_search",
    "hillclimb",
    "population_diversity",
    "read_grid_csv",
    "read_scaling_csv",
    "run_mu_plus_lambda",
    "run_one_plus_one",
    "uniform_crossover",
    "write_grid_csv",
    "write_scaling_csv",
]
