"""Inversive congruential generators modulo 2^t: sequences, exponential
sums, exact discrepancy, and a machine-verification suite for the exact
identities and desk-scale inequalities behind their equidistribution
bounds."""

from .arith2adic import OrderInfo, beta_decompose, mult_order, v2
from .discrepancy import (
    DiscrepancyReport,
    PointSet,
    TheoremBounds,
    brute_force_discrepancy,
    empirical_exponent,
    erdos_turan_bound,
    exact_discrepancy,
    points_from_params,
    theorem_bounds,
)
from .errors import BudgetError, DegenerateError, DomainError, NonSplitError
from .fexpansion import FExpansion, build_F, congruence_check, reduce_phases
from .generator import (
    GeneratorParams,
    MobiusMatrix,
    ParityClass,
    Trajectory,
    closed_form_traj,
    iterate,
    matrix_from_params,
    params_from_matrix,
    period,
    validate_matrix,
)
from .kernels import BACKEND
from .meanvalue import FordBound, MeanValueCount, count_solutions, ford_bound
from .sums import (
    KorobovInput,
    SpectrumReport,
    SumSeries,
    double_sum,
    exp_sum,
    korobov_rhs,
    shift_reduction_check,
    spectrum,
)
from .verify import VerifyOptions, run_all

__version__ = "0.1.0"
