"""Trigonometric time integrators for the Zakharov system.

Arrays passed in and returned are collocation values on the grid points
x_j = -L/2 + j L / K.
"""

from ._zakharov import (
    ConvergenceRecord,
    DivergenceError,
    DomainTooSmallError,
    GridMismatchError,
    IoError,
    ReferenceDisagreementError,
    RunRecord,
    SchemeMismatchError,
    StabilityError,
    State,
    TorusGrid,
    cfl_step,
    composite_error,
    conservation_run,
    convergence_study,
    example1_data,
    fit_order,
    hamiltonian,
    l2_norm_E,
    read_convergence,
    read_snapshot,
    rk4_max_stable_tau,
    run,
    sobolev_norm,
    soliton_exact,
    step,
    write_convergence,
    write_run,
    write_snapshot,
)

__all__ = [name for name in dir() if not name.startswith("_")]
