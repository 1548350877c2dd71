//! Semi-discrete finite-volume operator and its time integration.
//!
//! [`Discretization`] precomputes node weights, bottom tables and the
//! ratio of specific heats; [`Discretization::assemble`] produces the face
//! fluxes and sources of one stage, and [`Stepper`] advances a field with
//! the strong-stability-preserving Runge–Kutta method, limiting the fluxes
//! of nonnegative components at every stage.

mod assemble;
mod discretization;
mod draining;
mod flux;
mod run;
mod ssprk;

pub use assemble::{cfl_dt, DirectionFluxes, RhsBuffer};
pub use discretization::{bottom_tables, node_coords, BottomTables, Discretization, SchemeParams};
pub use draining::{drain_time, draining_limit, snap_negatives, SnapReport};
pub use flux::{cu_combine, cu_flux, DEGENERATE_SPREAD};
pub use run::{
    run, Diagnostics, RunReport, Snapshot, SolverConfig, StepRule, Stepper, SNAP_TOLERANCE,
};
pub use ssprk::ssprk3_step;
