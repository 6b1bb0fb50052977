//! Local Wigner rotations of spin-1/2 particles on circular orbits in a
//! rotating frame, and their imprint on a Sagnac interferometer.
//!
//! Geometric units (`c = 1`, lengths in metres) are used throughout; see
//! [`units`] for SI conversions.

#![allow(clippy::needless_range_loop, clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod geometry;
pub mod interferometer;
pub mod kinematics;
pub mod real;
pub mod units;
pub mod wigner;

pub use error::{Error, Result};
pub use geometry::{
    christoffel_at, spin_connection_at, to_coordinate, to_local, Christoffel, Frame, FrameVector,
    MetricProvider, MetricValue, RotatingMinkowski, SpacetimePoint, SpinConnection, Tetrad,
};
pub use interferometer::{
    beam_split, detect, entanglement_entropy, evolve_branches, visibility_deficit,
    BranchedSpinState, InterferometerOutput, SagnacReport, SagnacSetup, Spinor, SplitMode,
};
pub use kinematics::{
    branch_timing, four_acceleration, four_velocity, sagnac_delay, BranchTiming, CircularWorldline,
    SagnacBranches,
};
pub use real::{Precise, Real};
pub use wigner::{
    circular_wigner_generator, llt_generator, ordered_exponential, spinor_step, transport_spinor,
    wigner_generator, LLTGenerator, SpinorOperator, WignerGenerator,
};
