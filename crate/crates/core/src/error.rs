use thiserror::Error;

use crate::geometry::Frame;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("radial coordinate must be positive, got r = {r}")]
    NonPositiveRadius { r: f64 },

    #[error("point lies on or outside the light cylinder: |ω|·r = {omega_r} (must be < 1)")]
    LightCylinder { omega_r: f64 },

    #[error("local speed must satisfy |u| < 1, got u = {u}")]
    Superluminal { u: f64 },

    #[error("metric is singular at the requested point")]
    SingularMetric,

    #[error("frame mismatch: expected {expected:?} components, found {found:?}")]
    FrameMismatch { expected: Frame, found: Frame },

    #[error("branch co-rotates with the platform (Ω = {angular_velocity}) and never reaches the detector")]
    DegenerateBranch { angular_velocity: f64 },

    #[error("momentum is off shell: η_ab p^a p^b + m² = {residual} (relative)")]
    OffShell { residual: f64 },

    #[error("operator is not unitary: ‖D†D − I‖ = {residual}")]
    NonUnitary { residual: f64 },

    #[error("state is not normalised: norm² = {norm_sqr}")]
    NotNormalized { norm_sqr: f64 },

    #[error("point r = {point_r} is not on the worldline of radius {worldline_r}")]
    OffWorldline { point_r: f64, worldline_r: f64 },

    #[error("invalid {name}: {reason}")]
    InvalidParameter { name: &'static str, reason: String },
}

impl Error {
    pub(crate) fn invalid(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name,
            reason: reason.into(),
        }
    }
}
