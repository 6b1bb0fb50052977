//! Circular worldlines in the rotating chart, their four-velocity and
//! four-acceleration, lap timings and the Sagnac delay.

use crate::error::{Error, Result};
use crate::geometry::{
    christoffel_at, to_coordinate, Frame, FrameVector, MetricProvider, RotatingMinkowski,
    SpacetimePoint, R,
};
use crate::real::Real;

/// Uniform circular motion at radius `r` with speed `u` relative to the
/// local ZAMO frame (`u > 0` moves towards increasing φ).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CircularWorldline<S = f64> {
    r: S,
    omega: S,
    u: S,
    xi: S,
    cosh_xi: S,
    sinh_xi: S,
    z: S,
    phi0: S,
}

impl<S: Real> CircularWorldline<S> {
    pub fn new(r: S, omega: S, u: S) -> Result<Self> {
        if !(r > S::zero()) || !r.is_finite() {
            return Err(Error::NonPositiveRadius { r: r.as_f64() });
        }
        if !omega.is_finite() {
            return Err(Error::invalid("omega", "angular velocity must be finite"));
        }
        if !(u.abs() < S::one()) {
            return Err(Error::Superluminal { u: u.as_f64() });
        }
        if !((omega * r).abs() < S::one()) {
            return Err(Error::LightCylinder {
                omega_r: (omega * r).abs().as_f64(),
            });
        }
        // 1 - u² factored to keep full precision for |u| → 1
        let cosh_xi = S::one() / ((S::one() - u) * (S::one() + u)).sqrt();
        let sinh_xi = u * cosh_xi;
        let two = S::of(2.0);
        let xi = (two * u / (S::one() - u)).ln_1p() / two;
        Ok(Self {
            r,
            omega,
            u,
            xi,
            cosh_xi,
            sinh_xi,
            z: S::zero(),
            phi0: S::zero(),
        })
    }

    /// Worldline whose speed `v` is measured by observers at rest on the
    /// platform (Landau–Lifshitz synchronised), composed relativistically
    /// with the platform's own local speed `ωr`.
    pub fn from_platform_speed(r: S, omega: S, v: S) -> Result<Self> {
        if !(v.abs() < S::one()) {
            return Err(Error::Superluminal { u: v.as_f64() });
        }
        let wr = omega * r;
        let u = (v + wr) / (S::one() + v * wr);
        Self::new(r, omega, u)
    }

    pub fn with_axial(mut self, z: S) -> Self {
        self.z = z;
        self
    }

    pub fn with_launch_angle(mut self, phi0: S) -> Self {
        self.phi0 = phi0;
        self
    }

    pub fn r(&self) -> S {
        self.r
    }

    pub fn omega(&self) -> S {
        self.omega
    }

    /// Local speed `tanh ξ`.
    pub fn u(&self) -> S {
        self.u
    }

    pub fn rapidity(&self) -> S {
        self.xi
    }

    pub fn cosh_xi(&self) -> S {
        self.cosh_xi
    }

    pub fn sinh_xi(&self) -> S {
        self.sinh_xi
    }

    pub fn z(&self) -> S {
        self.z
    }

    pub fn launch_angle(&self) -> S {
        self.phi0
    }

    /// Coordinate angular velocity `Ω = dφ/dt = u/r − ω`.
    pub fn angular_velocity(&self) -> S {
        self.u / self.r - self.omega
    }

    pub fn provider(&self) -> RotatingMinkowski {
        // new() only fails on non-finite ω, which the constructor rejected
        RotatingMinkowski::new(self.omega.as_f64()).expect("finite omega")
    }

    /// Event on the worldline at coordinate time `t`.
    pub fn point_at(&self, t: S) -> SpacetimePoint<S> {
        SpacetimePoint {
            t,
            r: self.r,
            z: self.z,
            phi: self.phi0 + self.angular_velocity() * t,
        }
    }

    pub fn to_f64(&self) -> CircularWorldline<f64> {
        CircularWorldline {
            r: self.r.as_f64(),
            omega: self.omega.as_f64(),
            u: self.u.as_f64(),
            xi: self.xi.as_f64(),
            cosh_xi: self.cosh_xi.as_f64(),
            sinh_xi: self.sinh_xi.as_f64(),
            z: self.z.as_f64(),
            phi0: self.phi0.as_f64(),
        }
    }
}

/// Four-velocity of the worldline in the requested frame.
///
/// Local: `(cosh ξ, 0, 0, sinh ξ)`. Coordinate: `e_a^μ u^a`, i.e.
/// `(cosh ξ, 0, 0, sinh ξ / r − ω cosh ξ)`.
pub fn four_velocity<S: Real>(w: &CircularWorldline<S>, frame: Frame) -> FrameVector<S> {
    let local = FrameVector::local([w.cosh_xi, S::zero(), S::zero(), w.sinh_xi]);
    match frame {
        Frame::Local => local,
        Frame::Coordinate => {
            let tet = w
                .provider()
                .tetrad_at(&w.point_at(S::zero()))
                .expect("worldline radius validated at construction");
            to_coordinate(&local, &tet).expect("local vector")
        }
    }
}

/// Four-acceleration `a^μ = u^ν ∇_ν u^μ` evaluated through the Christoffel
/// symbols of the rotating chart.
///
/// The coordinate components of `u^μ` depend only on `r` and `u^r = 0`, so
/// the partial-derivative term vanishes along the orbit.
pub fn four_acceleration<S: Real>(w: &CircularWorldline<S>) -> Result<FrameVector<S>> {
    let p = w.point_at(S::zero());
    let gamma = christoffel_at(&w.provider(), &p)?;
    let u = four_velocity(w, Frame::Coordinate).components;
    let a = gamma.directional_derivative(&u, &u, &[S::zero(); 4]);
    Ok(FrameVector::coordinate(a))
}

/// Closed-form four-acceleration: only `a^r = −sinh²ξ / r` is non-zero.
pub fn four_acceleration_closed_form<S: Real>(w: &CircularWorldline<S>) -> FrameVector<S> {
    let mut a = [S::zero(); 4];
    a[R] = -w.sinh_xi * w.sinh_xi / w.r;
    FrameVector::coordinate(a)
}

/// Coordinate and proper durations of one trip from launch to the detector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BranchTiming<S = f64> {
    /// Coordinate time from launch to arrival.
    pub t_lap: S,
    /// Proper time elapsed along the branch, `t_lap / cosh ξ`.
    pub tau_lap: S,
    /// Proper time elapsed on a clock fixed on the platform at the same
    /// radius, `√(−g_tt) · t_lap`.
    pub detector_tau: S,
}

/// Timing of the branch from its launch angle to a detector fixed in the
/// rotating chart at `detector_phi`.
///
/// The branch travels in the direction of its coordinate angular velocity.
/// A detector at the launch angle (mod 2π) is reached after one full lap.
pub fn branch_timing<S: Real>(
    w: &CircularWorldline<S>,
    detector_phi: S,
) -> Result<BranchTiming<S>> {
    let big_omega = w.angular_velocity();
    let scale = (w.u / w.r).abs().max(w.omega.abs());
    if big_omega.abs() <= S::of(4.0) * S::epsilon() * scale || big_omega == S::zero() {
        return Err(Error::DegenerateBranch {
            angular_velocity: big_omega.as_f64(),
        });
    }

    let two_pi = S::of(2.0) * S::PI();
    let raw = if big_omega > S::zero() {
        detector_phi - w.phi0
    } else {
        w.phi0 - detector_phi
    };
    let mut sweep = raw - two_pi * (raw / two_pi).floor();
    let snap = S::of(1e-12);
    if sweep <= snap || (two_pi - sweep).abs() <= snap {
        sweep = two_pi;
    }

    let t_lap = sweep / big_omega.abs();
    let wr = w.omega * w.r;
    let lapse = ((S::one() - wr) * (S::one() + wr)).sqrt();
    Ok(BranchTiming {
        t_lap,
        tau_lap: t_lap / w.cosh_xi,
        detector_tau: lapse * t_lap,
    })
}

/// Sagnac time delay `4πr²ω / √(1 − ω²r²)` (geometric units, length).
pub fn sagnac_delay<S: Real>(r: S, omega: S) -> Result<S> {
    if !(r > S::zero()) || !r.is_finite() {
        return Err(Error::NonPositiveRadius { r: r.as_f64() });
    }
    let wr = omega * r;
    if !(wr.abs() < S::one()) {
        return Err(Error::LightCylinder {
            omega_r: wr.abs().as_f64(),
        });
    }
    let four_pi = S::of(4.0) * S::PI();
    Ok(four_pi * r * r * omega / ((S::one() - wr) * (S::one() + wr)).sqrt())
}

/// Co- and counter-rotating branches launched together from φ = 0 with
/// equal and opposite platform-relative speeds.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SagnacBranches<S = f64> {
    pub co: CircularWorldline<S>,
    pub counter: CircularWorldline<S>,
}

impl<S: Real> SagnacBranches<S> {
    pub fn from_platform_speed(r: S, omega: S, v: S) -> Result<Self> {
        let v = v.abs();
        Ok(Self {
            co: CircularWorldline::from_platform_speed(r, omega, v)?,
            counter: CircularWorldline::from_platform_speed(r, omega, -v)?,
        })
    }

    /// Timings of (co, counter) to the detector at φ = 2π ≡ 0.
    pub fn timings(&self) -> Result<(BranchTiming<S>, BranchTiming<S>)> {
        let det = S::of(2.0) * S::PI();
        Ok((
            branch_timing(&self.co, det)?,
            branch_timing(&self.counter, det)?,
        ))
    }

    /// Difference of the detector-clock arrival readings, co minus counter.
    pub fn detector_delay(&self) -> Result<S> {
        let (co, counter) = self.timings()?;
        Ok(co.detector_tau - counter.detector_tau)
    }
}
