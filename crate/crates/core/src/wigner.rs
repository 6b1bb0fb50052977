//! Infinitesimal local Lorentz transformations, the local Wigner rotation
//! they induce on a massive particle, and its spin-1/2 representation.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::geometry::{
    christoffel_at, spin_connection_at, to_local, Frame, FrameVector, MetricProvider,
    SpacetimePoint,
};
use crate::kinematics::{four_velocity, CircularWorldline};
use crate::real::{eta, zeros4, Matrix4, Precise, Real};

/// `λ^a_b = −(a^a u_b − u^a a_b) + χ^a_b`, indexed `[a][b]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LLTGenerator<S = f64> {
    pub lam: Matrix4<S>,
    pub boost_part: Matrix4<S>,
    pub connection_part: Matrix4<S>,
}

impl<S: Real> LLTGenerator<S> {
    /// Largest `|λ_ab + λ_ba|` after lowering the first index with η.
    pub fn antisymmetry_residual(&self) -> f64 {
        let mut worst = 0.0_f64;
        for a in 0..4 {
            for b in 0..4 {
                let ab = eta::<S>(a) * self.lam[a][b];
                let ba = eta::<S>(b) * self.lam[b][a];
                worst = worst.max((ab + ba).abs().as_f64());
            }
        }
        worst
    }

    pub fn lambda_13(&self) -> S {
        self.lam[1][3]
    }

    pub fn chi_13(&self) -> S {
        self.connection_part[1][3]
    }
}

/// Assemble the infinitesimal LLT for a particle on `w` at the event `p`.
///
/// The four-acceleration is obtained from the Christoffel symbols at `p`
/// and mapped into the local frame through the tetrad; the rotation part
/// comes from the spin connection contracted with the coordinate velocity.
pub fn llt_generator<S: Real>(
    w: &CircularWorldline<S>,
    p: &SpacetimePoint<S>,
) -> Result<LLTGenerator<S>> {
    let tol = S::of(1e-12) * w.r();
    if (p.r - w.r()).abs() > tol {
        return Err(Error::OffWorldline {
            point_r: p.r.as_f64(),
            worldline_r: w.r().as_f64(),
        });
    }
    let provider = w.provider();
    let tet = provider.tetrad_at(p)?;
    let gamma = christoffel_at(&provider, p)?;
    let spin = spin_connection_at(&provider, p)?;

    let u_local = four_velocity(w, Frame::Local);
    let u_coord = crate::geometry::to_coordinate(&u_local, &tet)?;
    let a_coord = FrameVector::coordinate(gamma.directional_derivative(
        &u_coord.components,
        &u_coord.components,
        &[S::zero(); 4],
    ));
    let a_local = to_local(&a_coord, &tet)?;

    let u_up = u_local.components;
    let a_up = a_local.components;
    let u_low = u_local.lowered_local()?;
    let a_low = a_local.lowered_local()?;

    let mut boost_part = zeros4::<S>();
    for a in 0..4 {
        for b in 0..4 {
            boost_part[a][b] = -(a_up[a] * u_low[b] - u_up[a] * a_low[b]);
        }
    }
    let connection_part = spin.contract(&u_coord)?;

    let mut lam = zeros4::<S>();
    for a in 0..4 {
        for b in 0..4 {
            lam[a][b] = boost_part[a][b] + connection_part[a][b];
        }
    }
    Ok(LLTGenerator {
        lam,
        boost_part,
        connection_part,
    })
}

/// Spatial rotation generator `ϑ^i_j` (indices 1..=3 stored at 0..3) and the
/// rotation-rate vector `𝛝_k = ½ ε_ijk ϑ_ij`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WignerGenerator<S = f64> {
    pub theta: [[S; 3]; 3],
    pub axis_angle_rate: [S; 3],
}

impl<S: Real> WignerGenerator<S> {
    pub fn from_theta(theta: [[S; 3]; 3]) -> Self {
        let half = S::of(0.5);
        let rate = [
            half * (theta[1][2] - theta[2][1]),
            half * (theta[2][0] - theta[0][2]),
            half * (theta[0][1] - theta[1][0]),
        ];
        Self {
            theta,
            axis_angle_rate: rate,
        }
    }

    /// Generator rotating about the local 2-axis with `ϑ^1_3 = rate`.
    pub fn about_local_2(rate: S) -> Self {
        let mut theta = [[S::zero(); 3]; 3];
        theta[0][2] = rate;
        theta[2][0] = -rate;
        Self::from_theta(theta)
    }

    /// `ϑ^1_3`
    pub fn theta_13(&self) -> S {
        self.theta[0][2]
    }

    pub fn to_f64(&self) -> WignerGenerator<f64> {
        WignerGenerator {
            theta: self.theta.map(|row| row.map(Real::as_f64)),
            axis_angle_rate: self.axis_angle_rate.map(Real::as_f64),
        }
    }
}

/// `ϑ^i_j = λ^i_j + (λ^i_0 p_j − λ_{j0} p^i) / (p^0 + m)` for a local
/// momentum `p` of a particle of mass `m`.
pub fn wigner_generator<S: Real>(
    g: &LLTGenerator<S>,
    p_local: &FrameVector<S>,
    m: S,
) -> Result<WignerGenerator<S>> {
    p_local.expect_frame(Frame::Local)?;
    if !(m > S::zero()) || !m.is_finite() {
        return Err(Error::invalid("mass", "must be positive and finite"));
    }
    let p = p_local.components;
    if !(p[0] > S::zero()) {
        return Err(Error::invalid(
            "momentum",
            "energy component must be positive",
        ));
    }
    let shell = (p_local.minkowski_norm()? + m * m) / (m * m);
    if shell.abs() > S::of(1e-10) {
        return Err(Error::OffShell {
            residual: shell.as_f64(),
        });
    }

    let denom = p[0] + m;
    let mut theta = [[S::zero(); 3]; 3];
    for i in 1..4 {
        for j in (i + 1)..4 {
            // spatial indices: p_j = p^j and λ_{j0} = λ^j_0
            let v = g.lam[i][j] + (g.lam[i][0] * p[j] - g.lam[j][0] * p[i]) / denom;
            theta[i - 1][j - 1] = v;
            theta[j - 1][i - 1] = -v;
        }
    }
    Ok(WignerGenerator::from_theta(theta))
}

/// Full pipeline for a circular worldline: LLT at the launch event, then the
/// Wigner generator for a unit-mass particle with `p^a = u^a`.
pub fn circular_wigner_generator<S: Real>(w: &CircularWorldline<S>) -> Result<WignerGenerator<S>> {
    let g = llt_generator(w, &w.point_at(S::zero()))?;
    wigner_generator(&g, &four_velocity(w, Frame::Local), S::one())
}

/// Thomas precession rate per unit coordinate time,
/// `(ϑ^3_1 − χ^3_1) / cosh ξ`.
pub fn thomas_precession_rate<S: Real>(w: &CircularWorldline<S>) -> Result<S> {
    let g = llt_generator(w, &w.point_at(S::zero()))?;
    let th = wigner_generator(&g, &four_velocity(w, Frame::Local), S::one())?;
    Ok((th.theta[2][0] - g.connection_part[3][1]) / w.cosh_xi())
}

/// Closed forms for the circular worldline.
pub mod closed_form {
    use crate::kinematics::CircularWorldline;
    use crate::real::Real;

    /// `χ^1_3 = sinh ξ / r`
    pub fn chi_13<S: Real>(w: &CircularWorldline<S>) -> S {
        w.sinh_xi() / w.r()
    }

    /// `λ^1_3 = sinh ξ cosh²ξ / r`
    pub fn lambda_13<S: Real>(w: &CircularWorldline<S>) -> S {
        w.sinh_xi() * w.cosh_xi() * w.cosh_xi() / w.r()
    }

    /// `ϑ^1_3 = sinh ξ cosh ξ / r`
    pub fn theta_13<S: Real>(w: &CircularWorldline<S>) -> S {
        w.sinh_xi() * w.cosh_xi() / w.r()
    }
}

const UNITARY_TOL: f64 = 1e-10;

/// 2×2 complex operator on the spin space, basis `(|↑⟩, |↓⟩)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpinorOperator {
    pub d: [[Complex64; 2]; 2],
}

impl SpinorOperator {
    pub fn identity() -> Self {
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        Self {
            d: [[one, zero], [zero, one]],
        }
    }

    /// `exp(i v·σ)`
    fn exp_i_sigma(v: [f64; 3]) -> Self {
        let phi = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
        let c = phi.cos();
        let sinc = if phi < 1e-4 {
            1.0 - phi * phi / 6.0 + phi.powi(4) / 120.0
        } else {
            phi.sin() / phi
        };
        let [n1, n2, n3] = v.map(|x| x * sinc);
        Self {
            d: [
                [Complex64::new(c, n3), Complex64::new(n2, n1)],
                [Complex64::new(-n2, n1), Complex64::new(c, -n3)],
            ],
        }
    }

    /// `exp(−(i/2) σ₂ angle)`, a rotation by `angle` about the local 2-axis.
    pub fn about_local_2(angle: f64) -> Self {
        let (s, c) = (0.5 * angle).sin_cos();
        let z = |x| Complex64::new(x, 0.0);
        Self {
            d: [[z(c), z(-s)], [z(s), z(c)]],
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut d = [[Complex64::new(0.0, 0.0); 2]; 2];
        for (i, row) in d.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v = self.d[i][0] * rhs.d[0][j] + self.d[i][1] * rhs.d[1][j];
            }
        }
        Self { d }
    }

    pub fn adjoint(&self) -> Self {
        let d = &self.d;
        Self {
            d: [
                [d[0][0].conj(), d[1][0].conj()],
                [d[0][1].conj(), d[1][1].conj()],
            ],
        }
    }

    pub fn scale(&self, k: Complex64) -> Self {
        Self {
            d: self.d.map(|row| row.map(|x| x * k)),
        }
    }

    pub fn det(&self) -> Complex64 {
        self.d[0][0] * self.d[1][1] - self.d[0][1] * self.d[1][0]
    }

    pub fn apply(&self, v: [Complex64; 2]) -> [Complex64; 2] {
        [
            self.d[0][0] * v[0] + self.d[0][1] * v[1],
            self.d[1][0] * v[0] + self.d[1][1] * v[1],
        ]
    }

    /// Max-entry norm of `D†D − I`.
    pub fn unitarity_residual(&self) -> f64 {
        let p = self.adjoint().mul(self);
        let mut worst = 0.0_f64;
        for i in 0..2 {
            for j in 0..2 {
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((p.d[i][j] - target).norm());
            }
        }
        worst
    }

    pub fn check_unitary(&self) -> Result<()> {
        let residual = self.unitarity_residual();
        if residual > UNITARY_TOL || !residual.is_finite() {
            Err(Error::NonUnitary { residual })
        } else {
            Ok(())
        }
    }

    /// Max-entry distance to another operator.
    pub fn distance(&self, other: &Self) -> f64 {
        let mut worst = 0.0_f64;
        for i in 0..2 {
            for j in 0..2 {
                worst = worst.max((self.d[i][j] - other.d[i][j]).norm());
            }
        }
        worst
    }

    /// Nearest SU(2) element, for operators that drifted off the group.
    fn project_su2(&self) -> Self {
        let alpha = (self.d[0][0] + self.d[1][1].conj()) * 0.5;
        let beta = (self.d[1][0] - self.d[0][1].conj()) * 0.5;
        let n = (alpha.norm_sqr() + beta.norm_sqr()).sqrt();
        let (alpha, beta) = (alpha / n, beta / n);
        Self {
            d: [[alpha, -beta.conj()], [beta, alpha.conj()]],
        }
    }
}

/// `D(W) = exp((i/2) 𝛝·σ dτ)` for one step, exponentiated exactly.
pub fn spinor_step(theta: &WignerGenerator<f64>, dtau: f64) -> Result<SpinorOperator> {
    if !(dtau >= 0.0) || !dtau.is_finite() {
        return Err(Error::invalid(
            "dtau",
            "proper-time step must be finite and non-negative",
        ));
    }
    Ok(SpinorOperator::exp_i_sigma(
        theta.axis_angle_rate.map(|x| 0.5 * x * dtau),
    ))
}

const REUNITARIZE_EVERY: usize = 256;
const DRIFT_TOL: f64 = 1e-14;

/// Time-ordered product of exact steps over `[0, tau_total]`, later steps
/// multiplied on the left. The generator is sampled at each step midpoint.
pub fn ordered_exponential<F>(
    mut generator_at: F,
    tau_total: f64,
    n_steps: usize,
) -> Result<SpinorOperator>
where
    F: FnMut(f64) -> WignerGenerator<f64>,
{
    if n_steps == 0 {
        return Err(Error::invalid("n_steps", "at least one step is required"));
    }
    if !(tau_total >= 0.0) || !tau_total.is_finite() {
        return Err(Error::invalid(
            "tau_total",
            "must be finite and non-negative",
        ));
    }
    let dtau = tau_total / n_steps as f64;
    let mut acc = SpinorOperator::identity();
    for k in 0..n_steps {
        let mid = (k as f64 + 0.5) * dtau;
        let step = spinor_step(&generator_at(mid), dtau)?;
        acc = step.mul(&acc);
        if (k + 1) % REUNITARIZE_EVERY == 0 && acc.unitarity_residual() > DRIFT_TOL {
            acc = acc.project_su2();
        }
    }
    Ok(acc)
}

/// Spin-1/2 representation of the Wigner rotation accumulated over proper
/// time `tau_total` along `w`.
///
/// The worldline is stationary and axisymmetric, so the generator is the
/// same at every event; it is evaluated once through the double-double
/// pipeline and fed to [`ordered_exponential`].
pub fn transport_spinor(
    w: &CircularWorldline<f64>,
    tau_total: f64,
    n_steps: usize,
) -> Result<SpinorOperator> {
    let wp = CircularWorldline::<Precise>::new(w.r().into(), w.omega().into(), w.u().into())?;
    let generator = circular_wigner_generator(&wp)?.to_f64();
    ordered_exponential(|_| generator, tau_total, n_steps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    fn first_order_step(theta: &WignerGenerator<f64>, dtau: f64) -> SpinorOperator {
        // I + (i/2) 𝛝·σ dτ
        let v = theta.axis_angle_rate.map(|x| 0.5 * x * dtau);
        let i = Complex64::new(0.0, 1.0);
        let one = Complex64::new(1.0, 0.0);
        SpinorOperator {
            d: [
                [one + i * v[2], i * Complex64::new(v[0], -v[1])],
                [i * Complex64::new(v[0], v[1]), one - i * v[2]],
            ],
        }
    }

    #[test]
    fn llt_closed_forms_at_half_c() {
        let w = CircularWorldline::new(1.0, 0.0, 0.5).unwrap();
        let g = llt_generator(&w, &w.point_at(0.0)).unwrap();
        assert_relative_eq!(g.lambda_13(), 0.769800358919501, max_relative = 1e-12);
        assert_relative_eq!(g.lam[3][1], -0.769800358919501, max_relative = 1e-12);
        assert_relative_eq!(g.chi_13(), 0.5773502691896258, max_relative = 1e-12);
        assert!(g.antisymmetry_residual() < 1e-12);
        for a in 0..4 {
            for b in 0..4 {
                assert_eq!(g.lam[a][b], g.boost_part[a][b] + g.connection_part[a][b]);
            }
        }
    }

    #[test]
    fn llt_vanishes_for_comoving_particle() {
        let w = CircularWorldline::new(2.0, 0.1, 0.0).unwrap();
        let g = llt_generator(&w, &w.point_at(0.0)).unwrap();
        for row in g.lam {
            for v in row {
                assert!(v.abs() < 1e-15);
            }
        }
        let th = circular_wigner_generator(&w).unwrap();
        assert!(th.theta_13().abs() < 1e-15);
    }

    #[test]
    fn llt_rejects_point_off_orbit() {
        let w = CircularWorldline::new(2.0, 0.1, 0.3).unwrap();
        let p = SpacetimePoint::at_radius(2.5).unwrap();
        assert!(matches!(
            llt_generator(&w, &p),
            Err(Error::OffWorldline { .. })
        ));
    }

    #[test]
    fn wigner_generator_values() {
        let w = CircularWorldline::new(1.0, 0.0, 0.5).unwrap();
        let th = circular_wigner_generator(&w).unwrap();
        assert_relative_eq!(th.theta_13(), 0.5 / 0.75, max_relative = 1e-12);
        assert_relative_eq!(th.theta[2][0], -0.5 / 0.75, max_relative = 1e-12);
        assert_eq!(th.theta[1], [0.0; 3]);
        assert_relative_eq!(th.axis_angle_rate[1], -0.5 / 0.75, max_relative = 1e-12);

        let w = CircularWorldline::<Precise>::new(2.0.into(), 0.1.into(), 0.9.into()).unwrap();
        let th = circular_wigner_generator(&w).unwrap();
        assert_relative_eq!(
            th.theta_13().as_f64(),
            0.9 / 0.19 / 2.0,
            max_relative = 1e-14
        );
    }

    #[test]
    fn wigner_generator_input_validation() {
        let w = CircularWorldline::new(1.0, 0.0, 0.5).unwrap();
        let g = llt_generator(&w, &w.point_at(0.0)).unwrap();
        let p = four_velocity(&w, Frame::Local);
        assert!(matches!(
            wigner_generator(&g, &p.scale(1.1), 1.0),
            Err(Error::OffShell { .. })
        ));
        assert!(wigner_generator(&g, &p, 0.0).is_err());
        assert!(wigner_generator(&g, &p.scale(-1.0), 1.0).is_err());
        let coord = four_velocity(&w, Frame::Coordinate);
        assert!(matches!(
            wigner_generator(&g, &coord, 1.0),
            Err(Error::FrameMismatch { .. })
        ));
    }

    #[test]
    fn mass_drops_out() {
        let w = CircularWorldline::<Precise>::new(1.3.into(), 0.2.into(), (-0.6).into()).unwrap();
        let g = llt_generator(&w, &w.point_at(Precise::of(0.0))).unwrap();
        let u = four_velocity(&w, Frame::Local);
        let base = wigner_generator(&g, &u, Precise::of(1.0))
            .unwrap()
            .theta_13();
        for m in [1e-30, 1e30] {
            let m = Precise::of(m);
            let t = wigner_generator(&g, &u.scale(m), m).unwrap().theta_13();
            assert!(((t - base) / base).abs().as_f64() < 1e-12);
        }
    }

    #[test]
    fn thomas_low_velocity() {
        let w = CircularWorldline::<Precise>::new(1.0.into(), 0.0.into(), 1e-3.into()).unwrap();
        let rate = thomas_precession_rate(&w).unwrap().as_f64();
        assert_relative_eq!(rate, -5.0e-10, max_relative = 1e-6);

        let w = CircularWorldline::new(1.0, 0.0, 0.0).unwrap();
        assert_eq!(thomas_precession_rate(&w).unwrap(), 0.0);

        let u = 1e-2;
        let w = CircularWorldline::<Precise>::new(1.0.into(), 0.0.into(), u.into()).unwrap();
        let rate = thomas_precession_rate(&w).unwrap().as_f64();
        let a = w.sinh_xi().as_f64().powi(2);
        assert!((rate / (-u * a / 2.0) - 1.0).abs() < 1e-4);
    }

    #[test]
    fn spinor_step_cases() {
        let gen = WignerGenerator::about_local_2(2.0 / 3.0);
        let full_turn = spinor_step(&gen, 3.0 * PI).unwrap();
        assert!(full_turn.distance(&SpinorOperator::identity().scale((-1.0).into())) < 1e-12);

        assert_eq!(spinor_step(&gen, 0.0).unwrap(), SpinorOperator::identity());

        let d = spinor_step(&WignerGenerator::about_local_2(1.0), PI / 2.0).unwrap();
        let c = (PI / 4.0).cos();
        let s = (PI / 4.0).sin();
        // cos(π/4) I − i sin(π/4) σ₂
        assert_relative_eq!(d.d[0][0].re, c, epsilon = 1e-15);
        assert_relative_eq!(d.d[0][1].re, -s, epsilon = 1e-15);
        assert_relative_eq!(d.d[1][0].re, s, epsilon = 1e-15);
        assert_relative_eq!(d.d[1][1].re, c, epsilon = 1e-15);
        assert!(d.distance(&SpinorOperator::about_local_2(PI / 2.0)) < 1e-15);
        assert!(spinor_step(&gen, -1.0).is_err());
    }

    #[test]
    fn general_axis_step_is_unitary() {
        let mut theta = [[0.0; 3]; 3];
        theta[0][1] = 0.3;
        theta[1][0] = -0.3;
        theta[1][2] = -1.1;
        theta[2][1] = 1.1;
        theta[0][2] = 0.25;
        theta[2][0] = -0.25;
        let d = spinor_step(&WignerGenerator::from_theta(theta), 0.8).unwrap();
        assert!(d.unitarity_residual() < 1e-15);
        assert!((d.det() - Complex64::new(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn transport_periodicity() {
        let w = CircularWorldline::new(1.0, 0.0, 0.5).unwrap();
        let rate = 0.5 / 0.75;
        assert!(
            transport_spinor(&w, 0.0, 7)
                .unwrap()
                .distance(&SpinorOperator::identity())
                < 1e-15
        );
        let d = transport_spinor(&w, 4.0 * PI / rate, 1000).unwrap();
        assert!(d.distance(&SpinorOperator::identity()) < 1e-12);
        assert!(transport_spinor(&w, 1.0, 0).is_err());
    }

    #[test]
    fn first_order_stepping_converges() {
        let gen = WignerGenerator::about_local_2(0.7);
        let tau = 3.0;
        let exact = SpinorOperator::about_local_2(0.7 * tau);
        let mut prev = f64::INFINITY;
        for n in [100usize, 1000, 10000] {
            let mut acc = SpinorOperator::identity();
            for _ in 0..n {
                acc = first_order_step(&gen, tau / n as f64).mul(&acc);
            }
            let err = acc.distance(&exact);
            assert!(err < prev / 5.0, "n = {n}: {err}");
            prev = err;
        }
        assert!(prev < 1e-3);
    }

    #[test]
    fn reunitarization_projects_back_to_su2() {
        let mut d = SpinorOperator::about_local_2(1.2);
        d.d[0][0] += Complex64::new(1e-9, 0.0);
        assert!(d.unitarity_residual() > 1e-10);
        let p = d.project_su2();
        assert!(p.unitarity_residual() < 1e-15);
        assert!(p.distance(&SpinorOperator::about_local_2(1.2)) < 1e-9);
    }
}
