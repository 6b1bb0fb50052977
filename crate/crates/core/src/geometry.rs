//! Rotating-frame Minkowski geometry: metric, ZAMO tetrad, Christoffel
//! symbols and the spin connection.
//!
//! Coordinates are ordered `(t, r, z, φ)` (indices 0..4). Local (tetrad)
//! indices run over `(0, 1, 2, 3)` with 1 radial, 2 axial and 3 azimuthal.
//! All quantities are in geometric units (c = 1), lengths in metres.
//!
//! Metrics are supplied through [`MetricProvider`], which hands out analytic
//! components, analytic first derivatives and a tetrad. Only
//! [`RotatingMinkowski`] ships; other stationary spacetimes plug in by
//! implementing the trait with their own tetrad gauge.

use crate::error::{Error, Result};
use crate::real::{eta, invert4, zeros4, zeros444, Array444, Matrix4, Real};

pub const T: usize = 0;
pub const R: usize = 1;
pub const Z: usize = 2;
pub const PHI: usize = 3;

/// Event in the rotating chart.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpacetimePoint<S = f64> {
    pub t: S,
    pub r: S,
    pub z: S,
    pub phi: S,
}

impl<S: Real> SpacetimePoint<S> {
    pub fn new(t: S, r: S, z: S, phi: S) -> Result<Self> {
        if !(r > S::zero()) || !r.is_finite() {
            return Err(Error::NonPositiveRadius { r: r.as_f64() });
        }
        if !(t.is_finite() && z.is_finite() && phi.is_finite()) {
            return Err(Error::invalid("point", "coordinates must be finite"));
        }
        Ok(Self { t, r, z, phi })
    }

    /// Point at radius `r` with every other coordinate zero.
    pub fn at_radius(r: S) -> Result<Self> {
        Self::new(S::zero(), r, S::zero(), S::zero())
    }

    pub fn coords(&self) -> [S; 4] {
        [self.t, self.r, self.z, self.phi]
    }

    pub fn to_f64(&self) -> SpacetimePoint<f64> {
        SpacetimePoint {
            t: self.t.as_f64(),
            r: self.r.as_f64(),
            z: self.z.as_f64(),
            phi: self.phi.as_f64(),
        }
    }
}

/// Metric components `g[μ][ν]` and their partial derivatives `dg[ρ][μ][ν] = ∂_ρ g_μν`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MetricValue<S = f64> {
    pub g: Matrix4<S>,
    pub dg: Array444<S>,
}

impl<S: Real> MetricValue<S> {
    pub fn inverse(&self) -> Result<Matrix4<S>> {
        invert4(&self.g).ok_or(Error::SingularMetric)
    }

    /// `g_μν a^μ b^ν`
    pub fn inner(&self, a: &[S; 4], b: &[S; 4]) -> S {
        let mut acc = S::zero();
        for mu in 0..4 {
            for nu in 0..4 {
                acc = acc + self.g[mu][nu] * a[mu] * b[nu];
            }
        }
        acc
    }

    /// `v_μ = g_μν v^ν`
    pub fn lower(&self, v: &[S; 4]) -> [S; 4] {
        let mut out = [S::zero(); 4];
        for (mu, o) in out.iter_mut().enumerate() {
            for nu in 0..4 {
                *o = *o + self.g[mu][nu] * v[nu];
            }
        }
        out
    }
}

/// Tetrad at a point. `e_fwd[a][μ] = e^a_μ`, `e_inv[a][μ] = e_a^μ`.
///
/// The first index is always the Latin (local) one.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tetrad<S = f64> {
    pub e_fwd: Matrix4<S>,
    pub e_inv: Matrix4<S>,
}

impl<S: Real> Tetrad<S> {
    /// Largest deviation of `e^a_μ e_b^μ` from `δ^a_b` and of
    /// `e^a_μ e_a^ν` from `δ_μ^ν`.
    pub fn duality_residual(&self) -> f64 {
        let mut worst = 0.0_f64;
        for a in 0..4 {
            for b in 0..4 {
                let mut ab = S::zero();
                let mut mn = S::zero();
                for k in 0..4 {
                    ab = ab + self.e_fwd[a][k] * self.e_inv[b][k];
                    mn = mn + self.e_fwd[k][a] * self.e_inv[k][b];
                }
                let delta = if a == b { S::one() } else { S::zero() };
                worst = worst
                    .max((ab - delta).abs().as_f64())
                    .max((mn - delta).abs().as_f64());
            }
        }
        worst
    }

    /// `η_ab e^a_μ e^b_ν`, which must equal `g_μν`.
    pub fn reconstruct_metric(&self) -> Matrix4<S> {
        let mut g = zeros4::<S>();
        for mu in 0..4 {
            for nu in 0..4 {
                let mut acc = S::zero();
                for a in 0..4 {
                    acc = acc + eta::<S>(a) * self.e_fwd[a][mu] * self.e_fwd[a][nu];
                }
                g[mu][nu] = acc;
            }
        }
        g
    }

    /// `g_μν e_a^μ e_b^ν`, which must equal `η_ab`.
    pub fn frame_metric(&self, metric: &MetricValue<S>) -> Matrix4<S> {
        let mut out = zeros4::<S>();
        for a in 0..4 {
            for b in 0..4 {
                out[a][b] = metric.inner(&self.e_inv[a], &self.e_inv[b]);
            }
        }
        out
    }
}

/// Which kind of index a 4-vector's components carry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Frame {
    /// Greek index, rotating-chart coordinate basis.
    Coordinate,
    /// Latin index, local orthonormal tetrad basis.
    Local,
}

/// Contravariant 4-vector tagged with its frame.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrameVector<S = f64> {
    pub components: [S; 4],
    pub frame: Frame,
}

impl<S: Real> FrameVector<S> {
    pub fn new(components: [S; 4], frame: Frame) -> Self {
        Self { components, frame }
    }

    pub fn coordinate(components: [S; 4]) -> Self {
        Self::new(components, Frame::Coordinate)
    }

    pub fn local(components: [S; 4]) -> Self {
        Self::new(components, Frame::Local)
    }

    pub fn expect_frame(&self, frame: Frame) -> Result<()> {
        if self.frame == frame {
            Ok(())
        } else {
            Err(Error::FrameMismatch {
                expected: frame,
                found: self.frame,
            })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        other.expect_frame(self.frame)?;
        let mut c = self.components;
        for (x, y) in c.iter_mut().zip(other.components) {
            *x = *x + y;
        }
        Ok(Self::new(c, self.frame))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.scale(-S::one()))
    }

    pub fn scale(&self, k: S) -> Self {
        Self::new(self.components.map(|x| x * k), self.frame)
    }

    /// Minkowski norm `η_ab v^a v^b`; only defined for local vectors.
    pub fn minkowski_norm(&self) -> Result<S> {
        self.expect_frame(Frame::Local)?;
        Ok(self
            .components
            .iter()
            .enumerate()
            .fold(S::zero(), |acc, (a, v)| acc + eta::<S>(a) * *v * *v))
    }

    /// Local components with the index lowered by η.
    pub fn lowered_local(&self) -> Result<[S; 4]> {
        self.expect_frame(Frame::Local)?;
        let mut c = self.components;
        c[0] = -c[0];
        Ok(c)
    }

    pub fn to_f64(&self) -> FrameVector<f64> {
        FrameVector::new(self.components.map(Real::as_f64), self.frame)
    }
}

/// `v^a = e^a_μ v^μ`.
pub fn to_local<S: Real>(v: &FrameVector<S>, tet: &Tetrad<S>) -> Result<FrameVector<S>> {
    v.expect_frame(Frame::Coordinate)?;
    let mut out = [S::zero(); 4];
    for (a, o) in out.iter_mut().enumerate() {
        for mu in 0..4 {
            *o = *o + tet.e_fwd[a][mu] * v.components[mu];
        }
    }
    Ok(FrameVector::local(out))
}

/// `v^μ = e_a^μ v^a`.
pub fn to_coordinate<S: Real>(v: &FrameVector<S>, tet: &Tetrad<S>) -> Result<FrameVector<S>> {
    v.expect_frame(Frame::Local)?;
    let mut out = [S::zero(); 4];
    for (mu, o) in out.iter_mut().enumerate() {
        for a in 0..4 {
            *o = *o + tet.e_inv[a][mu] * v.components[a];
        }
    }
    Ok(FrameVector::coordinate(out))
}

/// Christoffel symbols of the second kind, `gamma[ρ][μ][ν] = Γ^ρ_μν`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Christoffel<S = f64> {
    pub gamma: Array444<S>,
}

impl<S: Real> Christoffel<S> {
    pub fn get(&self, rho: usize, mu: usize, nu: usize) -> S {
        self.gamma[rho][mu][nu]
    }

    /// `(∇_X V)^μ = X^ν ∂_ν V^μ + Γ^μ_νσ X^ν V^σ`, where `partial` supplies
    /// the directional derivative `X^ν ∂_ν V^μ` of the field's components.
    pub fn directional_derivative(
        &self,
        along: &[S; 4],
        field: &[S; 4],
        partial: &[S; 4],
    ) -> [S; 4] {
        let mut out = *partial;
        for (mu, o) in out.iter_mut().enumerate() {
            for nu in 0..4 {
                if along[nu] == S::zero() {
                    continue;
                }
                for sigma in 0..4 {
                    *o = *o + self.gamma[mu][nu][sigma] * along[nu] * field[sigma];
                }
            }
        }
        out
    }
}

/// Spin connection `omega[ν][a][b] = ω_ν{}^a{}_b = e^a_λ ∇_ν e_b^λ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpinConnection<S = f64> {
    pub omega: Array444<S>,
}

impl<S: Real> SpinConnection<S> {
    /// `ω_ν{}_{ab}`, first local index lowered with η.
    pub fn lowered(&self) -> Array444<S> {
        let mut out = self.omega;
        for slab in out.iter_mut() {
            for (a, row) in slab.iter_mut().enumerate() {
                for v in row.iter_mut() {
                    *v = eta::<S>(a) * *v;
                }
            }
        }
        out
    }

    /// Largest `|ω_ν{}_{ab} + ω_ν{}_{ba}|`.
    pub fn antisymmetry_residual(&self) -> f64 {
        let low = self.lowered();
        let mut worst = 0.0_f64;
        for slab in &low {
            for a in 0..4 {
                for b in 0..4 {
                    worst = worst.max((slab[a][b] + slab[b][a]).abs().as_f64());
                }
            }
        }
        worst
    }

    /// `χ^a_b = −u^ν ω_ν{}^a{}_b` for a coordinate-frame velocity.
    pub fn contract(&self, u: &FrameVector<S>) -> Result<Matrix4<S>> {
        u.expect_frame(Frame::Coordinate)?;
        let mut chi = zeros4::<S>();
        for (a, row) in chi.iter_mut().enumerate() {
            for (b, c) in row.iter_mut().enumerate() {
                let mut acc = S::zero();
                for nu in 0..4 {
                    acc = acc + u.components[nu] * self.omega[nu][a][b];
                }
                *c = -acc;
            }
        }
        Ok(chi)
    }
}

/// Source of metric data in a fixed chart.
///
/// Implementations return analytic derivatives; numerical differentiation
/// belongs in tests only.
pub trait MetricProvider: Send + Sync {
    fn metric_at<S: Real>(&self, p: &SpacetimePoint<S>) -> Result<MetricValue<S>>;

    fn tetrad_at<S: Real>(&self, p: &SpacetimePoint<S>) -> Result<Tetrad<S>>;

    /// `∂_ρ e_a^μ`, indexed `[ρ][a][μ]`.
    fn tetrad_gradient_at<S: Real>(&self, p: &SpacetimePoint<S>) -> Result<Array444<S>>;
}

/// Minkowski spacetime seen from a frame rotating about the z axis with
/// angular velocity `omega` (1/length), with the locally non-rotating
/// (ZAMO) tetrad
///
/// ```text
/// e^0 = dt,  e^1 = dr,  e^2 = dz,  e^3 = ωr dt + r dφ
/// ```
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RotatingMinkowski {
    omega: f64,
}

impl RotatingMinkowski {
    pub fn new(omega: f64) -> Result<Self> {
        if !omega.is_finite() {
            return Err(Error::invalid("omega", "angular velocity must be finite"));
        }
        Ok(Self { omega })
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    fn check_radius<S: Real>(p: &SpacetimePoint<S>) -> Result<()> {
        if p.r > S::zero() && p.r.is_finite() {
            Ok(())
        } else {
            Err(Error::NonPositiveRadius { r: p.r.as_f64() })
        }
    }

    fn check_light_cylinder<S: Real>(&self, p: &SpacetimePoint<S>) -> Result<()> {
        let wr = (S::of(self.omega) * p.r).abs();
        if wr < S::one() {
            Ok(())
        } else {
            Err(Error::LightCylinder {
                omega_r: wr.as_f64(),
            })
        }
    }
}

impl MetricProvider for RotatingMinkowski {
    fn metric_at<S: Real>(&self, p: &SpacetimePoint<S>) -> Result<MetricValue<S>> {
        Self::check_radius(p)?;
        self.check_light_cylinder(p)?;
        let w = S::of(self.omega);
        let r = p.r;
        let two = S::of(2.0);

        let mut g = zeros4::<S>();
        g[T][T] = -(S::one() - w * w * r * r);
        g[R][R] = S::one();
        g[Z][Z] = S::one();
        g[PHI][PHI] = r * r;
        g[T][PHI] = w * r * r;
        g[PHI][T] = g[T][PHI];

        let mut dg = zeros444::<S>();
        dg[R][T][T] = two * w * w * r;
        dg[R][PHI][PHI] = two * r;
        dg[R][T][PHI] = two * w * r;
        dg[R][PHI][T] = dg[R][T][PHI];

        Ok(MetricValue { g, dg })
    }

    fn tetrad_at<S: Real>(&self, p: &SpacetimePoint<S>) -> Result<Tetrad<S>> {
        Self::check_radius(p)?;
        let w = S::of(self.omega);
        let r = p.r;

        let mut e_fwd = zeros4::<S>();
        e_fwd[0][T] = S::one();
        e_fwd[1][R] = S::one();
        e_fwd[2][Z] = S::one();
        e_fwd[3][T] = w * r;
        e_fwd[3][PHI] = r;

        let mut e_inv = zeros4::<S>();
        e_inv[0][T] = S::one();
        e_inv[0][PHI] = -w;
        e_inv[1][R] = S::one();
        e_inv[2][Z] = S::one();
        e_inv[3][PHI] = S::one() / r;

        Ok(Tetrad { e_fwd, e_inv })
    }

    fn tetrad_gradient_at<S: Real>(&self, p: &SpacetimePoint<S>) -> Result<Array444<S>> {
        Self::check_radius(p)?;
        let mut d = zeros444::<S>();
        d[R][3][PHI] = -S::one() / (p.r * p.r);
        Ok(d)
    }
}

/// Levi-Civita connection `Γ^ρ_μν = ½ g^{ρσ}(∂_μ g_σν + ∂_ν g_σμ − ∂_σ g_μν)`.
pub fn christoffel_at<S: Real, P: MetricProvider>(
    provider: &P,
    p: &SpacetimePoint<S>,
) -> Result<Christoffel<S>> {
    let m = provider.metric_at(p)?;
    let ginv = m.inverse()?;
    let half = S::of(0.5);

    // first kind: Γ_σμν
    let mut first = zeros444::<S>();
    for (sigma, slab) in first.iter_mut().enumerate() {
        for mu in 0..4 {
            for nu in mu..4 {
                let v = half * (m.dg[mu][sigma][nu] + m.dg[nu][sigma][mu] - m.dg[sigma][mu][nu]);
                slab[mu][nu] = v;
                slab[nu][mu] = v;
            }
        }
    }

    let mut gamma = zeros444::<S>();
    for (rho, slab) in gamma.iter_mut().enumerate() {
        for mu in 0..4 {
            for nu in mu..4 {
                let mut acc = S::zero();
                for sigma in 0..4 {
                    acc = acc + ginv[rho][sigma] * first[sigma][mu][nu];
                }
                slab[mu][nu] = acc;
                slab[nu][mu] = acc;
            }
        }
    }
    Ok(Christoffel { gamma })
}

/// `ω_ν{}^a{}_b = e^a_λ (∂_ν e_b^λ + Γ^λ_νσ e_b^σ)`.
pub fn spin_connection_at<S: Real, P: MetricProvider>(
    provider: &P,
    p: &SpacetimePoint<S>,
) -> Result<SpinConnection<S>> {
    let gamma = christoffel_at(provider, p)?;
    let tet = provider.tetrad_at(p)?;
    let de = provider.tetrad_gradient_at(p)?;

    let mut omega = zeros444::<S>();
    for (nu, slab) in omega.iter_mut().enumerate() {
        // ∇_ν e_b^λ for every b, λ
        let mut cov = zeros4::<S>();
        for b in 0..4 {
            for lam in 0..4 {
                let mut acc = de[nu][b][lam];
                for sigma in 0..4 {
                    acc = acc + gamma.gamma[lam][nu][sigma] * tet.e_inv[b][sigma];
                }
                cov[b][lam] = acc;
            }
        }
        for a in 0..4 {
            for b in 0..4 {
                let mut acc = S::zero();
                for lam in 0..4 {
                    acc = acc + tet.e_fwd[a][lam] * cov[b][lam];
                }
                slab[a][b] = acc;
            }
        }
    }
    Ok(SpinConnection { omega })
}
