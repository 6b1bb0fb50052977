//! Scalar abstraction for the tensor pipeline.
//!
//! The frame-dragging terms of the rotating chart cancel against each other
//! when the spin connection is contracted with a slow particle's velocity, so
//! the pipeline is generic over the scalar. [`f64`] is the default everywhere;
//! [`Precise`] (double-double, ~106-bit mantissa) is used where results must
//! hold to 1e-10 relative after that cancellation.

use std::fmt::{self, Debug, Display, LowerExp};
use std::ops::{Add, Div, Mul, Neg, Sub};

use twofloat::TwoFloat;

/// Real scalar accepted by the geometry, kinematics and Wigner modules.
pub trait Real:
    Copy
    + PartialOrd
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + From<f64>
    + Debug
    + Display
    + LowerExp
    + Default
    + Send
    + Sync
    + 'static
{
    /// Nearest `f64`.
    fn as_f64(self) -> f64;

    #[inline]
    fn of(x: f64) -> Self {
        <Self as From<f64>>::from(x)
    }

    #[inline]
    fn zero() -> Self {
        Self::of(0.0)
    }

    #[inline]
    fn one() -> Self {
        Self::of(1.0)
    }

    /// Unit roundoff times two.
    fn epsilon() -> Self;

    #[allow(non_snake_case)]
    fn PI() -> Self;

    fn abs(self) -> Self;
    fn sqrt(self) -> Self;
    fn ln_1p(self) -> Self;
    fn floor(self) -> Self;

    #[inline]
    fn is_finite(self) -> bool {
        self.as_f64().is_finite()
    }

    /// Larger of the two; a NaN argument yields the other one.
    #[inline]
    fn max(self, other: Self) -> Self {
        if self >= other || other.partial_cmp(&other).is_none() {
            self
        } else {
            other
        }
    }

    /// Number of significant decimal digits carried.
    fn digits() -> u32;
}

impl Real for f64 {
    #[inline]
    fn as_f64(self) -> f64 {
        self
    }
    fn epsilon() -> Self {
        f64::EPSILON
    }
    fn PI() -> Self {
        std::f64::consts::PI
    }
    #[inline]
    fn abs(self) -> Self {
        f64::abs(self)
    }
    #[inline]
    fn sqrt(self) -> Self {
        f64::sqrt(self)
    }
    fn ln_1p(self) -> Self {
        f64::ln_1p(self)
    }
    fn floor(self) -> Self {
        f64::floor(self)
    }
    #[inline]
    fn is_finite(self) -> bool {
        f64::is_finite(self)
    }
    #[inline]
    fn max(self, other: Self) -> Self {
        f64::max(self, other)
    }
    fn digits() -> u32 {
        15
    }
}

/// Double-double scalar used for the high-precision pipeline.
///
/// Thin wrapper over [`TwoFloat`] with a three-term long division, since the
/// upstream quotient only carries `f64` accuracy.
#[derive(Clone, Copy, Default, PartialEq, PartialOrd)]
pub struct Precise(TwoFloat);

impl Precise {
    pub fn hi(self) -> f64 {
        self.0.hi()
    }

    pub fn lo(self) -> f64 {
        self.0.lo()
    }

    pub fn inner(self) -> TwoFloat {
        self.0
    }
}

impl From<f64> for Precise {
    fn from(x: f64) -> Self {
        Self(TwoFloat::from(x))
    }
}

impl From<TwoFloat> for Precise {
    fn from(x: TwoFloat) -> Self {
        Self(x)
    }
}

impl From<Precise> for f64 {
    fn from(x: Precise) -> f64 {
        x.hi() + x.lo()
    }
}

impl Add for Precise {
    type Output = Self;
    #[inline]
    fn add(self, rhs: Self) -> Self {
        Self(self.0 + rhs.0)
    }
}

impl Sub for Precise {
    type Output = Self;
    #[inline]
    fn sub(self, rhs: Self) -> Self {
        Self(self.0 - rhs.0)
    }
}

impl Mul for Precise {
    type Output = Self;
    #[inline]
    fn mul(self, rhs: Self) -> Self {
        Self(self.0 * rhs.0)
    }
}

impl Neg for Precise {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        Self(-self.0)
    }
}

impl Div for Precise {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        let (a, b) = (self.0, rhs.0);
        let q1 = a.hi() / b.hi();
        if !q1.is_finite() || q1 == 0.0 {
            return Self::from(q1);
        }
        let r = a - b * q1;
        let q2 = r.hi() / b.hi();
        let r = r - b * q2;
        let q3 = r.hi() / b.hi();
        Self(TwoFloat::new_add(q1, q2) + q3)
    }
}

impl Debug for Precise {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Precise({:e} + {:e})", self.hi(), self.lo())
    }
}

impl Display for Precise {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Display::fmt(&self.0, f)
    }
}

impl LowerExp for Precise {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        LowerExp::fmt(&self.0, f)
    }
}

impl Real for Precise {
    #[inline]
    fn as_f64(self) -> f64 {
        self.hi() + self.lo()
    }
    fn epsilon() -> Self {
        Self::from(f64::EPSILON * f64::EPSILON)
    }
    fn PI() -> Self {
        Self(twofloat::consts::PI)
    }
    #[inline]
    fn abs(self) -> Self {
        Self(self.0.abs())
    }
    fn sqrt(self) -> Self {
        if self.hi() <= 0.0 {
            return Self::from(self.hi().sqrt());
        }
        // one Newton step on the f64 root, carried in double-double
        let y = Self::from(self.hi().sqrt());
        let half = Self::from(0.5);
        y + half * (self - y * y) / y
    }
    fn ln_1p(self) -> Self {
        Self(self.0.ln_1p())
    }
    fn floor(self) -> Self {
        Self(self.0.floor())
    }
    fn digits() -> u32 {
        31
    }
}

/// Square 4×4 array indexed `[row][col]`.
pub type Matrix4<T> = [[T; 4]; 4];

/// Rank-3 array with three 4-valued indices.
pub type Array444<T> = [[[T; 4]; 4]; 4];

pub(crate) fn zeros4<T: Real>() -> Matrix4<T> {
    [[T::zero(); 4]; 4]
}

pub(crate) fn zeros444<T: Real>() -> Array444<T> {
    [[[T::zero(); 4]; 4]; 4]
}

/// Element-wise conversion of a 4×4 array to `f64`.
pub fn matrix_to_f64<T: Real>(m: &Matrix4<T>) -> Matrix4<f64> {
    let mut out = [[0.0; 4]; 4];
    for (row_out, row) in out.iter_mut().zip(m) {
        for (o, v) in row_out.iter_mut().zip(row) {
            *o = v.as_f64();
        }
    }
    out
}

/// Minkowski metric η = diag(−1, 1, 1, 1) for local (Latin) indices.
#[inline]
pub fn eta<T: Real>(a: usize) -> T {
    if a == 0 {
        -T::one()
    } else {
        T::one()
    }
}

/// Inverse of a 4×4 matrix by Gauss–Jordan elimination with partial pivoting.
///
/// Returns `None` when a pivot falls below `1e-300` relative to the largest
/// entry of the input.
pub fn invert4<T: Real>(m: &Matrix4<T>) -> Option<Matrix4<T>> {
    let scale = m
        .iter()
        .flatten()
        .fold(T::zero(), |acc, v| acc.max(v.abs()));
    if scale == T::zero() || !scale.is_finite() {
        return None;
    }
    let tiny = scale * T::of(1e-300);

    let mut a = *m;
    let mut inv = zeros4::<T>();
    for (i, row) in inv.iter_mut().enumerate() {
        row[i] = T::one();
    }

    for col in 0..4 {
        let pivot = (col..4)
            .max_by(|&x, &y| {
                a[x][col]
                    .abs()
                    .partial_cmp(&a[y][col].abs())
                    .unwrap_or(std::cmp::Ordering::Equal)
            })
            .unwrap_or(col);
        if a[pivot][col].abs() <= tiny {
            return None;
        }
        a.swap(col, pivot);
        inv.swap(col, pivot);

        let p = a[col][col];
        for k in 0..4 {
            a[col][k] = a[col][k] / p;
            inv[col][k] = inv[col][k] / p;
        }
        for row in 0..4 {
            if row == col {
                continue;
            }
            let f = a[row][col];
            if f == T::zero() {
                continue;
            }
            for k in 0..4 {
                a[row][k] = a[row][k] - f * a[col][k];
                inv[row][k] = inv[row][k] - f * inv[col][k];
            }
        }
    }
    Some(inv)
}
