//! Coefficient fields for jets and the arithmetic vocabulary shared by
//! scalars and jets.
//!
//! [`Elementary`] is what a user-written field function needs: ring
//! operations, constants and the elementary functions. Writing a model as
//! `fn f<T: Elementary>(x: &[T]) -> T` lets the same code run on plain
//! scalars (finite differences) and on [`Jet4`](crate::Jet4) (automatic
//! differentiation). [`Scalar`] adds what the jet algebra itself needs from
//! its coefficient field.

use std::fmt::Debug;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_complex::Complex64;

use crate::dd::DoubleDouble;

/// Ring operations plus the elementary functions used by field models.
pub trait Elementary:
    Copy
    + Debug
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
{
    fn from_f64(x: f64) -> Self;

    fn zero() -> Self {
        Self::from_f64(0.0)
    }

    fn one() -> Self {
        Self::from_f64(1.0)
    }

    fn sin(self) -> Self;
    fn cos(self) -> Self;
    fn tan(self) -> Self;
    fn exp(self) -> Self;
    fn ln(self) -> Self;
    fn sqrt(self) -> Self;
    fn sinh(self) -> Self;
    fn cosh(self) -> Self;
    fn powi(self, n: i32) -> Self;
    fn powf(self, p: f64) -> Self;

    /// Multiplies by an `f64` constant.
    fn scale(self, s: f64) -> Self {
        self * Self::from_f64(s)
    }
}

/// A coefficient field for [`Jet4`](crate::Jet4): binary64, double-double,
/// or complex binary64.
pub trait Scalar: Elementary + PartialEq + 'static {
    /// Whether the field is complex; selects the domain rules of `ln`,
    /// `sqrt` and `powf`.
    const IS_COMPLEX: bool;

    /// Real part, rounded to binary64.
    fn re(self) -> f64;

    /// Imaginary part (zero for real fields).
    fn im(self) -> f64 {
        0.0
    }

    fn is_zero(self) -> bool;

    /// Multiplicative inverse.
    fn recip(self) -> Self {
        Self::one() / self
    }

    /// Magnitude as binary64, used for tolerances.
    fn magnitude(self) -> f64;
}

/// Real fields: totally ordered, with an absolute value.
pub trait RealScalar: Scalar + PartialOrd {
    fn abs(self) -> Self;
}

/// Square-and-multiply integer power using only the ring operations, so
/// every field follows the same operation sequence.
fn powi_by_squaring<T: Scalar>(x: T, n: i32) -> T {
    if n == 0 {
        return T::one();
    }
    let mut base = x;
    let mut e = n.unsigned_abs();
    let mut acc = T::one();
    while e > 0 {
        if e & 1 == 1 {
            acc *= base;
        }
        e >>= 1;
        if e > 0 {
            base *= base;
        }
    }
    if n < 0 {
        acc.recip()
    } else {
        acc
    }
}

impl Elementary for f64 {
    fn from_f64(x: f64) -> Self {
        x
    }
    fn sin(self) -> Self {
        f64::sin(self)
    }
    fn cos(self) -> Self {
        f64::cos(self)
    }
    fn tan(self) -> Self {
        f64::tan(self)
    }
    fn exp(self) -> Self {
        f64::exp(self)
    }
    fn ln(self) -> Self {
        f64::ln(self)
    }
    fn sqrt(self) -> Self {
        f64::sqrt(self)
    }
    fn sinh(self) -> Self {
        f64::sinh(self)
    }
    fn cosh(self) -> Self {
        f64::cosh(self)
    }
    fn powi(self, n: i32) -> Self {
        powi_by_squaring(self, n)
    }
    fn powf(self, p: f64) -> Self {
        f64::powf(self, p)
    }
    fn scale(self, s: f64) -> Self {
        self * s
    }
}

impl Scalar for f64 {
    const IS_COMPLEX: bool = false;

    fn re(self) -> f64 {
        self
    }
    fn is_zero(self) -> bool {
        self == 0.0
    }
    fn recip(self) -> Self {
        1.0 / self
    }
    fn magnitude(self) -> f64 {
        self.abs()
    }
}

impl RealScalar for f64 {
    fn abs(self) -> Self {
        f64::abs(self)
    }
}

impl Elementary for DoubleDouble {
    fn from_f64(x: f64) -> Self {
        DoubleDouble::from(x)
    }
    fn sin(self) -> Self {
        DoubleDouble::sin(self)
    }
    fn cos(self) -> Self {
        DoubleDouble::cos(self)
    }
    fn tan(self) -> Self {
        DoubleDouble::tan(self)
    }
    fn exp(self) -> Self {
        DoubleDouble::exp(self)
    }
    fn ln(self) -> Self {
        DoubleDouble::ln(self)
    }
    fn sqrt(self) -> Self {
        DoubleDouble::sqrt(self)
    }
    fn sinh(self) -> Self {
        DoubleDouble::sinh(self)
    }
    fn cosh(self) -> Self {
        DoubleDouble::cosh(self)
    }
    fn powi(self, n: i32) -> Self {
        DoubleDouble::powi(self, n)
    }
    fn powf(self, p: f64) -> Self {
        DoubleDouble::powf(self, p)
    }
    fn scale(self, s: f64) -> Self {
        self.mul_f64(s)
    }
}

impl Scalar for DoubleDouble {
    const IS_COMPLEX: bool = false;

    fn re(self) -> f64 {
        self.to_f64()
    }
    fn is_zero(self) -> bool {
        DoubleDouble::is_zero(self)
    }
    fn recip(self) -> Self {
        DoubleDouble::recip(self)
    }
    fn magnitude(self) -> f64 {
        self.to_f64().abs()
    }
}

impl RealScalar for DoubleDouble {
    fn abs(self) -> Self {
        DoubleDouble::abs(self)
    }
}

// Arguments on the real axis inside the real domain take the binary64 path,
// so complex jets with zero imaginary parts reproduce real jets exactly.
macro_rules! real_axis {
    ($z:expr, $domain:expr, $real:expr, $complex:expr) => {{
        let z: Complex64 = $z;
        if z.im == 0.0 && $domain(z.re) {
            Complex64::new($real(z.re), 0.0)
        } else {
            $complex(z)
        }
    }};
}

fn anywhere(_: f64) -> bool {
    true
}

fn positive(x: f64) -> bool {
    x > 0.0
}

impl Elementary for Complex64 {
    fn from_f64(x: f64) -> Self {
        Complex64::new(x, 0.0)
    }
    fn sin(self) -> Self {
        real_axis!(self, anywhere, f64::sin, Complex64::sin)
    }
    fn cos(self) -> Self {
        real_axis!(self, anywhere, f64::cos, Complex64::cos)
    }
    fn tan(self) -> Self {
        real_axis!(self, anywhere, f64::tan, Complex64::tan)
    }
    fn exp(self) -> Self {
        real_axis!(self, anywhere, f64::exp, Complex64::exp)
    }
    fn ln(self) -> Self {
        real_axis!(self, positive, f64::ln, Complex64::ln)
    }
    fn sqrt(self) -> Self {
        real_axis!(self, |x: f64| x >= 0.0, f64::sqrt, Complex64::sqrt)
    }
    fn sinh(self) -> Self {
        real_axis!(self, anywhere, f64::sinh, Complex64::sinh)
    }
    fn cosh(self) -> Self {
        real_axis!(self, anywhere, f64::cosh, Complex64::cosh)
    }
    fn powi(self, n: i32) -> Self {
        powi_by_squaring(self, n)
    }
    fn powf(self, p: f64) -> Self {
        real_axis!(self, positive, |x: f64| x.powf(p), |z: Complex64| z.powf(p))
    }
    fn scale(self, s: f64) -> Self {
        Complex64::new(self.re * s, self.im * s)
    }
}

impl Scalar for Complex64 {
    const IS_COMPLEX: bool = true;

    fn re(self) -> f64 {
        self.re
    }
    fn im(self) -> f64 {
        self.im
    }
    fn is_zero(self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn recip(self) -> Self {
        if self.im == 0.0 {
            Complex64::new(1.0 / self.re, 0.0)
        } else {
            self.inv()
        }
    }
    fn magnitude(self) -> f64 {
        self.norm()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_on_real_axis_matches_real() {
        for &x in &[0.3, 1.7, 4.0] {
            let z = Complex64::from_f64(x);
            assert_eq!(Elementary::ln(z).re, x.ln());
            assert_eq!(Elementary::sqrt(z).re, x.sqrt());
            assert_eq!(Elementary::tan(z).re, x.tan());
            assert_eq!(Elementary::powf(z, 1.5).re, x.powf(1.5));
            assert_eq!(Scalar::recip(z).re, 1.0 / x);
            assert_eq!(Elementary::powi(z, -3).re, Elementary::powi(x, -3));
        }
    }

    #[test]
    fn complex_off_axis_uses_complex_branch() {
        let z = Complex64::new(-1.0, 0.0);
        let l = Elementary::ln(z);
        assert!((l.im - std::f64::consts::PI).abs() < 1e-15);
        let s = Elementary::sqrt(Complex64::new(0.0, 2.0));
        assert!((s * s - Complex64::new(0.0, 2.0)).norm() < 1e-15);
    }

    #[test]
    fn powi_matches_repeated_product() {
        assert_eq!(Elementary::powi(3.0_f64, 4), 81.0);
        assert_eq!(Elementary::powi(2.0_f64, -2), 0.25);
        assert_eq!(Elementary::powi(5.0_f64, 0), 1.0);
    }
}
