//! Fourth-order truncated dual numbers.
//!
//! A [`Jet4`] is `a0 + a1 e1 + a2 e2 + a3 e3 + a4 e4` where the basis obeys
//! `e1^k = k! e_k` for `k <= 4` and `e1^5 = 0`. With this scaling the
//! product rule is a binomial convolution,
//!
//! ```text
//! e_i e_j = (i+j)!/(i! j!) e_{i+j}     (zero when i + j > 4)
//! ```
//!
//! and evaluating a smooth `f` at `x + e1` stores the raw derivatives
//! `f(x), f'(x), ..., f''''(x)` in the five coefficients, with no `1/k!`
//! factors to undo.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Index, Mul, MulAssign, Neg, Sub, SubAssign};

use crate::error::{Error, Result};
use crate::scalar::{Elementary, RealScalar, Scalar};

/// Truncation order of the jets.
pub const ORDER: usize = 4;

/// A fourth-order dual number over the coefficient field `S`.
#[derive(Clone, Copy, PartialEq)]
pub struct Jet4<S> {
    a: [S; 5],
}

impl<S: Scalar> Jet4<S> {
    pub fn new(a: [S; 5]) -> Self {
        Self { a }
    }

    /// The independent variable `x + e1`.
    pub fn variable(x: S) -> Self {
        let z = S::zero();
        Self::new([x, S::one(), z, z, z])
    }

    /// A constant `x`; all dual parts are zero.
    pub fn constant(x: S) -> Self {
        let z = S::zero();
        Self::new([x, z, z, z, z])
    }

    /// The point `x + v e1`, one coordinate of `q + e1 v`.
    pub fn seeded(x: S, v: S) -> Self {
        let z = S::zero();
        Self::new([x, v, z, z, z])
    }

    pub fn coeffs(&self) -> &[S; 5] {
        &self.a
    }

    pub fn into_coeffs(self) -> [S; 5] {
        self.a
    }

    /// The real (non-dual) part.
    pub fn value(&self) -> S {
        self.a[0]
    }

    /// The `e_k` part, which is the k-th derivative along the seeded
    /// direction.
    pub fn part(&self, k: usize) -> Result<S> {
        self.a.get(k).copied().ok_or(Error::PartOutOfRange(k))
    }

    /// Applies an outer function `g` given its derivatives at the real part:
    /// `d[k] = g^(k)(self.value())`.
    ///
    /// This is truncated Taylor composition: with `t_k = a_k / k!` and
    /// `c_j = d_j / j!`, the result is `sum_j c_j (t1 h + ... + t4 h^4)^j`
    /// truncated at degree four and rescaled by `k!`. The rescaled
    /// coefficients reduce to the integer weights of Faa di Bruno's formula,
    /// which is what is evaluated here.
    pub fn lift(&self, d: [S; 5]) -> Self {
        let [_, a1, a2, a3, a4] = self.a;
        let a1_2 = a1 * a1;
        let b1 = d[1] * a1;
        let b2 = d[1] * a2 + d[2] * a1_2;
        let b3 = d[1] * a3 + (d[2] * a1 * a2).scale(3.0) + d[3] * a1_2 * a1;
        let b4 = d[1] * a4
            + d[2] * ((a1 * a3).scale(4.0) + (a2 * a2).scale(3.0))
            + (d[3] * a1_2 * a2).scale(6.0)
            + d[4] * a1_2 * a1_2;
        Self::new([d[0], b1, b2, b3, b4])
    }

    /// Multiplicative inverse; fails on pure dual numbers.
    pub fn inverse(&self) -> Result<Self> {
        self.inverse_with_threshold(0.0)
    }

    /// Like [`inverse`](Self::inverse) but treats real parts with magnitude
    /// at or below `threshold` as zero.
    pub fn inverse_with_threshold(&self, threshold: f64) -> Result<Self> {
        let x = self.a[0];
        if x.is_zero() || x.magnitude() <= threshold {
            return Err(Error::PureDualNotInvertible);
        }
        Ok(self.recip_unchecked())
    }

    fn recip_unchecked(&self) -> Self {
        let r = self.a[0].recip();
        let r2 = r * r;
        let r3 = r2 * r;
        let r4 = r2 * r2;
        self.lift([r, -r2, r3.scale(2.0), -r4.scale(6.0), (r4 * r).scale(24.0)])
    }

    pub fn try_div(&self, rhs: &Self) -> Result<Self> {
        Ok(*self * rhs.inverse()?)
    }

    fn domain_error(&self, function: &'static str) -> Error {
        Error::Domain { function, real_part: self.a[0].re() }
    }

    fn positive_domain(&self) -> bool {
        let x = self.a[0];
        if S::IS_COMPLEX {
            !x.is_zero()
        } else {
            x.re() > 0.0
        }
    }

    /// Natural logarithm; the real part must be positive (non-zero for
    /// complex fields).
    pub fn try_ln(&self) -> Result<Self> {
        if self.positive_domain() {
            Ok(self.ln_unchecked())
        } else {
            Err(self.domain_error("ln"))
        }
    }

    pub fn try_sqrt(&self) -> Result<Self> {
        if self.positive_domain() {
            Ok(self.sqrt_unchecked())
        } else {
            Err(self.domain_error("sqrt"))
        }
    }

    /// Real power. Integral exponents are accepted at any base; other
    /// exponents need a positive base.
    pub fn try_powf(&self, p: f64) -> Result<Self> {
        if p.fract() == 0.0 && p.abs() <= i32::MAX as f64 {
            return Ok(self.powi_impl(p as i32));
        }
        if self.positive_domain() {
            Ok(self.powf_unchecked(p))
        } else {
            Err(self.domain_error("powf"))
        }
    }

    fn ln_unchecked(&self) -> Self {
        let x = self.a[0];
        let r = x.recip();
        let r2 = r * r;
        let r4 = r2 * r2;
        self.lift([x.ln(), r, -r2, (r2 * r).scale(2.0), -r4.scale(6.0)])
    }

    fn sqrt_unchecked(&self) -> Self {
        let x = self.a[0];
        let s = x.sqrt();
        let ir = x.recip();
        let d1 = (s * ir).scale(0.5);
        let d2 = -(d1 * ir).scale(0.5);
        let d3 = -(d2 * ir).scale(1.5);
        let d4 = -(d3 * ir).scale(2.5);
        self.lift([s, d1, d2, d3, d4])
    }

    fn powf_unchecked(&self, p: f64) -> Self {
        let x = self.a[0];
        let v = x.powf(p);
        let ir = x.recip();
        let d1 = (v * ir).scale(p);
        let d2 = (d1 * ir).scale(p - 1.0);
        let d3 = (d2 * ir).scale(p - 2.0);
        let d4 = (d3 * ir).scale(p - 3.0);
        self.lift([v, d1, d2, d3, d4])
    }

    fn powi_impl(&self, n: i32) -> Self {
        let x = self.a[0];
        let mut d = [S::zero(); 5];
        let mut coeff = 1.0;
        for (k, dk) in d.iter_mut().enumerate() {
            if coeff == 0.0 {
                break;
            }
            *dk = x.powi(n - k as i32).scale(coeff);
            coeff *= (n - k as i32) as f64;
        }
        self.lift(d)
    }

    fn map_coeffs(&self, f: impl Fn(S) -> S) -> Self {
        Self::new(self.a.map(f))
    }
}

impl<S: RealScalar> Jet4<S> {
    /// Absolute value by the sign of the real part; the derivative at a zero
    /// real part is taken from the positive branch.
    pub fn abs(&self) -> Self {
        if self.a[0] < S::zero() {
            -*self
        } else {
            *self
        }
    }

    /// Compares real parts only; dual parts do not take part in ordering.
    pub fn cmp_value(&self, other: &Self) -> Option<Ordering> {
        self.a[0].partial_cmp(&other.a[0])
    }
}

impl<S: Scalar> Index<usize> for Jet4<S> {
    type Output = S;
    fn index(&self, k: usize) -> &S {
        &self.a[k]
    }
}

impl<S: Scalar> fmt::Debug for Jet4<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.a.iter()).finish()
    }
}

impl<S: Scalar> From<S> for Jet4<S> {
    fn from(x: S) -> Self {
        Self::constant(x)
    }
}

impl<S: Scalar> Add for Jet4<S> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(std::array::from_fn(|k| self.a[k] + rhs.a[k]))
    }
}

impl<S: Scalar> Sub for Jet4<S> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(std::array::from_fn(|k| self.a[k] - rhs.a[k]))
    }
}

impl<S: Scalar> Neg for Jet4<S> {
    type Output = Self;
    fn neg(self) -> Self {
        self.map_coeffs(|c| -c)
    }
}

impl<S: Scalar> Mul for Jet4<S> {
    type Output = Self;
    /// Binomial convolution `c_k = sum_i C(k,i) u_i v_(k-i)`.
    fn mul(self, rhs: Self) -> Self {
        let [u0, u1, u2, u3, u4] = self.a;
        let [v0, v1, v2, v3, v4] = rhs.a;
        Self::new([
            u0 * v0,
            u0 * v1 + u1 * v0,
            u0 * v2 + (u1 * v1).scale(2.0) + u2 * v0,
            u0 * v3 + (u1 * v2 + u2 * v1).scale(3.0) + u3 * v0,
            u0 * v4 + (u1 * v3 + u3 * v1).scale(4.0) + (u2 * v2).scale(6.0) + u4 * v0,
        ])
    }
}

impl<S: Scalar> Mul<S> for Jet4<S> {
    type Output = Self;
    fn mul(self, s: S) -> Self {
        self.map_coeffs(|c| c * s)
    }
}

impl<S: Scalar> Div for Jet4<S> {
    type Output = Self;
    /// # Panics
    ///
    /// Panics when `rhs` is a pure dual number, like integer division by
    /// zero. Use [`Jet4::try_div`] for a fallible version.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Self) -> Self {
        match rhs.inverse() {
            Ok(inv) => self * inv,
            Err(e) => panic!("{e}"),
        }
    }
}

impl<S: Scalar> AddAssign for Jet4<S> {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl<S: Scalar> SubAssign for Jet4<S> {
    fn sub_assign(&mut self, rhs: Self) {
        *self = *self - rhs;
    }
}

impl<S: Scalar> MulAssign for Jet4<S> {
    fn mul_assign(&mut self, rhs: Self) {
        *self = *self * rhs;
    }
}

/// Jets are themselves [`Elementary`], so a model written once runs on
/// scalars and on jets. Out-of-domain `ln`, `sqrt` and `powf` propagate the
/// field's own NaN/inf behaviour; the `try_*` methods report a
/// [`Error::Domain`] instead.
impl<S: Scalar> Elementary for Jet4<S> {
    fn from_f64(x: f64) -> Self {
        Self::constant(S::from_f64(x))
    }

    fn sin(self) -> Self {
        let (s, c) = (self.a[0].sin(), self.a[0].cos());
        self.lift([s, c, -s, -c, s])
    }

    fn cos(self) -> Self {
        let (s, c) = (self.a[0].sin(), self.a[0].cos());
        self.lift([c, -s, -c, s, c])
    }

    fn tan(self) -> Self {
        let t = self.a[0].tan();
        let t2 = t * t;
        let u = S::one() + t2;
        let tu = t * u;
        self.lift([
            t,
            u,
            tu.scale(2.0),
            (u * u).scale(2.0) + (t2 * u).scale(4.0),
            (tu * u).scale(16.0) + (t2 * tu).scale(8.0),
        ])
    }

    fn exp(self) -> Self {
        let e = self.a[0].exp();
        self.lift([e; 5])
    }

    fn ln(self) -> Self {
        self.ln_unchecked()
    }

    fn sqrt(self) -> Self {
        self.sqrt_unchecked()
    }

    fn sinh(self) -> Self {
        let (s, c) = (self.a[0].sinh(), self.a[0].cosh());
        self.lift([s, c, s, c, s])
    }

    fn cosh(self) -> Self {
        let (s, c) = (self.a[0].sinh(), self.a[0].cosh());
        self.lift([c, s, c, s, c])
    }

    fn powi(self, n: i32) -> Self {
        self.powi_impl(n)
    }

    fn powf(self, p: f64) -> Self {
        if p.fract() == 0.0 && p.abs() <= i32::MAX as f64 {
            self.powi_impl(p as i32)
        } else {
            self.powf_unchecked(p)
        }
    }

    fn scale(self, s: f64) -> Self {
        self.map_coeffs(|c| c.scale(s))
    }
}
