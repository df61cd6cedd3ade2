//! Double-double arithmetic: an unevaluated sum `hi + lo` of two `f64`
//! values with `|lo| <= ulp(hi)/2`, giving a 106-bit significand.
//!
//! The kernels are the classic error-free transformations (TwoSum,
//! TwoProd) plus argument-reduced series for the transcendental
//! functions. Accuracy is a few units in 2^-104 for arguments of
//! moderate size, which is all the finite-difference comparator needs.

use std::cmp::Ordering;
use std::f64::consts;
use std::fmt;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};

/// A double-double floating-point number (about 32 significant digits).
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct DoubleDouble {
    hi: f64,
    lo: f64,
}

const TWO_PI: DoubleDouble = DoubleDouble::from_parts(consts::TAU, 2.4492935982947064e-16);
const PI_2: DoubleDouble = DoubleDouble::from_parts(consts::FRAC_PI_2, 6.123233995736766e-17);
const PI_16: DoubleDouble = DoubleDouble::from_parts(0.19634954084936207, 7.654042494670958e-18);
const LN2: DoubleDouble = DoubleDouble::from_parts(consts::LN_2, 2.3190468138462996e-17);

// sin(k*pi/16) and cos(k*pi/16) for k = 1..4
const SIN_TABLE: [DoubleDouble; 4] = [
    DoubleDouble::from_parts(0.19509032201612828, -7.991079068461731e-18),
    DoubleDouble::from_parts(0.3826834323650898, -1.0050772696461588e-17),
    DoubleDouble::from_parts(0.5555702330196022, 4.709410940561677e-17),
    DoubleDouble::from_parts(consts::FRAC_1_SQRT_2, -4.833646656726457e-17),
];
const COS_TABLE: [DoubleDouble; 4] = [
    DoubleDouble::from_parts(0.9807852804032304, 1.8546939997825006e-17),
    DoubleDouble::from_parts(0.9238795325112867, 1.7645047084336677e-17),
    DoubleDouble::from_parts(0.8314696123025452, 1.4073856984728024e-18),
    DoubleDouble::from_parts(consts::FRAC_1_SQRT_2, -4.833646656726457e-17),
];

/// 2^-106, the unit roundoff of the format.
const EPS: f64 = 1.232595164407831e-32;

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let v = s - a;
    let e = (a - (s - v)) + (b - v);
    (s, e)
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let e = b - (s - a);
    (s, e)
}

#[cfg(target_feature = "fma")]
#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

#[cfg(not(target_feature = "fma"))]
#[inline]
fn split(a: f64) -> (f64, f64) {
    const SPLITTER: f64 = 134_217_729.0; // 2^27 + 1
    let t = SPLITTER * a;
    let hi = t - (t - a);
    (hi, a - hi)
}

#[cfg(not(target_feature = "fma"))]
#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let (ah, al) = split(a);
    let (bh, bl) = split(b);
    let e = ((ah * bh - p) + ah * bl + al * bh) + al * bl;
    (p, e)
}

impl DoubleDouble {
    pub const ZERO: Self = Self::from_parts(0.0, 0.0);
    pub const ONE: Self = Self::from_parts(1.0, 0.0);
    pub const PI: Self = Self::from_parts(consts::PI, 1.2246467991473532e-16);

    /// Builds a value from an already normalized pair.
    pub const fn from_parts(hi: f64, lo: f64) -> Self {
        Self { hi, lo }
    }

    /// Exact sum of two doubles.
    pub fn from_sum(a: f64, b: f64) -> Self {
        let (hi, lo) = two_sum(a, b);
        Self { hi, lo }
    }

    pub fn hi(self) -> f64 {
        self.hi
    }

    pub fn lo(self) -> f64 {
        self.lo
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn is_zero(self) -> bool {
        self.hi == 0.0
    }

    pub fn is_nan(self) -> bool {
        self.hi.is_nan() || self.lo.is_nan()
    }

    pub fn is_finite(self) -> bool {
        self.hi.is_finite() && self.lo.is_finite()
    }

    pub fn abs(self) -> Self {
        if self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0) {
            -self
        } else {
            self
        }
    }

    pub fn mul_f64(self, b: f64) -> Self {
        let (p1, mut p2) = two_prod(self.hi, b);
        p2 += self.lo * b;
        let (hi, lo) = quick_two_sum(p1, p2);
        Self { hi, lo }
    }

    pub fn div_f64(self, b: f64) -> Self {
        let q1 = self.hi / b;
        let (p1, p2) = two_prod(q1, b);
        let (s, mut e) = two_sum(self.hi, -p1);
        e += self.lo;
        e -= p2;
        let q2 = (s + e) / b;
        let (hi, lo) = quick_two_sum(q1, q2);
        Self { hi, lo }
    }

    /// Multiplication by an exact power of two.
    fn scale_pow2(self, factor: f64) -> Self {
        Self { hi: self.hi * factor, lo: self.lo * factor }
    }

    pub fn sqr(self) -> Self {
        let (p1, mut p2) = two_prod(self.hi, self.hi);
        p2 += 2.0 * self.hi * self.lo;
        p2 += self.lo * self.lo;
        let (hi, lo) = quick_two_sum(p1, p2);
        Self { hi, lo }
    }

    pub fn recip(self) -> Self {
        Self::ONE / self
    }

    /// Nearest integer, ties away from zero.
    pub fn round(self) -> Self {
        let hi = self.hi.round();
        if hi == self.hi {
            let lo = self.lo.round();
            let (hi, lo) = quick_two_sum(hi, lo);
            Self { hi, lo }
        } else if (hi - self.hi).abs() == 0.5 && self.lo != 0.0 {
            // hi sits on a half-integer; lo decides the direction
            let adj = if self.lo < 0.0 && hi > self.hi {
                hi - 1.0
            } else if self.lo > 0.0 && hi < self.hi {
                hi + 1.0
            } else {
                hi
            };
            Self { hi: adj, lo: 0.0 }
        } else {
            Self { hi, lo: 0.0 }
        }
    }

    pub fn sqrt(self) -> Self {
        if self.hi == 0.0 {
            return Self::ZERO;
        }
        if self.hi < 0.0 {
            return Self::from(f64::NAN);
        }
        let x = 1.0 / self.hi.sqrt();
        let ax = self.hi * x;
        let corr = (self - Self::from(ax).sqr()).hi * (x * 0.5);
        Self::from_sum(ax, corr)
    }

    pub fn exp(self) -> Self {
        if self.hi > 709.78 {
            return Self::from(f64::INFINITY);
        }
        if self.hi < -745.2 {
            return Self::ZERO;
        }
        if self.hi == 0.0 {
            return Self::ONE;
        }
        const INV_K: f64 = 1.0 / 512.0;
        let m = (self.hi / LN2.hi + 0.5).floor();
        let r = (self - LN2.mul_f64(m)).scale_pow2(INV_K);

        // expm1(r) by Taylor series, |r| <= ln2/1024
        let mut p = r.sqr();
        let mut s = r + p.scale_pow2(0.5);
        p *= r;
        let mut fact = 6.0;
        let mut t = p.div_f64(fact);
        let mut n = 3.0;
        while t.hi.abs() > INV_K * EPS {
            s += t;
            p *= r;
            n += 1.0;
            fact *= n;
            t = p.div_f64(fact);
        }
        s += t;

        // expm1(2x) = 2 expm1(x) + expm1(x)^2, nine times
        for _ in 0..9 {
            s = s.scale_pow2(2.0) + s.sqr();
        }
        s += Self::ONE;
        s.ldexp(m as i32)
    }

    fn ldexp(self, k: i32) -> Self {
        if (-1000..=1000).contains(&k) {
            self.scale_pow2(2f64.powi(k))
        } else {
            let half = k / 2;
            self.scale_pow2(2f64.powi(half)).scale_pow2(2f64.powi(k - half))
        }
    }

    pub fn ln(self) -> Self {
        if self.hi <= 0.0 {
            if self.hi == 0.0 {
                return Self::from(f64::NEG_INFINITY);
            }
            return Self::from(f64::NAN);
        }
        if self.hi == 1.0 && self.lo == 0.0 {
            return Self::ZERO;
        }
        // one Newton step on exp(y) = x doubles the f64 estimate's accuracy
        let x = Self::from(self.hi.ln());
        x + self * (-x).exp() - Self::ONE
    }

    /// Simultaneous sine and cosine.
    pub fn sin_cos(self) -> (Self, Self) {
        if self.hi == 0.0 {
            return (Self::ZERO, Self::ONE);
        }
        if !self.is_finite() {
            return (Self::from(f64::NAN), Self::from(f64::NAN));
        }
        // reduce modulo 2*pi, then pi/2, then pi/16
        let z = (self / TWO_PI).round();
        let r = self - TWO_PI * z;

        let q = (r.hi / PI_2.hi + 0.5).floor();
        let mut t = r - PI_2.mul_f64(q);
        let quadrant = q as i32;

        let q = (t.hi / PI_16.hi + 0.5).floor();
        t -= PI_16.mul_f64(q);
        let k = q as i32;

        let (sin_t, cos_t) = Self::sin_cos_taylor(t);
        let (s, c) = if k == 0 {
            (sin_t, cos_t)
        } else {
            let idx = (k.unsigned_abs() - 1) as usize;
            let (u, v) = (COS_TABLE[idx], SIN_TABLE[idx]);
            if k > 0 {
                (u * sin_t + v * cos_t, u * cos_t - v * sin_t)
            } else {
                (u * sin_t - v * cos_t, u * cos_t + v * sin_t)
            }
        };
        match quadrant {
            0 => (s, c),
            1 => (c, -s),
            -1 => (-c, s),
            _ => (-s, -c),
        }
    }

    fn sin_cos_taylor(t: Self) -> (Self, Self) {
        let t2 = t.sqr();
        let thresh = EPS * 0.5 * t.hi.abs();

        let mut sin = t;
        let mut term = t;
        let mut i = 3.0;
        loop {
            term = -(term * t2).div_f64(i * (i - 1.0));
            sin += term;
            if term.hi.abs() <= thresh {
                break;
            }
            i += 2.0;
        }

        let mut cos = Self::ONE;
        let mut term = Self::ONE;
        let mut i = 2.0;
        loop {
            term = -(term * t2).div_f64(i * (i - 1.0));
            cos += term;
            if term.hi.abs() <= EPS * 0.5 {
                break;
            }
            i += 2.0;
        }
        (sin, cos)
    }

    pub fn sin(self) -> Self {
        self.sin_cos().0
    }

    pub fn cos(self) -> Self {
        self.sin_cos().1
    }

    pub fn tan(self) -> Self {
        let (s, c) = self.sin_cos();
        s / c
    }

    pub fn sinh(self) -> Self {
        if self.hi.abs() < 0.5 {
            // series avoids the cancellation in (e^x - e^-x)/2
            let x2 = self.sqr();
            let mut sum = self;
            let mut term = self;
            let mut i = 3.0;
            loop {
                term = (term * x2).div_f64(i * (i - 1.0));
                sum += term;
                if term.hi.abs() <= EPS * 0.5 * sum.hi.abs() {
                    break;
                }
                i += 2.0;
            }
            sum
        } else {
            let e = self.exp();
            (e - e.recip()).scale_pow2(0.5)
        }
    }

    pub fn cosh(self) -> Self {
        let e = self.exp();
        (e + e.recip()).scale_pow2(0.5)
    }

    pub fn powi(self, n: i32) -> Self {
        if n == 0 {
            return Self::ONE;
        }
        let mut base = self;
        let mut e = n.unsigned_abs();
        let mut acc = Self::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc *= base;
            }
            e >>= 1;
            if e > 0 {
                base = base.sqr();
            }
        }
        if n < 0 {
            acc.recip()
        } else {
            acc
        }
    }

    pub fn powf(self, p: f64) -> Self {
        if p.fract() == 0.0 && p.abs() < i32::MAX as f64 {
            return self.powi(p as i32);
        }
        if self.hi == 0.0 {
            return if p > 0.0 { Self::ZERO } else { Self::from(f64::INFINITY) };
        }
        (self.ln().mul_f64(p)).exp()
    }
}

impl From<f64> for DoubleDouble {
    fn from(hi: f64) -> Self {
        Self { hi, lo: 0.0 }
    }
}

impl From<i32> for DoubleDouble {
    fn from(v: i32) -> Self {
        Self::from(v as f64)
    }
}

impl Neg for DoubleDouble {
    type Output = Self;
    fn neg(self) -> Self {
        Self { hi: -self.hi, lo: -self.lo }
    }
}

impl Add for DoubleDouble {
    type Output = Self;
    fn add(self, b: Self) -> Self {
        let (s1, s2) = two_sum(self.hi, b.hi);
        let (t1, t2) = two_sum(self.lo, b.lo);
        let (s1, s2) = quick_two_sum(s1, s2 + t1);
        let (hi, lo) = quick_two_sum(s1, s2 + t2);
        Self { hi, lo }
    }
}

impl Sub for DoubleDouble {
    type Output = Self;
    fn sub(self, b: Self) -> Self {
        self + (-b)
    }
}

impl Mul for DoubleDouble {
    type Output = Self;
    fn mul(self, b: Self) -> Self {
        let (p1, mut p2) = two_prod(self.hi, b.hi);
        p2 += self.hi * b.lo + self.lo * b.hi;
        let (hi, lo) = quick_two_sum(p1, p2);
        Self { hi, lo }
    }
}

impl Div for DoubleDouble {
    type Output = Self;
    fn div(self, b: Self) -> Self {
        let q1 = self.hi / b.hi;
        let mut r = self - b.mul_f64(q1);
        let q2 = r.hi / b.hi;
        r -= b.mul_f64(q2);
        let q3 = r.hi / b.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        Self { hi, lo } + Self::from(q3)
    }
}

macro_rules! assign_ops {
    ($($tr:ident $method:ident $op:tt),*) => {
        $(impl $tr for DoubleDouble {
            fn $method(&mut self, rhs: Self) {
                *self = *self $op rhs;
            }
        })*
    };
}

assign_ops!(AddAssign add_assign +, SubAssign sub_assign -, MulAssign mul_assign *, DivAssign div_assign /);

impl PartialOrd for DoubleDouble {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match self.hi.partial_cmp(&other.hi)? {
            Ordering::Equal => self.lo.partial_cmp(&other.lo),
            ord => Some(ord),
        }
    }
}

impl fmt::Display for DoubleDouble {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.to_f64(), f)
    }
}
