//! Reference field functions, written once against [`Elementary`] so they
//! run on plain scalars (finite differences) and on jets alike.

use crate::scalar::Elementary;

/// Inverted cosine wave, `f: R^m -> R`:
///
/// ```text
/// f(x) = -sum_{i=1}^{m-1} exp(-s_i / 8) cos(4 sqrt(s_i)),
/// s_i  = x_i^2 + x_{i+1}^2 + 0.5 x_i x_{i+1}
/// ```
pub fn icwf<T: Elementary>(x: &[T]) -> T {
    let mut acc = T::zero();
    for p in x.windows(2) {
        let s = p[0] * p[0] + p[1] * p[1] + (p[0] * p[1]).scale(0.5);
        acc -= s.scale(-0.125).exp() * s.sqrt().scale(4.0).cos();
    }
    acc
}

/// Five-variable test function `f(x, y, z, w, u)`:
///
/// ```text
/// cos(x y / u) z / w + 3 sin(x u) sin(y / u) ln(x y z / (u w))
/// ```
pub fn eff<T: Elementary>(v: &[T]) -> T {
    let (x, y, z, w, u) = (v[0], v[1], v[2], v[3], v[4]);
    (x * y / u).cos() * z / w + (x * u).sin().scale(3.0) * (y / u).sin() * (x * y * z / (u * w)).ln()
}

/// `R^2 -> R^3` map whose third component nests the sine 100 times; the
/// nesting is a loop, which is the point of the example.
pub fn nested_sine<T: Elementary>(q: &[T]) -> Vec<T> {
    let (q1, q2) = (q[0], q[1]);
    let mut s = q1 * q2;
    for _ in 0..100 {
        s = s.sin();
    }
    vec![(q1 * q2 * q2).ln(), q2.sqrt() / q1, s]
}

/// Direction vectors and point of the inverted-cosine-wave benchmark:
/// `x = [1..m]`, `y = sin x`, `z = cos x`, `w = sqrt x`, `q = ln x`.
pub struct IcwfSetup<T> {
    pub q: Vec<T>,
    pub x: Vec<T>,
    pub y: Vec<T>,
    pub z: Vec<T>,
    pub w: Vec<T>,
}

impl<T: Elementary> IcwfSetup<T> {
    pub fn new(m: usize) -> Self {
        let x: Vec<T> = (1..=m).map(|i| T::from_f64(i as f64)).collect();
        Self {
            q: x.iter().map(|&v| v.ln()).collect(),
            y: x.iter().map(|&v| v.sin()).collect(),
            z: x.iter().map(|&v| v.cos()).collect(),
            w: x.iter().map(|&v| v.sqrt()).collect(),
            x,
        }
    }
}

/// Evaluation point of the five-variable partial-derivative table.
pub const EFF_POINT: [f64; 5] = [1.1, 2.2, 3.3, 4.4, 5.5];
