use std::ops::Mul;

use crate::error::{Error, Result};
use crate::scalar::Elementary;

const UNIT_TOL: f64 = 1e-12;

pub(crate) fn check_unit(u: [f64; 3]) -> Result<()> {
    let norm = (u[0] * u[0] + u[1] * u[1] + u[2] * u[2]).sqrt();
    if (norm - 1.0).abs() > UNIT_TOL {
        return Err(Error::NonUnitAxis { norm });
    }
    Ok(())
}

/// 4x4 homogeneous transform `[R S; 0 1]` over any [`Elementary`] field,
/// so the same product runs on plain numbers and on jets.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Htm<T> {
    m: [[T; 4]; 4],
}

impl<T: Elementary> Htm<T> {
    pub fn identity() -> Self {
        let mut m = [[T::zero(); 4]; 4];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = T::one();
        }
        Self { m }
    }

    pub fn get(&self, i: usize, j: usize) -> T {
        self.m[i][j]
    }

    /// First three entries of the fourth column.
    pub fn translation(&self) -> [T; 3] {
        [self.m[0][3], self.m[1][3], self.m[2][3]]
    }

    /// `R u` for a constant vector `u`.
    pub fn rotate(&self, u: [f64; 3]) -> [T; 3] {
        std::array::from_fn(|i| (0..3).fold(T::zero(), |acc, j| acc + self.m[i][j].scale(u[j])))
    }

    /// `R p + S` for a constant point `p`.
    pub fn apply(&self, p: [f64; 3]) -> [T; 3] {
        let r = self.rotate(p);
        std::array::from_fn(|i| r[i] + self.m[i][3])
    }
}

impl<T: Elementary> Mul for Htm<T> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        let mut m = [[T::zero(); 4]; 4];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, c) in row.iter_mut().enumerate() {
                *c = (0..4).fold(T::zero(), |acc, k| acc + self.m[i][k] * rhs.m[k][j]);
            }
        }
        Self { m }
    }
}

/// Rotation by `psi` about the unit axis `u` (Rodrigues), then translation
/// `s`.
pub fn htm<T: Elementary>(psi: T, u: [f64; 3], s: [T; 3]) -> Result<Htm<T>> {
    check_unit(u)?;
    Ok(htm_unchecked(psi, u, s))
}

pub(crate) fn htm_unchecked<T: Elementary>(psi: T, u: [f64; 3], s: [T; 3]) -> Htm<T> {
    let (c, sn) = (psi.cos(), psi.sin());
    let vc = T::one() - c;
    let mut m = [[T::zero(); 4]; 4];
    // R = c I + sn [u]x + (1 - c) u u^T
    let cross = [[0.0, -u[2], u[1]], [u[2], 0.0, -u[0]], [-u[1], u[0], 0.0]];
    for i in 0..3 {
        for j in 0..3 {
            let mut e = vc.scale(u[i] * u[j]) + sn.scale(cross[i][j]);
            if i == j {
                e += c;
            }
            m[i][j] = e;
        }
        m[i][3] = s[i];
    }
    m[3][3] = T::one();
    Htm { m }
}
