//! Velocity, acceleration, jerk and snap of a point whose position is a
//! vector field `r = F(q)` over generalized coordinates `q(t)`.
//!
//! Two dual-number routes are provided. The time-jet route (the default)
//! evaluates `F` once, on the jet whose `e_k` parts are the `k`-th time
//! derivatives of `q`. The directional route expands the chain rule into
//! directional derivatives of `F` along the coordinate rates:
//!
//! ```text
//! v    = d1(q')
//! a    = d2(q',q') + d1(q'')
//! jerk = d3(q',q',q') + 3 d2(q',q'') + d1(q''')
//! snap = d4(q',q',q',q') + 6 d3(q',q',q'') + 4 d2(q',q''') + 3 d2(q'',q'') + d1(q'''')
//! ```
//!
//! Time-dependent fields take time as an explicit last coordinate with
//! rates `[1, 0, 0, 0]`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::jet::Jet4;
use crate::mlform::{vd2, vd3, veval_jet, Codomain};

/// A configuration and its first four time derivatives.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KinematicSnapshot {
    pub q: Vec<f64>,
    pub qd: Vec<f64>,
    pub qdd: Vec<f64>,
    pub qddd: Vec<f64>,
    pub qdddd: Vec<f64>,
}

impl KinematicSnapshot {
    pub fn new(q: Vec<f64>, qd: Vec<f64>, qdd: Vec<f64>, qddd: Vec<f64>, qdddd: Vec<f64>) -> Result<Self> {
        let s = Self { q, qd, qdd, qddd, qdddd };
        s.validate()?;
        Ok(s)
    }

    /// At rest: all rates zero.
    pub fn at_rest(q: Vec<f64>) -> Self {
        let z = vec![0.0; q.len()];
        Self { q, qd: z.clone(), qdd: z.clone(), qddd: z.clone(), qdddd: z }
    }

    pub fn dim(&self) -> usize {
        self.q.len()
    }

    /// Rates by order: `rates()[0]` is `qd`, `rates()[3]` is `qdddd`.
    pub fn rates(&self) -> [&[f64]; 4] {
        [&self.qd, &self.qdd, &self.qddd, &self.qdddd]
    }

    pub fn validate(&self) -> Result<()> {
        let m = self.q.len();
        if m == 0 {
            return Err(Error::DimensionMismatch { expected: 1, found: 0 });
        }
        for r in self.rates() {
            if r.len() != m {
                return Err(Error::DimensionMismatch { expected: m, found: r.len() });
            }
        }
        let all = self.q.iter().chain(self.rates().into_iter().flatten());
        if let Some(&bad) = all.into_iter().find(|v| !v.is_finite()) {
            return Err(Error::Parse(format!("non-finite snapshot entry {bad}")));
        }
        Ok(())
    }

    /// The coordinate trajectory as a jet vector, `g(t0 + e1)`.
    pub fn time_jets(&self) -> Vec<Jet4<f64>> {
        (0..self.dim()).map(|i| Jet4::new([self.q[i], self.qd[i], self.qdd[i], self.qddd[i], self.qdddd[i]])).collect()
    }
}

/// Velocity, acceleration, jerk and snap of the point.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KinematicResult {
    pub v: Vec<f64>,
    pub a: Vec<f64>,
    pub jerk: Vec<f64>,
    pub snap: Vec<f64>,
}

impl KinematicResult {
    /// Quantities in order `[v, a, jerk, snap]`.
    pub fn rows(&self) -> [&[f64]; 4] {
        [&self.v, &self.a, &self.jerk, &self.snap]
    }

    /// Largest absolute componentwise difference.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.rows()
            .iter()
            .zip(other.rows())
            .flat_map(|(a, b)| a.iter().zip(b).map(|(x, y)| (x - y).abs()))
            .fold(0.0, f64::max)
    }

    /// Largest componentwise difference relative to `max(|x|, 1)`.
    pub fn max_rel_diff(&self, other: &Self) -> f64 {
        self.rows()
            .iter()
            .zip(other.rows())
            .flat_map(|(a, b)| a.iter().zip(b).map(|(x, y)| (x - y).abs() / x.abs().max(1.0)))
            .fold(0.0, f64::max)
    }

    fn from_jets(r: &[Jet4<f64>]) -> Self {
        let col = |k: usize| r.iter().map(|j| j[k]).collect();
        Self { v: col(1), a: col(2), jerk: col(3), snap: col(4) }
    }
}

fn axpy(acc: &mut [f64], s: f64, x: &[f64]) {
    for (a, b) in acc.iter_mut().zip(x) {
        *a += s * b;
    }
}

/// Kinematics via directional derivatives of `F` at `q`.
pub fn kinematics_directional<F>(f: F, s: &KinematicSnapshot) -> Result<KinematicResult>
where
    F: Fn(&[Jet4<f64>]) -> Vec<Jet4<f64>>,
{
    s.validate()?;
    let (q, qd, qdd, qddd, qdddd) = (&s.q[..], &s.qd[..], &s.qdd[..], &s.qddd[..], &s.qdddd[..]);
    // Repeated-argument forms are single jet evaluations.
    let along_qd = veval_jet(&f, q, qd)?;
    let d1 = |x: &[f64]| veval_jet(&f, q, x).map(|j| j.part(1).0);

    let v = along_qd.part(1).0;

    let mut a = along_qd.part(2).0;
    axpy(&mut a, 1.0, &d1(qdd)?);

    let mut jerk = along_qd.part(3).0;
    axpy(&mut jerk, 3.0, &vd2(&f, q, qd, qdd)?);
    axpy(&mut jerk, 1.0, &d1(qddd)?);

    let mut snap = along_qd.part(4).0;
    axpy(&mut snap, 6.0, &vd3(&f, q, qd, qd, qdd)?);
    axpy(&mut snap, 4.0, &vd2(&f, q, qd, qddd)?);
    axpy(&mut snap, 3.0, &veval_jet(&f, q, qdd)?.part(2).0);
    axpy(&mut snap, 1.0, &d1(qdddd)?);

    Ok(KinematicResult { v, a, jerk, snap })
}

/// Kinematics from one evaluation of `F` on the time jet of `q`.
pub fn kinematics_timejet<F>(f: F, s: &KinematicSnapshot) -> Result<KinematicResult>
where
    F: Fn(&[Jet4<f64>]) -> Vec<Jet4<f64>>,
{
    s.validate()?;
    Ok(KinematicResult::from_jets(&f(&s.time_jets())))
}

/// Kinematics of `F(g(t))` at `t0` for an explicit trajectory `g`.
pub fn kinematics_trajectory<F, G>(f: F, g: G, t0: f64) -> Result<KinematicResult>
where
    F: Fn(&[Jet4<f64>]) -> Vec<Jet4<f64>>,
    G: Fn(Jet4<f64>) -> Vec<Jet4<f64>>,
{
    let q = g(Jet4::variable(t0));
    if q.is_empty() {
        return Err(Error::DimensionMismatch { expected: 1, found: 0 });
    }
    Ok(KinematicResult::from_jets(&f(&q)))
}
