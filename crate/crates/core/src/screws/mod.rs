//! Infinitesimal screw theory for serial chains: an independent oracle for
//! the dual-number kinematics.
//!
//! Joint screws are built at the current configuration from HTM partial
//! products. Kinematic states of the last body are rate-weighted sums of
//! joint screws plus nested Lie-bracket corrections, and the point
//! kinematics follow from the reduced states.

mod chain;
mod htm;

pub use chain::{rcr_closed_form_joints, rcr_model, Chain, Factor, Param, Slide, RCR_BC, RCR_CD};
pub use htm::{htm, Htm};

use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use nalgebra::Vector3;

use crate::error::{Error, Result};
use crate::kinematics::{KinematicResult, KinematicSnapshot};

pub type Vec3 = Vector3<f64>;

/// A screw: angular part `s` over moment part `s0`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Screw {
    pub s: Vec3,
    pub s0: Vec3,
}

impl Screw {
    pub fn new(s: Vec3, s0: Vec3) -> Self {
        Self { s, s0 }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn norm(&self) -> f64 {
        (self.s.norm_squared() + self.s0.norm_squared()).sqrt()
    }
}

impl Add for Screw {
    type Output = Screw;
    fn add(self, o: Screw) -> Screw {
        Screw::new(self.s + o.s, self.s0 + o.s0)
    }
}

impl AddAssign for Screw {
    fn add_assign(&mut self, o: Screw) {
        self.s += o.s;
        self.s0 += o.s0;
    }
}

impl Sub for Screw {
    type Output = Screw;
    fn sub(self, o: Screw) -> Screw {
        Screw::new(self.s - o.s, self.s0 - o.s0)
    }
}

impl Neg for Screw {
    type Output = Screw;
    fn neg(self) -> Screw {
        Screw::new(-self.s, -self.s0)
    }
}

impl Mul<Screw> for f64 {
    type Output = Screw;
    fn mul(self, o: Screw) -> Screw {
        Screw::new(self * o.s, self * o.s0)
    }
}

/// `[a, b] = [s1 x s2 ; s1 x s02 - s2 x s01]`.
pub fn lie_bracket(a: Screw, b: Screw) -> Screw {
    Screw::new(a.s.cross(&b.s), a.s.cross(&b.s0) - b.s.cross(&a.s0))
}

/// Reduced kinematic state of a body: angular quantity over the reduced
/// linear quantity (`omega`/`v*`, `alpha`/`a*`, `rho`/`j*`, `sigma`/`s*`).
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct KinematicState {
    pub angular: Vec3,
    pub linear: Vec3,
}

impl From<Screw> for KinematicState {
    fn from(s: Screw) -> Self {
        Self { angular: s.s, linear: s.s0 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JointKind {
    Revolute,
    Prismatic,
    Cylindrical,
}

/// A joint at the evaluated configuration: unit axis and a point on it in
/// the base frame, plus the coordinates driving its rotation and slide.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JointModel {
    pub kind: JointKind,
    pub axis: Vec3,
    pub origin: Vec3,
    pub angle_var: Option<usize>,
    pub slide_var: Option<usize>,
}

const UNIT_TOL: f64 = 1e-12;

impl JointModel {
    fn build(
        kind: JointKind,
        axis: Vec3,
        origin: Vec3,
        angle_var: Option<usize>,
        slide_var: Option<usize>,
    ) -> Result<Self> {
        let norm = axis.norm();
        if (norm - 1.0).abs() > UNIT_TOL {
            return Err(Error::NonUnitAxis { norm });
        }
        Ok(Self { kind, axis, origin, angle_var, slide_var })
    }

    pub fn revolute(axis: Vec3, origin: Vec3, var: usize) -> Result<Self> {
        Self::build(JointKind::Revolute, axis, origin, Some(var), None)
    }

    pub fn prismatic(axis: Vec3, origin: Vec3, var: usize) -> Result<Self> {
        Self::build(JointKind::Prismatic, axis, origin, None, Some(var))
    }

    pub fn cylindrical(axis: Vec3, origin: Vec3, angle_var: usize, slide_var: usize) -> Result<Self> {
        Self::build(JointKind::Cylindrical, axis, origin, Some(angle_var), Some(slide_var))
    }

    /// Revolute screw `[e; r x e]` and prismatic screw `[0; e]`.
    pub fn screws(&self) -> (Screw, Screw) {
        let e = self.axis;
        (Screw::new(e, self.origin.cross(&e)), Screw::new(Vec3::zeros(), e))
    }

    /// `x_R . $R + x_T . $T`: the joint's screw weighted by its entries of
    /// the rate vector `x`; the unused slot of a revolute or prismatic
    /// joint contributes nothing.
    pub fn rate_screw(&self, x: &[f64]) -> Screw {
        let (r, t) = self.screws();
        let mut out = Screw::zero();
        if let Some(a) = self.angle_var {
            out += x[a] * r;
        }
        if let Some(b) = self.slide_var {
            out += x[b] * t;
        }
        out
    }
}

/// Revolute and prismatic screws of a joint.
pub fn joint_screws(j: &JointModel) -> (Screw, Screw) {
    j.screws()
}

fn joint(joints: &[JointModel], a: usize) -> Result<&JointModel> {
    if a == 0 || a > joints.len() {
        return Err(Error::IndexOutOfRange { index: a, dim: joints.len() });
    }
    Ok(&joints[a - 1])
}

/// `[x_a . $_a, y_b . $_b]`, joint indices 1-based.
pub fn l02(joints: &[JointModel], x: &[f64], y: &[f64], a: usize, b: usize) -> Result<Screw> {
    Ok(lie_bracket(joint(joints, a)?.rate_screw(x), joint(joints, b)?.rate_screw(y)))
}

/// `[x_a . $_a, L02(y, z, b, c)]`.
pub fn l03(joints: &[JointModel], x: &[f64], y: &[f64], z: &[f64], a: usize, b: usize, c: usize) -> Result<Screw> {
    Ok(lie_bracket(joint(joints, a)?.rate_screw(x), l02(joints, y, z, b, c)?))
}

/// `[x_a . $_a, L03(y, z, w, b, c, d)]`.
#[allow(clippy::too_many_arguments)]
pub fn l04(
    joints: &[JointModel],
    x: &[f64],
    y: &[f64],
    z: &[f64],
    w: &[f64],
    a: usize,
    b: usize,
    c: usize,
    d: usize,
) -> Result<Screw> {
    Ok(lie_bracket(joint(joints, a)?.rate_screw(x), l03(joints, y, z, w, b, c, d)?))
}

fn check_rates(joints: &[JointModel], rates: &[&[f64]], required: usize) -> Result<()> {
    if rates.len() < required {
        return Err(Error::InsufficientRateOrder { required, given: rates.len() });
    }
    let needed = joints.iter().flat_map(|j| j.angle_var.into_iter().chain(j.slide_var)).max().map_or(0, |v| v + 1);
    for r in &rates[..required] {
        if r.len() < needed {
            return Err(Error::DimensionMismatch { expected: needed, found: r.len() });
        }
    }
    Ok(())
}

fn weighted_sum(joints: &[JointModel], x: &[f64]) -> Screw {
    joints.iter().fold(Screw::zero(), |acc, j| acc + j.rate_screw(x))
}

/// `sum_k q'_k . $_k`. `rates[0]` is the first time derivative.
pub fn velocity_state(joints: &[JointModel], rates: &[&[f64]]) -> Result<KinematicState> {
    check_rates(joints, rates, 1)?;
    Ok(weighted_sum(joints, rates[0]).into())
}

/// Lie screw `sum_{i<k} L02(q', q', i, k)`.
pub fn lie_screw(joints: &[JointModel], qd: &[f64]) -> Result<Screw> {
    let n = joints.len();
    let mut acc = Screw::zero();
    for i in 1..n {
        for k in i + 1..=n {
            acc += l02(joints, qd, qd, i, k)?;
        }
    }
    Ok(acc)
}

pub fn acceleration_state(joints: &[JointModel], rates: &[&[f64]]) -> Result<KinematicState> {
    check_rates(joints, rates, 2)?;
    Ok((weighted_sum(joints, rates[1]) + lie_screw(joints, rates[0])?).into())
}

/// Jerk screw.
pub fn jerk_screw(joints: &[JointModel], qd: &[f64], qdd: &[f64]) -> Result<Screw> {
    let n = joints.len();
    let mut acc = Screw::zero();
    for i in 1..n {
        for k in i + 1..=n {
            acc += 2.0 * l02(joints, qd, qdd, i, k)?;
            acc += l02(joints, qdd, qd, i, k)?;
            acc += l03(joints, qd, qd, qd, i, i, k)?;
        }
    }
    for l in 1..n.saturating_sub(1) {
        for i in l + 1..n {
            for k in i + 1..=n {
                acc += 2.0 * l03(joints, qd, qd, qd, l, i, k)?;
            }
        }
    }
    Ok(acc)
}

pub fn jerk_state(joints: &[JointModel], rates: &[&[f64]]) -> Result<KinematicState> {
    check_rates(joints, rates, 3)?;
    Ok((weighted_sum(joints, rates[2]) + jerk_screw(joints, rates[0], rates[1])?).into())
}

/// Snap screw, `SIK + SLIK + SHLIK`.
pub fn snap_screw(joints: &[JointModel], qd: &[f64], qdd: &[f64], qddd: &[f64]) -> Result<Screw> {
    let n = joints.len();
    let j = joints;
    let mut sik = Screw::zero();
    for i in 1..n {
        for k in i + 1..=n {
            sik += 3.0 * l02(j, qd, qddd, i, k)?;
            sik += 3.0 * l02(j, qdd, qdd, i, k)?;
            sik += l02(j, qddd, qd, i, k)?;
            sik += 3.0 * l03(j, qd, qd, qdd, i, i, k)?;
            sik += 2.0 * l03(j, qdd, qd, qd, i, i, k)?;
            sik += l03(j, qd, qdd, qd, i, i, k)?;
            sik += l04(j, qd, qd, qd, qd, i, i, i, k)?;
        }
    }
    let mut slik = Screw::zero();
    for l in 1..n.saturating_sub(1) {
        for i in l + 1..n {
            for k in i + 1..=n {
                slik += 6.0 * l03(j, qd, qd, qdd, l, i, k)?;
                slik += 3.0 * l03(j, qd, qdd, qd, l, i, k)?;
                slik += 3.0 * l03(j, qdd, qd, qd, l, i, k)?;
                slik += 3.0 * l04(j, qd, qd, qd, qd, l, l, i, k)?;
                slik += 3.0 * l04(j, qd, qd, qd, qd, l, i, i, k)?;
            }
        }
    }
    // Four distinct joints: the six bracket orderings of h<l<i<k collapse to
    // 6 L04(h, l, i, k); checked against the time-jet route on 4-6 joints.
    let mut shlik = Screw::zero();
    for h in 1..n.saturating_sub(2) {
        for l in h + 1..n - 1 {
            for i in l + 1..n {
                for k in i + 1..=n {
                    shlik += 6.0 * l04(j, qd, qd, qd, qd, h, l, i, k)?;
                }
            }
        }
    }
    Ok(sik + slik + shlik)
}

pub fn snap_state(joints: &[JointModel], rates: &[&[f64]]) -> Result<KinematicState> {
    check_rates(joints, rates, 4)?;
    Ok((weighted_sum(joints, rates[3]) + snap_screw(joints, rates[0], rates[1], rates[2])?).into())
}

/// Velocity, acceleration, jerk and snap of a point at `r` (base frame) on
/// the last body, from its four reduced states.
pub fn point_kinematics(states: &[KinematicState; 4], r: Vec3) -> KinematicResult {
    let [vs, as_, js, ss] = states;
    let (w, al, rho, sig) = (vs.angular, as_.angular, js.angular, ss.angular);
    let v = vs.linear + w.cross(&r);
    let a = as_.linear + al.cross(&r) + w.cross(&v);
    let jerk = js.linear + rho.cross(&r) + 2.0 * al.cross(&v) + w.cross(&a);
    let snap = ss.linear + sig.cross(&r) + 3.0 * rho.cross(&v) + 3.0 * al.cross(&a) + w.cross(&jerk);
    let to_vec = |x: Vec3| x.iter().copied().collect();
    KinematicResult { v: to_vec(v), a: to_vec(a), jerk: to_vec(jerk), snap: to_vec(snap) }
}

/// All four states of the last body.
pub fn states(joints: &[JointModel], rates: &[&[f64]]) -> Result<[KinematicState; 4]> {
    Ok([
        velocity_state(joints, rates)?,
        acceleration_state(joints, rates)?,
        jerk_state(joints, rates)?,
        snap_state(joints, rates)?,
    ])
}

/// Point kinematics of a chain's point of interest by screw theory.
pub fn screw_kinematics(chain: &Chain, s: &KinematicSnapshot) -> Result<KinematicResult> {
    s.validate()?;
    let joints = chain.joints_at(&s.q)?;
    let r = Vec3::from_iterator(chain.position(&s.q)?);
    Ok(point_kinematics(&states(&joints, &s.rates())?, r))
}
