//! Serial chains as products of HTM factors, some of whose angles and
//! slide lengths are generalized coordinates.

use nalgebra::Vector3;
use serde::{Deserialize, Serialize};

use super::htm::{check_unit, htm_unchecked, Htm};
use super::JointModel;
use crate::error::{Error, Result};
use crate::jet::Jet4;
use crate::scalar::Elementary;

/// A factor parameter: fixed, or coordinate `q[var]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Param {
    Var { var: usize },
    Fixed(f64),
}

impl Default for Param {
    fn default() -> Self {
        Param::Fixed(0.0)
    }
}

impl Param {
    fn var(self) -> Option<usize> {
        match self {
            Param::Var { var } => Some(var),
            Param::Fixed(_) => None,
        }
    }

    fn value<T: Elementary>(self, q: &[T]) -> T {
        match self {
            Param::Var { var } => q[var],
            Param::Fixed(v) => T::from_f64(v),
        }
    }
}

/// Variable translation `q[var] * direction` added to the factor offset.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Slide {
    pub var: usize,
    pub direction: [f64; 3],
}

/// `HTM(angle, axis, translation + slide)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Factor {
    #[serde(default)]
    pub angle: Param,
    pub axis: [f64; 3],
    #[serde(default)]
    pub translation: [f64; 3],
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub slide: Option<Slide>,
}

impl Factor {
    fn is_joint(&self) -> bool {
        self.angle.var().is_some() || self.slide.is_some()
    }

    fn htm<T: Elementary>(&self, q: &[T]) -> Htm<T> {
        let mut s: [T; 3] = self.translation.map(T::from_f64);
        if let Some(sl) = self.slide {
            for (si, &d) in s.iter_mut().zip(&sl.direction) {
                *si += q[sl.var].scale(d);
            }
        }
        htm_unchecked(self.angle.value(q), self.axis, s)
    }
}

/// A serial chain and the point of interest on its last body.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Chain {
    pub factors: Vec<Factor>,
    /// Point in the frame of the last factor.
    #[serde(default)]
    pub point: [f64; 3],
}

const PARALLEL_TOL: f64 = 1e-12;

impl Chain {
    /// Validates axes, coordinate numbering and cylindrical joints.
    pub fn new(factors: Vec<Factor>, point: [f64; 3]) -> Result<Self> {
        let c = Self { factors, point };
        c.validate()?;
        Ok(c)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let c: Self = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        c.validate()?;
        Ok(c)
    }

    pub fn validate(&self) -> Result<()> {
        if self.factors.is_empty() {
            return Err(Error::InvalidChain("no factors".into()));
        }
        let mut used = Vec::new();
        for f in &self.factors {
            check_unit(f.axis)?;
            used.extend(f.angle.var());
            if let Some(sl) = f.slide {
                check_unit(sl.direction)?;
                used.push(sl.var);
                if f.angle.var().is_some() {
                    let c = Vector3::from(f.axis).cross(&Vector3::from(sl.direction));
                    if c.norm() > PARALLEL_TOL {
                        return Err(Error::InvalidChain("cylindrical joint needs a slide parallel to its axis".into()));
                    }
                }
            }
        }
        let mut sorted = used.clone();
        sorted.sort_unstable();
        if sorted.iter().enumerate().any(|(i, &v)| i != v) {
            return Err(Error::InvalidChain(format!("coordinates must be numbered 0..n once each, got {used:?}")));
        }
        Ok(())
    }

    /// Number of generalized coordinates.
    pub fn dof(&self) -> usize {
        self.factors.iter().map(|f| f.angle.var().is_some() as usize + f.slide.is_some() as usize).sum()
    }

    /// Number of joints (factors carrying a coordinate).
    pub fn joint_count(&self) -> usize {
        self.factors.iter().filter(|f| f.is_joint()).count()
    }

    fn check_dim(&self, m: usize) -> Result<()> {
        if m != self.dof() {
            return Err(Error::DimensionMismatch { expected: self.dof(), found: m });
        }
        Ok(())
    }

    /// Product of all factors at `q`.
    pub fn transform<T: Elementary>(&self, q: &[T]) -> Result<Htm<T>> {
        self.check_dim(q.len())?;
        Ok(self.factors.iter().fold(Htm::identity(), |p, f| p * f.htm(q)))
    }

    /// Partial products `T1`, `T1 T2`, ... at `q`.
    pub fn partial_products(&self, q: &[f64]) -> Result<Vec<Htm<f64>>> {
        self.check_dim(q.len())?;
        let mut acc = Htm::identity();
        Ok(self
            .factors
            .iter()
            .map(|f| {
                acc = acc * f.htm(q);
                acc
            })
            .collect())
    }

    /// Position of the point of interest in the base frame.
    pub fn position<T: Elementary>(&self, q: &[T]) -> Result<Vec<T>> {
        Ok(self.transform(q)?.apply(self.point).to_vec())
    }

    /// The position map as a jet field. Panics on a wrong dimension; check
    /// [`Chain::dof`] first.
    pub fn field(&self) -> impl Fn(&[Jet4<f64>]) -> Vec<Jet4<f64>> + '_ {
        move |q| self.position(q).expect("coordinate vector matches chain dof")
    }

    /// Joint axes and origins in the base frame at configuration `q`.
    ///
    /// A rotation factor turns about its axis expressed in the preceding
    /// frame, through the origin of its own frame; a slide moves along its
    /// direction expressed in the preceding frame.
    pub fn joints_at(&self, q: &[f64]) -> Result<Vec<JointModel>> {
        let products = self.partial_products(q)?;
        let mut prev = Htm::identity();
        let mut joints = Vec::new();
        for (f, p) in self.factors.iter().zip(&products) {
            if f.is_joint() {
                let origin = Vector3::from(p.translation());
                let j = match (f.angle.var(), f.slide) {
                    (Some(a), None) => JointModel::revolute(Vector3::from(prev.rotate(f.axis)), origin, a)?,
                    (None, Some(sl)) => {
                        JointModel::prismatic(Vector3::from(prev.rotate(sl.direction)), origin, sl.var)?
                    }
                    (Some(a), Some(sl)) => {
                        JointModel::cylindrical(Vector3::from(prev.rotate(f.axis)), origin, a, sl.var)?
                    }
                    (None, None) => unreachable!(),
                };
                joints.push(j);
            }
            prev = *p;
        }
        Ok(joints)
    }
}

/// Link lengths of the RCR manipulator.
pub const RCR_BC: f64 = 3.0;
pub const RCR_CD: f64 = 2.0;

/// The RCR manipulator, `q = [theta, phi, s, beta]`: revolute about `z`,
/// cylindrical along `x`, revolute about `z`, then fixed links `BC` along
/// `z` and `CD` along `x` to the end effector.
pub fn rcr_model() -> Chain {
    let z = [0.0, 0.0, 1.0];
    let x = [1.0, 0.0, 0.0];
    Chain::new(
        vec![
            Factor { angle: Param::Var { var: 0 }, axis: z, translation: [0.0; 3], slide: None },
            Factor {
                angle: Param::Var { var: 1 },
                axis: x,
                translation: [0.0; 3],
                slide: Some(Slide { var: 2, direction: x }),
            },
            Factor { angle: Param::Var { var: 3 }, axis: z, translation: [0.0; 3], slide: None },
            Factor { angle: Param::Fixed(0.0), axis: z, translation: [0.0, 0.0, RCR_BC], slide: None },
            Factor { angle: Param::Fixed(0.0), axis: x, translation: [RCR_CD, 0.0, 0.0], slide: None },
        ],
        [0.0; 3],
    )
    .expect("RCR chain is valid")
}

/// RCR joints from the closed-form frame formulas: `e1 = z`,
/// `e2 = r2 / |r2|`, `e3 = (r3 - r2) / |r3 - r2|`, with `r2` the origin of
/// `T1 T2` and `r3` the origin of `T1 T2 T3 T4`. Requires `s > 0`.
pub fn rcr_closed_form_joints(q: &[f64]) -> Result<Vec<JointModel>> {
    let p = rcr_model().partial_products(q)?;
    let r2 = Vector3::from(p[1].translation());
    let r3 = Vector3::from(p[3].translation());
    Ok(vec![
        JointModel::revolute(Vector3::z(), Vector3::zeros(), 0)?,
        JointModel::cylindrical(r2.normalize(), r2, 1, 2)?,
        JointModel::revolute((r3 - r2).normalize(), r3, 3)?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    const Q: [f64; 4] = [FRAC_PI_2, 0.0, 2.0, 0.0];

    #[test]
    fn rcr_frames_at_reference_configuration() {
        let p = rcr_model().partial_products(&Q).unwrap();
        let r2 = p[1].translation();
        assert!(r2[0].abs() < 1e-15 && (r2[1] - 2.0).abs() < 1e-15 && r2[2] == 0.0);
        let d = rcr_model().position(&Q).unwrap();
        let expect = [0.0, 4.0, 3.0];
        for (a, b) in d.iter().zip(expect) {
            assert!((a - b).abs() < 1e-15);
        }
        assert_eq!(d, p[4].translation().to_vec());
    }

    #[test]
    fn chain_axes_match_closed_form() {
        let chain = rcr_model();
        for q in [Q, [0.3, -1.1, 0.7, 2.0], [2.5, 0.4, 2.9, -0.6]] {
            let a = chain.joints_at(&q).unwrap();
            let b = rcr_closed_form_joints(&q).unwrap();
            for (ja, jb) in a.iter().zip(&b) {
                assert_eq!(ja.kind, jb.kind);
                let (ra, ta) = ja.screws();
                let (rb, tb) = jb.screws();
                assert!((ra - rb).norm() < 1e-12 && (ta - tb).norm() < 1e-12, "{q:?}");
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let c = rcr_model();
        let text = serde_json::to_string(&c).unwrap();
        assert_eq!(Chain::from_json(&text).unwrap(), c);
        let short = r#"{"factors":[{"angle":{"var":0},"axis":[0,0,1]},{"axis":[1,0,0],"translation":[1,0,0]}]}"#;
        let c = Chain::from_json(short).unwrap();
        assert_eq!((c.dof(), c.joint_count()), (1, 1));
    }

    #[test]
    fn invalid_chains_are_rejected() {
        let skew = r#"{"factors":[{"angle":{"var":0},"axis":[0,0,1],"slide":{"var":1,"direction":[1,0,0]}}]}"#;
        assert!(matches!(Chain::from_json(skew), Err(Error::InvalidChain(_))));
        let gap = r#"{"factors":[{"angle":{"var":1},"axis":[0,0,1]}]}"#;
        assert!(matches!(Chain::from_json(gap), Err(Error::InvalidChain(_))));
        let bad_axis = r#"{"factors":[{"angle":{"var":0},"axis":[0,0,2]}]}"#;
        assert!(matches!(Chain::from_json(bad_axis), Err(Error::NonUnitAxis { .. })));
        assert!(matches!(Chain::from_json("{"), Err(Error::Parse(_))));
        assert!(matches!(rcr_model().position(&[0.0; 3]), Err(Error::DimensionMismatch { expected: 4, found: 3 })));
    }
}
