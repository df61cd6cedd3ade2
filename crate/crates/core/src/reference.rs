//! Reference values used by `--verify` and the acceptance suite.

use std::f64::consts::FRAC_PI_2;

use crate::kinematics::KinematicSnapshot;

/// `(m, dual d4, FMFD d4)` for the inverted cosine wave benchmark, FMFD with
/// approximation order 4 and `h = 1e-5` in extended precision.
pub const TABLE1: [(usize, f64, f64); 5] = [
    (5, 3581.531, 3581.554),
    (7, 3333.211, 3333.292),
    (10, 1511.750, 1511.809),
    (15, 3092.453, 3092.521),
    (20, 2098.912, 2099.013),
];

pub const TABLE1_DUAL_TOL: f64 = 1e-2;
pub const TABLE1_FMFD_TOL: f64 = 0.2;

/// Nested-sine map: `[v, a, jerk, snap]`, four decimals.
pub const TABLE2: [[f64; 3]; 4] =
    [[-2.0000, -1.4403, 0.0207], [-2.6736, 1.1388, -0.1441], [-4.0120, -2.7000, 1.0395], [-15.1909, 6.2371, -8.0518]];

/// RCR end effector: `[v, a, jerk, snap]`.
pub const TABLE3: [[f64; 3]; 4] = [[9.0, 1.0, 0.0], [-8.0, 22.0, -55.0], [-267.0, 15.0, 30.0], [189.0, -978.0, 891.0]];

/// Half a unit in the fourth decimal.
pub const KINEMATICS_TOL: f64 = 5e-5;

/// One row of the partial-derivative table of [`crate::models::eff`].
#[derive(Debug, Clone, Copy)]
pub struct PartialRow {
    pub label: &'static str,
    pub indices: &'static [usize],
    pub dual: f64,
    /// Order-8, `h = 1e-5` forward differences in extended precision.
    pub extended: f64,
    /// The same scheme in binary64; illustrates the cancellation failure.
    pub binary64: f64,
}

pub const TABLE4: [PartialRow; 4] = [
    PartialRow { label: "d/dx", indices: &[1], dual: -7.3040034203, extended: -7.3040034203, binary64: -7.3040034219 },
    PartialRow {
        label: "d2/dz dz",
        indices: &[3, 3],
        dual: 0.0247895122,
        extended: 0.0247895122,
        binary64: 0.0248116774,
    },
    PartialRow {
        label: "d3/du dw dy",
        indices: &[5, 4, 2],
        dual: -0.1312934721,
        extended: -0.1312934721,
        binary64: -2.4530159385,
    },
    PartialRow {
        label: "d4/du dz dw dx",
        indices: &[5, 3, 4, 1],
        dual: -0.0030955304,
        extended: -0.0030955304,
        binary64: 64117.282468,
    },
];

pub const TABLE4_DUAL_TOL: f64 = 1e-9;
pub const TABLE4_EXTENDED_TOL: f64 = 1e-8;
/// Minimum binary64 error on rows 3 and 4 for the failure to count as
/// reproduced.
pub const TABLE4_BINARY64_FAILURE: [f64; 2] = [1.0, 1e3];

pub fn nested_sine_snapshot() -> KinematicSnapshot {
    KinematicSnapshot {
        q: vec![1.1, 2.2],
        qd: vec![0.5, -2.7],
        qdd: vec![-0.1, 0.7],
        qddd: vec![0.3, 0.5],
        qdddd: vec![-0.2, 0.1],
    }
}

/// `q = [theta, phi, s, beta]` and rates of the RCR example.
pub fn rcr_snapshot() -> KinematicSnapshot {
    KinematicSnapshot {
        q: vec![FRAC_PI_2, 0.0, 2.0, 0.0],
        qd: vec![1.0, 5.0, 1.0, 1.0],
        qdd: vec![1.0, 0.0, 2.0, 1.0],
        qddd: vec![1.0, 2.0, 3.0, 4.0],
        qdddd: vec![4.0, 5.0, 6.0, 7.0],
    }
}
