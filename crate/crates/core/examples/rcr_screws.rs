// RCR manipulator end effector: dual-number kinematics checked against
// infinitesimal screw theory.

use jetdiff::kinematics::kinematics_timejet;
use jetdiff::reference::rcr_snapshot;
use jetdiff::screws::{lie_bracket, rcr_model, screw_kinematics, states};

pub fn run_example() -> jetdiff::Result<()> {
    let chain = rcr_model();
    let s = rcr_snapshot();
    let dual = kinematics_timejet(chain.field(), &s)?;
    let screw = screw_kinematics(&chain, &s)?;
    for ((name, d), sc) in ["v", "a", "jerk", "snap"].iter().zip(dual.rows()).zip(screw.rows()) {
        println!("{name:<5} dual {d:>8.3?}  screw {sc:>8.3?}");
    }
    println!("max abs diff {:.1e}", dual.max_abs_diff(&screw));

    let joints = chain.joints_at(&s.q)?;
    for (k, j) in joints.iter().enumerate() {
        println!("joint {}: {:?} axis {:?} through {:?}", k + 1, j.kind, j.axis.as_slice(), j.origin.as_slice());
    }
    let st = states(&joints, &s.rates())?;
    println!("angular velocity {:?}", st[0].angular.as_slice());
    let (r1, _) = joints[0].screws();
    let (r3, _) = joints[2].screws();
    println!("[S1, S3] = {:?}", lie_bracket(r1, r3));
    Ok(())
}

#[allow(dead_code)]
fn main() -> jetdiff::Result<()> {
    run_example()
}
