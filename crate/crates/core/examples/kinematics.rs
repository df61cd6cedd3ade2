// Velocity, acceleration, jerk and snap of a point whose position is a
// map of the joint coordinates: one evaluation on time jets, or the
// equivalent sum of directional derivatives.

use jetdiff::kinematics::{kinematics_directional, kinematics_timejet, kinematics_trajectory};
use jetdiff::models::nested_sine;
use jetdiff::reference::nested_sine_snapshot;
use jetdiff::{Elementary, Jet4};

pub fn run_example() -> jetdiff::Result<()> {
    let s = nested_sine_snapshot();
    let tj = kinematics_timejet(nested_sine, &s)?;
    let dir = kinematics_directional(nested_sine, &s)?;
    for (name, row) in ["v", "a", "jerk", "snap"].iter().zip(tj.rows()) {
        println!("{name:<5} {row:>10.4?}");
    }
    println!("routes differ by {:.1e} (relative)", tj.max_rel_diff(&dir));

    // An explicit trajectory q(t); time enters only through q.
    let traj = |t: Jet4<f64>| vec![t.scale(0.5).exp(), t.cos().scale(2.0) + Jet4::constant(3.0)];
    let r = kinematics_trajectory(nested_sine, traj, 0.25)?;
    println!("trajectory snap {:.4?}", r.snap);
    Ok(())
}

#[allow(dead_code)]
fn main() -> jetdiff::Result<()> {
    run_example()
}
