// A four-joint arm loaded from JSON, with a snapshot read the same way.

use jetdiff::kinematics::{kinematics_timejet, KinematicSnapshot};
use jetdiff::screws::{screw_kinematics, Chain};

const ARM: &str = r#"{
  "factors": [
    {"angle": {"var": 0}, "axis": [0, 0, 1]},
    {"angle": {"var": 1}, "axis": [0, 1, 0], "translation": [0, 0, 0.4]},
    {"angle": 0.2, "axis": [1, 0, 0], "translation": [0.5, 0, 0],
     "slide": {"var": 2, "direction": [1, 0, 0]}},
    {"angle": {"var": 3}, "axis": [0, 0.6, 0.8], "translation": [0.3, 0.1, 0]}
  ],
  "point": [0.1, 0, 0.05]
}"#;

const SNAPSHOT: &str = r#"{
  "q": [0.3, -0.5, 0.2, 1.1],
  "qd": [1.0, 0.5, -0.3, 2.0],
  "qdd": [0.0, -1.0, 0.4, 0.5],
  "qddd": [0.2, 0.2, 0.0, -1.0],
  "qdddd": [1.0, 0.0, 0.3, 0.1]
}"#;

pub fn run_example() -> jetdiff::Result<()> {
    let chain = Chain::from_json(ARM)?;
    let s: KinematicSnapshot = serde_json::from_str(SNAPSHOT).map_err(|e| jetdiff::Error::Parse(e.to_string()))?;
    s.validate()?;
    println!("{} joints, {} coordinates", chain.joint_count(), chain.dof());
    println!("point at {:.4?}", chain.position(&s.q)?);
    let dual = kinematics_timejet(chain.field(), &s)?;
    let screw = screw_kinematics(&chain, &s)?;
    println!("snap {:.4?}", dual.snap);
    println!("dual vs screw: {:.1e}", dual.max_abs_diff(&screw));
    Ok(())
}

#[allow(dead_code)]
fn main() -> jetdiff::Result<()> {
    run_example()
}
