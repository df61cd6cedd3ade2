// Timing sweep: dual-number d4 grows linearly with the dimension, the
// finite-difference contraction roughly with its fourth power.

use jetdiff::cli::{icwf_dual_d4, icwf_fmfd_d4, loglog_slope, median_time};
use jetdiff::fmfd::{FdScheme, DEFAULT_M_CAP};

pub fn run_example() -> jetdiff::Result<()> {
    let ms = [200usize, 400, 800, 1600];
    let mut times = Vec::new();
    println!("m,method,value,wall_time_s");
    for &m in &ms {
        let (v, t) = median_time(5, || icwf_dual_d4(m));
        println!("{m},dual,{v:.6},{t:e}");
        times.push(t.max(1e-12));
    }
    let x: Vec<f64> = ms.iter().map(|&m| m as f64).collect();
    println!("dual slope {:.2}", loglog_slope(&x, &times));

    // binary64 keeps this quick; the values are only indicative.
    let scheme = FdScheme::for_order(4, 4, 1e-3)?;
    for m in [4, 6] {
        let (v, t) = median_time(3, || icwf_fmfd_d4(m, &scheme, DEFAULT_M_CAP));
        println!("{m},fmfd,{:.6},{t:e}", v?);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> jetdiff::Result<()> {
    run_example()
}
