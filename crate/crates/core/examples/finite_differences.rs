// Forward finite differences of arbitrary order, in binary64 and in
// double-double, against the dual-number value.

use jetdiff::fmfd::{evaluations_per_partial, partial_fd, setvn, FdScheme, Precision};
use jetdiff::mlform::partial;
use jetdiff::models::{eff, EFF_POINT};
use jetdiff::DoubleDouble;

pub fn run_example() -> jetdiff::Result<()> {
    let idx = [5, 3, 4, 1];
    let orders = setvn(idx.len(), 8)?;
    println!("orders {orders:?}: {} evaluations per partial", evaluations_per_partial(&orders));

    let dual = partial(eff, &EFF_POINT, &idx)?;
    let scheme = FdScheme::new(1e-5, orders)?;
    let f64_value = partial_fd(eff, &EFF_POINT, &idx, &scheme)?;
    let dd: Vec<DoubleDouble> = EFF_POINT.iter().map(|&v| v.into()).collect();
    let extended = partial_fd(eff, &dd, &idx, &scheme.clone().with_precision(Precision::Extended))?;

    println!("dual          {dual:.10}");
    println!("FD extended   {:.10}", extended.to_f64());
    println!("FD binary64   {f64_value:.10}  (cancellation at h = 1e-5)");

    // A larger step rescues binary64 at the cost of truncation error.
    let coarse = partial_fd(eff, &EFF_POINT, &idx, &FdScheme::new(2e-2, setvn(4, 8)?)?)?;
    println!("FD binary64, h = 2e-2: {coarse:.10}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> jetdiff::Result<()> {
    run_example()
}
