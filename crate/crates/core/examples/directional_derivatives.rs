// Directional derivatives up to fourth order by polarization of
// single-direction jets, plus mixed partials on basis vectors.

use jetdiff::mlform::{d1, d2, d3, d4, hessian_vector_product, partial};
use jetdiff::models::{eff, EFF_POINT};
use jetdiff::{Elementary, Jet4};

fn field(x: &[Jet4<f64>]) -> Jet4<f64> {
    (x[0] * x[1]).sin() + x[2].exp() * x[0] * x[0]
}

pub fn run_example() -> jetdiff::Result<()> {
    let q = [0.4, -1.2, 0.3];
    let (x, y, z, w) = ([1.0, 0.0, 2.0], [0.5, 1.0, -1.0], [0.0, 1.0, 1.0], [1.0, 1.0, 1.0]);
    println!("d1(x)          = {:.10}", d1(field, &q, &x)?);
    println!("d2(x, y)       = {:.10}", d2(field, &q, &x, &y)?);
    println!("d3(x, y, z)    = {:.10}", d3(field, &q, &x, &y, &z)?);
    println!("d4(x, y, z, w) = {:.10}", d4(field, &q, &x, &y, &z, &w)?);
    println!("H w            = {:?}", hessian_vector_product(field, &q, &w)?);

    // Mixed partials of the five-variable test function, 1-based indices.
    for idx in [&[1][..], &[3, 3], &[5, 4, 2], &[5, 3, 4, 1]] {
        println!("d/d{idx:?} eff = {:.10}", partial(eff, &EFF_POINT, idx)?);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> jetdiff::Result<()> {
    run_example()
}
