// Jet arithmetic: every part of `f(variable(x))` is a raw derivative of `f`.

use jetdiff::{Complex64, DoubleDouble, Elementary, Jet4};

pub fn run_example() -> jetdiff::Result<()> {
    let x = Jet4::variable(0.7_f64);
    let y = (x * x).sin() / x.exp() + x.powi(5);
    println!("f(x) = sin(x^2) e^-x + x^5 at 0.7");
    for (k, d) in y.coeffs().iter().enumerate() {
        println!("  f^({k}) = {d:.12}");
    }

    // A jet with zero real part has no inverse.
    let pure = Jet4::new([0.0, 1.0, 0.0, 0.0, 0.0]);
    match Jet4::one().try_div(&pure) {
        Err(e) => println!("1 / eps: {e}"),
        Ok(v) => println!("1 / eps: {v:?}"),
    }

    // Same code, other coefficient fields.
    let c = Jet4::variable(Complex64::new(0.7, 0.0)).ln();
    println!("ln on complex jets: f''' = {}", c[3]);
    let d = Jet4::variable(DoubleDouble::from(0.7)).ln();
    println!("ln on double-double jets: f''' = {}", d[3]);

    // Parts follow the real-part ordering convention only.
    let a = Jet4::seeded(1.0, 5.0);
    let b = Jet4::seeded(2.0, -5.0);
    println!("compare by real part: {:?}", a.cmp_value(&b));
    Ok(())
}

#[allow(dead_code)]
fn main() -> jetdiff::Result<()> {
    run_example()
}
