//! Checks shared by the property tests and the acceptance suite. Each takes
//! its random inputs explicitly, so proptest and a seeded sweep can drive
//! the same code.

#![allow(dead_code)]

use jetdiff::fmfd::{deriv, partial_fd, setvn, FdScheme};
use jetdiff::kinematics::{kinematics_directional, kinematics_timejet, KinematicSnapshot};
use jetdiff::mlform::{d2, d2_single, d3, d3_single, d4, d4_single, vd2, vd3, vd4};
use jetdiff::screws::{lie_bracket, rcr_model, screw_kinematics, Chain, Factor, Param, Screw, Slide, Vec3};
use jetdiff::{Complex64, DoubleDouble, Elementary, Jet4};

pub type J = Jet4<f64>;
pub type Check = Result<(), String>;

pub fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// `|a - b| <= tol * max(|a|, |b|, floor)`.
pub fn rel_close(a: f64, b: f64, tol: f64, floor: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(floor)
}

fn abs_jet(u: &J) -> J {
    J::new(u.coeffs().map(f64::abs))
}

/// Coefficientwise `|a - b| <= tol * scale`, where `scale` is the same
/// expression evaluated on absolute values (bounds every rounding error).
fn close_scaled(a: J, b: J, scale: J, tol: f64, what: &str) -> Check {
    for k in 0..5 {
        let bound = tol * scale[k] + f64::MIN_POSITIVE;
        ensure((a[k] - b[k]).abs() <= bound, || format!("{what}: part {k}: {} vs {}", a[k], b[k]))?;
    }
    Ok(())
}

// --- jets -----------------------------------------------------------------

pub fn ring_axioms(u: [f64; 5], v: [f64; 5], w: [f64; 5]) -> Check {
    let (u, v, w) = (J::new(u), J::new(v), J::new(w));
    let (au, av, aw) = (abs_jet(&u), abs_jet(&v), abs_jet(&w));
    let tol = 1e-13;
    close_scaled(u + v, v + u, au + av, tol, "add commutes")?;
    close_scaled((u + v) + w, u + (v + w), au + av + aw, tol, "add associates")?;
    close_scaled(u * v, v * u, au * av, tol, "mul commutes")?;
    close_scaled((u * v) * w, u * (v * w), au * av * aw, tol, "mul associates")?;
    close_scaled(u * (v + w), u * v + u * w, au * (av + aw), tol, "distributes")?;
    close_scaled(u + (-u), J::zero(), au, 0.0, "additive inverse")?;
    close_scaled(u * J::one(), u, au, 0.0, "unit")
}

pub fn leibniz(u: [f64; 5], v: [f64; 5]) -> Check {
    let p = J::new(u) * J::new(v);
    let choose = |k: usize, i: usize| -> f64 { (1..=i).map(|t| (k + 1 - t) as f64 / t as f64).product() };
    for k in 0..5 {
        let (mut want, mut scale) = (0.0, 0.0);
        for i in 0..=k {
            want += choose(k, i) * u[i] * v[k - i];
            scale += choose(k, i) * (u[i] * v[k - i]).abs();
        }
        ensure((p[k] - want).abs() <= 1e-15 * scale, || format!("Leibniz part {k}: {} vs {want}", p[k]))?;
    }
    Ok(())
}

/// Horner evaluation of `sum c_n x^n`.
fn horner<T: Elementary>(c: &[f64], x: T) -> T {
    c.iter().rev().fold(T::zero(), |acc, &cn| acc * x + T::from_f64(cn))
}

/// Jet parts of a polynomial against its analytically expanded derivatives,
/// relative to the sum of absolute terms.
pub fn polynomial_exactness(c: &[f64], x: f64) -> Check {
    let y = horner(c, J::variable(x));
    for k in 0..5 {
        let (mut want, mut scale) = (0.0, 0.0);
        for (n, &cn) in c.iter().enumerate().skip(k) {
            let falling: f64 = (0..k).map(|t| (n - t) as f64).product();
            let term = cn * falling * x.powi((n - k) as i32);
            want += term;
            scale += term.abs();
        }
        ensure((y[k] - want).abs() <= 1e-12 * scale.max(f64::MIN_POSITIVE), || {
            format!("degree {} polynomial, part {k} at {x}: {} vs {want}", c.len() - 1, y[k])
        })?;
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fun {
    Sin,
    Cos,
    Tan,
    Exp,
    Ln,
    Sqrt,
    Sinh,
    Cosh,
}

pub const FUNS: [Fun; 8] = [Fun::Sin, Fun::Cos, Fun::Tan, Fun::Exp, Fun::Ln, Fun::Sqrt, Fun::Sinh, Fun::Cosh];

impl Fun {
    pub fn eval<T: Elementary>(self, x: T) -> T {
        match self {
            Fun::Sin => x.sin(),
            Fun::Cos => x.cos(),
            Fun::Tan => x.tan(),
            Fun::Exp => x.exp(),
            Fun::Ln => x.ln(),
            Fun::Sqrt => x.sqrt(),
            Fun::Sinh => x.sinh(),
            Fun::Cosh => x.cosh(),
        }
    }

    pub fn prime(self, x: f64) -> f64 {
        match self {
            Fun::Sin => x.cos(),
            Fun::Cos => -x.sin(),
            Fun::Tan => 1.0 / (x.cos() * x.cos()),
            Fun::Exp => x.exp(),
            Fun::Ln => 1.0 / x,
            Fun::Sqrt => 0.5 / x.sqrt(),
            Fun::Sinh => x.cosh(),
            Fun::Cosh => x.sinh(),
        }
    }

    /// Whether `x` is safely inside the domain (away from poles and edges).
    pub fn accepts(self, x: f64) -> bool {
        match self {
            Fun::Ln | Fun::Sqrt => x > 0.05,
            Fun::Tan => x.cos().abs() > 0.1,
            _ => x.abs() < 20.0,
        }
    }
}

/// `part(g(f(variable(x))), 1) = g'(f(x)) f'(x)`. Pairs outside the domain
/// pass vacuously.
pub fn chain_rule(g: Fun, f: Fun, x: f64) -> Check {
    if !f.accepts(x) || !g.accepts(f.eval(x)) {
        return Ok(());
    }
    let got = g.eval(f.eval(J::variable(x)))[1];
    let want = g.prime(f.eval(x)) * f.prime(x);
    ensure(rel_close(got, want, 1e-12, f64::MIN_POSITIVE), || format!("{g:?}({f:?}(x)) at {x}: {got} vs {want}"))
}

fn mixed_expr<T: Elementary>(x: T, y: T) -> T {
    let a = (x * y).sin() + (x / y).exp() - y.cos() * x.tan();
    let b = (x * x + y * y).sqrt().ln() + x.sinh() / y.cosh();
    a * b + x.powi(3) - y.powf(1.5) + a / (b * b + T::one())
}

/// With zero imaginary inputs the complex realization reproduces the real
/// one bit for bit in the real component.
pub fn complex_consistency(x: f64, y: f64, vx: f64, vy: f64) -> Check {
    let real = mixed_expr(J::seeded(x, vx), J::seeded(y, vy));
    let c = |a: f64| Complex64::new(a, 0.0);
    let cplx = mixed_expr(Jet4::seeded(c(x), c(vx)), Jet4::seeded(c(y), c(vy)));
    for k in 0..5 {
        ensure(real[k].to_bits() == cplx[k].re.to_bits(), || format!("part {k}: {} vs {}", real[k], cplx[k].re))?;
        ensure(cplx[k].im == 0.0, || format!("part {k} picked up imaginary part {}", cplx[k].im))?;
    }
    Ok(())
}

// --- multilinear forms ----------------------------------------------------

/// Polynomial-plus-trigonometric test field on any dimension.
pub fn mixed_field<T: Elementary>(c: &[f64; 4], x: &[T]) -> T {
    let m = x.len();
    let mut acc = T::zero();
    for i in 0..m {
        let (a, b, d) = (x[i], x[(i + 1) % m], x[(i + 2) % m]);
        acc += (a * b * d).scale(c[0]) + (a + b.scale(2.0)).sin().scale(c[1]) * d * d;
        acc += (b * d).cos().scale(c[2]) + a.scale(0.3).exp().scale(c[3]) * b;
    }
    acc
}

/// Product of the directions' 1-norms, at least 1: the size a form can
/// reach for unit-sized derivatives. Keeps relative tolerances meaningful
/// when the value itself is near zero.
fn form_floor(vs: &[&[f64]]) -> f64 {
    vs.iter().map(|v| v.iter().map(|x| x.abs()).sum::<f64>()).product::<f64>().max(1.0)
}

pub fn permutation_symmetry(c: [f64; 4], q: &[f64], dirs: [&[f64]; 4]) -> Check {
    let f = |x: &[J]| mixed_field(&c, x);
    let [x, y, z, w] = dirs;
    let tol = 1e-10;
    let a = d2(f, q, x, y).unwrap();
    let b = d2(f, q, y, x).unwrap();
    ensure(rel_close(a, b, tol, form_floor(&[x, y])), || format!("d2 symmetry: {a} vs {b}"))?;
    let base = d3(f, q, x, y, z).unwrap();
    for (p, r) in [(y, x, z), (z, y, x), (x, z, y), (y, z, x), (z, x, y)].iter().map(|&(a, b, c)| (a, (b, c))) {
        let v = d3(f, q, p, r.0, r.1).unwrap();
        ensure(rel_close(base, v, tol, form_floor(&[x, y, z])), || format!("d3 symmetry: {base} vs {v}"))?;
    }
    let base = d4(f, q, x, y, z, w).unwrap();
    let mut perm = [0usize, 1, 2, 3];
    let all = [x, y, z, w];
    loop {
        let v = d4(f, q, all[perm[0]], all[perm[1]], all[perm[2]], all[perm[3]]).unwrap();
        ensure(rel_close(base, v, tol, form_floor(&all)), || format!("d4 symmetry {perm:?}: {base} vs {v}"))?;
        if !next_perm(&mut perm) {
            break;
        }
    }
    Ok(())
}

fn next_perm(a: &mut [usize; 4]) -> bool {
    let Some(i) = (0..3).rev().find(|&i| a[i] < a[i + 1]) else {
        return false;
    };
    let j = (i + 1..4).rev().find(|&j| a[j] > a[i]).unwrap();
    a.swap(i, j);
    a[i + 1..].reverse();
    true
}

fn combo(alpha: f64, u: &[f64], beta: f64, v: &[f64]) -> Vec<f64> {
    u.iter().zip(v).map(|(a, b)| alpha * a + beta * b).collect()
}

/// Linearity of `d4` in its second slot (by symmetry, every slot).
pub fn multilinearity(c: [f64; 4], q: &[f64], dirs: [&[f64]; 4], extra: &[f64], alpha: f64, beta: f64) -> Check {
    let f = |x: &[J]| mixed_field(&c, x);
    let [x, y, z, w] = dirs;
    let mix = combo(alpha, y, beta, extra);
    let lhs = d4(f, q, x, &mix, z, w).unwrap();
    let rhs = alpha * d4(f, q, x, y, z, w).unwrap() + beta * d4(f, q, x, extra, z, w).unwrap();
    let floor = form_floor(&[x, &mix, z, w])
        .max(form_floor(&[x, y, z, w]) * alpha.abs())
        .max(form_floor(&[x, extra, z, w]) * beta.abs());
    ensure(rel_close(lhs, rhs, 1e-10, floor), || format!("d4 linearity: {lhs} vs {rhs}"))?;
    let lhs = d2(f, q, &mix, x).unwrap();
    let rhs = alpha * d2(f, q, y, x).unwrap() + beta * d2(f, q, extra, x).unwrap();
    ensure(rel_close(lhs, rhs, 1e-10, form_floor(&[&mix, x])), || format!("d2 linearity: {lhs} vs {rhs}"))
}

/// `d_r(x, .., x)` equals the single-direction value.
pub fn degenerate_collapse(c: [f64; 4], q: &[f64], x: &[f64]) -> Check {
    let f = |v: &[J]| mixed_field(&c, v);
    let pairs = [
        (d2(f, q, x, x).unwrap(), d2_single(f, q, x).unwrap(), 2),
        (d3(f, q, x, x, x).unwrap(), d3_single(f, q, x).unwrap(), 3),
        (d4(f, q, x, x, x, x).unwrap(), d4_single(f, q, x).unwrap(), 4),
    ];
    for (a, b, r) in pairs {
        let floor = form_floor(&vec![x; r]);
        ensure(rel_close(a, b, 1e-12, floor), || format!("d{r} collapse: {a} vs {b}"))?;
    }
    Ok(())
}

/// Sparse polynomial `sum c * prod x_i^e_i` on at most four variables.
#[derive(Debug, Clone)]
pub struct Poly {
    pub terms: Vec<(f64, [u32; 4])>,
}

impl Poly {
    pub fn eval<T: Elementary>(&self, x: &[T]) -> T {
        let mut acc = T::zero();
        for (c, e) in &self.terms {
            let mut t = T::from_f64(*c);
            for (xi, &ei) in x.iter().zip(e) {
                for _ in 0..ei {
                    t *= *xi;
                }
            }
            acc += t;
        }
        acc
    }

    /// Analytic mixed partial along 0-based `idx`, evaluated at `x`.
    pub fn partial(&self, idx: &[usize], x: &[f64]) -> f64 {
        let mut acc = 0.0;
        for (c, e) in &self.terms {
            let (mut c, mut e) = (*c, *e);
            for &i in idx {
                c *= e[i] as f64;
                e[i] = e[i].saturating_sub(1);
            }
            if c != 0.0 {
                acc += c * x.iter().zip(&e).map(|(xi, &ei)| xi.powi(ei as i32)).product::<f64>();
            }
        }
        acc
    }
}

/// `d4(x, y, z, w) = sum A_ijkl x_i y_j z_k w_l` with `A` from analytic
/// partials.
#[allow(clippy::needless_range_loop)]
pub fn tensor_oracle(p: &Poly, q: &[f64], dirs: [&[f64]; 4]) -> Check {
    let m = q.len();
    assert!(m <= 4);
    let [x, y, z, w] = dirs;
    let (mut want, mut scale) = (0.0, 0.0);
    for i in 0..m {
        for j in 0..m {
            for k in 0..m {
                for l in 0..m {
                    let t = p.partial(&[i, j, k, l], q) * x[i] * y[j] * z[k] * w[l];
                    want += t;
                    scale += t.abs();
                }
            }
        }
    }
    let got = d4(|v: &[J]| p.eval(v), q, x, y, z, w).unwrap();
    ensure(rel_close(got, want, 1e-10, scale.max(1.0)), || format!("tensor oracle: {got} vs {want}"))
}

/// A three-component field built from [`mixed_field`] variants.
pub fn vector_field<T: Elementary>(c: &[f64; 4], x: &[T]) -> Vec<T> {
    let c2 = [c[1], c[2], c[3], c[0]];
    let c3 = [c[3], -c[0], c[1], 0.5];
    vec![mixed_field(c, x), mixed_field(&c2, x), mixed_field(&c3, x) * x[0]]
}

pub fn vd_matches_components(c: [f64; 4], q: &[f64], dirs: [&[f64]; 4]) -> Check {
    let [x, y, z, w] = dirs;
    let vf = |v: &[J]| vector_field(&c, v);
    let (v2, v3, v4) = (vd2(vf, q, x, y).unwrap(), vd3(vf, q, x, y, z).unwrap(), vd4(vf, q, x, y, z, w).unwrap());
    for k in 0..3 {
        let fk = |v: &[J]| vector_field(&c, v)[k];
        let s = [d2(fk, q, x, y).unwrap(), d3(fk, q, x, y, z).unwrap(), d4(fk, q, x, y, z, w).unwrap()];
        for (r, (a, b)) in [v2[k], v3[k], v4[k]].into_iter().zip(s).enumerate() {
            ensure(a == b, || format!("component {k}, order {}: {a} vs {b}", r + 2))?;
        }
    }
    Ok(())
}

// --- finite differences ---------------------------------------------------

pub fn least_squares_slope(x: &[f64], y: &[f64]) -> f64 {
    jetdiff::cli::loglog_slope(x, y)
}

/// Observed order of `deriv` with `n` series terms for `fun` at `q`,
/// fitted over `h` in 1e-1 .. 1e-3, in double-double.
pub fn fd_convergence_slope(fun: Fun, n: usize, q: f64) -> f64 {
    let hs = [1e-1, 3e-2, 1e-2, 3e-3, 1e-3];
    let qd = DoubleDouble::from(q);
    let exact = match fun {
        Fun::Exp => qd.exp(),
        Fun::Ln => DoubleDouble::from(1.0) / (DoubleDouble::from(1.0) + qd),
        Fun::Sin => qd.cos(),
        other => panic!("no convergence reference for {other:?}"),
    };
    let f = |x: DoubleDouble| match fun {
        Fun::Ln => (DoubleDouble::from(1.0) + x).ln(),
        other => other.eval(x),
    };
    let errs: Vec<f64> = hs.iter().map(|&h| (deriv(f, qd, DoubleDouble::from(h), n) - exact).to_f64().abs()).collect();
    least_squares_slope(&hs, &errs)
}

pub fn fd_convergence(fun: Fun, n: usize, q: f64) -> Check {
    let s = fd_convergence_slope(fun, n, q);
    ensure((s - n as f64).abs() <= 0.3, || format!("{fun:?} with n={n} at {q}: slope {s:.3}"))
}

/// Nested differences whose every order reaches the degree are exact for
/// polynomials up to roundoff.
pub fn fd_polynomial_exactness(p: &Poly, q: &[f64], idx: &[usize]) -> Check {
    let degree = p.terms.iter().map(|(_, e)| e.iter().sum::<u32>()).max().unwrap_or(0) as usize;
    let scheme = FdScheme::new(0.25, vec![degree.max(1); idx.len()]).unwrap();
    let qd: Vec<DoubleDouble> = q.iter().map(|&v| DoubleDouble::from(v)).collect();
    let got = partial_fd(|v: &[DoubleDouble]| p.eval(v), &qd, idx, &scheme).unwrap().to_f64();
    let zero_based: Vec<usize> = idx.iter().map(|i| i - 1).collect();
    let want = p.partial(&zero_based, q);
    ensure(rel_close(got, want, 1e-13, 1.0), || format!("FD of polynomial along {idx:?}: {got} vs {want}"))
}

pub fn setvn_postconditions(r: usize, oa: usize) -> Check {
    let v = setvn(r, oa).map_err(|e| e.to_string())?;
    ensure(v.len() == r, || format!("setvn({r},{oa}) has length {}", v.len()))?;
    ensure(v.iter().sum::<usize>() == oa + r - 1, || {
        format!("setvn({r},{oa}) = {v:?} does not sum to {}", oa + r - 1)
    })?;
    ensure(v.windows(2).all(|p| p[0] <= p[1]), || format!("setvn({r},{oa}) = {v:?} not ascending"))?;
    ensure(v[r - 1] - v[0] <= 1 && v[0] >= 1, || format!("setvn({r},{oa}) = {v:?} not a near-equal split"))
}

// --- screws and kinematics ------------------------------------------------

pub fn screw(a: [f64; 6]) -> Screw {
    Screw::new(Vec3::new(a[0], a[1], a[2]), Vec3::new(a[3], a[4], a[5]))
}

pub fn lie_identities(a: [f64; 6], b: [f64; 6], c: [f64; 6]) -> Check {
    let (a, b, c) = (screw(a), screw(b), screw(c));
    let anti = lie_bracket(a, b) + lie_bracket(b, a);
    let s2 = a.norm() * b.norm();
    ensure(anti.norm() <= 1e-12 * s2.max(1.0), || format!("antisymmetry residual {}", anti.norm()))?;
    let jac = lie_bracket(a, lie_bracket(b, c)) + lie_bracket(b, lie_bracket(c, a)) + lie_bracket(c, lie_bracket(a, b));
    let s3 = s2 * c.norm();
    ensure(jac.norm() <= 1e-12 * s3.max(1.0), || format!("Jacobi residual {}", jac.norm()))
}

/// Dual-number route against the screw oracle on the RCR model.
pub fn rcr_agreement(s: &KinematicSnapshot) -> Check {
    let chain = rcr_model();
    chain_agreement(&chain, s, 1e-9)
}

pub fn chain_agreement(chain: &Chain, s: &KinematicSnapshot, tol: f64) -> Check {
    let dual = kinematics_timejet(chain.field(), s).map_err(|e| e.to_string())?;
    let scr = screw_kinematics(chain, s).map_err(|e| e.to_string())?;
    let d = dual.max_abs_diff(&scr);
    ensure(d <= tol, || format!("dual vs screw: max abs diff {d:.3e}"))
}

/// Snapshot from five flat rate vectors.
pub fn snapshot(rows: [Vec<f64>; 5]) -> KinematicSnapshot {
    let [q, qd, qdd, qddd, qdddd] = rows;
    KinematicSnapshot::new(q, qd, qdd, qddd, qdddd).unwrap()
}

/// Joint description for [`random_chain`]: unnormalized axis, translation,
/// whether the angle and the slide are variable.
pub type JointSpec = ([f64; 3], [f64; 3], bool, bool);

/// Builds a chain from joint specs; fixed angles get 0.3 rad, and a joint
/// with neither variable is still a fixed factor.
pub fn random_chain(specs: &[JointSpec], point: [f64; 3]) -> Chain {
    let mut var = 0;
    let mut next = || {
        var += 1;
        var - 1
    };
    let factors = specs
        .iter()
        .map(|&(axis, translation, rot, slide)| {
            let n = (axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]).sqrt();
            let axis = axis.map(|a| a / n);
            let angle = if rot { Param::Var { var: next() } } else { Param::Fixed(0.3) };
            let slide = slide.then(|| Slide { var: next(), direction: axis });
            Factor { angle, axis, translation, slide }
        })
        .collect();
    Chain::new(factors, point).unwrap()
}

/// Both dual routes agree to `1e-11` relative.
pub fn routes_agree<F>(f: F, s: &KinematicSnapshot) -> Check
where
    F: Fn(&[J]) -> Vec<J>,
{
    let a = kinematics_timejet(&f, s).map_err(|e| e.to_string())?;
    let b = kinematics_directional(&f, s).map_err(|e| e.to_string())?;
    let d = a.max_rel_diff(&b);
    ensure(d <= 1e-11, || format!("routes differ by {d:.3e}"))
}
