//! Higher-order directional derivatives as symmetric multilinear forms.
//!
//! For `f: R^m -> R` (or `R^n`) at a point `q`, the rank-`r` form is
//!
//! ```text
//! d_r(x1, ..., xr) = sum  d^r f(q) / dq_i1 ... dq_ir  * x1_i1 ... xr_ir
//! ```
//!
//! One jet evaluation `f(q + e1 v)` yields every form on a repeated argument:
//! the `e_k` part is `d_k(v, ..., v)`. Forms on distinct arguments are
//! recovered from repeated-argument values by polarization, so the cost of
//! `d4(x, y, z, w)` is a fixed number of field evaluations regardless of `m`.
//!
//! Scalar fields return a [`Jet4`]; vector fields return `Vec<Jet4>`. Both
//! go through the same polarization code, parameterized by [`Codomain`].

use std::ops::{Add, Sub};

use crate::error::{Error, Result};
use crate::jet::Jet4;
use crate::scalar::Scalar;

/// The value space of a field: a single jet or a vector of jets.
pub trait Codomain<S: Scalar> {
    /// The `e_k` parts collected into the codomain's real shape.
    type Part: Clone + Add<Output = Self::Part> + Sub<Output = Self::Part>;

    fn part(&self, k: usize) -> Self::Part;

    fn scale_part(p: Self::Part, s: f64) -> Self::Part;
}

impl<S: Scalar> Codomain<S> for Jet4<S> {
    type Part = S;

    fn part(&self, k: usize) -> S {
        self[k]
    }

    fn scale_part(p: S, s: f64) -> S {
        p.scale(s)
    }
}

/// Componentwise vector of scalar parts, for vector-valued fields.
#[derive(Debug, Clone, PartialEq)]
pub struct PartVec<S>(pub Vec<S>);

impl<S: Scalar> Add for PartVec<S> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        PartVec(self.0.into_iter().zip(rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl<S: Scalar> Sub for PartVec<S> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        PartVec(self.0.into_iter().zip(rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl<S: Scalar> Codomain<S> for Vec<Jet4<S>> {
    type Part = PartVec<S>;

    fn part(&self, k: usize) -> PartVec<S> {
        PartVec(self.iter().map(|j| j[k]).collect())
    }

    fn scale_part(p: PartVec<S>, s: f64) -> PartVec<S> {
        PartVec(p.0.into_iter().map(|c| c.scale(s)).collect())
    }
}

fn check_dims<S>(q: &[S], dirs: &[&[S]]) -> Result<()> {
    if q.is_empty() {
        return Err(Error::DimensionMismatch { expected: 1, found: 0 });
    }
    for d in dirs {
        if d.len() != q.len() {
            return Err(Error::DimensionMismatch { expected: q.len(), found: d.len() });
        }
    }
    Ok(())
}

fn vadd<S: Scalar>(a: &[S], b: &[S]) -> Vec<S> {
    a.iter().zip(b).map(|(&x, &y)| x + y).collect()
}

fn vsub<S: Scalar>(a: &[S], b: &[S]) -> Vec<S> {
    a.iter().zip(b).map(|(&x, &y)| x - y).collect()
}

/// Evaluates `f(q + e1 v)` without dimension checks.
fn seed_and_eval<S, C, F>(f: &F, q: &[S], v: &[S]) -> C
where
    S: Scalar,
    F: Fn(&[Jet4<S>]) -> C,
{
    let point: Vec<Jet4<S>> = q.iter().zip(v).map(|(&qi, &vi)| Jet4::seeded(qi, vi)).collect();
    f(&point)
}

/// The polarization chains for one field at one point. `single(k, v)` is
/// `d_k(v, ..., v)`.
struct Polarizer<'a, S, C, F> {
    f: &'a F,
    q: &'a [S],
    _codomain: std::marker::PhantomData<C>,
}

impl<'a, S, C, F> Polarizer<'a, S, C, F>
where
    S: Scalar,
    C: Codomain<S>,
    F: Fn(&[Jet4<S>]) -> C,
{
    fn new(f: &'a F, q: &'a [S]) -> Self {
        Self { f, q, _codomain: std::marker::PhantomData }
    }

    fn single(&self, k: usize, v: &[S]) -> C::Part {
        seed_and_eval(self.f, self.q, v).part(k)
    }

    fn half(p: C::Part) -> C::Part {
        C::scale_part(p, 0.5)
    }

    fn d2(&self, x: &[S], y: &[S]) -> C::Part {
        let xy = vadd(x, y);
        Self::half(self.single(2, &xy) - self.single(2, x) - self.single(2, y))
    }

    /// `d3(x, x, z) = [d3(z+x) + d3(z-x) - 2 d3(z)] / 6`
    fn d3_xxz(&self, x: &[S], z: &[S]) -> C::Part {
        let zpx = vadd(z, x);
        let zmx = vsub(z, x);
        let dz = self.single(3, z);
        C::scale_part(self.single(3, &zpx) + self.single(3, &zmx) - dz.clone() - dz, 1.0 / 6.0)
    }

    fn d3(&self, x: &[S], y: &[S], z: &[S]) -> C::Part {
        let xy = vadd(x, y);
        Self::half(self.d3_xxz(&xy, z) - self.d3_xxz(x, z) - self.d3_xxz(y, z))
    }

    /// `d4(x, x, z, z) = [d4xz+ + d4xz- - 2 d4(x) - 2 d4(z)] / 12`
    fn d4_xxzz(&self, x: &[S], z: &[S]) -> C::Part {
        let xpz = vadd(x, z);
        let xmz = vsub(x, z);
        let dx = self.single(4, x);
        let dz = self.single(4, z);
        C::scale_part(self.single(4, &xpz) + self.single(4, &xmz) - dx.clone() - dx - dz.clone() - dz, 1.0 / 12.0)
    }

    fn d4_xxzw(&self, x: &[S], z: &[S], w: &[S]) -> C::Part {
        let zw = vadd(z, w);
        Self::half(self.d4_xxzz(x, &zw) - self.d4_xxzz(x, z) - self.d4_xxzz(x, w))
    }

    fn d4(&self, x: &[S], y: &[S], z: &[S], w: &[S]) -> C::Part {
        let xy = vadd(x, y);
        Self::half(self.d4_xxzw(&xy, z, w) - self.d4_xxzw(x, z, w) - self.d4_xxzw(y, z, w))
    }
}

/// `f(q + e1 v)`: part `k` is `d_k(v, ..., v)`.
pub fn eval_jet<S, F>(f: F, q: &[S], v: &[S]) -> Result<Jet4<S>>
where
    S: Scalar,
    F: Fn(&[Jet4<S>]) -> Jet4<S>,
{
    check_dims(q, &[v])?;
    Ok(seed_and_eval(&f, q, v))
}

/// First-order directional derivative `grad f(q) . x`.
pub fn d1<S, F>(f: F, q: &[S], x: &[S]) -> Result<S>
where
    S: Scalar,
    F: Fn(&[Jet4<S>]) -> Jet4<S>,
{
    Ok(eval_jet(f, q, x)?[1])
}

/// `d2(x, x) = x^T H x`.
pub fn d2_single<S, F>(f: F, q: &[S], x: &[S]) -> Result<S>
where
    S: Scalar,
    F: Fn(&[Jet4<S>]) -> Jet4<S>,
{
    Ok(eval_jet(f, q, x)?[2])
}

pub fn d3_single<S, F>(f: F, q: &[S], x: &[S]) -> Result<S>
where
    S: Scalar,
    F: Fn(&[Jet4<S>]) -> Jet4<S>,
{
    Ok(eval_jet(f, q, x)?[3])
}

pub fn d4_single<S, F>(f: F, q: &[S], x: &[S]) -> Result<S>
where
    S: Scalar,
    F: Fn(&[Jet4<S>]) -> Jet4<S>,
{
    Ok(eval_jet(f, q, x)?[4])
}

/// `d2(x, y) = x^T H f(q) y`, from three jet evaluations.
pub fn d2<S, F>(f: F, q: &[S], x: &[S], y: &[S]) -> Result<S>
where
    S: Scalar,
    F: Fn(&[Jet4<S>]) -> Jet4<S>,
{
    check_dims(q, &[x, y])?;
    Ok(Polarizer::new(&f, q).d2(x, y))
}

/// Third-order form on three directions (nine jet evaluations).
pub fn d3<S, F>(f: F, q: &[S], x: &[S], y: &[S], z: &[S]) -> Result<S>
where
    S: Scalar,
    F: Fn(&[Jet4<S>]) -> Jet4<S>,
{
    check_dims(q, &[x, y, z])?;
    Ok(Polarizer::new(&f, q).d3(x, y, z))
}

/// Fourth-order form on four directions (36 jet evaluations, independent
/// of the dimension).
pub fn d4<S, F>(f: F, q: &[S], x: &[S], y: &[S], z: &[S], w: &[S]) -> Result<S>
where
    S: Scalar,
    F: Fn(&[Jet4<S>]) -> Jet4<S>,
{
    check_dims(q, &[x, y, z, w])?;
    Ok(Polarizer::new(&f, q).d4(x, y, z, w))
}

fn basis<S: Scalar>(m: usize, i: usize) -> Vec<S> {
    let mut e = vec![S::zero(); m];
    e[i] = S::one();
    e
}

fn basis_set<S: Scalar>(m: usize, indices: &[usize]) -> Result<Vec<Vec<S>>> {
    match indices.len() {
        0 => return Err(Error::EmptyIndexList),
        1..=4 => {}
        n => return Err(Error::MoreThanFourIndices(n)),
    }
    indices
        .iter()
        .map(
            |&i| {
                if (1..=m).contains(&i) {
                    Ok(basis(m, i - 1))
                } else {
                    Err(Error::IndexOutOfRange { index: i, dim: m })
                }
            },
        )
        .collect()
}

/// Mixed partial `d^r f / dq_i1 ... dq_ir` (indices are 1-based, `r <= 4`),
/// as the form evaluated on standard basis vectors.
pub fn partial<S, F>(f: F, q: &[S], indices: &[usize]) -> Result<S>
where
    S: Scalar,
    F: Fn(&[Jet4<S>]) -> Jet4<S>,
{
    let e = basis_set::<S>(q.len(), indices)?;
    match e.as_slice() {
        [a] => d1(f, q, a),
        [a, b] => d2(f, q, a, b),
        [a, b, c] => d3(f, q, a, b, c),
        [a, b, c, d] => d4(f, q, a, b, c, d),
        _ => unreachable!(),
    }
}

/// `H f(q) w`, componentwise as `d2(e_k, w)`.
pub fn hessian_vector_product<S, F>(f: F, q: &[S], w: &[S]) -> Result<Vec<S>>
where
    S: Scalar,
    F: Fn(&[Jet4<S>]) -> Jet4<S>,
{
    check_dims(q, &[w])?;
    let pol = Polarizer::new(&f, q);
    Ok((0..q.len()).map(|k| pol.d2(&basis(q.len(), k), w)).collect())
}

/// `F(q + e1 v)` for a vector field.
pub fn veval_jet<S, F>(f: F, q: &[S], v: &[S]) -> Result<Vec<Jet4<S>>>
where
    S: Scalar,
    F: Fn(&[Jet4<S>]) -> Vec<Jet4<S>>,
{
    check_dims(q, &[v])?;
    Ok(seed_and_eval(&f, q, v))
}

/// Jacobian-vector product `J F(q) v`.
pub fn vd1<S, F>(f: F, q: &[S], v: &[S]) -> Result<Vec<S>>
where
    S: Scalar,
    F: Fn(&[Jet4<S>]) -> Vec<Jet4<S>>,
{
    Ok(veval_jet(f, q, v)?.part(1).0)
}

pub fn vd2<S, F>(f: F, q: &[S], x: &[S], y: &[S]) -> Result<Vec<S>>
where
    S: Scalar,
    F: Fn(&[Jet4<S>]) -> Vec<Jet4<S>>,
{
    check_dims(q, &[x, y])?;
    Ok(Polarizer::new(&f, q).d2(x, y).0)
}

pub fn vd3<S, F>(f: F, q: &[S], x: &[S], y: &[S], z: &[S]) -> Result<Vec<S>>
where
    S: Scalar,
    F: Fn(&[Jet4<S>]) -> Vec<Jet4<S>>,
{
    check_dims(q, &[x, y, z])?;
    Ok(Polarizer::new(&f, q).d3(x, y, z).0)
}

pub fn vd4<S, F>(f: F, q: &[S], x: &[S], y: &[S], z: &[S], w: &[S]) -> Result<Vec<S>>
where
    S: Scalar,
    F: Fn(&[Jet4<S>]) -> Vec<Jet4<S>>,
{
    check_dims(q, &[x, y, z, w])?;
    Ok(Polarizer::new(&f, q).d4(x, y, z, w).0)
}

/// Vector of mixed partials of every component, `d_r(e_i1, ..., e_ir)`.
pub fn vpartial<S, F>(f: F, q: &[S], indices: &[usize]) -> Result<Vec<S>>
where
    S: Scalar,
    F: Fn(&[Jet4<S>]) -> Vec<Jet4<S>>,
{
    let e = basis_set::<S>(q.len(), indices)?;
    match e.as_slice() {
        [a] => vd1(f, q, a),
        [a, b] => vd2(f, q, a, b),
        [a, b, c] => vd3(f, q, a, b, c),
        [a, b, c, d] => vd4(f, q, a, b, c, d),
        _ => unreachable!(),
    }
}
