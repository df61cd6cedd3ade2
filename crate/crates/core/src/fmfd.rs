//! Forward finite differences of arbitrary approximation order.
//!
//! The derivative operator is the logarithm series of the forward shift,
//!
//! ```text
//! h f'(q) = sum_{p=1}^{n} (-1)^{p+1} / p * Delta_h^p f(q) + O(h^{n+1})
//! ```
//!
//! and mixed partials nest one such operator per index. Nothing is
//! memoized: the cost of one `deriv` with order `n` is `sum_{p=1}^{n}(p+1)`
//! evaluations, so a nested partial with orders `{n_1, .., n_r}` costs the
//! product of those sums (see [`evaluations_per_partial`]). This is the
//! baseline the dual-number route is measured against.
//!
//! Everything is generic over [`Elementary`], so the same scheme runs in
//! binary64 or in double-double by choosing the scalar type.

use crate::error::{Error, Result};
use crate::scalar::Elementary;

/// Which scalar realization a scheme should be computed in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Precision {
    #[default]
    F64,
    /// Double-double, about 106 significand bits.
    Extended,
}

/// How [`directional4_fd`] enumerates index tuples.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Contraction {
    /// Only `i <= j <= k <= l`, weighted by the symmetrized direction
    /// product. About `m^4 / 24` partials.
    #[default]
    Symmetric,
    /// Every `(i, j, k, l)`; `m^4` partials.
    Full,
}

/// Step size plus the per-level approximation orders of one partial.
#[derive(Debug, Clone, PartialEq)]
pub struct FdScheme {
    pub h: f64,
    pub orders: Vec<usize>,
    pub precision: Precision,
    pub contraction: Contraction,
}

impl FdScheme {
    pub fn new(h: f64, orders: Vec<usize>) -> Result<Self> {
        if h.is_nan() || h <= 0.0 {
            return Err(Error::InvalidStep(h));
        }
        if orders.is_empty() || orders.len() > 4 {
            return Err(Error::InvalidOrder(orders.len()));
        }
        if orders.contains(&0) {
            return Err(Error::InvalidApproximationOrder);
        }
        Ok(Self { h, orders, precision: Precision::F64, contraction: Contraction::Symmetric })
    }

    /// Scheme for an `r`-th derivative with overall approximation order
    /// `oa`, orders split by [`setvn`].
    pub fn for_order(r: usize, oa: usize, h: f64) -> Result<Self> {
        Self::new(h, setvn(r, oa)?)
    }

    pub fn with_precision(mut self, precision: Precision) -> Self {
        self.precision = precision;
        self
    }

    pub fn with_contraction(mut self, contraction: Contraction) -> Self {
        self.contraction = contraction;
        self
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }
}

/// `C(p, k)` in exact integer arithmetic.
fn binomial(p: usize, k: usize) -> u64 {
    let k = k.min(p - k);
    (0..k).fold(1u64, |acc, i| acc * (p - i) as u64 / (i + 1) as u64)
}

/// `Delta_h^p f(q) = sum_k (-1)^{p-k} C(p,k) f(q + k h)`.
pub fn forward_delta<T, F>(mut f: F, q: T, h: T, p: usize) -> T
where
    T: Elementary,
    F: FnMut(T) -> T,
{
    let mut acc = T::zero();
    for k in 0..=p {
        let c = T::from_f64(binomial(p, k) as f64);
        let term = c * f(q + h.scale(k as f64));
        if (p - k).is_multiple_of(2) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// `f'(q) + O(h^n)` from the truncated logarithm series of the shift.
pub fn deriv<T, F>(mut f: F, q: T, h: T, n: usize) -> T
where
    T: Elementary,
    F: FnMut(T) -> T,
{
    let mut acc = T::zero();
    for p in 1..=n {
        let dp = forward_delta(&mut f, q, h, p) / T::from_f64(p as f64);
        if p % 2 == 1 {
            acc += dp;
        } else {
            acc -= dp;
        }
    }
    acc / h
}

/// Evaluations of `f` spent by one nested partial with these orders.
pub fn evaluations_per_partial(orders: &[usize]) -> usize {
    orders.iter().map(|&n| (1..=n).map(|p| p + 1).sum::<usize>()).product()
}

/// Near-equal ascending split of `oa + r - 1` into `r` orders.
pub fn setvn(r: usize, oa: usize) -> Result<Vec<usize>> {
    if !(1..=4).contains(&r) {
        return Err(Error::InvalidOrder(r));
    }
    if oa == 0 {
        return Err(Error::InvalidApproximationOrder);
    }
    let total = oa + r - 1;
    let res = total % r;
    let nmin = (total - res) / r;
    let mut out = vec![nmin; r - res];
    out.extend(std::iter::repeat_n(nmin + 1, res));
    Ok(out)
}

// Outermost operator acts on the last index with the first order; the
// innermost on the first index with the last order.
fn nested<T, F>(f: &F, v: &mut [T], idx: &[usize], orders: &[usize], h: T) -> T
where
    T: Elementary,
    F: Fn(&[T]) -> T,
{
    match idx.split_last() {
        None => f(v),
        Some((&last, rest)) => {
            let q0 = v[last];
            let r = deriv(
                |t| {
                    v[last] = t;
                    nested(f, v, rest, &orders[1..], h)
                },
                q0,
                h,
                orders[0],
            );
            v[last] = q0;
            r
        }
    }
}

fn check_indices(m: usize, indices: &[usize]) -> Result<Vec<usize>> {
    match indices.len() {
        0 => return Err(Error::EmptyIndexList),
        1..=4 => {}
        n => return Err(Error::MoreThanFourIndices(n)),
    }
    indices
        .iter()
        .map(|&i| if (1..=m).contains(&i) { Ok(i - 1) } else { Err(Error::IndexOutOfRange { index: i, dim: m }) })
        .collect()
}

/// Mixed partial `d^r f / dq_{i_r} .. dq_{i_1}` (1-based indices), one
/// order per index from `scheme`.
pub fn partial_fd<T, F>(f: F, q: &[T], indices: &[usize], scheme: &FdScheme) -> Result<T>
where
    T: Elementary,
    F: Fn(&[T]) -> T,
{
    let idx = check_indices(q.len(), indices)?;
    if scheme.orders.len() != idx.len() {
        return Err(Error::DimensionMismatch { expected: idx.len(), found: scheme.orders.len() });
    }
    let mut v = q.to_vec();
    Ok(nested(&f, &mut v, &idx, &scheme.orders, T::from_f64(scheme.h)))
}

fn scheme_of(h: f64, orders: &[usize]) -> Result<FdScheme> {
    FdScheme::new(h, orders.to_vec())
}

/// `df/dq_i`.
pub fn df1<T, F>(f: F, q: &[T], i: usize, h: f64, n: usize) -> Result<T>
where
    T: Elementary,
    F: Fn(&[T]) -> T,
{
    partial_fd(f, q, &[i], &scheme_of(h, &[n])?)
}

/// `d^2 f / dq_j dq_i`; `n1` drives the outer (`j`) difference.
pub fn df2<T, F>(f: F, q: &[T], i: usize, j: usize, h: f64, n1: usize, n2: usize) -> Result<T>
where
    T: Elementary,
    F: Fn(&[T]) -> T,
{
    partial_fd(f, q, &[i, j], &scheme_of(h, &[n1, n2])?)
}

#[allow(clippy::too_many_arguments)]
pub fn df3<T, F>(f: F, q: &[T], i: usize, j: usize, k: usize, h: f64, n: [usize; 3]) -> Result<T>
where
    T: Elementary,
    F: Fn(&[T]) -> T,
{
    partial_fd(f, q, &[i, j, k], &scheme_of(h, &n)?)
}

#[allow(clippy::too_many_arguments)]
pub fn df4<T, F>(f: F, q: &[T], i: usize, j: usize, k: usize, l: usize, h: f64, n: [usize; 4]) -> Result<T>
where
    T: Elementary,
    F: Fn(&[T]) -> T,
{
    partial_fd(f, q, &[i, j, k, l], &scheme_of(h, &n)?)
}

/// Default cap on the dimension accepted by [`directional4_fd`].
pub const DEFAULT_M_CAP: usize = 25;

fn next_permutation(a: &mut [usize; 4]) -> bool {
    let Some(i) = (0..3).rev().find(|&i| a[i] < a[i + 1]) else {
        return false;
    };
    let j = (i + 1..4).rev().find(|&j| a[j] > a[i]).unwrap();
    a.swap(i, j);
    a[i + 1..].reverse();
    true
}

/// `d4(x, y, z, w)` as the brute-force contraction of finite-difference
/// fourth partials with the four directions. Refuses `m > cap`.
#[allow(clippy::too_many_arguments)]
pub fn directional4_fd<T, F>(
    f: F,
    q: &[T],
    x: &[T],
    y: &[T],
    z: &[T],
    w: &[T],
    scheme: &FdScheme,
    cap: usize,
) -> Result<T>
where
    T: Elementary,
    F: Fn(&[T]) -> T,
{
    let m = q.len();
    for d in [x, y, z, w] {
        if d.len() != m {
            return Err(Error::DimensionMismatch { expected: m, found: d.len() });
        }
    }
    if m > cap {
        return Err(Error::DimensionCap { m, cap });
    }
    if scheme.rank() != 4 {
        return Err(Error::InvalidOrder(scheme.rank()));
    }
    let h = T::from_f64(scheme.h);
    let mut v = q.to_vec();
    let mut acc = T::zero();
    let dirs = [x, y, z, w];
    let weight = |t: &[usize; 4]| dirs[0][t[0]] * dirs[1][t[1]] * dirs[2][t[2]] * dirs[3][t[3]];
    match scheme.contraction {
        Contraction::Full => {
            for i in 0..m {
                for j in 0..m {
                    for k in 0..m {
                        for l in 0..m {
                            let t = [i, j, k, l];
                            let d = nested(&f, &mut v, &t, &scheme.orders, h);
                            acc += weight(&t) * d;
                        }
                    }
                }
            }
        }
        Contraction::Symmetric => {
            for i in 0..m {
                for j in i..m {
                    for k in j..m {
                        for l in k..m {
                            let t = [i, j, k, l];
                            let mut perm = t;
                            let mut wsum = weight(&perm);
                            while next_permutation(&mut perm) {
                                wsum += weight(&perm);
                            }
                            let d = nested(&f, &mut v, &t, &scheme.orders, h);
                            acc += wsum * d;
                        }
                    }
                }
            }
        }
    }
    Ok(acc)
}
