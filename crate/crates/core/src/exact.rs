//! Exact integer and rational linear algebra over a generic integer type.
//!
//! Every routine here is parameterised by an [`ExactInt`]; the crate root
//! fixes `BigInt` as the default through type aliases. Machine integers such
//! as `i64` also satisfy the bound and are useful for cross-checking, but
//! they can overflow on large inputs.

use std::fmt::{Debug, Display};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Signed, ToPrimitive, Zero};

/// Integer types usable for exact computation.
pub trait ExactInt: Integer + Signed + Clone + Debug + Display + FromPrimitive + ToPrimitive + 'static {}

impl<T> ExactInt for T where T: Integer + Signed + Clone + Debug + Display + FromPrimitive + ToPrimitive + 'static {}

/// Lifts a machine integer into `T`.
pub fn lift<T: ExactInt>(v: i64) -> T {
    T::from_i64(v).expect("every exact integer type represents i64 values")
}

/// Positive part `max(a, 0)`.
pub fn plus<T: Signed + Clone + PartialOrd>(a: &T) -> T {
    if a.is_positive() {
        a.clone()
    } else {
        T::zero()
    }
}

/// Negative part `max(-a, 0)`.
pub fn minus<T: Signed + Clone + PartialOrd>(a: &T) -> T {
    if a.is_negative() {
        -a.clone()
    } else {
        T::zero()
    }
}

/// Leading principal minors `d_1, ..., d_k` of a square integer matrix,
/// computed by fraction-free (Bareiss) elimination.
///
/// Elimination stops at the first vanishing minor, which is included as the
/// last entry; the remaining minors are not reported.
pub fn leading_principal_minors<T: ExactInt>(m: &[Vec<i64>]) -> Vec<T> {
    let n = m.len();
    let mut a: Vec<Vec<T>> = m
        .iter()
        .map(|row| row.iter().map(|&v| lift::<T>(v)).collect())
        .collect();
    let mut minors = Vec::with_capacity(n);
    let mut prev = T::one();
    for k in 0..n {
        let pivot = a[k][k].clone();
        minors.push(pivot.clone());
        if pivot.is_zero() {
            break;
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                if a[i][j].is_zero() && (a[i][k].is_zero() || a[k][j].is_zero()) {
                    continue;
                }
                let num = a[i][j].clone() * pivot.clone() - a[i][k].clone() * a[k][j].clone();
                a[i][j] = num / prev.clone();
            }
        }
        prev = pivot;
    }
    minors
}

/// True when every leading principal minor `d_k` is nonzero with sign `(-1)^k`.
pub fn is_negative_definite<T: ExactInt>(m: &[Vec<i64>]) -> bool {
    let minors = leading_principal_minors::<T>(m);
    minors.len() == m.len()
        && minors
            .iter()
            .enumerate()
            .all(|(k, d)| if k % 2 == 0 { d.is_negative() } else { d.is_positive() })
}

/// Solves `m x = rhs` exactly, returning `None` when `m` is singular.
pub fn solve<T: ExactInt>(m: &[Vec<i64>], rhs: &[i64]) -> Option<Vec<Ratio<T>>> {
    let n = m.len();
    assert_eq!(rhs.len(), n, "right-hand side length must match the matrix");
    let mut a: Vec<Vec<Ratio<T>>> = m
        .iter()
        .zip(rhs)
        .map(|(row, &b)| {
            row.iter()
                .chain(std::iter::once(&b))
                .map(|&v| Ratio::from_integer(lift::<T>(v)))
                .collect()
        })
        .collect();
    // Forward elimination below the pivot only: dual-graph matrices are
    // sparse and this keeps the fill-in small.
    for col in 0..n {
        let pivot_row = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot_row);
        let support: Vec<usize> = (col..=n).filter(|&j| !a[col][j].is_zero()).collect();
        for r in (col + 1)..n {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone() / a[col][col].clone();
            for &j in &support {
                let delta = factor.clone() * a[col][j].clone();
                a[r][j] = a[r][j].clone() - delta;
            }
        }
    }
    let mut x = vec![Ratio::<T>::zero(); n];
    for row in (0..n).rev() {
        let mut acc = a[row][n].clone();
        for j in (row + 1)..n {
            if !a[row][j].is_zero() {
                acc = acc - a[row][j].clone() * x[j].clone();
            }
        }
        x[row] = acc / a[row][row].clone();
    }
    Some(x)
}
