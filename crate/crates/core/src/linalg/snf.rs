use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::scalar::{with_fallback, Scalar};
use super::IntMatrix;

/// Diagonal of the Smith normal form: `d₁ | d₂ | … | d_r` followed by zeros,
/// padded to `min(rows, cols)` entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    pub diagonal: Vec<BigInt>,
}

impl SnfResult {
    pub fn rank(&self) -> usize {
        self.diagonal.iter().filter(|d| !d.is_zero()).count()
    }

    /// Entries greater than one, i.e. the invariant factors of the torsion part.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.diagonal.iter().filter(|d| **d > BigInt::one()).cloned().collect()
    }

    /// Product of the nonzero diagonal entries.
    pub fn nonzero_product(&self) -> BigInt {
        self.diagonal.iter().filter(|d| !d.is_zero()).product()
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SnfResult {
    let (rows, cols) = (m.rows(), m.cols());
    let mut diagonal = with_fallback(
        m.entries(),
        |small| snf_diagonal(small, rows, cols).map(|d| d.into_iter().map(BigInt::from).collect()),
        |big| snf_diagonal(big, rows, cols).expect("big integer reduction cannot overflow"),
    );
    diagonal.resize(rows.min(cols), BigInt::zero());
    SnfResult { diagonal }
}

fn snf_diagonal<S: Scalar>(mut a: Vec<S>, rows: usize, cols: usize) -> Option<Vec<S>> {
    let at = |i: usize, j: usize| i * cols + j;
    let mut diag = Vec::new();
    for t in 0..rows.min(cols) {
        // smallest nonzero magnitude in the trailing block becomes the pivot
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                let v = &a[at(i, j)];
                if !v.s_is_zero() && best.is_none_or(|(bi, bj)| v.abs_lt(&a[at(bi, bj)])) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        swap_rows(&mut a, cols, t, pi);
        swap_cols(&mut a, cols, rows, t, pj);

        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if a[at(i, t)].s_is_zero() {
                    continue;
                }
                let q = a[at(i, t)].div_euclid(&a[at(t, t)])?;
                for j in t..cols {
                    a[at(i, j)] = a[at(i, j)].sub(&q.mul(&a[at(t, j)])?)?;
                }
                clean &= a[at(i, t)].s_is_zero();
            }
            for j in t + 1..cols {
                if a[at(t, j)].s_is_zero() {
                    continue;
                }
                let q = a[at(t, j)].div_euclid(&a[at(t, t)])?;
                for i in t..rows {
                    a[at(i, j)] = a[at(i, j)].sub(&q.mul(&a[at(i, t)])?)?;
                }
                clean &= a[at(t, j)].s_is_zero();
            }
            if !clean {
                // a remainder smaller than the pivot survived; promote it
                let mut best = (t, t);
                for i in t + 1..rows {
                    let v = &a[at(i, t)];
                    if !v.s_is_zero() && v.abs_lt(&a[at(best.0, best.1)]) {
                        best = (i, t);
                    }
                }
                for j in t + 1..cols {
                    let v = &a[at(t, j)];
                    if !v.s_is_zero() && v.abs_lt(&a[at(best.0, best.1)]) {
                        best = (t, j);
                    }
                }
                swap_rows(&mut a, cols, t, best.0);
                swap_cols(&mut a, cols, rows, t, best.1);
                continue;
            }
            let pivot = a[at(t, t)].clone();
            let offender = (t + 1..rows)
                .find(|&i| (t + 1..cols).any(|j| !a[at(i, j)].is_multiple_of(&pivot)));
            match offender {
                Some(i) => {
                    for j in t..cols {
                        a[at(t, j)] = a[at(t, j)].add(&a[at(i, j)])?;
                    }
                }
                None => break,
            }
        }
        diag.push(a[at(t, t)].abs()?);
    }
    Some(diag)
}

fn swap_rows<S>(a: &mut [S], cols: usize, r1: usize, r2: usize) {
    if r1 != r2 {
        for j in 0..cols {
            a.swap(r1 * cols + j, r2 * cols + j);
        }
    }
}

fn swap_cols<S>(a: &mut [S], cols: usize, rows: usize, c1: usize, c2: usize) {
    if c1 != c2 {
        for i in 0..rows {
            a.swap(i * cols + c1, i * cols + c2);
        }
    }
}
