//! Variable-weighted expansions of Laplacian characteristic polynomials by
//! direct subset iteration. No square roots of the weight matrices appear:
//! `pdet(X∂Y∂ᵗ)` is expanded over minors of `∂` itself.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{Monomial, MultiPoly};
use crate::error::{Error, Result};
use crate::linalg::{column_bases, rank, row_bases, Combinations, IntMatrix, MinorEvaluator};

fn check_vars(b: &IntMatrix, xvars: &[usize], yvars: &[usize]) -> Result<()> {
    if xvars.len() != b.rows() || yvars.len() != b.cols() {
        return Err(Error::DimensionMismatch(format!(
            "{} row and {} column variables for a {}x{} matrix",
            xvars.len(),
            yvars.len(),
            b.rows(),
            b.cols()
        )));
    }
    Ok(())
}

fn monomial(xvars: &[usize], rows: &[usize], yvars: &[usize], cols: &[usize]) -> Result<Monomial> {
    Monomial::from_vars(
        rows.iter()
            .map(|&i| xvars[i])
            .chain(cols.iter().map(|&j| yvars[j])),
    )
}

/// `det(t·1 + X·B·Y·Bᵗ)` as coefficients indexed by the power of `t`, where
/// `X`, `Y` are diagonal matrices of the given variables.
pub fn weighted_laplacian_charpoly(
    b: &IntMatrix,
    xvars: &[usize],
    yvars: &[usize],
) -> Result<Vec<MultiPoly>> {
    check_vars(b, xvars, yvars)?;
    let n = b.rows();
    let ev = MinorEvaluator::new(b);
    let mut coeffs = vec![MultiPoly::zero(); n + 1];
    for k in 0..=n.min(b.cols()) {
        for rows in Combinations::new(n, k) {
            for cols in Combinations::new(b.cols(), k) {
                let d = ev.minor(rows.as_slice(), cols.as_slice());
                if d.is_zero() {
                    continue;
                }
                let m = monomial(xvars, rows.as_slice(), yvars, cols.as_slice())?;
                coeffs[n - k].add_term(m, &d * &d);
            }
        }
    }
    Ok(coeffs)
}

/// `pdet(X·B·Y·Bᵗ)`: the sum of `x^I y^J det(B[I,J])²` over `|I| = |J| = rank(B)`.
///
/// Only row bases and column bases can carry a nonzero maximal minor, so the
/// double loop runs over those.
pub fn weighted_pdet(b: &IntMatrix, xvars: &[usize], yvars: &[usize]) -> Result<MultiPoly> {
    check_vars(b, xvars, yvars)?;
    if rank(b) == 0 {
        return Ok(MultiPoly::one());
    }
    let rb = row_bases(b);
    let cb = column_bases(b);
    let ev = MinorEvaluator::new(b);
    let mut out = MultiPoly::zero();
    for rows in &rb {
        for cols in &cb {
            let d = ev.minor(rows.as_slice(), cols.as_slice());
            let m = monomial(xvars, rows.as_slice(), yvars, cols.as_slice())?;
            out.add_term(m, &d * &d);
        }
    }
    Ok(out)
}

/// `pdet(X·M)` for square `M`: the last nonzero `Σ_{|I|=k} x^I det(M[I,I])`.
pub fn weighted_principal_pdet(m: &IntMatrix, vars: &[usize]) -> Result<MultiPoly> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    if vars.len() != m.rows() {
        return Err(Error::DimensionMismatch(format!(
            "{} variables for a {}x{} matrix",
            vars.len(),
            m.rows(),
            m.cols()
        )));
    }
    let ev = MinorEvaluator::new(m);
    for k in (1..=rank(m)).rev() {
        let mut sum = MultiPoly::zero();
        for idx in Combinations::new(m.rows(), k) {
            let d: BigInt = ev.minor(idx.as_slice(), idx.as_slice());
            if !d.is_zero() {
                sum.add_term(Monomial::from_vars(idx.iter().map(|i| vars[i]))?, d);
            }
        }
        if !sum.is_zero() {
            return Ok(sum);
        }
    }
    Ok(MultiPoly::one())
}
