use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::det::det_of_entries;
use super::modular::charpoly_multimodular;
use super::IntMatrix;
use crate::error::{Error, Result};
use crate::poly::UniPoly;

fn require_square(m: &IntMatrix) -> Result<()> {
    if m.is_square() {
        Ok(())
    } else {
        Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        })
    }
}

/// Below this size the interpolation route is used; above it the
/// multimodular one, which avoids big-integer elimination.
const MODULAR_FROM: usize = 16;

/// `det(t·1 + M)`.
pub fn charpoly_unsigned(m: &IntMatrix) -> Result<UniPoly> {
    require_square(m)?;
    if m.rows() >= MODULAR_FROM {
        Ok(charpoly_multimodular(&-m))
    } else {
        charpoly_by_interpolation(m)
    }
}

/// `det(t·1 + M)` from its values at `t = 0..=n`, each a fraction-free
/// determinant, by exact Newton interpolation.
pub fn charpoly_by_interpolation(m: &IntMatrix) -> Result<UniPoly> {
    require_square(m)?;
    let n = m.rows();
    let values: Vec<BigInt> = (0..=n)
        .into_par_iter()
        .map(|t| {
            let mut shifted = m.entries().to_vec();
            for i in 0..n {
                shifted[i * n + i] += t;
            }
            det_of_entries(&shifted, n)
        })
        .collect();
    Ok(interpolate_at_naturals(values))
}

/// `det(t·1 - M)`.
pub fn charpoly_signed(m: &IntMatrix) -> Result<UniPoly> {
    require_square(m)?;
    charpoly_unsigned(&-m)
}

/// Last nonzero coefficient of `det(t·1 + M)`.
///
/// The zero matrix of positive size has charpoly `tⁿ` and therefore
/// pseudodeterminant 1, the empty product.
pub fn pdet(m: &IntMatrix) -> Result<BigInt> {
    let p = charpoly_unsigned(m)?;
    Ok(p.lowest_nonzero()
        .map(|(_, c)| c.clone())
        .unwrap_or_else(BigInt::one))
}

/// Integer polynomial of degree at most `values.len() - 1` through
/// `(k, values[k])`.
fn interpolate_at_naturals(values: Vec<BigInt>) -> UniPoly {
    let n = values.len();
    // forward differences Δᵏf(0); each is divisible by k! for integer polynomials
    let mut diffs = values;
    let mut newton = Vec::with_capacity(n);
    let mut factorial = BigInt::one();
    for k in 0..n {
        if k > 0 {
            factorial *= k;
        }
        let (q, r) = num_integer::Integer::div_rem(&diffs[0], &factorial);
        debug_assert!(r.is_zero(), "non-integral Newton coefficient");
        newton.push(q);
        for i in 0..diffs.len() - 1 {
            diffs[i] = &diffs[i + 1] - &diffs[i];
        }
        diffs.pop();
    }
    // Horner over falling factorials: c₀ + t(c₁ + (t-1)(c₂ + …))
    let mut p = UniPoly::zero();
    for k in (0..n).rev() {
        let shift = UniPoly::from_coeffs(vec![BigInt::from(-(k as i64)), BigInt::one()]);
        p = &(&p * &shift) + &UniPoly::constant(newton[k].clone());
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(coeffs: &[i64]) -> UniPoly {
        UniPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(rows).unwrap()
    }

    #[test]
    fn unsigned_examples() {
        assert_eq!(charpoly_unsigned(&IntMatrix::zeros(2, 2)).unwrap(), poly(&[0, 0, 1]));
        assert_eq!(charpoly_unsigned(&m(&[&[0, 1], &[1, 0]])).unwrap(), poly(&[-1, 0, 1]));
        // ∂₁∂₁ᵗ of the 3-cycle: t³ + 6t² + 9t
        let lap = m(&[&[2, -1, -1], &[-1, 2, -1], &[-1, -1, 2]]);
        assert_eq!(charpoly_unsigned(&lap).unwrap(), poly(&[0, 9, 6, 1]));
    }

    #[test]
    fn routes_agree_above_threshold() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for n in [1, 5, 16, 23] {
            let a = IntMatrix::from_fn(n, n, |_, _| BigInt::from(rng.random_range(-9..=9)));
            assert_eq!(charpoly_multimodular(&-&a), charpoly_by_interpolation(&a).unwrap(), "n = {n}");
        }
        // entries large enough to need several primes
        let big = IntMatrix::from_fn(18, 18, |i, j| BigInt::from(((i * 31 + j * 17) % 23) as i64 * 1_000_003 - 11_000_000));
        assert_eq!(charpoly_unsigned(&big).unwrap(), charpoly_by_interpolation(&big).unwrap());
    }

    #[test]
    fn signed_examples() {
        assert_eq!(charpoly_signed(&IntMatrix::identity(2)).unwrap(), poly(&[1, -2, 1]));
        assert_eq!(charpoly_signed(&m(&[&[0, 1], &[-1, 0]])).unwrap(), poly(&[1, 0, 1]));
    }

    #[test]
    fn pdet_examples() {
        assert_eq!(pdet(&IntMatrix::identity(3)).unwrap(), BigInt::one());
        assert_eq!(pdet(&m(&[&[0, 1], &[1, 0]])).unwrap(), BigInt::from(-1));
        let lap = m(&[&[2, -1, -1], &[-1, 2, -1], &[-1, -1, 2]]);
        assert_eq!(pdet(&lap).unwrap(), BigInt::from(9));
        assert_eq!(pdet(&IntMatrix::zeros(0, 0)).unwrap(), BigInt::one());
        assert_eq!(pdet(&IntMatrix::zeros(3, 3)).unwrap(), BigInt::one());
    }

    #[test]
    fn nilpotent_pdet_is_leading_coefficient() {
        // charpoly t², no nonzero eigenvalues
        assert_eq!(pdet(&m(&[&[0, 1], &[0, 0]])).unwrap(), BigInt::one());
    }

    #[test]
    fn non_square_rejected() {
        assert!(matches!(
            charpoly_unsigned(&IntMatrix::zeros(2, 3)),
            Err(Error::NotSquare { rows: 2, cols: 3 })
        ));
        assert!(pdet(&IntMatrix::zeros(1, 2)).is_err());
    }
}
