use num_bigint::BigInt;
use num_traits::One;

use super::scalar::{with_fallback, Scalar};
use super::{IndexSet, IntMatrix};
use crate::error::{Error, Result};

/// Bareiss elimination on an `n x n` row-major buffer.
pub(crate) fn bareiss_det<S: Scalar>(mut a: Vec<S>, n: usize) -> Option<S> {
    if n == 0 {
        return Some(S::s_one());
    }
    let mut negate = false;
    let mut prev = S::s_one();
    for k in 0..n {
        if a[k * n + k].s_is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i * n + k].s_is_zero()) else {
                return Some(S::s_zero());
            };
            for j in 0..n {
                a.swap(k * n + j, p * n + j);
            }
            negate = !negate;
        }
        let pivot = a[k * n + k].clone();
        for i in k + 1..n {
            let lead = a[i * n + k].clone();
            for j in k + 1..n {
                a[i * n + j] = S::bareiss(&a[i * n + j], &pivot, &lead, &a[k * n + j], &prev)?;
            }
        }
        prev = pivot;
    }
    let d = a[n * n - 1].clone();
    if negate {
        d.neg()
    } else {
        Some(d)
    }
}

/// Rank by fraction-free row echelon reduction.
pub(crate) fn bareiss_rank<S: Scalar>(mut a: Vec<S>, rows: usize, cols: usize) -> Option<usize> {
    let mut r = 0;
    let mut prev = S::s_one();
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i * cols + c].s_is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                a.swap(r * cols + j, p * cols + j);
            }
        }
        let pivot = a[r * cols + c].clone();
        for i in r + 1..rows {
            let lead = a[i * cols + c].clone();
            for j in c + 1..cols {
                a[i * cols + j] = S::bareiss(&a[i * cols + j], &pivot, &lead, &a[r * cols + j], &prev)?;
            }
            a[i * cols + c] = S::s_zero();
        }
        prev = pivot;
        r += 1;
    }
    Some(r)
}

pub(crate) fn det_of_entries(entries: &[BigInt], n: usize) -> BigInt {
    with_fallback(
        entries,
        |small| bareiss_det(small, n).map(BigInt::from),
        |big| bareiss_det(big, n).expect("big integer elimination cannot overflow"),
    )
}

/// Determinant of a square matrix.
pub fn det(m: &IntMatrix) -> Result<BigInt> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    Ok(det_of_entries(m.entries(), m.rows()))
}

/// Rank over the rationals.
pub fn rank(m: &IntMatrix) -> usize {
    let (rows, cols) = (m.rows(), m.cols());
    with_fallback(
        m.entries(),
        |small| bareiss_rank(small, rows, cols),
        |big| bareiss_rank(big, rows, cols).expect("big integer elimination cannot overflow"),
    )
}

/// Determinant of the submatrix on rows `rows` and columns `cols`.
pub fn minor_det(m: &IntMatrix, rows: &IndexSet, cols: &IndexSet) -> Result<BigInt> {
    if rows.len() != cols.len() {
        return Err(Error::DimensionMismatch(format!(
            "minor needs |I| = |J|, got {} and {}",
            rows.len(),
            cols.len()
        )));
    }
    if rows.is_empty() {
        return Ok(BigInt::one());
    }
    let sub = m.select(rows, cols)?;
    det(&sub)
}

const SMALL_PRIME: u64 = (1 << 31) - 1;

/// `det mod SMALL_PRIME` by Gaussian elimination, returned as the symmetric
/// residue. Exact when `|det| < SMALL_PRIME / 2`.
fn det_small_prime(a: &[i128], n: usize) -> i64 {
    const P: u64 = SMALL_PRIME;
    let inv = |x: u64| {
        let (mut r, mut b, mut e) = (1u64, x, P - 2);
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % P;
            }
            b = b * b % P;
            e >>= 1;
        }
        r
    };
    let mut m: Vec<u64> = a.iter().map(|&x| x.rem_euclid(P as i128) as u64).collect();
    // rows are rescaled by their pivot instead of dividing; `scale` undoes it
    let (mut d, mut scale) = (1u64, 1u64);
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| m[i * n + k] != 0) else {
            return 0;
        };
        if p != k {
            for j in k..n {
                m.swap(k * n + j, p * n + j);
            }
            d = P - d;
        }
        let pivot = m[k * n + k];
        d = d * pivot % P;
        for i in k + 1..n {
            let lead = m[i * n + k];
            if lead == 0 {
                continue;
            }
            let neg = P - lead;
            for j in k + 1..n {
                m[i * n + j] = (pivot * m[i * n + j] + neg * m[k * n + j]) % P;
            }
            scale = scale * pivot % P;
        }
    }
    d = d * inv(scale) % P;
    if d > P / 2 {
        d as i64 - P as i64
    } else {
        d as i64
    }
}

/// Repeated minors and ranks of one fixed matrix.
///
/// Keeps an `i128` copy of the entries when they fit so that hot enumeration
/// loops avoid big-integer allocation.
#[derive(Clone, Debug)]
pub struct MinorEvaluator<'a> {
    matrix: &'a IntMatrix,
    small: Option<Vec<i128>>,
}

impl<'a> MinorEvaluator<'a> {
    pub fn new(matrix: &'a IntMatrix) -> Self {
        use num_traits::ToPrimitive;
        let small = matrix
            .entries()
            .iter()
            .map(|v| v.to_i64().map(i128::from))
            .collect();
        MinorEvaluator { matrix, small }
    }

    pub fn matrix(&self) -> &IntMatrix {
        self.matrix
    }

    /// `det M[rows, cols]`; slices must have equal length and be in range.
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> BigInt {
        debug_assert_eq!(rows.len(), cols.len());
        let k = rows.len();
        if let Some(small) = &self.small {
            let w = self.matrix.cols();
            let mut buf = Vec::with_capacity(k * k);
            for &i in rows {
                for &j in cols {
                    buf.push(small[i * w + j]);
                }
            }
            // Hadamard: |det| ≤ Π column norms
            let sq: f64 = (0..k)
                .map(|j| (0..k).map(|i| (buf[i * k + j] as f64).powi(2)).sum::<f64>())
                .product();
            if sq < ((SMALL_PRIME / 2) as f64).powi(2) {
                return BigInt::from(det_small_prime(&buf, k));
            }
            if let Some(d) = bareiss_det(buf, k) {
                return BigInt::from(d);
            }
        }
        let sub = self.matrix.select_unchecked(rows, cols);
        bareiss_det(sub.entries().to_vec(), k).expect("big integer elimination cannot overflow")
    }

    /// Rank of the submatrix on the given rows and columns.
    pub fn rank_of(&self, rows: &[usize], cols: &[usize]) -> usize {
        if let Some(small) = &self.small {
            let w = self.matrix.cols();
            let mut buf = Vec::with_capacity(rows.len() * cols.len());
            for &i in rows {
                for &j in cols {
                    buf.push(small[i * w + j]);
                }
            }
            if let Some(r) = bareiss_rank(buf, rows.len(), cols.len()) {
                return r;
            }
        }
        let sub = self.matrix.select_unchecked(rows, cols);
        bareiss_rank(sub.entries().to_vec(), rows.len(), cols.len())
            .expect("big integer elimination cannot overflow")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(rows).unwrap()
    }

    fn cycle3() -> IntMatrix {
        // columns e01, e12, e20 with ∂e = head - tail
        m(&[&[-1, 0, 1], &[1, -1, 0], &[0, 1, -1]])
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&IntMatrix::zeros(3, 3)), 0);
        assert_eq!(rank(&IntMatrix::identity(3)), 3);
        assert_eq!(rank(&cycle3()), 2);
        assert_eq!(rank(&IntMatrix::zeros(0, 4)), 0);
    }

    #[test]
    fn minor_examples() {
        let a = m(&[&[1, 2], &[3, 4]]);
        assert_eq!(minor_det(&a, &IndexSet::empty(), &IndexSet::empty()).unwrap(), BigInt::one());
        assert_eq!(minor_det(&a, &IndexSet::full(2), &IndexSet::full(2)).unwrap(), BigInt::from(-2));
        let b = m(&[&[1, 0, 2], &[0, 1, 3]]);
        let j = IndexSet::new(vec![0, 2]).unwrap();
        assert_eq!(minor_det(&b, &IndexSet::full(2), &j).unwrap(), BigInt::from(3));
    }

    #[test]
    fn minor_errors() {
        let a = m(&[&[1, 2], &[3, 4]]);
        let one = IndexSet::new(vec![0]).unwrap();
        assert!(matches!(
            minor_det(&a, &one, &IndexSet::full(2)),
            Err(Error::DimensionMismatch(_))
        ));
        let out = IndexSet::new(vec![5]).unwrap();
        assert!(matches!(minor_det(&a, &out, &one), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn det_needs_pivoting() {
        let a = m(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]);
        assert_eq!(det(&a).unwrap(), BigInt::from(-1));
    }

    #[test]
    fn modular_minors_match_bareiss() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for n in 1..9 {
            for _ in 0..40 {
                let e: Vec<i64> = (0..n * n).map(|_| rng.random_range(-4..=4)).collect();
                let big: Vec<BigInt> = e.iter().map(|&x| BigInt::from(x)).collect();
                let a = IntMatrix::from_vec(n, n, big.clone()).unwrap();
                let all: Vec<usize> = (0..n).collect();
                let exact = bareiss_det(big, n).unwrap();
                assert_eq!(MinorEvaluator::new(&a).minor(&all, &all), exact);
            }
        }
    }

    #[test]
    fn overflowing_entries_fall_back_to_bigint() {
        let big = i64::MAX;
        let a = m(&[&[big, big - 1], &[big - 1, big]]);
        // (x^2 - (x-1)^2) = 2x - 1
        let x = BigInt::from(big);
        let expected = &x * 2 - 1;
        assert_eq!(det(&a).unwrap(), expected);
        let ev = MinorEvaluator::new(&a);
        assert_eq!(ev.minor(&[0, 1], &[0, 1]), expected);
    }
}
