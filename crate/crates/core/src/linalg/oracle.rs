//! Brute-force subset oracles. These never touch the characteristic
//! polynomial, so they serve as an independent check on it.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{rank, Combinations, IndexSet, IntMatrix, MinorEvaluator};

/// `Σ det(B[I,J])²` over all `I`, `J` of size `rank(B)`, which equals
/// `pdet(B·Bᵗ)`.
pub fn binet_cauchy_pdet(b: &IntMatrix) -> BigInt {
    let r = rank(b);
    let ev = MinorEvaluator::new(b);
    let mut total = BigInt::zero();
    for rows in Combinations::new(b.rows(), r) {
        for cols in Combinations::new(b.cols(), r) {
            let d = ev.minor(rows.as_slice(), cols.as_slice());
            total += &d * &d;
        }
    }
    total
}

/// Every rank-sized set of rows spanning the row space, in colex order.
pub fn row_bases(b: &IntMatrix) -> Vec<IndexSet> {
    let r = rank(b);
    let ev = MinorEvaluator::new(b);
    let all_cols: Vec<usize> = (0..b.cols()).collect();
    Combinations::new(b.rows(), r)
        .filter(|rows| ev.rank_of(rows.as_slice(), &all_cols) == r)
        .collect()
}

/// Every rank-sized set of columns spanning the column space, in colex order.
pub fn column_bases(b: &IntMatrix) -> Vec<IndexSet> {
    let r = rank(b);
    let ev = MinorEvaluator::new(b);
    let all_rows: Vec<usize> = (0..b.rows()).collect();
    Combinations::new(b.cols(), r)
        .filter(|cols| ev.rank_of(&all_rows, cols.as_slice()) == r)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sets(v: &[&[usize]]) -> Vec<IndexSet> {
        v.iter().map(|s| IndexSet::new(s.to_vec()).unwrap()).collect()
    }

    fn cycle3() -> IntMatrix {
        IntMatrix::from_rows(&[[-1, 0, 1], [1, -1, 0], [0, 1, -1]]).unwrap()
    }

    #[test]
    fn binet_cauchy_examples() {
        let b = IntMatrix::from_rows(&[[1, 0], [0, 0]]).unwrap();
        assert_eq!(binet_cauchy_pdet(&b), BigInt::from(1));
        assert_eq!(binet_cauchy_pdet(&cycle3()), BigInt::from(9));
    }

    #[test]
    fn basis_examples() {
        let id = IntMatrix::identity(2);
        assert_eq!(row_bases(&id), sets(&[&[0, 1]]));
        assert_eq!(column_bases(&id), sets(&[&[0, 1]]));

        let b = IntMatrix::from_rows(&[[1, 1]]).unwrap();
        assert_eq!(row_bases(&b), sets(&[&[0]]));
        assert_eq!(column_bases(&b), sets(&[&[0], &[1]]));

        let all_pairs = sets(&[&[0, 1], &[0, 2], &[1, 2]]);
        assert_eq!(row_bases(&cycle3()), all_pairs);
        assert_eq!(column_bases(&cycle3()), all_pairs);
    }
}
