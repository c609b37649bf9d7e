use super::IndexSet;

/// `C(n, k)`, saturating at `u128::MAX`.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) stays integral at every step
        let Some(next) = acc.checked_mul((n - i) as u128) else {
            return u128::MAX;
        };
        acc = next / (i as u128 + 1);
    }
    acc
}

/// All `k`-subsets of `0..n` in colexicographic order.
///
/// Colex order compares subsets by their largest differing element, so the
/// subsets of `0..n-1` come before any subset containing `n-1`.
#[derive(Clone, Debug)]
pub struct Combinations {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Combinations {
    pub fn new(n: usize, k: usize) -> Self {
        let current = (k <= n).then(|| (0..k).collect());
        Combinations { n, current }
    }

    /// Advances `c` to its colex successor; false when `c` was the last one.
    pub(crate) fn advance(c: &mut [usize], n: usize) -> bool {
        let k = c.len();
        for j in 0..k {
            let limit = if j + 1 < k { c[j + 1] } else { n };
            if c[j] + 1 < limit {
                c[j] += 1;
                for (l, slot) in c.iter_mut().enumerate().take(j) {
                    *slot = l;
                }
                return true;
            }
        }
        false
    }
}

impl Iterator for Combinations {
    type Item = IndexSet;

    fn next(&mut self) -> Option<IndexSet> {
        let cur = self.current.as_mut()?;
        let out = IndexSet::from_sorted_unchecked(cur.clone());
        if !Self::advance(cur, self.n) {
            self.current = None;
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn colex_order_of_two_subsets() {
        let got: Vec<Vec<usize>> = Combinations::new(4, 2).map(|s| s.as_slice().to_vec()).collect();
        assert_eq!(
            got,
            vec![vec![0, 1], vec![0, 2], vec![1, 2], vec![0, 3], vec![1, 3], vec![2, 3]]
        );
    }

    #[test]
    fn degenerate_sizes() {
        assert_eq!(Combinations::new(3, 0).count(), 1);
        assert_eq!(Combinations::new(0, 0).count(), 1);
        assert_eq!(Combinations::new(2, 3).count(), 0);
    }

    #[test]
    fn counts_match_binomial() {
        for n in 0..9 {
            for k in 0..=n {
                assert_eq!(Combinations::new(n, k).count() as u128, binomial(n, k));
            }
        }
        assert_eq!(binomial(35, 20), 3_247_943_160);
        assert_eq!(binomial(20, 10), 184_756);
    }
}
