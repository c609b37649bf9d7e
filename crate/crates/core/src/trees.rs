//! Cellular spanning trees and the torsion tree enumerators
//! `τᵢ(S) = Σ_T |H̃ᵢ₋₁(T)|²` and `τᵢ(S, x) = Σ_T x^T |H̃ᵢ₋₁(T)|²`.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::complex::{relative_homology_order, require_acyclic, CellComplex, Subcomplex};
use crate::error::{Error, Result};
use crate::linalg::{binomial, pdet, rank, smith_normal_form, Combinations, IndexSet, IntMatrix, MinorEvaluator};
use crate::poly::{weighted_pdet, Monomial, MultiPoly, VarTable};

/// Default cap on the number of candidate facet sets an enumeration may visit.
pub const DEFAULT_BUDGET: u128 = 10_000_000;

/// An `i`-tree: the `(i−1)`-skeleton plus the `i`-cells at `facets`
/// (positions among the `i`-cells), with `torsion = |H̃ᵢ₋₁(T)|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeRecord {
    pub dim: i32,
    pub facets: IndexSet,
    pub torsion: BigInt,
}

impl TreeRecord {
    pub fn facet_ids(&self, c: &CellComplex) -> Vec<String> {
        let start = c.dim_range(self.dim).start;
        c.ids(self.facets.iter().map(|p| start + p))
    }

    pub fn subcomplex<'a>(&self, c: &'a CellComplex) -> Subcomplex<'a> {
        Subcomplex::restrict_positions(c, self.dim, self.facets.as_slice())
    }

    /// `{"facets":[…],"torsion":N}`.
    pub fn to_json_line(&self, c: &CellComplex) -> String {
        let torsion = match self.torsion.to_u64() {
            Some(t) => serde_json::Value::from(t),
            None => serde_json::Value::from(self.torsion.to_string()),
        };
        serde_json::json!({ "facets": self.facet_ids(c), "torsion": torsion }).to_string()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TauResult {
    pub value: BigInt,
    pub tree_count: u64,
    pub max_torsion: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedTau {
    pub value: MultiPoly,
    pub tree_count: u64,
    pub max_torsion: BigInt,
}

/// Which tree conditions a facet set satisfies; any two imply the third.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeCheck {
    /// `H̃ᵢ(T) = 0`: the chosen columns are independent.
    pub top_acyclic: bool,
    /// `H̃ᵢ₋₁(T)` is finite: the chosen columns span the column space.
    pub finite_below: bool,
    /// The number of chosen cells equals `rank ∂ᵢ`.
    pub count_matches: bool,
}

impl TreeCheck {
    pub fn is_tree(&self) -> bool {
        self.top_acyclic && self.finite_below && self.count_matches
    }
}

fn check_tree_dim(c: &CellComplex, i: i32) -> Result<()> {
    if i < -1 || i > c.dim() {
        return Err(Error::DimOutOfRange {
            dim: i,
            min: -1,
            max: c.dim(),
        });
    }
    require_acyclic(c, i - 1)
}

pub fn is_tree(c: &CellComplex, i: i32, facets: &IndexSet) -> Result<TreeCheck> {
    check_tree_dim(c, i)?;
    let b = c.boundary_matrix(i)?;
    facets.check_bound(b.cols())?;
    let r = rank(&b);
    let rows: Vec<usize> = (0..b.rows()).collect();
    let rj = MinorEvaluator::new(&b).rank_of(&rows, facets.as_slice());
    Ok(TreeCheck {
        top_acyclic: rj == facets.len(),
        finite_below: rj == r,
        count_matches: facets.len() == r,
    })
}

/// Greedy row basis: rows added in order whenever they raise the rank.
fn greedy_row_basis(b: &IntMatrix) -> Vec<usize> {
    let ev = MinorEvaluator::new(b);
    let cols: Vec<usize> = (0..b.cols()).collect();
    let mut rows = Vec::new();
    for i in 0..b.rows() {
        rows.push(i);
        if ev.rank_of(&rows, &cols) < rows.len() {
            rows.pop();
        }
    }
    rows
}

/// The colex-`rank`-th `k`-subset of `0..n`.
fn unrank_colex(mut rank: u128, n: usize, k: usize) -> Vec<usize> {
    let mut out = vec![0; k];
    let mut hi = n;
    for j in (1..=k).rev() {
        let mut c = j - 1;
        while c + 1 < hi && binomial(c + 1, j) <= rank {
            c += 1;
        }
        out[j - 1] = c;
        rank -= binomial(c, j);
        hi = c;
    }
    out
}

/// All `i`-trees in colex order of their facet sets.
///
/// Candidates are the `rank ∂ᵢ`-subsets of `i`-cells; a candidate is a tree
/// when its maximal minor against a fixed row basis is nonzero. The torsion
/// order is the product of the Smith invariants of the chosen columns, which
/// is `|H̃ᵢ₋₁(T)|` because `T` and `S` share their `(i−1)`-skeleton.
pub fn enumerate_trees(c: &CellComplex, i: i32, budget: u128) -> Result<Vec<TreeRecord>> {
    check_tree_dim(c, i)?;
    let b = c.boundary_matrix(i)?;
    let r = rank(&b);
    let m = b.cols();
    let total = binomial(m, r);
    if total > budget {
        return Err(Error::BudgetExceeded {
            subsets: total,
            budget,
        });
    }
    let row_basis = greedy_row_basis(&b);
    let all_rows: Vec<usize> = (0..b.rows()).collect();
    let ev = MinorEvaluator::new(&b);

    let test = |cols: &[usize]| -> Option<TreeRecord> {
        let minor = ev.minor(&row_basis, cols);
        if minor.is_zero() {
            return None;
        }
        // the torsion order is the gcd of all maximal minors, so a unit minor settles it
        let torsion = if minor.magnitude().is_one() {
            BigInt::one()
        } else {
            smith_normal_form(&b.select_unchecked(&all_rows, cols)).nonzero_product()
        };
        Some(TreeRecord {
            dim: i,
            facets: IndexSet::from_sorted_unchecked(cols.to_vec()),
            torsion,
        })
    };

    let chunks = (rayon::current_num_threads() as u128 * 16).clamp(1, total.max(1));
    let per = total.div_ceil(chunks);
    let found: Vec<Vec<TreeRecord>> = (0..chunks)
        .into_par_iter()
        .map(|k| {
            let start = k * per;
            let end = ((k + 1) * per).min(total);
            let mut out = Vec::new();
            if start >= end {
                return out;
            }
            let mut cur = unrank_colex(start, m, r);
            for step in start..end {
                out.extend(test(&cur));
                if step + 1 < end {
                    Combinations::advance(&mut cur, m);
                }
            }
            out
        })
        .collect();
    Ok(found.into_iter().flatten().collect())
}

fn summarize(trees: &[TreeRecord]) -> (u64, BigInt) {
    let max = trees.iter().map(|t| t.torsion.clone()).max().unwrap_or_else(BigInt::one);
    (trees.len() as u64, max)
}

/// `τᵢ(S)` by enumeration.
pub fn tau(c: &CellComplex, i: i32, budget: u128) -> Result<TauResult> {
    let trees = enumerate_trees(c, i, budget)?;
    let value = trees.iter().map(|t| &t.torsion * &t.torsion).sum();
    let (tree_count, max_torsion) = summarize(&trees);
    Ok(TauResult {
        value,
        tree_count,
        max_torsion,
    })
}

/// `Σ_T x^T |H̃ᵢ₋₁(T)|²` given one variable per tree.
pub fn weigh_trees(trees: &[TreeRecord], vars: &[usize]) -> Result<MultiPoly> {
    let mut value = MultiPoly::zero();
    for t in trees {
        let m = Monomial::from_vars(t.facets.iter().map(|p| vars[p]))?;
        value.add_term(m, &t.torsion * &t.torsion);
    }
    Ok(value)
}

/// `τᵢ(S, x)` by enumeration; `vars[p]` is the variable of the `p`-th `i`-cell.
pub fn tau_weighted(c: &CellComplex, i: i32, vars: &[usize], budget: u128) -> Result<WeightedTau> {
    if vars.len() != c.f(i) {
        return Err(Error::DimensionMismatch(format!(
            "{} variables for {} cells of dimension {i}",
            vars.len(),
            c.f(i)
        )));
    }
    let trees = enumerate_trees(c, i, budget)?;
    let (tree_count, max_torsion) = summarize(&trees);
    Ok(WeightedTau {
        value: weigh_trees(&trees, vars)?,
        tree_count,
        max_torsion,
    })
}

/// `pdet(∂∂ᵗ)`, using whichever of `∂∂ᵗ`, `∂ᵗ∂` is smaller.
pub fn laplacian_pdet(b: &IntMatrix) -> BigInt {
    let lap = if b.rows() <= b.cols() { b.gram() } else { b.transpose().gram() };
    pdet(&lap).expect("Gram matrices are square")
}

/// `(τ₋₁, τ₀, …, τᵢ)` from `τ₋₁ = 1` and `τⱼ = pdet(∂ⱼ∂ⱼᵗ) / τⱼ₋₁`.
pub fn tau_chain(c: &CellComplex, i: i32) -> Result<Vec<BigInt>> {
    check_tree_dim(c, i)?;
    let mut taus = vec![BigInt::one()];
    for j in 0..=i {
        let p = laplacian_pdet(&c.boundary_matrix(j)?);
        let prev = taus.last().expect("chain starts at τ₋₁");
        let (q, rem) = num_integer::Integer::div_rem(&p, prev);
        if !rem.is_zero() {
            return Err(Error::InexactDivision(format!("pdet(∂{j}∂{j}ᵗ) = {p} is not divisible by τ{} = {prev}", j - 1)));
        }
        taus.push(q);
    }
    Ok(taus)
}

/// `τᵢ(S)` without enumeration.
pub fn tau_via_pdet_chain(c: &CellComplex, i: i32) -> Result<BigInt> {
    Ok(tau_chain(c, i)?.pop().expect("chain is nonempty"))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorizationReport {
    pub dim: i32,
    pub pdet: BigInt,
    pub tau_below: BigInt,
    pub tau: BigInt,
    pub holds: bool,
    pub weighted: Option<WeightedFactorization>,
}

/// `weighted_pdet(∂ᵢ, x, y)` against `complement_x(τᵢ₋₁(S, x)) · τᵢ(S, y)`,
/// with `x` on the `(i−1)`-cells and `y` on the `i`-cells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedFactorization {
    pub vars: VarTable,
    pub lhs: MultiPoly,
    pub rhs: MultiPoly,
    pub holds: bool,
}

/// Checks `pdet(∂ᵢ∂ᵢᵗ) = τᵢ₋₁ τᵢ` with both enumerators enumerated, and
/// optionally the doubly weighted form.
pub fn verify_factorization(c: &CellComplex, i: i32, with_weights: bool, budget: u128) -> Result<FactorizationReport> {
    if i < 0 {
        return Err(Error::DimOutOfRange {
            dim: i,
            min: 0,
            max: c.dim(),
        });
    }
    let b = c.boundary_matrix(i)?;
    let below = enumerate_trees(c, i - 1, budget)?;
    let here = enumerate_trees(c, i, budget)?;
    let sq = |ts: &[TreeRecord]| -> BigInt { ts.iter().map(|t| &t.torsion * &t.torsion).sum() };
    let (tau_below, tau) = (sq(&below), sq(&here));
    let p = laplacian_pdet(&b);
    let weighted = if with_weights {
        let (n, m) = (b.rows(), b.cols());
        let x: Vec<usize> = (0..n).collect();
        let y: Vec<usize> = (n..n + m).collect();
        let lhs = weighted_pdet(&b, &x, &y)?;
        let rhs = weigh_trees(&below, &x)?.complement_transform(&x).try_mul(&weigh_trees(&here, &y)?)?;
        Some(WeightedFactorization {
            vars: VarTable::xy(n, m),
            holds: lhs == rhs,
            lhs,
            rhs,
        })
    } else {
        None
    };
    Ok(FactorizationReport {
        dim: i,
        holds: p == &tau_below * &tau,
        pdet: p,
        tau_below,
        tau,
        weighted,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairTorsionReport {
    pub dim: i32,
    pub pairs_checked: usize,
    pub total_pairs: u128,
    /// One line per pair where the three quantities disagree.
    pub failures: Vec<String>,
}

impl PairTorsionReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

/// For pairs of an `i`-tree `T` and an `(i−1)`-tree `T′`, with `J` the facets
/// of `T` and `I` the `(i−1)`-cells that are not facets of `T′`, compares
/// `|det ∂[I,J]|`, `|H̃ᵢ₋₁(T, T′)|` and `|H̃ᵢ₋₁(T)|·|H̃ᵢ₋₂(T′)|`.
/// Checks every pair when there are at most `samples`, otherwise a seeded
/// random sample.
pub fn pair_torsion_check(c: &CellComplex, i: i32, samples: usize, seed: u64, budget: u128) -> Result<PairTorsionReport> {
    if i < 0 {
        return Err(Error::DimOutOfRange {
            dim: i,
            min: 0,
            max: c.dim(),
        });
    }
    let b = c.boundary_matrix(i)?;
    let tops = enumerate_trees(c, i, budget)?;
    let lows = enumerate_trees(c, i - 1, budget)?;
    let total = tops.len() as u128 * lows.len() as u128;
    let picks: Vec<usize> = if total <= samples as u128 {
        (0..total as usize).collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut v = sample(&mut rng, total as usize, samples).into_vec();
        v.sort_unstable();
        v
    };
    let ev = MinorEvaluator::new(&b);
    let failures: Vec<String> = picks
        .par_iter()
        .filter_map(|&k| {
            let (t, tl) = (&tops[k / lows.len()], &lows[k % lows.len()]);
            let rows = tl.facets.complement(b.rows());
            let det = ev.minor(rows.as_slice(), t.facets.as_slice()).abs();
            let big = t.subcomplex(c);
            let small = tl.subcomplex(c);
            let rel = relative_homology_order(&big, &small, i - 1).ok().flatten();
            let prod = &t.torsion * &tl.torsion;
            (rel.as_ref() != Some(&det) || det != prod).then(|| {
                format!(
                    "T = {:?}, T′ = {:?}: |det| = {det}, |H(T,T′)| = {}, product = {prod}",
                    t.facet_ids(c),
                    tl.facet_ids(c),
                    rel.map_or("infinite".to_string(), |r| r.to_string())
                )
            })
        })
        .collect();
    Ok(PairTorsionReport {
        dim: i,
        pairs_checked: picks.len(),
        total_pairs: total,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::reduced_homology;
    use crate::families::{polygon, pyramid, simplex, simplex_skeleton};
    use crate::linalg::column_bases;

    fn cycle(n: usize) -> CellComplex {
        let p = polygon(n).unwrap();
        let c = p.complex();
        let mut b = CellComplex::builder().regular(true);
        for cell in c.cells().iter().skip(1).filter(|x| x.dim() <= 1) {
            let bd: Vec<(String, i64)> = cell
                .boundary()
                .iter()
                .filter(|&&(f, _)| f != 0)
                .map(|&(f, k)| (c.cell(f).id().to_string(), k))
                .collect();
            b.cell_owned(cell.id().to_string(), cell.dim(), bd);
        }
        b.build().unwrap()
    }

    #[test]
    fn unranking_matches_iteration() {
        for (pos, s) in Combinations::new(7, 3).enumerate() {
            assert_eq!(unrank_colex(pos as u128, 7, 3), s.as_slice());
        }
        assert_eq!(unrank_colex(0, 4, 0), Vec::<usize>::new());
    }

    #[test]
    fn triangle_trees() {
        let c = cycle(3);
        let trees = enumerate_trees(&c, 1, DEFAULT_BUDGET).unwrap();
        assert_eq!(trees.len(), 3);
        assert!(trees.iter().all(|t| t.torsion.is_one()));
        assert!(is_tree(&c, 1, &IndexSet::new(vec![0, 1]).unwrap()).unwrap().is_tree());
        let all = is_tree(&c, 1, &IndexSet::new(vec![0, 1, 2]).unwrap()).unwrap();
        assert!(!all.is_tree() && !all.count_matches && !all.top_acyclic && all.finite_below);
        assert_eq!(tau(&c, 0, DEFAULT_BUDGET).unwrap().value, BigInt::from(3));
        assert_eq!(tau_via_pdet_chain(&c, 0).unwrap(), BigInt::from(3));
        assert_eq!(tau(&c, -1, DEFAULT_BUDGET).unwrap().value, BigInt::one());
    }

    #[test]
    fn trees_are_column_bases() {
        let s = simplex(5).unwrap();
        let c = s.complex();
        for i in 0..=2 {
            let trees: Vec<IndexSet> = enumerate_trees(c, i, DEFAULT_BUDGET).unwrap().into_iter().map(|t| t.facets).collect();
            assert_eq!(trees, column_bases(&c.boundary_matrix(i).unwrap()));
        }
    }

    #[test]
    fn kalai_small_cases() {
        let s3 = simplex(3).unwrap();
        assert_eq!(tau(s3.complex(), 1, DEFAULT_BUDGET).unwrap().value, BigInt::from(3));
        let s5 = simplex(5).unwrap();
        assert_eq!(tau(s5.complex(), 2, DEFAULT_BUDGET).unwrap().value, BigInt::from(125));
        assert_eq!(tau_via_pdet_chain(s5.complex(), 2).unwrap(), BigInt::from(125));
    }

    #[test]
    fn torsion_matches_homology_of_selector() {
        let c = simplex_skeleton(6, 2).unwrap();
        let trees = enumerate_trees(&c, 2, DEFAULT_BUDGET).unwrap();
        let twisted = trees.iter().find(|t| t.torsion == BigInt::from(2)).expect("a projective plane");
        let h = reduced_homology(&twisted.subcomplex(&c), 1);
        assert_eq!(h.order(), Some(BigInt::from(2)));
        assert!(reduced_homology(&twisted.subcomplex(&c), 2).is_zero());
        assert!(reduced_homology(&twisted.subcomplex(&c), 0).is_zero());
    }

    #[test]
    fn budget_is_enforced() {
        let s = simplex(7).unwrap();
        assert!(matches!(
            enumerate_trees(s.complex(), 3, DEFAULT_BUDGET),
            Err(Error::BudgetExceeded { subsets: 3_247_943_160, .. })
        ));
        assert!(matches!(enumerate_trees(&cycle(5), 1, 2), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn acyclicity_is_required() {
        let c = cycle(4);
        assert!(matches!(tau(&c, 2, DEFAULT_BUDGET), Err(Error::DimOutOfRange { .. })));
        let rp2 = crate::complex::tests::projective_plane();
        assert!(matches!(tau(&rp2, 2, DEFAULT_BUDGET), Err(Error::NotAcyclic { dim: 1, .. })));
        assert!(matches!(tau_chain(&rp2, 2), Err(Error::NotAcyclic { .. })));
    }

    #[test]
    fn factorization_small_cases() {
        let c = cycle(3);
        let r = verify_factorization(&c, 1, true, DEFAULT_BUDGET).unwrap();
        assert_eq!((r.pdet.clone(), r.tau_below.clone(), r.tau.clone()), (9.into(), 3.into(), 3.into()));
        assert!(r.holds && r.weighted.unwrap().holds);
        let pyr = pyramid(&polygon(4).unwrap()).unwrap();
        for i in 0..=3 {
            let r = verify_factorization(pyr.complex(), i, true, DEFAULT_BUDGET).unwrap();
            assert!(r.holds && r.weighted.unwrap().holds, "i = {i}");
        }
    }

    #[test]
    fn pair_torsion_small_cases() {
        let c = cycle(3);
        let r = pair_torsion_check(&c, 1, 50, 7, DEFAULT_BUDGET).unwrap();
        assert_eq!((r.pairs_checked, r.total_pairs), (9, 9));
        assert!(r.holds());
        let s5 = simplex(5).unwrap();
        let r = pair_torsion_check(s5.complex(), 2, 50, 7, DEFAULT_BUDGET).unwrap();
        assert_eq!(r.pairs_checked, 50);
        assert!(r.holds(), "{:?}", r.failures);
    }
}
