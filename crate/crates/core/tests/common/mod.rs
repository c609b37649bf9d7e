//! Random matrix builders and linear-algebra properties shared by the
//! property tests and the acceptance run. Each property returns `Err` with a
//! description of the counterexample.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use pdetlab::linalg::{
    binet_cauchy_pdet, charpoly_by_interpolation, charpoly_unsigned, column_bases, minor_det, pdet, rank, row_bases,
    Combinations, IndexSet, IntMatrix,
};
use rand::Rng;

pub type Check = Result<(), String>;

pub fn matrix(rows: usize, cols: usize, entries: &[i64]) -> IntMatrix {
    IntMatrix::from_fn(rows, cols, |i, j| BigInt::from(entries[i * cols + j]))
}

pub fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize, bound: i64) -> IntMatrix {
    IntMatrix::from_fn(rows, cols, |_, _| BigInt::from(rng.random_range(-bound..=bound)))
}

/// A product `A·B` through an inner dimension of at most `inner`, so that
/// rank deficiency is common.
pub fn random_low_rank(rng: &mut impl Rng, rows: usize, cols: usize, inner: usize) -> IntMatrix {
    let k = rng.random_range(1..=inner);
    let a = random_matrix(rng, rows, k, 2);
    let b = random_matrix(rng, k, cols, 2);
    &a * &b
}

pub fn random_symmetric(rng: &mut impl Rng, n: usize, skew: bool) -> IntMatrix {
    let mut m = IntMatrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let v: i64 = rng.random_range(-3..=3);
            if i == j {
                if !skew {
                    m.set(i, i, v);
                }
            } else {
                m.set(i, j, v);
                m.set(j, i, if skew { -v } else { v });
            }
        }
    }
    m
}

/// A unimodular matrix and its inverse, built from elementary row
/// operations.
pub fn random_unimodular(rng: &mut impl Rng, n: usize, steps: usize) -> (IntMatrix, IntMatrix) {
    let mut u = IntMatrix::identity(n);
    let mut inv = IntMatrix::identity(n);
    if n < 2 {
        return (u, inv);
    }
    for _ in 0..steps {
        let i = rng.random_range(0..n);
        let mut j = rng.random_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let c: i64 = rng.random_range(-2..=2);
        // E = 1 + c·e_ij; u ← E·u, inv ← inv·E⁻¹
        let mut e = IntMatrix::identity(n);
        e.set(i, j, c);
        let mut e_inv = IntMatrix::identity(n);
        e_inv.set(i, j, -c);
        u = &e * &u;
        inv = &inv * &e_inv;
    }
    (u, inv)
}

fn fail(what: &str, m: &IntMatrix) -> String {
    format!("{what} on {m:?}")
}

/// A nonzero `r×r` minor sits exactly on a row basis and a column basis.
pub fn basis_equivalence(m: &IntMatrix) -> Check {
    let r = rank(m);
    let rb: Vec<IndexSet> = row_bases(m);
    let cb: Vec<IndexSet> = column_bases(m);
    for rows in Combinations::new(m.rows(), r) {
        for cols in Combinations::new(m.cols(), r) {
            let nonzero = !minor_det(m, &rows, &cols).map_err(|e| e.to_string())?.is_zero();
            let on_bases = rb.contains(&rows) && cb.contains(&cols);
            if nonzero != on_bases {
                return Err(fail(&format!("rows {rows:?} cols {cols:?}"), m));
            }
        }
    }
    Ok(())
}

/// `det M[A,B]·det M[A′,B′] = det M[A′,B]·det M[A,B′]` for `r`-subsets,
/// `r = rank M`.
pub fn det_switch(m: &IntMatrix, picks: [usize; 4]) -> Check {
    let r = rank(m);
    let rows: Vec<IndexSet> = Combinations::new(m.rows(), r).collect();
    let cols: Vec<IndexSet> = Combinations::new(m.cols(), r).collect();
    let (a, a2) = (&rows[picks[0] % rows.len()], &rows[picks[1] % rows.len()]);
    let (b, b2) = (&cols[picks[2] % cols.len()], &cols[picks[3] % cols.len()]);
    let d = |x: &IndexSet, y: &IndexSet| minor_det(m, x, y).expect("equal sizes");
    if d(a, b) * d(a2, b2) == d(a2, b) * d(a, b2) {
        Ok(())
    } else {
        Err(fail(&format!("A={a:?} A′={a2:?} B={b:?} B′={b2:?}"), m))
    }
}

pub fn pdet_transpose(m: &IntMatrix) -> Check {
    if pdet(m).unwrap() == pdet(&m.transpose()).unwrap() {
        Ok(())
    } else {
        Err(fail("pdet(Mᵗ) ≠ pdet(M)", m))
    }
}

pub fn pdet_powers(m: &IntMatrix) -> Check {
    let p = pdet(m).unwrap();
    for k in 1..=3u32 {
        if pdet(&m.pow(k).unwrap()).unwrap() != num_traits::pow(p.clone(), k as usize) {
            return Err(fail(&format!("pdet(M^{k}) ≠ pdet(M)^{k}"), m));
        }
    }
    Ok(())
}

pub fn pdet_commutes(a: &IntMatrix, b: &IntMatrix) -> Check {
    if pdet(&(a * b)).unwrap() == pdet(&(b * a)).unwrap() {
        Ok(())
    } else {
        Err(format!("pdet(AB) ≠ pdet(BA) for A = {a:?}, B = {b:?}"))
    }
}

/// `∂ = U·N·U⁻¹` with `N = [[0, B], [0, 0]]`, so `∂² = 0` and `∂∂ᵗ`, `∂ᵗ∂`
/// annihilate each other.
pub fn nilpotent_conjugate(rng: &mut impl Rng, p: usize, q: usize) -> IntMatrix {
    let n = p + q;
    let b = random_matrix(rng, p, q, 2);
    let mut nil = IntMatrix::zeros(n, n);
    for i in 0..p {
        for j in 0..q {
            nil.set(i, p + j, b.get(i, j).clone());
        }
    }
    let (u, inv) = random_unimodular(rng, n, 3);
    &(&u * &nil) * &inv
}

pub fn pdet_annihilating_sum(d: &IntMatrix) -> Check {
    if !(d * d).is_zero() {
        return Err(fail("∂² ≠ 0", d));
    }
    let l = d * &d.transpose();
    let m = &d.transpose() * d;
    if !(&l * &m).is_zero() || !(&m * &l).is_zero() {
        return Err(fail("∂∂ᵗ, ∂ᵗ∂ do not annihilate", d));
    }
    if pdet(&(&l + &m)).unwrap() == pdet(&l).unwrap() * pdet(&m).unwrap() {
        Ok(())
    } else {
        Err(fail("pdet(L+M) ≠ pdet(L)·pdet(M)", d))
    }
}

/// For symmetric or skew `M` of rank `r`, the nonzero principal `r×r`
/// minors share a sign, at least one exists, and `pdet(MMᵗ) = pdet(M)²`.
pub fn same_sign(m: &IntMatrix) -> Check {
    let r = rank(m);
    let mut signs = Vec::new();
    for idx in Combinations::new(m.rows(), r) {
        let d = minor_det(m, &idx, &idx).unwrap();
        if !d.is_zero() {
            signs.push(d.signum());
        }
    }
    if signs.is_empty() {
        return Err(fail("no nonzero principal minor of size rank", m));
    }
    if signs.iter().any(|s| *s != signs[0]) {
        return Err(fail("principal minors of mixed sign", m));
    }
    let p = pdet(m).unwrap();
    if pdet(&m.gram()).unwrap() != &p * &p {
        return Err(fail("pdet(MMᵗ) ≠ pdet(M)²", m));
    }
    Ok(())
}

pub fn binet_cauchy(b: &IntMatrix) -> Check {
    if binet_cauchy_pdet(b) == pdet(&b.gram()).unwrap() {
        Ok(())
    } else {
        Err(fail("Σ det² ≠ pdet(BBᵗ)", b))
    }
}

/// `det(t + M)` vanishes at `t = −λ` for each eigenvalue `λ` of
/// `M = U·T·U⁻¹`, `T` upper triangular with the given diagonal.
pub fn charpoly_roots(rng: &mut impl Rng, diag: &[i64]) -> Check {
    let n = diag.len();
    let mut t = random_matrix(rng, n, n, 2);
    for (i, &d) in diag.iter().enumerate() {
        for j in 0..i {
            t.set(i, j, 0);
        }
        t.set(i, i, d);
    }
    let (u, inv) = random_unimodular(rng, n, 4);
    let m = &(&u * &t) * &inv;
    let p = charpoly_unsigned(&m).unwrap();
    for &l in diag {
        if !p.eval(&BigInt::from(-l)).is_zero() {
            return Err(fail(&format!("det(t+M) ≠ 0 at t = {}", -l), &m));
        }
    }
    let expected = diag.iter().fold(pdetlab::poly::UniPoly::one(), |acc, &l| &acc * &pdetlab::poly::UniPoly::linear(l));
    if p != expected {
        return Err(fail("charpoly ≠ Π(t + λ)", &m));
    }
    Ok(())
}

pub fn charpoly_routes(m: &IntMatrix) -> Check {
    if charpoly_unsigned(m).unwrap() == charpoly_by_interpolation(m).unwrap() {
        Ok(())
    } else {
        Err(fail("charpoly routes disagree", m))
    }
}

/// Every property at `samples` random instances each; returns the number of
/// failures per property, with the first counterexample.
pub fn linalg_suite(seed: u64, samples: usize) -> Vec<(&'static str, usize, Option<String>)> {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    let mut run = |name: &'static str, f: &mut dyn FnMut(&mut rand_chacha::ChaCha8Rng) -> Check| {
        let mut failures = 0;
        let mut first = None;
        for _ in 0..samples {
            if let Err(e) = f(&mut rng) {
                failures += 1;
                first.get_or_insert(e);
            }
        }
        out.push((name, failures, first));
    };
    let dims = |rng: &mut rand_chacha::ChaCha8Rng| (rng.random_range(1..=6), rng.random_range(1..=6));
    run("pdet(Mᵗ) = pdet(M)", &mut |rng| {
        let n = rng.random_range(1..=6);
        pdet_transpose(&random_matrix(rng, n, n, 3))
    });
    run("pdet(Mᵏ) = pdet(M)ᵏ, k ≤ 3", &mut |rng| {
        let n = rng.random_range(1..=6);
        let m = if rng.random_bool(0.5) { random_matrix(rng, n, n, 3) } else { random_low_rank(rng, n, n, 3) };
        pdet_powers(&m)
    });
    run("pdet(AB) = pdet(BA)", &mut |rng| {
        let (n, m) = dims(rng);
        pdet_commutes(&random_matrix(rng, n, m, 3), &random_matrix(rng, m, n, 3))
    });
    run("pdet(L+M) = pdet(L)·pdet(M), LM = ML = 0", &mut |rng| {
        let p = rng.random_range(1..=3);
        let q = rng.random_range(1..=3);
        pdet_annihilating_sum(&nilpotent_conjugate(rng, p, q))
    });
    run("det switch", &mut |rng| {
        let (n, m) = dims(rng);
        let mat = random_low_rank(rng, n, m, 3);
        let picks = [0; 4].map(|_: usize| rng.random::<u32>() as usize);
        det_switch(&mat, picks)
    });
    run("same sign, symmetric", &mut |rng| {
        let n = rng.random_range(1..=6);
        same_sign(&random_symmetric(rng, n, false))
    });
    run("same sign, skew", &mut |rng| {
        let n = rng.random_range(1..=6);
        same_sign(&random_symmetric(rng, n, true))
    });
    run("basis equivalence", &mut |rng| {
        let (n, m) = dims(rng);
        basis_equivalence(&random_low_rank(rng, n.min(5), m.min(5), 3))
    });
    run("Binet–Cauchy = pdet(BBᵗ)", &mut |rng| {
        let n = rng.random_range(1..=4);
        let m = rng.random_range(1..=5);
        binet_cauchy(&random_matrix(rng, n, m, 2))
    });
    run("det(t+M) = Π(t+λ)", &mut |rng| {
        let n = rng.random_range(1..=6);
        let diag: Vec<i64> = (0..n).map(|_| rng.random_range(-3..=3)).collect();
        charpoly_roots(rng, &diag)
    });
    out
}

pub fn abs_eq(a: &BigInt, b: &BigInt) -> bool {
    a.abs() == b.abs()
}
