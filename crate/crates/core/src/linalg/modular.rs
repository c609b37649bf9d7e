//! Characteristic polynomials modulo word-size primes, lifted by the Chinese
//! remainder theorem.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::IntMatrix;
use crate::poly::UniPoly;

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

/// Deterministic Miller–Rabin for 64-bit integers.
fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let (mut d, mut s) = (n - 1, 0);
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primes below `2⁶²`, descending.
fn primes() -> impl Iterator<Item = u64> {
    let mut n = (1u64 << 62) - 1;
    std::iter::from_fn(move || {
        while !is_prime(n) {
            n -= 2;
        }
        let p = n;
        n -= 2;
        Some(p)
    })
}

fn reduce(x: &BigInt, p: u64) -> u64 {
    let r = x.mod_floor(&BigInt::from(p));
    r.to_u64().expect("residue fits in u64")
}

/// `det(t·1 − A) mod p`, low degree first, via reduction to Hessenberg form.
fn charpoly_mod(a: &IntMatrix, p: u64) -> Vec<u64> {
    let n = a.rows();
    let mut h: Vec<Vec<u64>> = (0..n).map(|i| a.row(i).iter().map(|x| reduce(x, p)).collect()).collect();
    let sub = |x: u64, y: u64| if x >= y { x - y } else { x + p - y };
    let add = |x: u64, y: u64| {
        let s = x + y;
        if s >= p {
            s - p
        } else {
            s
        }
    };
    for j in 0..n.saturating_sub(2) {
        let Some(i) = (j + 1..n).find(|&i| h[i][j] != 0) else {
            continue;
        };
        if i != j + 1 {
            h.swap(i, j + 1);
            for row in h.iter_mut() {
                row.swap(i, j + 1);
            }
        }
        let inv = pow_mod(h[j + 1][j], p - 2, p);
        for r in j + 2..n {
            let u = mul_mod(h[r][j], inv, p);
            if u == 0 {
                continue;
            }
            // row r −= u·row(j+1), then column j+1 += u·column r
            let (top, bottom) = h.split_at_mut(r);
            let pivot_row = &top[j + 1];
            for (x, &y) in bottom[0].iter_mut().zip(pivot_row) {
                *x = sub(*x, mul_mod(u, y, p));
            }
            for row in h.iter_mut() {
                row[j + 1] = add(row[j + 1], mul_mod(u, row[r], p));
            }
        }
    }
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for m in 1..=n {
        let prev = &polys[m - 1];
        let mut next = vec![0u64; m + 1];
        let hm = h[m - 1][m - 1];
        for (k, &c) in prev.iter().enumerate() {
            next[k + 1] = add(next[k + 1], c);
            next[k] = sub(next[k], mul_mod(hm, c, p));
        }
        let mut t = 1u64;
        for i in 1..m {
            t = mul_mod(t, h[m - i][m - i - 1], p);
            if t == 0 {
                break;
            }
            let f = mul_mod(t, h[m - i - 1][m - 1], p);
            for (k, &c) in polys[m - i - 1].iter().enumerate() {
                next[k] = sub(next[k], mul_mod(f, c, p));
            }
        }
        polys.push(next);
    }
    polys.pop().expect("polys is nonempty")
}

/// `Π (1 + ‖rowᵢ‖)` bounds every sum of principal minors, hence every
/// coefficient of the characteristic polynomial.
fn coefficient_bound(a: &IntMatrix) -> BigUint {
    let mut bound = BigUint::one();
    for i in 0..a.rows() {
        let sq: BigInt = a.row(i).iter().map(|x| x * x).sum();
        let mut root = sq.magnitude().sqrt();
        if &root * &root < *sq.magnitude() {
            root += 1u32;
        }
        bound *= root + 1u32;
    }
    bound
}

/// `det(t·1 − A)` by working modulo enough primes to pin down every
/// coefficient.
pub(crate) fn charpoly_multimodular(a: &IntMatrix) -> UniPoly {
    let n = a.rows();
    let target = coefficient_bound(a) * 2u32;
    let mut modulus = BigUint::one();
    let mut coeffs = vec![BigUint::zero(); n + 1];
    for p in primes() {
        let residues = charpoly_mod(a, p);
        let pb = BigUint::from(p);
        // x ≡ c (mod M), x ≡ r (mod p): x = c + M·((r − c)·M⁻¹ mod p)
        let m_mod_p = (&modulus % &pb).to_u64().expect("residue fits");
        let m_inv = pow_mod(m_mod_p, p - 2, p);
        for (c, &r) in coeffs.iter_mut().zip(&residues) {
            let c_mod_p = (&*c % &pb).to_u64().expect("residue fits");
            let diff = if r >= c_mod_p { r - c_mod_p } else { r + p - c_mod_p };
            let k = mul_mod(diff, m_inv, p);
            *c += &modulus * k;
        }
        modulus *= pb;
        if modulus > target {
            break;
        }
    }
    let half = &modulus >> 1;
    let signed = coeffs
        .into_iter()
        .map(|c| {
            if c > half {
                BigInt::from_biguint(Sign::Minus, &modulus - c)
            } else {
                BigInt::from(c)
            }
        })
        .collect();
    UniPoly::from_coeffs(signed)
}
