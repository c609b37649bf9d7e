use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Squarefree monomial stored as a bitset over variable indices.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u64>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(i: usize) -> Self {
        let mut m = Monomial::one();
        m.insert(i);
        m
    }

    /// Product of distinct variables; a repeated variable is not multilinear.
    pub fn from_vars(vars: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut m = Monomial::one();
        for v in vars {
            if m.contains(v) {
                return Err(Error::NotMultilinear(format!("variable index {v} repeated")));
            }
            m.insert(v);
        }
        Ok(m)
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.get(i / 64).is_some_and(|w| w >> (i % 64) & 1 == 1)
    }

    fn insert(&mut self, i: usize) {
        if self.0.len() <= i / 64 {
            self.0.resize(i / 64 + 1, 0);
        }
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn toggle(&mut self, i: usize) {
        if self.0.len() <= i / 64 {
            self.0.resize(i / 64 + 1, 0);
        }
        self.0[i / 64] ^= 1 << (i % 64);
        self.trim();
    }

    fn trim(&mut self) {
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|w| w.count_ones()).sum()
    }

    pub fn vars(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(k, &w)| {
            (0..64).filter(move |b| w >> b & 1 == 1).map(move |b| k * 64 + b)
        })
    }

    fn disjoint(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & b == 0)
    }

    fn union(&self, other: &Monomial) -> Monomial {
        let n = self.0.len().max(other.0.len());
        let words = (0..n)
            .map(|k| self.0.get(k).copied().unwrap_or(0) | other.0.get(k).copied().unwrap_or(0))
            .collect();
        Monomial(words)
    }

    /// Order used for canonical text: total degree, then variable index
    /// sequences compared lexicographically.
    fn canonical_cmp(&self, other: &Monomial) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.vars().cmp(other.vars()))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.vars()).finish()
    }
}

/// Names for variable indices, serialized next to any polynomial that uses
/// them.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VarTable {
    names: Vec<String>,
}

impl VarTable {
    pub fn new(names: Vec<String>) -> Self {
        VarTable { names }
    }

    pub fn with_prefix(prefix: &str, n: usize) -> Self {
        VarTable {
            names: (1..=n).map(|i| format!("{prefix}{i}")).collect(),
        }
    }

    /// `x1..xn` at indices `0..n`, then `y1..ym` at `n..n+m`.
    pub fn xy(n: usize, m: usize) -> Self {
        let mut t = Self::with_prefix("x", n);
        t.names.extend((1..=m).map(|i| format!("y{i}")));
        t
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> String {
        self.names.get(i).cloned().unwrap_or_else(|| format!("v{}", i + 1))
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }
}

/// Multilinear polynomial with integer coefficients. No zero coefficient is
/// ever stored.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn var(i: usize) -> Self {
        Self::term(Monomial::var(i), BigInt::one())
    }

    pub fn term(m: Monomial, c: BigInt) -> Self {
        let mut p = MultiPoly::zero();
        p.add_term(m, c);
        p
    }

    /// Builds from `(variable, exponent)` lists; exponents above one are
    /// rejected.
    pub fn from_exponents(terms: Vec<(Vec<(usize, u32)>, BigInt)>) -> Result<Self> {
        let mut p = MultiPoly::zero();
        for (powers, c) in terms {
            let mut vars = Vec::new();
            for (v, e) in powers {
                match e {
                    0 => {}
                    1 => vars.push(v),
                    _ => {
                        return Err(Error::NotMultilinear(format!(
                            "variable index {v} has exponent {e}"
                        )))
                    }
                }
            }
            p.add_term(Monomial::from_vars(vars)?, c);
        }
        Ok(p)
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut p = MultiPoly::zero();
        for (m, v) in &self.terms {
            p.add_term(m.clone(), v * c);
        }
        p
    }

    /// Product; fails when two monomials share a variable.
    pub fn try_mul(&self, rhs: &MultiPoly) -> Result<Self> {
        let mut p = MultiPoly::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                if !a.disjoint(b) {
                    return Err(Error::NotMultilinear(format!(
                        "product of {a:?} and {b:?} squares a variable"
                    )));
                }
                p.add_term(a.union(b), ca * cb);
            }
        }
        Ok(p)
    }

    /// Value with every variable set to one.
    pub fn eval_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Renames variables by `f`; fails if two variables of one monomial
    /// collide.
    pub fn relabel(&self, f: impl Fn(usize) -> usize) -> Result<Self> {
        let mut p = MultiPoly::zero();
        for (m, c) in &self.terms {
            p.add_term(Monomial::from_vars(m.vars().map(&f))?, c.clone());
        }
        Ok(p)
    }

    /// `x^U ↦ x^(F∖U)` on the variables of `family`, leaving the rest alone.
    /// For a polynomial in the family this equals `x^F · p(x⁻¹)`, and it is an
    /// involution.
    pub fn complement_transform(&self, family: &[usize]) -> Self {
        let mut p = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut flipped = m.clone();
            for &v in family {
                flipped.toggle(v);
            }
            p.add_term(flipped, c.clone());
        }
        p
    }

    /// Canonical text: terms by ascending total degree, then lexicographic
    /// variable order, e.g. `x1*y1*y2 + 2*x2*y1*y3`.
    pub fn render(&self, vars: &VarTable) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| a.0.canonical_cmp(b.0));
        let mut out = String::new();
        for (k, (m, c)) in terms.into_iter().enumerate() {
            let mag = c.abs();
            if k == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let body: Vec<String> = m.vars().map(|v| vars.name(v)).collect();
            if body.is_empty() {
                out.push_str(&mag.to_string());
            } else {
                if !mag.is_one() {
                    out.push_str(&mag.to_string());
                    out.push('*');
                }
                out.push_str(&body.join("*"));
            }
        }
        out
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;

    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut p = self.clone();
        for (m, c) in &rhs.terms {
            p.add_term(m.clone(), c.clone());
        }
        p
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;

    fn neg(self) -> MultiPoly {
        self.scale(&BigInt::from(-1))
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;

    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self + &-rhs
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({})", self.render(&VarTable::default()))
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&VarTable::default()))
    }
}
