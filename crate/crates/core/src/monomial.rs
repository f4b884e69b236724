//! Monomials as exponent vectors and sets of variables as bitmasks.
//!
//! Variables are indexed from 0 internally; every textual rendering uses the
//! 1-based names `x1..xn`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Largest ambient ring supported by [`VarSet`].
pub const MAX_VARS: usize = 32;

/// A monomial `x^a` in a fixed number of variables.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        assert!(exps.len() <= MAX_VARS, "at most {MAX_VARS} variables");
        Monomial { exps }
    }

    pub fn one(n: usize) -> Self {
        Monomial::new(vec![0; n])
    }

    /// The variable `x_{index+1}` in `n` variables.
    pub fn var(n: usize, index: usize) -> Self {
        let mut exps = vec![0; n];
        exps[index] = 1;
        Monomial::new(exps)
    }

    /// Product of the variables in `set`.
    pub fn from_varset(n: usize, set: VarSet) -> Self {
        Monomial::new((0..n).map(|j| u32::from(set.contains(j))).collect())
    }

    pub fn n(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn exp(&self, j: usize) -> u32 {
        self.exps[j]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn support(&self) -> VarSet {
        VarSet::from_indices(
            self.exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(j, _)| j),
        )
    }

    fn check_len(&self, other: &Monomial) -> Result<()> {
        if self.n() != other.n() {
            return Err(Error::LengthMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        Ok(())
    }

    /// `self | other`, componentwise `<=`.
    pub fn divides(&self, other: &Monomial) -> Result<bool> {
        self.check_len(other)?;
        Ok(self.divides_unchecked(other))
    }

    pub(crate) fn divides_unchecked(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `self / gcd(self, other)`: componentwise `max(a - b, 0)`.
    pub fn quotient_gcd(&self, other: &Monomial) -> Result<Monomial> {
        self.check_len(other)?;
        Ok(self.quotient_gcd_unchecked(other))
    }

    pub(crate) fn quotient_gcd_unchecked(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        )
    }

    pub fn lcm(&self, other: &Monomial) -> Result<Monomial> {
        self.check_len(other)?;
        Ok(Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        ))
    }

    pub fn gcd(&self, other: &Monomial) -> Result<Monomial> {
        self.check_len(other)?;
        Ok(Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.min(b))
                .collect(),
        ))
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        self.check_len(other)?;
        Ok(Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
                .collect(),
        ))
    }

    /// Exact quotient `self / other`; `None` when `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Result<Option<Monomial>> {
        if !other.divides(self)? {
            return Ok(None);
        }
        Ok(Some(self.quotient_gcd_unchecked(other)))
    }

    /// Drops variable `index`, re-indexing the later ones down by one.
    pub fn drop_variable(&self, index: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps.remove(index);
        Monomial::new(exps)
    }

    /// Canonical order: degree first, then the exponent vector descending, so
    /// `x1^2 < x1*x2 < x2^2` and generators print in the familiar lex order.
    pub fn canonical_cmp(&self, other: &Monomial) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (j, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{}", j + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A set of variable indices, stored as a bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VarSet(u32);

impl VarSet {
    pub const EMPTY: VarSet = VarSet(0);

    pub fn from_bits(bits: u32) -> Self {
        VarSet(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    /// All of `x1..xn`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_VARS);
        if n == MAX_VARS {
            VarSet(u32::MAX)
        } else {
            VarSet((1u32 << n) - 1)
        }
    }

    pub fn from_indices(indices: impl IntoIterator<Item = usize>) -> Self {
        let mut bits = 0u32;
        for j in indices {
            assert!(j < MAX_VARS);
            bits |= 1 << j;
        }
        VarSet(bits)
    }

    pub fn single(j: usize) -> Self {
        VarSet::from_indices([j])
    }

    pub fn contains(self, j: usize) -> bool {
        j < MAX_VARS && self.0 & (1 << j) != 0
    }

    pub fn insert(&mut self, j: usize) {
        self.0 |= 1 << j;
    }

    pub fn remove(&mut self, j: usize) {
        self.0 &= !(1 << j);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: VarSet) -> VarSet {
        VarSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VarSet) -> VarSet {
        VarSet(self.0 & other.0)
    }

    pub fn difference(self, other: VarSet) -> VarSet {
        VarSet(self.0 & !other.0)
    }

    pub fn complement(self, n: usize) -> VarSet {
        VarSet::full(n).difference(self)
    }

    pub fn is_subset(self, other: VarSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Indices in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..MAX_VARS).filter(move |j| bits & (1 << j) != 0)
    }

    /// Removes variable `index` and shifts the higher ones down.
    pub fn drop_variable(self, index: usize) -> VarSet {
        VarSet::from_indices(self.iter().filter(|&j| j != index).map(|j| {
            if j > index {
                j - 1
            } else {
                j
            }
        }))
    }
}

impl fmt::Display for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("-");
        }
        let names: Vec<String> = self.iter().map(|j| format!("x{}", j + 1)).collect();
        f.write_str(&names.join(" "))
    }
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

impl FromIterator<usize> for VarSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VarSet::from_indices(iter)
    }
}
