//! Proper non-zero monomial ideals, kept as their minimal generating set.

use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, VarSet};

/// A proper, non-zero monomial ideal in `n` variables.
///
/// Generators are minimal and sorted by [`Monomial::canonical_cmp`], so two
/// ideals are equal iff their generator lists are.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

/// Result of an operation that may produce the whole ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdealOutcome {
    Proper(MonomialIdeal),
    Unit,
}

impl IdealOutcome {
    pub fn proper(self) -> Option<MonomialIdeal> {
        match self {
            IdealOutcome::Proper(i) => Some(i),
            IdealOutcome::Unit => None,
        }
    }

    pub fn is_unit(&self) -> bool {
        matches!(self, IdealOutcome::Unit)
    }
}

/// Minimal elements under divisibility, canonically sorted and deduplicated.
/// The result does not depend on the order of the input.
pub fn minimize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(Monomial::canonical_cmp);
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    // Sorted by degree, so a divisor always precedes its multiples.
    for g in gens {
        if !kept.iter().any(|k| k.divides_unchecked(&g)) {
            kept.push(g);
        }
    }
    kept
}

impl MonomialIdeal {
    pub fn new(n: usize, gens: Vec<Monomial>) -> Result<Self> {
        match Self::from_generators(n, gens)? {
            IdealOutcome::Proper(i) => Ok(i),
            IdealOutcome::Unit => Err(Error::UnitGenerator),
        }
    }

    /// Like [`MonomialIdeal::new`] but reports a unit generator as
    /// [`IdealOutcome::Unit`] instead of an error.
    pub fn from_generators(n: usize, gens: Vec<Monomial>) -> Result<IdealOutcome> {
        if gens.is_empty() {
            return Err(Error::EmptyIdeal);
        }
        for g in &gens {
            if g.n() != n {
                return Err(Error::LengthMismatch {
                    left: n,
                    right: g.n(),
                });
            }
        }
        if gens.iter().any(Monomial::is_one) {
            return Ok(IdealOutcome::Unit);
        }
        Ok(IdealOutcome::Proper(MonomialIdeal {
            n,
            gens: minimize(gens),
        }))
    }

    /// The ideal `(x_i : i in set)`.
    pub fn from_variables(n: usize, set: VarSet) -> Result<Self> {
        MonomialIdeal::new(n, set.iter().map(|j| Monomial::var(n, j)).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    pub fn is_principal(&self) -> bool {
        self.gens.len() == 1
    }

    fn check(&self, a: &Monomial) -> Result<()> {
        if a.n() != self.n {
            return Err(Error::LengthMismatch {
                left: self.n,
                right: a.n(),
            });
        }
        Ok(())
    }

    /// `a ∈ I` iff some generator divides `a`.
    pub fn contains(&self, a: &Monomial) -> Result<bool> {
        self.check(a)?;
        Ok(self.contains_unchecked(a))
    }

    pub(crate) fn contains_unchecked(&self, a: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides_unchecked(a))
    }

    /// Membership for a raw exponent vector of the right length.
    pub(crate) fn contains_exps(&self, a: &[u32]) -> bool {
        self.gens
            .iter()
            .any(|g| g.exps().iter().zip(a).all(|(x, y)| x <= y))
    }

    /// `(I : u)`, generated by `g / gcd(g, u)` over `g ∈ G(I)`.
    pub fn colon(&self, u: &Monomial) -> Result<IdealOutcome> {
        self.check(u)?;
        let quotients = self
            .gens
            .iter()
            .map(|g| g.quotient_gcd_unchecked(u))
            .collect();
        MonomialIdeal::from_generators(self.n, quotients)
    }

    /// `I + (us)`, minimized.
    pub fn add_monomials(&self, us: &[Monomial]) -> Result<IdealOutcome> {
        for u in us {
            self.check(u)?;
        }
        let mut gens = self.gens.clone();
        gens.extend(us.iter().cloned());
        MonomialIdeal::from_generators(self.n, gens)
    }

    /// `(I, x_i)`. Always proper.
    pub fn add_variable(&self, i: usize) -> Result<MonomialIdeal> {
        if i >= self.n {
            return Err(Error::VariableOutOfRange {
                index: i,
                n: self.n,
            });
        }
        Ok(self
            .add_monomials(&[Monomial::var(self.n, i)])?
            .proper()
            .expect("adding a variable keeps the ideal proper"))
    }

    /// Re-indexes the generators into `n - 1` variables with `x_i` removed.
    /// No generator may involve `x_i`.
    pub fn restrict_drop_variable(&self, i: usize) -> Result<MonomialIdeal> {
        if i >= self.n {
            return Err(Error::VariableOutOfRange {
                index: i,
                n: self.n,
            });
        }
        if let Some(g) = self.gens.iter().find(|g| g.exp(i) > 0) {
            return Err(Error::Precondition(format!(
                "generator {g} is divisible by x{}",
                i + 1
            )));
        }
        MonomialIdeal::new(
            self.n - 1,
            self.gens.iter().map(|g| g.drop_variable(i)).collect(),
        )
    }

    /// Largest exponent of each variable over `G(I)` (0 for unused ones).
    pub fn exponent_caps(&self) -> Vec<u32> {
        (0..self.n)
            .map(|j| self.gens.iter().map(|g| g.exp(j)).max().unwrap_or(0))
            .collect()
    }

    pub fn lcm_of_generators(&self) -> Monomial {
        Monomial::new(self.exponent_caps())
    }

    /// `J ⊆ I` as ideals.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> Result<bool> {
        if other.n != self.n {
            return Err(Error::LengthMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(other.gens.iter().all(|g| self.contains_unchecked(g)))
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}; ", self.n)?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}
