//! Linear quotients: admissible orders, the induced Stanley decomposition of
//! `I`, depth from the colon sizes, and adjoining a variable.

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::limits::Limits;
use crate::monomial::{Monomial, VarSet};
use crate::stanley::{StanleyDecomposition, StanleyPiece, Target};

/// An ordering `u_1, ..., u_m` of `G(I)` in which every colon
/// `(u_1, ..., u_{j-1}) : u_j` is generated by variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissibleOrder {
    ideal: MonomialIdeal,
    order: Vec<Monomial>,
    /// `colon_vars[j]` generates `(u_1..u_j) : u_{j+1}` (0-based); entry 0 is empty.
    colon_vars: Vec<VarSet>,
}

/// Variables minimally generating `(gens : u)`, or `None` if that colon is
/// not generated by variables. `Err` if `u` lies in the ideal.
fn colon_vars_of<'a>(
    gens: impl Iterator<Item = &'a Monomial> + Clone,
    u: &Monomial,
) -> Result<Option<VarSet>> {
    let mut vars = VarSet::EMPTY;
    for g in gens.clone() {
        let q = g.quotient_gcd_unchecked(u);
        match q.degree() {
            0 => {
                return Err(Error::Precondition(format!(
                    "{u} already lies in the ideal (divisible by {g})"
                )))
            }
            1 => vars = vars.union(q.support()),
            _ => {}
        }
    }
    for g in gens {
        let q = g.quotient_gcd_unchecked(u);
        if q.degree() > 1 && q.support().intersection(vars).is_empty() {
            return Ok(None);
        }
    }
    Ok(Some(vars))
}

/// [`colon_variable_set`] for a raw generator list.
pub(crate) fn colon_vars_of_slice(prefix: &[Monomial], u: &Monomial) -> Result<Option<VarSet>> {
    colon_vars_of(prefix.iter(), u)
}

/// `Some(Z̄)` iff `(prefix : u)` is generated by the variables `Z̄`.
pub fn colon_variable_set(prefix: &MonomialIdeal, u: &Monomial) -> Result<Option<VarSet>> {
    if u.n() != prefix.n() {
        return Err(Error::LengthMismatch {
            left: prefix.n(),
            right: u.n(),
        });
    }
    colon_vars_of(prefix.gens().iter(), u)
}

impl AdmissibleOrder {
    /// Checks that `order` is a permutation of `G(ideal)` with linear
    /// quotients and records the colon variables.
    pub fn from_order(ideal: &MonomialIdeal, order: Vec<Monomial>) -> Result<Self> {
        let mut sorted = order.clone();
        sorted.sort_by(Monomial::canonical_cmp);
        if sorted != ideal.gens() {
            return Err(Error::Precondition(
                "order is not a permutation of the minimal generators".into(),
            ));
        }
        let mut colon_vars = vec![VarSet::EMPTY];
        for j in 1..order.len() {
            match colon_vars_of(order[..j].iter(), &order[j])? {
                Some(z) => colon_vars.push(z),
                None => {
                    return Err(Error::Precondition(format!(
                        "colon at step {} by {} is not generated by variables",
                        j + 1,
                        order[j]
                    )))
                }
            }
        }
        Ok(AdmissibleOrder {
            ideal: ideal.clone(),
            order,
            colon_vars,
        })
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn n(&self) -> usize {
        self.ideal.n()
    }

    pub fn m(&self) -> usize {
        self.order.len()
    }

    /// `u_1..u_m` in order.
    pub fn generators(&self) -> &[Monomial] {
        &self.order
    }

    /// `Z̄_j` for 1-based `j >= 2`; empty for `j = 1`.
    pub fn colon_vars(&self, j: usize) -> VarSet {
        self.colon_vars[j - 1]
    }

    /// `Z_j`: the variables outside the colon; all variables for `j = 1`.
    pub fn free_vars(&self, j: usize) -> VarSet {
        self.colon_vars(j).complement(self.n())
    }

    /// `n_j = |Z̄_j|`.
    pub fn colon_size(&self, j: usize) -> usize {
        self.colon_vars(j).len()
    }

    /// `max n_j` over `j >= 2`, 0 for a principal ideal.
    pub fn max_colon_size(&self) -> usize {
        (2..=self.m())
            .map(|j| self.colon_size(j))
            .max()
            .unwrap_or(0)
    }

    /// The first `j` generators, which again form an admissible order.
    pub fn prefix(&self, j: usize) -> AdmissibleOrder {
        let order = self.order[..j].to_vec();
        let ideal = MonomialIdeal::new(self.n(), order.clone())
            .expect("a prefix of minimal generators is a proper ideal");
        AdmissibleOrder {
            ideal,
            order,
            colon_vars: self.colon_vars[..j].to_vec(),
        }
    }
}

/// Finds an admissible order, extending by the canonically smallest
/// admissible generator first. Whether a generator may be appended depends
/// only on the set already chosen, so dead subsets are memoized.
pub fn find_admissible_order(
    ideal: &MonomialIdeal,
    limits: &Limits,
) -> Result<Option<AdmissibleOrder>> {
    let gens = ideal.gens();
    let m = gens.len();
    if m > limits.max_order_generators {
        return Err(Error::ResourceCap {
            what: "generators for admissible-order search",
            limit: limits.max_order_generators as u64,
        });
    }
    let full: u32 = if m == 32 { u32::MAX } else { (1u32 << m) - 1 };
    let mut dead = vec![false; 1usize << m];
    let mut visited = 0u64;
    let mut path: Vec<usize> = Vec::with_capacity(m);
    let mut colons: Vec<VarSet> = Vec::with_capacity(m);

    #[allow(clippy::too_many_arguments)]
    fn dfs(
        gens: &[Monomial],
        mask: u32,
        full: u32,
        dead: &mut [bool],
        visited: &mut u64,
        limit: u64,
        path: &mut Vec<usize>,
        colons: &mut Vec<VarSet>,
    ) -> Result<bool> {
        if mask == full {
            return Ok(true);
        }
        if dead[mask as usize] {
            return Ok(false);
        }
        *visited += 1;
        if *visited > limit {
            return Err(Error::ResourceCap {
                what: "admissible-order states",
                limit,
            });
        }
        for k in 0..gens.len() {
            if mask & (1 << k) != 0 {
                continue;
            }
            let z = if mask == 0 {
                Some(VarSet::EMPTY)
            } else {
                let chosen = (0..gens.len())
                    .filter(|&i| mask & (1 << i) != 0)
                    .map(|i| &gens[i]);
                colon_vars_of(chosen, &gens[k])?
            };
            if let Some(z) = z {
                path.push(k);
                colons.push(z);
                if dfs(
                    gens,
                    mask | (1 << k),
                    full,
                    dead,
                    visited,
                    limit,
                    path,
                    colons,
                )? {
                    return Ok(true);
                }
                path.pop();
                colons.pop();
            }
        }
        dead[mask as usize] = true;
        Ok(false)
    }

    let found = dfs(
        gens,
        0,
        full,
        &mut dead,
        &mut visited,
        limits.max_order_states,
        &mut path,
        &mut colons,
    )?;
    if !found {
        return Ok(None);
    }
    Ok(Some(AdmissibleOrder {
        ideal: ideal.clone(),
        order: path.iter().map(|&k| gens[k].clone()).collect(),
        colon_vars: colons,
    }))
}

/// Every admissible order of a small ideal (`m <= 8`). Meant as a test oracle.
pub fn enumerate_admissible_orders(ideal: &MonomialIdeal) -> Result<Vec<AdmissibleOrder>> {
    let m = ideal.num_gens();
    if m > 8 {
        return Err(Error::ResourceCap {
            what: "generators for exhaustive order enumeration",
            limit: 8,
        });
    }
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..m).collect();
    permute(&mut perm, 0, &mut |p| {
        let order = p.iter().map(|&k| ideal.gens()[k].clone()).collect();
        if let Ok(o) = AdmissibleOrder::from_order(ideal, order) {
            out.push(o);
        }
    });
    Ok(out)
}

fn permute(items: &mut Vec<usize>, start: usize, visit: &mut impl FnMut(&[usize])) {
    if start == items.len() {
        visit(items);
        return;
    }
    for k in start..items.len() {
        items.swap(start, k);
        permute(items, start + 1, visit);
        items.swap(start, k);
    }
}

/// `I = u_1 K[Z_1] ⊕ ... ⊕ u_m K[Z_m]`.
pub fn linear_quotient_decomposition(order: &AdmissibleOrder) -> StanleyDecomposition {
    let pieces = (1..=order.m())
        .map(|j| StanleyPiece::new(order.generators()[j - 1].clone(), order.free_vars(j)))
        .collect();
    StanleyDecomposition::new(Target::Ideal(order.ideal().clone()), pieces)
        .expect("pieces live in the ideal's ring")
}

/// `depth(S/I) = n - max n_j - 1`, and `n - 1` for a principal ideal.
pub fn depth_via_linear_quotients(order: &AdmissibleOrder) -> usize {
    order.n() - order.max_colon_size() - 1
}

/// Orders produced by adjoining a variable `x_i` to an ideal with linear
/// quotients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VariableAdjunction {
    pub variable: usize,
    /// `(x_i, u_{j_1}, ..., u_{j_p})` for `(x_i, I)`.
    pub with_variable: AdmissibleOrder,
    /// `J = (u_{j_1}, ..., u_{j_p})` re-indexed into `n - 1` variables.
    /// `None` when every generator is divisible by `x_i` (then `J = 0`).
    pub restricted: Option<AdmissibleOrder>,
}

/// Builds the admissible orders of `(x_i, I)` and of `J` from an admissible
/// order of `I`, with colon sets `{x_i} ∪ Z̄_{j_k}` and `Z̄_{j_k} ∖ {x_i}`.
pub fn add_variable(order: &AdmissibleOrder, i: usize) -> Result<VariableAdjunction> {
    let n = order.n();
    if i >= n {
        return Err(Error::VariableOutOfRange { index: i, n });
    }
    let xi = Monomial::var(n, i);
    let survivors: Vec<usize> = (1..=order.m())
        .filter(|&j| order.generators()[j - 1].exp(i) == 0)
        .collect();

    let mut big_order = vec![xi.clone()];
    let mut big_colons = vec![VarSet::EMPTY];
    let mut small_order = Vec::new();
    let mut small_colons = Vec::new();
    for (k, &j) in survivors.iter().enumerate() {
        let u = &order.generators()[j - 1];
        big_order.push(u.clone());
        big_colons.push(order.colon_vars(j).union(VarSet::single(i)));
        small_order.push(u.drop_variable(i));
        small_colons.push(if k == 0 {
            VarSet::EMPTY
        } else {
            let mut z = order.colon_vars(j);
            z.remove(i);
            if z.is_empty() {
                return Err(Error::TheoremViolation(format!(
                    "restricted colon for {u} became empty"
                )));
            }
            z.drop_variable(i)
        });
    }

    let mut big_gens = big_order.clone();
    big_gens.sort_by(Monomial::canonical_cmp);
    let with_variable = AdmissibleOrder {
        ideal: MonomialIdeal::new(n, big_gens)?,
        order: big_order,
        colon_vars: big_colons,
    };
    let restricted = if small_order.is_empty() {
        None
    } else {
        let mut small_gens = small_order.clone();
        small_gens.sort_by(Monomial::canonical_cmp);
        Some(AdmissibleOrder {
            ideal: MonomialIdeal::new(n - 1, small_gens)?,
            order: small_order,
            colon_vars: small_colons,
        })
    };
    Ok(VariableAdjunction {
        variable: i,
        with_variable,
        restricted,
    })
}
