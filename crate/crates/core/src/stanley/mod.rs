//! Stanley decompositions of `I` and `S/I`.
//!
//! A piece `v K[Z]` contains the monomial `a` iff `v | a` and every variable
//! in `a / v` belongs to `Z`.

mod poset;
mod search;

pub use poset::{
    partition_to_decomposition, BoxIter, CharacteristicPoset, Interval, IntervalPartition,
};
pub use search::{best_partition, find_partition, sdepth_exact};

use std::fmt;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{Monomial, VarSet};

/// Which module a decomposition or poset describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TargetKind {
    /// The ideal `I` itself.
    Ideal,
    /// The quotient ring `S/I`.
    Quotient,
}

impl fmt::Display for TargetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TargetKind::Ideal => "ideal",
            TargetKind::Quotient => "quotient",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Target {
    Ideal(MonomialIdeal),
    Quotient(MonomialIdeal),
}

impl Target {
    pub fn new(kind: TargetKind, ideal: MonomialIdeal) -> Self {
        match kind {
            TargetKind::Ideal => Target::Ideal(ideal),
            TargetKind::Quotient => Target::Quotient(ideal),
        }
    }

    pub fn kind(&self) -> TargetKind {
        match self {
            Target::Ideal(_) => TargetKind::Ideal,
            Target::Quotient(_) => TargetKind::Quotient,
        }
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        match self {
            Target::Ideal(i) | Target::Quotient(i) => i,
        }
    }

    pub fn n(&self) -> usize {
        self.ideal().n()
    }

    /// Whether `x^a` is a monomial of the target module.
    pub(crate) fn contains_exps(&self, a: &[u32]) -> bool {
        match self {
            Target::Ideal(i) => i.contains_exps(a),
            Target::Quotient(i) => !i.contains_exps(a),
        }
    }
}

/// One Stanley space `v K[Z]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StanleyPiece {
    pub v: Monomial,
    pub z: VarSet,
}

impl StanleyPiece {
    pub fn new(v: Monomial, z: VarSet) -> Self {
        StanleyPiece { v, z }
    }

    pub fn contains(&self, a: &Monomial) -> bool {
        a.n() == self.v.n() && self.contains_exps(a.exps())
    }

    pub(crate) fn contains_exps(&self, a: &[u32]) -> bool {
        self.v
            .exps()
            .iter()
            .zip(a)
            .enumerate()
            .all(|(j, (&v, &x))| v == x || (v < x && self.z.contains(j)))
    }
}

impl fmt::Display for StanleyPiece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} | {}", self.v, self.z)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StanleyDecomposition {
    target: Target,
    pieces: Vec<StanleyPiece>,
}

impl StanleyDecomposition {
    pub fn new(target: Target, pieces: Vec<StanleyPiece>) -> Result<Self> {
        let n = target.n();
        for p in &pieces {
            if p.v.n() != n {
                return Err(Error::LengthMismatch {
                    left: n,
                    right: p.v.n(),
                });
            }
            if !p.z.is_subset(VarSet::full(n)) {
                return Err(Error::Structural(format!(
                    "piece {p} uses variables outside x1..x{n}"
                )));
            }
        }
        Ok(StanleyDecomposition { target, pieces })
    }

    pub fn target(&self) -> &Target {
        &self.target
    }

    pub fn pieces(&self) -> &[StanleyPiece] {
        &self.pieces
    }

    pub fn n(&self) -> usize {
        self.target.n()
    }

    /// Per-variable box bounds `max(g_j, max_i v_i_j) + 1 + margin`.
    fn box_bounds(&self, margin: u32) -> Vec<u32> {
        let caps = self.target.ideal().exponent_caps();
        (0..self.n())
            .map(|j| {
                let v_max = self.pieces.iter().map(|p| p.v.exp(j)).max().unwrap_or(0);
                caps[j].max(v_max) + 1 + margin
            })
            .collect()
    }
}

impl fmt::Display for StanleyDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.pieces {
            writeln!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Checks that every target monomial lies in exactly one piece and every
/// other monomial in none. Membership in `I` and in each piece only depends
/// on exponents truncated at `max(g_j, v_j) + 1`, so the finite box decides.
pub fn verify_decomposition(d: &StanleyDecomposition) -> Result<bool> {
    verify_with_margin(d, 0)
}

/// [`verify_decomposition`] on a box enlarged by `margin` in every coordinate.
pub fn verify_with_margin(d: &StanleyDecomposition, margin: u32) -> Result<bool> {
    let bounds = d.box_bounds(margin);
    for a in BoxIter::new(&bounds) {
        let hits = d.pieces.iter().filter(|p| p.contains_exps(&a)).count();
        let expected = usize::from(d.target.contains_exps(&a));
        if hits != expected {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `min |Z_i|` over the pieces.
pub fn sdepth_of_decomposition(d: &StanleyDecomposition) -> Result<usize> {
    d.pieces
        .iter()
        .map(|p| p.z.len())
        .min()
        .ok_or_else(|| Error::Structural("decomposition has no pieces".into()))
}

/// Stanley decomposition of `v · K[Z]/(w)` for a monomial `w` supported in `Z`.
///
/// With `w = x_{j_1}^{c_1} ... x_{j_r}^{c_r}` (ascending `j`), the pieces are
/// `v x_{j_1}^{c_1} ... x_{j_{t-1}}^{c_{t-1}} x_{j_t}^e K[Z ∖ {x_{j_t}}]` for
/// `t = 1..r` and `e < c_t`. Each frees `|Z| - 1` variables; `w = 1` gives no
/// pieces.
pub fn staircase(v: &Monomial, w: &Monomial, z: VarSet) -> Result<Vec<StanleyPiece>> {
    if v.n() != w.n() {
        return Err(Error::LengthMismatch {
            left: v.n(),
            right: w.n(),
        });
    }
    if !w.support().is_subset(z) {
        return Err(Error::Precondition(format!(
            "{w} is not supported in {{{z}}}"
        )));
    }
    let mut pieces = Vec::new();
    let mut prefix = v.exps().to_vec();
    for j in w.support().iter() {
        let mut free = z;
        free.remove(j);
        let base = prefix[j];
        for e in 0..w.exp(j) {
            let mut exps = prefix.clone();
            exps[j] = base + e;
            pieces.push(StanleyPiece::new(Monomial::new(exps), free));
        }
        prefix[j] = base + w.exp(j);
    }
    Ok(pieces)
}

/// The piece `w K[W]` with `W = Z` (complement of `colon_vars`) that contains
/// `u`. Pieces are disjoint, so there is at most one.
pub fn find_transform_slot(
    d: &StanleyDecomposition,
    u: &Monomial,
    colon_vars: VarSet,
) -> Option<usize> {
    let free = colon_vars.complement(d.n());
    d.pieces.iter().position(|p| p.z == free && p.contains(u))
}

/// Turns a decomposition of `S/I` into one of `S/(I, u)` when
/// `(I : u) = (colon_vars)`: the slot piece `w K[Z]` containing `u` is
/// replaced by the staircase of `w K[Z]/(u/w)` and all other pieces are kept.
pub fn apply_quotient_transform(
    d: &StanleyDecomposition,
    u: &Monomial,
    colon_vars: VarSet,
) -> Result<StanleyDecomposition> {
    let ideal = match d.target() {
        Target::Quotient(i) => i,
        Target::Ideal(_) => {
            return Err(Error::Precondition(
                "quotient transform needs a decomposition of S/I".into(),
            ))
        }
    };
    let n = ideal.n();
    let colon = ideal.colon(u)?.proper().ok_or_else(|| {
        Error::Precondition(format!("{u} lies in the ideal; (I : u) is the unit ideal"))
    })?;
    if colon_vars.is_empty() || colon != MonomialIdeal::from_variables(n, colon_vars)? {
        return Err(Error::Precondition(format!(
            "(I : {u}) = {colon} is not generated by {{{colon_vars}}}"
        )));
    }
    let slot = find_transform_slot(d, u, colon_vars).ok_or_else(|| {
        Error::HypothesisNotMet(format!(
            "no piece with free variables {{{}}} contains {u}",
            colon_vars.complement(n)
        ))
    })?;
    let piece = &d.pieces[slot];
    let w = u.div(&piece.v)?.expect("slot piece contains u");
    let replacement = staircase(&piece.v, &w, piece.z)?;

    let mut pieces = Vec::with_capacity(d.pieces.len() + replacement.len());
    pieces.extend(d.pieces[..slot].iter().cloned());
    pieces.extend(replacement);
    pieces.extend(d.pieces[slot + 1..].iter().cloned());
    let bigger = ideal
        .add_monomials(std::slice::from_ref(u))?
        .proper()
        .expect("u is outside I, so (I, u) stays proper");
    StanleyDecomposition::new(Target::Quotient(bigger), pieces)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[u32]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    fn vs(ix: &[usize]) -> VarSet {
        VarSet::from_indices(ix.iter().copied())
    }

    fn piece(v: &[u32], z: &[usize]) -> StanleyPiece {
        StanleyPiece::new(m(v), vs(z))
    }

    fn quotient(n: usize, gens: &[&[u32]]) -> Target {
        Target::Quotient(MonomialIdeal::new(n, gens.iter().map(|g| m(g)).collect()).unwrap())
    }

    fn d1() -> StanleyDecomposition {
        StanleyDecomposition::new(
            quotient(4, &[&[2, 0, 0, 0]]),
            vec![
                piece(&[0, 0, 0, 0], &[1, 2, 3]),
                piece(&[1, 0, 0, 0], &[1, 2, 3]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn verify_small_cases() {
        let d = StanleyDecomposition::new(quotient(1, &[&[1]]), vec![piece(&[0], &[])]).unwrap();
        assert!(verify_decomposition(&d).unwrap());
        let bad = StanleyDecomposition::new(
            quotient(3, &[&[1, 1, 0]]),
            vec![piece(&[0, 0, 0], &[0, 1, 2])],
        )
        .unwrap();
        assert!(!verify_decomposition(&bad).unwrap());
        assert!(verify_decomposition(&d1()).unwrap());
    }

    #[test]
    fn sdepth_of_pieces() {
        assert_eq!(sdepth_of_decomposition(&d1()).unwrap(), 3);
        let empty = StanleyDecomposition::new(quotient(1, &[&[1]]), vec![]).unwrap();
        assert!(matches!(
            sdepth_of_decomposition(&empty),
            Err(Error::Structural(_))
        ));
    }

    #[test]
    fn staircase_of_principal_quotient() {
        let p = staircase(&Monomial::one(4), &m(&[2, 0, 0, 0]), VarSet::full(4)).unwrap();
        assert_eq!(p, d1().pieces().to_vec());
        assert!(staircase(&m(&[1, 0]), &Monomial::one(2), VarSet::full(2))
            .unwrap()
            .is_empty());
        assert!(staircase(&m(&[1, 0]), &m(&[1, 0]), vs(&[1])).is_err());
    }

    #[test]
    fn transform_reproduces_worked_example() {
        let u2 = m(&[1, 2, 0, 0]);
        assert_eq!(find_transform_slot(&d1(), &u2, vs(&[0])), Some(1));
        let d2 = apply_quotient_transform(&d1(), &u2, vs(&[0])).unwrap();
        assert_eq!(
            d2.pieces(),
            &[
                piece(&[0, 0, 0, 0], &[1, 2, 3]),
                piece(&[1, 0, 0, 0], &[2, 3]),
                piece(&[1, 1, 0, 0], &[2, 3]),
            ]
        );
        assert!(verify_decomposition(&d2).unwrap());

        let u3 = m(&[1, 1, 2, 0]);
        assert_eq!(find_transform_slot(&d2, &u3, vs(&[0, 1])), Some(2));
        let d3 = apply_quotient_transform(&d2, &u3, vs(&[0, 1])).unwrap();
        assert_eq!(
            d3.pieces(),
            &[
                piece(&[0, 0, 0, 0], &[1, 2, 3]),
                piece(&[1, 0, 0, 0], &[2, 3]),
                piece(&[1, 1, 0, 0], &[3]),
                piece(&[1, 1, 1, 0], &[3]),
            ]
        );
        assert!(verify_decomposition(&d3).unwrap());
        assert_eq!(sdepth_of_decomposition(&d3).unwrap(), 1);
    }

    #[test]
    fn transform_deletes_slot_when_u_is_the_coefficient() {
        // I = (x1^2), u = x1: (I : x1) = (x1) and the slot x1K[x2] has w0 = 1.
        let d = StanleyDecomposition::new(
            quotient(2, &[&[2, 0]]),
            vec![piece(&[0, 0], &[1]), piece(&[1, 0], &[1])],
        )
        .unwrap();
        let out = apply_quotient_transform(&d, &m(&[1, 0]), vs(&[0])).unwrap();
        assert_eq!(out.pieces(), &[piece(&[0, 0], &[1])]);
        assert!(verify_decomposition(&out).unwrap());
    }

    #[test]
    fn transform_without_slot() {
        let d =
            StanleyDecomposition::new(quotient(2, &[&[1, 0]]), vec![piece(&[0, 0], &[1])]).unwrap();
        // (x1) : x2 = (x1), Z = {x2}: the piece 1*K[x2] contains x2.
        assert_eq!(find_transform_slot(&d, &m(&[0, 1]), vs(&[0])), Some(0));
        assert_eq!(find_transform_slot(&d, &m(&[0, 1]), vs(&[1])), None);
        let wrong = apply_quotient_transform(&d, &m(&[0, 1]), vs(&[1]));
        assert!(matches!(wrong, Err(Error::Precondition(_))));
    }
}
