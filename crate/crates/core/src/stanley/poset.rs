//! The finite poset behind exact Stanley depth and its interval partitions.

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{Monomial, VarSet};

use super::{StanleyDecomposition, StanleyPiece, Target, TargetKind};

/// All exponent vectors `a` with `0 <= a_j <= bounds[j]`, in lex order
/// (`x1` most significant).
pub struct BoxIter {
    bounds: Vec<u32>,
    next: Option<Vec<u32>>,
}

impl BoxIter {
    pub fn new(bounds: &[u32]) -> Self {
        BoxIter {
            bounds: bounds.to_vec(),
            next: Some(vec![0; bounds.len()]),
        }
    }
}

impl Iterator for BoxIter {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut j = succ.len();
        loop {
            if j == 0 {
                break;
            }
            j -= 1;
            if succ[j] < self.bounds[j] {
                succ[j] += 1;
                self.next = Some(succ);
                break;
            }
            succ[j] = 0;
        }
        Some(current)
    }
}

/// Points `a <= g` whose monomial belongs to the target module, where `g` is
/// the exponent vector of `lcm G(I)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacteristicPoset {
    target: Target,
    caps: Vec<u32>,
    strides: Vec<usize>,
    member: Vec<bool>,
}

impl CharacteristicPoset {
    pub fn new(ideal: &MonomialIdeal, kind: TargetKind) -> Self {
        let target = Target::new(kind, ideal.clone());
        let caps = ideal.exponent_caps();
        let n = caps.len();
        let mut strides = vec![1usize; n];
        for j in (0..n.saturating_sub(1)).rev() {
            strides[j] = strides[j + 1] * (caps[j + 1] as usize + 1);
        }
        let member = BoxIter::new(&caps)
            .map(|a| target.contains_exps(&a))
            .collect();
        CharacteristicPoset {
            target,
            caps,
            strides,
            member,
        }
    }

    pub fn target(&self) -> &Target {
        &self.target
    }

    pub fn kind(&self) -> TargetKind {
        self.target.kind()
    }

    pub fn n(&self) -> usize {
        self.caps.len()
    }

    /// The cap vector `g`.
    pub fn caps(&self) -> &[u32] {
        &self.caps
    }

    pub fn box_size(&self) -> usize {
        self.member.len()
    }

    pub fn len(&self) -> usize {
        self.member.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Poset points in lex order.
    pub fn points(&self) -> Vec<Monomial> {
        BoxIter::new(&self.caps)
            .zip(&self.member)
            .filter(|(_, &m)| m)
            .map(|(a, _)| Monomial::new(a))
            .collect()
    }

    pub fn contains(&self, a: &[u32]) -> bool {
        self.in_box(a) && self.member[self.index(a)]
    }

    pub(crate) fn in_box(&self, a: &[u32]) -> bool {
        a.len() == self.n() && a.iter().zip(&self.caps).all(|(x, g)| x <= g)
    }

    pub(crate) fn index(&self, a: &[u32]) -> usize {
        a.iter()
            .zip(&self.strides)
            .map(|(&x, &s)| x as usize * s)
            .sum()
    }

    pub(crate) fn strides(&self) -> &[usize] {
        &self.strides
    }

    pub(crate) fn membership(&self) -> &[bool] {
        &self.member
    }

    pub(crate) fn point_at(&self, mut idx: usize) -> Vec<u32> {
        self.strides
            .iter()
            .map(|&s| {
                let x = idx / s;
                idx %= s;
                x as u32
            })
            .collect()
    }

    /// Variables `j` with `b_j = g_j`.
    pub fn capped(&self, b: &[u32]) -> VarSet {
        VarSet::from_indices((0..self.n()).filter(|&j| b[j] == self.caps[j]))
    }
}

/// The interval `[bottom, top]` of the characteristic poset.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Interval {
    pub bottom: Monomial,
    pub top: Monomial,
}

impl Interval {
    pub fn new(bottom: Monomial, top: Monomial) -> Self {
        Interval { bottom, top }
    }

    /// Every point of the interval.
    pub fn points(&self) -> impl Iterator<Item = Vec<u32>> + '_ {
        let widths: Vec<u32> = self
            .bottom
            .exps()
            .iter()
            .zip(self.top.exps())
            .map(|(a, b)| b - a)
            .collect();
        BoxIter::new(&widths).map(move |off| {
            off.iter()
                .zip(self.bottom.exps())
                .map(|(o, a)| o + a)
                .collect()
        })
    }
}

/// A partition of a characteristic poset into intervals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalPartition {
    poset: CharacteristicPoset,
    intervals: Vec<Interval>,
}

impl IntervalPartition {
    /// Validates that the intervals lie in the poset, are disjoint and cover it.
    pub fn new(poset: CharacteristicPoset, intervals: Vec<Interval>) -> Result<Self> {
        let mut seen = vec![false; poset.box_size()];
        for iv in &intervals {
            let (a, b) = (iv.bottom.exps(), iv.top.exps());
            if !poset.in_box(a) || !poset.in_box(b) || !iv.bottom.divides_unchecked(&iv.top) {
                return Err(Error::Structural(format!(
                    "[{}, {}] is not an interval below the caps",
                    iv.bottom, iv.top
                )));
            }
            for c in iv.points() {
                let idx = poset.index(&c);
                if !poset.membership()[idx] {
                    return Err(Error::Structural(format!(
                        "{} is outside the poset",
                        Monomial::new(c)
                    )));
                }
                if std::mem::replace(&mut seen[idx], true) {
                    return Err(Error::Structural(format!(
                        "{} is covered twice",
                        Monomial::new(c)
                    )));
                }
            }
        }
        if seen != poset.membership() {
            return Err(Error::Structural("intervals do not cover the poset".into()));
        }
        Ok(IntervalPartition { poset, intervals })
    }

    pub(crate) fn new_unchecked(poset: CharacteristicPoset, intervals: Vec<Interval>) -> Self {
        IntervalPartition { poset, intervals }
    }

    pub fn poset(&self) -> &CharacteristicPoset {
        &self.poset
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    /// `min` over intervals of the number of capped coordinates of the top;
    /// `n` for an empty poset.
    pub fn sdepth(&self) -> usize {
        self.intervals
            .iter()
            .map(|iv| self.poset.capped(iv.top.exps()).len())
            .min()
            .unwrap_or(self.poset.n())
    }
}

/// The Stanley decomposition induced by an interval partition: `[a, b]`
/// contributes `x^c K[Z_b]` for every `c ∈ [a, b]` with `c_j = a_j` on `Z_b`,
/// where `Z_b = {j : b_j = g_j}`.
pub fn partition_to_decomposition(p: &IntervalPartition) -> Result<StanleyDecomposition> {
    let poset = p.poset();
    let mut pieces = Vec::new();
    for iv in p.intervals() {
        let z = poset.capped(iv.top.exps());
        let top_free: Vec<u32> = (0..poset.n())
            .map(|j| {
                if z.contains(j) {
                    iv.bottom.exp(j)
                } else {
                    iv.top.exp(j)
                }
            })
            .collect();
        let slice = Interval::new(iv.bottom.clone(), Monomial::new(top_free));
        for c in slice.points() {
            pieces.push(StanleyPiece::new(Monomial::new(c), z));
        }
    }
    StanleyDecomposition::new(poset.target().clone(), pieces)
}

#[cfg(test)]
mod tests {
    use super::super::verify_decomposition;
    use super::*;

    fn m(exps: &[u32]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|g| m(g)).collect()).unwrap()
    }

    #[test]
    fn box_iter_is_lex() {
        let pts: Vec<_> = BoxIter::new(&[1, 2]).collect();
        assert_eq!(
            pts,
            vec![
                vec![0, 0],
                vec![0, 1],
                vec![0, 2],
                vec![1, 0],
                vec![1, 1],
                vec![1, 2]
            ]
        );
        assert_eq!(BoxIter::new(&[]).count(), 1);
    }

    #[test]
    fn posets() {
        let p = CharacteristicPoset::new(&ideal(2, &[&[1, 0], &[0, 1]]), TargetKind::Quotient);
        assert_eq!(p.points(), vec![m(&[0, 0])]);
        let p = CharacteristicPoset::new(&ideal(1, &[&[2]]), TargetKind::Quotient);
        assert_eq!(p.caps(), &[2]);
        assert_eq!(p.points(), vec![m(&[0]), m(&[1])]);
        let p = CharacteristicPoset::new(&ideal(2, &[&[1, 1]]), TargetKind::Ideal);
        assert_eq!(p.points(), vec![m(&[1, 1])]);
    }

    #[test]
    fn unused_variables_have_zero_cap() {
        let p = CharacteristicPoset::new(&ideal(3, &[&[2, 0, 0]]), TargetKind::Quotient);
        assert_eq!(p.caps(), &[2, 0, 0]);
        assert_eq!(p.capped(&[1, 0, 0]), VarSet::from_indices([1, 2]));
    }

    #[test]
    fn single_point_partition() {
        let i = ideal(2, &[&[1, 0], &[0, 1]]);
        let poset = CharacteristicPoset::new(&i, TargetKind::Quotient);
        let part =
            IntervalPartition::new(poset, vec![Interval::new(m(&[0, 0]), m(&[0, 0]))]).unwrap();
        let d = partition_to_decomposition(&part).unwrap();
        assert_eq!(d.pieces(), &[StanleyPiece::new(m(&[0, 0]), VarSet::EMPTY)]);
        assert!(verify_decomposition(&d).unwrap());
    }

    #[test]
    fn chain_partitions() {
        let i = ideal(1, &[&[2]]);
        let poset = CharacteristicPoset::new(&i, TargetKind::Quotient);
        let singletons = IntervalPartition::new(
            poset.clone(),
            vec![
                Interval::new(m(&[0]), m(&[0])),
                Interval::new(m(&[1]), m(&[1])),
            ],
        )
        .unwrap();
        let d = partition_to_decomposition(&singletons).unwrap();
        assert_eq!(
            d.pieces(),
            &[
                StanleyPiece::new(m(&[0]), VarSet::EMPTY),
                StanleyPiece::new(m(&[1]), VarSet::EMPTY)
            ]
        );
        assert!(verify_decomposition(&d).unwrap());

        // [0, 1] has an uncapped top, so it expands into two pieces.
        let whole = IntervalPartition::new(poset, vec![Interval::new(m(&[0]), m(&[1]))]).unwrap();
        let d = partition_to_decomposition(&whole).unwrap();
        assert_eq!(d.pieces().len(), 2);
        assert!(verify_decomposition(&d).unwrap());
    }

    #[test]
    fn invalid_partitions() {
        let i = ideal(1, &[&[2]]);
        let poset = CharacteristicPoset::new(&i, TargetKind::Quotient);
        let missing = IntervalPartition::new(poset.clone(), vec![Interval::new(m(&[0]), m(&[0]))]);
        assert!(matches!(missing, Err(Error::Structural(_))));
        let outside = IntervalPartition::new(poset.clone(), vec![Interval::new(m(&[0]), m(&[2]))]);
        assert!(matches!(outside, Err(Error::Structural(_))));
        let overlap = IntervalPartition::new(
            poset,
            vec![
                Interval::new(m(&[0]), m(&[1])),
                Interval::new(m(&[1]), m(&[1])),
            ],
        );
        assert!(matches!(overlap, Err(Error::Structural(_))));
    }
}
