//! Multigraded Betti numbers from upper Koszul simplicial complexes.
//!
//! `β_{i,a}(I) = dim H̃_{i-1}(K^a(I); Q)` with
//! `K^a(I) = { S ⊆ supp(a) : x^a / x^S ∈ I }`, and only multidegrees that are
//! lcms of generator subsets can carry nonzero Betti numbers. From these,
//! `pd(S/I) = 1 + max{ i : β_i(I) ≠ 0 }` and `depth(S/I) = n - pd(S/I)`.
//!
//! Ranks are computed over the rationals. Betti numbers of general monomial
//! ideals may depend on the characteristic of the field; for ideals with
//! linear quotients they do not.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exec::map_slice;
use crate::ideal::MonomialIdeal;
use crate::limits::Limits;
use crate::monomial::{Monomial, VarSet};

/// A finite simplicial complex given by its faces.
///
/// An empty face list is the void complex; `{∅}` is the empty complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: VarSet,
    faces: Vec<VarSet>,
}

impl SimplicialComplex {
    /// Closes `faces` under taking subsets.
    pub fn from_faces(faces: impl IntoIterator<Item = VarSet>) -> Self {
        let mut all = BTreeSet::new();
        for f in faces {
            let bits = f.bits();
            // Enumerate submasks of `bits`.
            let mut sub = bits;
            loop {
                all.insert(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & bits;
            }
        }
        let faces: Vec<VarSet> = all.into_iter().map(VarSet::from_bits).collect();
        Self::from_closed(faces)
    }

    fn from_closed(mut faces: Vec<VarSet>) -> Self {
        faces.sort_by_key(|f| (f.len(), f.bits()));
        let vertices = faces.iter().fold(VarSet::EMPTY, |acc, f| acc.union(*f));
        SimplicialComplex { vertices, faces }
    }

    pub fn void() -> Self {
        SimplicialComplex {
            vertices: VarSet::EMPTY,
            faces: Vec::new(),
        }
    }

    pub fn vertices(&self) -> VarSet {
        self.vertices
    }

    pub fn faces(&self) -> &[VarSet] {
        &self.faces
    }

    pub fn is_void(&self) -> bool {
        self.faces.is_empty()
    }

    /// Largest face dimension; `-1` for `{∅}`, `None` for the void complex.
    pub fn dimension(&self) -> Option<isize> {
        self.faces.last().map(|f| f.len() as isize - 1)
    }

    /// Faces of dimension `d` (`d = -1` is the empty face).
    pub fn faces_of_dim(&self, d: isize) -> Vec<VarSet> {
        self.faces
            .iter()
            .copied()
            .filter(|f| f.len() as isize - 1 == d)
            .collect()
    }
}

/// `K^a(I)`: subsets `S` of `supp(a)` with `x^a / x^S ∈ I`.
pub fn upper_koszul_complex(ideal: &MonomialIdeal, a: &Monomial) -> Result<SimplicialComplex> {
    if a.n() != ideal.n() {
        return Err(Error::LengthMismatch {
            left: ideal.n(),
            right: a.n(),
        });
    }
    let supp = a.support();
    let mut faces = Vec::new();
    let bits = supp.bits();
    let mut sub = bits;
    loop {
        let s = VarSet::from_bits(sub);
        let xs = Monomial::from_varset(a.n(), s);
        let q = a.div(&xs)?.expect("x^S divides x^a for S in the support");
        if ideal.contains_unchecked(&q) {
            faces.push(s);
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & bits;
    }
    // The face family is closed under subsets because I is an ideal.
    Ok(SimplicialComplex::from_closed(faces))
}

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
pub fn rank(matrix: &[Vec<i64>]) -> usize {
    let rows = matrix.len();
    if rows == 0 {
        return 0;
    }
    let cols = matrix[0].len();
    let mut a: Vec<Vec<BigInt>> = matrix
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = &a[r][c] * &a[i][j] - &a[i][c] * &a[r][j];
                a[i][j] = v / &prev;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].abs();
        r += 1;
    }
    r
}

/// Boundary map from `d`-faces to `(d-1)`-faces, rows indexed by the
/// `(d-1)`-faces.
fn boundary_matrix(lower: &[VarSet], upper: &[VarSet]) -> Vec<Vec<i64>> {
    let pos: BTreeMap<u32, usize> = lower
        .iter()
        .enumerate()
        .map(|(k, f)| (f.bits(), k))
        .collect();
    let mut mat = vec![vec![0i64; upper.len()]; lower.len()];
    for (col, face) in upper.iter().enumerate() {
        for (k, v) in face.iter().enumerate() {
            let mut facet = *face;
            facet.remove(v);
            let row = pos[&facet.bits()];
            mat[row][col] = if k % 2 == 0 { 1 } else { -1 };
        }
    }
    mat
}

/// Reduced homology ranks over Q, dimension `-1` first.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct HomologyRanks {
    ranks: Vec<usize>,
}

impl HomologyRanks {
    /// `dim H̃_d`, zero outside the stored range.
    pub fn rank(&self, d: isize) -> usize {
        if d < -1 {
            return 0;
        }
        self.ranks.get((d + 1) as usize).copied().unwrap_or(0)
    }

    /// `(dimension, rank)` pairs with nonzero rank.
    pub fn nonzero(&self) -> impl Iterator<Item = (isize, usize)> + '_ {
        self.ranks
            .iter()
            .enumerate()
            .filter(|(_, &r)| r > 0)
            .map(|(k, &r)| (k as isize - 1, r))
    }

    pub fn max_dimension(&self) -> Option<isize> {
        if self.ranks.is_empty() {
            None
        } else {
            Some(self.ranks.len() as isize - 2)
        }
    }
}

pub fn reduced_homology_ranks(c: &SimplicialComplex) -> HomologyRanks {
    let Some(top) = c.dimension() else {
        return HomologyRanks::default();
    };
    let by_dim: Vec<Vec<VarSet>> = (-1..=top).map(|d| c.faces_of_dim(d)).collect();
    // boundary_ranks[k] = rank of ∂ from dimension k-1 to k-2 (k indexes by_dim).
    let mut boundary_ranks = vec![0usize; by_dim.len() + 1];
    for k in 1..by_dim.len() {
        boundary_ranks[k] = rank(&boundary_matrix(&by_dim[k - 1], &by_dim[k]));
    }
    let ranks = (0..by_dim.len())
        .map(|k| by_dim[k].len() - boundary_ranks[k] - boundary_ranks[k + 1])
        .collect();
    HomologyRanks { ranks }
}

/// Nonzero `β_{i,a}(I)`, keyed by homological degree and multidegree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    n: usize,
    entries: BTreeMap<(usize, Vec<u32>), usize>,
}

impl BettiTable {
    pub fn n(&self) -> usize {
        self.n
    }

    /// `β_{i,a}(I)`.
    pub fn get(&self, i: usize, a: &Monomial) -> usize {
        self.entries
            .get(&(i, a.exps().to_vec()))
            .copied()
            .unwrap_or(0)
    }

    /// Total `β_i(I)` summed over multidegrees.
    pub fn total(&self, i: usize) -> usize {
        self.entries
            .iter()
            .filter(|((k, _), _)| *k == i)
            .map(|(_, &v)| v)
            .sum()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, Monomial, usize)> + '_ {
        self.entries
            .iter()
            .map(|((i, a), &v)| (*i, Monomial::new(a.clone()), v))
    }

    /// `β_i(S/I)`: `β_0 = 1` and `β_{i+1}(S/I) = β_i(I)`.
    pub fn total_quotient(&self, i: usize) -> usize {
        if i == 0 {
            1
        } else {
            self.total(i - 1)
        }
    }

    /// Projective dimension of `I`.
    pub fn pd_ideal(&self) -> usize {
        self.entries.keys().map(|(i, _)| *i).max().unwrap_or(0)
    }

    /// Projective dimension of `S/I`.
    pub fn pd_quotient(&self) -> usize {
        self.pd_ideal() + 1
    }

    /// `depth(S/I) = n - pd(S/I)`.
    pub fn depth_quotient(&self) -> usize {
        self.n - self.pd_quotient()
    }
}

/// Distinct lcms of nonempty subsets of `G(I)`.
pub fn lcm_lattice(ideal: &MonomialIdeal) -> Vec<Monomial> {
    let mut seen: BTreeSet<Vec<u32>> = BTreeSet::new();
    for g in ideal.gens() {
        let mut fresh: Vec<Vec<u32>> = vec![g.exps().to_vec()];
        for a in &seen {
            fresh.push(a.iter().zip(g.exps()).map(|(x, y)| *x.max(y)).collect());
        }
        seen.extend(fresh);
    }
    seen.into_iter().map(Monomial::new).collect()
}

pub fn betti_numbers(ideal: &MonomialIdeal, limits: &Limits) -> Result<BettiTable> {
    if ideal.num_gens() > limits.max_betti_generators {
        return Err(Error::ResourceCap {
            what: "generators for the Betti scan",
            limit: limits.max_betti_generators as u64,
        });
    }
    let degrees = lcm_lattice(ideal);
    let per_degree = map_slice(&degrees, limits.execution, |a| {
        upper_koszul_complex(ideal, a).map(|k| (a.clone(), reduced_homology_ranks(&k)))
    });
    let mut entries = BTreeMap::new();
    for item in per_degree {
        let (a, h) = item?;
        for (d, r) in h.nonzero() {
            entries.insert(((d + 1) as usize, a.exps().to_vec()), r);
        }
    }
    Ok(BettiTable {
        n: ideal.n(),
        entries,
    })
}

/// `depth(S/I)` through the Auslander–Buchsbaum formula.
pub fn depth_oracle(ideal: &MonomialIdeal, limits: &Limits) -> Result<usize> {
    Ok(betti_numbers(ideal, limits)?.depth_quotient())
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

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|g| m(g)).collect()).unwrap()
    }

    #[test]
    fn koszul_complexes() {
        let i = MonomialIdeal::from_variables(2, VarSet::full(2)).unwrap();
        let k = upper_koszul_complex(&i, &m(&[1, 1])).unwrap();
        assert_eq!(k.faces(), &[VarSet::EMPTY, vs(&[0]), vs(&[1])]);
        let j = ideal(1, &[&[1]]);
        let k = upper_koszul_complex(&j, &m(&[1])).unwrap();
        assert_eq!(k.faces(), &[VarSet::EMPTY]);
        let k = upper_koszul_complex(&ideal(2, &[&[2, 0]]), &m(&[1, 1])).unwrap();
        assert!(k.is_void());
    }

    #[test]
    fn homology_of_small_complexes() {
        let two_points = SimplicialComplex::from_faces([vs(&[0]), vs(&[1])]);
        let h = reduced_homology_ranks(&two_points);
        assert_eq!(h.nonzero().collect::<Vec<_>>(), vec![(0, 1)]);

        let simplex = SimplicialComplex::from_faces([vs(&[0, 1, 2])]);
        assert_eq!(reduced_homology_ranks(&simplex).nonzero().count(), 0);

        let circle = SimplicialComplex::from_faces([vs(&[0, 1]), vs(&[1, 2]), vs(&[0, 2])]);
        assert_eq!(
            reduced_homology_ranks(&circle)
                .nonzero()
                .collect::<Vec<_>>(),
            vec![(1, 1)]
        );

        let empty = SimplicialComplex::from_faces([VarSet::EMPTY]);
        assert_eq!(reduced_homology_ranks(&empty).rank(-1), 1);
        assert_eq!(
            reduced_homology_ranks(&SimplicialComplex::void()),
            HomologyRanks::default()
        );
    }

    #[test]
    fn bareiss_rank() {
        assert_eq!(rank(&[vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(rank(&[vec![0, 1], vec![1, 0]]), 2);
        assert_eq!(rank(&[vec![2, 4, 6], vec![1, 3, 5], vec![3, 7, 11]]), 2);
        assert_eq!(rank(&[]), 0);
    }

    #[test]
    fn betti_of_regular_sequence() {
        let i = MonomialIdeal::from_variables(3, vs(&[0, 1])).unwrap();
        let b = betti_numbers(&i, &Limits::default()).unwrap();
        assert_eq!(b.total(0), 2);
        assert_eq!(b.total(1), 1);
        assert_eq!(b.get(1, &m(&[1, 1, 0])), 1);
        assert_eq!(b.pd_quotient(), 2);
        assert_eq!(b.depth_quotient(), 1);
    }

    #[test]
    fn betti_of_principal() {
        let b = betti_numbers(&ideal(3, &[&[1, 2, 0]]), &Limits::default()).unwrap();
        assert_eq!(b.total(0), 1);
        assert_eq!(b.pd_quotient(), 1);
        assert_eq!(b.depth_quotient(), 2);
    }

    #[test]
    fn depth_of_worked_example_is_one() {
        let i = ideal(4, &[&[2, 0, 0, 0], &[1, 2, 0, 0], &[1, 1, 2, 0]]);
        let b = betti_numbers(&i, &Limits::default()).unwrap();
        assert_eq!(b.pd_quotient(), 3);
        assert_eq!(depth_oracle(&i, &Limits::default()).unwrap(), 1);
        let maximal = MonomialIdeal::from_variables(4, VarSet::full(4)).unwrap();
        assert_eq!(depth_oracle(&maximal, &Limits::default()).unwrap(), 0);
    }

    #[test]
    fn generator_cap() {
        let i = MonomialIdeal::from_variables(4, VarSet::full(4)).unwrap();
        let tight = Limits {
            max_betti_generators: 3,
            ..Limits::default()
        };
        assert!(matches!(
            betti_numbers(&i, &tight),
            Err(Error::ResourceCap { .. })
        ));
    }
}
