mod common;

use std::collections::HashMap;

use common::*;
use lqsdepth::stanley::{
    apply_quotient_transform, best_partition, find_transform_slot, partition_to_decomposition,
    verify_with_margin,
};
use lqsdepth::theorems::run_iterative_pipeline;
use lqsdepth::{
    colon_variable_set, find_admissible_order, linear_quotient_decomposition, sdepth_exact,
    sdepth_of_decomposition, verify_decomposition, Limits, MonomialIdeal, StanleyDecomposition,
    StanleyPiece, TargetKind,
};
use proptest::prelude::*;

/// Exhaustive Stanley depth over every interval partition of the
/// characteristic poset. The first uncovered point can sit anywhere inside
/// its interval, so every `[a, b]` around it is tried.
struct Oracle {
    points: Vec<Vec<u32>>,
    caps: Vec<u32>,
    memo: HashMap<u64, usize>,
}

impl Oracle {
    fn new(i: &MonomialIdeal, kind: TargetKind) -> Self {
        let caps: Vec<u32> = (0..i.n())
            .map(|j| i.gens().iter().map(|g| g.exp(j)).max().unwrap())
            .collect();
        let points: Vec<Vec<u32>> = grid(&caps)
            .into_iter()
            .filter(|a| in_ideal(i.gens(), a) == (kind == TargetKind::Ideal))
            .collect();
        assert!(points.len() <= 64);
        Oracle {
            points,
            caps,
            memo: HashMap::new(),
        }
    }

    fn le(a: &[u32], b: &[u32]) -> bool {
        a.iter().zip(b).all(|(x, y)| x <= y)
    }

    fn best(&mut self, covered: u64) -> usize {
        let Some(p) = (0..self.points.len()).find(|&k| covered & (1 << k) == 0) else {
            return usize::MAX;
        };
        if let Some(&v) = self.memo.get(&covered) {
            return v;
        }
        let free: Vec<usize> = (0..self.points.len())
            .filter(|&k| covered & (1 << k) == 0)
            .collect();
        let mut best = 0;
        for &a in &free {
            if !Self::le(&self.points[a], &self.points[p]) {
                continue;
            }
            for &b in &free {
                if !Self::le(&self.points[p], &self.points[b]) {
                    continue;
                }
                let (lo, hi) = (&self.points[a], &self.points[b]);
                let inside: Vec<usize> = (0..self.points.len())
                    .filter(|&k| Self::le(lo, &self.points[k]) && Self::le(&self.points[k], hi))
                    .collect();
                let size: usize = lo
                    .iter()
                    .zip(hi)
                    .map(|(x, y)| (y - x + 1) as usize)
                    .product();
                if inside.len() != size || inside.iter().any(|&k| covered & (1 << k) != 0) {
                    continue;
                }
                let capped = (0..hi.len()).filter(|&j| hi[j] == self.caps[j]).count();
                if capped <= best {
                    continue;
                }
                let mask = inside.iter().fold(covered, |m, &k| m | (1 << k));
                best = best.max(capped.min(self.best(mask)));
            }
        }
        self.memo.insert(covered, best);
        best
    }
}

fn oracle_sdepth(i: &MonomialIdeal, kind: TargetKind) -> usize {
    Oracle::new(i, kind).best(0)
}

fn small_box(i: &MonomialIdeal) -> bool {
    i.exponent_caps().iter().map(|c| c + 1).product::<u32>() <= 24
}

fn kind() -> impl Strategy<Value = TargetKind> {
    prop_oneof![Just(TargetKind::Quotient), Just(TargetKind::Ideal)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn exact_search_matches_exhaustive_oracle(
        i in ideal(4, 4, 2).prop_filter("box", small_box),
        kind in kind(),
    ) {
        let limits = Limits::default();
        prop_assert_eq!(sdepth_exact(&i, kind, &limits).unwrap(), oracle_sdepth(&i, kind));
    }

    #[test]
    fn best_partition_gives_a_valid_decomposition(i in ideal(4, 4, 3), kind in kind()) {
        let (t, p) = best_partition(&i, kind, &Limits::default()).unwrap();
        prop_assert_eq!(p.sdepth(), t);
        let d = partition_to_decomposition(&p).unwrap();
        prop_assert!(verify_decomposition(&d).unwrap());
        prop_assert_eq!(sdepth_of_decomposition(&d).unwrap(), t);
    }

    #[test]
    fn quotient_sdepth_bounds_lq_ideal((i, o) in lq_ideal(4, 4, 3)) {
        let l = Limits::default();
        let sq = sdepth_exact(&i, TargetKind::Quotient, &l).unwrap();
        let si = sdepth_exact(&i, TargetKind::Ideal, &l).unwrap();
        let lq = sdepth_of_decomposition(&linear_quotient_decomposition(&o)).unwrap();
        prop_assert!(si >= lq);
        prop_assert!(sq < i.n());
    }

    #[test]
    fn box_check_agrees_with_enlarged_box(
        (i, o) in lq_ideal(4, 4, 3),
        which in any::<usize>(),
        how in 0u8..5,
        var in 0usize..4,
    ) {
        let d = linear_quotient_decomposition(&o);
        let mut pieces = d.pieces().to_vec();
        let k = which % pieces.len();
        let var = var % i.n();
        let must_fail = match how {
            0 => { pieces.remove(k); true }
            1 => { let p = pieces[k].clone(); pieces.push(p); true }
            2 => {
                let v = pieces[k].v.mul(&lqsdepth::Monomial::var(i.n(), var)).unwrap();
                pieces[k] = StanleyPiece::new(v, pieces[k].z);
                true
            }
            3 => { pieces[k].z.insert(var); false }
            _ => { pieces[k].z.remove(var); false }
        };
        if pieces.is_empty() {
            return Ok(());
        }
        let bad = StanleyDecomposition::new(d.target().clone(), pieces).unwrap();
        let small = verify_decomposition(&bad).unwrap();
        prop_assert_eq!(small, verify_with_margin(&bad, 3).unwrap());
        if must_fail {
            prop_assert!(!small);
        }
    }

    #[test]
    fn quotient_transform_keeps_the_bound((i, o) in lq_ideal(4, 4, 3)) {
        let l = Limits::default();
        for j in 2..=o.m() {
            let prefix = o.prefix(j - 1);
            let (_, p) = best_partition(prefix.ideal(), TargetKind::Quotient, &l).unwrap();
            let d = partition_to_decomposition(&p).unwrap();
            let u = &o.generators()[j - 1];
            let z = colon_variable_set(prefix.ideal(), u).unwrap().unwrap();
            prop_assert_eq!(z, o.colon_vars(j));
            if find_transform_slot(&d, u, z).is_none() {
                continue;
            }
            let next = apply_quotient_transform(&d, u, z).unwrap();
            prop_assert!(verify_decomposition(&next).unwrap());
            let want = o.prefix(j);
            prop_assert_eq!(next.target().ideal(), want.ideal());
            let bound = sdepth_of_decomposition(&d).unwrap().min(i.n() - z.len() - 1);
            prop_assert!(sdepth_of_decomposition(&next).unwrap() >= bound);
        }
    }

    #[test]
    fn pipeline_steps_verify((_, o) in lq_ideal(5, 5, 3)) {
        let out = run_iterative_pipeline(&o).unwrap();
        for s in out.steps() {
            prop_assert!(verify_decomposition(&s.decomposition).unwrap());
        }
    }
}

#[test]
fn oracle_on_known_values() {
    let e = lqsdepth::parse_ideal("n=4; x1^2, x1*x2^2, x1*x2*x3^2").unwrap();
    assert_eq!(oracle_sdepth(&e, TargetKind::Quotient), 1);
    let p = lqsdepth::parse_ideal("n=4; x1^2").unwrap();
    assert_eq!(oracle_sdepth(&p, TargetKind::Quotient), 3);
    let mx = lqsdepth::parse_ideal("n=4; x1, x2, x3, x4").unwrap();
    assert_eq!(oracle_sdepth(&mx, TargetKind::Ideal), 2);
    assert_eq!(oracle_sdepth(&mx, TargetKind::Quotient), 0);
    let o = find_admissible_order(&e, &Limits::default())
        .unwrap()
        .unwrap();
    assert_eq!(
        sdepth_of_decomposition(&linear_quotient_decomposition(&o)).unwrap(),
        2
    );
}
