use std::sync::Arc;

use blockcalc::blocks::{Basis, BlockCalculus};
use blockcalc::coinv::{build_coinvariants, invariant_subalgebra};
use blockcalc::soergel::{
    all_words, apply_wall, bott_samelson, hom_space, hom_space_with_quadratic, split_idempotents, GradedModuleOverC,
};
use blockcalc::weyl::{weyl_group, ParabolicData};

fn split_dims(m: &GradedModuleOverC) -> Vec<Vec<usize>> {
    let mut d: Vec<Vec<usize>> = split_idempotents(m).unwrap().iter().map(|s| s.graded_dims()).collect();
    d.sort();
    d
}

#[test]
fn bott_samelson_dimension_is_a_power_of_two() {
    for t in ["A1", "A2", "B2", "G2", "A3", "B3", "C3"] {
        let g = weyl_group(t.parse().unwrap()).unwrap();
        let alg = Arc::new(build_coinvariants(&g).unwrap());
        // Each word extends the previous one, so grow the module one wall at a time.
        let mut m = bott_samelson(&alg, &[]).unwrap();
        assert_eq!(m.dim(), 1);
        for len in 1..=6 {
            let s = ((len - 1) * 2 + (len - 1) / 3) % g.rank();
            m = apply_wall(s, &m).unwrap();
            assert_eq!(m.dim(), 1 << len, "{t} length {len}");
        }
    }
}

#[test]
fn splitting_is_stable_under_reversal_and_wall_functors() {
    let g = weyl_group("A2".parse().unwrap()).unwrap();
    let alg = Arc::new(build_coinvariants(&g).unwrap());
    for word in all_words(2, 3) {
        let m = bott_samelson(&alg, &word).unwrap();
        let rev: Vec<usize> = word.iter().rev().copied().collect();
        let total: Vec<usize> = split_dims(&m).iter().map(|d| d.iter().sum()).collect();
        let total_rev: Vec<usize> =
            split_dims(&bott_samelson(&alg, &rev).unwrap()).iter().map(|d| d.iter().sum()).collect();
        let (mut a, mut b) = (total, total_rev);
        a.sort_unstable();
        b.sort_unstable();
        assert_eq!(a, b, "{word:?} versus its reverse");
    }
    for word in all_words(2, 2) {
        let m = bott_samelson(&alg, &word).unwrap();
        for s in 0..2 {
            let direct = split_dims(&apply_wall(s, &m).unwrap());
            let mut piecewise: Vec<Vec<usize>> = split_idempotents(&m)
                .unwrap()
                .iter()
                .flat_map(|n| split_dims(&apply_wall(s, n).unwrap()))
                .collect();
            piecewise.sort();
            assert_eq!(direct, piecewise, "{word:?} then s{}", s + 1);
        }
    }
}

#[test]
fn degree_one_constraints_determine_hom() {
    for t in ["A2", "B2"] {
        let g = weyl_group(t.parse().unwrap()).unwrap();
        let alg = Arc::new(build_coinvariants(&g).unwrap());
        let words = all_words(2, 2);
        for a in &words {
            for b in &words {
                let m = bott_samelson(&alg, a).unwrap();
                let n = bott_samelson(&alg, b).unwrap();
                assert_eq!(hom_space(&m, &n).unwrap().dim(), hom_space_with_quadratic(&m, &n).unwrap().dim());
            }
        }
    }
}

/// End of the antidominant projective of a block against the invariants
/// of its stabiliser.
#[test]
fn antidominant_endomorphisms_match_invariants() {
    for t in ["A1", "A2", "B2", "A3"] {
        let calc = BlockCalculus::new(t.parse().unwrap()).unwrap();
        let g = calc.group();
        let alg = build_coinvariants(g).unwrap();
        let r = g.rank();
        for mask in 0..1usize << r {
            let gens: Vec<usize> = (0..r).filter(|i| mask >> i & 1 == 1).collect();
            let block = calc.wall_block(&gens).unwrap();
            let p = block.class(Basis::Projective, g.longest()).unwrap();
            let end = calc.hom_dim(&p, &p).unwrap();
            let inv = invariant_subalgebra(&alg, &ParabolicData::standard(g, &gens).unwrap()).unwrap();
            assert_eq!(end as usize, inv.dim(), "{t} {gens:?}");
        }
    }
}
