//! Bott–Samelson modules over the coinvariant algebra.
//!
//! A module is a finite-dimensional graded vector space with a homogeneous
//! basis and the matrices of `x_1..x_r` (degree `+1`). Starting from the
//! one-dimensional module, `apply_wall(s, M) = C ⊗_{C^s} M` is built on the
//! free basis `{1, h}` of `C` over `C^s`, with `h = x_s` (so `∂_s h = 1`).
//! Writing `x_j = a_j + h b_j` and `x_j h = a'_j + h b'_j` with
//! `a, b ∈ C^s`, the action on `(1 ⊗ M) ⊕ (h ⊗ M)` is the block matrix
//! `[[a_j, a'_j], [b_j, b'_j]]`.

mod check;
mod hom;
mod split;

use std::sync::Arc;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

pub use check::{all_words, seeded_pairs, struktursatz_battery, BatteryPair, SoergelContext, StruktursatzOutcome};
pub use hom::{hom_space, hom_space_with_quadratic, HomSpace};
pub use split::{split_idempotents, split_idempotents_seeded, DEFAULT_SEED};

use crate::coinv::{demazure, invariants_of_degree, CoinvariantAlgebra, MultiPoly};
use crate::linalg::QMatrix;
use crate::{Error, Result};

/// A finite-dimensional graded module over `C`.
#[derive(Debug, Clone)]
pub struct GradedModuleOverC {
    algebra: Arc<CoinvariantAlgebra>,
    /// Degree of each basis vector, non-decreasing.
    degrees: Vec<usize>,
    /// Matrices of `x_1..x_r`.
    actions: Vec<QMatrix>,
}

/// Summary suitable for serialisation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleSummary {
    pub total_dim: usize,
    pub graded_dims: Vec<usize>,
}

impl GradedModuleOverC {
    /// Builds a module after checking commutativity and that the action
    /// factors through `C`.
    pub fn new(algebra: Arc<CoinvariantAlgebra>, degrees: Vec<usize>, actions: Vec<QMatrix>) -> Result<Self> {
        let n = degrees.len();
        if actions.len() != algebra.rank() || actions.iter().any(|a| a.rows() != n || a.cols() != n) {
            return Err(Error::Usage("action matrices do not match the module dimension".into()));
        }
        if degrees.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::Usage("basis must be sorted by degree".into()));
        }
        let m = GradedModuleOverC { algebra, degrees, actions };
        m.check()?;
        Ok(m)
    }

    fn check(&self) -> Result<()> {
        let n = self.dim();
        for (j, a) in self.actions.iter().enumerate() {
            for r in 0..n {
                for c in 0..n {
                    if !a[(r, c)].is_zero() && self.degrees[r] != self.degrees[c] + 1 {
                        return Err(Error::Internal(format!("x{} does not raise degree by one", j + 1)));
                    }
                }
            }
        }
        for i in 0..self.actions.len() {
            for j in 0..i {
                if &self.actions[i] * &self.actions[j] != &self.actions[j] * &self.actions[i] {
                    return Err(Error::Internal(format!("x{} and x{} do not commute", i + 1, j + 1)));
                }
            }
        }
        let g = self.algebra.group();
        for &d in &g.datum().degrees {
            for f in invariants_of_degree(g, d as u32) {
                if !self.act_poly(&f).is_zero() {
                    return Err(Error::Internal(format!("invariant {f} acts nontrivially")));
                }
            }
        }
        Ok(())
    }

    pub fn algebra(&self) -> &Arc<CoinvariantAlgebra> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.degrees.len()
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    /// `graded_dims[d]` = dimension in degree `d`.
    pub fn graded_dims(&self) -> Vec<usize> {
        let top = self.degrees.last().map_or(0, |&d| d + 1);
        let mut dims = vec![0; top];
        for &d in &self.degrees {
            dims[d] += 1;
        }
        dims
    }

    pub fn summary(&self) -> ModuleSummary {
        ModuleSummary { total_dim: self.dim(), graded_dims: self.graded_dims() }
    }

    pub fn action(&self, j: usize) -> &QMatrix {
        &self.actions[j]
    }

    pub fn actions(&self) -> &[QMatrix] {
        &self.actions
    }

    /// Basis positions of degree `d`.
    pub fn degree_range(&self, d: usize) -> std::ops::Range<usize> {
        let lo = self.degrees.partition_point(|&e| e < d);
        let hi = self.degrees.partition_point(|&e| e <= d);
        lo..hi
    }

    /// Matrix of a polynomial acting on the module.
    pub fn act_poly(&self, f: &MultiPoly) -> QMatrix {
        let n = self.dim();
        let mut out = QMatrix::zeros(n, n);
        for (m, c) in f.terms() {
            let mut t = QMatrix::identity(n).scale(c);
            for (j, &e) in m.iter().enumerate() {
                for _ in 0..e {
                    t = &t * &self.actions[j];
                }
            }
            out = out.add(&t);
        }
        out
    }
}

/// The one-dimensional module `C / C_+` in degree 0.
pub fn unit_module(algebra: &Arc<CoinvariantAlgebra>) -> GradedModuleOverC {
    let r = algebra.rank();
    GradedModuleOverC { algebra: algebra.clone(), degrees: vec![0], actions: vec![QMatrix::zeros(1, 1); r] }
}

/// `C ⊗_{C^s} M`.
pub fn apply_wall(s: usize, m: &GradedModuleOverC) -> Result<GradedModuleOverC> {
    let alg = m.algebra.clone();
    let r = alg.rank();
    if s >= r {
        return Err(Error::Usage(format!("generator index {s} out of range")));
    }
    let g = alg.group().clone();
    let n = m.dim();
    let h = MultiPoly::var(r, s);
    let mut actions = Vec::with_capacity(r);
    for j in 0..r {
        let xj = MultiPoly::var(r, j);
        let b = demazure(&g, s, &xj);
        let a = &xj - &(&h * &b);
        let xh = &xj * &h;
        let b2 = demazure(&g, s, &xh);
        let a2 = &xh - &(&h * &b2);
        let blocks = [[m.act_poly(&a), m.act_poly(&a2)], [m.act_poly(&b), m.act_poly(&b2)]];
        let mut big = QMatrix::zeros(2 * n, 2 * n);
        for (bi, row) in blocks.iter().enumerate() {
            for (bj, blk) in row.iter().enumerate() {
                for rr in 0..n {
                    for cc in 0..n {
                        big[(bi * n + rr, bj * n + cc)] = blk[(rr, cc)].clone();
                    }
                }
            }
        }
        actions.push(big);
    }
    let degrees: Vec<usize> = m.degrees.iter().copied().chain(m.degrees.iter().map(|d| d + 1)).collect();
    // Reorder the doubled basis by degree.
    let mut order: Vec<usize> = (0..2 * n).collect();
    order.sort_by_key(|&i| (degrees[i], i));
    let degrees = order.iter().map(|&i| degrees[i]).collect();
    let actions = actions.iter().map(|a| a.select(&order, &order)).collect();
    GradedModuleOverC::new(alg, degrees, actions)
}

/// Fold of [`apply_wall`] over `word`, starting from [`unit_module`].
pub fn bott_samelson(algebra: &Arc<CoinvariantAlgebra>, word: &[usize]) -> Result<GradedModuleOverC> {
    word.iter().try_fold(unit_module(algebra), |m, &s| apply_wall(s, &m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coinv::build_coinvariants;
    use crate::weyl::weyl_group;

    fn alg(t: &str) -> Arc<CoinvariantAlgebra> {
        Arc::new(build_coinvariants(&weyl_group(t.parse().unwrap()).unwrap()).unwrap())
    }

    #[test]
    fn dimensions_double() {
        let c = alg("A2");
        assert_eq!(bott_samelson(&c, &[]).unwrap().dim(), 1);
        assert_eq!(bott_samelson(&c, &[0, 1]).unwrap().dim(), 4);
        let m = bott_samelson(&c, &[0, 1, 0]).unwrap();
        assert_eq!(m.dim(), 8);
        assert_eq!(m.graded_dims(), vec![1, 3, 3, 1]);
    }

    #[test]
    fn a1_wall_on_unit_is_c() {
        let c = alg("A1");
        let m = bott_samelson(&c, &[0]).unwrap();
        assert_eq!(m.graded_dims(), vec![1, 1]);
        assert!(!m.action(0).is_zero());
    }

    #[test]
    fn out_of_range_generator() {
        let c = alg("A1");
        assert!(matches!(apply_wall(1, &unit_module(&c)), Err(Error::Usage(_))));
    }
}
