use std::collections::HashMap;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{bott_samelson, hom_space, GradedModuleOverC};
use crate::blocks::{Basis, BlockCalculus, ClassVector};
use crate::coinv::{build_coinvariants, CoinvariantAlgebra};
use crate::weyl::CartanType;
use crate::{Error, Result};

/// A pair of Bott–Samelson words.
pub type BatteryPair = (Vec<usize>, Vec<usize>);

/// Coinvariant algebra and block calculus of one root system.
#[derive(Debug, Clone)]
pub struct SoergelContext {
    algebra: Arc<CoinvariantAlgebra>,
    calculus: Arc<BlockCalculus>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StruktursatzOutcome {
    pub word1: Vec<usize>,
    pub word2: Vec<usize>,
    pub module_dim: usize,
    pub kgroup_dim: i64,
    pub holds: bool,
}

impl SoergelContext {
    pub fn new(algebra: Arc<CoinvariantAlgebra>, calculus: Arc<BlockCalculus>) -> Result<Self> {
        let a = &algebra.group().datum().cartan_type;
        let b = &calculus.group().datum().cartan_type;
        if a != b {
            return Err(Error::Usage(format!("coinvariant algebra of {a} paired with blocks of {b}")));
        }
        Ok(SoergelContext { algebra, calculus })
    }

    pub fn build(cartan_type: CartanType) -> Result<Self> {
        let calculus = Arc::new(BlockCalculus::new(cartan_type)?);
        let algebra = Arc::new(build_coinvariants(calculus.group())?);
        Self::new(algebra, calculus)
    }

    pub fn algebra(&self) -> &Arc<CoinvariantAlgebra> {
        &self.algebra
    }

    pub fn calculus(&self) -> &Arc<BlockCalculus> {
        &self.calculus
    }

    pub fn bott_samelson(&self, word: &[usize]) -> Result<GradedModuleOverC> {
        bott_samelson(&self.algebra, word)
    }

    /// `θ_{s_k} .. θ_{s_1} [M_e]` in the Verma basis of the regular block.
    pub fn k_group_class(&self, word: &[usize]) -> Result<ClassVector> {
        let reg = self.calculus.regular_block();
        let mut class = reg.class(Basis::Verma, self.calculus.group().identity())?;
        for &s in word {
            class = self.calculus.wall_crossing(s)?.apply(&class)?;
        }
        Ok(class)
    }

    /// The same class in the projective basis.
    pub fn k_group_projective(&self, word: &[usize]) -> Result<ClassVector> {
        let verma = self.k_group_class(word)?;
        self.calculus.regular_block().change_basis(&verma, Basis::Projective)
    }

    /// Euler-form prediction for `dim Hom(BS(word1), BS(word2))`.
    pub fn k_group_hom(&self, word1: &[usize], word2: &[usize]) -> Result<i64> {
        let a = self.k_group_projective(word1)?;
        let b = self.k_group_projective(word2)?;
        self.calculus.hom_dim(&a, &b)
    }

    /// Total dimensions of the summands predicted by the projective
    /// decomposition of `θ_word [M_e]`, largest first.
    pub fn predicted_summand_dims(&self, word: &[usize]) -> Result<Vec<usize>> {
        let p = self.k_group_projective(word)?;
        let reg = self.calculus.regular_block();
        let mut dims = Vec::new();
        for (pos, &c) in p.coeffs.iter().enumerate() {
            if c < 0 {
                return Err(Error::Internal(format!("negative projective multiplicity in {p}")));
            }
            let w = reg.index_set()[pos];
            let dim = reg.to_verma(&reg.class(Basis::Projective, w)?)?.coeffs.iter().sum::<i64>() as usize;
            dims.extend(std::iter::repeat(dim).take(c as usize));
        }
        dims.sort_unstable_by(|a, b| b.cmp(a));
        Ok(dims)
    }

    /// Compares `dim Hom(BS(word1), BS(word2))` with the K-group prediction.
    pub fn struktursatz_check(&self, word1: &[usize], word2: &[usize]) -> Result<StruktursatzOutcome> {
        let m = self.bott_samelson(word1)?;
        let n = self.bott_samelson(word2)?;
        self.compare(word1, word2, &m, &n)
    }

    fn compare(
        &self,
        word1: &[usize],
        word2: &[usize],
        m: &GradedModuleOverC,
        n: &GradedModuleOverC,
    ) -> Result<StruktursatzOutcome> {
        let module_dim = hom_space(m, n)?.dim();
        let kgroup_dim = self.k_group_hom(word1, word2)?;
        Ok(StruktursatzOutcome {
            word1: word1.to_vec(),
            word2: word2.to_vec(),
            module_dim,
            kgroup_dim,
            holds: module_dim as i64 == kgroup_dim,
        })
    }
}

/// Runs [`SoergelContext::struktursatz_check`] over many pairs in parallel,
/// building each Bott–Samelson module once.
pub fn struktursatz_battery(ctx: &SoergelContext, pairs: &[BatteryPair]) -> Result<Vec<StruktursatzOutcome>> {
    let mut words: Vec<&Vec<usize>> = pairs.iter().flat_map(|(a, b)| [a, b]).collect();
    words.sort();
    words.dedup();
    let modules: HashMap<&Vec<usize>, GradedModuleOverC> = words
        .par_iter()
        .map(|w| ctx.bott_samelson(w).map(|m| (*w, m)))
        .collect::<Result<_>>()?;
    pairs.par_iter().map(|(a, b)| ctx.compare(a, b, &modules[a], &modules[b])).collect()
}

/// Every word of length at most `max_len` in `rank` generators, shortest first.
pub fn all_words(rank: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w: &Vec<usize>| {
                (0..rank).map(move |s| {
                    let mut v = w.clone();
                    v.push(s);
                    v
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

/// `count` pseudo-random pairs of words with lengths in `0..=max_len`.
pub fn seeded_pairs(rank: usize, max_len: usize, count: usize, seed: u64) -> Vec<BatteryPair> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let word = |rng: &mut ChaCha8Rng| {
        let len = rng.gen_range(0..=max_len);
        (0..len).map(|_| rng.gen_range(0..rank)).collect::<Vec<usize>>()
    };
    (0..count).map(|_| (word(&mut rng), word(&mut rng))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a1_examples() {
        let ctx = SoergelContext::build("A1".parse().unwrap()).unwrap();
        let o = ctx.struktursatz_check(&[], &[]).unwrap();
        assert!(o.holds && o.module_dim == 1);
        let o = ctx.struktursatz_check(&[0], &[0]).unwrap();
        assert!(o.holds && o.module_dim == 2);
        assert_eq!(ctx.predicted_summand_dims(&[0, 0]).unwrap(), vec![2, 2]);
    }

    #[test]
    fn mismatched_types_rejected() {
        let a1 = SoergelContext::build("A1".parse().unwrap()).unwrap();
        let a2 = SoergelContext::build("A2".parse().unwrap()).unwrap();
        let err = SoergelContext::new(a1.algebra().clone(), a2.calculus().clone()).unwrap_err();
        assert!(matches!(err, Error::Usage(_)));
    }

    #[test]
    fn word_enumeration() {
        assert_eq!(all_words(2, 3).len(), 15);
        let p = seeded_pairs(2, 5, 50, 7);
        assert_eq!(p, seeded_pairs(2, 5, 50, 7));
        assert!(p.iter().all(|(a, b)| a.len() <= 5 && b.len() <= 5));
    }
}
