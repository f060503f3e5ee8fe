use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::hom::hom_degree_zero;
use super::GradedModuleOverC;
use crate::linalg::{q, QMatrix};
use crate::{Error, Result, Q};

/// Seed used by [`split_idempotents`].
pub const DEFAULT_SEED: u64 = 0x5EED_0B5C;

const ATTEMPTS: usize = 8;

/// Decomposes `m` into indecomposable graded summands with the default seed.
pub fn split_idempotents(m: &GradedModuleOverC) -> Result<Vec<GradedModuleOverC>> {
    split_idempotents_seeded(m, DEFAULT_SEED)
}

/// Decomposes `m` into indecomposable graded summands.
///
/// A module is indecomposable when the trace form `tr(e_i e_j)` on its
/// degree-zero endomorphisms has rank one (the semisimple quotient is `Q`).
/// Otherwise a non-nilpotent, non-invertible endomorphism `a` is searched for
/// and the module is split as `ker a^n ⊕ im a^n`. Candidates are `φ - c`
/// where `c` is the scalar by which a random `φ` acts on a one-dimensional
/// graded piece, and random elements of the annihilator `{a : a u = 0}` of a
/// homogeneous vector `u`. If neither produces a split the result is
/// [`Error::SplittingIncomplete`].
pub fn split_idempotents_seeded(m: &GradedModuleOverC, seed: u64) -> Result<Vec<GradedModuleOverC>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    split_rec(m, &mut rng, &mut out)?;
    out.sort_by(|a, b| b.dim().cmp(&a.dim()).then_with(|| a.degrees().cmp(b.degrees())));
    Ok(out)
}

fn split_rec(m: &GradedModuleOverC, rng: &mut ChaCha8Rng, out: &mut Vec<GradedModuleOverC>) -> Result<()> {
    let e0 = hom_degree_zero(m, m)?;
    if e0.len() <= 1 || trace_form_rank(&e0) == 1 {
        out.push(m.clone());
        return Ok(());
    }
    let a = find_splitter(m, &e0, rng).ok_or_else(|| {
        Error::SplittingIncomplete(format!(
            "no rational idempotent found for a module with graded dimensions {:?}",
            m.graded_dims()
        ))
    })?;
    let (kernel, image) = fitting(m, &a)?;
    split_rec(&kernel, rng, out)?;
    split_rec(&image, rng, out)
}

fn trace_form_rank(e0: &[QMatrix]) -> usize {
    let k = e0.len();
    let mut g = QMatrix::zeros(k, k);
    for i in 0..k {
        for j in i..k {
            let t = (&e0[i] * &e0[j]).trace();
            g[(i, j)] = t.clone();
            g[(j, i)] = t;
        }
    }
    g.rank()
}

fn random_combination(basis: &[QMatrix], rng: &mut ChaCha8Rng) -> QMatrix {
    let (r, c) = (basis[0].rows(), basis[0].cols());
    basis.iter().fold(QMatrix::zeros(r, c), |acc, b| acc.add(&b.scale(&q(rng.gen_range(-3..=3)))))
}

fn is_nilpotent(a: &QMatrix) -> bool {
    a.pow(a.rows() as u32).is_zero()
}

fn find_splitter(m: &GradedModuleOverC, e0: &[QMatrix], rng: &mut ChaCha8Rng) -> Option<QMatrix> {
    let n = m.dim();
    let degrees: Vec<usize> = {
        let mut d = m.degrees().to_vec();
        d.dedup();
        d
    };
    for attempt in 0..ATTEMPTS {
        for &d in &degrees {
            let range = m.degree_range(d);
            if range.len() == 1 {
                let phi = random_combination(e0, rng);
                let c = phi[(range.start, range.start)].clone();
                let a = phi.sub(&QMatrix::identity(n).scale(&c));
                if !a.is_zero() && !is_nilpotent(&a) {
                    return Some(a);
                }
            }
            let vectors: Vec<Vec<Q>> = if attempt == 0 {
                range
                    .clone()
                    .map(|i| (0..n).map(|k| if k == i { q(1) } else { Q::zero() }).collect())
                    .collect()
            } else {
                vec![(0..n).map(|k| if range.contains(&k) { q(rng.gen_range(-3..=3)) } else { Q::zero() }).collect()]
            };
            for u in vectors {
                if u.iter().all(Zero::is_zero) {
                    continue;
                }
                // Columns: e_i u. Kernel: coefficient vectors t with sum t_i e_i u = 0.
                let cols: Vec<Vec<Q>> = e0.iter().map(|e| e.mul_vec(&u)).collect();
                let ann = QMatrix::from_columns(n, &cols).kernel();
                if ann.is_empty() {
                    continue;
                }
                let gens: Vec<QMatrix> = ann
                    .iter()
                    .map(|t| {
                        e0.iter().zip(t).fold(QMatrix::zeros(n, n), |acc, (e, x)| acc.add(&e.scale(x)))
                    })
                    .collect();
                let a = random_combination(&gens, rng);
                if !a.is_zero() && !is_nilpotent(&a) {
                    return Some(a);
                }
            }
        }
    }
    None
}

/// Fitting decomposition `m = ker a^n ⊕ im a^n` for a degree-zero endomorphism.
fn fitting(m: &GradedModuleOverC, a: &QMatrix) -> Result<(GradedModuleOverC, GradedModuleOverC)> {
    let n = m.dim();
    let p = a.pow(n as u32);
    let mut ker_cols: Vec<(usize, Vec<Q>)> = Vec::new();
    let mut im_cols: Vec<(usize, Vec<Q>)> = Vec::new();
    let mut degrees = m.degrees().to_vec();
    degrees.dedup();
    for d in degrees {
        let range: Vec<usize> = m.degree_range(d).collect();
        let block = p.select(&range, &range);
        let embed = |v: Vec<Q>| {
            let mut full = vec![Q::zero(); n];
            for (&i, x) in range.iter().zip(v) {
                full[i] = x;
            }
            full
        };
        for v in block.kernel() {
            ker_cols.push((d, embed(v)));
        }
        for v in block.column_basis() {
            im_cols.push((d, embed(v)));
        }
    }
    Ok((restrict(m, &ker_cols)?, restrict(m, &im_cols)?))
}

/// The submodule spanned by homogeneous columns, sorted by degree.
fn restrict(m: &GradedModuleOverC, cols: &[(usize, Vec<Q>)]) -> Result<GradedModuleOverC> {
    let basis = QMatrix::from_columns(m.dim(), &cols.iter().map(|(_, v)| v.clone()).collect::<Vec<_>>());
    let actions = m
        .actions()
        .iter()
        .map(|x| {
            basis
                .solve(&(x * &basis))
                .ok_or_else(|| Error::Internal("Fitting component is not a submodule".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    GradedModuleOverC::new(m.algebra().clone(), cols.iter().map(|(d, _)| *d).collect(), actions)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::coinv::build_coinvariants;
    use crate::soergel::bott_samelson;
    use crate::weyl::weyl_group;

    fn dims(t: &str, word: &[usize]) -> Vec<usize> {
        let c = Arc::new(build_coinvariants(&weyl_group(t.parse().unwrap()).unwrap()).unwrap());
        let m = bott_samelson(&c, word).unwrap();
        split_idempotents(&m).unwrap().iter().map(GradedModuleOverC::dim).collect()
    }

    #[test]
    fn known_splittings() {
        assert_eq!(dims("A1", &[0]), vec![2]);
        assert_eq!(dims("A1", &[0, 0]), vec![2, 2]);
        assert_eq!(dims("A1", &[0, 0, 0]), vec![2, 2, 2, 2]);
        assert_eq!(dims("A2", &[0, 1, 0]), vec![6, 2]);
    }
}
