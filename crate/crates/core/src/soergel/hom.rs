use std::collections::HashMap;
use std::sync::Arc;

use num_traits::Zero;

use super::GradedModuleOverC;
use crate::linalg::{certified_kernel, integer_row, QMatrix, SparseRow};
use crate::{Error, Result, Q};

/// Module maps `M -> N`, split by degree shift.
#[derive(Debug, Clone)]
pub struct HomSpace {
    /// Basis of homogeneous maps as `(shift, matrix)`; matrices are `dim N × dim M`.
    pub basis: Vec<(i64, QMatrix)>,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Dimension of the maps of a given degree shift.
    pub fn dim_of_shift(&self, k: i64) -> usize {
        self.basis.iter().filter(|(s, _)| *s == k).count()
    }

    /// Degree-preserving maps.
    pub fn degree_zero(&self) -> Vec<QMatrix> {
        self.basis.iter().filter(|(s, _)| *s == 0).map(|(_, m)| m.clone()).collect()
    }
}

/// All `C`-module maps `M -> N`, constrained by the degree-one generators.
pub fn hom_space(m: &GradedModuleOverC, n: &GradedModuleOverC) -> Result<HomSpace> {
    hom_impl(m, n, false, None)
}

/// As [`hom_space`] but also imposing commutation with every product
/// `x_i x_j`, which must not change the answer.
pub fn hom_space_with_quadratic(m: &GradedModuleOverC, n: &GradedModuleOverC) -> Result<HomSpace> {
    hom_impl(m, n, true, None)
}

/// Degree-preserving maps only.
pub(crate) fn hom_degree_zero(m: &GradedModuleOverC, n: &GradedModuleOverC) -> Result<Vec<QMatrix>> {
    Ok(hom_impl(m, n, false, Some(0))?.degree_zero())
}

fn hom_impl(m: &GradedModuleOverC, n: &GradedModuleOverC, quadratic: bool, only: Option<i64>) -> Result<HomSpace> {
    if !Arc::ptr_eq(m.algebra(), n.algebra()) {
        return Err(Error::Usage("modules over different algebras".into()));
    }
    let (dm, dn) = (m.dim(), n.dim());
    let mut ops: Vec<(QMatrix, QMatrix, i64)> =
        m.actions().iter().zip(n.actions()).map(|(a, b)| (a.clone(), b.clone(), 1)).collect();
    if quadratic {
        let r = m.actions().len();
        for i in 0..r {
            for j in i..r {
                ops.push((&m.actions()[i] * &m.actions()[j], &n.actions()[i] * &n.actions()[j], 2));
            }
        }
    }
    let deg_m: Vec<i64> = m.degrees().iter().map(|&d| d as i64).collect();
    let deg_n: Vec<i64> = n.degrees().iter().map(|&d| d as i64).collect();
    let (Some(&m_lo), Some(&m_hi), Some(&n_lo), Some(&n_hi)) =
        (deg_m.first(), deg_m.last(), deg_n.first(), deg_n.last())
    else {
        return Ok(HomSpace { basis: Vec::new() });
    };
    let shifts: Vec<i64> = match only {
        Some(k) => vec![k],
        None => ((n_lo - m_hi)..=(n_hi - m_lo)).collect(),
    };
    let mut basis = Vec::new();
    for k in shifts {
        // Unknowns: entries phi[p][c] with deg p = deg c + k.
        let mut unknown: HashMap<(usize, usize), usize> = HashMap::new();
        let mut cells = Vec::new();
        for c in 0..dm {
            for p in 0..dn {
                if deg_n[p] == deg_m[c] + k {
                    unknown.insert((p, c), cells.len());
                    cells.push((p, c));
                }
            }
        }
        if cells.is_empty() {
            continue;
        }
        let mut rows: Vec<SparseRow> = Vec::new();
        for (am, an, step) in &ops {
            // (an phi - phi am)[p][c] = 0 for deg p = deg c + k + step.
            for c in 0..dm {
                for p in 0..dn {
                    if deg_n[p] != deg_m[c] + k + step {
                        continue;
                    }
                    let mut entries: HashMap<usize, Q> = HashMap::new();
                    for q in 0..dn {
                        let x = &an[(p, q)];
                        if x.is_zero() {
                            continue;
                        }
                        if let Some(&u) = unknown.get(&(q, c)) {
                            *entries.entry(u).or_insert_with(Q::zero) += x;
                        }
                    }
                    for r in 0..dm {
                        let x = &am[(r, c)];
                        if x.is_zero() {
                            continue;
                        }
                        if let Some(&u) = unknown.get(&(p, r)) {
                            *entries.entry(u).or_insert_with(Q::zero) -= x;
                        }
                    }
                    let mut e: Vec<(usize, Q)> = entries.into_iter().filter(|(_, x)| !x.is_zero()).collect();
                    if e.is_empty() {
                        continue;
                    }
                    e.sort_by_key(|(u, _)| *u);
                    rows.push(integer_row(&e));
                }
            }
        }
        for v in certified_kernel(&rows, cells.len()) {
            let mut phi = QMatrix::zeros(dn, dm);
            for ((p, c), x) in cells.iter().zip(v) {
                phi[(*p, *c)] = x;
            }
            basis.push((k, phi));
        }
    }
    Ok(HomSpace { basis })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coinv::build_coinvariants;
    use crate::soergel::{bott_samelson, unit_module};
    use crate::weyl::weyl_group;

    #[test]
    fn small_hom_dims() {
        let c = Arc::new(build_coinvariants(&weyl_group("A1".parse().unwrap()).unwrap()).unwrap());
        let u = unit_module(&c);
        assert_eq!(hom_space(&u, &u).unwrap().dim(), 1);
        let bs = bott_samelson(&c, &[0]).unwrap();
        let h = hom_space(&bs, &bs).unwrap();
        assert_eq!(h.dim(), 2);
        assert_eq!(h.dim_of_shift(0), 1);
        assert_eq!(h.dim_of_shift(1), 1);
        for (_, phi) in &h.basis {
            for (a, b) in bs.actions().iter().zip(bs.actions()) {
                assert_eq!(&(b * phi), &(phi * a));
            }
        }
    }

    #[test]
    fn quadratic_constraints_are_redundant() {
        let c = Arc::new(build_coinvariants(&weyl_group("A2".parse().unwrap()).unwrap()).unwrap());
        let m = bott_samelson(&c, &[0, 1]).unwrap();
        let n = bott_samelson(&c, &[1, 0, 1]).unwrap();
        assert_eq!(hom_space(&m, &n).unwrap().dim(), hom_space_with_quadratic(&m, &n).unwrap().dim());
    }
}
