//! The Iwahori–Hecke algebra over `Z[q, q^{-1}]` in the standard basis,
//! R-polynomials and Kazhdan–Lusztig polynomials.
//!
//! Conventions: `T_s^2 = (q-1) T_s + q T_e` and
//! `b_w = sum_{x <= w} P_{x,w}(q) T_x`, so `b_s = T_s + T_e` and no half
//! powers of `q` appear.

mod kl;
mod laurent;

use std::collections::BTreeMap;
use std::sync::Arc;

pub use kl::{kl_table, r_polynomials, KLTable, Poly};
pub use laurent::LaurentPoly;

use crate::weyl::{ElemId, WeylGroup};
use crate::{Error, Result};

/// A finite combination `sum_w c_w T_w`.
#[derive(Debug, Clone)]
pub struct HeckeElement {
    group: Arc<WeylGroup>,
    terms: BTreeMap<ElemId, LaurentPoly>,
}

impl PartialEq for HeckeElement {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.group, &other.group) && self.terms == other.terms
    }
}

impl HeckeElement {
    pub fn zero(group: &Arc<WeylGroup>) -> Self {
        HeckeElement { group: Arc::clone(group), terms: BTreeMap::new() }
    }

    /// `T_w`
    pub fn standard(group: &Arc<WeylGroup>, w: ElemId) -> Self {
        Self::term(group, w, LaurentPoly::one())
    }

    /// `c T_w`
    pub fn term(group: &Arc<WeylGroup>, w: ElemId, c: LaurentPoly) -> Self {
        let mut h = Self::zero(group);
        h.add_term(w, &c);
        h
    }

    pub fn group(&self) -> &Arc<WeylGroup> {
        &self.group
    }

    pub fn coeff(&self, w: ElemId) -> LaurentPoly {
        self.terms.get(&w).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (ElemId, &LaurentPoly)> {
        self.terms.iter().map(|(&w, c)| (w, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: ElemId, c: &LaurentPoly) {
        let entry = self.terms.entry(w).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        same_group(self, other)?;
        let mut out = self.clone();
        for (w, c) in other.terms() {
            out.add_term(w, c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero(&self.group);
        for (w, x) in self.terms() {
            out.add_term(w, &(x * c));
        }
        out
    }

    /// Right multiplication by `T_s`.
    pub fn mul_generator(&self, s: usize) -> Self {
        let g = &self.group;
        let mut out = Self::zero(g);
        for (w, c) in self.terms() {
            let ws = g.mul_gen_right(w, s);
            if g.length(ws) > g.length(w) {
                out.add_term(ws, c);
            } else {
                out.add_term(w, &(c * &LaurentPoly::q_minus_one()));
                out.add_term(ws, &c.shift(1));
            }
        }
        out
    }
}

fn same_group(a: &HeckeElement, b: &HeckeElement) -> Result<()> {
    if Arc::ptr_eq(&a.group, &b.group) {
        Ok(())
    } else {
        Err(Error::Usage("Hecke elements belong to different groups".into()))
    }
}

/// Product in the Hecke algebra.
pub fn hecke_multiply(a: &HeckeElement, b: &HeckeElement) -> Result<HeckeElement> {
    same_group(a, b)?;
    let mut out = HeckeElement::zero(&a.group);
    for (y, c) in b.terms() {
        let mut partial = a.scale(c);
        for &s in &a.group.elem(y).word {
            partial = partial.mul_generator(s);
        }
        for (w, x) in partial.terms() {
            out.add_term(w, x);
        }
    }
    Ok(out)
}

/// `b_w = sum_x P_{x,w} T_x`.
pub fn kl_basis(table: &KLTable, w: ElemId) -> HeckeElement {
    let group = table.group();
    let mut h = HeckeElement::zero(group);
    for x in group.ids() {
        h.add_term(x, &table.poly(x, w));
    }
    h
}

/// Image in the integral group ring `Z[W]` under `q -> 1`, indexed by element id.
pub fn specialize_q1(h: &HeckeElement) -> Vec<i64> {
    let mut v = vec![0; h.group.order()];
    for (w, c) in h.terms() {
        v[w] = c.eval_at_one();
    }
    v
}

/// Product in `Z[W]` of two coefficient vectors.
pub fn group_ring_multiply(group: &WeylGroup, a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; group.order()];
    for (x, &cx) in a.iter().enumerate().filter(|(_, c)| **c != 0) {
        for (y, &cy) in b.iter().enumerate().filter(|(_, c)| **c != 0) {
            out[group.mul(x, y)] += cx * cy;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::weyl_group;

    #[test]
    fn defining_relations() {
        let g = weyl_group("A2".parse().unwrap()).unwrap();
        let s1 = g.generator(0);
        let s2 = g.generator(1);
        let t1 = HeckeElement::standard(&g, s1);
        let t2 = HeckeElement::standard(&g, s2);
        let e = HeckeElement::standard(&g, 0);
        assert_eq!(hecke_multiply(&e, &t1).unwrap(), t1);
        let sq = hecke_multiply(&t1, &t1).unwrap();
        assert_eq!(sq.coeff(s1), LaurentPoly::q_minus_one());
        assert_eq!(sq.coeff(0), LaurentPoly::monomial(1, 1));
        let prod = hecke_multiply(&t1, &t2).unwrap();
        assert_eq!(prod, HeckeElement::standard(&g, g.mul(s1, s2)));
    }

    #[test]
    fn kl_basis_examples() {
        let g = weyl_group("A2".parse().unwrap()).unwrap();
        let kl = kl_table(&g);
        assert_eq!(kl_basis(&kl, 0), HeckeElement::standard(&g, 0));
        let w = g.from_word(&[0, 1]).unwrap();
        let b = kl_basis(&kl, w);
        let support: Vec<ElemId> = b.terms().map(|(x, _)| x).collect();
        assert_eq!(support, vec![0, g.generator(0), g.generator(1), w]);
        assert_eq!(specialize_q1(&kl_basis(&kl, g.generator(0)))[..3], [1, 1, 0]);
    }

    #[test]
    fn mismatched_groups_rejected() {
        let a = weyl_group("A1".parse().unwrap()).unwrap();
        let b = weyl_group("A1".parse().unwrap()).unwrap();
        let x = HeckeElement::standard(&a, 0);
        let y = HeckeElement::standard(&b, 0);
        assert!(matches!(hecke_multiply(&x, &y), Err(Error::Usage(_))));
    }
}
