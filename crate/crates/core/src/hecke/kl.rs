use std::sync::Arc;

use rayon::prelude::*;

use super::laurent::LaurentPoly;
use crate::weyl::{ElemId, WeylGroup};

/// Dense polynomial in `q`, `p[k]` the coefficient of `q^k`, no trailing zeros.
pub type Poly = Vec<i64>;

fn trim(mut p: Poly) -> Poly {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

fn add_shifted(acc: &mut Poly, p: &[i64], shift: usize, scale: i64) {
    if p.is_empty() || scale == 0 {
        return;
    }
    if acc.len() < p.len() + shift {
        acc.resize(p.len() + shift, 0);
    }
    for (k, &c) in p.iter().enumerate() {
        acc[k + shift] += scale * c;
    }
}

/// R-polynomials `R_{x,y}` for all pairs, indexed `[y][x]`.
///
/// With `s` a right descent of `y`: `R_{x,y} = R_{xs,ys}` if `xs < x`, and
/// `(q-1) R_{x,ys} + q R_{xs,ys}` otherwise.
pub fn r_polynomials(group: &WeylGroup) -> Vec<Vec<Poly>> {
    let n = group.order();
    let mut r: Vec<Vec<Poly>> = vec![vec![Vec::new(); n]; n];
    r[0][0] = vec![1];
    for y in 1..n {
        let s = *group.elem(y).word.last().expect("non-identity");
        let ys = group.mul_gen_right(y, s);
        for x in 0..n {
            if !group.bruhat_leq(x, y) {
                continue;
            }
            let xs = group.mul_gen_right(x, s);
            r[y][x] = if group.length(xs) < group.length(x) {
                r[ys][xs].clone()
            } else {
                let mut acc = Vec::new();
                add_shifted(&mut acc, &r[ys][x], 1, 1);
                add_shifted(&mut acc, &r[ys][x], 0, -1);
                add_shifted(&mut acc, &r[ys][xs], 1, 1);
                trim(acc)
            };
        }
    }
    r
}

/// Kazhdan–Lusztig polynomials `P_{x,y}` of a finite Weyl group.
#[derive(Debug, Clone)]
pub struct KLTable {
    group: Arc<WeylGroup>,
    /// `table[y][x] = P_{x,y}`, empty unless `x <= y`.
    table: Vec<Vec<Poly>>,
    /// `mu[v]` lists `(z, mu(z,v))` for `z < v` with nonzero top coefficient.
    mu: Vec<Vec<(ElemId, i64)>>,
}

impl KLTable {
    pub fn group(&self) -> &Arc<WeylGroup> {
        &self.group
    }

    /// `P_{x,y}` as dense coefficients (empty if `x` is not below `y`).
    pub fn p(&self, x: ElemId, y: ElemId) -> &[i64] {
        &self.table[y][x]
    }

    pub fn poly(&self, x: ElemId, y: ElemId) -> LaurentPoly {
        LaurentPoly::from_coeffs(self.p(x, y))
    }

    /// `P_{x,y}(1)`.
    pub fn at_one(&self, x: ElemId, y: ElemId) -> i64 {
        self.p(x, y).iter().sum()
    }

    /// `mu(z, v)`: top coefficient of `P_{z,v}` when `l(v) - l(z)` is odd and
    /// the degree bound is attained, otherwise 0.
    pub fn mu(&self, z: ElemId, v: ElemId) -> i64 {
        self.mu[v].iter().find(|&&(w, _)| w == z).map_or(0, |&(_, m)| m)
    }
}

/// Builds the table by the standard recursion on `y = s v` with `s` the
/// first letter of `y`:
///
/// `P_{x,y} = q^{1-c} P_{sx,v} + q^c P_{x,v} - sum_z mu(z,v) q^{(l(y)-l(z))/2} P_{x,z}`
///
/// where `c = 1` if `sx < x` and `z` runs over `z < v` with `sz < z`.
/// Elements of one length are independent and are computed in parallel.
pub fn kl_table(group: &Arc<WeylGroup>) -> KLTable {
    let g = group.as_ref();
    let n = g.order();
    let mut table: Vec<Vec<Poly>> = vec![Vec::new(); n];
    let mut mu: Vec<Vec<(ElemId, i64)>> = vec![Vec::new(); n];
    table[0] = {
        let mut col = vec![Vec::new(); n];
        col[0] = vec![1];
        col
    };
    let max_len = g.length(g.longest());
    for len in 1..=max_len {
        let layer: Vec<ElemId> = g.elements_of_length(len).collect();
        let computed: Vec<(ElemId, Vec<Poly>)> = layer
            .par_iter()
            .map(|&y| (y, kl_column(g, &table, &mu, y)))
            .collect();
        for (y, col) in computed {
            mu[y] = mu_list(g, &col, y);
            table[y] = col;
        }
    }
    KLTable { group: Arc::clone(group), table, mu }
}

fn kl_column(g: &WeylGroup, table: &[Vec<Poly>], mu: &[Vec<(ElemId, i64)>], y: ElemId) -> Vec<Poly> {
    let n = g.order();
    let s = g.elem(y).word[0];
    let v = g.mul_gen_left(s, y);
    let ly = g.length(y);
    let correction: Vec<(ElemId, i64, usize)> = mu[v]
        .iter()
        .filter(|&&(z, _)| g.length(g.mul_gen_left(s, z)) < g.length(z))
        .map(|&(z, m)| (z, m, (ly - g.length(z)) / 2))
        .collect();
    let mut col = vec![Vec::new(); n];
    for x in 0..n {
        if !g.bruhat_leq(x, y) {
            continue;
        }
        let sx = g.mul_gen_left(s, x);
        let c = usize::from(g.length(sx) < g.length(x));
        let mut acc = Vec::new();
        add_shifted(&mut acc, &table[v][sx], 1 - c, 1);
        add_shifted(&mut acc, &table[v][x], c, 1);
        for &(z, m, shift) in &correction {
            add_shifted(&mut acc, &table[z][x], shift, -m);
        }
        col[x] = trim(acc);
    }
    col
}

fn mu_list(g: &WeylGroup, col: &[Poly], y: ElemId) -> Vec<(ElemId, i64)> {
    let ly = g.length(y);
    col.iter()
        .enumerate()
        .filter_map(|(z, p)| {
            let lz = g.length(z);
            if z == y || p.is_empty() || (ly - lz) % 2 == 0 {
                return None;
            }
            let top = (ly - lz - 1) / 2;
            let m = p.get(top).copied().unwrap_or(0);
            (m != 0).then_some((z, m))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::weyl_group;

    #[test]
    fn a1_and_a2_are_trivial() {
        for t in ["A1", "A2"] {
            let g = weyl_group(t.parse().unwrap()).unwrap();
            let kl = kl_table(&g);
            for y in g.ids() {
                for x in g.ids() {
                    let expect: &[i64] = if g.bruhat_leq(x, y) { &[1] } else { &[] };
                    assert_eq!(kl.p(x, y), expect);
                }
            }
        }
    }

    #[test]
    fn a3_nontrivial_value() {
        let g = weyl_group("A3".parse().unwrap()).unwrap();
        let kl = kl_table(&g);
        let x = g.from_word(&[1]).unwrap();
        let y = g.from_word(&[1, 0, 2, 1]).unwrap();
        assert_eq!(kl.p(x, y), &[1, 1]);
        assert_eq!(kl.mu(x, y), 1);
    }

    #[test]
    fn r_polynomial_small_values() {
        let g = weyl_group("A1".parse().unwrap()).unwrap();
        let r = r_polynomials(&g);
        assert_eq!(r[1][0], vec![-1, 1]);
        assert_eq!(r[1][1], vec![1]);
        assert!(r[0][1].is_empty());
    }
}
