//! Independent reference computations shared by the integration and
//! acceptance tests. Only the multiplication table and lengths of the group
//! are used; Bruhat order and KL polynomials are rebuilt from scratch.
#![allow(dead_code)]

use std::collections::BTreeMap;

use blockcalc::weyl::WeylGroup;

/// Laurent polynomial in `q`, exponent -> coefficient.
pub type Laurent = BTreeMap<i32, i64>;

fn add_into(a: &mut Laurent, b: &Laurent, scale: i64, shift: i32) {
    for (&e, &c) in b {
        let v = a.entry(e + shift).or_insert(0);
        *v += scale * c;
        if *v == 0 {
            a.remove(&(e + shift));
        }
    }
}

fn mul(a: &Laurent, b: &Laurent) -> Laurent {
    let mut out = Laurent::new();
    for (&e, &c) in a {
        add_into(&mut out, b, c, e);
    }
    out
}

/// `h T_s^{-1}` where `T_s^{-1} = q^{-1} T_s - (1 - q^{-1}) T_e`.
fn right_mul_inverse(g: &WeylGroup, h: &[Laurent], s: usize) -> Vec<Laurent> {
    let mut out = vec![Laurent::new(); h.len()];
    for (w, c) in h.iter().enumerate() {
        if c.is_empty() {
            continue;
        }
        let ws = g.mul_gen_right(w, s);
        // T_w T_s is T_ws if ws > w, else (q - 1) T_w + q T_ws.
        if g.length(ws) > g.length(w) {
            add_into(&mut out[ws], c, 1, -1);
        } else {
            add_into(&mut out[w], c, 1, 0);
            add_into(&mut out[w], c, -1, -1);
            add_into(&mut out[ws], c, 1, 0);
        }
        add_into(&mut out[w], c, -1, 0);
        add_into(&mut out[w], c, 1, -1);
    }
    out
}

/// `R_{x,y}` from `T_{y^{-1}}^{-1} = ε_y q^{-l(y)} sum_x ε_x R_{x,y} T_x`,
/// indexed `[y][x]` and stored as dense coefficient vectors in `q`.
pub fn r_by_hecke_inverse(g: &WeylGroup) -> Vec<Vec<Vec<i64>>> {
    g.ids()
        .map(|y| {
            let mut h = vec![Laurent::new(); g.order()];
            h[0].insert(0, 1);
            // T_{y^{-1}}^{-1} = T_{s1}^{-1} .. T_{sk}^{-1} for y = s1..sk.
            for &s in &g.elem(y).word {
                h = right_mul_inverse(g, &h, s);
            }
            let ly = g.length(y) as i32;
            h.iter()
                .enumerate()
                .map(|(x, c)| {
                    let sign = if (g.length(x) + g.length(y)) % 2 == 0 { 1 } else { -1 };
                    let mut dense = Vec::new();
                    for (&e, &v) in c {
                        let k = (e + ly) as usize;
                        assert!(e + ly >= 0, "R-polynomial with negative exponent");
                        if dense.len() <= k {
                            dense.resize(k + 1, 0);
                        }
                        dense[k] = sign * v;
                    }
                    dense
                })
                .collect()
        })
        .collect()
}

/// Bruhat order read off the R-polynomials: `x <= y` iff `R_{x,y} != 0`.
pub fn bruhat_from_r(r: &[Vec<Vec<i64>>]) -> Vec<Vec<bool>> {
    let n = r.len();
    (0..n).map(|x| (0..n).map(|y| !r[y][x].is_empty()).collect()).collect()
}

/// `P_{x,y}` by inverting `q^{d} P(1/q) - P = sum_{x<z<=y} R_{x,z} P_{z,y}`
/// and keeping degrees `<= (d-1)/2`. Indexed `[y][x]`.
pub fn kl_by_r_inversion(g: &WeylGroup) -> Vec<Vec<Vec<i64>>> {
    let r = r_by_hecke_inverse(g);
    let leq = bruhat_from_r(&r);
    let n = g.order();
    let to_laurent = |v: &[i64]| -> Laurent { v.iter().enumerate().filter(|(_, c)| **c != 0).map(|(e, &c)| (e as i32, c)).collect() };
    let mut p = vec![vec![Vec::new(); n]; n];
    for y in g.ids() {
        p[y][y] = vec![1];
        let mut below: Vec<usize> = g.ids().filter(|&x| x != y && leq[x][y]).collect();
        below.sort_by_key(|&x| std::cmp::Reverse(g.length(x)));
        for x in below {
            let d = (g.length(y) - g.length(x)) as i32;
            let mut sum = Laurent::new();
            for z in g.ids().filter(|&z| z != x && leq[x][z] && leq[z][y]) {
                add_into(&mut sum, &mul(&to_laurent(&r[z][x]), &to_laurent(&p[y][z])), 1, 0);
            }
            let top = (d - 1) / 2;
            let mut dense = vec![0; (top + 1) as usize];
            for (&e, &c) in &sum {
                if e <= top {
                    assert!(e >= 0);
                    dense[e as usize] = -c;
                }
            }
            while dense.last() == Some(&0) {
                dense.pop();
            }
            p[y][x] = dense;
        }
    }
    p
}

/// `x <= y` iff some subword of the reduced word of `y` multiplies to `x`.
pub fn bruhat_by_subwords(g: &WeylGroup) -> Vec<Vec<bool>> {
    let n = g.order();
    let mut leq = vec![vec![false; n]; n];
    for y in g.ids() {
        let word = &g.elem(y).word;
        for mask in 0u32..(1 << word.len()) {
            let x = word
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .fold(0, |w, (_, &s)| g.mul_gen_right(w, s));
            leq[x][y] = true;
        }
    }
    leq
}

/// `prod_i (1 + t + .. + t^(d_i - 1))`.
pub fn poincare_from_degrees(degrees: &[usize]) -> Vec<i64> {
    let mut poly = vec![1i64];
    for &d in degrees {
        let mut next = vec![0; poly.len() + d - 1];
        for (k, &c) in poly.iter().enumerate() {
            for x in &mut next[k..k + d] {
                *x += c;
            }
        }
        poly = next;
    }
    poly
}

/// Degrees of the basic invariants, written out by hand.
pub fn known_degrees(t: &str) -> Vec<usize> {
    match t {
        "A1" => vec![2],
        "A2" => vec![2, 3],
        "B2" | "C2" => vec![2, 4],
        "G2" => vec![2, 6],
        "A3" => vec![2, 3, 4],
        "B3" | "C3" => vec![2, 4, 6],
        _ => panic!("no hand-written degrees for {t}"),
    }
}
