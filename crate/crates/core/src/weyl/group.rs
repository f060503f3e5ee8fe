use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::root_system::{CartanDatum, MAX_ORDER};
use crate::{Error, Result};

/// Index of an element in its [`WeylGroup`] table.
pub type ElemId = usize;

/// A group element as its shortlex-least reduced word.
///
/// The word `[i1, .., ik]` denotes `s_{i1} s_{i2} .. s_{ik}` with 0-based
/// generator indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeylElem {
    pub word: Vec<usize>,
    pub length: usize,
}

impl fmt::Display for WeylElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return f.write_str("e");
        }
        for i in &self.word {
            write!(f, "s{}", i + 1)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Extremal {
    Shortest,
    Longest,
}

/// Fully enumerated Weyl group with multiplication table and Bruhat order.
///
/// Elements are stored in shortlex order of their canonical words, so the
/// identity has id 0 and lengths are non-decreasing along the table.
#[derive(Debug, Clone)]
pub struct WeylGroup {
    datum: CartanDatum,
    elements: Vec<WeylElem>,
    /// `right[w][i] = w s_i`
    right: Vec<Vec<ElemId>>,
    /// `left[i][w] = s_i w`
    left: Vec<Vec<ElemId>>,
    mult: Vec<ElemId>,
    inverse: Vec<ElemId>,
    bruhat: Vec<Vec<bool>>,
    longest: ElemId,
    key_index: HashMap<Vec<i64>, ElemId>,
}

impl WeylGroup {
    pub fn datum(&self) -> &CartanDatum {
        &self.datum
    }

    pub fn rank(&self) -> usize {
        self.datum.rank()
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[WeylElem] {
        &self.elements
    }

    pub fn elem(&self, w: ElemId) -> &WeylElem {
        &self.elements[w]
    }

    pub fn ids(&self) -> std::ops::Range<ElemId> {
        0..self.elements.len()
    }

    pub fn identity(&self) -> ElemId {
        0
    }

    pub fn longest(&self) -> ElemId {
        self.longest
    }

    pub fn length(&self, w: ElemId) -> usize {
        self.elements[w].length
    }

    pub fn generator(&self, i: usize) -> ElemId {
        self.right[0][i]
    }

    pub fn mul(&self, a: ElemId, b: ElemId) -> ElemId {
        self.mult[a * self.order() + b]
    }

    pub fn inverse(&self, w: ElemId) -> ElemId {
        self.inverse[w]
    }

    /// `w s_i`
    pub fn mul_gen_right(&self, w: ElemId, i: usize) -> ElemId {
        self.right[w][i]
    }

    /// `s_i w`
    pub fn mul_gen_left(&self, i: usize, w: ElemId) -> ElemId {
        self.left[i][w]
    }

    pub fn bruhat_leq(&self, x: ElemId, y: ElemId) -> bool {
        self.bruhat[x][y]
    }

    pub fn bruhat_matrix(&self) -> &[Vec<bool>] {
        &self.bruhat
    }

    /// Right descent set `{i : l(w s_i) < l(w)}`.
    pub fn right_descents(&self, w: ElemId) -> Vec<usize> {
        (0..self.rank()).filter(|&i| self.length(self.right[w][i]) < self.length(w)).collect()
    }

    /// Left descent set `{i : l(s_i w) < l(w)}`.
    pub fn left_descents(&self, w: ElemId) -> Vec<usize> {
        (0..self.rank()).filter(|&i| self.length(self.left[i][w]) < self.length(w)).collect()
    }

    /// Element denoted by an arbitrary (not necessarily reduced) word.
    pub fn from_word(&self, word: &[usize]) -> Result<ElemId> {
        let mut w = 0;
        for &i in word {
            if i >= self.rank() {
                return Err(Error::Usage(format!("generator index {i} out of range for {}", self.datum.cartan_type)));
            }
            w = self.right[w][i];
        }
        Ok(w)
    }

    pub fn find(&self, elem: &WeylElem) -> Option<ElemId> {
        let w = self.from_word(&elem.word).ok()?;
        (self.elements[w] == *elem).then_some(w)
    }

    /// Linear action on an integral weight in fundamental-weight coordinates.
    pub fn act_int(&self, w: ElemId, v: &[i64]) -> Vec<i64> {
        let mut out = v.to_vec();
        for &i in self.elements[w].word.iter().rev() {
            self.datum.reflect(i, &mut out);
        }
        out
    }

    /// All reflections `w s_i w^{-1}`.
    pub fn reflections(&self) -> Vec<ElemId> {
        let mut refl: Vec<ElemId> = self
            .ids()
            .flat_map(|w| (0..self.rank()).map(move |i| (w, i)))
            .map(|(w, i)| self.mul(self.right[w][i], self.inverse[w]))
            .collect();
        refl.sort_unstable();
        refl.dedup();
        refl
    }

    /// Bruhat order recomputed as the transitive closure of `x < x t` for
    /// reflections `t` with `l(x t) = l(x) + 1`.
    pub fn bruhat_by_reflection_covers(&self) -> Vec<Vec<bool>> {
        let n = self.order();
        let refl = self.reflections();
        let mut below: Vec<Vec<ElemId>> = vec![Vec::new(); n];
        for x in self.ids() {
            for &t in &refl {
                let y = self.mul(x, t);
                if self.length(y) == self.length(x) + 1 {
                    below[y].push(x);
                }
            }
        }
        let mut leq = vec![vec![false; n]; n];
        for y in self.ids() {
            let mut queue = VecDeque::from([y]);
            leq[y][y] = true;
            while let Some(z) = queue.pop_front() {
                for &x in &below[z] {
                    if !leq[x][y] {
                        leq[x][y] = true;
                        queue.push_back(x);
                    }
                }
            }
        }
        leq
    }

    /// Poincaré polynomial coefficients `#{w : l(w) = k}`.
    pub fn poincare_polynomial(&self) -> Vec<i64> {
        let mut p = vec![0i64; self.length(self.longest) + 1];
        for e in &self.elements {
            p[e.length] += 1;
        }
        p
    }

    pub fn elements_of_length(&self, k: usize) -> impl Iterator<Item = ElemId> + '_ {
        self.ids().filter(move |&w| self.length(w) == k)
    }

    pub(crate) fn key_of_matrix(m: &[Vec<i64>]) -> Vec<i64> {
        m.iter().flatten().copied().collect()
    }

    pub fn key_index(&self) -> &HashMap<Vec<i64>, ElemId> {
        &self.key_index
    }
}

/// Enumerates the Weyl group by breadth-first closure, deduplicating by the
/// action on the simple roots.
pub fn enumerate_weyl(datum: &CartanDatum) -> Result<WeylGroup> {
    let n = datum.rank();
    // Matrix of w on fundamental-weight coordinates, stored as the images of
    // the simple roots; s_i acts by reflect().
    let image_of_simple_roots = |word: &[usize]| -> Vec<Vec<i64>> {
        datum
            .simple_roots
            .iter()
            .map(|a| {
                let mut v = a.clone();
                for &i in word.iter().rev() {
                    datum.reflect(i, &mut v);
                }
                v
            })
            .collect()
    };

    let mut elements = vec![WeylElem { word: vec![], length: 0 }];
    let mut key_index = HashMap::new();
    key_index.insert(WeylGroup::key_of_matrix(&image_of_simple_roots(&[])), 0);
    let mut right: Vec<Vec<Option<ElemId>>> = vec![vec![None; n]];
    let mut layer_start = 0;
    loop {
        let layer_end = elements.len();
        if layer_start == layer_end {
            break;
        }
        for w in layer_start..layer_end {
            for i in 0..n {
                if right[w][i].is_some() {
                    continue;
                }
                let mut word = elements[w].word.clone();
                word.push(i);
                let key = WeylGroup::key_of_matrix(&image_of_simple_roots(&word));
                let target = match key_index.get(&key) {
                    Some(&id) => id,
                    None => {
                        let id = elements.len();
                        if id >= MAX_ORDER {
                            return Err(Error::Unsupported(format!("group order exceeds {MAX_ORDER}")));
                        }
                        let length = word.len();
                        elements.push(WeylElem { word, length });
                        right.push(vec![None; n]);
                        key_index.insert(key, id);
                        id
                    }
                };
                right[w][i] = Some(target);
                right[target][i] = Some(w);
            }
        }
        layer_start = layer_end;
    }
    let right: Vec<Vec<ElemId>> = right
        .into_iter()
        .map(|r| r.into_iter().map(|x| x.expect("closed under generators")).collect())
        .collect();
    let order = elements.len();

    let mut mult = vec![0; order * order];
    for a in 0..order {
        for b in 0..order {
            let mut w = a;
            for &i in &elements[b].word {
                w = right[w][i];
            }
            mult[a * order + b] = w;
        }
    }
    let mut inverse = vec![0; order];
    for a in 0..order {
        for b in 0..order {
            if mult[a * order + b] == 0 {
                inverse[a] = b;
                break;
            }
        }
    }
    let left: Vec<Vec<ElemId>> = (0..n).map(|i| (0..order).map(|w| mult[right[0][i] * order + w]).collect()).collect();

    // Lifting-property recursion: with s = first letter of y (s y < y),
    // x <= y iff (s x < x ? s x <= s y : x <= s y).
    let mut bruhat = vec![vec![false; order]; order];
    bruhat[0][0] = true;
    for y in 1..order {
        let s = elements[y].word[0];
        let sy = left[s][y];
        for x in 0..order {
            let sx = left[s][x];
            bruhat[x][y] = if elements[sx].length < elements[x].length { bruhat[sx][sy] } else { bruhat[x][sy] };
        }
    }
    let longest = (0..order).max_by_key(|&w| elements[w].length).expect("nonempty group");

    let group = WeylGroup { datum: datum.clone(), elements, right, left, mult, inverse, bruhat, longest, key_index };
    check_group(&group)?;
    Ok(group)
}

fn check_group(g: &WeylGroup) -> Result<()> {
    let expected: usize = g.datum.degrees.iter().product();
    if g.order() != expected {
        return Err(Error::Internal(format!("|W| = {}, product of degrees = {expected}", g.order())));
    }
    if g.length(g.longest) != g.datum.positive_roots.len() {
        return Err(Error::Internal("length of the longest element differs from the number of positive roots".into()));
    }
    if !g.ids().all(|w| g.bruhat[0][w] && g.bruhat[w][g.longest]) {
        return Err(Error::Internal("Bruhat order lacks e as minimum or w0 as maximum".into()));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::{build_root_system, TypeLetter};

    fn group(t: TypeLetter, r: usize) -> WeylGroup {
        enumerate_weyl(&build_root_system(t, r).unwrap()).unwrap()
    }

    #[test]
    fn orders() {
        assert_eq!(group(TypeLetter::A, 1).order(), 2);
        let a2 = group(TypeLetter::A, 2);
        assert_eq!(a2.order(), 6);
        assert_eq!(a2.length(a2.longest()), 3);
        let a3 = group(TypeLetter::A, 3);
        assert_eq!(a3.order(), 24);
        assert_eq!(a3.length(a3.longest()), 6);
        assert_eq!(group(TypeLetter::G, 2).order(), 12);
        assert_eq!(group(TypeLetter::B, 3).order(), 48);
    }

    #[test]
    fn words_are_shortlex_least() {
        let a2 = group(TypeLetter::A, 2);
        let words: Vec<Vec<usize>> = a2.elements().iter().map(|e| e.word.clone()).collect();
        assert_eq!(words, vec![vec![], vec![0], vec![1], vec![0, 1], vec![1, 0], vec![0, 1, 0]]);
    }

    #[test]
    fn a2_bruhat_examples() {
        let a2 = group(TypeLetter::A, 2);
        let s1 = a2.from_word(&[0]).unwrap();
        let s2 = a2.from_word(&[1]).unwrap();
        let s1s2 = a2.from_word(&[0, 1]).unwrap();
        assert!(a2.bruhat_leq(s1, s1s2));
        assert!(!a2.bruhat_leq(s1, s2));
    }

    #[test]
    fn reflection_closure_agrees_on_f4() {
        let f4 = group(TypeLetter::F, 4);
        assert_eq!(f4.order(), 1152);
        assert_eq!(f4.bruhat_by_reflection_covers(), f4.bruhat_matrix());
    }

    #[test]
    fn bad_word_is_a_usage_error() {
        let a2 = group(TypeLetter::A, 2);
        assert!(matches!(a2.from_word(&[2]), Err(Error::Usage(_))));
    }
}
