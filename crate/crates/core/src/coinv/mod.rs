//! The coinvariant algebra `C = Q[h*] / (positive-degree W-invariants)`.
//!
//! Variables `x_1..x_r` are the fundamental weights, so `W` acts linearly by
//! `s_i(x_j) = x_j - δ_ij α_i` (this is the dot-action recentred at `-ρ`).
//! The Schubert basis is `X_{w0} = (1/|W|) prod_{α>0} α` and
//! `X_w = ∂_i X_{w s_i}` whenever `w s_i > w`.
//!
//! Normal forms are computed degree by degree: the degree-`d` part of the
//! ideal is row-reduced over the monomial basis, and a polynomial is
//! identified with its residue on the non-pivot monomials, which is then
//! expressed in the Schubert basis.

mod hilbert;
mod poly;

use std::collections::HashMap;
use std::sync::Arc;

use num_traits::{One, Zero};

pub use hilbert::{structure_algebra_hilbert_series, HilbertSeries};
pub use poly::{monomials_of_degree, Monomial, MultiPoly};

use crate::linalg::{q, QMatrix};
use crate::weyl::{ElemId, ParabolicData, WeylGroup};
use crate::{Error, Result, Q};

/// Largest rank for which coinvariant algebras are built.
pub const MAX_COINV_RANK: usize = 3;

/// Image of `x_j` under `w`, for every `j`.
fn variable_images(group: &WeylGroup, w: ElemId) -> Vec<MultiPoly> {
    let r = group.rank();
    (0..r)
        .map(|j| {
            let mut e = vec![0; r];
            e[j] = 1;
            MultiPoly::linear(&group.act_int(w, &e))
        })
        .collect()
}

/// `w(f)` for the linear action on `Q[h*]`.
pub fn w_act(group: &WeylGroup, w: ElemId, f: &MultiPoly) -> MultiPoly {
    if w == group.identity() {
        return f.clone();
    }
    f.substitute(&variable_images(group, w))
}

/// Simple root `α_i` as a linear form in the `x_j`.
pub fn simple_root_form(group: &WeylGroup, i: usize) -> MultiPoly {
    MultiPoly::linear(&group.datum().simple_roots[i])
}

/// Demazure operator `∂_i f = (f - s_i f) / α_i`.
pub fn demazure(group: &WeylGroup, i: usize, f: &MultiPoly) -> MultiPoly {
    let diff = f - &w_act(group, group.generator(i), f);
    diff.div_linear(&simple_root_form(group, i), i).expect("α_i divides f - s_i f")
}

/// `∂_w` along the given word, applied right to left as operators compose:
/// `∂_{i1 .. ik} = ∂_{i1} ∘ .. ∘ ∂_{ik}`.
pub fn demazure_word(group: &WeylGroup, word: &[usize], f: &MultiPoly) -> MultiPoly {
    word.iter().rev().fold(f.clone(), |acc, &i| demazure(group, i, &acc))
}

/// Scalar in front of `prod α` for the top Schubert class.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SchubertNormalization {
    /// `X_{w0} = (1/|W|) prod α`, giving `X_e = 1`.
    Standard,
    /// `X_{w0} = prod α`; fails the `X_e = 1` check. Used for fault injection.
    Unnormalized,
}

/// Per-degree normal-form data.
#[derive(Debug, Clone)]
struct Graded {
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    /// Reduced rows spanning the ideal in this degree, with their pivots.
    ideal_rows: Vec<Vec<Q>>,
    pivots: Vec<usize>,
    free_cols: Vec<usize>,
    /// Elements of this length, in id order.
    elems: Vec<ElemId>,
    /// Maps a residue on `free_cols` to Schubert coordinates on `elems`.
    to_schubert: QMatrix,
}

impl Graded {
    fn vector(&self, f: &MultiPoly) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.monomials.len()];
        for (m, c) in f.terms() {
            v[self.index[m]] += c;
        }
        v
    }

    fn residue(&self, mut v: Vec<Q>) -> Vec<Q> {
        for (row, &p) in self.ideal_rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let c = v[p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &c * r;
                }
            }
        }
        self.free_cols.iter().map(|&c| v[c].clone()).collect()
    }
}

/// The coinvariant algebra with its Schubert basis.
#[derive(Debug, Clone)]
pub struct CoinvariantAlgebra {
    group: Arc<WeylGroup>,
    schubert: Vec<MultiPoly>,
    graded: Vec<Graded>,
    /// `structure[u][v]` = sparse coordinates of `X_u X_v`.
    structure: Vec<Vec<Vec<(ElemId, Q)>>>,
    generator_action: Vec<QMatrix>,
    variable_action: Vec<QMatrix>,
}

/// Builds `C` with the standard Schubert normalisation.
pub fn build_coinvariants(group: &Arc<WeylGroup>) -> Result<CoinvariantAlgebra> {
    build_coinvariants_with(group, SchubertNormalization::Standard)
}

pub fn build_coinvariants_with(group: &Arc<WeylGroup>, norm: SchubertNormalization) -> Result<CoinvariantAlgebra> {
    let g = group.as_ref();
    let r = g.rank();
    if r > MAX_COINV_RANK {
        return Err(Error::Unsupported(format!(
            "coinvariant algebras are built up to rank {MAX_COINV_RANK}, got {}",
            g.datum().cartan_type
        )));
    }
    let n = g.order();
    let top = g.length(g.longest());

    // Schubert polynomials, longest first.
    let mut top_poly = MultiPoly::one(r);
    for beta in &g.datum().positive_roots {
        top_poly = &top_poly * &MultiPoly::linear(beta);
    }
    if norm == SchubertNormalization::Standard {
        top_poly = top_poly.scale(&Q::new(1.into(), (n as i64).into()));
    }
    let mut schubert: Vec<Option<MultiPoly>> = vec![None; n];
    schubert[g.longest()] = Some(top_poly);
    let mut by_length: Vec<ElemId> = g.ids().collect();
    by_length.sort_by_key(|&w| std::cmp::Reverse(g.length(w)));
    for &w in &by_length {
        if schubert[w].is_some() {
            continue;
        }
        let i = (0..r)
            .find(|&i| g.length(g.mul_gen_right(w, i)) > g.length(w))
            .expect("non-longest element has a right ascent");
        let parent = schubert[g.mul_gen_right(w, i)].as_ref().expect("longer classes built first");
        schubert[w] = Some(demazure(g, i, parent));
    }
    let schubert: Vec<MultiPoly> = schubert.into_iter().map(|p| p.expect("all classes built")).collect();
    let unit = &schubert[g.identity()];
    if *unit != MultiPoly::one(r) {
        return Err(Error::Internal(format!("Schubert normalisation gives X_e = {unit}, expected 1")));
    }

    let graded = graded_data(g, &schubert, top)?;
    let mut alg = CoinvariantAlgebra {
        group: Arc::clone(group),
        schubert,
        graded,
        structure: Vec::new(),
        generator_action: Vec::new(),
        variable_action: Vec::new(),
    };
    alg.structure = (0..n)
        .map(|u| {
            (0..n)
                .map(|v| sparse(&alg.reduce(&(&alg.schubert[u] * &alg.schubert[v]))))
                .collect()
        })
        .collect();
    alg.generator_action = (0..r)
        .map(|i| {
            let cols: Vec<Vec<Q>> =
                g.ids().map(|w| alg.reduce(&w_act(g, g.generator(i), &alg.schubert[w]))).collect();
            QMatrix::from_columns(n, &cols)
        })
        .collect();
    alg.variable_action = (0..r).map(|j| alg.multiplication_matrix(&MultiPoly::var(r, j))).collect();
    Ok(alg)
}

fn sparse(v: &[Q]) -> Vec<(ElemId, Q)> {
    v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect()
}

/// Basis of the degree-`k` invariants, obtained by averaging monomials.
pub(crate) fn invariants_of_degree(g: &WeylGroup, k: u32) -> Vec<MultiPoly> {
    let r = g.rank();
    let images: Vec<Vec<MultiPoly>> = g.ids().map(|w| variable_images(g, w)).collect();
    let monos = monomials_of_degree(r, k);
    let index: HashMap<&Monomial, usize> = monos.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let rows: Vec<Vec<Q>> = monos
        .iter()
        .map(|m| {
            let f = MultiPoly::monomial(m.clone(), Q::one());
            let mut v = vec![Q::zero(); monos.len()];
            for img in &images {
                for (mm, c) in f.substitute(img).terms() {
                    v[index[mm]] += c;
                }
            }
            v
        })
        .collect();
    let ech = QMatrix::from_rows(&rows).rref();
    (0..ech.pivots.len())
        .map(|row| {
            let mut p = MultiPoly::zero(r);
            for (c, m) in monos.iter().enumerate() {
                p.add_term(m.clone(), ech.matrix[(row, c)].clone());
            }
            p
        })
        .collect()
}

fn graded_data(g: &WeylGroup, schubert: &[MultiPoly], top: usize) -> Result<Vec<Graded>> {
    let r = g.rank();
    let max_inv = *g.datum().degrees.iter().max().expect("rank >= 1") as u32;
    let invariants: Vec<Vec<MultiPoly>> = (0..=max_inv).map(|k| if k == 0 { Vec::new() } else { invariants_of_degree(g, k) }).collect();
    let mut out = Vec::new();
    for d in 0..=(top as u32 + 1) {
        let monomials = monomials_of_degree(r, d);
        let index: HashMap<Monomial, usize> = monomials.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        let mut rows: Vec<Vec<Q>> = Vec::new();
        for k in 1..=d.min(max_inv) {
            for inv in &invariants[k as usize] {
                for m in monomials_of_degree(r, d - k) {
                    let p = inv * &MultiPoly::monomial(m, Q::one());
                    let mut v = vec![Q::zero(); monomials.len()];
                    for (mm, c) in p.terms() {
                        v[index[mm]] += c;
                    }
                    rows.push(v);
                }
            }
        }
        let (ideal_rows, pivots) = if rows.is_empty() {
            (Vec::new(), Vec::new())
        } else {
            let ech = QMatrix::from_rows(&rows).rref();
            let k = ech.pivots.len();
            ((0..k).map(|i| ech.matrix.row(i).to_vec()).collect(), ech.pivots)
        };
        let free_cols: Vec<usize> = (0..monomials.len()).filter(|c| !pivots.contains(c)).collect();
        let elems: Vec<ElemId> = g.elements_of_length(d as usize).collect();
        if free_cols.len() != elems.len() {
            return Err(Error::Internal(format!(
                "degree {d} of the coinvariant algebra has dimension {}, expected {}",
                free_cols.len(),
                elems.len()
            )));
        }
        let mut graded = Graded {
            monomials,
            index,
            ideal_rows,
            pivots,
            free_cols,
            elems,
            to_schubert: QMatrix::zeros(0, 0),
        };
        if !graded.elems.is_empty() {
            let cols: Vec<Vec<Q>> =
                graded.elems.iter().map(|&w| graded.residue(graded.vector(&schubert[w]))).collect();
            let residues = QMatrix::from_columns(graded.free_cols.len(), &cols);
            graded.to_schubert = residues
                .inverse()
                .map_err(|_| Error::Internal(format!("Schubert classes of degree {d} are dependent modulo the ideal")))?;
        }
        out.push(graded);
    }
    Ok(out)
}

impl CoinvariantAlgebra {
    pub fn group(&self) -> &Arc<WeylGroup> {
        &self.group
    }

    pub fn rank(&self) -> usize {
        self.group.rank()
    }

    pub fn dim(&self) -> usize {
        self.group.order()
    }

    /// Top degree `l(w0)`.
    pub fn top_degree(&self) -> usize {
        self.group.length(self.group.longest())
    }

    /// Polynomial representative of `X_w`.
    pub fn schubert_poly(&self, w: ElemId) -> &MultiPoly {
        &self.schubert[w]
    }

    /// Coordinates of the class of `f` in the Schubert basis, indexed by element id.
    pub fn reduce(&self, f: &MultiPoly) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.dim()];
        let Some(deg) = f.degree() else {
            return out;
        };
        for d in 0..=deg.min(self.top_degree() as u32) {
            let part = f.homogeneous_part(d);
            if part.is_zero() {
                continue;
            }
            let gd = &self.graded[d as usize];
            let res = gd.residue(gd.vector(&part));
            let coords = gd.to_schubert.mul_vec(&res);
            for (&w, c) in gd.elems.iter().zip(coords) {
                out[w] += c;
            }
        }
        out
    }

    /// Whether every polynomial of degree `l(w0) + 1` lies in the ideal.
    pub fn top_plus_one_vanishes(&self) -> bool {
        self.graded.last().is_some_and(|g| g.free_cols.is_empty())
    }

    /// `c^w_{uv}` in `X_u X_v = sum_w c^w_{uv} X_w`.
    pub fn structure_constant(&self, u: ElemId, v: ElemId, w: ElemId) -> Q {
        self.structure[u][v].iter().find(|(x, _)| *x == w).map_or_else(Q::zero, |(_, c)| c.clone())
    }

    /// All nonzero structure constants as `(u, v, w, c)`.
    pub fn structure_constants(&self) -> Vec<(ElemId, ElemId, ElemId, Q)> {
        let mut out = Vec::new();
        for (u, row) in self.structure.iter().enumerate() {
            for (v, entries) in row.iter().enumerate() {
                for (w, c) in entries {
                    out.push((u, v, *w, c.clone()));
                }
            }
        }
        out
    }

    /// Product of two elements given in Schubert coordinates.
    pub fn multiply(&self, a: &[Q], b: &[Q]) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.dim()];
        for (u, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (v, y) in b.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                let xy = x * y;
                for (w, c) in &self.structure[u][v] {
                    out[*w] += &xy * c;
                }
            }
        }
        out
    }

    /// Matrix of `s_i` on the Schubert basis.
    pub fn generator_matrix(&self, i: usize) -> &QMatrix {
        &self.generator_action[i]
    }

    /// Matrix of `w`, as a product of generator matrices along its word.
    pub fn w_action_matrix(&self, w: ElemId) -> QMatrix {
        let word = &self.group.elem(w).word;
        word.iter().fold(QMatrix::identity(self.dim()), |acc, &i| &acc * &self.generator_action[i])
    }

    /// Matrix of multiplication by `x_j`.
    pub fn variable_matrix(&self, j: usize) -> &QMatrix {
        &self.variable_action[j]
    }

    /// Matrix of multiplication by an arbitrary polynomial.
    pub fn multiplication_matrix(&self, f: &MultiPoly) -> QMatrix {
        let cols: Vec<Vec<Q>> = self.group.ids().map(|w| self.reduce(&(f * &self.schubert[w]))).collect();
        QMatrix::from_columns(self.dim(), &cols)
    }

    pub fn hilbert_series(&self) -> HilbertSeries {
        HilbertSeries::new(self.graded.iter().map(|g| g.elems.len() as i64).collect())
    }

    /// `trace(w)` on `C` for every `w`.
    pub fn character(&self) -> Vec<Q> {
        self.group.ids().map(|w| self.w_action_matrix(w).trace()).collect()
    }
}

/// The fixed subalgebra `C^H` for a subgroup `H`.
#[derive(Debug, Clone)]
pub struct InvariantSubalgebra {
    /// Basis vectors in Schubert coordinates, grouped by degree.
    pub basis_by_degree: Vec<Vec<Vec<Q>>>,
    pub hilbert: HilbertSeries,
}

impl InvariantSubalgebra {
    pub fn dim(&self) -> usize {
        self.basis_by_degree.iter().map(Vec::len).sum()
    }

    pub fn basis(&self) -> impl Iterator<Item = &Vec<Q>> {
        self.basis_by_degree.iter().flatten()
    }
}

/// Fixed points of `parabolic` on `C`, degree by degree; multiplicative
/// closure is checked before returning.
pub fn invariant_subalgebra(c: &CoinvariantAlgebra, parabolic: &ParabolicData) -> Result<InvariantSubalgebra> {
    let g = c.group();
    if parabolic.subgroup().iter().any(|&w| w >= g.order()) || parabolic.index() * parabolic.size() != g.order() {
        return Err(Error::Usage("parabolic subgroup belongs to a different group".into()));
    }
    let mats: Vec<QMatrix> = parabolic
        .subgroup()
        .iter()
        .filter(|&&w| w != g.identity())
        .map(|&w| c.w_action_matrix(w).sub(&QMatrix::identity(c.dim())))
        .collect();
    let mut basis_by_degree = Vec::new();
    for gd in c.graded.iter().take(c.top_degree() + 1) {
        let cols = &gd.elems;
        let fixed: Vec<Vec<Q>> = if mats.is_empty() {
            (0..cols.len()).map(|k| (0..cols.len()).map(|j| if j == k { Q::one() } else { Q::zero() }).collect()).collect()
        } else {
            let mut rows = Vec::new();
            for m in &mats {
                for r in 0..m.rows() {
                    rows.push(cols.iter().map(|&w| m[(r, w)].clone()).collect::<Vec<Q>>());
                }
            }
            QMatrix::from_rows(&rows).kernel()
        };
        let lifted: Vec<Vec<Q>> = fixed
            .into_iter()
            .map(|v| {
                let mut full = vec![Q::zero(); c.dim()];
                for (&w, x) in cols.iter().zip(v) {
                    full[w] = x;
                }
                full
            })
            .collect();
        basis_by_degree.push(lifted);
    }
    let hilbert = HilbertSeries::new(basis_by_degree.iter().map(|b| b.len() as i64).collect());
    let sub = InvariantSubalgebra { basis_by_degree, hilbert };
    for a in sub.basis() {
        for b in sub.basis() {
            let p = c.multiply(a, b);
            if mats.iter().any(|m| m.mul_vec(&p).iter().any(|x| !x.is_zero())) {
                return Err(Error::Internal("fixed subspace is not closed under multiplication".into()));
            }
        }
    }
    Ok(sub)
}

/// Coordinates of the constant `c` in Schubert coordinates.
pub fn scalar_element(c: &CoinvariantAlgebra, x: i64) -> Vec<Q> {
    let mut v = vec![Q::zero(); c.dim()];
    v[c.group().identity()] = q(x);
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::weyl_group;

    fn alg(t: &str) -> CoinvariantAlgebra {
        build_coinvariants(&weyl_group(t.parse().unwrap()).unwrap()).unwrap()
    }

    #[test]
    fn a1_basics() {
        let c = alg("A1");
        let g = c.group().clone();
        let x = MultiPoly::var(1, 0);
        assert_eq!(w_act(&g, 1, &x), -&x);
        assert_eq!(demazure(&g, 0, &x), MultiPoly::one(1));
        assert!(demazure(&g, 0, &x.pow(2)).is_zero());
        assert_eq!(c.hilbert_series().coeffs, vec![1, 1]);
        assert!(c.top_plus_one_vanishes());
    }

    #[test]
    fn dimensions_and_series() {
        assert_eq!(alg("A2").hilbert_series().coeffs, vec![1, 2, 2, 1]);
        assert_eq!(alg("B2").hilbert_series().coeffs, vec![1, 2, 2, 2, 1]);
        assert_eq!(alg("G2").hilbert_series().total(), 12);
    }

    #[test]
    fn regular_character() {
        let c = alg("A2");
        let ch = c.character();
        for (w, t) in ch.iter().enumerate() {
            assert_eq!(*t, q(if w == 0 { 6 } else { 0 }));
        }
    }

    #[test]
    fn degree_additivity_of_structure_constants() {
        let c = alg("B2");
        let g = c.group();
        for (u, v, w, _) in c.structure_constants() {
            assert_eq!(g.length(w), g.length(u) + g.length(v));
        }
    }

    #[test]
    fn fixed_subalgebras() {
        let c = alg("A2");
        let g = c.group().clone();
        let p = ParabolicData::standard(&g, &[0]).unwrap();
        let sub = invariant_subalgebra(&c, &p).unwrap();
        assert_eq!(sub.hilbert.coeffs, vec![1, 1, 1]);
        let whole = ParabolicData::standard(&g, &[0, 1]).unwrap();
        assert_eq!(invariant_subalgebra(&c, &whole).unwrap().dim(), 1);
        let trivial = ParabolicData::standard(&g, &[]).unwrap();
        assert_eq!(invariant_subalgebra(&c, &trivial).unwrap().dim(), 6);
    }

    #[test]
    fn unnormalized_top_class_is_rejected() {
        let g = weyl_group("A2".parse().unwrap()).unwrap();
        let err = build_coinvariants_with(&g, SchubertNormalization::Unnormalized).unwrap_err();
        assert!(err.to_string().contains("X_e"));
    }

    #[test]
    fn rank_four_unsupported() {
        let g = weyl_group("A4".parse().unwrap()).unwrap();
        assert!(matches!(build_coinvariants(&g), Err(Error::Unsupported(_))));
    }
}
