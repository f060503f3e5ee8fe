//! Grothendieck groups of integral blocks of category O.
//!
//! A block is indexed by the longest representatives of `W / W_λ`, so
//! `M_w` stands for `M_{w·λ}` and the antidominant Verma module always
//! carries the index `w0`. Classes are integer vectors in one of five
//! bases; all functors are integer matrices on Verma bases.
//!
//! Regular decomposition numbers come from Kazhdan–Lusztig polynomials at
//! `q = 1`; singular ones are obtained by translating regular simples onto
//! the wall. The conventions tying these together are fixed by
//! [`conventions()`].

mod conventions;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use serde::{Deserialize, Serialize};

pub use conventions::{
    battery, conventions, run_battery, BatteryReport, CandidateOutcome, Conventions, IndexMap, SurvivorRule,
    TiltingPlacement,
};
use conventions::{coset_index, decomposition_numbers, from_wall_matrix, group_ring_action, to_wall_matrix};

use crate::hecke::{kl_table, KLTable};
use crate::linalg::IntMatrix;
use crate::weyl::{
    classify_weight, stabilizer_dot, wall_weight, weyl_group, CartanType, ElemId, Extremal, ParabolicData, Side,
    Weight, WeylGroup,
};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Basis {
    Verma,
    DualVerma,
    Simple,
    Projective,
    Tilting,
}

impl Basis {
    pub const ALL: [Basis; 5] = [Basis::Verma, Basis::DualVerma, Basis::Simple, Basis::Projective, Basis::Tilting];

    fn slot(self) -> usize {
        self as usize
    }

    /// Letter used when printing a class, e.g. `P_w`.
    pub fn symbol(self) -> &'static str {
        match self {
            Basis::Verma => "M",
            Basis::DualVerma => "M^∨",
            Basis::Simple => "L",
            Basis::Projective => "P",
            Basis::Tilting => "Q",
        }
    }
}

/// An integral ρ-dominant weight with its stabiliser and index set.
#[derive(Debug, Clone)]
pub struct BlockDescriptor {
    pub group: Arc<WeylGroup>,
    pub lambda: Weight,
    pub stabilizer: ParabolicData,
    /// Longest coset representatives, sorted by id.
    pub index_set: Vec<ElemId>,
}

impl PartialEq for BlockDescriptor {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.group, &other.group) && self.lambda == other.lambda
    }
}

impl BlockDescriptor {
    pub fn size(&self) -> usize {
        self.index_set.len()
    }

    pub fn is_regular(&self) -> bool {
        self.stabilizer.size() == 1
    }

    /// Position of `w` in the index set, if it is a representative.
    pub fn position(&self, w: ElemId) -> Option<usize> {
        self.index_set.binary_search(&w).ok()
    }
}

/// Class of a module in the Grothendieck group of a block.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassVector {
    pub block: Arc<BlockDescriptor>,
    pub basis: Basis,
    pub coeffs: Vec<i64>,
}

impl ClassVector {
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for ClassVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = &self.block.group;
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .zip(&self.block.index_set)
            .filter(|(c, _)| **c != 0)
            .map(|(c, &w)| {
                let sym = format!("[{}_{}]", self.basis.symbol(), g.elem(w));
                if *c == 1 {
                    sym
                } else {
                    format!("{c}{sym}")
                }
            })
            .collect();
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// A functor between blocks as an integer matrix on Verma bases
/// (column `j` is the image of the `j`-th source Verma).
#[derive(Debug, Clone, PartialEq)]
pub struct FunctorMatrix {
    pub source: Arc<BlockDescriptor>,
    pub target: Arc<BlockDescriptor>,
    pub matrix: IntMatrix,
}

impl FunctorMatrix {
    /// `self ∘ first`
    pub fn compose(&self, first: &FunctorMatrix) -> Result<FunctorMatrix> {
        if self.source != first.target {
            return Err(Error::Usage("functor composition across different blocks".into()));
        }
        Ok(FunctorMatrix { source: first.source.clone(), target: self.target.clone(), matrix: &self.matrix * &first.matrix })
    }

    pub fn apply(&self, class: &ClassVector) -> Result<ClassVector> {
        if class.block != self.source || class.basis != Basis::Verma {
            return Err(Error::Usage("functor applied to a class outside its source Verma basis".into()));
        }
        Ok(ClassVector { block: self.target.clone(), basis: Basis::Verma, coeffs: self.matrix.mul_vec(&class.coeffs) })
    }
}

/// Fault-injection switches used by the verification battery.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BlockOptions {
    /// Index singular Vermas by cosets on this side instead of the frozen one.
    pub coset_side_override: Option<Side>,
    /// Use `[P_w : M_y] = [M_w : L_y]` instead of BGG reciprocity.
    pub transposed_reciprocity: bool,
}

/// A block together with its basis-change matrices.
#[derive(Debug)]
pub struct Block {
    desc: Arc<BlockDescriptor>,
    /// `[M_y : L_w]`, rows `y`, columns `w`, over index positions.
    decomposition: IntMatrix,
    /// Columns are the basis elements written in the Verma basis.
    to_verma: [Option<IntMatrix>; 5],
    from_verma: [Option<IntMatrix>; 5],
}

impl Block {
    fn new(desc: Arc<BlockDescriptor>, decomposition: IntMatrix, bases: Vec<(Basis, IntMatrix)>) -> Result<Self> {
        let mut to_verma: [Option<IntMatrix>; 5] = Default::default();
        let mut from_verma: [Option<IntMatrix>; 5] = Default::default();
        for (b, m) in bases {
            from_verma[b.slot()] = Some(m.inverse()?);
            to_verma[b.slot()] = Some(m);
        }
        Ok(Block { desc, decomposition, to_verma, from_verma })
    }

    pub fn descriptor(&self) -> &Arc<BlockDescriptor> {
        &self.desc
    }

    pub fn group(&self) -> &Arc<WeylGroup> {
        &self.desc.group
    }

    pub fn size(&self) -> usize {
        self.desc.size()
    }

    pub fn is_regular(&self) -> bool {
        self.desc.is_regular()
    }

    pub fn index_set(&self) -> &[ElemId] {
        &self.desc.index_set
    }

    pub fn supports(&self, basis: Basis) -> bool {
        self.to_verma[basis.slot()].is_some()
    }

    /// Matrix whose columns are the `basis` classes in the Verma basis.
    pub fn basis_matrix(&self, basis: Basis) -> Result<&IntMatrix> {
        self.to_verma[basis.slot()]
            .as_ref()
            .ok_or_else(|| Error::Unsupported(format!("{basis:?} basis is only available in regular blocks")))
    }

    /// `[M_y : L_w]`, rows `y`, columns `w`.
    pub fn decomposition_matrix(&self) -> &IntMatrix {
        &self.decomposition
    }

    /// `[P_w : M_y]`, rows `w`, columns `y`.
    pub fn projective_in_verma(&self) -> IntMatrix {
        self.to_verma[Basis::Projective.slot()].as_ref().expect("every block has projectives").transpose()
    }

    /// Unit vector for the basis element indexed by `w`.
    pub fn class(&self, basis: Basis, w: ElemId) -> Result<ClassVector> {
        self.basis_matrix(basis)?;
        let pos = self
            .desc
            .position(w)
            .ok_or_else(|| Error::Usage(format!("{} is not in the index set of this block", self.group().elem(w))))?;
        let mut coeffs = vec![0; self.size()];
        coeffs[pos] = 1;
        Ok(ClassVector { block: self.desc.clone(), basis, coeffs })
    }

    pub fn from_coeffs(&self, basis: Basis, coeffs: Vec<i64>) -> Result<ClassVector> {
        self.basis_matrix(basis)?;
        if coeffs.len() != self.size() {
            return Err(Error::Usage(format!("class has {} coefficients, block has {}", coeffs.len(), self.size())));
        }
        Ok(ClassVector { block: self.desc.clone(), basis, coeffs })
    }

    fn check_own(&self, class: &ClassVector) -> Result<()> {
        if class.block != self.desc {
            return Err(Error::Usage("class belongs to a different block".into()));
        }
        Ok(())
    }

    pub fn change_basis(&self, class: &ClassVector, target: Basis) -> Result<ClassVector> {
        self.check_own(class)?;
        let verma = self.basis_matrix(class.basis)?.mul_vec(&class.coeffs);
        self.basis_matrix(target)?;
        let inv = self.from_verma[target.slot()].as_ref().expect("inverse stored with matrix");
        Ok(ClassVector { block: self.desc.clone(), basis: target, coeffs: inv.mul_vec(&verma) })
    }

    pub fn to_verma(&self, class: &ClassVector) -> Result<ClassVector> {
        self.change_basis(class, Basis::Verma)
    }

    /// `[P]` for the antidominant projective, in the Verma basis.
    pub fn antidominant_projective(&self) -> ClassVector {
        let w0 = self.group().longest();
        let p = self.class(Basis::Projective, w0).expect("w0 indexes every block");
        self.to_verma(&p).expect("projective basis present")
    }

    /// `sum_w (-1)^{l(w)} [M_w]`.
    pub fn alternating_class(&self) -> ClassVector {
        let g = self.group();
        let coeffs = self.index_set().iter().map(|&w| if g.length(w) % 2 == 0 { 1 } else { -1 }).collect();
        ClassVector { block: self.desc.clone(), basis: Basis::Verma, coeffs }
    }
}

/// Result of translating simple classes onto a wall.
#[derive(Debug, Clone, PartialEq)]
pub struct SimpleTranslation {
    pub source: Arc<BlockDescriptor>,
    pub target: Arc<BlockDescriptor>,
    /// For each source index, the target index of its image (`None` if killed).
    pub images: Vec<Option<usize>>,
}

impl SimpleTranslation {
    pub fn apply(&self, class: &ClassVector) -> Result<ClassVector> {
        if class.block != self.source || class.basis != Basis::Simple {
            return Err(Error::Usage("simple translation needs a class in the source Simple basis".into()));
        }
        let mut coeffs = vec![0; self.target.size()];
        for (c, img) in class.coeffs.iter().zip(&self.images) {
            if let Some(i) = img {
                coeffs[*i] += c;
            }
        }
        Ok(ClassVector { block: self.target.clone(), basis: Basis::Simple, coeffs })
    }

    /// The same map as an integer matrix on Simple bases.
    pub fn matrix(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.target.size(), self.source.size());
        for (j, img) in self.images.iter().enumerate() {
            if let Some(i) = img {
                m[(*i, j)] = 1;
            }
        }
        m
    }
}

/// All blocks of one root system, sharing the group, the KL table and the
/// frozen conventions.
#[derive(Debug)]
pub struct BlockCalculus {
    group: Arc<WeylGroup>,
    kl: Arc<KLTable>,
    conventions: Conventions,
    options: BlockOptions,
    regular: Arc<Block>,
    cache: Mutex<HashMap<Weight, Arc<Block>>>,
}

impl BlockCalculus {
    pub fn new(cartan_type: CartanType) -> Result<Self> {
        Self::with_options(cartan_type, BlockOptions::default())
    }

    pub fn with_options(cartan_type: CartanType, options: BlockOptions) -> Result<Self> {
        let group = weyl_group(cartan_type)?;
        let kl = Arc::new(kl_table(&group));
        Self::from_parts(group, kl, options)
    }

    pub fn from_parts(group: Arc<WeylGroup>, kl: Arc<KLTable>, options: BlockOptions) -> Result<Self> {
        if !Arc::ptr_eq(kl.group(), &group) {
            return Err(Error::Usage("KL table belongs to a different group".into()));
        }
        let mut conventions = conventions()?;
        if let Some(side) = options.coset_side_override {
            conventions.coset_side = side;
        }
        let regular = Arc::new(regular_block(&group, &kl, &conventions, &options, Weight::zero(group.rank()))?);
        Ok(BlockCalculus { group, kl, conventions, options, regular, cache: Mutex::new(HashMap::new()) })
    }

    pub fn group(&self) -> &Arc<WeylGroup> {
        &self.group
    }

    pub fn kl(&self) -> &Arc<KLTable> {
        &self.kl
    }

    pub fn conventions(&self) -> &Conventions {
        &self.conventions
    }

    pub fn options(&self) -> BlockOptions {
        self.options
    }

    /// The regular block of `λ = 0`.
    pub fn regular_block(&self) -> &Arc<Block> {
        &self.regular
    }

    /// The block of an integral ρ-dominant weight.
    pub fn block(&self, lambda: &Weight) -> Result<Arc<Block>> {
        if *lambda == self.regular.desc.lambda {
            return Ok(self.regular.clone());
        }
        if let Some(b) = self.cache.lock().expect("cache lock").get(lambda) {
            return Ok(b.clone());
        }
        let class = classify_weight(self.group.datum(), lambda)?;
        if !class.integral {
            return Err(Error::Unsupported(format!("weight {lambda} is not integral")));
        }
        if !class.rho_dominant {
            return Err(Error::Usage(format!("weight {lambda} is not ρ-dominant")));
        }
        let block = if class.regular {
            regular_block(&self.group, &self.kl, &self.conventions, &self.options, lambda.clone())?
        } else {
            self.singular_block(lambda)?
        };
        let block = Arc::new(block);
        self.cache.lock().expect("cache lock").insert(lambda.clone(), block.clone());
        Ok(block)
    }

    /// Block on the wall of the simple reflections `gens` (`-1` there, `0` elsewhere).
    pub fn wall_block(&self, gens: &[usize]) -> Result<Arc<Block>> {
        self.block(&wall_weight(self.group.datum(), gens))
    }

    /// The block of `-ρ`.
    pub fn most_singular_block(&self) -> Result<Arc<Block>> {
        self.block(&Weight::minus_rho(self.group.datum()))
    }

    fn singular_block(&self, mu: &Weight) -> Result<Block> {
        let g = &self.group;
        let stabilizer = stabilizer_dot(g, mu)?;
        let index_set = coset_index(g, &stabilizer, self.conventions.coset_side);
        let desc = Arc::new(BlockDescriptor { group: g.clone(), lambda: mu.clone(), stabilizer, index_set });
        let reg = &self.regular;
        let down = to_wall_matrix(g, reg.index_set(), &desc.index_set, &desc.stabilizer, self.conventions.coset_side);
        let reg_simples = reg.basis_matrix(Basis::Simple)?;
        // Singular simples are the images of the surviving regular simples.
        let mut cols = Vec::with_capacity(desc.size());
        for &x in &desc.index_set {
            let pos = reg.desc.position(x).expect("regular index set is all of W");
            cols.push(down.mul_vec(&reg_simples.column(pos)));
        }
        let simples = IntMatrix::from_rows(&cols).transpose();
        let decomposition = simples
            .transpose()
            .inverse()
            .map_err(|e| Error::Internal(format!("translated simples do not form a basis on {mu}: {e}")))?;
        let projectives = if self.options.transposed_reciprocity { decomposition.transpose() } else { decomposition.clone() };
        let n = desc.size();
        let bases = vec![
            (Basis::Verma, IntMatrix::identity(n)),
            (Basis::DualVerma, IntMatrix::identity(n)),
            (Basis::Simple, simples),
            (Basis::Projective, projectives),
        ];
        Block::new(desc, decomposition, bases)
    }

    fn check_pair(&self, finer: &Block, coarser: &Block) -> Result<()> {
        if !Arc::ptr_eq(finer.group(), &self.group) || !Arc::ptr_eq(coarser.group(), &self.group) {
            return Err(Error::Usage("blocks belong to a different root system".into()));
        }
        if !finer.desc.stabilizer.is_subgroup_of(&coarser.desc.stabilizer) {
            return Err(Error::Usage(format!(
                "stabiliser of {} is not contained in that of {}",
                finer.desc.lambda, coarser.desc.lambda
            )));
        }
        Ok(())
    }

    /// `θ^μ_λ`: onto the wall, `[M_{x·λ}] -> [M_{x̄·μ}]`.
    pub fn translate_to_wall(&self, source: &Block, target: &Block) -> Result<FunctorMatrix> {
        self.check_pair(source, target)?;
        let matrix = to_wall_matrix(
            &self.group,
            source.index_set(),
            target.index_set(),
            &target.desc.stabilizer,
            self.conventions.coset_side,
        );
        Ok(FunctorMatrix { source: source.desc.clone(), target: target.desc.clone(), matrix })
    }

    /// `θ^λ_μ`: out of the wall, `[M_{ȳ·μ}] -> sum of the [M_{x·λ}]` over
    /// the cosets of `W_λ` inside `ȳ W_μ`.
    pub fn translate_from_wall(&self, source: &Block, target: &Block) -> Result<FunctorMatrix> {
        self.check_pair(target, source)?;
        let matrix = from_wall_matrix(
            &self.group,
            target.index_set(),
            source.index_set(),
            &source.desc.stabilizer,
            self.conventions.coset_side,
        );
        Ok(FunctorMatrix { source: source.desc.clone(), target: target.desc.clone(), matrix })
    }

    /// Translation of simples onto a wall by the survivor rule.
    pub fn translate_simple(&self, source: &Block, target: &Block) -> Result<SimpleTranslation> {
        if !source.is_regular() {
            return Err(Error::Usage("simple translation starts from a regular block".into()));
        }
        self.check_pair(source, target)?;
        let g = &self.group;
        let par = &target.desc.stabilizer;
        let images = source
            .index_set()
            .iter()
            .map(|&w| {
                if self.conventions.survives(g, par, w) {
                    let rep = par.extremal_in_coset(g, w, self.conventions.coset_side, Extremal::Longest);
                    target.desc.position(rep)
                } else {
                    None
                }
            })
            .collect();
        Ok(SimpleTranslation { source: source.desc.clone(), target: target.desc.clone(), images })
    }

    /// The same map computed through Verma modules: write each simple in
    /// Vermas, translate, and rewrite in the target's simples.
    pub fn translate_simple_verma_route(&self, source: &Block, target: &Block) -> Result<IntMatrix> {
        let down = self.translate_to_wall(source, target)?;
        let src = source.basis_matrix(Basis::Simple)?;
        let tgt_inv = target.from_verma[Basis::Simple.slot()].as_ref().expect("simple basis present");
        Ok(&(tgt_inv * &down.matrix) * src)
    }

    /// `θ_s = θ^λ_μ θ^μ_λ` on the regular block through the `s`-wall.
    pub fn wall_crossing(&self, s: usize) -> Result<FunctorMatrix> {
        if s >= self.group.rank() {
            return Err(Error::Usage(format!("generator index {s} out of range")));
        }
        let wall = self.wall_block(&[s])?;
        let down = self.translate_to_wall(&self.regular, &wall)?;
        let up = self.translate_from_wall(&wall, &self.regular)?;
        up.compose(&down)
    }

    /// `θ^μ_λ θ^λ_μ` against `|W_μ / W_λ|·Id`.
    pub fn wall_crossing_composition_check(&self, lambda: &Weight, mu: &Weight) -> Result<bool> {
        let src = self.block(lambda)?;
        let wall = self.block(mu)?;
        let down = self.translate_to_wall(&src, &wall)?;
        let up = self.translate_from_wall(&wall, &src)?;
        let ratio = (wall.desc.stabilizer.size() / src.desc.stabilizer.size()) as i64;
        Ok(down.compose(&up)?.matrix == IntMatrix::identity(wall.size()).scale(ratio))
    }

    /// `φ_w = sum_z [P_w : M_z] z` as a vector over `W`.
    pub fn phi(&self, w: ElemId) -> Vec<i64> {
        self.regular.basis_matrix(Basis::Projective).expect("regular projectives").column(w)
    }

    /// `Φ_w` on the regular block: multiplication by `φ_w` on the action side.
    pub fn projective_functor_matrix(&self, w: ElemId) -> FunctorMatrix {
        let matrix = group_ring_action(&self.group, &self.phi(w), self.conventions.action_side);
        FunctorMatrix { source: self.regular.desc.clone(), target: self.regular.desc.clone(), matrix }
    }

    /// Writes `v ∈ Z[W]` as `sum_y c_y φ_y` by peeling off maximal elements.
    pub fn phi_decomposition(&self, v: &[i64]) -> Result<Vec<i64>> {
        let g = &self.group;
        let mut rest = v.to_vec();
        let mut coeffs = vec![0; g.order()];
        while let Some(top) = g.ids().filter(|&z| rest[z] != 0).max_by_key(|&z| (g.length(z), z)) {
            let c = rest[top];
            let phi = self.phi(top);
            if phi[top] != 1 {
                return Err(Error::Internal(format!("φ_{} has coefficient {} at itself", g.elem(top), phi[top])));
            }
            for (r, p) in rest.iter_mut().zip(&phi) {
                *r -= c * p;
            }
            coeffs[top] = c;
        }
        Ok(coeffs)
    }

    /// `[Q_w]` from the multiplicity formula.
    pub fn tilting_by_multiplicities(&self, w: ElemId) -> Result<ClassVector> {
        let q = self.regular.class(Basis::Tilting, w)?;
        self.regular.to_verma(&q)
    }

    /// `[Q_w] = Φ_w [M_{w0}]`.
    pub fn tilting_by_projective_functor(&self, w: ElemId) -> Result<ClassVector> {
        let m = self.regular.class(Basis::Verma, self.group.longest())?;
        self.projective_functor_matrix(w).apply(&m)
    }

    /// `[Q_w]` in the Verma basis; fails if the two constructions disagree.
    pub fn tilting_class(&self, w: ElemId) -> Result<ClassVector> {
        let a = self.tilting_by_multiplicities(w)?;
        let b = self.tilting_by_projective_functor(w)?;
        if a != b {
            return Err(Error::Internal(format!(
                "tilting constructions disagree for Q_{}: {a} versus {b}",
                self.group.elem(w)
            )));
        }
        Ok(a)
    }

    /// Euler form `sum_z (A : M_z)(B : M_z)` for two projective or two
    /// tilting classes.
    pub fn hom_dim(&self, a: &ClassVector, b: &ClassVector) -> Result<i64> {
        if a.basis != b.basis {
            return Err(Error::Usage(format!("hom_dim of {:?} and {:?} classes", a.basis, b.basis)));
        }
        if a.block != b.block {
            return Err(Error::Usage("hom_dim across different blocks".into()));
        }
        if !matches!(a.basis, Basis::Projective | Basis::Tilting) {
            return Err(Error::Usage(format!("hom_dim needs Projective or Tilting classes, got {:?}", a.basis)));
        }
        if a.coeffs.iter().chain(&b.coeffs).any(|&c| c < 0) {
            return Err(Error::Usage("hom_dim needs non-negative combinations".into()));
        }
        let block = self.block(&a.block.lambda)?;
        let euler = |x: &ClassVector, y: &ClassVector| -> Result<i64> {
            let vx = block.to_verma(x)?;
            let vy = block.to_verma(y)?;
            Ok(vx.coeffs.iter().zip(&vy.coeffs).map(|(p, q)| p * q).sum())
        };
        let value = euler(a, b)?;
        if a.basis == Basis::Tilting {
            let pa = ClassVector { basis: Basis::Projective, ..a.clone() };
            let pb = ClassVector { basis: Basis::Projective, ..b.clone() };
            let proj = euler(&pa, &pb)?;
            if proj != value {
                return Err(Error::Internal(format!("Hom between tiltings is {value}, between projectives {proj}")));
            }
        }
        Ok(value)
    }

    /// Gram matrix `(hom_dim(X_x, X_y))` over the regular index set.
    pub fn hom_gram(&self, basis: Basis) -> Result<IntMatrix> {
        let reg = &self.regular;
        let classes: Vec<ClassVector> = reg.index_set().iter().map(|&w| reg.class(basis, w)).collect::<Result<_>>()?;
        let n = classes.len();
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = self.hom_dim(&classes[i], &classes[j])?;
            }
        }
        Ok(m)
    }
}

fn regular_block(
    group: &Arc<WeylGroup>,
    kl: &KLTable,
    conv: &Conventions,
    options: &BlockOptions,
    lambda: Weight,
) -> Result<Block> {
    let g = group.as_ref();
    let stabilizer = stabilizer_dot(g, &lambda)?;
    if stabilizer.size() != 1 {
        return Err(Error::Usage(format!("weight {lambda} is singular")));
    }
    let index_set: Vec<ElemId> = g.ids().collect();
    let desc = Arc::new(BlockDescriptor { group: group.clone(), lambda, stabilizer, index_set });
    let d = decomposition_numbers(g, kl, conv.sigma);
    let projectives = if options.transposed_reciprocity { d.transpose() } else { d.clone() };
    let simples = d.transpose().inverse()?;
    let w0 = g.longest();
    let mut tilting = IntMatrix::zeros(g.order(), g.order());
    for w in g.ids() {
        for y in g.ids() {
            let z = match conv.tilting_placement {
                TiltingPlacement::YW0 => g.mul(y, w0),
                TiltingPlacement::W0Y => g.mul(w0, y),
            };
            tilting[(y, w)] = projectives[(z, w)];
        }
    }
    let n = g.order();
    let bases = vec![
        (Basis::Verma, IntMatrix::identity(n)),
        (Basis::DualVerma, IntMatrix::identity(n)),
        (Basis::Simple, simples),
        (Basis::Projective, projectives),
        (Basis::Tilting, tilting),
    ];
    Block::new(desc, d, bases)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn calc(t: &str) -> BlockCalculus {
        BlockCalculus::new(t.parse().unwrap()).unwrap()
    }

    #[test]
    fn a1_regular_block() {
        let c = calc("A1");
        let b = c.regular_block();
        assert_eq!(b.decomposition_matrix().to_rows(), vec![vec![1, 1], vec![0, 1]]);
        let ad = b.antidominant_projective();
        assert_eq!(ad.coeffs, vec![1, 1]);
        let ls = b.class(Basis::Simple, 0).unwrap();
        assert_eq!(b.to_verma(&ls).unwrap().coeffs, vec![1, -1]);
    }

    #[test]
    fn a1_translation_to_minus_rho() {
        let c = calc("A1");
        let reg = c.regular_block().clone();
        let wall = c.most_singular_block().unwrap();
        assert_eq!(wall.index_set(), &[1]);
        let down = c.translate_to_wall(&reg, &wall).unwrap();
        assert_eq!(down.matrix.to_rows(), vec![vec![1, 1]]);
        let up = c.translate_from_wall(&wall, &reg).unwrap();
        assert_eq!(up.matrix.to_rows(), vec![vec![1], vec![1]]);
        let st = c.translate_simple(&reg, &wall).unwrap();
        assert_eq!(st.images, vec![None, Some(0)]);
        assert_eq!(c.translate_simple_verma_route(&reg, &wall).unwrap(), st.matrix());
    }

    #[test]
    fn wall_crossing_is_idempotent_up_to_two() {
        let c = calc("B2");
        for s in 0..2 {
            let t = c.wall_crossing(s).unwrap();
            assert_eq!(&t.matrix * &t.matrix, t.matrix.scale(2));
        }
    }

    #[test]
    fn tiltings_and_gram() {
        let c = calc("A2");
        let g = c.group().clone();
        for w in g.ids() {
            c.tilting_class(w).unwrap();
        }
        let qe = c.tilting_class(0).unwrap();
        let mut expect = vec![0; 6];
        expect[g.longest()] = 1;
        assert_eq!(qe.coeffs, expect);
        assert_eq!(c.hom_gram(Basis::Tilting).unwrap(), c.hom_gram(Basis::Projective).unwrap());
    }

    #[test]
    fn hom_dim_rejects_mixed_bases() {
        let c = calc("A1");
        let b = c.regular_block();
        let p = b.class(Basis::Projective, 1).unwrap();
        let q = b.class(Basis::Tilting, 1).unwrap();
        assert!(matches!(c.hom_dim(&p, &q), Err(Error::Usage(_))));
        assert_eq!(c.hom_dim(&p, &p).unwrap(), 2);
    }

    #[test]
    fn non_dominant_weight_rejected() {
        let c = calc("A1");
        assert!(matches!(c.block(&Weight::from_ints(&[-2])), Err(Error::Usage(_))));
    }
}
