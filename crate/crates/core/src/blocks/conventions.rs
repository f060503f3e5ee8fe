//! The indexing conventions that relate the Weyl group to a block, and the
//! battery that pins them down.
//!
//! Each candidate assignment is tested on A1 and A2 against facts that do not
//! depend on the assignment: the fibres of the dot-action, simplicity of the
//! antidominant Verma module, projectivity of the dominant one, the
//! Verma-route computation of simple translation, wall-crossing versus
//! multiplication by `b_s` at `q = 1`, and agreement of the two tilting
//! constructions. Exactly one assignment survives; it is computed once and
//! shared.

use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::hecke::{kl_table, KLTable};
use crate::linalg::IntMatrix;
use crate::weyl::{dot_action, wall_weight, weyl_group, ElemId, Extremal, ParabolicData, Side, Weight, WeylGroup};
use crate::{Error, Result};

/// Reindexing `σ` in `[M_y : L_w] = P_{σ(y), σ(w)}(1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum IndexMap {
    Identity,
    /// `x -> w0 x`
    LeftW0,
    /// `x -> x w0`
    RightW0,
}

impl IndexMap {
    pub fn apply(self, g: &WeylGroup, x: ElemId) -> ElemId {
        match self {
            IndexMap::Identity => x,
            IndexMap::LeftW0 => g.mul(g.longest(), x),
            IndexMap::RightW0 => g.mul(x, g.longest()),
        }
    }
}

/// Which index `y` carries the coefficient `[P_w : M_{..}]` in `[Q_w]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TiltingPlacement {
    /// `[Q_w : M_y] = [P_w : M_{y w0}]`
    YW0,
    /// `[Q_w : M_y] = [P_w : M_{w0 y}]`
    W0Y,
}

/// Which simples survive translation onto a wall.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SurvivorRule {
    /// `w` is the longest element of its coset.
    LongestInCoset,
    /// `w` lies in the set `W_μ w0`, read literally.
    LiteralW0Coset,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Conventions {
    /// Side of the cosets that index singular Vermas: `w W_μ` (left) or `W_μ w`.
    pub coset_side: Side,
    pub sigma: IndexMap,
    /// Side on which `Z[W]` acts on `K(O_0)` for projective functors.
    pub action_side: Side,
    pub tilting_placement: TiltingPlacement,
    pub survivor_rule: SurvivorRule,
}

impl fmt::Display for Conventions {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coset = match self.coset_side {
            Side::Left => "left cosets w·W_μ",
            Side::Right => "right cosets W_μ·w",
        };
        let sigma = match self.sigma {
            IndexMap::Identity => "[M_y : L_w] = P_{y,w}(1)",
            IndexMap::LeftW0 => "[M_y : L_w] = P_{w0 y, w0 w}(1)",
            IndexMap::RightW0 => "[M_y : L_w] = P_{y w0, w w0}(1)",
        };
        let action = match self.action_side {
            Side::Left => "Z[W] acts on the left: Φ_w[M_x] = φ_w·x",
            Side::Right => "Z[W] acts on the right: Φ_w[M_x] = x·φ_w",
        };
        let tilt = match self.tilting_placement {
            TiltingPlacement::YW0 => "[Q_w : M_y] = [P_w : M_{y w0}]",
            TiltingPlacement::W0Y => "[Q_w : M_y] = [P_w : M_{w0 y}]",
        };
        let surv = match self.survivor_rule {
            SurvivorRule::LongestInCoset => "L_w survives translation to the wall iff w is longest in its coset",
            SurvivorRule::LiteralW0Coset => "L_w survives translation to the wall iff w ∈ W_μ·w0",
        };
        writeln!(f, "coset side:        {coset}")?;
        writeln!(f, "decomposition:     {sigma}")?;
        writeln!(f, "projective action: {action}")?;
        writeln!(f, "tilting flag:      {tilt}")?;
        write!(f, "simple survivors:  {surv}")
    }
}

impl Conventions {
    /// All candidate assignments, in a fixed order.
    pub fn candidates() -> Vec<Conventions> {
        let mut out = Vec::new();
        for coset_side in [Side::Left, Side::Right] {
            for sigma in [IndexMap::Identity, IndexMap::LeftW0, IndexMap::RightW0] {
                for action_side in [Side::Left, Side::Right] {
                    for tilting_placement in [TiltingPlacement::YW0, TiltingPlacement::W0Y] {
                        for survivor_rule in [SurvivorRule::LongestInCoset, SurvivorRule::LiteralW0Coset] {
                            out.push(Conventions { coset_side, sigma, action_side, tilting_placement, survivor_rule });
                        }
                    }
                }
            }
        }
        out
    }

    pub fn survives(&self, g: &WeylGroup, par: &ParabolicData, w: ElemId) -> bool {
        match self.survivor_rule {
            SurvivorRule::LongestInCoset => par.extremal_in_coset(g, w, self.coset_side, Extremal::Longest) == w,
            SurvivorRule::LiteralW0Coset => par.subgroup().iter().any(|&h| g.mul(h, g.longest()) == w),
        }
    }
}

// ---------------------------------------------------------------------------
// Shared K-group kernels, parameterised by a convention assignment.

/// `D[y][w] = P_{σ(y), σ(w)}(1)`, rows and columns indexed by element id.
pub(crate) fn decomposition_numbers(g: &WeylGroup, kl: &KLTable, sigma: IndexMap) -> IntMatrix {
    let n = g.order();
    let mut d = IntMatrix::zeros(n, n);
    for y in 0..n {
        for w in 0..n {
            d[(y, w)] = kl.at_one(sigma.apply(g, y), sigma.apply(g, w));
        }
    }
    d
}

/// Matrix of `x -> x·φ` (right) or `x -> φ·x` (left) on `Z[W]`.
pub(crate) fn group_ring_action(g: &WeylGroup, phi: &[i64], side: Side) -> IntMatrix {
    let n = g.order();
    let mut m = IntMatrix::zeros(n, n);
    for x in 0..n {
        for (z, &c) in phi.iter().enumerate().filter(|(_, c)| **c != 0) {
            let target = match side {
                Side::Right => g.mul(x, z),
                Side::Left => g.mul(z, x),
            };
            m[(target, x)] += c;
        }
    }
    m
}

/// Longest representatives of the cosets of `par` on `side`, sorted by id.
pub(crate) fn coset_index(g: &WeylGroup, par: &ParabolicData, side: Side) -> Vec<ElemId> {
    par.coset_reps(g, side, Extremal::Longest)
}

/// Verma-basis matrix of translation from index set `src` onto the cosets
/// of `par` (whose index set is `tgt`).
pub(crate) fn to_wall_matrix(g: &WeylGroup, src: &[ElemId], tgt: &[ElemId], par: &ParabolicData, side: Side) -> IntMatrix {
    let mut m = IntMatrix::zeros(tgt.len(), src.len());
    for (j, &x) in src.iter().enumerate() {
        let rep = par.extremal_in_coset(g, x, side, Extremal::Longest);
        let i = tgt.binary_search(&rep).expect("representative lies in the target index set");
        m[(i, j)] += 1;
    }
    m
}

/// Verma-basis matrix of translation out of the wall: each coset of `par`
/// goes to the sum of the source-side cosets it contains.
pub(crate) fn from_wall_matrix(g: &WeylGroup, tgt: &[ElemId], src: &[ElemId], par: &ParabolicData, side: Side) -> IntMatrix {
    to_wall_matrix(g, tgt, src, par, side).transpose()
}

// ---------------------------------------------------------------------------
// The battery.

/// Outcome of the battery for one candidate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateOutcome {
    pub conventions: Conventions,
    /// First failed check, `None` if all passed.
    pub failure: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BatteryReport {
    pub outcomes: Vec<CandidateOutcome>,
    pub selected: Option<Conventions>,
}

impl BatteryReport {
    pub fn passing(&self) -> impl Iterator<Item = &Conventions> {
        self.outcomes.iter().filter(|o| o.failure.is_none()).map(|o| &o.conventions)
    }
}

struct TestGroup {
    name: &'static str,
    g: Arc<WeylGroup>,
    kl: KLTable,
}

/// Walls used by the battery: each simple reflection and the full group.
fn walls(g: &WeylGroup) -> Vec<(Weight, ParabolicData)> {
    let r = g.rank();
    let mut gens: Vec<Vec<usize>> = (0..r).map(|s| vec![s]).collect();
    gens.push((0..r).collect());
    gens.into_iter()
        .map(|gs| (wall_weight(g.datum(), &gs), ParabolicData::standard(g, &gs).expect("valid generators")))
        .collect()
}

fn check_candidate(t: &TestGroup, c: &Conventions) -> std::result::Result<(), String> {
    let g = t.g.as_ref();
    let n = g.order();
    let w0 = g.longest();
    let all: Vec<ElemId> = g.ids().collect();

    // Fibres of w -> w·μ are the cosets on the chosen side.
    for (mu, par) in walls(g) {
        for w in g.ids() {
            let fibre: Vec<ElemId> = g.ids().filter(|&x| dot_action(g, x, &mu) == dot_action(g, w, &mu)).collect();
            if fibre != par.coset(g, w, c.coset_side) {
                return Err(format!("{}: fibre of {} under the dot-action on {mu} is not its coset", t.name, g.elem(w)));
            }
        }
    }

    // The antidominant Verma is simple, the dominant Verma is projective.
    let d = decomposition_numbers(g, &t.kl, c.sigma);
    for w in g.ids() {
        if d[(w0, w)] != i64::from(w == w0) {
            return Err(format!("{}: antidominant Verma has composition factor L_{}", t.name, g.elem(w)));
        }
        if d[(w, 0)] != i64::from(w == 0) {
            return Err(format!("{}: dominant projective has Verma M_{} in its flag", t.name, g.elem(w)));
        }
    }

    // Simple translation: the Verma route kills exactly the non-survivors.
    let simples = d.transpose().inverse().map_err(|e| format!("{}: {e}", t.name))?;
    for (mu, par) in walls(g) {
        let tgt = coset_index(g, &par, c.coset_side);
        let down = to_wall_matrix(g, &all, &tgt, &par, c.coset_side);
        let images = &down * &simples;
        let mut survivors = 0;
        for w in g.ids() {
            let vanishes = images.column(w).iter().all(|&x| x == 0);
            let survives = c.survives(g, &par, w);
            if vanishes == survives {
                return Err(format!(
                    "{}: translation of L_{} to {mu} is {} but the survivor rule says {}",
                    t.name,
                    g.elem(w),
                    if vanishes { "zero" } else { "nonzero" },
                    if survives { "survives" } else { "vanishes" }
                ));
            }
            survivors += usize::from(survives);
        }
        if survivors != tgt.len() {
            return Err(format!("{}: {survivors} simples survive on {mu}, expected {}", t.name, tgt.len()));
        }
    }

    // Wall-crossing equals multiplication by e + s on the action side.
    for s in 0..g.rank() {
        let par = ParabolicData::standard(g, &[s]).expect("valid generator");
        let tgt = coset_index(g, &par, c.coset_side);
        let down = to_wall_matrix(g, &all, &tgt, &par, c.coset_side);
        let up = from_wall_matrix(g, &all, &tgt, &par, c.coset_side);
        let mut bs = vec![0; n];
        bs[0] = 1;
        bs[g.generator(s)] = 1;
        if &up * &down != group_ring_action(g, &bs, c.action_side) {
            return Err(format!("{}: wall-crossing through s{} differs from multiplication by b_s", t.name, s + 1));
        }
    }

    // Tilting: the multiplicity formula agrees with Φ_w applied to M_{w0}.
    for w in g.ids() {
        let phi = d.column(w);
        let route_b = group_ring_action(g, &phi, c.action_side).column(w0);
        let route_a: Vec<i64> = g
            .ids()
            .map(|y| match c.tilting_placement {
                TiltingPlacement::YW0 => d[(g.mul(y, w0), w)],
                TiltingPlacement::W0Y => d[(g.mul(w0, y), w)],
            })
            .collect();
        if route_a != route_b {
            return Err(format!("{}: tilting routes disagree at Q_{}", t.name, g.elem(w)));
        }
    }
    Ok(())
}

/// Runs every candidate against A1 and A2.
pub fn run_battery() -> Result<BatteryReport> {
    let groups: Vec<TestGroup> = [("A1", "A1"), ("A2", "A2")]
        .iter()
        .map(|&(name, t)| {
            let g = weyl_group(t.parse()?)?;
            let kl = kl_table(&g);
            Ok(TestGroup { name, g, kl })
        })
        .collect::<Result<_>>()?;
    let outcomes: Vec<CandidateOutcome> = Conventions::candidates()
        .into_iter()
        .map(|c| {
            let failure = groups.iter().find_map(|t| check_candidate(t, &c).err());
            CandidateOutcome { conventions: c, failure }
        })
        .collect();
    let passing: Vec<Conventions> = outcomes.iter().filter(|o| o.failure.is_none()).map(|o| o.conventions).collect();
    let selected = (passing.len() == 1).then(|| passing[0]);
    Ok(BatteryReport { outcomes, selected })
}

static BATTERY: OnceLock<std::result::Result<BatteryReport, String>> = OnceLock::new();

/// The battery report, computed on first use.
pub fn battery() -> Result<&'static BatteryReport> {
    BATTERY
        .get_or_init(|| run_battery().map_err(|e| e.to_string()))
        .as_ref()
        .map_err(|e| Error::Internal(e.clone()))
}

/// The unique passing assignment.
pub fn conventions() -> Result<Conventions> {
    let report = battery()?;
    report.selected.ok_or_else(|| {
        Error::Internal(format!(
            "convention battery has {} passing assignments, expected exactly one",
            report.passing().count()
        ))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn battery_selects_a_unique_assignment() {
        let report = battery().unwrap();
        assert_eq!(report.outcomes.len(), 48);
        assert_eq!(report.passing().count(), 1);
        let c = conventions().unwrap();
        assert_eq!(
            c,
            Conventions {
                coset_side: Side::Left,
                sigma: IndexMap::Identity,
                action_side: Side::Right,
                tilting_placement: TiltingPlacement::W0Y,
                survivor_rule: SurvivorRule::LongestInCoset,
            }
        );
    }

    #[test]
    fn literal_survivor_rule_fails_for_a2() {
        let report = battery().unwrap();
        let literal = report
            .outcomes
            .iter()
            .find(|o| {
                o.conventions.survivor_rule == SurvivorRule::LiteralW0Coset
                    && o.conventions.coset_side == Side::Left
                    && o.conventions.sigma == IndexMap::Identity
            })
            .unwrap();
        assert!(literal.failure.as_ref().unwrap().contains("translation of L_"));
    }
}
