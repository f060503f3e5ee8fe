use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::group::{ElemId, WeylGroup};
use super::parabolic::ParabolicData;
use super::root_system::CartanDatum;
use crate::linalg::q;
use crate::{Error, Result, Q};

/// A weight in fundamental-weight coordinates.
/// Serialises as a list of decimal strings such as `["-1", "1/2"]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Weight(pub Vec<Q>);

impl Serialize for Weight {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter().map(ToString::to_string))
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<String>::deserialize(d)?;
        parts
            .iter()
            .map(|p| p.parse::<Q>().map_err(serde::de::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(Weight)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![Q::zero(); rank])
    }

    pub fn from_ints(v: &[i64]) -> Self {
        Weight(v.iter().map(|&x| q(x)).collect())
    }

    /// `-rho`, the unique fixed point of the dot-action.
    pub fn minus_rho(datum: &CartanDatum) -> Self {
        Weight(datum.rho.iter().map(|&x| q(-x)).collect())
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    /// `<lambda, alpha_i^vee>`, which is just the `i`-th coordinate.
    pub fn pair_simple_coroot(&self, i: usize) -> &Q {
        &self.0[i]
    }

    /// `<lambda, beta^vee>` for the `k`-th positive coroot.
    pub fn pair_positive_coroot(&self, datum: &CartanDatum, k: usize) -> Q {
        self.0.iter().zip(&datum.positive_coroots[k]).map(|(a, &b)| a * q(b)).sum()
    }

    pub fn as_integers(&self) -> Option<Vec<i64>> {
        self.0.iter().map(crate::linalg::q_to_i64).collect()
    }

    pub fn plus_rho(&self, datum: &CartanDatum) -> Weight {
        Weight(self.0.iter().zip(&datum.rho).map(|(a, &r)| a + q(r)).collect())
    }

    fn minus_rho_shift(&self, datum: &CartanDatum) -> Weight {
        Weight(self.0.iter().zip(&datum.rho).map(|(a, &r)| a - q(r)).collect())
    }

    /// Linear action of `w`.
    pub fn act(&self, group: &WeylGroup, w: ElemId) -> Weight {
        let datum = group.datum();
        let mut v = self.0.clone();
        for &i in group.elem(w).word.iter().rev() {
            let c = v[i].clone();
            if !c.is_zero() {
                for (x, &a) in v.iter_mut().zip(&datum.simple_roots[i]) {
                    *x -= &c * q(a);
                }
            }
        }
        Weight(v)
    }
}

/// `w . lambda = w(lambda + rho) - rho`.
pub fn dot_action(group: &WeylGroup, w: ElemId, lambda: &Weight) -> Weight {
    let datum = group.datum();
    lambda.plus_rho(datum).act(group, w).minus_rho_shift(datum)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightClass {
    pub integral: bool,
    pub regular: bool,
    pub rho_dominant: bool,
}

/// Integrality, regularity and rho-dominance of a weight.
///
/// Regularity is read off the coroot pairings of `lambda + rho`: the
/// dot-stabiliser is generated by the reflections whose coroots vanish there.
pub fn classify_weight(datum: &CartanDatum, lambda: &Weight) -> Result<WeightClass> {
    check_rank(datum, lambda)?;
    let shifted = lambda.plus_rho(datum);
    let pairings: Vec<Q> = (0..datum.positive_coroots.len()).map(|k| shifted.pair_positive_coroot(datum, k)).collect();
    Ok(WeightClass {
        integral: lambda.0.iter().all(|x| x.is_integer()),
        regular: pairings.iter().all(|p| !p.is_zero()),
        rho_dominant: pairings.iter().all(|p| !p.is_negative()),
    })
}

pub(crate) fn check_rank(datum: &CartanDatum, lambda: &Weight) -> Result<()> {
    if lambda.rank() != datum.rank() {
        return Err(Error::Usage(format!(
            "weight {lambda} has {} coordinates, {} needs {}",
            lambda.rank(),
            datum.cartan_type,
            datum.rank()
        )));
    }
    Ok(())
}

/// The dot-stabiliser `W_lambda = {w : w . lambda = lambda}`.
pub fn stabilizer_dot(group: &WeylGroup, lambda: &Weight) -> Result<ParabolicData> {
    check_rank(group.datum(), lambda)?;
    let members: Vec<ElemId> = group.ids().filter(|&w| dot_action(group, w, lambda) == *lambda).collect();
    ParabolicData::from_subgroup(group, &members)
}

/// The integral rho-dominant weight whose dot-stabiliser is generated by the
/// simple reflections in `gens`: coordinate `-1` on `gens`, `0` elsewhere.
pub fn wall_weight(datum: &CartanDatum, gens: &[usize]) -> Weight {
    let mut v = vec![0i64; datum.rank()];
    for &i in gens {
        v[i] = -1;
    }
    Weight::from_ints(&v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::{build_root_system, enumerate_weyl, TypeLetter};

    fn group(t: TypeLetter, r: usize) -> WeylGroup {
        enumerate_weyl(&build_root_system(t, r).unwrap()).unwrap()
    }

    #[test]
    fn dot_action_examples() {
        let a1 = group(TypeLetter::A, 1);
        let zero = Weight::zero(1);
        assert_eq!(dot_action(&a1, 0, &zero), zero);
        assert_eq!(dot_action(&a1, 1, &zero), Weight::from_ints(&[-2]));
        let a2 = group(TypeLetter::A, 2);
        let mr = Weight::minus_rho(a2.datum());
        for w in a2.ids() {
            assert_eq!(dot_action(&a2, w, &mr), mr);
        }
    }

    #[test]
    fn classification_examples() {
        let a1 = build_root_system(TypeLetter::A, 1).unwrap();
        let c = classify_weight(&a1, &Weight::zero(1)).unwrap();
        assert_eq!(c, WeightClass { integral: true, regular: true, rho_dominant: true });
        let c = classify_weight(&a1, &Weight::minus_rho(&a1)).unwrap();
        assert_eq!(c, WeightClass { integral: true, regular: false, rho_dominant: true });
        let c = classify_weight(&a1, &Weight::from_ints(&[-2])).unwrap();
        assert_eq!(c, WeightClass { integral: true, regular: true, rho_dominant: false });
        let half = Weight(vec![crate::linalg::q_frac(1, 2)]);
        assert!(!classify_weight(&a1, &half).unwrap().integral);
    }

    #[test]
    fn stabilizer_examples() {
        let a2 = group(TypeLetter::A, 2);
        assert_eq!(stabilizer_dot(&a2, &Weight::zero(2)).unwrap().subgroup(), &[0]);
        assert_eq!(stabilizer_dot(&a2, &Weight::minus_rho(a2.datum())).unwrap().size(), 6);
        // <lambda + rho, a1^vee> = 0, <lambda + rho, a2^vee> = 1
        let lam = Weight::from_ints(&[-1, 0]);
        let stab = stabilizer_dot(&a2, &lam).unwrap();
        assert_eq!(stab.subgroup(), &[0, a2.from_word(&[0]).unwrap()]);
    }

    #[test]
    fn wrong_rank_is_usage_error() {
        let a2 = build_root_system(TypeLetter::A, 2).unwrap();
        assert!(matches!(classify_weight(&a2, &Weight::zero(3)), Err(Error::Usage(_))));
    }
}
