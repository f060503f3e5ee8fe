//! Root systems, Weyl groups, the dot-action and coset combinatorics.

mod group;
mod parabolic;
mod root_system;
mod weight;

use std::sync::Arc;

use serde::{Deserialize, Serialize};

pub use group::{enumerate_weyl, ElemId, Extremal, Side, WeylElem, WeylGroup};
pub use parabolic::{coset_reps, ParabolicData};
pub use root_system::{build_root_system, CartanDatum, CartanType, TypeLetter, MAX_ORDER, MAX_RANK};
pub use weight::{classify_weight, dot_action, stabilizer_dot, wall_weight, Weight, WeightClass};

use crate::Result;

/// Builds and enumerates in one step.
pub fn weyl_group(cartan_type: CartanType) -> Result<Arc<WeylGroup>> {
    let datum = build_root_system(cartan_type.letter, cartan_type.rank)?;
    Ok(Arc::new(enumerate_weyl(&datum)?))
}

/// Serialised form of a [`WeylGroup`].
///
/// ```json
/// {
///   "datum": { "cartan_type": {"letter": "A", "rank": 2}, "cartan_matrix": [[2,-1],[-1,2]], ... },
///   "elements": [ {"word": [], "length": 0}, {"word": [0], "length": 1}, ... ],
///   "longest": 5,
///   "mult_table": [[0,1,...], ...],
///   "bruhat_below": [[0], [0,1], ...]
/// }
/// ```
///
/// Words use 0-based generator indices. `mult_table[a][b]` is the index of
/// `a * b`; `bruhat_below[y]` lists every `x <= y`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeylGroupJson {
    pub datum: CartanDatum,
    pub elements: Vec<WeylElem>,
    pub longest: usize,
    pub mult_table: Vec<Vec<usize>>,
    pub bruhat_below: Vec<Vec<usize>>,
}

impl WeylGroupJson {
    pub fn from_group(g: &WeylGroup) -> Self {
        WeylGroupJson {
            datum: g.datum().clone(),
            elements: g.elements().to_vec(),
            longest: g.longest(),
            mult_table: g.ids().map(|a| g.ids().map(|b| g.mul(a, b)).collect()).collect(),
            bruhat_below: g.ids().map(|y| g.ids().filter(|&x| g.bruhat_leq(x, y)).collect()).collect(),
        }
    }
}

/// Parses a word written with 1-based generator indices, e.g. `"1,2,1"`.
/// The empty string and `"e"` denote the empty word.
pub fn parse_word(s: &str, rank: usize) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() || s == "e" {
        return Ok(Vec::new());
    }
    s.split(|c| c == ',' || c == '.' || c == ' ')
        .filter(|t| !t.is_empty())
        .map(|t| {
            let i: usize = t
                .trim_start_matches('s')
                .parse()
                .map_err(|_| crate::Error::Usage(format!("bad generator {t:?} in word {s:?}")))?;
            if i == 0 || i > rank {
                return Err(crate::Error::Usage(format!("generator {i} out of range 1..={rank}")));
            }
            Ok(i - 1)
        })
        .collect()
}

/// Formats a word with 1-based, dot-separated indices (`e` for the identity).
pub fn format_word(word: &[usize]) -> String {
    if word.is_empty() {
        return "e".into();
    }
    word.iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(".")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_parsing() {
        assert_eq!(parse_word("1,2,1", 2).unwrap(), vec![0, 1, 0]);
        assert_eq!(parse_word("e", 2).unwrap(), Vec::<usize>::new());
        assert_eq!(parse_word("s1.s3", 3).unwrap(), vec![0, 2]);
        assert!(parse_word("3", 2).is_err());
        assert_eq!(format_word(&[0, 1]), "1.2");
        assert_eq!(format_word(&[]), "e");
    }

    #[test]
    fn json_shape_round_trips() {
        let g = weyl_group("B2".parse().unwrap()).unwrap();
        let j = WeylGroupJson::from_group(&g);
        let text = serde_json::to_string(&j).unwrap();
        let back: WeylGroupJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back, j);
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["elements"][1]["word"], serde_json::json!([0]));
        assert_eq!(v["datum"]["cartan_type"]["letter"], "B");
    }
}
