use std::fmt;

use serde::{Deserialize, Serialize};

use crate::weyl::CartanDatum;

/// Integer polynomial (or truncated power series) in `t`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertSeries {
    pub coeffs: Vec<i64>,
}

impl HilbertSeries {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.len() > 1 && coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        HilbertSeries { coeffs }
    }

    /// Sum of all coefficients.
    pub fn total(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    /// The series of `#{w : l(w) = k}` over a list of lengths.
    pub fn from_lengths(lengths: impl IntoIterator<Item = usize>) -> Self {
        let mut c = Vec::new();
        for l in lengths {
            if c.len() <= l {
                c.resize(l + 1, 0);
            }
            c[l] += 1;
        }
        Self::new(c)
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| match k {
                0 => c.to_string(),
                1 => format!("{c}t"),
                _ => format!("{c}t^{k}"),
            })
            .collect();
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// Coefficients up to `t^n` of `prod_i (1 - t^{d_i}) / (1 - t)^{2r}`, the
/// Hilbert series of `S ⊗_{S^W} S` for `S` the polynomial ring on `h*`.
pub fn structure_algebra_hilbert_series(datum: &CartanDatum, n: usize) -> HilbertSeries {
    let mut num = vec![0i64; n + 1];
    num[0] = 1;
    for &d in &datum.degrees {
        let d = d as usize;
        for k in (d..=n).rev() {
            num[k] -= num[k - d];
        }
    }
    // 1/(1-t)^m has coefficients binom(k + m - 1, m - 1).
    let m = 2 * datum.rank();
    let mut inv = vec![1i64; n + 1];
    for _ in 1..m {
        for k in 1..=n {
            inv[k] += inv[k - 1];
        }
    }
    let coeffs = (0..=n).map(|k| (0..=k).map(|j| num[j] * inv[k - j]).sum()).collect();
    HilbertSeries { coeffs }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::{build_root_system, TypeLetter};

    #[test]
    fn a1_structure_series() {
        let a1 = build_root_system(TypeLetter::A, 1).unwrap();
        assert_eq!(structure_algebra_hilbert_series(&a1, 2).coeffs, vec![1, 2, 2]);
        let a2 = build_root_system(TypeLetter::A, 2).unwrap();
        assert_eq!(structure_algebra_hilbert_series(&a2, 1).coeffs, vec![1, 4]);
    }

    #[test]
    fn display_and_lengths() {
        let h = HilbertSeries::from_lengths([0, 1, 1, 2]);
        assert_eq!(h.coeffs, vec![1, 2, 1]);
        assert_eq!(h.to_string(), "1 + 2t + 1t^2");
        assert_eq!(h.total(), 4);
    }
}
