use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Largest rank for which groups are enumerated.
pub const MAX_RANK: usize = 4;
/// Largest group order for which tables are materialised.
pub const MAX_ORDER: usize = 1152;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TypeLetter {
    A,
    B,
    C,
    D,
    F,
    G,
}

impl fmt::Display for TypeLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TypeLetter::A => "A",
            TypeLetter::B => "B",
            TypeLetter::C => "C",
            TypeLetter::D => "D",
            TypeLetter::F => "F",
            TypeLetter::G => "G",
        };
        f.write_str(s)
    }
}

/// A finite Cartan type such as `A2` or `B3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CartanType {
    pub letter: TypeLetter,
    pub rank: usize,
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.letter, self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let letter = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => TypeLetter::A,
            Some('B') => TypeLetter::B,
            Some('C') => TypeLetter::C,
            Some('D') => TypeLetter::D,
            Some('F') => TypeLetter::F,
            Some('G') => TypeLetter::G,
            _ => return Err(Error::Unsupported(format!("unknown Cartan type {s:?}"))),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::Unsupported(format!("missing or invalid rank in {s:?}")))?;
        let t = CartanType { letter, rank };
        t.validate()?;
        Ok(t)
    }
}

impl CartanType {
    pub fn new(letter: TypeLetter, rank: usize) -> Result<Self> {
        let t = CartanType { letter, rank };
        t.validate()?;
        Ok(t)
    }

    fn validate(&self) -> Result<()> {
        let ok = match self.letter {
            TypeLetter::A => self.rank >= 1,
            TypeLetter::B | TypeLetter::C => self.rank >= 2,
            TypeLetter::D => self.rank >= 4,
            TypeLetter::F => self.rank == 4,
            TypeLetter::G => self.rank == 2,
        };
        if !ok {
            return Err(Error::Unsupported(format!("{self} is not a finite Cartan type")));
        }
        if self.rank > MAX_RANK {
            return Err(Error::Unsupported(format!("{self}: rank is capped at {MAX_RANK}")));
        }
        Ok(())
    }

    /// Degrees of the fundamental invariants.
    pub fn degrees(&self) -> Vec<usize> {
        let n = self.rank;
        match self.letter {
            TypeLetter::A => (2..=n + 1).collect(),
            TypeLetter::B | TypeLetter::C => (1..=n).map(|i| 2 * i).collect(),
            TypeLetter::D => {
                let mut d: Vec<usize> = (1..n).map(|i| 2 * i).collect();
                d.push(n);
                d.sort_unstable();
                d
            }
            TypeLetter::F => vec![2, 6, 8, 12],
            TypeLetter::G => vec![2, 6],
        }
    }

    /// Cartan matrix `a[i][j] = <alpha_i^vee, alpha_j>` (Bourbaki numbering).
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize, aij: i64, aji: i64| {
            a[i][j] = aij;
            a[j][i] = aji;
        };
        match self.letter {
            TypeLetter::A => (0..n - 1).for_each(|i| link(i, i + 1, -1, -1)),
            TypeLetter::B => {
                (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
                // alpha_n short
                link(n - 2, n - 1, -1, -2);
            }
            TypeLetter::C => {
                (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
                // alpha_n long
                link(n - 2, n - 1, -2, -1);
            }
            TypeLetter::D => {
                (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
                link(n - 3, n - 1, -1, -1);
            }
            TypeLetter::F => {
                link(0, 1, -1, -1);
                link(1, 2, -1, -2);
                link(2, 3, -1, -1);
            }
            TypeLetter::G => link(0, 1, -1, -3),
        }
        a
    }
}

/// Cartan data of a finite root system.
///
/// Weights are written in the fundamental-weight basis, so the pairing of a
/// weight with the `i`-th simple coroot is its `i`-th coordinate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CartanDatum {
    pub cartan_type: CartanType,
    pub cartan_matrix: Vec<Vec<i64>>,
    /// `d_i` with `d_i a_ij = d_j a_ji`; proportional to root lengths squared.
    pub symmetrizer: Vec<i64>,
    /// Simple roots in fundamental-weight coordinates.
    pub simple_roots: Vec<Vec<i64>>,
    /// Simple coroots as coweight vectors (dual to the fundamental weights).
    pub simple_coroots: Vec<Vec<i64>>,
    /// Positive roots in fundamental-weight coordinates.
    pub positive_roots: Vec<Vec<i64>>,
    /// Positive roots in simple-root coordinates (same order).
    pub positive_roots_simple: Vec<Vec<i64>>,
    /// Positive coroots in simple-coroot coordinates (same order).
    pub positive_coroots: Vec<Vec<i64>>,
    pub rho: Vec<i64>,
    pub degrees: Vec<usize>,
}

impl CartanDatum {
    pub fn rank(&self) -> usize {
        self.cartan_type.rank
    }

    pub fn type_letter(&self) -> TypeLetter {
        self.cartan_type.letter
    }

    /// Pairing `<v, beta^vee>` of an integral weight with the `k`-th positive coroot.
    pub fn pair_positive_coroot(&self, v: &[i64], k: usize) -> i64 {
        v.iter().zip(&self.positive_coroots[k]).map(|(a, b)| a * b).sum()
    }

    /// `s_i(v) = v - <v, alpha_i^vee> alpha_i` on fundamental-weight coordinates.
    pub fn reflect(&self, i: usize, v: &mut [i64]) {
        let c = v[i];
        if c != 0 {
            for (x, a) in v.iter_mut().zip(&self.simple_roots[i]) {
                *x -= c * a;
            }
        }
    }

    /// Coxeter matrix entry `m_ij`.
    pub fn coxeter_entry(&self, i: usize, j: usize) -> usize {
        if i == j {
            return 1;
        }
        match self.cartan_matrix[i][j] * self.cartan_matrix[j][i] {
            0 => 2,
            1 => 3,
            2 => 4,
            3 => 6,
            p => unreachable!("product of off-diagonal Cartan entries {p}"),
        }
    }
}

/// Cartan data for a finite type of rank at most [`MAX_RANK`].
pub fn build_root_system(letter: TypeLetter, rank: usize) -> Result<CartanDatum> {
    let cartan_type = CartanType::new(letter, rank)?;
    let a = cartan_type.cartan_matrix();
    let n = rank;
    let symmetrizer = symmetrizer(&a);
    let simple_roots: Vec<Vec<i64>> = (0..n).map(|j| (0..n).map(|i| a[i][j]).collect()).collect();
    let simple_coroots: Vec<Vec<i64>> = (0..n).map(|i| unit(n, i)).collect();

    // Closure of the simple roots under simple reflections, in simple-root
    // coordinates: s_i(beta) = beta - <beta, alpha_i^vee> alpha_i.
    let mut found: BTreeSet<Vec<i64>> = (0..n).map(|i| unit(n, i)).collect();
    let mut frontier: Vec<Vec<i64>> = found.iter().cloned().collect();
    while let Some(beta) = frontier.pop() {
        for i in 0..n {
            let pairing: i64 = (0..n).map(|j| beta[j] * a[i][j]).sum();
            let mut image = beta.clone();
            image[i] -= pairing;
            if image.iter().all(|&c| c >= 0) && image.iter().any(|&c| c > 0) && found.insert(image.clone()) {
                frontier.push(image);
            }
        }
    }
    let mut positive_roots_simple: Vec<Vec<i64>> = found.into_iter().collect();
    positive_roots_simple.sort_by_key(|b| (b.iter().sum::<i64>(), std::cmp::Reverse(b.clone())));

    let positive_roots: Vec<Vec<i64>> = positive_roots_simple
        .iter()
        .map(|c| (0..n).map(|i| (0..n).map(|j| c[j] * a[i][j]).sum()).collect())
        .collect();
    let positive_coroots: Vec<Vec<i64>> = positive_roots_simple
        .iter()
        .map(|c| {
            // (beta, beta) = sum c_i c_j d_i a_ij ; beta^vee = sum (2 d_j c_j / (beta, beta)) alpha_j^vee
            let norm: i64 = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| c[i] * c[j] * symmetrizer[i] * a[i][j]).sum();
            (0..n)
                .map(|j| {
                    let num = 2 * symmetrizer[j] * c[j];
                    debug_assert_eq!(num % norm, 0);
                    num / norm
                })
                .collect()
        })
        .collect();

    let mut twice_rho = vec![0i64; n];
    for r in &positive_roots {
        for (x, y) in twice_rho.iter_mut().zip(r) {
            *x += y;
        }
    }
    let rho: Vec<i64> = twice_rho.iter().map(|x| x / 2).collect();
    let datum = CartanDatum {
        cartan_type,
        cartan_matrix: a,
        symmetrizer,
        simple_roots,
        simple_coroots,
        positive_roots,
        positive_roots_simple,
        positive_coroots,
        rho,
        degrees: cartan_type.degrees(),
    };
    check_datum(&datum, &twice_rho)?;
    Ok(datum)
}

fn unit(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

fn symmetrizer(a: &[Vec<i64>]) -> Vec<i64> {
    // Propagate ratios d_j = d_i a_ij / a_ji along the (connected) Dynkin diagram.
    let n = a.len();
    let mut d: Vec<Option<(i64, i64)>> = vec![None; n];
    d[0] = Some((1, 1));
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..n {
            let Some((num, den)) = d[i] else { continue };
            for j in 0..n {
                if i != j && a[i][j] != 0 && d[j].is_none() {
                    d[j] = Some((num * a[i][j], den * a[j][i]));
                    changed = true;
                }
            }
        }
    }
    let fracs: Vec<(i64, i64)> = d.into_iter().map(|x| x.expect("connected Dynkin diagram")).collect();
    let lcm_den = fracs.iter().fold(1i64, |acc, &(_, den)| num_integer::lcm(acc, den.abs()));
    let ints: Vec<i64> = fracs.iter().map(|&(num, den)| num * lcm_den / den).collect();
    let g = ints.iter().fold(0i64, |acc, &x| num_integer::gcd(acc, x));
    ints.iter().map(|x| x.abs() / g).collect()
}

fn check_datum(d: &CartanDatum, twice_rho: &[i64]) -> Result<()> {
    let n = d.rank();
    for i in 0..n {
        if d.cartan_matrix[i][i] != 2 || (0..n).any(|j| j != i && d.cartan_matrix[i][j] > 0) {
            return Err(Error::Internal(format!("{}: malformed Cartan matrix", d.cartan_type)));
        }
    }
    if twice_rho.iter().any(|x| x % 2 != 0) || d.rho.iter().any(|&x| x != 1) {
        return Err(Error::Internal(format!("{}: half-sum of positive roots is not (1,..,1): {:?}", d.cartan_type, d.rho)));
    }
    let expected: usize = d.degrees.iter().map(|x| x - 1).sum();
    if d.positive_roots.len() != expected {
        return Err(Error::Internal(format!(
            "{}: {} positive roots, expected {expected}",
            d.cartan_type,
            d.positive_roots.len()
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_types() {
        let a1 = build_root_system(TypeLetter::A, 1).unwrap();
        assert_eq!(a1.positive_roots, vec![vec![2]]);
        assert_eq!(a1.rho, vec![1]);
        assert_eq!(a1.degrees, vec![2]);
        let a2 = build_root_system(TypeLetter::A, 2).unwrap();
        assert_eq!(a2.positive_roots.len(), 3);
        assert_eq!(a2.degrees, vec![2, 3]);
        let b2 = build_root_system(TypeLetter::B, 2).unwrap();
        assert_eq!(b2.positive_roots.len(), 4);
        assert_eq!(b2.degrees, vec![2, 4]);
    }

    #[test]
    fn every_supported_type_builds() {
        for t in ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "F4", "G2"] {
            let ct: CartanType = t.parse().unwrap();
            let d = build_root_system(ct.letter, ct.rank).unwrap();
            for k in 0..d.positive_roots.len() {
                assert!(d.pair_positive_coroot(&d.rho, k) >= 1, "{t}");
            }
        }
    }

    #[test]
    fn rejects_invalid() {
        assert!(matches!("A5".parse::<CartanType>(), Err(Error::Unsupported(_))));
        assert!(matches!("D3".parse::<CartanType>(), Err(Error::Unsupported(_))));
        assert!(matches!("E6".parse::<CartanType>(), Err(Error::Unsupported(_))));
        assert!(build_root_system(TypeLetter::G, 3).is_err());
    }

    #[test]
    fn coroot_pairing_of_simple_roots() {
        let g2 = build_root_system(TypeLetter::G, 2).unwrap();
        // <alpha_j, alpha_i^vee> = a_ij
        for j in 0..2 {
            for i in 0..2 {
                assert_eq!(g2.simple_roots[j][i], g2.cartan_matrix[i][j]);
            }
        }
        assert_eq!(g2.symmetrizer, vec![3, 1]);
    }
}
