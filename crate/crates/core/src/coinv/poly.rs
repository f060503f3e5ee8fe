use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::linalg::q;
use crate::{Error, Result, Q};

/// Exponent vector of a monomial.
pub type Monomial = Vec<u32>;

/// Rational polynomial in `nvars` variables, kept in canonical sorted form
/// without zero terms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Q>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Q) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Q::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = vec![0; nvars];
        m[i] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(m, Q::one());
        p
    }

    /// `sum_i coeffs[i] x_i`
    pub fn linear(coeffs: &[i64]) -> Self {
        let n = coeffs.len();
        let mut p = Self::zero(n);
        for (i, &c) in coeffs.iter().enumerate() {
            let mut m = vec![0; n];
            m[i] = 1;
            p.add_term(m, q(c));
        }
        p
    }

    pub fn monomial(exps: Monomial, c: Q) -> Self {
        let mut p = Self::zero(exps.len());
        p.add_term(exps, c);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn add_term(&mut self, m: Monomial, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Q)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &[u32]) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree (`None` for the zero polynomial).
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.iter().sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.iter().sum::<u32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn homogeneous_part(&self, d: u32) -> Self {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().filter(|(m, _)| m.iter().sum::<u32>() == d).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    /// Constant term.
    pub fn constant_term(&self) -> Q {
        self.coeff(&vec![0; self.nvars])
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        MultiPoly { nvars: self.nvars, terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one(self.nvars);
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Replaces each `x_j` by `images[j]`.
    pub fn substitute(&self, images: &[MultiPoly]) -> Self {
        let mut out = Self::zero(self.nvars);
        // Cache powers of each image.
        let mut powers: Vec<Vec<MultiPoly>> = images.iter().map(|p| vec![Self::one(p.nvars)]).collect();
        for (m, c) in &self.terms {
            let mut t = Self::constant(self.nvars, c.clone());
            for (j, &e) in m.iter().enumerate() {
                while powers[j].len() <= e as usize {
                    let next = powers[j].last().expect("nonempty") * &images[j];
                    powers[j].push(next);
                }
                if e > 0 {
                    t = &t * &powers[j][e as usize];
                }
            }
            out = &out + &t;
        }
        out
    }

    /// Exact quotient by a linear form `l` whose coefficient on `x_var` is
    /// nonzero. Fails if `l` does not divide `self`.
    pub fn div_linear(&self, l: &MultiPoly, var: usize) -> Result<Self> {
        let mut unit = vec![0; self.nvars];
        unit[var] = 1;
        let lead = l.coeff(&unit);
        if lead.is_zero() {
            return Err(Error::Internal("divisor has no term in the chosen variable".into()));
        }
        let mut rem = self.clone();
        let mut quot = Self::zero(self.nvars);
        while let Some((m, c)) = rem.terms.iter().max_by_key(|(m, _)| m[var]).map(|(m, c)| (m.clone(), c.clone())) {
            if m[var] == 0 {
                return Err(Error::Internal(format!("{l} does not divide {self}")));
            }
            let mut qm = m.clone();
            qm[var] -= 1;
            let qt = Self::monomial(qm, c / &lead);
            rem = &rem - &(&qt * l);
            quot = &quot + &qt;
        }
        Ok(quot)
    }
}

/// All exponent vectors of total degree `d` in `n` variables, in
/// lexicographically decreasing order.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    fn rec(n: usize, d: u32, prefix: &mut Monomial, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == n {
            prefix.push(d);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=d).rev() {
            prefix.push(e);
            rec(n, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(n, d, &mut Vec::with_capacity(n), &mut out);
    out
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let mono: Vec<String> = m
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| if e == 1 { format!("x{}", i + 1) } else { format!("x{}^{e}", i + 1) })
                .collect();
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if mono.is_empty() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                f.write_str(&mono.join("*"))?;
            } else {
                write!(f, "({c})*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self + &(-rhs)
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero(self.nvars);
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                let m: Monomial = a.iter().zip(b).map(|(i, j)| i + j).collect();
                out.add_term(m, x * y);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn division_by_linear_form() {
        let x = MultiPoly::var(2, 0);
        let y = MultiPoly::var(2, 1);
        let l = &x.scale(&q(2)) - &y;
        let f = &(&l * &x) * &y;
        assert_eq!(f.div_linear(&l, 0).unwrap(), &x * &y);
        assert!(x.div_linear(&l, 1).is_err());
        assert!(y.pow(2).div_linear(&l, 0).is_err());
    }

    #[test]
    fn monomial_counts() {
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
        assert_eq!(monomials_of_degree(1, 4), vec![vec![4]]);
        assert_eq!(monomials_of_degree(2, 0), vec![vec![0, 0]]);
    }

    #[test]
    fn substitution_and_display() {
        let x = MultiPoly::var(2, 0);
        let y = MultiPoly::var(2, 1);
        let f = &x.pow(2) + &y;
        let g = f.substitute(&[y.clone(), x.clone()]);
        assert_eq!(g, &y.pow(2) + &x);
        assert_eq!(f.to_string(), "x1^2 + x2");
        assert_eq!(f.degree(), Some(2));
        assert!(!f.is_homogeneous());
    }
}
