//! Monomials as exponent vectors over a fixed ambient ring.

use std::cmp::Ordering;
use std::fmt;

/// A monomial in `n` variables, stored as its exponent vector.
///
/// Exponents are machine integers; desk-scale inputs stay far below `u16::MAX`
/// and every arithmetic path is overflow-checked.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u16>,
}

impl Monomial {
    /// Builds a monomial from its exponent vector.
    pub fn new(exps: Vec<u16>) -> Self {
        Monomial { exps }
    }

    /// The monomial `1` in `n` variables.
    pub fn one(n: usize) -> Self {
        Monomial { exps: vec![0; n] }
    }

    /// The variable `x_{idx}` (0-based) in `n` variables.
    pub fn variable(n: usize, idx: usize) -> Self {
        assert!(idx < n, "variable index {idx} out of range for {n} variables");
        let mut exps = vec![0; n];
        exps[idx] = 1;
        Monomial { exps }
    }

    /// Number of ambient variables.
    pub fn ambient(&self) -> usize {
        self.exps.len()
    }

    /// Total degree.
    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| u32::from(e)).sum()
    }

    /// Exponent of variable `var` (0-based).
    pub fn deg(&self, var: usize) -> u16 {
        self.exps[var]
    }

    /// The underlying exponent vector.
    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    /// Variables with positive exponent.
    pub fn support(&self) -> Vec<usize> {
        (0..self.exps.len()).filter(|&j| self.exps[j] > 0).collect()
    }

    /// True when every exponent is 0 or 1.
    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// True when `self` divides `other` (componentwise `<=`).
    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.ambient(), other.ambient());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `self / other`, if `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        debug_assert_eq!(self.ambient(), other.ambient());
        let mut exps = Vec::with_capacity(self.exps.len());
        for (a, b) in self.exps.iter().zip(&other.exps) {
            exps.push(a.checked_sub(*b)?);
        }
        Some(Monomial { exps })
    }

    /// Product of two monomials.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.ambient(), other.ambient());
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
            .collect();
        Monomial { exps }
    }

    /// `self^k`.
    pub fn pow(&self, k: u16) -> Monomial {
        let exps = self
            .exps
            .iter()
            .map(|&a| a.checked_mul(k).expect("exponent overflow"))
            .collect();
        Monomial { exps }
    }

    /// Greatest common divisor (componentwise min).
    pub fn gcd(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.ambient(), other.ambient());
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| *a.min(b)).collect();
        Monomial { exps }
    }

    /// Least common multiple (componentwise max).
    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.ambient(), other.ambient());
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect();
        Monomial { exps }
    }
}

/// Canonical order: total degree ascending, then exponent vectors
/// lexicographically descending, so `x1^2 < x1*x2 < x2^2`.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            return write!(f, "1");
        }
        let mut first = true;
        for (j, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", j + 1)?;
            } else {
                write!(f, "x{}^{}", j + 1, e)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[u16]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    #[test]
    fn degree_and_support() {
        assert_eq!(m(&[2, 1, 0]).degree(), 3);
        assert_eq!(m(&[2, 1, 0]).support(), vec![0, 1]);
        assert_eq!(Monomial::one(3).degree(), 0);
        assert!(Monomial::one(3).support().is_empty());
    }

    #[test]
    fn division() {
        assert!(m(&[1, 0]).divides(&m(&[2, 1])));
        assert!(!m(&[1, 2]).divides(&m(&[2, 1])));
        assert_eq!(m(&[2, 1]).checked_div(&m(&[1, 0])), Some(m(&[1, 1])));
        assert_eq!(m(&[2, 1]).checked_div(&m(&[0, 2])), None);
    }

    #[test]
    fn lattice_ops() {
        assert_eq!(m(&[2, 0]).lcm(&m(&[1, 1])), m(&[2, 1]));
        assert_eq!(m(&[2, 0]).gcd(&m(&[1, 1])), m(&[1, 0]));
    }

    #[test]
    fn canonical_order_puts_x1_rich_first() {
        let mut v = vec![m(&[0, 2]), m(&[2, 0]), m(&[1, 1]), m(&[1, 0])];
        v.sort();
        assert_eq!(v, vec![m(&[1, 0]), m(&[2, 0]), m(&[1, 1]), m(&[0, 2])]);
    }

    #[test]
    fn display_forms() {
        assert_eq!(m(&[2, 0, 1]).to_string(), "x1^2*x3");
        assert_eq!(Monomial::one(2).to_string(), "1");
    }
}
