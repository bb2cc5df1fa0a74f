//! Monomial ideals in canonical form.
//!
//! A `MonomialIdeal` always stores its unique minimal generating set, sorted by
//! total degree and then lexicographically (x1-rich first). The zero ideal has
//! no generators; the unit ideal is generated by `1`. Structural equality
//! therefore coincides with ideal equality within a fixed ambient ring.

use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::Monomial;

/// A monomial ideal in `ambient` variables, held by its minimal generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ambient: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// The zero ideal.
    pub fn zero(ambient: usize) -> Self {
        MonomialIdeal { ambient, gens: Vec::new() }
    }

    /// The unit ideal `(1)`.
    pub fn unit(ambient: usize) -> Self {
        MonomialIdeal { ambient, gens: vec![Monomial::one(ambient)] }
    }

    /// The principal ideal `(u)`.
    pub fn principal(u: Monomial) -> Self {
        MonomialIdeal { ambient: u.ambient(), gens: vec![u] }
    }

    /// Builds the ideal generated by `gens`, reduced to canonical minimal form:
    /// duplicates removed, generators divisible by another generator dropped,
    /// result sorted canonically.
    pub fn minimalize<I>(ambient: usize, gens: I) -> Result<Self>
    where
        I: IntoIterator<Item = Monomial>,
    {
        let mut gens: Vec<Monomial> = gens.into_iter().collect();
        for g in &gens {
            if g.ambient() != ambient {
                return Err(Error::AmbientMismatch { expected: ambient, found: g.ambient() });
            }
        }
        gens.sort();
        gens.dedup();
        // Canonical order is degree-ascending, so a proper divisor of gens[i]
        // can only appear among gens[..i]; equal-degree distinct monomials
        // never divide each other.
        let mut minimal: Vec<Monomial> = Vec::with_capacity(gens.len());
        for g in gens {
            let dominated = minimal
                .iter()
                .take_while(|h| h.degree() < g.degree())
                .any(|h| h.divides(&g));
            if !dominated {
                minimal.push(g);
            }
        }
        Ok(MonomialIdeal { ambient, gens: minimal })
    }

    /// Number of ambient variables.
    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// The minimal generators, in canonical order.
    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    /// Number of minimal generators.
    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    /// True for the zero ideal.
    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// True for the unit ideal.
    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].degree() == 0
    }

    /// Monomial membership: some minimal generator divides `u`.
    pub fn contains(&self, u: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(u))
    }

    /// Ideal containment `other ⊆ self`, via membership of generators.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    /// Componentwise maximum of generator exponents (the closure box corner).
    /// `None` for the zero ideal.
    pub fn max_exponents(&self) -> Option<Vec<u16>> {
        if self.gens.is_empty() {
            return None;
        }
        let mut out = vec![0u16; self.ambient];
        for g in &self.gens {
            for (slot, &e) in out.iter_mut().zip(g.exps()) {
                *slot = (*slot).max(e);
            }
        }
        Some(out)
    }

    /// Smallest generator degree. `None` for the zero ideal.
    pub fn min_gen_degree(&self) -> Option<u32> {
        self.gens.first().map(Monomial::degree)
    }

    /// `Some(d)` when all generators share total degree `d`.
    ///
    /// Errors on the zero ideal, where the notion is undefined.
    pub fn is_equigenerated(&self) -> Result<Option<u32>> {
        let first = self
            .gens
            .first()
            .ok_or(Error::ZeroIdeal { op: "is_equigenerated" })?
            .degree();
        let last = self.gens.last().unwrap().degree();
        Ok((first == last).then_some(first))
    }

    fn check_ambient(&self, other: &MonomialIdeal) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch {
                expected: self.ambient,
                found: other.ambient,
            });
        }
        Ok(())
    }

    /// Ideal sum `I + J`.
    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ambient(other)?;
        MonomialIdeal::minimalize(self.ambient, self.gens.iter().chain(&other.gens).cloned())
    }

    /// Ideal product `I * J`. The product with the zero ideal is zero.
    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ambient(other)?;
        let mut prods = Vec::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                prods.push(g.mul(h));
            }
        }
        MonomialIdeal::minimalize(self.ambient, prods)
    }

    /// Ideal power `I^t`, with `I^0 = (1)`.
    pub fn power(&self, t: u32) -> Result<MonomialIdeal> {
        let mut acc = MonomialIdeal::unit(self.ambient);
        for _ in 0..t {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// Colon ideal `I : (u)`, computed as `minimalize { g / gcd(g, u) }`.
    pub fn colon(&self, u: &Monomial) -> Result<MonomialIdeal> {
        if u.ambient() != self.ambient {
            return Err(Error::AmbientMismatch { expected: self.ambient, found: u.ambient() });
        }
        MonomialIdeal::minimalize(
            self.ambient,
            self.gens.iter().map(|g| g.checked_div(&g.gcd(u)).unwrap()),
        )
    }

    /// Intersection `I ∩ J`, via pairwise lcms of generators.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ambient(other)?;
        let mut lcms = Vec::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                lcms.push(g.lcm(h));
            }
        }
        MonomialIdeal::minimalize(self.ambient, lcms)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for g in &self.gens {
            if !first {
                write!(f, ", ")?;
            }
            first = false;
            write!(f, "{g}")?;
        }
        Ok(())
    }
}
