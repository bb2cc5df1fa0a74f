//! Graded Betti numbers and Castelnuovo–Mumford regularity.
//!
//! Two independent computation paths are provided. The default one builds,
//! for each candidate multidegree `a`, the simplicial complex of variable
//! subsets `σ ⊆ supp(a)` with `x^{a-σ} ∈ I`; the Betti number in homological
//! position `i` and multidegree `a` is the reduced homology dimension in
//! degree `i-1` of that complex. The second path takes the order complex of
//! the open interval below `a` in the lattice of generator lcms and reads the
//! same number one homological shift down. Candidate multidegrees range over
//! the lcm lattice in both cases; all other multidegrees contribute nothing.

use std::collections::BTreeMap;
use std::fmt;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::field::is_prime;
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// Knobs for Betti computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BettiOptions {
    /// Field characteristic: 0 for the rationals, otherwise a prime.
    pub characteristic: u64,
    /// Refuse ideals with more minimal generators than this.
    pub gen_cap: usize,
}

impl Default for BettiOptions {
    fn default() -> Self {
        BettiOptions { characteristic: 2, gen_cap: 20 }
    }
}

/// Graded and multigraded Betti numbers of an ideal (not of its quotient).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    pub characteristic: u64,
    /// `(i, multidegree) -> dimension`, nonzero entries only.
    pub multigraded: BTreeMap<(u32, Vec<u16>), u64>,
    /// `(i, total degree) -> dimension`, nonzero entries only.
    pub graded: BTreeMap<(u32, u32), u64>,
}

impl BettiTable {
    fn from_multigraded(characteristic: u64, multigraded: BTreeMap<(u32, Vec<u16>), u64>) -> Self {
        let mut graded = BTreeMap::new();
        for (&(i, ref a), &v) in &multigraded {
            let j: u32 = a.iter().map(|&e| e as u32).sum();
            *graded.entry((i, j)).or_insert(0) += v;
        }
        BettiTable { characteristic, multigraded, graded }
    }

    pub fn betti(&self, i: u32, j: u32) -> u64 {
        self.graded.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Largest homological index with a nonzero entry (projective dimension).
    pub fn projective_dimension(&self) -> u32 {
        self.graded.keys().map(|&(i, _)| i).max().expect("a nonzero ideal has generators")
    }

    /// `max { j - i : betti(i, j) != 0 }`.
    pub fn regularity(&self) -> u32 {
        self.graded.keys().map(|&(i, j)| j - i).max().expect("a nonzero ideal has generators")
    }

    /// True when every entry sits on the single diagonal `j = i + d`.
    pub fn is_linear(&self, d: u32) -> bool {
        self.graded.keys().all(|&(i, j)| j == i + d)
    }
}

impl fmt::Display for BettiTable {
    /// Grid with one column per homological index and one row per `j - i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pd = self.projective_dimension();
        let lo = self.graded.keys().map(|&(i, j)| j - i).min().unwrap();
        let hi = self.regularity();
        write!(f, "{:>6}", "")?;
        for i in 0..=pd {
            write!(f, "{:>8}", i)?;
        }
        writeln!(f)?;
        for t in lo..=hi {
            write!(f, "{:>5}:", t)?;
            for i in 0..=pd {
                match self.betti(i, i + t) {
                    0 => write!(f, "{:>8}", ".")?,
                    v => write!(f, "{:>8}", v)?,
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

fn validate(ideal: &MonomialIdeal, opts: &BettiOptions, op: &'static str) -> Result<()> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal { op });
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal { op });
    }
    if ideal.num_gens() > opts.gen_cap {
        return Err(Error::GeneratorCap { count: ideal.num_gens(), cap: opts.gen_cap });
    }
    if opts.characteristic != 0 && !(is_prime(opts.characteristic) && opts.characteristic < (1 << 32))
    {
        return Err(Error::BadCharacteristic(opts.characteristic));
    }
    Ok(())
}

/// The complex of variable subsets `σ ⊆ supp(a)` with `x^{a-σ} ∈ I`, on
/// vertices relabelled to `0..|supp(a)|`.
pub fn upper_koszul(ideal: &MonomialIdeal, a: &Monomial) -> Result<SimplicialComplex> {
    if ideal.ambient() != a.ambient() {
        return Err(Error::AmbientMismatch { expected: ideal.ambient(), found: a.ambient() });
    }
    let support = a.support();
    let mut faces = Vec::new();
    for mask in 0u32..(1 << support.len()) {
        let mut exps = a.exps().to_vec();
        let mut face = Vec::new();
        for (t, &var) in support.iter().enumerate() {
            if mask >> t & 1 == 1 {
                exps[var] -= 1;
                face.push(t as u16);
            }
        }
        if ideal.contains(&Monomial::new(exps)) {
            faces.push(face);
        }
    }
    SimplicialComplex::from_faces(support.len(), faces)
}

/// All lcms of nonempty generator subsets, in canonical order.
///
/// Built incrementally: close the generator set under pairwise lcm with a
/// generator, deduplicating as it grows, so the cost is proportional to the
/// number of distinct lattice elements rather than to `2^m`.
pub fn lcm_lattice(ideal: &MonomialIdeal) -> Result<Vec<Monomial>> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal { op: "lcm_lattice" });
    }
    let mut seen: std::collections::BTreeSet<Monomial> = ideal.gens().iter().cloned().collect();
    let mut frontier: Vec<Monomial> = seen.iter().cloned().collect();
    while let Some(a) = frontier.pop() {
        for g in ideal.gens() {
            let join = a.lcm(g);
            if seen.insert(join.clone()) {
                frontier.push(join);
            }
        }
    }
    let mut out: Vec<Monomial> = seen.into_iter().collect();
    out.sort();
    Ok(out)
}

/// Multigraded Betti numbers computed from upper Koszul complexes.
pub fn multigraded_betti(ideal: &MonomialIdeal, opts: &BettiOptions) -> Result<BettiTable> {
    validate(ideal, opts, "betti")?;
    let mut table = BTreeMap::new();
    for a in lcm_lattice(ideal)? {
        let complex = upper_koszul(ideal, &a)?;
        let dims = complex.reduced_homology_dims(opts.characteristic)?;
        for (i, &dim) in dims.iter().enumerate() {
            if dim > 0 {
                table.insert((i as u32, a.exps().to_vec()), dim as u64);
            }
        }
    }
    Ok(BettiTable::from_multigraded(opts.characteristic, table))
}

/// Multigraded Betti numbers computed from lcm-lattice order complexes: the
/// entry at `(i, a)` is the reduced homology dimension in degree `i-1` of the
/// chain complex of lattice elements strictly below `a`.
pub fn lcm_lattice_betti(ideal: &MonomialIdeal, opts: &BettiOptions) -> Result<BettiTable> {
    validate(ideal, opts, "betti")?;
    let lattice = lcm_lattice(ideal)?;
    let mut table = BTreeMap::new();
    for a in &lattice {
        // strict divisors of a within the lattice; canonical order sorts them
        // by ascending degree, so chains are ascending index lists
        let below: Vec<&Monomial> = lattice
            .iter()
            .filter(|b| *b != a && b.divides(a))
            .collect();
        let mut chains: Vec<Vec<u16>> = vec![Vec::new()];
        let mut stack: Vec<Vec<u16>> = (0..below.len() as u16).map(|v| vec![v]).collect();
        while let Some(chain) = stack.pop() {
            let last = *chain.last().unwrap() as usize;
            for next in last + 1..below.len() {
                if below[last].divides(below[next]) {
                    let mut longer = chain.clone();
                    longer.push(next as u16);
                    stack.push(longer);
                }
            }
            chains.push(chain);
        }
        let complex = SimplicialComplex::from_faces(below.len(), chains)?;
        let dims = complex.reduced_homology_dims(opts.characteristic)?;
        for (i, &dim) in dims.iter().enumerate() {
            if dim > 0 {
                table.insert((i as u32, a.exps().to_vec()), dim as u64);
            }
        }
    }
    Ok(BettiTable::from_multigraded(opts.characteristic, table))
}

/// Regularity of the ideal over the default field (characteristic 2).
pub fn regularity(ideal: &MonomialIdeal) -> Result<u32> {
    regularity_with(ideal, &BettiOptions::default())
}

/// Regularity of the ideal over a chosen field.
pub fn regularity_with(ideal: &MonomialIdeal, opts: &BettiOptions) -> Result<u32> {
    Ok(multigraded_betti(ideal, opts)?.regularity())
}

/// Regularity of the quotient ring, one less than that of the ideal.
pub fn regularity_quotient(ideal: &MonomialIdeal) -> Result<u32> {
    Ok(regularity(ideal)? - 1)
}

/// Whether an equigenerated ideal has a linear resolution over the chosen
/// field: every Betti entry in homological position `i` sits in degree `i+d`.
pub fn has_linear_resolution(ideal: &MonomialIdeal, opts: &BettiOptions) -> Result<bool> {
    validate(ideal, opts, "linear_resolution")?;
    let Some(d) = ideal.is_equigenerated()? else {
        return Err(Error::NotEquigenerated { op: "linear_resolution" });
    };
    Ok(multigraded_betti(ideal, opts)?.is_linear(d))
}
