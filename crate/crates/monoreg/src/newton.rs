//! Newton-polyhedron geometry: hull membership, integral closure, vertices.
//!
//! The Newton polyhedron of a nonzero monomial ideal `I` is
//! `C(I) = conv{exponents of G(I)} + R^n_{>=0}`. A monomial lies in the
//! integral closure of `I` exactly when its exponent vector lies in `C(I)`,
//! which this module decides by exact rational feasibility; the power-based
//! characterization (`u^k ∈ I^k` for some `k`) is kept as an independent
//! cross-check oracle and never drives a decision.

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::lp::conv_orthant_contains;
use crate::monomial::Monomial;

/// Default power bound for the cross-check oracle.
pub const DEFAULT_POWER_BOUND: u32 = 6;

fn require_nonzero(ideal: &MonomialIdeal, op: &'static str) -> Result<()> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal { op });
    }
    Ok(())
}

fn require_ambient(ideal: &MonomialIdeal, u: &Monomial) -> Result<()> {
    if ideal.ambient() != u.ambient() {
        return Err(Error::AmbientMismatch {
            expected: ideal.ambient(),
            found: u.ambient(),
        });
    }
    Ok(())
}

/// True when the exponent vector of `u` lies in the Newton polyhedron of `I`.
///
/// Decided exactly: divisibility by a generator is an immediate yes; a total
/// degree below the smallest generator degree, or a coordinate below the
/// componentwise generator minimum, is an immediate no (both follow from
/// `Σλ_i = 1`, `λ ≥ 0`); everything else goes to the rational LP.
pub fn hull_membership(u: &Monomial, ideal: &MonomialIdeal) -> Result<bool> {
    require_nonzero(ideal, "hull_membership")?;
    require_ambient(ideal, u)?;
    Ok(hull_membership_unchecked(u, ideal))
}

fn hull_membership_unchecked(u: &Monomial, ideal: &MonomialIdeal) -> bool {
    if ideal.contains(u) {
        return true;
    }
    // min_gen_degree exists: the ideal is nonzero.
    if u.degree() < ideal.min_gen_degree().unwrap() {
        return false;
    }
    let gens = ideal.gens();
    for j in 0..ideal.ambient() {
        let col_min = gens.iter().map(|g| g.deg(j)).min().unwrap();
        if u.deg(j) < col_min {
            return false;
        }
    }
    let rows: Vec<&[u16]> = gens.iter().map(|g| g.exps()).collect();
    conv_orthant_contains(&rows, u.exps())
}

/// Precomputed powers `I, I^2, ..., I^k_max` for repeated power-membership
/// queries against a fixed ideal.
pub struct PowerOracle {
    powers: Vec<MonomialIdeal>,
}

impl PowerOracle {
    /// Builds the oracle for `ideal` up to `k_max` (which must be >= 1).
    pub fn new(ideal: &MonomialIdeal, k_max: u32) -> Result<Self> {
        require_nonzero(ideal, "power_membership")?;
        assert!(k_max >= 1, "power oracle needs k_max >= 1");
        let mut powers = Vec::with_capacity(k_max as usize);
        powers.push(ideal.clone());
        for _ in 1..k_max {
            let next = powers.last().unwrap().product(ideal)?;
            powers.push(next);
        }
        Ok(PowerOracle { powers })
    }

    /// Smallest `k <= k_max` with `u^k ∈ I^k`, if any.
    pub fn min_witness(&self, u: &Monomial) -> Option<u32> {
        for (idx, power) in self.powers.iter().enumerate() {
            let k = idx as u32 + 1;
            if power.contains(&u.pow(k as u16)) {
                return Some(k);
            }
        }
        None
    }

    /// True when some `k <= k_max` has `u^k ∈ I^k`.
    pub fn member(&self, u: &Monomial) -> bool {
        self.min_witness(u).is_some()
    }
}

/// Power-based closure membership: true iff `u^k ∈ I^k` for some `k <= k_max`.
///
/// This is a one-sided oracle: a witness power proves hull membership, but a
/// miss only shows no witness exists up to `k_max`.
pub fn power_membership(u: &Monomial, ideal: &MonomialIdeal, k_max: u32) -> Result<bool> {
    require_ambient(ideal, u)?;
    Ok(PowerOracle::new(ideal, k_max)?.member(u))
}

/// Iterates all exponent vectors `0 <= a <= bounds` componentwise, in
/// lexicographic order.
fn box_points(bounds: &[u16]) -> impl Iterator<Item = Vec<u16>> + '_ {
    let n = bounds.len();
    let mut cur: Option<Vec<u16>> = Some(vec![0; n]);
    std::iter::from_fn(move || {
        let out = cur.clone()?;
        // odometer increment from the last coordinate
        let next = cur.as_mut().unwrap();
        let mut j = n;
        loop {
            if j == 0 {
                cur = None;
                break;
            }
            j -= 1;
            if next[j] < bounds[j] {
                next[j] += 1;
                break;
            }
            next[j] = 0;
        }
        Some(out)
    })
}

/// Integral closure of a nonzero monomial ideal.
///
/// Completeness of the search box: let `M_j = max_i deg_{x_j}(g_i)`. If an
/// integer point `a` lies in `C(I)`, pick `λ` with `Σλ_i·g_i <= a`; in any
/// coordinate with `a_j > M_j` the left side is at most `M_j`, so clamping
/// `a_j` down to `M_j` preserves the certificate. Hence every monomial of the
/// closure is divisible by a closure monomial inside `[0, M]`, and all minimal
/// generators lie in the box.
pub fn integral_closure(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    require_nonzero(ideal, "integral_closure")?;
    let bounds = ideal.max_exponents().unwrap();
    let mut members = Vec::new();
    for exps in box_points(&bounds) {
        let u = Monomial::new(exps);
        if hull_membership_unchecked(&u, ideal) {
            members.push(u);
        }
    }
    MonomialIdeal::minimalize(ideal.ambient(), members)
}

/// Power membership decided from generator sums: `u^k ∈ I^k` exactly when
/// some sum of `k` generator exponent vectors (with repetition) is
/// componentwise at most `k·u`. Layers of distinct `t`-fold sums are built
/// lazily and shared across all queries against the same ideal, which keeps
/// whole-box audits cheap compared to constructing `I^k` explicitly.
struct SumsetOracle {
    n: usize,
    gens: Vec<u32>,
    maxg: Vec<u32>,
    min_degree: u32,
    /// `layers[t-1]`: flattened distinct sums of `t` generators.
    layers: Vec<Vec<u32>>,
}

impl SumsetOracle {
    fn new(ideal: &MonomialIdeal) -> Self {
        let n = ideal.ambient();
        let mut gens = Vec::with_capacity(n * ideal.num_gens());
        let mut maxg = vec![0u32; n];
        for g in ideal.gens() {
            for (j, &e) in g.exps().iter().enumerate() {
                gens.push(e as u32);
                maxg[j] = maxg[j].max(e as u32);
            }
        }
        let min_degree = ideal.min_gen_degree().expect("nonzero ideal");
        let layers = vec![gens.clone()];
        SumsetOracle { n, gens, maxg, min_degree, layers }
    }

    fn extend_to(&mut self, k: u32) {
        while (self.layers.len() as u32) < k {
            let t = self.layers.len() as u32 + 1;
            let next = {
                let prev = self.layers.last().unwrap();
                // dedup through a dense bitset over the sum box when it is
                // small, otherwise through a hash set
                let bounds: Vec<u64> = self.maxg.iter().map(|&m| u64::from(m) * u64::from(t)).collect();
                let size = bounds
                    .iter()
                    .try_fold(1u64, |acc, &b| acc.checked_mul(b + 1))
                    .filter(|&s| s <= 1 << 24);
                let mut next = Vec::new();
                match size {
                    Some(size) => {
                        let mut seen = vec![0u64; (size as usize + 63) / 64];
                        for s in prev.chunks_exact(self.n.max(1)) {
                            for g in self.gens.chunks_exact(self.n.max(1)) {
                                let mut idx = 0u64;
                                for j in 0..self.n {
                                    idx = idx * (bounds[j] + 1) + u64::from(s[j] + g[j]);
                                }
                                let (word, bit) = ((idx / 64) as usize, idx % 64);
                                if seen[word] >> bit & 1 == 0 {
                                    seen[word] |= 1 << bit;
                                    next.extend((0..self.n).map(|j| s[j] + g[j]));
                                }
                            }
                        }
                    }
                    None => {
                        let mut seen = std::collections::HashSet::new();
                        for s in prev.chunks_exact(self.n.max(1)) {
                            for g in self.gens.chunks_exact(self.n.max(1)) {
                                let sum: Vec<u32> = (0..self.n).map(|j| s[j] + g[j]).collect();
                                if seen.insert(sum.clone()) {
                                    next.extend(sum);
                                }
                            }
                        }
                    }
                }
                next
            };
            self.layers.push(next);
        }
    }

    /// Smallest `k <= k_max` with `u^k ∈ I^k`, if any.
    fn min_witness(&mut self, u: &[u16], k_max: u32) -> Option<u32> {
        let degree: u32 = u.iter().map(|&e| u32::from(e)).sum();
        if degree < self.min_degree {
            return None;
        }
        self.extend_to(k_max);
        let mut target = vec![0u64; self.n];
        for t in 1..=k_max {
            for (tj, &uj) in target.iter_mut().zip(u) {
                *tj += u64::from(uj);
            }
            let hit = self.layers[t as usize - 1]
                .chunks_exact(self.n.max(1))
                .any(|s| s.iter().zip(&target).all(|(&sj, &tj)| u64::from(sj) <= tj));
            if hit || self.n == 0 {
                return Some(t);
            }
        }
        None
    }
}

/// A closure-box point where the hull decision and the bounded power oracle
/// disagree, together with the smallest witness power found by a deeper
/// diagnostic search (`None` if none exists up to the diagnostic bound).
#[derive(Debug, Clone)]
pub struct OracleDisagreement {
    pub point: Monomial,
    pub hull: bool,
    pub power: bool,
    pub min_witness: Option<u32>,
}

/// Integral closure together with a full per-point cross-check of the hull
/// decision against the power oracle at `k_max`.
///
/// Returns the closure, every disagreement found in the box, and the number of
/// box points examined. `diag_k_max` bounds the diagnostic witness search for
/// disagreeing points.
pub fn closure_with_audit(
    ideal: &MonomialIdeal,
    k_max: u32,
    diag_k_max: u32,
) -> Result<(MonomialIdeal, Vec<OracleDisagreement>, u64)> {
    require_nonzero(ideal, "integral_closure")?;
    let bounds = ideal.max_exponents().unwrap();
    let mut oracle = SumsetOracle::new(ideal);
    let mut members = Vec::new();
    let mut disagreements = Vec::new();
    let mut examined = 0u64;
    for exps in box_points(&bounds) {
        examined += 1;
        let u = Monomial::new(exps);
        let hull = hull_membership_unchecked(&u, ideal);
        if hull {
            members.push(u.clone());
        }
        let power = oracle.min_witness(u.exps(), k_max).is_some();
        if hull != power {
            let min_witness = oracle.min_witness(u.exps(), diag_k_max.max(k_max));
            disagreements.push(OracleDisagreement { point: u, hull, power, min_witness });
        }
    }
    let closure = MonomialIdeal::minimalize(ideal.ambient(), members)?;
    Ok((closure, disagreements, examined))
}

/// Vertex structure of the Newton polyhedron.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonHull {
    /// Indices into the canonical generator list of the source ideal.
    pub vertex_indices: Vec<usize>,
}

/// Vertices of `C(I)`, as indices into the canonical generators.
///
/// A generator is a vertex exactly when it lies outside the hull region of the
/// remaining generators; with a single generator the polyhedron is a shifted
/// orthant whose unique vertex is that generator.
pub fn vertices(ideal: &MonomialIdeal) -> Result<NewtonHull> {
    require_nonzero(ideal, "vertices")?;
    let gens = ideal.gens();
    if gens.len() == 1 {
        return Ok(NewtonHull { vertex_indices: vec![0] });
    }
    let mut vertex_indices = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        let others: Vec<&[u16]> = gens
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, h)| h.exps())
            .collect();
        if !conv_orthant_contains(&others, g.exps()) {
            vertex_indices.push(i);
        }
    }
    Ok(NewtonHull { vertex_indices })
}

/// Largest total degree of a vertex of the Newton polyhedron.
pub fn delta(ideal: &MonomialIdeal) -> Result<u32> {
    let hull = vertices(ideal)?;
    Ok(hull
        .vertex_indices
        .iter()
        .map(|&i| ideal.gens()[i].degree())
        .max()
        .expect("a nonzero ideal has at least one vertex"))
}

/// Largest total degree among the minimal generators.
pub fn max_gen_degree(ideal: &MonomialIdeal) -> Result<u32> {
    require_nonzero(ideal, "max_gen_degree")?;
    Ok(ideal.gens().iter().map(Monomial::degree).max().unwrap())
}

/// Krull dimension of `S/I` for a nonzero proper monomial ideal: `n` minus the
/// smallest number of variables meeting the support of every generator.
pub fn dim_quotient(ideal: &MonomialIdeal) -> Result<usize> {
    require_nonzero(ideal, "dim_quotient")?;
    if ideal.is_unit() {
        return Err(Error::UnitIdeal { op: "dim_quotient" });
    }
    let n = ideal.ambient();
    assert!(n <= 24, "dim_quotient enumerates 2^n variable subsets");
    let supports: Vec<u32> = ideal
        .gens()
        .iter()
        .map(|g| g.support().iter().fold(0u32, |acc, &j| acc | (1 << j)))
        .collect();
    let mut best = n;
    for mask in 0u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size >= best {
            continue;
        }
        if supports.iter().all(|&s| s & mask != 0) {
            best = size;
        }
    }
    Ok(n - best)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[u16]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    fn ideal(n: usize, gens: &[&[u16]]) -> MonomialIdeal {
        MonomialIdeal::minimalize(n, gens.iter().map(|g| m(g))).unwrap()
    }

    #[test]
    fn hull_membership_examples() {
        let i = ideal(2, &[&[2, 0], &[0, 2]]);
        assert!(hull_membership(&m(&[1, 1]), &i).unwrap());
        assert!(!hull_membership(&m(&[1, 0]), &i).unwrap());
        let cubes = ideal(3, &[&[3, 0, 0], &[0, 3, 0], &[0, 0, 3]]);
        assert!(hull_membership(&m(&[1, 1, 1]), &cubes).unwrap());
        assert!(hull_membership(&m(&[5, 0, 0]), &cubes).unwrap());
    }

    #[test]
    fn hull_rejects_zero_ideal() {
        let z = MonomialIdeal::zero(2);
        assert!(hull_membership(&m(&[1, 1]), &z).is_err());
    }

    #[test]
    fn power_oracle_agrees_on_small_cases() {
        let i = ideal(2, &[&[2, 0], &[0, 2]]);
        assert!(power_membership(&m(&[1, 1]), &i, 2).unwrap());
        assert!(power_membership(&m(&[2, 0]), &i, 1).unwrap());
        assert!(!power_membership(&m(&[1, 0]), &i, 6).unwrap());
    }

    #[test]
    fn power_witness_can_exceed_six() {
        // Hull certificate λ = (1/4, 1/3, 5/12) forces the witness power 12.
        let i = ideal(3, &[&[4, 0, 0], &[0, 3, 1], &[0, 0, 4]]);
        let p = m(&[1, 1, 2]);
        assert!(hull_membership(&p, &i).unwrap());
        let oracle = PowerOracle::new(&i, 16).unwrap();
        assert_eq!(oracle.min_witness(&p), Some(12));
    }

    #[test]
    fn closure_examples() {
        let i = ideal(2, &[&[2, 0], &[0, 2]]);
        assert_eq!(
            integral_closure(&i).unwrap(),
            ideal(2, &[&[2, 0], &[1, 1], &[0, 2]])
        );
        let p = ideal(2, &[&[3, 0]]);
        assert_eq!(integral_closure(&p).unwrap(), p);
        let cubes = ideal(3, &[&[3, 0, 0], &[0, 3, 0], &[0, 0, 3]]);
        let closure = integral_closure(&cubes).unwrap();
        assert!(closure.contains(&m(&[1, 1, 1])));
        assert_eq!(closure.is_equigenerated().unwrap(), Some(3));
        assert_eq!(closure.num_gens(), 10);
    }

    #[test]
    fn closure_is_idempotent_and_contains_source() {
        let i = ideal(3, &[&[4, 0, 0], &[0, 3, 1], &[0, 0, 4]]);
        let c = integral_closure(&i).unwrap();
        assert!(c.contains_ideal(&i));
        assert_eq!(integral_closure(&c).unwrap(), c);
    }

    #[test]
    fn audit_flags_the_deep_witness_point() {
        let i = ideal(3, &[&[4, 0, 0], &[0, 3, 1], &[0, 0, 4]]);
        let (_, disagreements, examined) = closure_with_audit(&i, 6, 64).unwrap();
        assert_eq!(examined, 5 * 4 * 5);
        assert!(disagreements
            .iter()
            .any(|d| d.point == m(&[1, 1, 2]) && d.hull && !d.power && d.min_witness == Some(12)));
    }

    #[test]
    fn sumset_and_explicit_power_oracles_agree() {
        let cases = [
            ideal(2, &[&[2, 0], &[0, 2]]),
            ideal(2, &[&[3, 1], &[1, 2]]),
            ideal(3, &[&[2, 0, 0], &[0, 2, 1], &[1, 0, 2]]),
            ideal(3, &[&[4, 0, 0], &[0, 3, 1], &[0, 0, 4]]),
        ];
        for i in cases {
            let explicit = PowerOracle::new(&i, 4).unwrap();
            let mut sums = SumsetOracle::new(&i);
            let bounds = i.max_exponents().unwrap();
            for exps in box_points(&bounds) {
                let u = Monomial::new(exps);
                let expected = explicit.min_witness(&u).filter(|&k| k <= 4);
                assert_eq!(sums.min_witness(u.exps(), 4), expected, "point {u} of {i}");
            }
        }
        let deep = ideal(3, &[&[4, 0, 0], &[0, 3, 1], &[0, 0, 4]]);
        let mut sums = SumsetOracle::new(&deep);
        assert_eq!(sums.min_witness(&[1, 1, 2], 6), None);
        assert_eq!(sums.min_witness(&[1, 1, 2], 16), Some(12));
    }

    #[test]
    fn vertex_structure() {
        let i = ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]);
        assert_eq!(vertices(&i).unwrap().vertex_indices, vec![0, 2]);
        assert_eq!(delta(&i).unwrap(), 2);
        let j = ideal(2, &[&[3, 0], &[0, 1]]);
        assert_eq!(vertices(&j).unwrap().vertex_indices, vec![0, 1]);
        assert_eq!(delta(&j).unwrap(), 3);
        let p = ideal(2, &[&[2, 1]]);
        assert_eq!(vertices(&p).unwrap().vertex_indices, vec![0]);
        assert_eq!(delta(&p).unwrap(), 3);
    }

    #[test]
    fn quotient_dimension() {
        assert_eq!(dim_quotient(&ideal(2, &[&[1, 0], &[0, 1]])).unwrap(), 0);
        assert_eq!(dim_quotient(&ideal(2, &[&[1, 0]])).unwrap(), 1);
        assert_eq!(dim_quotient(&ideal(3, &[&[1, 1, 0]])).unwrap(), 2);
        assert_eq!(
            dim_quotient(&ideal(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]])).unwrap(),
            1
        );
        assert!(dim_quotient(&MonomialIdeal::unit(2)).is_err());
    }

    #[test]
    fn degree_helpers() {
        let i = ideal(2, &[&[1, 0], &[0, 2]]);
        assert_eq!(max_gen_degree(&i).unwrap(), 2);
        assert!(max_gen_degree(&MonomialIdeal::zero(2)).is_err());
    }
}
