//! Linear quotients: existence search and certificates.
//!
//! An ordering `u_1, ..., u_m` of the minimal generators has linear quotients
//! when every colon ideal `(u_1, ..., u_i) : u_{i+1}` is generated by
//! variables. Whether such an ordering exists is decided by a dynamic program
//! over generator subsets — valid because the colon depends only on the set
//! of earlier generators, never on their order.

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// Default bound on the generator count for the subset search.
pub const DEFAULT_LQ_CAP: usize = 24;

/// A verified linear-quotients ordering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LqCertificate {
    /// Positions into the canonical generator list, in quotient order.
    pub order: Vec<usize>,
    /// For each step after the first, the variables generating the colon.
    pub witnesses: Vec<Vec<usize>>,
}

impl LqCertificate {
    /// Re-derives every colon ideal through the public operations and checks
    /// it equals the recorded variable set.
    pub fn validate(&self, ideal: &MonomialIdeal) -> bool {
        let gens = ideal.gens();
        let m = gens.len();
        if self.order.len() != m {
            return false;
        }
        let mut seen = vec![false; m];
        for &k in &self.order {
            if k >= m || seen[k] {
                return false;
            }
            seen[k] = true;
        }
        if self.witnesses.len() != m.saturating_sub(1) {
            return false;
        }
        for i in 1..m {
            let prefix = MonomialIdeal::minimalize(
                ideal.ambient(),
                self.order[..i].iter().map(|&k| gens[k].clone()),
            )
            .expect("prefix generators share the ambient");
            let colon = match prefix.colon(&gens[self.order[i]]) {
                Ok(c) => c,
                Err(_) => return false,
            };
            let vars = self.witnesses[i - 1]
                .iter()
                .map(|&j| Monomial::variable(ideal.ambient(), j));
            let expected = match MonomialIdeal::minimalize(ideal.ambient(), vars) {
                Ok(e) => e,
                Err(_) => return false,
            };
            if colon != expected {
                return false;
            }
        }
        true
    }
}

/// Precomputed divisibility masks answering "is the colon of a generator
/// subset with one more generator variable-generated" in a few word
/// operations. Usable for up to 32 generators.
pub(crate) struct ColonOracle {
    ambient: usize,
    /// `unit[a][j]`: generators `h` with `h : u_a = x_j`.
    unit: Vec<Vec<u32>>,
    /// `pos[a][j]`: generators `h` whose exponent of `x_j` exceeds `u_a`'s.
    pos: Vec<Vec<u32>>,
}

impl ColonOracle {
    pub(crate) fn new(ideal: &MonomialIdeal) -> Self {
        let gens = ideal.gens();
        let n = ideal.ambient();
        let m = gens.len();
        assert!(m <= 32, "colon oracle is limited to 32 generators");
        let mut unit = vec![vec![0u32; n]; m];
        let mut pos = vec![vec![0u32; n]; m];
        for a in 0..m {
            for b in 0..m {
                if a == b {
                    continue;
                }
                let quot = gens[b].checked_div(&gens[b].gcd(&gens[a])).unwrap();
                if quot.degree() == 1 {
                    let j = quot.support()[0];
                    unit[a][j] |= 1 << b;
                }
                for j in 0..n {
                    if gens[b].deg(j) > gens[a].deg(j) {
                        pos[a][j] |= 1 << b;
                    }
                }
            }
        }
        ColonOracle { ambient: n, unit, pos }
    }

    /// If the colon of the subset `prefix` with generator `a` is generated by
    /// variables, returns those variable indices.
    ///
    /// The colon contains `x_j` exactly when some prefix member maps to `x_j`
    /// under division; it is variable-generated exactly when every prefix
    /// member's quotient is divisible by one of those variables.
    pub(crate) fn variable_colon(&self, prefix: u32, a: usize) -> Option<Vec<usize>> {
        let mut vars = Vec::new();
        let mut covered = 0u32;
        for j in 0..self.ambient {
            if prefix & self.unit[a][j] != 0 {
                vars.push(j);
                covered |= self.pos[a][j];
            }
        }
        if prefix & !covered == 0 {
            Some(vars)
        } else {
            None
        }
    }
}

/// Searches for a linear-quotients ordering, up to the default generator cap.
pub fn linear_quotients_order(ideal: &MonomialIdeal) -> Result<Option<LqCertificate>> {
    linear_quotients_order_with_cap(ideal, DEFAULT_LQ_CAP)
}

/// Searches for a linear-quotients ordering with an explicit generator cap.
///
/// The returned ordering is deterministic: among all valid orderings it
/// prefers ones placing canonically early generators first.
pub fn linear_quotients_order_with_cap(
    ideal: &MonomialIdeal,
    cap: usize,
) -> Result<Option<LqCertificate>> {
    let m = ideal.num_gens();
    if m > cap {
        return Err(Error::GeneratorCap { count: m, cap });
    }
    assert!(cap <= 32, "subset search uses 32-bit generator masks");
    if m <= 1 {
        return Ok(Some(LqCertificate { order: (0..m).collect(), witnesses: Vec::new() }));
    }
    let oracle = ColonOracle::new(ideal);
    let full: u32 = if m == 32 { u32::MAX } else { (1 << m) - 1 };
    let mut reachable = vec![false; 1 << m];
    reachable[0] = true;
    // ascending masks only ever extend to strictly larger ones
    for set in 0..=full {
        if !reachable[set as usize] {
            continue;
        }
        for a in 0..m {
            if set >> a & 1 == 1 {
                continue;
            }
            let next = set | 1 << a;
            if !reachable[next as usize] && oracle.variable_colon(set, a).is_some() {
                reachable[next as usize] = true;
            }
        }
    }
    if !reachable[full as usize] {
        return Ok(None);
    }
    // peel the full set back to front, taking the largest removable
    // generator each time; this front-loads canonically small generators
    let mut order_rev = Vec::with_capacity(m);
    let mut witnesses_rev = Vec::with_capacity(m - 1);
    let mut set = full;
    while set != 0 {
        let mut found = false;
        for a in (0..m).rev() {
            if set >> a & 1 == 0 {
                continue;
            }
            let rest = set & !(1 << a);
            if !reachable[rest as usize] {
                continue;
            }
            if let Some(vars) = oracle.variable_colon(rest, a) {
                order_rev.push(a);
                if rest != 0 {
                    witnesses_rev.push(vars);
                }
                set = rest;
                found = true;
                break;
            }
        }
        assert!(found, "a reachable set always has a removable generator");
    }
    order_rev.reverse();
    witnesses_rev.reverse();
    let cert = LqCertificate { order: order_rev, witnesses: witnesses_rev };
    debug_assert!(cert.validate(ideal));
    Ok(Some(cert))
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;

    fn m(exps: &[u16]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    fn ideal(n: usize, gens: &[&[u16]]) -> MonomialIdeal {
        MonomialIdeal::minimalize(n, gens.iter().map(|g| m(g))).unwrap()
    }

    /// Order-by-order reference search using only public colon operations.
    fn brute_force_has_lq(ideal: &MonomialIdeal) -> bool {
        let gens = ideal.gens();
        let n = ideal.ambient();
        if gens.len() <= 1 {
            return true;
        }
        (0..gens.len()).permutations(gens.len()).any(|perm| {
            (1..perm.len()).all(|i| {
                let prefix = MonomialIdeal::minimalize(
                    n,
                    perm[..i].iter().map(|&k| gens[k].clone()),
                )
                .unwrap();
                let colon = prefix.colon(&gens[perm[i]]).unwrap();
                colon.gens().iter().all(|g| g.degree() == 1)
            })
        })
    }

    #[test]
    fn square_of_maximal_ideal_matches_expected_order() {
        let i = ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]);
        let cert = linear_quotients_order(&i).unwrap().unwrap();
        assert_eq!(cert.order, vec![0, 1, 2]);
        assert_eq!(cert.witnesses, vec![vec![0], vec![0]]);
        assert!(cert.validate(&i));
    }

    #[test]
    fn gap_two_has_no_linear_quotients() {
        let i = ideal(2, &[&[2, 0], &[0, 2]]);
        assert!(linear_quotients_order(&i).unwrap().is_none());
    }

    #[test]
    fn trivial_cases() {
        let p = ideal(2, &[&[3, 2]]);
        let cert = linear_quotients_order(&p).unwrap().unwrap();
        assert_eq!(cert.order, vec![0]);
        assert!(cert.witnesses.is_empty());
        assert!(cert.validate(&p));
        let z = MonomialIdeal::zero(2);
        assert!(linear_quotients_order(&z).unwrap().is_some());
    }

    #[test]
    fn cap_is_enforced() {
        let i = ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]);
        assert!(matches!(
            linear_quotients_order_with_cap(&i, 2),
            Err(Error::GeneratorCap { count: 3, cap: 2 })
        ));
    }

    #[test]
    fn agrees_with_permutation_search() {
        let cases: Vec<MonomialIdeal> = vec![
            ideal(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]),
            ideal(3, &[&[2, 0, 0], &[1, 1, 0], &[0, 2, 0], &[1, 0, 1]]),
            ideal(3, &[&[3, 0, 0], &[0, 2, 1]]),
            ideal(2, &[&[3, 0], &[2, 1], &[0, 3]]),
            ideal(2, &[&[4, 0], &[3, 1], &[2, 2], &[1, 3], &[0, 4]]),
        ];
        for i in cases {
            let dp = linear_quotients_order(&i).unwrap();
            assert_eq!(dp.is_some(), brute_force_has_lq(&i), "ideal {i}");
            if let Some(cert) = dp {
                assert!(cert.validate(&i), "certificate for {i}");
            }
        }
    }

    #[test]
    fn invalid_certificates_rejected() {
        let i = ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]);
        let bad_perm = LqCertificate { order: vec![0, 0, 2], witnesses: vec![vec![0], vec![0]] };
        assert!(!bad_perm.validate(&i));
        let bad_witness = LqCertificate { order: vec![0, 1, 2], witnesses: vec![vec![1], vec![0]] };
        assert!(!bad_witness.validate(&i));
        let wrong_len = LqCertificate { order: vec![0, 1], witnesses: vec![vec![0]] };
        assert!(!wrong_len.validate(&i));
    }
}
