//! Deterministic enumeration of equigenerated ideals and seeded random
//! sampling of arbitrary monomial ideals.

use std::collections::BTreeSet;
use std::ops::RangeInclusive;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// Number of subsets drawn per degree when a monomial slice is too large to
/// enumerate exhaustively.
pub const DEGREE_SAMPLE: usize = 10_000;

/// Largest monomial-slice size that is enumerated exhaustively; sampled
/// subsets are also capped at this many generators so downstream engines
/// stay within their generator limits.
pub const EXHAUSTIVE_LIMIT: usize = 15;

/// All monomials of total degree `d` in `n` variables, in canonical order.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    fn fill(exps: &mut Vec<u16>, n: usize, left: u16, out: &mut Vec<Monomial>) {
        if exps.len() + 1 == n {
            exps.push(left);
            out.push(Monomial::new(exps.clone()));
            exps.pop();
            return;
        }
        for e in 0..=left {
            exps.push(e);
            fill(exps, n, left - e, out);
            exps.pop();
        }
    }
    assert!(n >= 1, "need at least one variable");
    let d = u16::try_from(d).expect("degree fits in an exponent");
    let mut out = Vec::new();
    fill(&mut Vec::with_capacity(n), n, d, &mut out);
    out.sort();
    out
}

/// Every ideal generated by a subset of the degree-`d` monomials whose size
/// lies in `m_range`, in ascending-bitmask order over the canonical monomial
/// list. Distinct monomials of one degree never divide each other, so each
/// subset is already a minimal generating set.
pub fn enumerate_equigenerated(
    n: usize,
    d: u32,
    m_range: RangeInclusive<usize>,
) -> impl Iterator<Item = MonomialIdeal> {
    let mons = monomials_of_degree(n, d);
    assert!(mons.len() <= 25, "degree slice too large for exhaustive enumeration");
    (1u32..1 << mons.len()).filter_map(move |mask| {
        if !m_range.contains(&(mask.count_ones() as usize)) {
            return None;
        }
        let gens = mons
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, g)| g.clone());
        Some(MonomialIdeal::minimalize(n, gens).expect("generators share the ambient"))
    })
}

/// The per-degree ideal family at verification scale: exhaustive when the
/// slice has at most [`EXHAUSTIVE_LIMIT`] monomials, otherwise
/// [`DEGREE_SAMPLE`] distinct seeded subsets of at most that many generators.
pub fn ideals_for_degree(n: usize, d: u32, seed: u64) -> Vec<MonomialIdeal> {
    let mons = monomials_of_degree(n, d);
    if mons.len() <= EXHAUSTIVE_LIMIT {
        return enumerate_equigenerated(n, d, 1..=mons.len()).collect();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (u64::from(d) << 32) ^ ((n as u64) << 56));
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    while out.len() < DEGREE_SAMPLE {
        let size = rng.random_range(1..=EXHAUSTIVE_LIMIT);
        let mut picks = BTreeSet::new();
        while picks.len() < size {
            picks.insert(rng.random_range(0..mons.len()));
        }
        let key: Vec<usize> = picks.iter().copied().collect();
        if seen.insert(key.clone()) {
            let gens = key.iter().map(|&i| mons[i].clone());
            out.push(MonomialIdeal::minimalize(n, gens).expect("generators share the ambient"));
        }
    }
    out
}

/// A random monomial with exponents in `0..=max_exp`, never the constant 1.
pub fn sample_monomial<R: Rng>(rng: &mut R, n: usize, max_exp: u16) -> Monomial {
    loop {
        let exps: Vec<u16> = (0..n).map(|_| rng.random_range(0..=max_exp)).collect();
        if exps.iter().any(|&e| e > 0) {
            return Monomial::new(exps);
        }
    }
}

/// A random proper nonzero monomial ideal with at most `max_gens` generators
/// before minimalization.
pub fn sample_ideal<R: Rng>(rng: &mut R, n: usize, max_gens: usize, max_exp: u16) -> MonomialIdeal {
    let count = rng.random_range(1..=max_gens);
    let gens: Vec<Monomial> = (0..count).map(|_| sample_monomial(rng, n, max_exp)).collect();
    MonomialIdeal::minimalize(n, gens).expect("generators share the ambient")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_slices_are_canonical() {
        let slice = monomials_of_degree(2, 2);
        let exps: Vec<&[u16]> = slice.iter().map(|m| m.exps()).collect();
        assert_eq!(exps, vec![&[2, 0][..], &[1, 1], &[0, 2]]);
        assert_eq!(monomials_of_degree(3, 4).len(), 15);
    }

    #[test]
    fn enumeration_counts_match_closed_forms() {
        assert_eq!(enumerate_equigenerated(2, 2, 1..=3).count(), 7);
        assert_eq!(enumerate_equigenerated(3, 1, 1..=3).count(), 7);
        assert_eq!(enumerate_equigenerated(3, 2, 1..=6).count(), 63);
        assert_eq!(enumerate_equigenerated(2, 2, 2..=2).count(), 3);
        let total: usize = (1..=4).map(|d| ideals_for_degree(3, d, 7).len()).sum();
        assert_eq!(total, 7 + 63 + 1023 + 32767);
    }

    #[test]
    fn oversize_slices_fall_back_to_seeded_samples() {
        let a = ideals_for_degree(3, 5, 11);
        let b = ideals_for_degree(3, 5, 11);
        assert_eq!(a.len(), DEGREE_SAMPLE);
        assert_eq!(a, b);
        assert!(a.iter().all(|i| i.is_equigenerated().unwrap() == Some(5)));
        assert!(a.iter().all(|i| i.num_gens() <= EXHAUSTIVE_LIMIT));
        let c = ideals_for_degree(3, 5, 12);
        assert_ne!(a, c);
    }

    #[test]
    fn samples_are_proper_nonzero_and_reproducible() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let ideals: Vec<MonomialIdeal> = (0..50).map(|_| sample_ideal(&mut rng, 3, 5, 5)).collect();
        assert!(ideals.iter().all(|i| !i.is_zero() && !i.is_unit()));
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let again: Vec<MonomialIdeal> = (0..50).map(|_| sample_ideal(&mut rng, 3, 5, 5)).collect();
        assert_eq!(ideals, again);
    }
}
