//! Betti splittings: checks whether a partition of the generators makes the
//! graded Betti numbers of the ideal decompose as the sum over the two parts
//! plus a shifted contribution from their intersection.

use std::collections::BTreeSet;

use crate::betti::{multigraded_betti, BettiOptions, BettiTable};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;

/// Tests the splitting identity for the partition `gens(whole) = gens(left)
/// ⊔ gens(right)` over the given coefficient characteristic: for all
/// homological degrees `i` and internal degrees `j`,
/// `β_{i,j}(whole) = β_{i,j}(left) + β_{i,j}(right) + β_{i-1,j}(left ∩ right)`.
pub fn betti_splitting_verify(
    whole: &MonomialIdeal,
    left: &MonomialIdeal,
    right: &MonomialIdeal,
    characteristic: u64,
) -> Result<bool> {
    for part in [left, right] {
        if part.ambient() != whole.ambient() {
            return Err(Error::AmbientMismatch {
                expected: whole.ambient(),
                found: part.ambient(),
            });
        }
        if part.is_zero() {
            return Err(Error::InvalidPartition { reason: "a side has no generators" });
        }
    }
    let l: BTreeSet<_> = left.gens().iter().cloned().collect();
    let r: BTreeSet<_> = right.gens().iter().cloned().collect();
    if l.intersection(&r).next().is_some() {
        return Err(Error::InvalidPartition { reason: "the sides share a generator" });
    }
    let w: BTreeSet<_> = whole.gens().iter().cloned().collect();
    if l.union(&r).cloned().collect::<BTreeSet<_>>() != w {
        return Err(Error::InvalidPartition {
            reason: "the sides do not partition the generators",
        });
    }
    let opts = BettiOptions { characteristic, ..BettiOptions::default() };
    let t_whole = multigraded_betti(whole, &opts)?;
    let t_left = multigraded_betti(left, &opts)?;
    let t_right = multigraded_betti(right, &opts)?;
    let t_meet = multigraded_betti(&left.intersect(right)?, &opts)?;
    let mut keys: BTreeSet<(u32, u32)> = BTreeSet::new();
    for table in [&t_whole, &t_left, &t_right] {
        keys.extend(table.graded.keys().copied());
    }
    keys.extend(t_meet.graded.keys().map(|&(i, j)| (i + 1, j)));
    let lookup = |t: &BettiTable, i: u32, j: u32| t.graded.get(&(i, j)).copied().unwrap_or(0);
    Ok(keys.into_iter().all(|(i, j)| {
        let shifted = if i == 0 { 0 } else { lookup(&t_meet, i - 1, j) };
        lookup(&t_whole, i, j) == lookup(&t_left, i, j) + lookup(&t_right, i, j) + shifted
    }))
}
