//! Polarization into squarefree ideals and restriction of squarefree ideals
//! to a subset of the variables.

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// Records where each polarized variable came from: `targets[v]` is the
/// original variable together with the slot (one slot per unit of exponent).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolarizationMap {
    pub targets: Vec<(usize, u16)>,
}

impl PolarizationMap {
    pub fn ambient(&self) -> usize {
        self.targets.len()
    }
}

/// Replaces every power `x_j^k` by a product of `k` distinct fresh variables,
/// one per exponent slot, producing a squarefree ideal. Slot counts come from
/// the componentwise maximum over the generators, so the map is as small as
/// possible. Graded Betti numbers are preserved by this substitution.
pub fn polarize(ideal: &MonomialIdeal) -> Result<(MonomialIdeal, PolarizationMap)> {
    let maxes = ideal
        .max_exponents()
        .ok_or(Error::ZeroIdeal { op: "polarize" })?;
    let mut targets = Vec::new();
    let mut offsets = Vec::with_capacity(maxes.len());
    for (j, &cap) in maxes.iter().enumerate() {
        offsets.push(targets.len());
        for k in 0..cap {
            targets.push((j, k));
        }
    }
    let ambient = targets.len();
    let polarized = ideal.gens().iter().map(|g| {
        let mut exps = vec![0u16; ambient];
        for (j, &e) in g.exps().iter().enumerate() {
            for k in 0..e as usize {
                exps[offsets[j] + k] = 1;
            }
        }
        Monomial::new(exps)
    });
    let image = MonomialIdeal::minimalize(ambient, polarized)?;
    Ok((image, PolarizationMap { targets }))
}

/// Keeps the generators supported inside `vars` and renumbers them over the
/// chosen variables (sorted, duplicates ignored). The input must be
/// squarefree; an empty selection gives the zero ideal in zero variables.
pub fn induced_subideal(ideal: &MonomialIdeal, vars: &[usize]) -> Result<MonomialIdeal> {
    if ideal.gens().iter().any(|g| !g.is_squarefree()) {
        return Err(Error::NotSquarefree { op: "induced_subideal" });
    }
    let mut chosen: Vec<usize> = vars.to_vec();
    chosen.sort_unstable();
    chosen.dedup();
    if let Some(&out) = chosen.iter().find(|&&v| v >= ideal.ambient()) {
        return Err(Error::VariableOutOfRange { index: out, ambient: ideal.ambient() });
    }
    let kept = ideal.gens().iter().filter_map(|g| {
        let exps: Vec<u16> = chosen.iter().map(|&v| g.deg(v)).collect();
        let total: u32 = exps.iter().map(|&e| e as u32).sum();
        (total == g.degree()).then(|| Monomial::new(exps))
    });
    MonomialIdeal::minimalize(chosen.len(), kept)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::betti::{multigraded_betti, BettiOptions};

    fn m(exps: &[u16]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    fn ideal(n: usize, gens: &[&[u16]]) -> MonomialIdeal {
        MonomialIdeal::minimalize(n, gens.iter().map(|g| m(g))).unwrap()
    }

    #[test]
    fn polarizes_a_mixed_power() {
        let (image, map) = polarize(&ideal(2, &[&[2, 1]])).unwrap();
        assert_eq!(map.targets, vec![(0, 0), (0, 1), (1, 0)]);
        assert_eq!(image.gens(), &[m(&[1, 1, 1])]);
    }

    #[test]
    fn polarizes_the_squared_maximal_ideal() {
        let (image, map) = polarize(&ideal(2, &[&[2, 0], &[1, 1], &[0, 2]])).unwrap();
        assert_eq!(map.ambient(), 4);
        assert_eq!(
            image.gens(),
            &[m(&[1, 1, 0, 0]), m(&[1, 0, 1, 0]), m(&[0, 0, 1, 1])]
        );
    }

    #[test]
    fn polarization_preserves_graded_betti_numbers() {
        let opts = BettiOptions::default();
        for gens in [
            vec![vec![2u16, 0], vec![1, 1], vec![0, 2]],
            vec![vec![3, 0], vec![1, 2]],
            vec![vec![2, 2], vec![4, 0]],
        ] {
            let i = MonomialIdeal::minimalize(2, gens.iter().map(|g| Monomial::new(g.clone())))
                .unwrap();
            let (p, _) = polarize(&i).unwrap();
            let a = multigraded_betti(&i, &opts).unwrap();
            let b = multigraded_betti(&p, &opts).unwrap();
            assert_eq!(a.graded, b.graded);
        }
    }

    #[test]
    fn polarize_rejects_the_zero_ideal() {
        assert!(polarize(&MonomialIdeal::zero(2)).is_err());
    }

    #[test]
    fn restricts_the_triangle() {
        let tri = ideal(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]);
        let edge = induced_subideal(&tri, &[0, 1]).unwrap();
        assert_eq!(edge.gens(), &[m(&[1, 1])]);
        let vertex = induced_subideal(&tri, &[0]).unwrap();
        assert!(vertex.is_zero());
        let empty = induced_subideal(&tri, &[]).unwrap();
        assert!(empty.is_zero());
        assert_eq!(empty.ambient(), 0);
    }

    #[test]
    fn restriction_rejects_powers_and_bad_variables() {
        let sq = ideal(2, &[&[2, 0]]);
        assert!(matches!(
            induced_subideal(&sq, &[0]),
            Err(Error::NotSquarefree { .. })
        ));
        let tri = ideal(3, &[&[1, 1, 0]]);
        assert!(matches!(
            induced_subideal(&tri, &[0, 3]),
            Err(Error::VariableOutOfRange { .. })
        ));
    }
}
