//! Exact rational linear programming, specialized to convex-hull membership.
//!
//! The single entry point decides whether a point lies in
//! `conv(g_1, ..., g_m) + R^n_{>=0}` using a dense simplex over arbitrary-size
//! rational pivots (`Ratio<i128>`; coefficients at desk scale keep every
//! intermediate value far below overflow). No floating point is involved.

use num_rational::Ratio;

type Rat = Ratio<i128>;

/// True when `point` lies in the Minkowski sum of the convex hull of `gens`
/// and the nonnegative orthant.
///
/// Membership holds iff some `λ ≥ 0` with `Σλ_i = 1` satisfies
/// `Σλ_i·gens[i] <= point` componentwise. Equivalently, the maximum of `Σλ_i`
/// over `{λ ≥ 0 : Σλ_i·gens[i] <= point}` is at least 1: any feasible `λ` with
/// `Σλ_i = V >= 1` rescales to `λ/V`, which keeps the constraints because the
/// right-hand sides are nonnegative. That reformulation has a feasible slack
/// basis, so no artificial variables are needed.
pub fn conv_orthant_contains(gens: &[&[u16]], point: &[u16]) -> bool {
    let m = gens.len();
    let n = point.len();
    if m == 0 {
        return false;
    }
    debug_assert!(gens.iter().all(|g| g.len() == n));
    if gens.iter().any(|g| g.iter().all(|&e| e == 0)) {
        // The origin is a generator, so the region is the whole orthant.
        return true;
    }

    let zero = Rat::from_integer(0);
    let one = Rat::from_integer(1);
    let cols = m + n;

    // rows[j]: Σ_i gens[i][j]·λ_i + s_j = point[j], slack s_j basic.
    let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(n);
    for j in 0..n {
        let mut row = vec![zero; cols + 1];
        for (i, g) in gens.iter().enumerate() {
            row[i] = Rat::from_integer(i128::from(g[j]));
        }
        row[m + j] = one;
        row[cols] = Rat::from_integer(i128::from(point[j]));
        rows.push(row);
    }
    let mut basis: Vec<usize> = (m..cols).collect();

    // Maximize Σλ_i: reduced-cost row starts as the objective itself.
    let mut reduced: Vec<Rat> = vec![zero; cols];
    for r in reduced.iter_mut().take(m) {
        *r = one;
    }
    let mut value = zero;

    loop {
        if value >= one {
            return true;
        }
        // Bland's rule: smallest improving column; guarantees termination.
        let Some(enter) = (0..cols).find(|&j| reduced[j] > zero) else {
            return value >= one;
        };
        let mut leave: Option<(usize, Rat)> = None;
        for (r, row) in rows.iter().enumerate() {
            if row[enter] > zero {
                let ratio = row[cols] / row[enter];
                let better = match &leave {
                    None => true,
                    Some((lr, best)) => {
                        ratio < *best || (ratio == *best && basis[r] < basis[*lr])
                    }
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
        }
        let Some((lv, _)) = leave else {
            // Objective unbounded above, so certainly >= 1.
            return true;
        };

        let pivot = rows[lv][enter];
        for x in rows[lv].iter_mut() {
            *x /= pivot;
        }
        let pivot_row = rows[lv].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != lv && row[enter] != zero {
                let f = row[enter];
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x -= f * p;
                }
            }
        }
        let f = reduced[enter];
        for (x, p) in reduced.iter_mut().zip(&pivot_row) {
            *x -= f * p;
        }
        value += f * pivot_row[cols];
        basis[lv] = enter;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn member(gens: &[&[u16]], p: &[u16]) -> bool {
        conv_orthant_contains(gens, p)
    }

    #[test]
    fn two_squares() {
        let gens: &[&[u16]] = &[&[2, 0], &[0, 2]];
        assert!(member(gens, &[1, 1]));
        assert!(member(gens, &[2, 0]));
        assert!(member(gens, &[2, 5]));
        assert!(!member(gens, &[1, 0]));
        assert!(!member(gens, &[0, 0]));
    }

    #[test]
    fn three_cubes_contain_center() {
        let gens: &[&[u16]] = &[&[3, 0, 0], &[0, 3, 0], &[0, 0, 3]];
        assert!(member(gens, &[1, 1, 1]));
        assert!(!member(gens, &[1, 1, 0]));
    }

    #[test]
    fn origin_generator_covers_orthant() {
        let gens: &[&[u16]] = &[&[0, 0]];
        assert!(member(gens, &[0, 0]));
        assert!(member(gens, &[7, 0]));
    }

    #[test]
    fn tight_fractional_point() {
        // Unique certificate λ = (1/4, 1/3, 5/12).
        let gens: &[&[u16]] = &[&[4, 0, 0], &[0, 3, 1], &[0, 0, 4]];
        assert!(member(gens, &[1, 1, 2]));
        assert!(!member(gens, &[1, 1, 1]));
    }

    #[test]
    fn empty_generator_set() {
        assert!(!member(&[], &[0, 0]));
    }
}
