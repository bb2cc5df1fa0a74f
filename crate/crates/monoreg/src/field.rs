//! Exact coefficient fields and sparse rank computation.
//!
//! Homology dimensions reduce to ranks of boundary matrices; everything here
//! is exact, either modulo a prime chosen at runtime or over the rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// The operations rank computation needs from a coefficient field.
pub trait Field: Clone {
    type Elem: Clone + PartialEq;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }
    /// Embeds a small signed integer (boundary coefficients are ±1).
    fn from_i64(&self, v: i64) -> Self::Elem;
    /// True when the element is ±1, i.e. inversion is exact and cheap.
    fn is_unit_pivot(&self, a: &Self::Elem) -> bool;
}

/// Integers modulo a prime `p < 2^32`, with elements stored reduced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Self {
        assert!(is_prime(p), "modulus must be prime");
        assert!(p < (1 << 32), "modulus must fit in 32 bits");
        PrimeField { p }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }
}

/// Deterministic trial-division primality test, adequate for 32-bit moduli.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 { 0 } else { self.p - a }
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p { s - self.p } else { s }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0, "division by zero");
        // extended Euclid on (a, p); p is prime so the gcd is 1
        let (mut r0, mut r1) = (*a as i128, self.p as i128);
        let (mut s0, mut s1) = (1i128, 0i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        debug_assert_eq!(r0, 1);
        s0.rem_euclid(self.p as i128) as u64
    }
    fn from_i64(&self, v: i64) -> u64 {
        (v as i128).rem_euclid(self.p as i128) as u64
    }
    fn is_unit_pivot(&self, a: &u64) -> bool {
        *a == self.one() || *a == self.neg(&self.one())
    }
}

/// The rational numbers with arbitrary-precision arithmetic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        a.recip()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn is_unit_pivot(&self, a: &BigRational) -> bool {
        a.numer().abs() == a.denom().abs()
    }
}

/// A sparse matrix given as rows of `(column, coefficient)` pairs.
pub type SparseRows<E> = Vec<Vec<(usize, E)>>;

/// Rank by sparse Gaussian elimination.
///
/// Pivot selection prefers rows that still have a ±1 entry (keeping prime
/// field arithmetic division-free in the common all-unit boundary case) and
/// breaks ties by shortest row.
pub fn sparse_rank<F: Field>(field: &F, mut rows: SparseRows<F::Elem>) -> usize {
    for row in &mut rows {
        row.retain(|(_, c)| !field.is_zero(c));
        row.sort_by_key(|&(j, _)| j);
    }
    let mut rank = 0;
    loop {
        // pivot row: prefer rows holding a ±1 entry, then fewer nonzeros
        let pick = rows
            .iter()
            .enumerate()
            .filter(|(_, row)| !row.is_empty())
            .min_by_key(|(_, row)| {
                let unit = row.iter().any(|(_, c)| field.is_unit_pivot(c));
                (!unit, row.len())
            })
            .map(|(i, _)| i);
        let Some(pi) = pick else { break };
        rank += 1;
        let pivot_row = std::mem::take(&mut rows[pi]);
        let &(pcol, ref pcoef) = pivot_row
            .iter()
            .find(|(_, c)| field.is_unit_pivot(c))
            .unwrap_or(&pivot_row[0]);
        let pinv = field.inv(pcoef);
        for row in &mut rows {
            let Some(pos) = row.iter().position(|&(j, _)| j == pcol) else {
                continue;
            };
            let factor = field.mul(&field.neg(&row[pos].1), &pinv);
            // row += factor * pivot_row, merging the sorted supports
            let mut merged = Vec::with_capacity(row.len() + pivot_row.len());
            let (mut a, mut b) = (0, 0);
            while a < row.len() || b < pivot_row.len() {
                let ja = row.get(a).map(|&(j, _)| j);
                let jb = pivot_row.get(b).map(|&(j, _)| j);
                if jb.is_none() || (ja.is_some() && ja.unwrap() < jb.unwrap()) {
                    merged.push(row[a].clone());
                    a += 1;
                } else if ja.is_none() || jb.unwrap() < ja.unwrap() {
                    let c = field.mul(&factor, &pivot_row[b].1);
                    if !field.is_zero(&c) {
                        merged.push((pivot_row[b].0, c));
                    }
                    b += 1;
                } else {
                    let c = field.add(&row[a].1, &field.mul(&factor, &pivot_row[b].1));
                    if !field.is_zero(&c) {
                        merged.push((ja.unwrap(), c));
                    }
                    a += 1;
                    b += 1;
                }
            }
            *row = merged;
        }
    }
    rank
}
