//! Finite simplicial complexes and reduced homology over exact fields.
//!
//! Faces are stored explicitly, including the empty face; the void complex
//! (no faces at all) and the empty complex (only the empty face) are
//! distinguished, since only the latter has nonvanishing reduced homology in
//! degree -1.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::field::{is_prime, sparse_rank, Field, PrimeField, Rationals, SparseRows};

/// An abstract simplicial complex on vertices `0..vertex_count`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertex_count: usize,
    /// Faces as strictly increasing vertex lists; `vec![]` is the empty face.
    faces: BTreeSet<Vec<u16>>,
}

impl SimplicialComplex {
    /// Builds a complex from an explicit face list, validating that every
    /// subset of a face is present (the empty face is added automatically
    /// whenever any face exists).
    pub fn from_faces<I>(vertex_count: usize, faces: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vec<u16>>,
    {
        let mut set = BTreeSet::new();
        for mut face in faces {
            face.sort_unstable();
            face.dedup();
            for &v in &face {
                if v as usize >= vertex_count {
                    return Err(Error::VariableOutOfRange {
                        index: v as usize,
                        ambient: vertex_count,
                    });
                }
            }
            set.insert(face);
        }
        if !set.is_empty() {
            set.insert(Vec::new());
        }
        for face in &set {
            for t in 0..face.len() {
                let mut sub = face.clone();
                sub.remove(t);
                if !set.contains(&sub) {
                    return Err(Error::NotDownwardClosed);
                }
            }
        }
        Ok(SimplicialComplex { vertex_count, faces: set })
    }

    /// Builds the complex generated by the given facets (all subsets taken).
    pub fn from_facets<I>(vertex_count: usize, facets: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vec<u16>>,
    {
        let mut set: BTreeSet<Vec<u16>> = BTreeSet::new();
        for mut facet in facets {
            facet.sort_unstable();
            facet.dedup();
            for &v in &facet {
                if v as usize >= vertex_count {
                    return Err(Error::VariableOutOfRange {
                        index: v as usize,
                        ambient: vertex_count,
                    });
                }
            }
            for mask in 0u32..(1 << facet.len()) {
                let sub: Vec<u16> = facet
                    .iter()
                    .enumerate()
                    .filter(|&(t, _)| mask >> t & 1 == 1)
                    .map(|(_, &v)| v)
                    .collect();
                set.insert(sub);
            }
        }
        Ok(SimplicialComplex { vertex_count, faces: set })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn faces(&self) -> impl Iterator<Item = &Vec<u16>> {
        self.faces.iter()
    }

    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    /// No faces at all, not even the empty one.
    pub fn is_void(&self) -> bool {
        self.faces.is_empty()
    }

    /// Dimension of the largest face; `None` for the void complex, `-1` for
    /// the complex whose only face is empty.
    pub fn dim(&self) -> Option<isize> {
        self.faces.iter().map(|f| f.len() as isize - 1).max()
    }

    /// Reduced homology dimensions over the field of the given characteristic
    /// (0 for the rationals, otherwise a prime).
    ///
    /// Entry `i` of the result is `dim H̃_{i-1}`; the vector covers `i = 0`
    /// through largest-face-size and is empty for the void complex.
    pub fn reduced_homology_dims(&self, characteristic: u64) -> Result<Vec<usize>> {
        match characteristic {
            0 => Ok(self.homology_with(&Rationals)),
            p if is_prime(p) && p < (1 << 32) => Ok(self.homology_with(&PrimeField::new(p))),
            p => Err(Error::BadCharacteristic(p)),
        }
    }

    fn homology_with<F: Field>(&self, field: &F) -> Vec<usize> {
        if self.faces.is_empty() {
            return Vec::new();
        }
        let max_size = self.faces.iter().map(Vec::len).max().unwrap();
        // faces grouped by cardinality, with positions for column indexing
        let mut by_size: Vec<Vec<&Vec<u16>>> = vec![Vec::new(); max_size + 1];
        for face in &self.faces {
            by_size[face.len()].push(face);
        }
        let index_of = |face: &Vec<u16>, size: usize| -> usize {
            by_size[size].binary_search(&face).expect("complex is downward closed")
        };
        // rank of each boundary map C_s -> C_{s-1}; the map out of C_0 is zero
        let mut ranks = vec![0usize; max_size + 2];
        for s in 1..=max_size {
            let mut rows: SparseRows<F::Elem> = Vec::with_capacity(by_size[s].len());
            for face in &by_size[s] {
                let mut row = Vec::with_capacity(s);
                for t in 0..s {
                    let mut sub: Vec<u16> = (*face).clone();
                    sub.remove(t);
                    let sign = if t % 2 == 0 { 1 } else { -1 };
                    row.push((index_of(&sub, s - 1), field.from_i64(sign)));
                }
                rows.push(row);
            }
            ranks[s] = sparse_rank(field, rows);
        }
        (0..=max_size)
            .map(|s| by_size[s].len() - ranks[s] - ranks[s + 1])
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn facets(v: usize, list: &[&[u16]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(v, list.iter().map(|f| f.to_vec())).unwrap()
    }

    #[test]
    fn void_and_empty_complexes() {
        let void = SimplicialComplex::from_faces(3, Vec::<Vec<u16>>::new()).unwrap();
        assert!(void.is_void());
        assert_eq!(void.reduced_homology_dims(0).unwrap(), Vec::<usize>::new());

        let empty = facets(3, &[&[]]);
        assert_eq!(empty.dim(), Some(-1));
        assert_eq!(empty.reduced_homology_dims(0).unwrap(), vec![1]);
    }

    #[test]
    fn closure_validation() {
        let broken = SimplicialComplex::from_faces(3, vec![vec![0, 1]]);
        assert!(matches!(broken, Err(Error::NotDownwardClosed)));
        let ok = SimplicialComplex::from_faces(3, vec![vec![], vec![0], vec![1], vec![0, 1]]);
        assert!(ok.is_ok());
        let out_of_range = SimplicialComplex::from_facets(2, vec![vec![0, 5]]);
        assert!(out_of_range.is_err());
    }

    #[test]
    fn spheres_and_disks() {
        // two points: one reduced 0-cycle
        let s0 = facets(2, &[&[0], &[1]]);
        assert_eq!(s0.reduced_homology_dims(0).unwrap(), vec![0, 1]);
        // hollow triangle: a single 1-cycle
        let s1 = facets(3, &[&[0, 1], &[0, 2], &[1, 2]]);
        assert_eq!(s1.reduced_homology_dims(0).unwrap(), vec![0, 0, 1]);
        assert_eq!(s1.reduced_homology_dims(2).unwrap(), vec![0, 0, 1]);
        // filled triangle: contractible
        let d2 = facets(3, &[&[0, 1, 2]]);
        assert_eq!(d2.reduced_homology_dims(0).unwrap(), vec![0, 0, 0, 0]);
        // hollow tetrahedron: a single 2-cycle
        let s2 = facets(4, &[&[0, 1, 2], &[0, 1, 3], &[0, 2, 3], &[1, 2, 3]]);
        assert_eq!(s2.reduced_homology_dims(0).unwrap(), vec![0, 0, 0, 1]);
    }

    #[test]
    fn projective_plane_depends_on_characteristic() {
        // six-vertex triangulation of the real projective plane
        let rp2 = facets(
            6,
            &[
                &[0, 1, 2],
                &[0, 1, 3],
                &[0, 2, 4],
                &[0, 3, 5],
                &[0, 4, 5],
                &[1, 2, 5],
                &[1, 3, 4],
                &[1, 4, 5],
                &[2, 3, 4],
                &[2, 3, 5],
            ],
        );
        assert_eq!(rp2.num_faces(), 1 + 6 + 15 + 10);
        assert_eq!(rp2.reduced_homology_dims(2).unwrap(), vec![0, 0, 1, 1]);
        assert_eq!(rp2.reduced_homology_dims(3).unwrap(), vec![0, 0, 0, 0]);
        assert_eq!(rp2.reduced_homology_dims(0).unwrap(), vec![0, 0, 0, 0]);
    }

    #[test]
    fn bad_characteristic_rejected() {
        let c = facets(2, &[&[0, 1]]);
        assert!(matches!(c.reduced_homology_dims(6), Err(Error::BadCharacteristic(6))));
        assert!(matches!(c.reduced_homology_dims(1), Err(Error::BadCharacteristic(1))));
    }
}
