//! Dense matrices over a prime field: rank, null space, random kernel
//! elements, and random frameworks.
//!
//! Rank over a finite specialization can only underestimate the generic
//! rank, never exceed it, so callers take the maximum over independently
//! seeded trials.

use thiserror::Error;

use crate::field::{PrimeField, SplitMix64};
use crate::graph::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LinalgError {
    #[error("kernel is trivial: no nonzero vector exists")]
    TrivialKernel,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
}

/// Dense row-major matrix over a prime field.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FieldMatrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl FieldMatrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        FieldMatrix { field, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn from_rows(field: PrimeField, rows: Vec<Vec<u64>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row.into_iter().map(|x| field.reduce(x)));
        }
        FieldMatrix { field, rows: r, cols: c, data }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: u64) {
        self.data[r * self.cols + c] = self.field.reduce(value);
    }

    pub fn transpose(&self) -> FieldMatrix {
        let mut out = FieldMatrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.data[c * self.rows + r] = self.get(r, c);
            }
        }
        out
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[u64]) -> Result<Vec<u64>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::DimensionMismatch { expected: self.cols, got: v.len() });
        }
        let f = self.field;
        Ok((0..self.rows)
            .map(|r| {
                v.iter()
                    .enumerate()
                    .fold(0u64, |acc, (c, &x)| f.add(acc, f.mul(self.get(r, c), x)))
            })
            .collect())
    }

    /// Rank by Gaussian elimination, pivoting on the first nonzero entry in
    /// each column. Exact over the field.
    pub fn rank(&self) -> usize {
        let f = self.field;
        let mut m = self.data.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut rank = 0;
        for col in 0..cols {
            if rank == rows {
                break;
            }
            let mut pivot = None;
            for r in rank..rows {
                if m[r * cols + col] != 0 {
                    pivot = Some(r);
                    break;
                }
            }
            let Some(p) = pivot else { continue };
            m.swap_range(p * cols, rank * cols, cols);
            let inv = f.inv(m[rank * cols + col]);
            for r in rank + 1..rows {
                let lead = m[r * cols + col];
                if lead == 0 {
                    continue;
                }
                let factor = f.mul(lead, inv);
                for c in col..cols {
                    let sub = f.mul(factor, m[rank * cols + c]);
                    m[r * cols + c] = f.sub(m[r * cols + c], sub);
                }
            }
            rank += 1;
        }
        rank
    }

    /// Basis of the right null space {v : M v = 0}. The basis has
    /// `cols - rank` vectors, one per free column, each with a unit entry in
    /// its free coordinate.
    pub fn kernel_basis(&self) -> Vec<Vec<u64>> {
        let f = self.field;
        let mut m = self.data.clone();
        let (rows, cols) = (self.rows, self.cols);
        // reduced row echelon form with pivot bookkeeping
        let mut pivot_of_col = vec![usize::MAX; cols];
        let mut r = 0;
        for col in 0..cols {
            if r == rows {
                break;
            }
            let mut pivot = None;
            for i in r..rows {
                if m[i * cols + col] != 0 {
                    pivot = Some(i);
                    break;
                }
            }
            let Some(p) = pivot else { continue };
            m.swap_range(p * cols, r * cols, cols);
            let inv = f.inv(m[r * cols + col]);
            for c in col..cols {
                m[r * cols + c] = f.mul(m[r * cols + c], inv);
            }
            for i in 0..rows {
                if i != r && m[i * cols + col] != 0 {
                    let factor = m[i * cols + col];
                    for c in col..cols {
                        let sub = f.mul(factor, m[r * cols + c]);
                        m[i * cols + c] = f.sub(m[i * cols + c], sub);
                    }
                }
            }
            pivot_of_col[col] = r;
            r += 1;
        }
        let mut basis = Vec::new();
        for free in 0..cols {
            if pivot_of_col[free] != usize::MAX {
                continue;
            }
            let mut v = vec![0u64; cols];
            v[free] = 1;
            for col in 0..cols {
                let pr = pivot_of_col[col];
                if pr != usize::MAX {
                    v[col] = f.neg(m[pr * cols + free]);
                }
            }
            basis.push(v);
        }
        basis
    }
}

trait SwapRange {
    fn swap_range(&mut self, a: usize, b: usize, len: usize);
}

impl SwapRange for Vec<u64> {
    fn swap_range(&mut self, a: usize, b: usize, len: usize) {
        if a == b {
            return;
        }
        for i in 0..len {
            self.swap(a + i, b + i);
        }
    }
}

/// A uniformly random combination of the kernel basis vectors, redrawn in
/// the astronomically unlikely event that every coefficient is zero, so the
/// result is always a nonzero kernel vector. Deterministic in the seed.
/// Errors when the kernel is trivial.
pub fn random_kernel_element(m: &FieldMatrix, seed: u64) -> Result<Vec<u64>, LinalgError> {
    let basis = m.kernel_basis();
    if basis.is_empty() {
        return Err(LinalgError::TrivialKernel);
    }
    let f = m.field();
    let mut rng = SplitMix64::new(seed);
    loop {
        let coeffs: Vec<u64> = basis.iter().map(|_| rng.next_element(f)).collect();
        if coeffs.iter().all(|&c| c == 0) {
            continue;
        }
        let mut v = vec![0u64; m.cols()];
        for (b, &c) in basis.iter().zip(&coeffs) {
            for (slot, &x) in v.iter_mut().zip(b) {
                *slot = f.add(*slot, f.mul(c, x));
            }
        }
        return Ok(v);
    }
}

/// A graph with one field point per vertex: the stand-in for a generic
/// placement. Coordinates are uniform field elements drawn from the seed.
#[derive(Clone, Debug)]
pub struct Framework {
    graph: Graph,
    dim: usize,
    field: PrimeField,
    /// vertex-major coordinates, length n * dim
    points: Vec<u64>,
    seed: u64,
}

impl Framework {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Coordinate k of vertex v.
    pub fn coordinate(&self, v: usize, k: usize) -> u64 {
        self.points[v * self.dim + k]
    }

    pub fn points(&self) -> &[u64] {
        &self.points
    }
}

/// Sample a framework: a deterministic function of (graph, dim, seed).
/// Distinct seeds give independent placements.
pub fn sample_framework(g: &Graph, dim: usize, field: PrimeField, seed: u64) -> Framework {
    assert!(dim >= 1, "dimension must be at least 1");
    let mut rng = SplitMix64::new(seed);
    let points = (0..g.vertex_count() * dim).map(|_| rng.next_element(field)).collect();
    Framework { graph: g.clone(), dim, field, points, seed }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::derive_seed;
    use crate::graph::complete_graph;

    fn f() -> PrimeField {
        PrimeField::mersenne61()
    }

    #[test]
    fn rank_of_constructed_deficient_matrix() {
        // 10 x 8 random matrix with two rows duplicated: rank 8
        let mut rng = SplitMix64::new(3);
        let mut rows: Vec<Vec<u64>> =
            (0..8).map(|_| (0..8).map(|_| rng.next_element(f())).collect()).collect();
        rows.push(rows[0].clone());
        rows.push(rows[1].clone());
        let m = FieldMatrix::from_rows(f(), rows);
        assert_eq!(m.rank(), 8);
        assert_eq!(m.transpose().rank(), 8);
    }

    #[test]
    fn rank_of_identity_and_zero() {
        let mut ident = FieldMatrix::zeros(f(), 4, 4);
        for i in 0..4 {
            ident.set(i, i, 1);
        }
        assert_eq!(ident.rank(), 4);
        assert_eq!(FieldMatrix::zeros(f(), 3, 5).rank(), 0);
        assert_eq!(FieldMatrix::zeros(f(), 0, 0).rank(), 0);
    }

    #[test]
    fn kernel_size_matches_rank_deficiency() {
        for field in [PrimeField::mersenne61(), PrimeField::alt62()] {
            let mut rng = SplitMix64::new(17);
            // 5 x 9: kernel should have 4 vectors, all annihilated
            let rows: Vec<Vec<u64>> =
                (0..5).map(|_| (0..9).map(|_| rng.next_element(field)).collect()).collect();
            let m = FieldMatrix::from_rows(field, rows);
            assert_eq!(m.rank(), 5);
            let basis = m.kernel_basis();
            assert_eq!(basis.len(), 4);
            for v in &basis {
                assert!(m.mul_vec(v).unwrap().iter().all(|&x| x == 0));
            }
        }
    }

    #[test]
    fn kernel_of_full_column_rank_is_empty() {
        let mut rng = SplitMix64::new(5);
        let rows: Vec<Vec<u64>> =
            (0..6).map(|_| (0..4).map(|_| rng.next_element(f())).collect()).collect();
        let m = FieldMatrix::from_rows(f(), rows);
        assert_eq!(m.kernel_basis().len(), 0);
        assert_eq!(random_kernel_element(&m, 1), Err(LinalgError::TrivialKernel));
    }

    #[test]
    fn random_kernel_element_is_nonzero_and_annihilated() {
        // zero 1 x 2 matrix: whole plane is the kernel
        let m = FieldMatrix::zeros(f(), 1, 2);
        let v = random_kernel_element(&m, 9).unwrap();
        assert!(v.iter().any(|&x| x != 0));
        // determinism in the seed
        assert_eq!(v, random_kernel_element(&m, 9).unwrap());
        assert_ne!(v, random_kernel_element(&m, 10).unwrap());

        let mut rng = SplitMix64::new(23);
        let rows: Vec<Vec<u64>> =
            (0..3).map(|_| (0..7).map(|_| rng.next_element(f())).collect()).collect();
        let m = FieldMatrix::from_rows(f(), rows);
        let v = random_kernel_element(&m, 4).unwrap();
        assert!(v.iter().any(|&x| x != 0));
        assert!(m.mul_vec(&v).unwrap().iter().all(|&x| x == 0));
    }

    #[test]
    fn frameworks_are_deterministic_in_seed() {
        let g = complete_graph(4);
        let a = sample_framework(&g, 3, f(), 7);
        let b = sample_framework(&g, 3, f(), 7);
        assert_eq!(a.points(), b.points());
        let c = sample_framework(&g, 3, f(), 8);
        assert_ne!(a.points(), c.points());
        assert_eq!(a.points().len(), 12);
        // derived seeds do not collide for nearby labels
        let s1 = derive_seed(7, &[g.fingerprint(), 3, 0]);
        let s2 = derive_seed(7, &[g.fingerprint(), 3, 1]);
        assert_ne!(s1, s2);
    }
}
