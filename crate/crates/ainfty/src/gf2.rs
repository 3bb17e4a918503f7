//! Dense linear algebra over `F_2`.
//!
//! The diagonal construction and the truncated homology computation both
//! reduce to small dense systems over the two-element field, so a simple
//! bit-packed Gaussian elimination is all that is needed.  Vectors are
//! stored as `u64` limbs; a matrix is a list of column bit-vectors over a
//! common row count.
//!
//! Elimination is deterministic: pivots are chosen in increasing row and
//! column order, and [`solve`] sets all free variables to zero, so results
//! are reproducible across runs and platforms.

/// A bit vector of fixed length over `F_2`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct BitVec {
    len: usize,
    limbs: Vec<u64>,
}

impl BitVec {
    /// The zero vector of the given length.
    pub fn zeros(len: usize) -> Self {
        BitVec {
            len,
            limbs: vec![0; len.div_ceil(64)],
        }
    }

    /// Length in bits.
    pub fn len(&self) -> usize {
        self.len
    }

    /// Is the vector empty (length zero)?
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Reads bit `i`.
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.limbs[i / 64] >> (i % 64) & 1 == 1
    }

    /// Sets bit `i` to `b`.
    pub fn set(&mut self, i: usize, b: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i % 64);
        if b {
            self.limbs[i / 64] |= mask;
        } else {
            self.limbs[i / 64] &= !mask;
        }
    }

    /// Flips bit `i`.
    pub fn flip(&mut self, i: usize) {
        self.limbs[i / 64] ^= 1u64 << (i % 64);
    }

    /// Adds (xors) another vector of the same length in place.
    pub fn xor_assign(&mut self, other: &BitVec) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.limbs.iter_mut().zip(&other.limbs) {
            *a ^= b;
        }
    }

    /// Is this the zero vector?
    pub fn is_zero(&self) -> bool {
        self.limbs.iter().all(|&l| l == 0)
    }

    /// Index of the lowest set bit, if any.
    pub fn first_one(&self) -> Option<usize> {
        for (k, &l) in self.limbs.iter().enumerate() {
            if l != 0 {
                return Some(k * 64 + l.trailing_zeros() as usize);
            }
        }
        None
    }

    /// Indices of all set bits.
    pub fn ones(&self) -> Vec<usize> {
        (0..self.len).filter(|&i| self.get(i)).collect()
    }
}

/// Rank of a matrix given by columns over a common row count.
pub fn rank(columns: &[BitVec]) -> usize {
    let mut basis: Vec<BitVec> = Vec::new();
    for col in columns {
        let mut v = col.clone();
        for b in &basis {
            if let Some(p) = b.first_one() {
                if v.get(p) {
                    v.xor_assign(b);
                }
            }
        }
        if !v.is_zero() {
            basis.push(v);
        }
    }
    basis.len()
}

/// Solves `A x = b` where `A` is given by columns.  Returns the solution
/// with every free variable set to zero, or `None` if the system is
/// inconsistent.
pub fn solve(columns: &[BitVec], rhs: &BitVec) -> Option<Vec<bool>> {
    let rows = rhs.len();
    let cols = columns.len();
    // Augmented row-major elimination.  Each row is (coefficients, rhs bit).
    let mut mat: Vec<(BitVec, bool)> = (0..rows)
        .map(|r| {
            let mut row = BitVec::zeros(cols);
            for (c, col) in columns.iter().enumerate() {
                if col.get(r) {
                    row.set(c, true);
                }
            }
            (row, rhs.get(r))
        })
        .collect();

    let mut pivot_row_of_col: Vec<Option<usize>> = vec![None; cols];
    let mut next_row = 0;
    for c in 0..cols {
        let Some(pr) = (next_row..rows).find(|&r| mat[r].0.get(c)) else {
            continue;
        };
        mat.swap(next_row, pr);
        let (pivot, pivot_rhs) = mat[next_row].clone();
        for (r, row) in mat.iter_mut().enumerate() {
            if r != next_row && row.0.get(c) {
                row.0.xor_assign(&pivot);
                row.1 ^= pivot_rhs;
            }
        }
        pivot_row_of_col[c] = Some(next_row);
        next_row += 1;
        if next_row == rows {
            break;
        }
    }
    // Inconsistency: a zero row with rhs 1.
    for (row, b) in &mat {
        if *b && row.is_zero() {
            return None;
        }
    }
    let mut x = vec![false; cols];
    for c in 0..cols {
        if let Some(r) = pivot_row_of_col[c] {
            x[c] = mat[r].1;
        }
    }
    Some(x)
}

/// A basis of the kernel of the matrix given by columns.
///
/// Each returned vector has length `columns.len()` and selects a set of
/// columns summing to zero.
pub fn kernel(columns: &[BitVec]) -> Vec<BitVec> {
    let cols = columns.len();
    if cols == 0 {
        return Vec::new();
    }
    // Column-reduction with transformation tracking: reduce each column
    // against earlier pivots, recording the combination used.
    let mut pivots: Vec<(usize, BitVec, BitVec)> = Vec::new(); // (pivot row, reduced col, combination)
    let mut out = Vec::new();
    for (c, col) in columns.iter().enumerate() {
        let mut v = col.clone();
        let mut comb = BitVec::zeros(cols);
        comb.set(c, true);
        for (p, red, pc) in &pivots {
            if v.get(*p) {
                v.xor_assign(red);
                comb.xor_assign(pc);
            }
        }
        match v.first_one() {
            Some(p) => pivots.push((p, v, comb)),
            None => out.push(comb),
        }
    }
    out
}

/// Merges two sorted index vectors by symmetric difference (mod-2 sum).
fn xor_merge(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// Sparse deterministic solve of `A x = b` over `F_2`.
///
/// Columns and the right-hand side are sorted lists of row indices.
/// Columns are reduced in order into a column echelon keyed by lowest row
/// (the standard sparse boundary-matrix reduction); the right-hand side is
/// then reduced against the echelon.  Returns the sorted indices of the
/// selected columns, or `None` if the system is inconsistent.  The result
/// depends only on the input order, so it is reproducible.
pub fn solve_sparse(columns: &[Vec<usize>], rhs: &[usize]) -> Option<Vec<usize>> {
    use std::collections::HashMap;
    // low row -> (reduced column, combination of original columns).
    let mut pivots: HashMap<usize, (Vec<usize>, Vec<usize>)> = HashMap::new();
    for (j, col) in columns.iter().enumerate() {
        let mut v = col.clone();
        let mut comb = vec![j];
        while let Some(&low) = v.last() {
            let Some((pv, pc)) = pivots.get(&low) else {
                break;
            };
            v = xor_merge(&v, pv);
            comb = xor_merge(&comb, pc);
        }
        if let Some(&low) = v.last() {
            pivots.insert(low, (v, comb));
        }
    }
    let mut v = rhs.to_vec();
    let mut comb = Vec::new();
    while let Some(&low) = v.last() {
        let (pv, pc) = pivots.get(&low)?;
        v = xor_merge(&v, pv);
        comb = xor_merge(&comb, pc);
    }
    Some(comb)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn col(rows: usize, ones: &[usize]) -> BitVec {
        let mut v = BitVec::zeros(rows);
        for &i in ones {
            v.set(i, true);
        }
        v
    }

    #[test]
    fn rank_of_identity_and_singular() {
        let id = vec![col(3, &[0]), col(3, &[1]), col(3, &[2])];
        assert_eq!(rank(&id), 3);
        let sing = vec![col(3, &[0, 1]), col(3, &[1, 2]), col(3, &[0, 2])];
        assert_eq!(rank(&sing), 2);
    }

    #[test]
    fn solve_simple_system() {
        // Columns c0 = (1,1,0), c1 = (0,1,1), rhs = (1,0,1) => x = (1,1).
        let cols = vec![col(3, &[0, 1]), col(3, &[1, 2])];
        let x = solve(&cols, &col(3, &[0, 2])).unwrap();
        assert_eq!(x, vec![true, true]);
        // Inconsistent right-hand side.
        assert!(solve(&cols, &col(3, &[0])).is_none());
    }

    #[test]
    fn solve_prefers_zero_free_variables() {
        // Two identical columns: the pivot column is used, the free one not.
        let cols = vec![col(2, &[0]), col(2, &[0])];
        let x = solve(&cols, &col(2, &[0])).unwrap();
        assert_eq!(x, vec![true, false]);
    }

    #[test]
    fn sparse_solve_matches_dense() {
        // Same system as solve_simple_system, in sparse form.
        let cols = vec![vec![0, 1], vec![1, 2]];
        assert_eq!(solve_sparse(&cols, &[0, 2]), Some(vec![0, 1]));
        assert_eq!(solve_sparse(&cols, &[0]), None);
        // Duplicate columns: the first is preferred.
        let cols = vec![vec![0], vec![0]];
        assert_eq!(solve_sparse(&cols, &[0]), Some(vec![0]));
        // Zero right-hand side has the empty solution.
        assert_eq!(solve_sparse(&cols, &[]), Some(vec![]));
    }

    #[test]
    fn kernel_finds_dependencies() {
        let cols = vec![col(3, &[0, 1]), col(3, &[1, 2]), col(3, &[0, 2])];
        let ker = kernel(&cols);
        assert_eq!(ker.len(), 1);
        assert_eq!(ker[0].ones(), vec![0, 1, 2]);
        // Kernel vectors really sum the columns to zero.
        let mut sum = BitVec::zeros(3);
        for i in ker[0].ones() {
            sum.xor_assign(&cols[i]);
        }
        assert!(sum.is_zero());
    }
}
