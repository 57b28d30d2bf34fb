//! Word-packed GF(2) vectors and matrices.
//!
//! Rows are stored as dense bit vectors packed into 64-bit words, so
//! elimination and codeword enumeration reduce to word-wide XOR and popcount.
//! `rank`, `nullspace` and `solve` all work on internal copies; values are
//! immutable after construction and safe to share across worker threads.

use std::fmt;

const WORD_BITS: usize = 64;

/// Errors from GF(2) operations with explicit contracts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Gf2Error {
    /// A vector length does not match the matrix dimension it is used with.
    DimensionMismatch { expected: usize, got: usize },
}

impl fmt::Display for Gf2Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gf2Error::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
        }
    }
}

impl std::error::Error for Gf2Error {}

/// A dense bit vector over GF(2).
///
/// Bit `i` lives in word `i / 64` at position `i % 64`. Bits beyond `len`
/// in the last word are kept at zero, so the weight is a plain popcount sum.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVec {
    words: Vec<u64>,
    len: usize,
}

impl BitVec {
    /// Creates a zero vector of the given length.
    pub fn zeros(len: usize) -> Self {
        Self {
            words: vec![0; len.div_ceil(WORD_BITS)],
            len,
        }
    }

    /// Creates a vector from the indices of its set bits.
    pub fn from_indices(len: usize, ones: impl IntoIterator<Item = usize>) -> Self {
        let mut v = Self::zeros(len);
        for i in ones {
            v.set(i, true);
        }
        v
    }

    /// Builds a vector from `'0'`/`'1'` characters, bit 0 first.
    pub fn from_bitstring(s: &str) -> Option<Self> {
        let mut v = Self::zeros(s.len());
        for (i, ch) in s.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => v.set(i, true),
                _ => return None,
            }
        }
        Some(v)
    }

    /// Renders the vector as a `'0'`/`'1'` string, bit 0 first.
    pub fn to_bitstring(&self) -> String {
        (0..self.len)
            .map(|i| if self.get(i) { '1' } else { '0' })
            .collect()
    }

    /// Reassembles a vector from raw words; bits beyond `len` are cleared.
    pub fn from_words(len: usize, mut words: Vec<u64>) -> Self {
        words.resize(len.div_ceil(WORD_BITS), 0);
        let mut v = Self { words, len };
        v.mask_tail();
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Raw packed words; bits beyond `len` are always zero.
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range (len={})", self.len);
        (self.words[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range (len={})", self.len);
        let mask = 1u64 << (i % WORD_BITS);
        if value {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit index {i} out of range (len={})", self.len);
        self.words[i / WORD_BITS] ^= 1u64 << (i % WORD_BITS);
    }

    /// XOR-assigns another vector of the same length (addition in GF(2)).
    pub fn xor_assign(&mut self, other: &Self) {
        assert_eq!(self.len, other.len, "xor of mismatched lengths");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn xor(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    /// Number of set bits.
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Index of the lowest set bit, or `None` for the zero vector.
    pub fn first_one(&self) -> Option<usize> {
        for (wi, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(wi * WORD_BITS + w.trailing_zeros() as usize);
            }
        }
        None
    }

    /// Iterates over indices of set bits in ascending order.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let base = wi * WORD_BITS;
            std::iter::successors(
                if w == 0 { None } else { Some(w) },
                |&rest| {
                    let next = rest & (rest - 1);
                    if next == 0 {
                        None
                    } else {
                        Some(next)
                    }
                },
            )
            .map(move |rest| base + rest.trailing_zeros() as usize)
        })
    }

    /// Parity of the AND with another vector (the GF(2) dot product).
    pub fn dot(&self, other: &Self) -> bool {
        assert_eq!(self.len, other.len, "dot of mismatched lengths");
        let mut acc = 0u64;
        for (a, b) in self.words.iter().zip(&other.words) {
            acc ^= a & b;
        }
        acc.count_ones() % 2 == 1
    }

    fn mask_tail(&mut self) {
        let rem = self.len % WORD_BITS;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVec[{}]{{", self.len)?;
        for (idx, i) in self.ones().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

/// A dense GF(2) matrix stored as one [`BitVec`] per row.
#[derive(Clone, PartialEq, Eq)]
pub struct BitMatrix {
    rows: Vec<BitVec>,
    cols: usize,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows: vec![BitVec::zeros(cols); rows],
            cols,
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.rows[i].set(i, true);
        }
        m
    }

    /// Builds a matrix from rows, which must all have the same length.
    pub fn from_rows(rows: Vec<BitVec>, cols: usize) -> Self {
        for r in &rows {
            assert_eq!(r.len(), cols, "row length mismatch");
        }
        Self { rows, cols }
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &BitVec {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[BitVec] {
        &self.rows
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.rows[r].get(c)
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        self.rows[r].set(c, value);
    }

    pub fn push_row(&mut self, row: BitVec) {
        assert_eq!(row.len(), self.cols, "row length mismatch");
        self.rows.push(row);
    }

    /// Matrix-vector product `M·v` over GF(2).
    pub fn mul_vec(&self, v: &BitVec) -> BitVec {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        let mut out = BitVec::zeros(self.rows.len());
        for (i, row) in self.rows.iter().enumerate() {
            out.set(i, row.dot(v));
        }
        out
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut out = BitMatrix::zeros(self.cols, self.rows.len());
        for (r, row) in self.rows.iter().enumerate() {
            for c in row.ones() {
                out.rows[c].set(r, true);
            }
        }
        out
    }

    /// New matrix keeping only the given columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> BitMatrix {
        let mut out = BitMatrix::zeros(self.rows.len(), cols.len());
        for (r, row) in self.rows.iter().enumerate() {
            for (j, &c) in cols.iter().enumerate() {
                if row.get(c) {
                    out.rows[r].set(j, true);
                }
            }
        }
        out
    }

    /// Stacks the rows of `other` below the rows of `self`.
    pub fn stack(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.cols, other.cols, "column count mismatch");
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        BitMatrix::from_rows(rows, self.cols)
    }

    /// GF(2) row rank. Operates on a working copy; `self` is unmodified.
    pub fn rank(&self) -> usize {
        reduce(self.rows.clone(), self.cols).len()
    }

    /// Basis of the right nullspace `{v : M·v = 0}`, one basis vector per
    /// row of the returned matrix. Row count equals `cols − rank`.
    pub fn nullspace(&self) -> BitMatrix {
        let reduced = rref(self.rows.clone(), self.cols);
        let pivot_cols: Vec<usize> = reduced.iter().map(|(c, _)| *c).collect();
        let is_pivot = {
            let mut mask = vec![false; self.cols];
            for &c in &pivot_cols {
                mask[c] = true;
            }
            mask
        };
        let mut basis = Vec::with_capacity(self.cols - reduced.len());
        for (free, _) in is_pivot.iter().enumerate().filter(|(_, &p)| !p) {
            let mut v = BitVec::zeros(self.cols);
            v.set(free, true);
            for (c, row) in &reduced {
                if row.get(free) {
                    v.set(*c, true);
                }
            }
            basis.push(v);
        }
        BitMatrix::from_rows(basis, self.cols)
    }

    /// Finds some `x` with `M·x = b`, or `None` when the system is
    /// inconsistent. Free variables are set to zero.
    pub fn solve(&self, b: &BitVec) -> Result<Option<BitVec>, Gf2Error> {
        if b.len() != self.rows.len() {
            return Err(Gf2Error::DimensionMismatch {
                expected: self.rows.len(),
                got: b.len(),
            });
        }
        // Augment each row with its b-bit in an extra trailing column.
        let aug_cols = self.cols + 1;
        let mut aug: Vec<BitVec> = Vec::with_capacity(self.rows.len());
        for (i, row) in self.rows.iter().enumerate() {
            let mut words = row.words().to_vec();
            words.resize(aug_cols.div_ceil(WORD_BITS), 0);
            let mut r = BitVec::from_words(aug_cols, words);
            if b.get(i) {
                r.set(self.cols, true);
            }
            aug.push(r);
        }
        let reduced = rref(aug, aug_cols);
        let mut x = BitVec::zeros(self.cols);
        for (c, row) in &reduced {
            if *c == self.cols {
                // Pivot in the augmented column: 0 = 1, no solution.
                return Ok(None);
            }
            if row.get(self.cols) {
                x.set(*c, true);
            }
        }
        Ok(Some(x))
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows.len(), self.cols)?;
        for row in &self.rows {
            writeln!(f, "  {}", row.to_bitstring())?;
        }
        Ok(())
    }
}

/// Row echelon reduction. Returns the nonzero reduced rows paired with their
/// pivot columns (lowest set bit of each surviving row), unsorted pivots.
fn reduce(rows: Vec<BitVec>, _cols: usize) -> Vec<(usize, BitVec)> {
    let mut pivots: Vec<(usize, BitVec)> = Vec::new();
    for mut row in rows {
        while let Some(p) = row.first_one() {
            match pivots.iter().find(|(c, _)| *c == p) {
                Some((_, existing)) => row.xor_assign(existing),
                None => {
                    pivots.push((p, row));
                    break;
                }
            }
        }
    }
    pivots
}

/// Full reduced row echelon form: like [`reduce`] but every pivot column is
/// cleared in all other rows.
fn rref(rows: Vec<BitVec>, cols: usize) -> Vec<(usize, BitVec)> {
    let mut pivots = reduce(rows, cols);
    pivots.sort_by_key(|(c, _)| *c);
    for i in 0..pivots.len() {
        for j in (i + 1)..pivots.len() {
            let (c, _) = pivots[j];
            if pivots[i].1.get(c) {
                let row_j = pivots[j].1.clone();
                pivots[i].1.xor_assign(&row_j);
            }
        }
    }
    pivots
}

/// Incremental GF(2) row reducer: a RREF basis supporting membership tests.
///
/// Used where many vectors are reduced against the same span (stabilizer
/// membership during distance enumeration, independence filtering).
#[derive(Clone, Default)]
pub struct RowBasis {
    pivots: Vec<(usize, BitVec)>,
}

impl RowBasis {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_matrix(m: &BitMatrix) -> Self {
        let mut basis = Self::new();
        for row in m.rows() {
            basis.insert(row.clone());
        }
        basis
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    /// The stored basis rows (reduced, one distinct pivot each).
    pub fn rows(&self) -> Vec<BitVec> {
        self.pivots.iter().map(|(_, r)| r.clone()).collect()
    }

    /// Reduces `v` against the basis in place; returns the remainder.
    pub fn reduce(&self, mut v: BitVec) -> BitVec {
        loop {
            let Some(p) = v.first_one() else { return v };
            match self.pivots.iter().find(|(c, _)| *c == p) {
                Some((_, row)) => v.xor_assign(row),
                None => return v,
            }
        }
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        self.reduce(v.clone()).is_zero()
    }

    /// Inserts `v` if independent of the current span. Returns `true` when
    /// the dimension grew.
    pub fn insert(&mut self, v: BitVec) -> bool {
        let rem = self.reduce(v);
        match rem.first_one() {
            Some(p) => {
                self.pivots.push((p, rem));
                true
            }
            None => false,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&str]) -> BitMatrix {
        let cols = rows.first().map_or(0, |r| r.len());
        BitMatrix::from_rows(
            rows.iter()
                .map(|r| BitVec::from_bitstring(r).unwrap())
                .collect(),
            cols,
        )
    }

    #[test]
    fn rank_identity_and_zero() {
        for n in [1, 5, 64, 65, 130] {
            assert_eq!(BitMatrix::identity(n).rank(), n);
        }
        assert_eq!(BitMatrix::zeros(3, 5).rank(), 0);
        assert_eq!(BitMatrix::zeros(0, 0).rank(), 0);
    }

    #[test]
    fn rank_dependent_row() {
        // Third row is the XOR of the first two.
        let m = mat(&["110", "011", "101"]);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn nullspace_identity_is_empty() {
        let ns = BitMatrix::identity(6).nullspace();
        assert_eq!(ns.num_rows(), 0);
        assert_eq!(ns.num_cols(), 6);
    }

    #[test]
    fn nullspace_zero_matrix_is_standard_basis() {
        let ns = BitMatrix::zeros(4, 7).nullspace();
        assert_eq!(ns.num_rows(), 7);
        for (i, row) in ns.rows().iter().enumerate() {
            assert_eq!(row.weight(), 1);
            assert!(row.get(i));
        }
    }

    #[test]
    fn nullspace_single_row() {
        // Exhaustive check over all 4 vectors: kernel of (1 1) is {00, 11}.
        let m = mat(&["11"]);
        let ns = m.nullspace();
        assert_eq!(ns.num_rows(), 1);
        assert_eq!(ns.row(0).to_bitstring(), "11");
        for bits in 0u8..4 {
            let v = BitVec::from_indices(2, (0..2).filter(|i| (bits >> i) & 1 == 1));
            let in_kernel = m.mul_vec(&v).is_zero();
            let spanned = v.is_zero() || v == *ns.row(0);
            assert_eq!(in_kernel, spanned);
        }
    }

    #[test]
    fn solve_identity_and_inconsistent() {
        let id = BitMatrix::identity(5);
        let b = BitVec::from_bitstring("10110").unwrap();
        assert_eq!(id.solve(&b).unwrap().unwrap(), b);

        let zero = BitMatrix::zeros(3, 4);
        let b = BitVec::from_bitstring("010").unwrap();
        assert_eq!(zero.solve(&b).unwrap(), None);
    }

    #[test]
    fn solve_verified_by_remultiplication() {
        // Brute force over all 8 candidates confirms solvability first.
        let m = mat(&["110", "011"]);
        let b = BitVec::from_bitstring("11").unwrap();
        let exists = (0u8..8).any(|bits| {
            let v = BitVec::from_indices(3, (0..3).filter(|i| (bits >> i) & 1 == 1));
            m.mul_vec(&v) == b
        });
        assert!(exists);
        let x = m.solve(&b).unwrap().unwrap();
        assert_eq!(m.mul_vec(&x), b);
    }

    #[test]
    fn solve_rejects_dimension_mismatch() {
        let m = mat(&["110", "011"]);
        let b = BitVec::zeros(3);
        assert_eq!(
            m.solve(&b),
            Err(Gf2Error::DimensionMismatch {
                expected: 2,
                got: 3
            })
        );
    }

    #[test]
    fn rank_nullity_theorem() {
        let m = mat(&["1100110", "0110011", "1010101", "0000000"]);
        assert_eq!(m.rank() + m.nullspace().num_rows(), m.num_cols());
    }

    #[test]
    fn rank_invariant_under_row_ops() {
        let m = mat(&["10110", "01011", "11101"]);
        let r = m.rank();
        // Permutation.
        let mut rows: Vec<BitVec> = m.rows().to_vec();
        rows.swap(0, 2);
        assert_eq!(BitMatrix::from_rows(rows.clone(), 5).rank(), r);
        // Adding one row to another.
        let add = rows[1].clone();
        rows[0].xor_assign(&add);
        assert_eq!(BitMatrix::from_rows(rows, 5).rank(), r);
    }

    #[test]
    fn transpose_roundtrip() {
        let m = mat(&["10110", "01011"]);
        assert_eq!(m.transpose().transpose(), m);
    }

    #[test]
    fn select_columns_picks_in_order() {
        let m = mat(&["10110", "01011"]);
        let s = m.select_columns(&[4, 0]);
        assert_eq!(s.row(0).to_bitstring(), "01");
        assert_eq!(s.row(1).to_bitstring(), "10");
    }

    #[test]
    fn bitvec_tail_bits_stay_zero() {
        let v = BitVec::from_words(3, vec![u64::MAX]);
        assert_eq!(v.weight(), 3);
        let mut w = BitVec::zeros(130);
        w.set(129, true);
        w.flip(129);
        assert!(w.is_zero());
    }

    #[test]
    fn row_basis_membership() {
        let mut basis = RowBasis::new();
        assert!(basis.insert(BitVec::from_bitstring("1100").unwrap()));
        assert!(basis.insert(BitVec::from_bitstring("0110").unwrap()));
        assert!(!basis.insert(BitVec::from_bitstring("1010").unwrap()));
        assert_eq!(basis.dim(), 2);
        assert!(basis.contains(&BitVec::from_bitstring("1010").unwrap()));
        assert!(!basis.contains(&BitVec::from_bitstring("0001").unwrap()));
    }
}
