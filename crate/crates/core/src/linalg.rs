//! Dense vectors and matrices over GF(q), Gaussian elimination and
//! reduction of a generator matrix to systematic form.

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use std::fmt;
use std::ops::Index;

/// A vector of residues over a prime field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FqVector {
    field: FieldSpec,
    entries: Vec<u32>,
}

impl FqVector {
    pub fn new(field: FieldSpec, entries: Vec<u32>) -> Result<Self> {
        for &e in &entries {
            field.check(e)?;
        }
        Ok(Self { field, entries })
    }

    /// Builds a vector from arbitrary integers, reducing each modulo q.
    pub fn from_reduced(field: FieldSpec, values: &[i64]) -> Self {
        let entries = values.iter().map(|&v| field.reduce(v)).collect();
        Self { field, entries }
    }

    pub(crate) fn from_raw(field: FieldSpec, entries: Vec<u32>) -> Self {
        debug_assert!(entries.iter().all(|&e| e < field.q()));
        Self { field, entries }
    }

    pub fn zeros(field: FieldSpec, len: usize) -> Self {
        Self {
            field,
            entries: vec![0; len],
        }
    }

    pub fn unit(field: FieldSpec, len: usize, pos: usize) -> Self {
        let mut v = Self::zeros(field, len);
        v.entries[pos] = 1;
        v
    }

    #[inline]
    pub fn field(&self) -> FieldSpec {
        self.field
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    #[inline]
    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<u32> {
        self.entries
    }

    /// Hamming weight.
    pub fn weight(&self) -> usize {
        self.entries.iter().filter(|&&e| e != 0).count()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    pub fn distance(&self, other: &Self) -> usize {
        self.entries
            .iter()
            .zip(&other.entries)
            .filter(|(a, b)| a != b)
            .count()
    }

    fn compatible(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch {
                left: self.field.q(),
                right: other.field.q(),
            });
        }
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch {
                expected: self.len(),
                found: other.len(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let f = self.field;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(&a, &b)| f.add(a, b))
            .collect();
        Ok(Self::from_raw(f, entries))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let f = self.field;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(&a, &b)| f.sub(a, b))
            .collect();
        Ok(Self::from_raw(f, entries))
    }

    pub fn scale(&self, c: u32) -> Self {
        let f = self.field;
        Self::from_raw(f, self.entries.iter().map(|&a| f.mul(a, c)).collect())
    }

    /// `⟨self | tail⟩`.
    pub fn concat(&self, tail: &Self) -> Result<Self> {
        if self.field != tail.field {
            return Err(Error::FieldMismatch {
                left: self.field.q(),
                right: tail.field.q(),
            });
        }
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&tail.entries);
        Ok(Self::from_raw(self.field, entries))
    }

    /// Splits into the first `at` coordinates and the rest.
    pub fn split_at(&self, at: usize) -> (Self, Self) {
        let (a, b) = self.entries.split_at(at);
        (
            Self::from_raw(self.field, a.to_vec()),
            Self::from_raw(self.field, b.to_vec()),
        )
    }
}

impl Index<usize> for FqVector {
    type Output = u32;

    fn index(&self, i: usize) -> &u32 {
        &self.entries[i]
    }
}

impl fmt::Display for FqVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for e in &self.entries {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{e}")?;
            first = false;
        }
        Ok(())
    }
}

/// Row-major dense matrix over a prime field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FqMatrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    entries: Vec<u32>,
}

impl FqMatrix {
    pub fn new(field: FieldSpec, rows: usize, cols: usize, entries: Vec<u32>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                found: entries.len(),
            });
        }
        for &e in &entries {
            field.check(e)?;
        }
        Ok(Self {
            field,
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows<R: AsRef<[u32]>>(field: FieldSpec, rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            entries.extend_from_slice(r);
        }
        Self::new(field, rows.len(), cols, entries)
    }

    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Self {
            field,
            rows,
            cols,
            entries: vec![0; rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, size: usize) -> Self {
        let mut m = Self::zeros(field, size, size);
        for i in 0..size {
            m.entries[i * size + i] = 1;
        }
        m
    }

    #[inline]
    pub fn field(&self) -> FieldSpec {
        self.field
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.entries[r * self.cols + c]
    }

    #[inline]
    fn set(&mut self, r: usize, c: usize, v: u32) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vector(&self, r: usize) -> FqVector {
        FqVector::from_raw(self.field, self.row(r).to_vec())
    }

    pub fn column(&self, c: usize) -> Vec<u32> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    /// Matrix product `self · other`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.field != other.field {
            return Err(Error::FieldMismatch {
                left: self.field.q(),
                right: other.field.q(),
            });
        }
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let f = self.field;
        let mut out = Self::zeros(f, self.rows, other.cols);
        for r in 0..self.rows {
            for i in 0..self.cols {
                let a = self.get(r, i);
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    let v = f.add(out.get(r, c), f.mul(a, other.get(i, c)));
                    out.set(r, c, v);
                }
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    /// Returns the matrix whose column `j` is column `perm.source(j)` of `self`.
    pub fn permute_columns(&self, perm: &ColumnPermutation) -> Result<Self> {
        if perm.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: perm.len(),
            });
        }
        let mut out = Self::zeros(self.field, self.rows, self.cols);
        for r in 0..self.rows {
            for (j, &src) in perm.mapping().iter().enumerate() {
                out.set(r, j, self.get(r, src));
            }
        }
        Ok(out)
    }

    /// Reduced row echelon form in place. Returns pivot columns in order.
    ///
    /// Pivots are chosen scanning columns left to right; within a column the
    /// first nonzero entry at or below the current pivot row is used.
    fn reduce_rows(&mut self) -> Vec<usize> {
        let f = self.field;
        let mut pivots = Vec::new();
        let mut prow = 0;
        for c in 0..self.cols {
            if prow == self.rows {
                break;
            }
            let Some(r) = (prow..self.rows).find(|&r| self.get(r, c) != 0) else {
                continue;
            };
            self.swap_rows(r, prow);
            let inv = f.inv(self.get(prow, c)).expect("pivot is nonzero");
            for j in 0..self.cols {
                let v = f.mul(self.get(prow, j), inv);
                self.set(prow, j, v);
            }
            for other in 0..self.rows {
                if other == prow {
                    continue;
                }
                let factor = self.get(other, c);
                if factor == 0 {
                    continue;
                }
                for j in 0..self.cols {
                    let v = f.sub(self.get(other, j), f.mul(factor, self.get(prow, j)));
                    self.set(other, j, v);
                }
            }
            pivots.push(c);
            prow += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.clone().reduce_rows().len()
    }
}

impl fmt::Display for FqMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(u32::to_string).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// `M · x^T`.
pub fn mat_vec_mul(m: &FqMatrix, x: &FqVector) -> Result<FqVector> {
    if m.field != x.field() {
        return Err(Error::FieldMismatch {
            left: m.field.q(),
            right: x.field().q(),
        });
    }
    if x.len() != m.cols {
        return Err(Error::DimensionMismatch {
            expected: m.cols,
            found: x.len(),
        });
    }
    if m.field.is_binary() {
        return Ok(binary_mat_vec(m, x));
    }
    let f = m.field;
    let out = (0..m.rows)
        .map(|r| {
            m.row(r)
                .iter()
                .zip(x.entries())
                .fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
        })
        .collect();
    Ok(FqVector::from_raw(f, out))
}

fn pack_bits(bits: &[u32]) -> Vec<u64> {
    let mut words = vec![0u64; bits.len().div_ceil(64)];
    for (i, &b) in bits.iter().enumerate() {
        if b != 0 {
            words[i / 64] |= 1 << (i % 64);
        }
    }
    words
}

/// GF(2) path: each output bit is the parity of `row & x`.
fn binary_mat_vec(m: &FqMatrix, x: &FqVector) -> FqVector {
    let xw = pack_bits(x.entries());
    let out = (0..m.rows)
        .map(|r| {
            let rw = pack_bits(m.row(r));
            rw.iter()
                .zip(&xw)
                .map(|(a, b)| (a & b).count_ones())
                .sum::<u32>()
                & 1
        })
        .collect();
    FqVector::from_raw(m.field, out)
}

pub fn rank(m: &FqMatrix) -> usize {
    m.rank()
}

/// A reordering of `n` columns. Position `j` takes column `mapping[j]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColumnPermutation {
    mapping: Vec<usize>,
}

impl ColumnPermutation {
    pub fn new(mapping: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; mapping.len()];
        for &m in &mapping {
            if m >= mapping.len() || seen[m] {
                return Err(Error::InvalidPermutation);
            }
            seen[m] = true;
        }
        Ok(Self { mapping })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            mapping: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.mapping.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mapping.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.mapping.iter().enumerate().all(|(i, &m)| i == m)
    }

    pub fn mapping(&self) -> &[usize] {
        &self.mapping
    }

    pub fn source(&self, j: usize) -> usize {
        self.mapping[j]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.mapping.len()];
        for (j, &m) in self.mapping.iter().enumerate() {
            inv[m] = j;
        }
        Self { mapping: inv }
    }

    /// Original order to permuted order: `out[j] = v[mapping[j]]`.
    pub fn apply(&self, v: &FqVector) -> Result<FqVector> {
        self.check_len(v)?;
        let entries = self.mapping.iter().map(|&m| v[m]).collect();
        Ok(FqVector::from_raw(v.field(), entries))
    }

    /// Permuted order back to original order.
    pub fn unapply(&self, v: &FqVector) -> Result<FqVector> {
        self.check_len(v)?;
        let mut entries = vec![0; v.len()];
        for (j, &m) in self.mapping.iter().enumerate() {
            entries[m] = v[j];
        }
        Ok(FqVector::from_raw(v.field(), entries))
    }

    fn check_len(&self, v: &FqVector) -> Result<()> {
        if v.len() != self.mapping.len() {
            return Err(Error::DimensionMismatch {
                expected: self.mapping.len(),
                found: v.len(),
            });
        }
        Ok(())
    }
}

/// Output of [`to_systematic`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SystematicForm {
    /// `[I_k | A]`
    pub generator: FqMatrix,
    /// `[-A^T | I_{n-k}]`
    pub parity_check: FqMatrix,
    pub perm: ColumnPermutation,
}

/// Reduces a full-rank `k × n` generator matrix to `[I_k | A]`.
///
/// Columns that receive no pivot are moved behind the pivot columns, keeping
/// their relative order; `perm` records the reordering.
pub fn to_systematic(g: &FqMatrix) -> Result<SystematicForm> {
    let (k, n) = (g.rows, g.cols);
    if k == 0 || k >= n {
        return Err(Error::InvalidParameters(format!(
            "generator must satisfy 1 <= k < n, got k={k}, n={n}"
        )));
    }
    let mut reduced = g.clone();
    let pivots = reduced.reduce_rows();
    if pivots.len() < k {
        return Err(Error::RankDeficient {
            rank: pivots.len(),
            expected: k,
        });
    }
    let mut mapping = pivots.clone();
    mapping.extend((0..n).filter(|c| !pivots.contains(c)));
    let perm = ColumnPermutation::new(mapping)?;
    let generator = reduced.permute_columns(&perm)?;
    let parity_check = parity_check_from_systematic(&generator);
    Ok(SystematicForm {
        generator,
        parity_check,
        perm,
    })
}

/// Builds `[-A^T | I]` from a generator already in `[I | A]` form.
pub(crate) fn parity_check_from_systematic(g: &FqMatrix) -> FqMatrix {
    let f = g.field;
    let (k, n) = (g.rows, g.cols);
    let r = n - k;
    let mut h = FqMatrix::zeros(f, r, n);
    for i in 0..r {
        for j in 0..k {
            h.set(i, j, f.neg(g.get(j, k + i)));
        }
        h.set(i, k + i, 1);
    }
    h
}
