//! Dense linear algebra over GF(2).
//!
//! Rows are bit-packed into `u64` words. Everything here is exact; the only
//! failure modes are shape mismatches and the enumeration guard, which bounds
//! the `2^dim` walks done by [`enumerate_space`] and [`minimal_supports`].

use std::fmt;
use std::ops::{BitXor, BitXorAssign};

use crate::error::{Error, Result};
use crate::set::{ElementSet, MAX_GROUND};

/// Default bound on the dimension of spaces walked exhaustively.
pub const DEFAULT_ENUMERATION_LIMIT: usize = 24;

const WORD: usize = 64;

fn words_for(len: usize) -> usize {
    len.div_ceil(WORD)
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GF2Vector {
    len: usize,
    words: Vec<u64>,
}

impl GF2Vector {
    pub fn zeros(len: usize) -> Self {
        GF2Vector {
            len,
            words: vec![0; words_for(len)],
        }
    }

    pub fn from_bits(bits: &[bool]) -> Self {
        let mut v = GF2Vector::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    /// Builds a vector of length `len <= 64` whose bit `i` is bit `i` of `mask`.
    pub fn from_mask(len: usize, mask: u64) -> Self {
        assert!(len <= WORD, "from_mask needs len <= 64");
        let mut v = GF2Vector::zeros(len);
        if len > 0 {
            let keep = if len == WORD {
                u64::MAX
            } else {
                (1u64 << len) - 1
            };
            v.words[0] = mask & keep;
        }
        v
    }

    /// The support as a mask, when the vector fits in one word.
    pub fn to_mask(&self) -> Option<u64> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0]),
            _ => None,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(
            i < self.len,
            "index {i} out of range for length {}",
            self.len
        );
        self.words[i / WORD] >> (i % WORD) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(
            i < self.len,
            "index {i} out of range for length {}",
            self.len
        );
        let bit = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= bit;
        } else {
            self.words[i / WORD] &= !bit;
        }
    }

    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len);
        self.words[i / WORD] ^= 1u64 << (i % WORD);
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Coordinates holding a one, increasing.
    pub fn support(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.weight());
        for (wi, &w) in self.words.iter().enumerate() {
            let mut w = w;
            while w != 0 {
                out.push(wi * WORD + w.trailing_zeros() as usize);
                w &= w - 1;
            }
        }
        out
    }

    pub fn dot(&self, other: &GF2Vector) -> bool {
        assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones())
            & 1
            == 1
    }

    fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD + w.trailing_zeros() as usize)
    }
}

impl BitXorAssign<&GF2Vector> for GF2Vector {
    fn bitxor_assign(&mut self, rhs: &GF2Vector) {
        assert_eq!(self.len, rhs.len, "vector length mismatch");
        for (a, b) in self.words.iter_mut().zip(&rhs.words) {
            *a ^= b;
        }
    }
}

impl BitXor<&GF2Vector> for &GF2Vector {
    type Output = GF2Vector;
    fn bitxor(self, rhs: &GF2Vector) -> GF2Vector {
        let mut out = self.clone();
        out ^= rhs;
        out
    }
}

impl fmt::Display for GF2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for GF2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF2Vector({self})")
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GF2Matrix {
    cols: usize,
    rows: Vec<GF2Vector>,
}

impl GF2Matrix {
    /// A matrix with no rows and `cols` columns.
    pub fn empty(cols: usize) -> Self {
        GF2Matrix {
            cols,
            rows: Vec::new(),
        }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        GF2Matrix {
            cols,
            rows: vec![GF2Vector::zeros(cols); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = GF2Matrix::zeros(n, n);
        for i in 0..n {
            m.rows[i].set(i, true);
        }
        m
    }

    pub fn from_rows(cols: usize, rows: Vec<GF2Vector>) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::ShapeMismatch {
                expected: cols,
                found: bad.len(),
            });
        }
        Ok(GF2Matrix { cols, rows })
    }

    /// Parses rows written as `0`/`1` strings, e.g. `["101", "011"]`.
    pub fn from_strs(cols: usize, rows: &[&str]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|s| {
                s.chars()
                    .map(|c| match c {
                        '0' => Ok(false),
                        '1' => Ok(true),
                        other => Err(Error::InvalidParameter(format!("bad bit {other:?}"))),
                    })
                    .collect::<Result<Vec<_>>>()
                    .map(|b| GF2Vector::from_bits(&b))
            })
            .collect::<Result<Vec<_>>>()?;
        GF2Matrix::from_rows(cols, rows)
    }

    /// Rows given as masks over at most 64 columns.
    pub fn from_masks(cols: usize, masks: &[u64]) -> Self {
        GF2Matrix {
            cols,
            rows: masks
                .iter()
                .map(|&m| GF2Vector::from_mask(cols, m))
                .collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &GF2Vector {
        &self.rows[i]
    }

    pub fn row_vectors(&self) -> &[GF2Vector] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].get(j)
    }

    pub fn push_row(&mut self, row: GF2Vector) -> Result<()> {
        if row.len() != self.cols {
            return Err(Error::ShapeMismatch {
                expected: self.cols,
                found: row.len(),
            });
        }
        self.rows.push(row);
        Ok(())
    }

    /// Column submatrix in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> GF2Matrix {
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let mut out = GF2Vector::zeros(cols.len());
                for (k, &j) in cols.iter().enumerate() {
                    if r.get(j) {
                        out.set(k, true);
                    }
                }
                out
            })
            .collect();
        GF2Matrix {
            cols: cols.len(),
            rows,
        }
    }

    pub fn transpose(&self) -> GF2Matrix {
        let mut t = GF2Matrix::zeros(self.cols, self.rows.len());
        for (i, r) in self.rows.iter().enumerate() {
            for j in r.support() {
                t.rows[j].set(i, true);
            }
        }
        t
    }

    /// `self · v`.
    pub fn mul_vec(&self, v: &GF2Vector) -> GF2Vector {
        let mut out = GF2Vector::zeros(self.rows.len());
        for (i, r) in self.rows.iter().enumerate() {
            if r.dot(v) {
                out.set(i, true);
            }
        }
        out
    }

    /// Reduced row echelon form with zero rows dropped, plus the pivot column
    /// of each remaining row (strictly increasing).
    pub fn rref_with_pivots(&self) -> (GF2Matrix, Vec<usize>) {
        let mut rows = self.rows.clone();
        let mut pivots = Vec::new();
        let mut next = 0;
        for col in 0..self.cols {
            let Some(found) = (next..rows.len()).find(|&i| rows[i].get(col)) else {
                continue;
            };
            rows.swap(next, found);
            let (head, tail) = rows.split_at_mut(next);
            let (pivot_row, tail) = tail.split_first_mut().expect("pivot row exists");
            let pivot_row = &*pivot_row;
            for r in head.iter_mut().chain(tail.iter_mut()) {
                if r.get(col) {
                    *r ^= pivot_row;
                }
            }
            pivots.push(col);
            next += 1;
        }
        rows.truncate(next);
        (
            GF2Matrix {
                cols: self.cols,
                rows,
            },
            pivots,
        )
    }

    pub fn rref(&self) -> GF2Matrix {
        self.rref_with_pivots().0
    }

    pub fn rank(&self) -> usize {
        self.rref_with_pivots().1.len()
    }

    /// A basis of `{ v : self · v = 0 }`, one vector per free column.
    pub fn null_space_basis(&self) -> Vec<GF2Vector> {
        let (r, pivots) = self.rref_with_pivots();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = GF2Vector::zeros(self.cols);
                v.set(f, true);
                for (row, &p) in r.rows.iter().zip(&pivots) {
                    if row.get(f) {
                        v.set(p, true);
                    }
                }
                v
            })
            .collect()
    }

    /// True when every row of `other` lies in the row space of `self`.
    pub fn spans(&self, other: &GF2Matrix) -> bool {
        let (r, pivots) = self.rref_with_pivots();
        other.rows.iter().all(|row| {
            let mut v = row.clone();
            for (prow, &p) in r.rows.iter().zip(&pivots) {
                if v.get(p) {
                    v ^= prow;
                }
            }
            v.is_zero()
        })
    }
}

impl fmt::Display for GF2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rows {
            writeln!(f, "{r}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for GF2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF2Matrix {}x{} [", self.rows.len(), self.cols)?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{r}")?;
        }
        f.write_str("]")
    }
}

fn check_independent(basis: &[GF2Vector], len: usize) -> Result<()> {
    if let Some(bad) = basis.iter().find(|v| v.len() != len) {
        return Err(Error::ShapeMismatch {
            expected: len,
            found: bad.len(),
        });
    }
    let mut reduced: Vec<GF2Vector> = Vec::with_capacity(basis.len());
    for v in basis {
        let mut v = v.clone();
        for r in &reduced {
            let lead = r.first_one().expect("reduced rows are nonzero");
            if v.get(lead) {
                v ^= r;
            }
        }
        if v.is_zero() {
            return Err(Error::DependentBasis);
        }
        reduced.push(v);
    }
    Ok(())
}

/// Walks the span of `basis` in Gray-code order over coefficient masks,
/// starting with the zero vector. Each vector of the span is yielded once.
pub fn enumerate_space(basis: &[GF2Vector], len: usize) -> Result<SpanIter> {
    enumerate_space_with_limit(basis, len, DEFAULT_ENUMERATION_LIMIT)
}

pub fn enumerate_space_with_limit(
    basis: &[GF2Vector],
    len: usize,
    limit: usize,
) -> Result<SpanIter> {
    if basis.len() > limit || basis.len() >= 64 {
        return Err(Error::DimensionExceeded {
            dim: basis.len(),
            limit,
        });
    }
    check_independent(basis, len)?;
    Ok(SpanIter {
        basis: basis.to_vec(),
        current: GF2Vector::zeros(len),
        step: 0,
        total: 1u64 << basis.len(),
    })
}

pub struct SpanIter {
    basis: Vec<GF2Vector>,
    current: GF2Vector,
    step: u64,
    total: u64,
}

impl Iterator for SpanIter {
    type Item = GF2Vector;

    fn next(&mut self) -> Option<GF2Vector> {
        if self.step >= self.total {
            return None;
        }
        if self.step > 0 {
            let flip = self.step.trailing_zeros() as usize;
            self.current ^= &self.basis[flip];
        }
        self.step += 1;
        Some(self.current.clone())
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.total - self.step) as usize;
        (left, Some(left))
    }
}

/// Supports of the nonzero vectors in the span of `basis` that are minimal
/// under inclusion, sorted by size and then by mask.
pub fn minimal_supports(basis: &[GF2Vector], len: usize) -> Result<Vec<ElementSet>> {
    minimal_supports_with_limit(basis, len, DEFAULT_ENUMERATION_LIMIT)
}

pub fn minimal_supports_with_limit(
    basis: &[GF2Vector],
    len: usize,
    limit: usize,
) -> Result<Vec<ElementSet>> {
    if len > MAX_GROUND {
        return Err(Error::GroundTooLarge {
            size: len,
            limit: MAX_GROUND,
            guard: "element-set",
        });
    }
    check_independent(basis, len)?;
    let masks: Vec<u64> = basis
        .iter()
        .map(|v| v.to_mask().expect("len <= 64"))
        .collect();
    Ok(minimal_supports_of_masks(&masks, limit)?
        .into_iter()
        .map(ElementSet::from_mask)
        .collect())
}

/// Mask-level core of [`minimal_supports`]; `basis` must be independent.
pub(crate) fn minimal_supports_of_masks(basis: &[u64], limit: usize) -> Result<Vec<u64>> {
    if basis.len() > limit || basis.len() >= 64 {
        return Err(Error::DimensionExceeded {
            dim: basis.len(),
            limit,
        });
    }
    let total = 1u64 << basis.len();
    let mut all = Vec::with_capacity(total as usize - 1);
    let mut cur = 0u64;
    for step in 1..total {
        cur ^= basis[step.trailing_zeros() as usize];
        all.push(cur);
    }
    all.sort_unstable_by_key(|&m| (m.count_ones(), m));
    let mut minimal: Vec<u64> = Vec::new();
    for m in all {
        if !minimal.iter().any(|&k| k & !m == 0) {
            minimal.push(m);
        }
    }
    Ok(minimal)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(cols: usize, rows: &[&str]) -> GF2Matrix {
        GF2Matrix::from_strs(cols, rows).unwrap()
    }

    fn v(s: &str) -> GF2Vector {
        mat(s.len(), &[s]).row(0).clone()
    }

    #[test]
    fn rref_examples() {
        assert_eq!(mat(3, &["110", "101"]).rref(), mat(3, &["101", "011"]));
        let z = mat(2, &["00", "00"]).rref();
        assert_eq!((z.rows(), z.cols()), (0, 2));
        assert_eq!(
            mat(3, &["101", "011", "110"]).rref(),
            mat(3, &["101", "011"])
        );
    }

    #[test]
    fn rank_examples() {
        assert_eq!(GF2Matrix::identity(3).rank(), 3);
        assert_eq!(GF2Matrix::zeros(2, 4).rank(), 0);
        assert_eq!(mat(3, &["101", "011", "110"]).rank(), 2);
    }

    #[test]
    fn null_space_examples() {
        assert_eq!(mat(3, &["101", "011"]).null_space_basis(), vec![v("111")]);
        assert!(GF2Matrix::identity(2).null_space_basis().is_empty());
        let m = mat(4, &["1111"]);
        let basis = m.null_space_basis();
        assert_eq!(basis.len(), 3);
        assert_eq!(basis, vec![v("1100"), v("1010"), v("1001")]);
        for b in &basis {
            assert!(m.mul_vec(b).is_zero());
        }
    }

    #[test]
    fn enumerate_examples() {
        let s: Vec<_> = enumerate_space(&[v("111")], 3).unwrap().collect();
        assert_eq!(s, vec![v("000"), v("111")]);
        let s: Vec<_> = enumerate_space(&[], 3).unwrap().collect();
        assert_eq!(s, vec![v("000")]);
        let mut s: Vec<_> = enumerate_space(&[v("10"), v("01")], 2)
            .unwrap()
            .map(|x| x.to_string())
            .collect();
        s.sort();
        assert_eq!(s, vec!["00", "01", "10", "11"]);
    }

    #[test]
    fn enumeration_guard() {
        let basis: Vec<_> = (0..5).map(|i| GF2Vector::from_mask(8, 1 << i)).collect();
        assert!(matches!(
            enumerate_space_with_limit(&basis, 8, 4),
            Err(Error::DimensionExceeded { dim: 5, limit: 4 })
        ));
        assert!(enumerate_space_with_limit(&basis, 8, 5).is_ok());
        assert_eq!(
            enumerate_space(&[v("11"), v("11")], 2).err(),
            Some(Error::DependentBasis)
        );
    }

    #[test]
    fn minimal_support_examples() {
        assert_eq!(
            minimal_supports(&[v("111")], 3).unwrap(),
            vec![ElementSet::from_indices([0, 1, 2])]
        );
        // span of 110, 011 is {110, 011, 101}: all weight two, all minimal
        let got = minimal_supports(&[v("110"), v("011")], 3).unwrap();
        let want = [[0, 1], [1, 2], [0, 2]];
        assert_eq!(got.len(), 3);
        for w in want {
            assert!(got.contains(&ElementSet::from_indices(w)));
        }
        assert!(minimal_supports(&[], 3).unwrap().is_empty());
    }

    #[test]
    fn multiword_rows() {
        let mut a = GF2Vector::zeros(130);
        a.set(0, true);
        a.set(129, true);
        let mut b = GF2Vector::zeros(130);
        b.set(129, true);
        let m = GF2Matrix::from_rows(130, vec![a.clone(), b.clone(), &a ^ &b]).unwrap();
        assert_eq!(m.rank(), 2);
        assert_eq!(m.null_space_basis().len(), 128);
        assert_eq!(a.support(), vec![0, 129]);
    }
}
