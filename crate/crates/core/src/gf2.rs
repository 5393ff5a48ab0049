//! Dense bit-packed linear algebra over the two-element field.
//!
//! Vectors pack 64 coordinates per machine word, so addition is a word-wise
//! XOR. Every basis returned by this module is in canonical form: the rows of
//! the reduced row echelon form of the spanned subspace, where the pivot of a
//! vector is its lowest set coordinate, listed in ascending pivot order. Two
//! calls that span the same subspace therefore return identical bases.

use std::fmt;
use std::ops::{Add, AddAssign};

use crate::error::{Error, Result};

const WORD: usize = 64;

fn words_for(len: usize) -> usize {
    len.div_ceil(WORD)
}

/// A fixed-length vector over GF(2).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gf2Vector {
    words: Vec<u64>,
    len: usize,
}

impl Gf2Vector {
    pub fn zeros(len: usize) -> Self {
        Self {
            words: vec![0; words_for(len)],
            len,
        }
    }

    pub fn unit(len: usize, index: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(index, true);
        v
    }

    /// Builds a vector with ones exactly at `indices`; repeated indices cancel.
    pub fn from_indices<I: IntoIterator<Item = usize>>(len: usize, indices: I) -> Self {
        let mut v = Self::zeros(len);
        for i in indices {
            v.flip(i);
        }
        v
    }

    pub fn from_bits(bits: &[bool]) -> Self {
        Self::from_indices(
            bits.len(),
            bits.iter().enumerate().filter(|(_, b)| **b).map(|(i, _)| i),
        )
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
            "coordinate {i} out of range (len {})",
            self.len
        );
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(
            i < self.len,
            "coordinate {i} out of range (len {})",
            self.len
        );
        let mask = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    pub fn flip(&mut self, i: usize) {
        assert!(
            i < self.len,
            "coordinate {i} out of range (len {})",
            self.len
        );
        self.words[i / WORD] ^= 1u64 << (i % WORD);
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Lowest set coordinate.
    pub fn first_one(&self) -> Option<usize> {
        self.first_one_from(0)
    }

    fn first_one_from(&self, start_word: usize) -> Option<usize> {
        self.words[start_word..]
            .iter()
            .enumerate()
            .find(|(_, w)| **w != 0)
            .map(|(k, w)| (start_word + k) * WORD + w.trailing_zeros() as usize)
    }

    /// Indices of the set coordinates, ascending.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let t = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(k * WORD + t)
                }
            })
        })
    }

    pub fn xor_assign(&mut self, other: &Self) {
        assert_eq!(self.len, other.len, "vector length mismatch");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= *b;
        }
    }

    // XOR restricted to words `start..`; callers guarantee `other` is zero below.
    fn xor_assign_from(&mut self, other: &Self, start_word: usize) {
        for (a, b) in self.words[start_word..]
            .iter_mut()
            .zip(&other.words[start_word..])
        {
            *a ^= *b;
        }
    }

    pub fn dot(&self, other: &Self) -> bool {
        assert_eq!(self.len, other.len, "vector length mismatch");
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum::<u32>()
            % 2
            == 1
    }

    /// Coordinates `0..len` of `self` followed by those of `other`.
    pub fn concat(&self, other: &Self) -> Self {
        Self::from_indices(
            self.len + other.len,
            self.ones().chain(other.ones().map(|i| i + self.len)),
        )
    }

    /// The sub-vector with coordinates `start..end`.
    pub fn slice(&self, start: usize, end: usize) -> Self {
        assert!(start <= end && end <= self.len);
        Self::from_indices(
            end - start,
            self.ones()
                .filter(|&i| i >= start && i < end)
                .map(|i| i - start),
        )
    }
}

impl fmt::Debug for Gf2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf2Vector(")?;
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        write!(f, ")")
    }
}

impl AddAssign<&Gf2Vector> for Gf2Vector {
    fn add_assign(&mut self, rhs: &Gf2Vector) {
        self.xor_assign(rhs);
    }
}

impl Add<&Gf2Vector> for &Gf2Vector {
    type Output = Gf2Vector;

    fn add(self, rhs: &Gf2Vector) -> Gf2Vector {
        let mut out = self.clone();
        out.xor_assign(rhs);
        out
    }
}

/// A dense matrix over GF(2), stored as packed rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf2Matrix {
    rows: Vec<Gf2Vector>,
    cols: usize,
}

impl Gf2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows: vec![Gf2Vector::zeros(cols); rows],
            cols,
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            rows: (0..n).map(|i| Gf2Vector::unit(n, i)).collect(),
            cols: n,
        }
    }

    pub fn from_rows(cols: usize, rows: Vec<Gf2Vector>) -> Result<Self> {
        if let Some(r) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::Precondition(format!(
                "row of length {} in a matrix with {cols} columns",
                r.len()
            )));
        }
        Ok(Self { rows, cols })
    }

    /// Matrix whose columns are the given vectors, all of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Gf2Vector]) -> Result<Self> {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            if c.len() != rows {
                return Err(Error::Precondition(format!(
                    "column of length {} in a matrix with {rows} rows",
                    c.len()
                )));
            }
            for i in c.ones() {
                m.rows[i].set(j, true);
            }
        }
        Ok(m)
    }

    /// Builds a matrix from 0/1 entries; any odd entry counts as one.
    pub fn from_dense(cols: usize, entries: &[Vec<u8>]) -> Result<Self> {
        let rows = entries
            .iter()
            .map(|r| {
                if r.len() != cols {
                    return Err(Error::Precondition("ragged dense matrix".into()));
                }
                Ok(Gf2Vector::from_bits(
                    &r.iter().map(|x| x % 2 == 1).collect::<Vec<_>>(),
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { rows, cols })
    }

    pub fn rows(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &Gf2Vector {
        &self.rows[i]
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].get(j)
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.rows[i].set(j, value);
    }

    pub fn column(&self, j: usize) -> Gf2Vector {
        Gf2Vector::from_indices(
            self.rows(),
            self.rows
                .iter()
                .enumerate()
                .filter(|(_, r)| r.get(j))
                .map(|(i, _)| i),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Gf2Vector::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows());
        for (i, r) in self.rows.iter().enumerate() {
            for j in r.ones() {
                t.rows[j].set(i, true);
            }
        }
        t
    }

    pub fn mul_vec(&self, x: &Gf2Vector) -> Result<Gf2Vector> {
        if x.len() != self.cols {
            return Err(Error::Precondition(format!(
                "vector of length {} applied to a matrix with {} columns",
                x.len(),
                self.cols
            )));
        }
        Ok(Gf2Vector::from_bits(
            &self.rows.iter().map(|r| r.dot(x)).collect::<Vec<_>>(),
        ))
    }

    pub fn mul(&self, other: &Gf2Matrix) -> Result<Gf2Matrix> {
        if self.cols != other.rows() {
            return Err(Error::Precondition(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows(),
                self.cols,
                other.rows(),
                other.cols
            )));
        }
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let mut acc = Gf2Vector::zeros(other.cols);
                for k in r.ones() {
                    acc.xor_assign(&other.rows[k]);
                }
                acc
            })
            .collect();
        Ok(Gf2Matrix {
            rows,
            cols: other.cols,
        })
    }

    pub fn rank(&self) -> usize {
        let mut rows = self.rows.clone();
        rref(&mut rows, self.cols).len()
    }

    /// Canonical basis of the null space `{x : Mx = 0}`.
    pub fn kernel_basis(&self) -> Vec<Gf2Vector> {
        let mut rows = self.rows.clone();
        let pivots = rref(&mut rows, self.cols);
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let basis: Vec<Gf2Vector> = (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = Gf2Vector::unit(self.cols, f);
                for (r, &p) in rows.iter().zip(&pivots) {
                    if r.get(f) {
                        v.set(p, true);
                    }
                }
                v
            })
            .collect();
        echelon_basis(&basis)
    }

    /// Canonical basis of the column space.
    pub fn image_basis(&self) -> Vec<Gf2Vector> {
        echelon_basis(&self.transpose().rows)
    }

    /// Some `x` with `Mx = b`, free variables set to zero; `None` when the
    /// system is inconsistent.
    pub fn solve(&self, b: &Gf2Vector) -> Result<Option<Gf2Vector>> {
        if b.len() != self.rows() {
            return Err(Error::Precondition(format!(
                "right-hand side of length {} for a matrix with {} rows",
                b.len(),
                self.rows()
            )));
        }
        let mut augmented: Vec<Gf2Vector> = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, r)| r.concat(&Gf2Vector::from_bits(&[b.get(i)])))
            .collect();
        let pivots = rref(&mut augmented, self.cols + 1);
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = Gf2Vector::zeros(self.cols);
        for (r, &p) in augmented.iter().zip(&pivots) {
            if r.get(self.cols) {
                x.set(p, true);
            }
        }
        Ok(Some(x))
    }
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Gf2Matrix {}x{} [", self.rows(), self.cols)?;
        for r in &self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                f.write_str(if r.get(j) { "1" } else { "0" })?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Reduces `rows` in place to reduced row echelon form, dropping zero rows,
/// and returns the pivot column of each remaining row.
fn rref(rows: &mut Vec<Gf2Vector>, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows.len() {
            break;
        }
        let Some(p) = (rank..rows.len()).find(|&i| rows[i].get(c)) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        let start = c / WORD;
        for (i, r) in rows.iter_mut().enumerate() {
            if i != rank && r.get(c) {
                // the pivot row is zero left of column `c`
                r.xor_assign_from(&pivot, start);
            }
        }
        pivots.push(c);
        rank += 1;
    }
    rows.truncate(rank);
    pivots
}

/// Canonical reduced echelon basis of the span of `vectors`.
pub fn echelon_basis(vectors: &[Gf2Vector]) -> Vec<Gf2Vector> {
    let Some(first) = vectors.first() else {
        return Vec::new();
    };
    let len = first.len();
    let mut rows = vectors.to_vec();
    rref(&mut rows, len);
    rows
}

/// Dimension of the span of `vectors`.
pub fn span_rank(vectors: &[Gf2Vector]) -> usize {
    echelon_basis(vectors).len()
}

/// Normal form of `v` modulo the span of a basis produced by
/// [`echelon_basis`]; zero exactly when `v` lies in that span.
pub fn reduce_against(echelon: &[Gf2Vector], v: &Gf2Vector) -> Gf2Vector {
    let mut r = v.clone();
    for b in echelon {
        let p = b.first_one().expect("echelon basis has no zero rows");
        if r.get(p) {
            r.xor_assign(b);
        }
    }
    r
}

pub fn in_span(vectors: &[Gf2Vector], v: &Gf2Vector) -> bool {
    reduce_against(&echelon_basis(vectors), v).is_zero()
}

/// Canonical basis of `span(a) ∩ span(b)`.
pub fn subspace_intersection(a: &[Gf2Vector], b: &[Gf2Vector]) -> Result<Vec<Gf2Vector>> {
    let len = match a.first().or(b.first()) {
        Some(v) => v.len(),
        None => return Ok(Vec::new()),
    };
    if a.iter().chain(b).any(|v| v.len() != len) {
        return Err(Error::Precondition(
            "subspace intersection of vectors with different lengths".into(),
        ));
    }
    let a = echelon_basis(a);
    let b = echelon_basis(b);
    if a.is_empty() || b.is_empty() {
        return Ok(Vec::new());
    }
    // x·A = y·B  <=>  (x, y) in ker [A | B] taken column-wise
    let stacked: Vec<Gf2Vector> = a.iter().chain(&b).cloned().collect();
    let system = Gf2Matrix::from_columns(len, &stacked)?;
    let meet: Vec<Gf2Vector> = system
        .kernel_basis()
        .iter()
        .map(|coeffs| {
            let mut v = Gf2Vector::zeros(len);
            for i in coeffs.ones().take_while(|&i| i < a.len()) {
                v.xor_assign(&a[i]);
            }
            v
        })
        .collect();
    Ok(echelon_basis(&meet))
}
