//! Exact rational scalars and sparse linear algebra.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

pub type Scalar = BigRational;

pub fn scalar(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Scalar {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Returns the value as an `i64` when it is an integer that fits.
pub fn as_integer(x: &Scalar) -> Option<i64> {
    if !x.is_integer() {
        return None;
    }
    i64::try_from(x.numer()).ok()
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("representatives are linearly dependent modulo the ideal")]
    DependentRepresentatives,
}

/// Sparse vector with sorted, nonzero entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SparseVector {
    dim: usize,
    entries: Vec<(usize, Scalar)>,
}

impl SparseVector {
    pub fn zero(dim: usize) -> Self {
        SparseVector { dim, entries: Vec::new() }
    }

    pub fn unit(dim: usize, i: usize) -> Self {
        assert!(i < dim, "unit vector index out of range");
        SparseVector { dim, entries: vec![(i, Scalar::one())] }
    }

    /// Builds a vector from arbitrary (index, value) pairs; duplicates are summed.
    pub fn from_entries<I>(dim: usize, items: I) -> Result<Self, LinalgError>
    where
        I: IntoIterator<Item = (usize, Scalar)>,
    {
        let mut map: std::collections::BTreeMap<usize, Scalar> = Default::default();
        for (i, v) in items {
            if i >= dim {
                return Err(LinalgError::IndexOutOfRange { index: i, dim });
            }
            *map.entry(i).or_insert_with(Scalar::zero) += v;
        }
        let entries = map.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        Ok(SparseVector { dim, entries })
    }

    pub fn from_dense(values: &[Scalar]) -> Self {
        let entries = values
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(i, v)| (i, v.clone()))
            .collect();
        SparseVector { dim: values.len(), entries }
    }

    pub fn from_ints(values: &[i64]) -> Self {
        let v: Vec<Scalar> = values.iter().map(|&x| scalar(x)).collect();
        Self::from_dense(&v)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[(usize, Scalar)] {
        &self.entries
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize) -> Scalar {
        match self.entries.binary_search_by_key(&i, |e| e.0) {
            Ok(k) => self.entries[k].1.clone(),
            Err(_) => Scalar::zero(),
        }
    }

    fn lookup(&self, i: usize) -> Option<&Scalar> {
        self.entries
            .binary_search_by_key(&i, |e| e.0)
            .ok()
            .map(|k| &self.entries[k].1)
    }

    pub fn leading(&self) -> Option<(usize, &Scalar)> {
        self.entries.first().map(|(i, v)| (*i, v))
    }

    pub fn to_dense(&self) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim];
        for (i, v) in &self.entries {
            out[*i] = v.clone();
        }
        out
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, c: &Scalar, other: &SparseVector) {
        debug_assert_eq!(self.dim, other.dim);
        if c.is_zero() || other.is_zero() {
            return;
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let mut a = std::mem::take(&mut self.entries).into_iter().peekable();
        let mut b = other.entries.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (Some((ia, _)), Some((ib, _))) => {
                    if ia < ib {
                        out.push(a.next().unwrap());
                    } else if ib < ia {
                        let (ib, vb) = b.next().unwrap();
                        out.push((*ib, c * vb));
                    } else {
                        let (ia, va) = a.next().unwrap();
                        let (_, vb) = b.next().unwrap();
                        let s = va + c * vb;
                        if !s.is_zero() {
                            out.push((ia, s));
                        }
                    }
                }
                (Some(_), None) => out.push(a.next().unwrap()),
                (None, Some(_)) => {
                    let (ib, vb) = b.next().unwrap();
                    out.push((*ib, c * vb));
                }
                (None, None) => break,
            }
        }
        self.entries = out;
    }

    pub fn scale(&mut self, c: &Scalar) {
        if c.is_zero() {
            self.entries.clear();
            return;
        }
        for e in &mut self.entries {
            e.1 = &e.1 * c;
        }
    }

    pub fn scaled(&self, c: &Scalar) -> Self {
        let mut v = self.clone();
        v.scale(c);
        v
    }

    pub fn add(&self, other: &SparseVector) -> Self {
        let mut v = self.clone();
        v.add_scaled(&Scalar::one(), other);
        v
    }

    pub fn sub(&self, other: &SparseVector) -> Self {
        let mut v = self.clone();
        v.add_scaled(&-Scalar::one(), other);
        v
    }

    /// Kronecker product, index `i * other.dim + j`.
    pub fn kron(&self, other: &SparseVector) -> Self {
        let mut entries = Vec::with_capacity(self.nnz() * other.nnz());
        for (i, a) in &self.entries {
            for (j, b) in &other.entries {
                entries.push((i * other.dim + j, a * b));
            }
        }
        SparseVector { dim: self.dim * other.dim, entries }
    }

    fn check_dim(&self, dim: usize) -> Result<(), LinalgError> {
        if self.dim != dim {
            Err(LinalgError::DimensionMismatch { expected: dim, found: self.dim })
        } else {
            Ok(())
        }
    }
}

/// Column-major sparse matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: Vec<SparseVector>,
}

impl SparseMatrix {
    pub fn from_columns(rows: usize, cols: Vec<SparseVector>) -> Result<Self, LinalgError> {
        for c in &cols {
            c.check_dim(rows)?;
        }
        Ok(SparseMatrix { rows, cols })
    }

    pub fn zero(rows: usize, ncols: usize) -> Self {
        SparseMatrix { rows, cols: vec![SparseVector::zero(rows); ncols] }
    }

    pub fn identity(n: usize) -> Self {
        SparseMatrix { rows: n, cols: (0..n).map(|i| SparseVector::unit(n, i)).collect() }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, j: usize) -> &SparseVector {
        &self.cols[j]
    }

    pub fn columns(&self) -> &[SparseVector] {
        &self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> Scalar {
        self.cols[j].get(i)
    }

    pub fn apply(&self, v: &SparseVector) -> Result<SparseVector, LinalgError> {
        v.check_dim(self.cols.len())?;
        let mut out = SparseVector::zero(self.rows);
        for (j, c) in v.entries() {
            out.add_scaled(c, &self.cols[*j]);
        }
        Ok(out)
    }

    pub fn compose(&self, other: &SparseMatrix) -> Result<SparseMatrix, LinalgError> {
        let cols = other
            .cols
            .iter()
            .map(|c| self.apply(c))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(SparseMatrix { rows: self.rows, cols })
    }

    pub fn add_scaled(&mut self, c: &Scalar, other: &SparseMatrix) {
        for (a, b) in self.cols.iter_mut().zip(&other.cols) {
            a.add_scaled(c, b);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_zero())
    }

    pub fn rank(&self) -> usize {
        let mut s = Subspace::new(self.rows);
        for c in &self.cols {
            s.insert(c).expect("columns share the row dimension");
        }
        s.rank()
    }
}

/// A subspace in reduced row-echelon form.
///
/// When tracked, every inserted independent vector is retained and
/// `member` returns coordinates with respect to those retained vectors.
/// Untracked subspaces report coordinates with respect to their rows.
#[derive(Clone, Debug)]
pub struct Subspace {
    dim: usize,
    rows: Vec<SparseVector>,
    pivots: Vec<usize>,
    pivot_row: HashMap<usize, usize>,
    tracked: bool,
    generators: Vec<SparseVector>,
    // rows[k] = sum_j combos[k][j] * generators[j]
    combos: Vec<Vec<(usize, Scalar)>>,
}

impl Subspace {
    pub fn new(dim: usize) -> Self {
        Subspace {
            dim,
            rows: Vec::new(),
            pivots: Vec::new(),
            pivot_row: HashMap::new(),
            tracked: false,
            generators: Vec::new(),
            combos: Vec::new(),
        }
    }

    pub fn new_tracked(dim: usize) -> Self {
        let mut s = Self::new(dim);
        s.tracked = true;
        s
    }

    /// Echelonizes `vectors` in tracked mode.
    pub fn echelonize(dim: usize, vectors: &[SparseVector]) -> Result<Self, LinalgError> {
        let mut s = Self::new_tracked(dim);
        for v in vectors {
            s.insert(v)?;
        }
        Ok(s)
    }

    /// Echelonizes `vectors` without tracking generators.
    pub fn span(dim: usize, vectors: &[SparseVector]) -> Result<Self, LinalgError> {
        let mut s = Self::new(dim);
        for v in vectors {
            s.insert(v)?;
        }
        Ok(s)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Rows in increasing pivot order.
    pub fn rows(&self) -> Vec<SparseVector> {
        let mut idx: Vec<usize> = (0..self.rows.len()).collect();
        idx.sort_by_key(|&k| self.pivots[k]);
        idx.into_iter().map(|k| self.rows[k].clone()).collect()
    }

    pub fn pivots(&self) -> Vec<usize> {
        let mut p = self.pivots.clone();
        p.sort_unstable();
        p
    }

    /// Vectors that coordinates refer to: retained generators when tracked, rows otherwise.
    pub fn basis(&self) -> Vec<SparseVector> {
        if self.tracked {
            self.generators.clone()
        } else {
            self.rows()
        }
    }

    /// Residual of `v` after reduction by the rows, plus the coefficient used per row.
    fn reduce_with(&self, v: &SparseVector) -> (SparseVector, Vec<(usize, Scalar)>) {
        let mut r = v.clone();
        let mut used = Vec::new();
        let mut pos = 0;
        while pos < r.entries.len() {
            let (j, c) = (r.entries[pos].0, r.entries[pos].1.clone());
            if let Some(&k) = self.pivot_row.get(&j) {
                r.add_scaled(&-c.clone(), &self.rows[k]);
                used.push((k, c));
            } else {
                pos += 1;
            }
        }
        (r, used)
    }

    /// Residual of `v` modulo the subspace; linear in `v`, zero exactly on members.
    pub fn reduce(&self, v: &SparseVector) -> Result<SparseVector, LinalgError> {
        v.check_dim(self.dim)?;
        Ok(self.reduce_with(v).0)
    }

    pub fn contains(&self, v: &SparseVector) -> Result<bool, LinalgError> {
        Ok(self.reduce(v)?.is_zero())
    }

    /// Inserts `v`; returns true when the rank grew.
    pub fn insert(&mut self, v: &SparseVector) -> Result<bool, LinalgError> {
        v.check_dim(self.dim)?;
        let (mut r, used) = self.reduce_with(v);
        let Some((p, lead)) = r.leading().map(|(p, c)| (p, c.clone())) else {
            return Ok(false);
        };
        let inv = lead.recip();
        r.scale(&inv);
        let mut combo: Vec<(usize, Scalar)> = Vec::new();
        if self.tracked {
            let g = self.generators.len();
            self.generators.push(v.clone());
            let mut acc: std::collections::BTreeMap<usize, Scalar> = Default::default();
            acc.insert(g, inv.clone());
            for (k, c) in &used {
                for (j, w) in &self.combos[*k] {
                    *acc.entry(*j).or_insert_with(Scalar::zero) -= c * w * &inv;
                }
            }
            combo = acc.into_iter().filter(|(_, x)| !x.is_zero()).collect();
        }
        // eliminate the new pivot from existing rows
        for k in 0..self.rows.len() {
            if let Some(c) = self.rows[k].lookup(p).cloned() {
                self.rows[k].add_scaled(&-c.clone(), &r);
                if self.tracked {
                    let mut acc: std::collections::BTreeMap<usize, Scalar> =
                        self.combos[k].drain(..).collect();
                    for (j, w) in &combo {
                        *acc.entry(*j).or_insert_with(Scalar::zero) -= &c * w;
                    }
                    self.combos[k] = acc.into_iter().filter(|(_, x)| !x.is_zero()).collect();
                }
            }
        }
        self.pivot_row.insert(p, self.rows.len());
        self.pivots.push(p);
        self.rows.push(r);
        if self.tracked {
            self.combos.push(combo);
        }
        Ok(true)
    }

    /// Coordinates of `v` relative to `basis()`, or `None` when `v` is not in the span.
    pub fn member(&self, v: &SparseVector) -> Result<Option<SparseVector>, LinalgError> {
        v.check_dim(self.dim)?;
        let (r, used) = self.reduce_with(v);
        if !r.is_zero() {
            return Ok(None);
        }
        if !self.tracked {
            let mut order: Vec<usize> = (0..self.rows.len()).collect();
            order.sort_by_key(|&k| self.pivots[k]);
            let mut pos = vec![0; self.rows.len()];
            for (i, &k) in order.iter().enumerate() {
                pos[k] = i;
            }
            return Ok(Some(SparseVector::from_entries(
                self.rows.len(),
                used.into_iter().map(|(k, c)| (pos[k], c)),
            )?));
        }
        let mut items = Vec::new();
        for (k, c) in used {
            for (j, w) in &self.combos[k] {
                items.push((*j, &c * w));
            }
        }
        Ok(Some(SparseVector::from_entries(self.generators.len(), items)?))
    }

    /// Leading coefficient check helper for tests: is every row normalized and reduced?
    pub fn is_reduced(&self) -> bool {
        for (k, row) in self.rows.iter().enumerate() {
            match row.leading() {
                Some((p, c)) if p == self.pivots[k] && c.is_one() => {}
                _ => return false,
            }
            for (l, other) in self.rows.iter().enumerate() {
                if l != k && other.lookup(self.pivots[k]).is_some() {
                    return false;
                }
            }
        }
        true
    }
}

/// Free echelonize entry point matching the tracked semantics.
pub fn echelonize(vectors: &[SparseVector]) -> Result<Subspace, LinalgError> {
    let dim = vectors.first().map(|v| v.dim()).unwrap_or(0);
    Subspace::echelonize(dim, vectors)
}

pub fn member(s: &Subspace, v: &SparseVector) -> Result<Option<SparseVector>, LinalgError> {
    s.member(v)
}

/// Smallest subspace containing `seed` and stable under every operator.
pub fn closure<F>(dim: usize, seed: &[SparseVector], operators: &[F]) -> Result<Subspace, LinalgError>
where
    F: Fn(&SparseVector) -> SparseVector,
{
    let mut s = Subspace::new_tracked(dim);
    let mut queue: std::collections::VecDeque<SparseVector> = Default::default();
    for v in seed {
        if s.insert(v)? {
            queue.push_back(v.clone());
        }
    }
    while let Some(v) = queue.pop_front() {
        for op in operators {
            let w = op(&v);
            if s.insert(&w)? {
                queue.push_back(w);
            }
        }
    }
    Ok(s)
}

/// Quotient of a space by an ideal, with coordinates on chosen representatives.
#[derive(Clone, Debug)]
pub struct Quotient {
    ideal: Subspace,
    reps: Subspace,
    count: usize,
}

impl Quotient {
    pub fn new(ideal: Subspace, representatives: &[SparseVector]) -> Result<Self, LinalgError> {
        let mut reps = Subspace::new_tracked(ideal.dim());
        for r in representatives {
            let red = ideal.reduce(r)?;
            if !reps.insert(&red)? {
                return Err(LinalgError::DependentRepresentatives);
            }
        }
        Ok(Quotient { ideal, reps, count: representatives.len() })
    }

    pub fn dim(&self) -> usize {
        self.count
    }

    pub fn ideal(&self) -> &Subspace {
        &self.ideal
    }

    /// Coordinates of `v` modulo the ideal, or `None` if `v` leaves the representative span.
    pub fn coords(&self, v: &SparseVector) -> Result<Option<SparseVector>, LinalgError> {
        let red = self.ideal.reduce(v)?;
        self.reps.member(&red)
    }
}
