//! Sparse exact linear algebra over `Q`.
//!
//! Matrices are stored by rows. Elimination pivots on the first nonzero
//! column of each row, so the null-space basis read off the reduced form has
//! one vector per free column `f`, supported on positions `<= f` with its
//! last nonzero entry at `f`. Callers order columns so that "last" means
//! "highest filtration level".

use std::collections::BTreeMap;

use crate::exactalg::Rational;

/// A sparse vector: sorted `(index, value)` pairs, no stored zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparseVec(Vec<(usize, Rational)>);

impl SparseVec {
    pub fn new() -> Self {
        Self(Vec::new())
    }

    pub fn unit(i: usize) -> Self {
        Self(vec![(i, Rational::one())])
    }

    /// Collects arbitrary pairs, summing repeats and dropping zeros.
    pub fn from_pairs<I: IntoIterator<Item = (usize, Rational)>>(pairs: I) -> Self {
        let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
        for (i, v) in pairs {
            *acc.entry(i).or_insert_with(Rational::zero) += &v;
        }
        Self::from_map(acc)
    }

    pub fn from_dense(values: &[Rational]) -> Self {
        Self(values.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(i, v)| (i, v.clone())).collect())
    }

    fn from_map(acc: BTreeMap<usize, Rational>) -> Self {
        Self(acc.into_iter().filter(|(_, v)| !v.is_zero()).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.0.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Rational)> + '_ {
        self.0.iter().map(|(i, v)| (*i, v))
    }

    pub fn get(&self, i: usize) -> Rational {
        match self.0.binary_search_by_key(&i, |(j, _)| *j) {
            Ok(k) => self.0[k].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    pub fn first(&self) -> Option<usize> {
        self.0.first().map(|(i, _)| *i)
    }

    /// Position of the last nonzero entry.
    pub fn leading(&self) -> Option<usize> {
        self.0.last().map(|(i, _)| *i)
    }

    pub fn dot(&self, other: &SparseVec) -> Rational {
        let (mut a, mut b) = (self.0.iter().peekable(), other.0.iter().peekable());
        let mut acc = Rational::zero();
        while let (Some((i, x)), Some((j, y))) = (a.peek(), b.peek()) {
            match i.cmp(j) {
                std::cmp::Ordering::Less => {
                    a.next();
                }
                std::cmp::Ordering::Greater => {
                    b.next();
                }
                std::cmp::Ordering::Equal => {
                    acc += &(x * y);
                    a.next();
                    b.next();
                }
            }
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> SparseVec {
        if c.is_zero() {
            return SparseVec::new();
        }
        Self(self.0.iter().map(|(i, v)| (*i, v * c)).collect())
    }

    /// `self + c·other`.
    pub fn axpy(&self, c: &Rational, other: &SparseVec) -> SparseVec {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut a, mut b) = (self.0.iter().peekable(), other.0.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, x)), Some((j, y))) => {
                    if i < j {
                        out.push((*i, x.clone()));
                        a.next();
                    } else if j < i {
                        out.push((*j, c * y));
                        b.next();
                    } else {
                        let v = x + &(c * y);
                        if !v.is_zero() {
                            out.push((*i, v));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((i, x)), None) => {
                    out.push((*i, x.clone()));
                    a.next();
                }
                (None, Some((j, y))) => {
                    out.push((*j, c * y));
                    b.next();
                }
                (None, None) => break,
            }
        }
        Self(out)
    }

    pub fn to_dense(&self, len: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); len];
        for (i, v) in &self.0 {
            out[*i] = v.clone();
        }
        out
    }

    /// Keeps entries whose index satisfies `keep`, renumbered by `map`.
    pub fn select(&self, map: impl Fn(usize) -> Option<usize>) -> SparseVec {
        let mut pairs: Vec<_> = self.0.iter().filter_map(|(i, v)| map(*i).map(|j| (j, v.clone()))).collect();
        pairs.sort_by_key(|(j, _)| *j);
        Self(pairs)
    }
}

/// A sparse `nrows × ncols` matrix over `Q`, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QMatrix {
    nrows: usize,
    ncols: usize,
    rows: Vec<SparseVec>,
}

impl QMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        Self { nrows, ncols, rows: vec![SparseVec::new(); nrows] }
    }

    pub fn from_rows(ncols: usize, rows: Vec<SparseVec>) -> Self {
        debug_assert!(rows.iter().all(|r| r.leading().is_none_or(|l| l < ncols)));
        Self { nrows: rows.len(), ncols, rows }
    }

    pub fn from_dense(rows: &[Vec<Rational>]) -> Self {
        let ncols = rows.first().map_or(0, Vec::len);
        Self::from_rows(ncols, rows.iter().map(|r| SparseVec::from_dense(r)).collect())
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &SparseVec {
        &self.rows[i]
    }

    pub fn get(&self, i: usize, j: usize) -> Rational {
        self.rows[i].get(j)
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(SparseVec::is_zero)
    }

    pub fn mul_vec(&self, v: &SparseVec) -> SparseVec {
        SparseVec(
            self.rows
                .iter()
                .enumerate()
                .filter_map(|(i, r)| {
                    let x = r.dot(v);
                    (!x.is_zero()).then_some((i, x))
                })
                .collect(),
        )
    }

    pub fn transpose(&self) -> QMatrix {
        let mut cols: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); self.ncols];
        for (i, r) in self.rows.iter().enumerate() {
            for (j, v) in r.iter() {
                cols[j].push((i, v.clone()));
            }
        }
        QMatrix { nrows: self.ncols, ncols: self.nrows, rows: cols.into_iter().map(SparseVec).collect() }
    }

    /// `self · rhs`.
    pub fn mul(&self, rhs: &QMatrix) -> QMatrix {
        assert_eq!(self.ncols, rhs.nrows, "dimension mismatch in matrix product");
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let mut acc = SparseVec::new();
                for (k, v) in r.iter() {
                    acc = acc.axpy(v, &rhs.rows[k]);
                }
                acc
            })
            .collect();
        QMatrix { nrows: self.nrows, ncols: rhs.ncols, rows }
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn stack(&self, other: &QMatrix) -> QMatrix {
        assert_eq!(self.ncols, other.ncols);
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        QMatrix { nrows: rows.len(), ncols: self.ncols, rows }
    }

    pub fn push_row(&mut self, row: SparseVec) {
        debug_assert!(row.leading().is_none_or(|l| l < self.ncols));
        self.rows.push(row);
        self.nrows += 1;
    }

    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        self.rows.iter().map(|r| r.to_dense(self.ncols)).collect()
    }
}

/// Row echelon form built incrementally. Each stored row has its pivot as
/// its first entry, normalized to 1, and pivots are distinct.
#[derive(Clone, Debug, Default)]
pub struct RowEchelon {
    ncols: usize,
    pivots: BTreeMap<usize, SparseVec>,
}

impl RowEchelon {
    pub fn new(ncols: usize) -> Self {
        Self { ncols, pivots: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.keys().copied()
    }

    /// Reduces `v` until its first entry is not a pivot column (or it
    /// vanishes).
    fn reduce_head(&self, v: &SparseVec) -> SparseVec {
        let mut acc: BTreeMap<usize, Rational> = v.iter().map(|(i, x)| (i, x.clone())).collect();
        while let Some(prow) = acc.keys().next().and_then(|c| self.pivots.get(c)) {
            let c = *acc.keys().next().expect("nonempty");
            let factor = acc.remove(&c).expect("present");
            for (j, y) in prow.iter().skip(1) {
                let e = acc.entry(j).or_insert_with(Rational::zero);
                *e -= &(&factor * y);
                if e.is_zero() {
                    acc.remove(&j);
                }
            }
        }
        SparseVec::from_map(acc)
    }

    /// Fully reduces `v` against every pivot.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut acc: BTreeMap<usize, Rational> = v.iter().map(|(i, x)| (i, x.clone())).collect();
        let mut cursor = 0usize;
        while let Some((&c, _)) = acc.range(cursor..).next() {
            match self.pivots.get(&c) {
                Some(prow) => {
                    let factor = acc.remove(&c).expect("present");
                    for (j, y) in prow.iter().skip(1) {
                        let e = acc.entry(j).or_insert_with(Rational::zero);
                        *e -= &(&factor * y);
                        if e.is_zero() {
                            acc.remove(&j);
                        }
                    }
                }
                None => cursor = c + 1,
            }
        }
        SparseVec::from_map(acc)
    }

    /// Adds a row; returns `true` if the rank grew.
    pub fn insert(&mut self, row: &SparseVec) -> bool {
        let r = self.reduce_head(row);
        let Some(p) = r.first() else { return false };
        let inv = r.get(p).inv().expect("pivot nonzero");
        self.pivots.insert(p, r.scale(&inv));
        true
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Back-substitutes so that every pivot row is zero in all other pivot
    /// columns.
    pub fn into_reduced(mut self) -> ReducedEchelon {
        let keys: Vec<usize> = self.pivots.keys().rev().copied().collect();
        let mut done: BTreeMap<usize, SparseVec> = BTreeMap::new();
        for p in keys {
            let row = self.pivots.remove(&p).expect("present");
            let mut acc: BTreeMap<usize, Rational> = row.iter().map(|(i, x)| (i, x.clone())).collect();
            let mut cursor = p + 1;
            while let Some((&c, _)) = acc.range(cursor..).next() {
                match done.get(&c) {
                    Some(prow) => {
                        let factor = acc.remove(&c).expect("present");
                        for (j, y) in prow.iter().skip(1) {
                            let e = acc.entry(j).or_insert_with(Rational::zero);
                            *e -= &(&factor * y);
                            if e.is_zero() {
                                acc.remove(&j);
                            }
                        }
                    }
                    None => cursor = c + 1,
                }
            }
            done.insert(p, SparseVec::from_map(acc));
        }
        ReducedEchelon { ncols: self.ncols, pivots: done }
    }
}

/// Reduced row echelon form.
#[derive(Clone, Debug)]
pub struct ReducedEchelon {
    ncols: usize,
    pivots: BTreeMap<usize, SparseVec>,
}

impl ReducedEchelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_pivot(&self, c: usize) -> bool {
        self.pivots.contains_key(&c)
    }

    /// Null-space basis, one vector per free column in ascending order.
    pub fn kernel(&self) -> Vec<SparseVec> {
        let mut cols: BTreeMap<usize, Vec<(usize, Rational)>> = BTreeMap::new();
        for c in 0..self.ncols {
            if !self.pivots.contains_key(&c) {
                cols.insert(c, vec![(c, Rational::one())]);
            }
        }
        for (&p, row) in &self.pivots {
            for (c, v) in row.iter().skip(1) {
                if let Some(col) = cols.get_mut(&c) {
                    col.push((p, -v));
                }
            }
        }
        cols.into_values()
            .map(|mut col| {
                col.sort_by_key(|(i, _)| *i);
                SparseVec(col)
            })
            .collect()
    }
}

/// Null-space basis of `a`, echelonized so that leading (last nonzero)
/// positions are pairwise distinct.
pub fn kernel(a: &QMatrix) -> Vec<SparseVec> {
    let mut ech = RowEchelon::new(a.ncols());
    for r in a.rows() {
        ech.insert(r);
    }
    ech.into_reduced().kernel()
}

pub fn rank(a: &QMatrix) -> usize {
    let mut ech = RowEchelon::new(a.ncols());
    for r in a.rows() {
        ech.insert(r);
    }
    ech.rank()
}

/// Some solution of `a·x = b` (free variables set to zero), if one exists.
pub fn solve(a: &QMatrix, b: &SparseVec) -> Option<SparseVec> {
    let n = a.ncols();
    let bcol: BTreeMap<usize, Rational> = b.iter().map(|(i, v)| (i, v.clone())).collect();
    let mut ech = RowEchelon::new(n + 1);
    for (i, r) in a.rows().iter().enumerate() {
        let mut aug = r.clone();
        if let Some(v) = bcol.get(&i) {
            aug.0.push((n, v.clone()));
        }
        ech.insert(&aug);
    }
    if b.leading().is_some_and(|l| l >= a.nrows()) {
        return None;
    }
    if ech.pivots.contains_key(&n) {
        return None;
    }
    let red = ech.into_reduced();
    Some(SparseVec::from_pairs(red.pivots.iter().map(|(&p, row)| (p, row.get(n)))))
}
