use std::collections::BTreeMap;
use std::sync::Arc;

use crate::exactalg::Rational;

use super::linalg::{QMatrix, SparseVec};
use super::{BigradedModule, GrModError, LambdaMap};

/// The monomial `x^power · gen` as a basis element of a slice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SliceElem {
    pub gen: usize,
    pub power: i64,
    pub level: Rational,
}

/// Basis of the finite-dimensional `Q`-space of homogeneous elements of a
/// fixed homological degree, in canonical order: ascending I-level, ties
/// broken by generator order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SliceBasis {
    degree: i64,
    elems: Vec<SliceElem>,
    pos: BTreeMap<usize, usize>,
}

impl SliceBasis {
    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn elems(&self) -> &[SliceElem] {
        &self.elems
    }

    pub fn elem(&self, i: usize) -> &SliceElem {
        &self.elems[i]
    }

    /// Position of generator `gen` in this slice, if it contributes.
    pub fn position(&self, gen: usize) -> Option<usize> {
        self.pos.get(&gen).copied()
    }

    pub fn level(&self, i: usize) -> &Rational {
        &self.elems[i].level
    }

    /// Distinct I-levels in ascending order.
    pub fn distinct_levels(&self) -> Vec<Rational> {
        let mut out: Vec<Rational> = Vec::new();
        for e in &self.elems {
            if out.last() != Some(&e.level) {
                out.push(e.level.clone());
            }
        }
        out
    }

    /// Number of leading basis elements with level `<= r`.
    pub fn prefix_len(&self, r: &Rational) -> usize {
        self.elems.partition_point(|e| &e.level <= r)
    }
}

/// Every monomial `x^m g` with `gr(g) + 8m = k`, in canonical order.
pub fn slice_basis(module: &BigradedModule, k: i64) -> SliceBasis {
    let mut elems: Vec<SliceElem> = module
        .generators()
        .iter()
        .enumerate()
        .filter(|(_, g)| (k - g.gr).rem_euclid(8) == 0)
        .map(|(i, g)| {
            let power = (k - g.gr) / 8;
            SliceElem { gen: i, power, level: &g.iota + Rational::from(power) }
        })
        .collect();
    elems.sort_by(|a, b| a.level.cmp(&b.level).then(a.gen.cmp(&b.gen)));
    let pos = elems.iter().enumerate().map(|(i, e)| (e.gen, i)).collect();
    SliceBasis { degree: k, elems, pos }
}

/// A homogeneous element, given by coordinates on a slice basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QVector {
    pub slice: Arc<SliceBasis>,
    pub coords: SparseVec,
}

impl QVector {
    pub fn new(slice: Arc<SliceBasis>, coords: SparseVec) -> Self {
        Self { slice, coords }
    }

    /// The I-degree: maximum level over nonzero coordinates, `None` standing
    /// for `-∞` at the zero vector.
    pub fn deg_i(&self) -> Option<Rational> {
        self.coords.iter().map(|(i, _)| self.slice.level(i).clone()).max()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_zero()
    }
}

/// Matrix of `f` from the slice `source` to the slice `target`; rows index
/// `target`, columns index `source`.
pub fn restrict_between(
    f: &LambdaMap,
    source: &SliceBasis,
    target: &SliceBasis,
) -> Result<QMatrix, GrModError> {
    let mut rows: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); target.len()];
    for (g, h, p) in f.entries() {
        let Some(j) = source.position(g) else { continue };
        let m = source.elem(j).power;
        for (pow, c) in p.terms() {
            let hit = target.position(h).filter(|&i| target.elem(i).power == m + pow);
            let Some(i) = hit else {
                return Err(GrModError::Inhomogeneous {
                    from: f.source().generator(g).id.clone(),
                    to: f.target().generator(h).id.clone(),
                    pow,
                });
            };
            rows[i].push((j, c.clone()));
        }
    }
    Ok(QMatrix::from_rows(source.len(), rows.into_iter().map(SparseVec::from_pairs).collect()))
}

/// Matrix of `f` from slice `k` of its source to slice `k + deg f` of its
/// target.
pub fn restrict_to_slice(f: &LambdaMap, k: i64) -> Result<QMatrix, GrModError> {
    let source = slice_basis(f.source(), k);
    let target = slice_basis(f.target(), k + f.degree());
    restrict_between(f, &source, &target)
}
