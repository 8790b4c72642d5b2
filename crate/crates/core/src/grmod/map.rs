use std::collections::BTreeMap;
use std::sync::Arc;

use crate::exactalg::{LaurentPoly, Rational};

use super::{BigradedModule, GrModError};

/// One term of a map entry that breaks homogeneity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Inhomogeneity {
    pub from: usize,
    pub to: usize,
    pub pow: i64,
}

/// One term of a map entry that fails to strictly lower the I-level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelIncrease {
    pub from: usize,
    pub to: usize,
    pub pow: i64,
    pub source_level: Rational,
    pub target_level: Rational,
}

/// A `Λ`-linear map between free bigraded modules, stored as a sparse matrix
/// of Laurent polynomials keyed by `(source index, target index)`.
#[derive(Clone, Debug)]
pub struct LambdaMap {
    source: Arc<BigradedModule>,
    target: Arc<BigradedModule>,
    degree: i64,
    entries: BTreeMap<(usize, usize), LaurentPoly>,
}

fn same_module(a: &Arc<BigradedModule>, b: &Arc<BigradedModule>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl LambdaMap {
    /// Builds the map and rejects any term violating
    /// `gr(h) + 8p = gr(g) + degree`.
    pub fn new(
        source: Arc<BigradedModule>,
        target: Arc<BigradedModule>,
        degree: i64,
        entries: BTreeMap<(usize, usize), LaurentPoly>,
    ) -> Result<Self, GrModError> {
        let map = Self::new_unchecked(source, target, degree, entries);
        if let Some(v) = map.homogeneity_violations().into_iter().next() {
            return Err(GrModError::Inhomogeneous {
                from: map.source.generator(v.from).id.clone(),
                to: map.target.generator(v.to).id.clone(),
                pow: v.pow,
            });
        }
        Ok(map)
    }

    pub fn new_unchecked(
        source: Arc<BigradedModule>,
        target: Arc<BigradedModule>,
        degree: i64,
        mut entries: BTreeMap<(usize, usize), LaurentPoly>,
    ) -> Self {
        entries.retain(|_, p| !p.is_zero());
        Self { source, target, degree, entries }
    }

    pub fn zero(source: Arc<BigradedModule>, target: Arc<BigradedModule>, degree: i64) -> Self {
        Self { source, target, degree, entries: BTreeMap::new() }
    }

    pub fn source(&self) -> &Arc<BigradedModule> {
        &self.source
    }

    pub fn target(&self) -> &Arc<BigradedModule> {
        &self.target
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn num_entries(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &LaurentPoly)> + '_ {
        self.entries.iter().map(|(&(g, h), p)| (g, h, p))
    }

    pub fn entry(&self, from: usize, to: usize) -> LaurentPoly {
        self.entries.get(&(from, to)).cloned().unwrap_or_default()
    }

    /// Entries grouped by source generator.
    pub fn columns(&self) -> Vec<Vec<(usize, &LaurentPoly)>> {
        let mut cols = vec![Vec::new(); self.source.rank()];
        for (&(g, h), p) in &self.entries {
            cols[g].push((h, p));
        }
        cols
    }

    /// Image of the generator `from` as a list of `(target, polynomial)`.
    pub fn apply_generator(&self, from: usize) -> Vec<(usize, LaurentPoly)> {
        self.entries.range((from, 0)..=(from, usize::MAX)).map(|(&(_, h), p)| (h, p.clone())).collect()
    }

    pub fn homogeneity_violations(&self) -> Vec<Inhomogeneity> {
        let mut out = Vec::new();
        for (&(g, h), p) in &self.entries {
            let want = self.source.generator(g).gr + self.degree;
            for (pow, _) in p.terms() {
                if self.target.generator(h).gr + 8 * pow != want {
                    out.push(Inhomogeneity { from: g, to: h, pow });
                }
            }
        }
        out
    }

    /// Terms `c·x^p` from `g` to `h` with `iota(h) + p >= iota(g)`.
    pub fn level_violations(&self) -> Vec<LevelIncrease> {
        let mut out = Vec::new();
        for (&(g, h), p) in &self.entries {
            let source_level = self.source.generator(g).iota.clone();
            for (pow, _) in p.terms() {
                let target_level = self.target.level(h, pow);
                if target_level >= source_level {
                    out.push(LevelIncrease {
                        from: g,
                        to: h,
                        pow,
                        source_level: source_level.clone(),
                        target_level,
                    });
                }
            }
        }
        out
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &LambdaMap) -> Result<LambdaMap, GrModError> {
        compose(next, self)
    }

    fn check_same_shape(&self, other: &LambdaMap, what: &'static str) -> Result<(), GrModError> {
        if !same_module(&self.source, &other.source)
            || !same_module(&self.target, &other.target)
            || self.degree != other.degree
        {
            return Err(GrModError::ModuleMismatch(what));
        }
        Ok(())
    }

    pub fn add(&self, other: &LambdaMap) -> Result<LambdaMap, GrModError> {
        self.check_same_shape(other, "sum of maps with different shapes")?;
        let mut entries = self.entries.clone();
        for (k, p) in &other.entries {
            entries.entry(*k).or_default().add_assign_ref(p);
        }
        Ok(Self::new_unchecked(self.source.clone(), self.target.clone(), self.degree, entries))
    }

    pub fn sub(&self, other: &LambdaMap) -> Result<LambdaMap, GrModError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> LambdaMap {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, c: &Rational) -> LambdaMap {
        let entries = self.entries.iter().map(|(k, p)| (*k, p.scale(c))).collect();
        Self::new_unchecked(self.source.clone(), self.target.clone(), self.degree, entries)
    }

    /// Replaces source and target by equal modules held elsewhere.
    pub(crate) fn rebind(&self, source: Arc<BigradedModule>, target: Arc<BigradedModule>) -> LambdaMap {
        debug_assert!(*source == *self.source && *target == *self.target);
        Self { source, target, degree: self.degree, entries: self.entries.clone() }
    }
}

/// `g ∘ f`; declared degrees add.
pub fn compose(g: &LambdaMap, f: &LambdaMap) -> Result<LambdaMap, GrModError> {
    if !same_module(&f.target, &g.source) {
        return Err(GrModError::ModuleMismatch("composition with mismatched middle module"));
    }
    let g_cols = g.columns();
    let mut entries: BTreeMap<(usize, usize), LaurentPoly> = BTreeMap::new();
    for (&(a, b), p) in &f.entries {
        for &(c, q) in &g_cols[b] {
            entries.entry((a, c)).or_default().add_assign_ref(&(q * p));
        }
    }
    Ok(LambdaMap::new_unchecked(f.source.clone(), g.target.clone(), f.degree + g.degree, entries))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grmod::Generator;

    fn two_gens() -> Arc<BigradedModule> {
        Arc::new(
            BigradedModule::new(vec![
                Generator::new("a", 1, "1/120".parse().unwrap()),
                Generator::new("b", 5, "49/120".parse().unwrap()),
            ])
            .unwrap(),
        )
    }

    fn poly(c: i64, p: i64) -> LaurentPoly {
        LaurentPoly::monomial(Rational::from(c), p)
    }

    #[test]
    fn homogeneity_checked_on_construction() {
        let m = two_gens();
        let ok = BTreeMap::from([((1, 0), poly(4, 0)), ((0, 1), poly(6, -1))]);
        assert!(LambdaMap::new(m.clone(), m.clone(), -4, ok).is_ok());
        let bad = BTreeMap::from([((1, 0), poly(4, 1))]);
        let err = LambdaMap::new(m.clone(), m, -4, bad).unwrap_err();
        assert_eq!(err, GrModError::Inhomogeneous { from: "b".into(), to: "a".into(), pow: 1 });
    }

    #[test]
    fn composition_adds_degrees() {
        let m = two_gens();
        let u = LambdaMap::new(
            m.clone(),
            m.clone(),
            -4,
            BTreeMap::from([((1, 0), poly(4, 0)), ((0, 1), poly(6, -1))]),
        )
        .unwrap();
        let uu = compose(&u, &u).unwrap();
        assert_eq!(uu.degree(), -8);
        assert_eq!(uu.entry(1, 1), poly(24, -1));
        assert_eq!(uu.entry(0, 0), poly(24, -1));
        assert!(uu.homogeneity_violations().is_empty());
    }

    #[test]
    fn level_violations_detected() {
        let m = two_gens();
        // a -> x·b lands at level 169/120 > 1/120.
        let f = LambdaMap::new_unchecked(m.clone(), m, 12, BTreeMap::from([((0, 1), poly(1, 1))]));
        assert_eq!(f.level_violations().len(), 1);
    }
}
