use std::collections::HashMap;

use crate::exactalg::Rational;

use super::GrModError;

/// A free generator of `Λ_{(gr, iota)}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub id: String,
    pub gr: i64,
    pub iota: Rational,
}

impl Generator {
    pub fn new(id: impl Into<String>, gr: i64, iota: Rational) -> Self {
        Self { id: id.into(), gr, iota }
    }
}

/// A finitely generated free bigraded module over `Λ = Q[x^±1]`, where `x`
/// has bidegree `(8, 1)`.
#[derive(Clone, Debug)]
pub struct BigradedModule {
    gens: Vec<Generator>,
    index: HashMap<String, usize>,
    duplicates: Vec<String>,
}

impl PartialEq for BigradedModule {
    fn eq(&self, other: &Self) -> bool {
        self.gens == other.gens
    }
}

impl Eq for BigradedModule {}

impl BigradedModule {
    pub fn new(gens: Vec<Generator>) -> Result<Self, GrModError> {
        let m = Self::new_unchecked(gens);
        match m.duplicates.first() {
            Some(id) => Err(GrModError::DuplicateId(id.clone())),
            None => Ok(m),
        }
    }

    /// Accepts repeated ids; lookups resolve to the first occurrence and the
    /// repeats are reported by [`BigradedModule::duplicate_ids`].
    pub fn new_unchecked(gens: Vec<Generator>) -> Self {
        let mut index = HashMap::with_capacity(gens.len());
        let mut duplicates = Vec::new();
        for (i, g) in gens.iter().enumerate() {
            if index.contains_key(&g.id) {
                duplicates.push(g.id.clone());
            } else {
                index.insert(g.id.clone(), i);
            }
        }
        Self { gens, index, duplicates }
    }

    /// The rank-one module `Λ_{(0,0)}` with generator `"1"`.
    pub fn line() -> Self {
        Self::new_unchecked(vec![Generator::new("1", 0, Rational::zero())])
    }

    pub fn rank(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn generator(&self, idx: usize) -> &Generator {
        &self.gens[idx]
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub fn duplicate_ids(&self) -> &[String] {
        &self.duplicates
    }

    /// I-level of the monomial `x^m·g`.
    pub fn level(&self, idx: usize, m: i64) -> Rational {
        &self.gens[idx].iota + Rational::from(m)
    }

    /// Homological grading of `x^m·g`.
    pub fn grading(&self, idx: usize, m: i64) -> i64 {
        self.gens[idx].gr + 8 * m
    }
}
